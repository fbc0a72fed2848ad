//! Nilpotent orbit data: partitions and weighted Dynkin diagrams for `sl_n`,
//! and bundled tables for the rank-two non-simply-laced types.

use std::fmt;

use super::{CartanType, RootSystem, RootSystemError};

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self, RootSystemError> {
        let n: i64 = parts.iter().sum();
        if parts.iter().any(|&p| p < 1) {
            return Err(RootSystemError::NotAPartitionOfN(parts, n));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: i64) -> Vec<Partition> {
    fn rec(left: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Transpose of the Young diagram.
pub fn dual_partition(p: &Partition) -> Partition {
    let largest = p.0.first().copied().unwrap_or(0);
    Partition(
        (1..=largest)
            .map(|k| p.0.iter().filter(|&&x| x >= k).count() as i64)
            .collect(),
    )
}

/// Weighted Dynkin labels of the `sl_n` orbit with Jordan type `p`.
pub fn partition_to_weighted_dynkin(p: &Partition, n: i64) -> Result<Vec<i64>, RootSystemError> {
    if p.size() != n {
        return Err(RootSystemError::NotAPartitionOfN(p.0.clone(), n));
    }
    let mut h: Vec<i64> = p
        .0
        .iter()
        .flat_map(|&pj| (0..pj).map(move |k| pj - 1 - 2 * k))
        .collect();
    h.sort_unstable_by(|a, b| b.cmp(a));
    Ok(h.windows(2).map(|w| w[0] - w[1]).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDatum {
    pub name: String,
    pub dynkin_labels: Vec<i64>,
    /// `2·a(O)`; `a(O)` may be a half-integer.
    pub a_doubled: i64,
    pub codim: i64,
    /// Jordan type, for `sl_n` orbits.
    pub partition: Option<Partition>,
}

impl OrbitDatum {
    pub fn a_value(&self) -> f64 {
        self.a_doubled as f64 / 2.0
    }

    pub fn a_integral(&self) -> Option<i64> {
        (self.a_doubled % 2 == 0).then_some(self.a_doubled / 2)
    }

    /// Grade of every positive root (in the root system's order).
    pub fn grading(&self, rs: &RootSystem) -> Vec<i64> {
        rs.positive_roots()
            .iter()
            .map(|r| {
                r.root_coords
                    .iter()
                    .zip(&self.dynkin_labels)
                    .map(|(c, l)| c * l)
                    .sum()
            })
            .collect()
    }

    /// Indices of positive roots of grade 0 and 1.
    pub fn low_grade_roots(&self, rs: &RootSystem) -> (Vec<usize>, Vec<usize>) {
        let g = self.grading(rs);
        let r0 = (0..g.len()).filter(|&i| g[i] == 0).collect();
        let r1 = (0..g.len()).filter(|&i| g[i] == 1).collect();
        (r0, r1)
    }

    /// `2(|R₊₀| + ½|R₊₁|)` recomputed from the labels.
    pub fn a_doubled_from_grading(&self, rs: &RootSystem) -> i64 {
        let (r0, r1) = self.low_grade_roots(rs);
        2 * r0.len() as i64 + r1.len() as i64
    }

    fn validate(&self, rs: &RootSystem) -> Result<(), RootSystemError> {
        let bad = |detail: String| RootSystemError::BadOrbitData {
            name: self.name.clone(),
            detail,
        };
        if self.dynkin_labels.len() != rs.rank() || self.dynkin_labels.iter().any(|l| !(0..=2).contains(l)) {
            return Err(bad(format!("labels {:?}", self.dynkin_labels)));
        }
        let from_grading = self.a_doubled_from_grading(rs);
        if from_grading != self.a_doubled {
            return Err(bad(format!(
                "2a(O) = {} but grading gives {from_grading}",
                self.a_doubled
            )));
        }
        if self.codim != self.a_doubled {
            return Err(bad(format!("codim {} ≠ 2a(O) = {}", self.codim, self.a_doubled)));
        }
        Ok(())
    }
}

fn type_a_name(p: &Partition, n: i64) -> String {
    let parts = p.parts();
    if parts.len() as i64 == n {
        "zero".into()
    } else if parts == [n] {
        "regular".into()
    } else if parts == [n - 1, 1] {
        "subregular".into()
    } else if parts[0] == 2 && parts[1..].iter().all(|&x| x == 1) {
        "minimal".into()
    } else {
        p.to_string()
    }
}

fn type_a_table(rank: usize) -> Result<Vec<OrbitDatum>, RootSystemError> {
    let n = rank as i64 + 1;
    partitions_of(n)
        .into_iter()
        .map(|p| {
            let labels = partition_to_weighted_dynkin(&p, n)?;
            // codim of O_p in N: Σ (p'_i)² − n
            let codim = dual_partition(&p).parts().iter().map(|x| x * x).sum::<i64>() - n;
            Ok(OrbitDatum {
                name: type_a_name(&p, n),
                dynkin_labels: labels,
                a_doubled: codim,
                codim,
                partition: Some(p),
            })
        })
        .collect()
}

fn bundled(name: &str, labels: [i64; 2], a_doubled: i64, codim: i64) -> OrbitDatum {
    OrbitDatum {
        name: name.into(),
        dynkin_labels: labels.to_vec(),
        a_doubled,
        codim,
        partition: None,
    }
}

pub(super) fn orbit_table(rs: &RootSystem) -> Result<Vec<OrbitDatum>, RootSystemError> {
    let label = rs.label();
    let table = match (label.cartan_type, label.rank) {
        (CartanType::A, r) => type_a_table(r)?,
        // so(5): Jordan types (5), (3,1,1), (2,2,1), (1^5); α₁ long
        (CartanType::B, 2) => vec![
            bundled("regular", [2, 2], 0, 0),
            bundled("subregular", [2, 0], 2, 2),
            bundled("minimal", [0, 1], 4, 4),
            bundled("zero", [0, 0], 8, 8),
        ],
        // sp(4): Jordan types (4), (2,2), (2,1,1), (1^4); α₁ short
        (CartanType::C, 2) => vec![
            bundled("regular", [2, 2], 0, 0),
            bundled("subregular", [0, 2], 2, 2),
            bundled("minimal", [1, 0], 4, 4),
            bundled("zero", [0, 0], 8, 8),
        ],
        // G₂, G₂(a₁), Ã₁ (short root), A₁ (long root), 0; α₁ long
        (CartanType::G, 2) => vec![
            bundled("regular", [2, 2], 0, 0),
            bundled("subregular", [2, 0], 2, 2),
            bundled("short-root", [0, 1], 4, 4),
            bundled("minimal", [1, 0], 6, 6),
            bundled("zero", [0, 0], 12, 12),
        ],
        _ => return Err(RootSystemError::UnsupportedType(format!("{label} (no orbit table)"))),
    };
    for o in &table {
        o.validate(rs)?;
    }
    Ok(table)
}
