//! The canonical basis `C(λ)`: the unique bar-invariant element of
//! `AJ(λ) + Σ_{μ<λ} v⁻¹ℤ[v⁻¹] AJ(μ)`.
//!
//! Writing `bar(AJ(ν)) = Σ_μ r_{μν} AJ(μ)` and `C(λ) = Σ_μ b_{μλ} AJ(μ)`,
//! bar-invariance is the triangular system
//!
//! ```text
//! b_{μλ} − bar(b_{μλ}) = Σ_{μ<ν≤λ} r_{μν} bar(b_{νλ})
//! ```
//!
//! solved for `μ` going down from `λ`, each step taking the strictly negative
//! part of an anti-invariant right-hand side.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::kclass::{aj_class, format_terms, Basis, KClass};
use crate::laurent::LaurentPoly;
use crate::memo::Terms;
use crate::rootsys::{RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalElement {
    pub lambda: Weight,
    /// The column `b_{·,λ}`.
    pub aj_coords: BTreeMap<Weight, LaurentPoly>,
    pub e_coords: KClass,
}

impl CanonicalElement {
    pub fn format(&self, basis: Basis) -> String {
        self.e_coords.format(basis)
    }
}

/// AJ coordinates of `bar(AJ(λ))`.
pub fn r_matrix_column(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<Arc<Terms>> {
    rs.check_dominant(lambda)?;
    if let Some(c) = rs.memo.r_columns.lock().unwrap().get(lambda) {
        return Ok(c.clone());
    }
    let col = aj_class(rs, lambda)?.bar()?.to_aj_coords();
    if !col.get(lambda).is_some_and(LaurentPoly::is_one) {
        return Err(Error::TriangularityViolation {
            column: lambda.clone(),
            detail: format!("diagonal entry {}", col.get(lambda).cloned().unwrap_or_default()),
        });
    }
    if let Some(mu) = col.keys().find(|mu| !rs.dominance_leq(mu, lambda)) {
        return Err(Error::TriangularityViolation {
            column: lambda.clone(),
            detail: format!("entry at {mu}, which is not below"),
        });
    }
    let col = Arc::new(col);
    rs.memo
        .r_columns
        .lock()
        .unwrap()
        .entry(lambda.clone())
        .or_insert_with(|| col.clone());
    Ok(col)
}

fn canonical_aj(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<Arc<Terms>> {
    if let Some(c) = rs.memo.canonical.lock().unwrap().get(lambda) {
        return Ok(c.clone());
    }
    let below = rs.dominant_weights_below(lambda)?;
    let mut b = Terms::new();
    b.insert(lambda.clone(), LaurentPoly::one());
    // columns of r for every ν with b_ν ≠ 0, filled as ν is settled
    let mut columns: Vec<(Weight, LaurentPoly, Arc<Terms>)> =
        vec![(lambda.clone(), LaurentPoly::one(), r_matrix_column(rs, lambda)?)];
    for mu in below.iter().rev().skip(1) {
        let mut rhs = LaurentPoly::zero();
        for (_, b_nu_bar, col) in &columns {
            if let Some(r) = col.get(mu) {
                rhs += &(r * b_nu_bar);
            }
        }
        let b_mu = LaurentPoly::solve_antiinvariant(&rhs)?;
        if !b_mu.is_zero() {
            columns.push((mu.clone(), b_mu.bar(), r_matrix_column(rs, mu)?));
            b.insert(mu.clone(), b_mu);
        }
    }
    let b = Arc::new(b);
    rs.memo
        .canonical
        .lock()
        .unwrap()
        .entry(lambda.clone())
        .or_insert_with(|| b.clone());
    Ok(b)
}

/// `C(λ)` for dominant `λ`, with its invariants checked.
pub fn canonical_element(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<CanonicalElement> {
    rs.check_dominant(lambda)?;
    let aj = canonical_aj(rs, lambda)?;
    let e_coords = KClass::from_aj_coords(rs, &aj)?;
    for (mu, c) in aj.iter() {
        if mu != lambda && !c.is_strictly_negative() {
            return Err(Error::TriangularityViolation {
                column: lambda.clone(),
                detail: format!("b at {mu} = {c} is not in v⁻¹ℤ[v⁻¹]"),
            });
        }
    }
    if !e_coords.is_bar_invariant()? {
        return Err(Error::TriangularityViolation {
            column: lambda.clone(),
            detail: "solution is not bar-invariant".into(),
        });
    }
    Ok(CanonicalElement {
        lambda: lambda.clone(),
        aj_coords: (*aj).clone(),
        e_coords,
    })
}

/// Unitriangular table of `b_{μλ}` over a set of dominant weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BMatrix {
    /// Row and column labels, in the fixed linear extension.
    pub weights: Vec<Weight>,
    /// Nonzero entries keyed by `(row, column)`.
    pub entries: BTreeMap<(Weight, Weight), LaurentPoly>,
}

impl BMatrix {
    pub fn get(&self, row: &Weight, col: &Weight) -> LaurentPoly {
        self.entries
            .get(&(row.clone(), col.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("b");
        for w in &self.weights {
            out.push_str(&format!("\t({w})"));
        }
        out.push('\n');
        for r in &self.weights {
            out.push_str(&format!("({r})"));
            for c in &self.weights {
                out.push_str(&format!("\t{}", self.get(r, c)));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, system: &str) -> Value {
        let entries: Vec<Value> = self
            .weights
            .iter()
            .flat_map(|c| self.weights.iter().map(move |r| (r, c)))
            .filter_map(|(r, c)| {
                self.entries.get(&(r.clone(), c.clone())).map(|x| {
                    json!({"row": r.coords(), "col": c.coords(), "coeff": x.to_json()})
                })
            })
            .collect();
        json!({
            "system": system,
            "weights": self.weights.iter().map(|w| w.coords().to_vec()).collect::<Vec<_>>(),
            "entries": entries,
        })
    }
}

/// Assembles `b_{μλ}` for `μ, λ` in `weights`. Columns are computed in
/// parallel on the current rayon pool; the result does not depend on the
/// number of threads.
pub fn b_matrix(rs: &Arc<RootSystem>, weights: &[Weight]) -> Result<BMatrix> {
    for w in weights {
        rs.check_dominant(w)?;
    }
    let mut weights = weights.to_vec();
    rs.sort_linear(&mut weights);
    weights.dedup();
    let columns: Vec<Result<(Weight, Arc<Terms>)>> = weights
        .par_iter()
        .map(|lam| canonical_aj(rs, lam).map(|c| (lam.clone(), c)))
        .collect();
    let mut entries = BTreeMap::new();
    for col in columns {
        let (lam, c) = col?;
        for (mu, x) in c.iter() {
            if weights.binary_search_by_key(&rs.order_key(mu), |w| rs.order_key(w)).is_ok() {
                entries.insert((mu.clone(), lam.clone()), x.clone());
            }
        }
    }
    Ok(BMatrix { weights, entries })
}

/// If `±x` is a canonical basis element, returns the sign and its weight.
pub fn is_canonical(x: &KClass) -> Result<Option<(i8, Weight)>> {
    let rs = x.root_system();
    for sign in [1i8, -1] {
        let y = if sign == 1 { x.clone() } else { -x };
        let aj = y.to_aj_coords();
        let ones: Vec<&Weight> = aj.iter().filter(|(_, c)| c.is_one()).map(|(w, _)| w).collect();
        if ones.len() != 1 {
            continue;
        }
        let lambda = ones[0];
        if aj.iter().any(|(w, c)| w != lambda && !c.is_strictly_negative()) {
            continue;
        }
        if *canonical_aj(rs, lambda)? == aj {
            return Ok(Some((sign, lambda.clone())));
        }
    }
    Ok(None)
}

/// Formats a column of `b` as `"AJ[λ]=1, AJ[μ]=…"`, highest first.
pub fn format_aj(rs: &RootSystem, coords: &BTreeMap<Weight, LaurentPoly>) -> String {
    format_terms(rs, "AJ", coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> Arc<RootSystem> {
        Arc::new(RootSystem::from_label(s).unwrap())
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn coords(entries: &[(&[i64], LaurentPoly)]) -> BTreeMap<Weight, LaurentPoly> {
        entries.iter().map(|(c, x)| (w(c), x.clone())).collect()
    }

    #[test]
    fn r_columns() {
        let a1 = rs("A1");
        assert_eq!(*r_matrix_column(&a1, &w(&[1])).unwrap(), coords(&[(&[1], LaurentPoly::one())]));
        assert_eq!(
            *r_matrix_column(&a1, &w(&[2])).unwrap(),
            coords(&[(&[2], LaurentPoly::one()), (&[0], p(&[(-1, 1), (1, -1)]))])
        );
        assert_eq!(*r_matrix_column(&a1, &w(&[0])).unwrap(), coords(&[(&[0], LaurentPoly::one())]));
    }

    #[test]
    fn sl2_examples() {
        let a1 = rs("A1");
        assert_eq!(
            canonical_element(&a1, &w(&[2])).unwrap().aj_coords,
            coords(&[(&[2], LaurentPoly::one()), (&[0], p(&[(-1, 1)]))])
        );
        for n in 3..8 {
            assert_eq!(
                canonical_element(&a1, &w(&[n])).unwrap().aj_coords,
                coords(&[(&[n], LaurentPoly::one()), (&[n - 2], p(&[(-2, -1)]))])
            );
        }
    }

    #[test]
    fn sl3_example() {
        let a2 = rs("A2");
        assert_eq!(
            canonical_element(&a2, &w(&[3, 0])).unwrap().aj_coords,
            coords(&[
                (&[3, 0], LaurentPoly::one()),
                (&[1, 1], p(&[(-1, 1), (-3, 1)])),
                (&[0, 0], p(&[(-2, 1)])),
            ])
        );
    }

    #[test]
    fn b_matrix_examples() {
        let a1 = rs("A1");
        let m = b_matrix(&a1, &[w(&[2]), w(&[0]), w(&[1])]).unwrap();
        assert_eq!(m.weights, vec![w(&[0]), w(&[1]), w(&[2])]);
        for r in &m.weights {
            for c in &m.weights {
                let expected = if r == c {
                    LaurentPoly::one()
                } else if r == &w(&[0]) && c == &w(&[2]) {
                    p(&[(-1, 1)])
                } else {
                    LaurentPoly::zero()
                };
                assert_eq!(m.get(r, c), expected, "({r}),({c})");
            }
        }
        let g2 = rs("G2");
        let m = b_matrix(&g2, &[w(&[0, 0]), w(&[0, 1])]).unwrap();
        assert_eq!(m.get(&w(&[0, 0]), &w(&[0, 1])), p(&[(-1, 1)]));
        let single = b_matrix(&g2, &[w(&[1, 1])]).unwrap();
        assert_eq!(single.entries.len(), 1);
        assert!(single.get(&w(&[1, 1]), &w(&[1, 1])).is_one());
    }

    #[test]
    fn is_canonical_examples() {
        let a1 = rs("A1");
        let x = KClass::from_e_coords(&a1, [(w(&[0]), p(&[(-1, 1)])), (w(&[2]), p(&[(1, -1)]))]).unwrap();
        assert_eq!(is_canonical(&x).unwrap(), Some((1, w(&[2]))));
        let y = KClass::from_e_coords(&a1, [(w(&[0]), LaurentPoly::one()), (w(&[2]), LaurentPoly::one())]).unwrap();
        assert_eq!(is_canonical(&y).unwrap(), None);
        let b2 = rs("B2");
        let c = canonical_element(&b2, &w(&[2, 1])).unwrap();
        assert_eq!(is_canonical(&-&c.e_coords).unwrap(), Some((-1, w(&[2, 1]))));
    }

    #[test]
    fn minimal_weights_are_aj() {
        for s in ["A1", "A2", "A3", "B2", "C2", "G2", "B3"] {
            let r = rs(s);
            for m in r.minimal_weights() {
                let c = canonical_element(&r, &m).unwrap();
                assert_eq!(c.e_coords, aj_class(&r, &m).unwrap(), "{s} {m}");
            }
        }
    }

    #[test]
    fn uniqueness_probe() {
        let b2 = rs("B2");
        let lam = w(&[2, 2]);
        let c = canonical_element(&b2, &lam).unwrap();
        let shift = p(&[(-1, 1)]);
        for mu in b2.dominant_weights_below(&lam).unwrap() {
            if mu == lam {
                continue;
            }
            // still of the required triangular shape, but no longer bar-invariant
            let perturbed = &c.e_coords + &aj_class(&b2, &mu).unwrap().scale(&shift);
            assert!(!perturbed.is_bar_invariant().unwrap(), "{mu}");
        }
    }

    #[test]
    fn tsv_layout() {
        let a1 = rs("A1");
        let m = b_matrix(&a1, &a1.dominant_weights_up_to(2)).unwrap();
        assert_eq!(m.to_tsv(), "b\t(0)\t(1)\t(2)\n(0)\t1\t0\tv^-1\n(1)\t0\t1\t0\n(2)\t0\t0\t1\n");
    }
}
