//! Root data for the supported simple types.
//!
//! Weights are always stored in fundamental-weight coordinates
//! `λ_i = ⟨λ, α_i^∨⟩`. The Cartan matrix uses `a_ij = ⟨α_j, α_i^∨⟩`, so the
//! simple root `α_j` is column `j` of the matrix.
//!
//! Numbering of simple roots:
//!
//! | type | convention                                                   |
//! |------|--------------------------------------------------------------|
//! | A_n  | Bourbaki                                                     |
//! | B_n  | Bourbaki, `α_n` short (B₂: `α₁` long, `α₂` short)            |
//! | C_n  | Bourbaki, `α_n` long (C₂: `α₁` short, `α₂` long)             |
//! | G₂   | `α₁` long, `α₂` short; `ω₁` is the 14-dim adjoint highest weight, `ω₂` the 7-dim one |

mod orbits;
mod weight;

pub use orbits::{
    dual_partition, partition_to_weighted_dynkin, partitions_of, OrbitDatum, Partition,
};
pub use weight::Weight;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::memo::Memo;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("unsupported root system {0}")]
    UnsupportedType(String),
    #[error("weight {0} is not dominant")]
    DominanceViolation(Weight),
    #[error("weight {weight} has {got} coordinates, expected {expected}")]
    RankMismatch {
        weight: Weight,
        got: usize,
        expected: usize,
    },
    #[error("{0:?} is not a partition of {1}")]
    NotAPartitionOfN(Vec<i64>, i64),
    #[error("bundled orbit {name} failed validation: {detail}")]
    BadOrbitData { name: String, detail: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::G => "G",
        };
        f.write_str(s)
    }
}

/// A "<letter><rank>" selector such as `G2`, parsed case-insensitively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemLabel {
    pub cartan_type: CartanType,
    pub rank: usize,
}

impl fmt::Display for SystemLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.cartan_type, self.rank)
    }
}

impl FromStr for SystemLabel {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RootSystemError::UnsupportedType(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let cartan_type = match letter {
            'A' => CartanType::A,
            'B' => CartanType::B,
            'C' => CartanType::C,
            'G' => CartanType::G,
            _ => return Err(bad()),
        };
        let label = SystemLabel { cartan_type, rank };
        if !label.is_supported() {
            return Err(bad());
        }
        Ok(label)
    }
}

impl SystemLabel {
    pub fn is_supported(&self) -> bool {
        matches!(
            (self.cartan_type, self.rank),
            (CartanType::A, 1..=4) | (CartanType::B, 2..=3) | (CartanType::C, 2..=3) | (CartanType::G, 2)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    pub weight: Weight,
    /// Coordinates in the simple-root basis.
    pub root_coords: Vec<i64>,
    /// Coordinates of `α^∨` in the simple-coroot basis.
    pub coroot_coords: Vec<i64>,
    pub long: bool,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }

    /// `⟨λ, α^∨⟩`.
    pub fn pair(&self, lambda: &Weight) -> i64 {
        self.coroot_coords
            .iter()
            .zip(lambda.iter())
            .map(|(d, l)| d * l)
            .sum()
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// Reduced word; `w = s_{word[0]} s_{word[1]} ⋯`.
    pub word: Vec<usize>,
    matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        Weight::new(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(lambda.iter()).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }
}

pub struct RootSystem {
    label: SystemLabel,
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i)`, scaled so every entry of the symmetrized form is integral.
    norms: Vec<i64>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<PositiveRoot>,
    inverse_cartan: Vec<Vec<Ratio<i64>>>,
    two_rho_check: Vec<i64>,
    weyl: Vec<WeylElement>,
    w0: usize,
    pub(crate) memo: Memo,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("label", &self.label)
            .field("cartan", &self.cartan)
            .finish_non_exhaustive()
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label
    }
}

impl Eq for RootSystem {}

fn cartan_data(label: SystemLabel) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = label.rank;
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    let mut norms = vec![2i64; n];
    match label.cartan_type {
        CartanType::A => {}
        CartanType::B => {
            // α_n short: ⟨α_{n-1}, α_n^∨⟩ = -2
            a[n - 1][n - 2] = -2;
            norms = vec![4; n];
            norms[n - 1] = 2;
        }
        CartanType::C => {
            // α_n long: ⟨α_n, α_{n-1}^∨⟩ = -2
            a[n - 2][n - 1] = -2;
            norms[n - 1] = 4;
        }
        CartanType::G => {
            // α₁ long, α₂ short
            a[1][0] = -3;
            norms = vec![6, 2];
        }
    }
    (a, norms)
}

fn invert(a: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i64>>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= factor * y;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

impl RootSystem {
    pub fn build(label: SystemLabel) -> Result<Self, RootSystemError> {
        if !label.is_supported() {
            return Err(RootSystemError::UnsupportedType(label.to_string()));
        }
        let n = label.rank;
        let (cartan, norms) = cartan_data(label);
        let simple_roots: Vec<Weight> = (0..n)
            .map(|j| Weight::new((0..n).map(|i| cartan[i][j]).collect()))
            .collect();

        // closure of the simple roots under simple reflections, in root coordinates
        let to_weight = |c: &[i64]| -> Weight {
            Weight::new(
                (0..n)
                    .map(|i| (0..n).map(|j| cartan[i][j] * c[j]).sum())
                    .collect(),
            )
        };
        let mut seen: Vec<Vec<i64>> = (0..n)
            .map(|j| (0..n).map(|k| i64::from(j == k)).collect())
            .collect();
        let mut queue: VecDeque<Vec<i64>> = seen.iter().cloned().collect();
        while let Some(c) = queue.pop_front() {
            let w = to_weight(&c);
            for i in 0..n {
                let mut next = c.clone();
                next[i] -= w[i];
                if next.iter().all(|&x| x >= 0) && next.iter().any(|&x| x > 0) && !seen.contains(&next) {
                    seen.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let norm_of = |c: &[i64]| -> i64 {
            // (α, α) with (α_i, α_j) = a_ij (α_i, α_i) / 2
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += c[i] * c[j] * cartan[i][j] * norms[i];
                }
            }
            s / 2
        };
        let max_norm = seen.iter().map(|c| norm_of(c)).max().unwrap_or(2);
        let mut positive_roots: Vec<PositiveRoot> = seen
            .into_iter()
            .map(|c| {
                let len = norm_of(&c);
                let coroot_coords = (0..n)
                    .map(|j| {
                        let num = c[j] * norms[j];
                        assert_eq!(num % len, 0, "non-integral coroot");
                        num / len
                    })
                    .collect();
                PositiveRoot {
                    weight: to_weight(&c),
                    root_coords: c,
                    coroot_coords,
                    long: len == max_norm,
                }
            })
            .collect();
        positive_roots.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.root_coords.cmp(&a.root_coords))
        });

        let mut two_rho_check = vec![0i64; n];
        for r in &positive_roots {
            for (t, d) in two_rho_check.iter_mut().zip(&r.coroot_coords) {
                *t += d;
            }
        }

        let inverse_cartan = invert(&cartan);
        let weyl = enumerate_weyl(&cartan);
        let w0 = weyl
            .iter()
            .enumerate()
            .max_by_key(|(_, w)| w.length())
            .map(|(i, _)| i)
            .unwrap_or(0);

        let rs = RootSystem {
            label,
            cartan,
            norms,
            simple_roots,
            positive_roots,
            inverse_cartan,
            two_rho_check,
            weyl,
            w0,
            memo: Memo::default(),
        };
        rs.validate();
        Ok(rs)
    }

    /// Parses a selector like `"g2"` and builds the system.
    pub fn from_label(s: &str) -> Result<Self, RootSystemError> {
        Self::build(s.parse()?)
    }

    fn validate(&self) {
        assert_eq!(self.positive_roots.len(), self.weyl[self.w0].length());
        assert_eq!(self.weyl.len(), classical_weyl_order(self.label));
        // ρ is the all-ones vector, so ⟨ρ, α_i^∨⟩ = 1 holds by construction;
        // check instead that every simple reflection moves ρ by exactly α_i.
        for i in 0..self.rank() {
            assert_eq!(&self.rho() - &self.reflect(i, &self.rho()), self.simple_roots[i]);
        }
        for r in &self.positive_roots {
            assert_eq!(
                self.root_lattice_coords(&r.weight).as_deref(),
                Some(r.root_coords.as_slice())
            );
        }
    }

    pub fn label(&self) -> SystemLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn is_long_simple(&self, i: usize) -> bool {
        self.norms[i] == *self.norms.iter().max().unwrap()
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    /// Number of positive roots, `ν = l(w₀)`.
    pub fn nu(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank()])
    }

    pub fn weyl_group(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn w0(&self) -> &WeylElement {
        &self.weyl[self.w0]
    }

    pub fn w0_word(&self) -> &[usize] {
        &self.weyl[self.w0].word
    }

    pub fn inverse_cartan(&self) -> &[Vec<Ratio<i64>>] {
        &self.inverse_cartan
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.rank())
    }

    pub fn check_rank(&self, lambda: &Weight) -> Result<(), RootSystemError> {
        if lambda.len() != self.rank() {
            return Err(RootSystemError::RankMismatch {
                weight: lambda.clone(),
                got: lambda.len(),
                expected: self.rank(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, lambda: &Weight) -> Result<(), RootSystemError> {
        self.check_rank(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(RootSystemError::DominanceViolation(lambda.clone()));
        }
        Ok(())
    }

    /// `s_i λ = λ − ⟨λ, α_i^∨⟩ α_i`.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        lambda - &self.simple_roots[i].scaled(lambda[i])
    }

    /// `w₀ λ`, applying the reduced word right to left.
    pub fn w0_action(&self, lambda: &Weight) -> Weight {
        self.w0_word()
            .iter()
            .rev()
            .fold(lambda.clone(), |acc, &i| self.reflect(i, &acc))
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.iter().all(|&x| x >= 0)
    }

    /// Simple-root coordinates of `λ` (exact, possibly fractional).
    pub fn root_coords(&self, lambda: &Weight) -> Vec<Ratio<i64>> {
        self.inverse_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .zip(lambda.iter())
                    .map(|(a, &l)| a * Ratio::from_integer(l))
                    .fold(Ratio::zero(), |s, x| s + x)
            })
            .collect()
    }

    /// Simple-root coordinates when `λ` lies in the root lattice.
    pub fn root_lattice_coords(&self, lambda: &Weight) -> Option<Vec<i64>> {
        self.root_coords(lambda)
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn from_root_coords(&self, c: &[i64]) -> Weight {
        self.simple_roots
            .iter()
            .zip(c)
            .fold(self.zero_weight(), |acc, (a, &k)| &acc + &a.scaled(k))
    }

    /// `μ ≤ λ` in dominance order.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.root_lattice_coords(&(lambda - mu))
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// Same coset of the root lattice.
    pub fn same_coset(&self, a: &Weight, b: &Weight) -> bool {
        self.root_lattice_coords(&(a - b)).is_some()
    }

    /// `⟨λ, 2ρ^∨⟩`.
    pub fn height(&self, lambda: &Weight) -> i64 {
        self.two_rho_check
            .iter()
            .zip(lambda.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Sort key of the fixed linear extension of dominance order:
    /// `⟨·, 2ρ^∨⟩` first, then coordinates lexicographically.
    pub fn order_key(&self, lambda: &Weight) -> (i64, Weight) {
        (self.height(lambda), lambda.clone())
    }

    pub fn sort_linear(&self, weights: &mut [Weight]) {
        weights.sort_by_cached_key(|w| self.order_key(w));
    }

    /// Dominant representative of the Weyl orbit of `λ`.
    pub fn dominant_conjugate(&self, lambda: &Weight) -> Weight {
        let mut cur = lambda.clone();
        while let Some(i) = cur.iter().position(|&x| x < 0) {
            cur = self.reflect(i, &cur);
        }
        cur
    }

    /// All dominant `μ ≤ λ`, in the fixed linear extension (so `λ` comes last).
    pub fn dominant_weights_below(&self, lambda: &Weight) -> Result<Vec<Weight>, RootSystemError> {
        self.check_dominant(lambda)?;
        let bounds: Vec<i64> = self
            .root_coords(lambda)
            .into_iter()
            .map(|c| c.floor().to_integer())
            .collect();
        let n = self.rank();
        let mut out = Vec::new();
        let mut k = vec![0i64; n];
        loop {
            let mu = lambda - &self.from_root_coords(&k);
            if self.is_dominant(&mu) {
                out.push(mu);
            }
            // odometer over the box 0..=bounds
            let mut pos = 0;
            loop {
                if pos == n {
                    self.sort_linear(&mut out);
                    return Ok(out);
                }
                if k[pos] < bounds[pos] {
                    k[pos] += 1;
                    break;
                }
                k[pos] = 0;
                pos += 1;
            }
        }
    }

    /// All dominant weights with `⟨λ, 2ρ^∨⟩ ≤ bound`, in the fixed linear extension.
    pub fn dominant_weights_up_to(&self, bound: i64) -> Vec<Weight> {
        fn rec(weights: &[i64], i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if i == weights.len() {
                out.push(Weight::new(cur.clone()));
                return;
            }
            let mut x = 0;
            while x * weights[i] <= left {
                cur.push(x);
                rec(weights, i + 1, left - x * weights[i], cur, out);
                cur.pop();
                x += 1;
            }
        }
        let mut out = Vec::new();
        if bound >= 0 {
            rec(&self.two_rho_check, 0, bound, &mut Vec::new(), &mut out);
        }
        self.sort_linear(&mut out);
        out
    }

    /// `ν_λ`: number of positive roots orthogonal to the dominant weight `λ`.
    pub fn nu_lambda(&self, lambda: &Weight) -> Result<usize, RootSystemError> {
        self.check_dominant(lambda)?;
        Ok(self
            .positive_roots
            .iter()
            .filter(|r| r.pair(lambda) == 0)
            .count())
    }

    /// The dominance-minimal dominant weight of each coset of the root lattice:
    /// zero and the minuscule weights, ordered as `0, ω_i` by index.
    pub fn minimal_weights(&self) -> Vec<Weight> {
        let n = self.rank();
        let mut out = vec![self.zero_weight()];
        for i in 0..n {
            let w = Weight::fundamental(n, i);
            if self.positive_roots.iter().all(|r| r.pair(&w) <= 1) {
                out.push(w);
            }
        }
        out
    }

    /// Index of the root-lattice coset, as the fractional parts of the root coordinates.
    pub fn coset_key(&self, lambda: &Weight) -> Vec<Ratio<i64>> {
        self.root_coords(lambda).into_iter().map(|c| c.fract()).collect()
    }

    /// The short dominant root (the highest root when simply laced).
    pub fn short_dominant_root(&self) -> Weight {
        let short = self.positive_roots.iter().filter(|r| !r.long);
        let candidates: Vec<_> = if self.is_simply_laced() {
            self.positive_roots.iter().collect()
        } else {
            short.collect()
        };
        candidates
            .into_iter()
            .max_by_key(|r| r.height())
            .expect("nonempty")
            .weight
            .clone()
    }

    /// The highest root.
    pub fn long_dominant_root(&self) -> Weight {
        self.positive_roots
            .iter()
            .max_by_key(|r| r.height())
            .expect("nonempty")
            .weight
            .clone()
    }

    /// Index of a short simple root (any simple root when simply laced).
    pub fn short_simple_index(&self) -> usize {
        let min = *self.norms.iter().min().unwrap();
        self.norms.iter().position(|&x| x == min).unwrap()
    }

    pub fn long_simple_index(&self) -> usize {
        let max = *self.norms.iter().max().unwrap();
        self.norms.iter().position(|&x| x == max).unwrap()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.norms.iter().all(|&x| x == self.norms[0])
    }

    /// `𝔓_q(β)` with `q = v²`: sum of `q^{Σ k_α}` over all ways of writing
    /// `β = Σ k_α α` with `k_α ≥ 0` over the positive roots.
    pub fn q_partition(&self, beta: &Weight) -> LaurentPoly {
        match self.root_lattice_coords(beta) {
            Some(c) if c.iter().all(|&x| x >= 0) => self.q_partition_root_coords(&c),
            _ => LaurentPoly::zero(),
        }
    }

    pub(crate) fn q_partition_root_coords(&self, c: &[i64]) -> LaurentPoly {
        partition_rec(&self.positive_roots, &self.memo.partition, c, 0)
    }

    /// Orbit data for the nilpotent orbits of this type, validated against the
    /// two formulas for `a(O)`.
    pub fn orbit_table(&self) -> Result<Vec<OrbitDatum>, RootSystemError> {
        orbits::orbit_table(self)
    }
}

fn partition_rec(
    roots: &[PositiveRoot],
    memo: &Mutex<HashMap<(Vec<i64>, usize), LaurentPoly>>,
    c: &[i64],
    idx: usize,
) -> LaurentPoly {
    if c.iter().all(|&x| x == 0) {
        return LaurentPoly::one();
    }
    if idx == roots.len() {
        return LaurentPoly::zero();
    }
    let key = (c.to_vec(), idx);
    if let Some(p) = memo.lock().unwrap().get(&key) {
        return p.clone();
    }
    let alpha = &roots[idx].root_coords;
    let mut total = LaurentPoly::zero();
    let mut rest = c.to_vec();
    let mut j = 0;
    while rest.iter().all(|&x| x >= 0) {
        let sub = partition_rec(roots, memo, &rest, idx + 1);
        if !sub.is_zero() {
            total += &sub.shift(2 * j);
        }
        for (r, a) in rest.iter_mut().zip(alpha) {
            *r -= a;
        }
        j += 1;
    }
    memo.lock().unwrap().insert(key, total.clone());
    total
}

fn classical_weyl_order(label: SystemLabel) -> usize {
    let n = label.rank;
    let fact = |k: usize| (1..=k).product::<usize>();
    match label.cartan_type {
        CartanType::A => fact(n + 1),
        CartanType::B | CartanType::C => (1 << n) * fact(n),
        CartanType::G => 12,
    }
}

/// Breadth-first enumeration from the identity; each element is keyed by its
/// image of `ρ`, which has trivial stabilizer.
fn enumerate_weyl(cartan: &[Vec<i64>]) -> Vec<WeylElement> {
    let n = cartan.len();
    let reflection = |i: usize| -> Vec<Vec<i64>> {
        // s_i λ = λ − λ_i α_i, α_i = column i
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| i64::from(r == c) - if c == i { cartan[r][i] } else { 0 })
                    .collect()
            })
            .collect()
    };
    let reflections: Vec<_> = (0..n).map(reflection).collect();
    let matmul = |a: &[Vec<i64>], b: &[Vec<i64>]| -> Vec<Vec<i64>> {
        (0..n)
            .map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect())
            .collect()
    };
    let identity: Vec<Vec<i64>> = (0..n)
        .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
        .collect();
    let rho_image = |m: &[Vec<i64>]| -> Vec<i64> { m.iter().map(|row| row.iter().sum()).collect() };

    let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(rho_image(&identity), ());
    queue.push_back(WeylElement {
        word: vec![],
        matrix: identity,
    });
    while let Some(w) = queue.pop_front() {
        for (i, s) in reflections.iter().enumerate() {
            let m = matmul(s, &w.matrix);
            let key = rho_image(&m);
            if seen.insert(key, ()).is_none() {
                let mut word = vec![i];
                word.extend(&w.word);
                queue.push_back(WeylElement { word, matrix: m });
            }
        }
        out.push(w);
    }
    out
}
