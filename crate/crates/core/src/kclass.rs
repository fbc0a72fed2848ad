//! Classes in the equivariant K-group of the nilpotent cone, written in the
//! basis `e^λ` of dominant weights.
//!
//! `e^λ` for an arbitrary weight is reduced to dominant weights by the rank-one
//! straightening relations: when `⟨λ, α_i^∨⟩ = −1`,
//!
//! ```text
//! e^λ = v² e^{s_i λ}
//! ```
//!
//! and when `⟨λ, α_i^∨⟩ ≤ −2`,
//!
//! ```text
//! e^λ = −e^{s_i λ − α_i} + v² e^{s_i λ} + v² e^{λ + α_i}.
//! ```
//!
//! Every generated weight is higher than `λ` in `⟨·, 2ρ^∨⟩`, which bounds the
//! recursion.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::memo::Terms;
use crate::rootsys::{RootSystem, Weight};

/// Coordinate basis used for display and serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    E,
    AJ,
}

impl Basis {
    pub fn label(self) -> &'static str {
        match self {
            Basis::E => "e",
            Basis::AJ => "AJ",
        }
    }
}

fn add_into(terms: &mut Terms, w: Weight, c: &LaurentPoly) {
    if c.is_zero() {
        return;
    }
    let slot = terms.entry(w.clone()).or_default();
    *slot += c;
    if slot.is_zero() {
        terms.remove(&w);
    }
}

fn check_same(a: &RootSystem, b: &RootSystem) -> Result<()> {
    if a != b {
        return Err(Error::MixedRootSystems(a.label().to_string(), b.label().to_string()));
    }
    Ok(())
}

/// An element of `K(N)`: a finite combination of `e^μ` over dominant `μ`.
#[derive(Clone)]
pub struct KClass {
    rs: Arc<RootSystem>,
    terms: Terms,
}

impl PartialEq for KClass {
    fn eq(&self, other: &Self) -> bool {
        self.rs == other.rs && self.terms == other.terms
    }
}

impl Eq for KClass {}

impl fmt::Debug for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KClass[{}]({})", self.rs.label(), self.format(Basis::E))
    }
}

impl KClass {
    pub fn zero(rs: &Arc<RootSystem>) -> Self {
        KClass {
            rs: rs.clone(),
            terms: Terms::new(),
        }
    }

    /// `c · e^λ` for dominant `λ`.
    pub fn basis(rs: &Arc<RootSystem>, lambda: &Weight, c: LaurentPoly) -> Result<Self> {
        rs.check_dominant(lambda)?;
        let mut terms = Terms::new();
        add_into(&mut terms, lambda.clone(), &c);
        Ok(KClass { rs: rs.clone(), terms })
    }

    /// Builds a class from `e`-coordinates keyed by dominant weights.
    pub fn from_e_coords(rs: &Arc<RootSystem>, coords: impl IntoIterator<Item = (Weight, LaurentPoly)>) -> Result<Self> {
        let mut terms = Terms::new();
        for (w, c) in coords {
            rs.check_dominant(&w)?;
            add_into(&mut terms, w, &c);
        }
        Ok(KClass { rs: rs.clone(), terms })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn e_coords(&self) -> &BTreeMap<Weight, LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Weight) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut terms = Terms::new();
        for (w, x) in &self.terms {
            add_into(&mut terms, w.clone(), &(x * c));
        }
        KClass { rs: self.rs.clone(), terms }
    }

    pub fn try_add(&self, other: &KClass) -> Result<KClass> {
        check_same(&self.rs, &other.rs)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_into(&mut terms, w.clone(), c);
        }
        Ok(KClass { rs: self.rs.clone(), terms })
    }

    /// Coordinates in the AJ basis.
    pub fn to_aj_coords(&self) -> BTreeMap<Weight, LaurentPoly> {
        self.terms
            .iter()
            .map(|(w, c)| {
                let k = aj_exponent(&self.rs, w);
                (w.clone(), c * &LaurentPoly::neg_v_pow(-k))
            })
            .collect()
    }

    pub fn from_aj_coords(rs: &Arc<RootSystem>, coords: &BTreeMap<Weight, LaurentPoly>) -> Result<Self> {
        let mut terms = Terms::new();
        for (w, c) in coords {
            rs.check_dominant(w)?;
            let k = aj_exponent(rs, w);
            add_into(&mut terms, w.clone(), &(c * &LaurentPoly::neg_v_pow(k)));
        }
        Ok(KClass { rs: rs.clone(), terms })
    }

    /// The Kazhdan–Lusztig involution: `v ↦ v⁻¹` on coefficients and
    /// `e^μ ↦ e^{w₀μ}` on generators.
    pub fn bar(&self) -> Result<KClass> {
        let mut terms = Terms::new();
        for (mu, c) in &self.terms {
            let cb = c.bar();
            let image = straighten_terms(&self.rs, &self.rs.w0_action(mu))?;
            for (w, x) in image.iter() {
                add_into(&mut terms, w.clone(), &(&cb * x));
            }
        }
        Ok(KClass { rs: self.rs.clone(), terms })
    }

    pub fn is_bar_invariant(&self) -> Result<bool> {
        Ok(self.bar()? == *self)
    }

    /// `"AJ[2]=1, AJ[0]=v^-1"`, highest weight first.
    pub fn format(&self, basis: Basis) -> String {
        let coords = match basis {
            Basis::E => self.terms.clone(),
            Basis::AJ => self.to_aj_coords(),
        };
        format_terms(&self.rs, basis.label(), &coords)
    }

    pub fn to_json(&self, basis: Basis) -> Value {
        let coords = match basis {
            Basis::E => self.terms.clone(),
            Basis::AJ => self.to_aj_coords(),
        };
        terms_json(basis.label(), &coords)
    }

    pub fn from_json(rs: &Arc<RootSystem>, value: &Value) -> Result<KClass> {
        let (basis, coords) = parse_terms_json(value)?;
        match basis.as_str() {
            "e" => KClass::from_e_coords(rs, coords),
            "AJ" => KClass::from_aj_coords(rs, &coords),
            other => Err(Error::Json(format!("unknown basis {other:?}"))),
        }
    }
}

pub(crate) fn format_terms(rs: &RootSystem, label: &str, coords: &BTreeMap<Weight, LaurentPoly>) -> String {
    if coords.is_empty() {
        return "0".into();
    }
    let mut keys: Vec<Weight> = coords.keys().cloned().collect();
    rs.sort_linear(&mut keys);
    keys.iter()
        .rev()
        .map(|w| format!("{label}[{w}]={}", coords[w]))
        .collect::<Vec<_>>()
        .join(", ")
}

pub(crate) fn terms_json(label: &str, coords: &BTreeMap<Weight, LaurentPoly>) -> Value {
    // BTreeMap order on Weight is lexicographic on coordinates
    let terms: Vec<Value> = coords
        .iter()
        .map(|(w, c)| json!({"weight": w.coords(), "coeff": c.to_json()}))
        .collect();
    json!({"basis": label, "terms": terms})
}

pub(crate) fn parse_terms_json(value: &Value) -> Result<(String, BTreeMap<Weight, LaurentPoly>)> {
    let bad = |m: &str| Error::Json(m.to_string());
    let basis = value
        .get("basis")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing basis"))?
        .to_string();
    let mut coords = BTreeMap::new();
    for t in value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing terms"))?
    {
        let w: Vec<i64> = t
            .get("weight")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing weight"))?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| bad("weight coordinate")))
            .collect::<Result<_>>()?;
        let c = LaurentPoly::from_json(t.get("coeff").ok_or_else(|| bad("missing coeff"))?)?;
        let slot: &mut LaurentPoly = coords.entry(Weight::new(w)).or_default();
        *slot += &c;
    }
    coords.retain(|_, c| !c.is_zero());
    Ok((basis, coords))
}

impl Add<&KClass> for &KClass {
    type Output = KClass;
    fn add(self, rhs: &KClass) -> KClass {
        self.try_add(rhs).expect("mixed root systems")
    }
}

impl Sub<&KClass> for &KClass {
    type Output = KClass;
    fn sub(self, rhs: &KClass) -> KClass {
        self.try_add(&-rhs).expect("mixed root systems")
    }
}

impl Neg for &KClass {
    type Output = KClass;
    fn neg(self) -> KClass {
        KClass {
            rs: self.rs.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// `ν − ν_λ`, the exponent in `AJ(λ) = (−v)^{ν−ν_λ} e^λ`.
pub fn aj_exponent(rs: &RootSystem, lambda: &Weight) -> i32 {
    let nu_l = rs
        .positive_roots()
        .iter()
        .filter(|r| r.pair(lambda) == 0)
        .count();
    (rs.nu() - nu_l) as i32
}

/// `AJ(λ) = (−v)^{ν−ν_λ} e^λ`.
pub fn aj_class(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<KClass> {
    rs.check_dominant(lambda)?;
    KClass::basis(rs, lambda, LaurentPoly::neg_v_pow(aj_exponent(rs, lambda)))
}

/// One application of a straightening relation at simple index `i`
/// (requires `⟨λ, α_i^∨⟩ < 0`).
fn rewrite(rs: &RootSystem, lambda: &Weight, i: usize) -> Vec<(Weight, LaurentPoly)> {
    let n = -lambda[i];
    debug_assert!(n > 0);
    let alpha = rs.simple_root(i);
    let s_lambda = rs.reflect(i, lambda);
    let v2 = LaurentPoly::v_pow(2);
    if n == 1 {
        vec![(s_lambda, v2)]
    } else {
        vec![
            (&s_lambda - alpha, LaurentPoly::constant(-1)),
            (s_lambda, v2.clone()),
            (lambda + alpha, v2),
        ]
    }
}

fn depth_bound(rs: &RootSystem, lambda: &Weight) -> usize {
    let top = rs.height(&rs.dominant_conjugate(lambda));
    4 * (top.max(0) as usize + rs.nu() + 1)
}

fn checked_rewrite(rs: &RootSystem, lambda: &Weight, i: usize) -> Result<Vec<(Weight, LaurentPoly)>> {
    let h = rs.height(lambda);
    let out = rewrite(rs, lambda, i);
    for (w, _) in &out {
        if rs.height(w) <= h {
            return Err(Error::NonTermination {
                weight: lambda.clone(),
                detail: format!("rewrite produced {w} with ⟨·,2ρ^∨⟩ not above {h}"),
            });
        }
    }
    Ok(out)
}

/// Memoized expansion of `e^λ`, rewriting at the smallest negative index.
pub(crate) fn straighten_terms(rs: &RootSystem, lambda: &Weight) -> Result<Arc<Terms>> {
    rs.check_rank(lambda)?;
    let bound = depth_bound(rs, lambda);
    straighten_rec(rs, lambda, 0, bound, lambda)
}

fn straighten_rec(rs: &RootSystem, lambda: &Weight, depth: usize, bound: usize, origin: &Weight) -> Result<Arc<Terms>> {
    if let Some(t) = rs.memo.straighten.lock().unwrap().get(lambda) {
        return Ok(t.clone());
    }
    if depth > bound {
        return Err(Error::NonTermination {
            weight: origin.clone(),
            detail: format!("recursion depth exceeded {bound}"),
        });
    }
    let result = match lambda.iter().position(|&x| x < 0) {
        None => {
            let mut t = Terms::new();
            t.insert(lambda.clone(), LaurentPoly::one());
            t
        }
        Some(i) => {
            let mut t = Terms::new();
            for (w, c) in checked_rewrite(rs, lambda, i)? {
                for (mu, x) in straighten_rec(rs, &w, depth + 1, bound, origin)?.iter() {
                    add_into(&mut t, mu.clone(), &(&c * x));
                }
            }
            t
        }
    };
    let result = Arc::new(result);
    rs.memo
        .straighten
        .lock()
        .unwrap()
        .entry(lambda.clone())
        .or_insert_with(|| result.clone());
    Ok(result)
}

/// Expansion of `e^λ` (any weight) in the dominant basis.
pub fn straighten(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<KClass> {
    let terms = straighten_terms(rs, lambda)?;
    Ok(KClass {
        rs: rs.clone(),
        terms: (*terms).clone(),
    })
}

/// Straightening with a caller-chosen rewrite index. `choose` receives the
/// weight and its negative indices and returns one of them. Results are not
/// shared with the main memo table.
pub fn straighten_with<F>(rs: &Arc<RootSystem>, lambda: &Weight, mut choose: F) -> Result<KClass>
where
    F: FnMut(&Weight, &[usize]) -> usize,
{
    rs.check_rank(lambda)?;
    let bound = depth_bound(rs, lambda);
    let mut local: HashMap<Weight, Terms> = HashMap::new();
    let terms = straighten_custom(rs, lambda, 0, bound, &mut choose, &mut local)?;
    Ok(KClass { rs: rs.clone(), terms })
}

fn straighten_custom<F>(
    rs: &RootSystem,
    lambda: &Weight,
    depth: usize,
    bound: usize,
    choose: &mut F,
    local: &mut HashMap<Weight, Terms>,
) -> Result<Terms>
where
    F: FnMut(&Weight, &[usize]) -> usize,
{
    if let Some(t) = local.get(lambda) {
        return Ok(t.clone());
    }
    if depth > bound {
        return Err(Error::NonTermination {
            weight: lambda.clone(),
            detail: format!("recursion depth exceeded {bound}"),
        });
    }
    let negative: Vec<usize> = (0..lambda.len()).filter(|&i| lambda[i] < 0).collect();
    let mut t = Terms::new();
    if negative.is_empty() {
        t.insert(lambda.clone(), LaurentPoly::one());
    } else {
        let i = choose(lambda, &negative);
        assert!(negative.contains(&i), "strategy returned a non-negative index");
        for (w, c) in checked_rewrite(rs, lambda, i)? {
            for (mu, x) in straighten_custom(rs, &w, depth + 1, bound, choose, local)? {
                add_into(&mut t, mu, &(&c * &x));
            }
        }
    }
    local.insert(lambda.clone(), t.clone());
    Ok(t)
}

/// A formal combination of `e^λ` over arbitrary weights, multiplied by
/// `e^λ · e^μ = e^{λ+μ}` before being pushed to `K(N)`.
#[derive(Clone)]
pub struct GroupRingElement {
    rs: Arc<RootSystem>,
    terms: Terms,
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement[{}]({})", self.rs.label(), format_terms(&self.rs, "e", &self.terms))
    }
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.rs == other.rs && self.terms == other.terms
    }
}

impl GroupRingElement {
    pub fn one(rs: &Arc<RootSystem>) -> Self {
        Self::monomial(rs, &rs.zero_weight(), LaurentPoly::one())
    }

    pub fn monomial(rs: &Arc<RootSystem>, lambda: &Weight, c: LaurentPoly) -> Self {
        let mut terms = Terms::new();
        add_into(&mut terms, lambda.clone(), &c);
        GroupRingElement { rs: rs.clone(), terms }
    }

    pub fn from_terms(rs: &Arc<RootSystem>, terms: impl IntoIterator<Item = (Weight, LaurentPoly)>) -> Self {
        let mut t = Terms::new();
        for (w, c) in terms {
            add_into(&mut t, w, &c);
        }
        GroupRingElement { rs: rs.clone(), terms: t }
    }

    /// `e⁰ − v² e^α`.
    pub fn koszul_factor(rs: &Arc<RootSystem>, alpha: &Weight) -> Self {
        Self::from_terms(
            rs,
            [
                (rs.zero_weight(), LaurentPoly::one()),
                (alpha.clone(), LaurentPoly::monomial(-1, 2)),
            ],
        )
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn terms(&self) -> &BTreeMap<Weight, LaurentPoly> {
        &self.terms
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_terms(&self.rs, self.terms.iter().map(|(w, x)| (w.clone(), x * c)))
    }

    pub fn mul(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        check_same(&self.rs, &other.rs)?;
        let mut t = Terms::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                add_into(&mut t, a + b, &(x * y));
            }
        }
        Ok(GroupRingElement { rs: self.rs.clone(), terms: t })
    }
}

/// Product of the factors; the empty product is `e⁰`.
pub fn group_ring_product(rs: &Arc<RootSystem>, factors: &[GroupRingElement]) -> Result<GroupRingElement> {
    factors
        .iter()
        .try_fold(GroupRingElement::one(rs), |acc, f| acc.mul(f))
}

/// Straightens every term and sums. Not multiplicative.
pub fn pushforward(g: &GroupRingElement) -> Result<KClass> {
    let mut terms = Terms::new();
    for (w, c) in &g.terms {
        for (mu, x) in straighten_terms(&g.rs, w)?.iter() {
            add_into(&mut terms, mu.clone(), &(c * x));
        }
    }
    Ok(KClass { rs: g.rs.clone(), terms })
}
