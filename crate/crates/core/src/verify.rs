//! Checks of explicit formulas for canonical basis elements: McGovern classes
//! of nilpotent orbits, the lowest-cell Koszul formula, Graham's formula for
//! minimal weights, the subregular formulas and the `G2` identities.
//!
//! Verifiers return reports rather than errors, so a full dashboard can be
//! produced even when some checks fail.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::canonical::{canonical_element, is_canonical};
use crate::error::{Error, Result};
use crate::kclass::{aj_class, aj_exponent, group_ring_product, pushforward, Basis, GroupRingElement, KClass};
use crate::laurent::LaurentPoly;
use crate::rootsys::{
    dual_partition, partition_to_weighted_dynkin, partitions_of, CartanType, OrbitDatum, Partition,
    RootSystem, RootSystemError, Weight,
};

/// Largest number of positive roots for which subset sums are enumerated.
pub const MAX_SUBSET_ROOTS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Class(KClass),
    Weight(Weight),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub system: String,
    pub status: Status,
    pub lambda: Option<Weight>,
    pub detail: String,
    /// What was computed instead, for failed checks.
    pub witness: Option<Witness>,
}

impl VerificationReport {
    fn pass(check: &str, rs: &RootSystem, lambda: Option<Weight>, detail: String) -> Self {
        VerificationReport {
            check: check.into(),
            system: rs.label().to_string(),
            status: Status::Pass,
            lambda,
            detail,
            witness: None,
        }
    }

    fn fail(check: &str, rs: &RootSystem, lambda: Option<Weight>, detail: String, witness: Witness) -> Self {
        VerificationReport {
            check: check.into(),
            system: rs.label().to_string(),
            status: Status::Fail,
            lambda,
            detail,
            witness: Some(witness),
        }
    }

    fn error(check: &str, rs: &RootSystem, lambda: Option<Weight>, e: Error) -> Self {
        let witness = Witness::Weight(lambda.clone().unwrap_or_else(|| rs.zero_weight()));
        Self::fail(check, rs, lambda, format!("error: {e}"), witness)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `{"check", "system", "status", "lambda", "detail"}`, plus `"witness"`
    /// on failure.
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "check": self.check,
            "system": self.system,
            "status": self.status.to_string(),
            "lambda": self.lambda.as_ref().map(|w| w.coords().to_vec()),
            "detail": self.detail,
        });
        if let Some(w) = &self.witness {
            v["witness"] = match w {
                Witness::Class(x) => x.to_json(Basis::E),
                Witness::Weight(w) => json!(w.coords()),
            };
        }
        v
    }

    pub fn to_tsv(&self) -> String {
        let lambda = self.lambda.as_ref().map(|w| w.to_string()).unwrap_or_default();
        format!("{}\t{}\t{}\t{}\t{}", self.check, self.system, self.status, lambda, self.detail)
    }
}

fn v_pow(k: i64) -> LaurentPoly {
    LaurentPoly::v_pow(i32::try_from(k).expect("exponent fits in i32"))
}

/// `v^{−a(O)} ∏_{α∈R₊₀∪R₊₁}(e⁰ − v²e^α)`, pushed forward to `K_G(N)`.
pub fn mcgovern_class(rs: &Arc<RootSystem>, orbit: &OrbitDatum) -> Result<KClass> {
    let a = orbit
        .a_integral()
        .ok_or(Error::NonIntegralExponent(orbit.a_doubled))?;
    let (r0, r1) = orbit.low_grade_roots(rs);
    let mut factors = vec![GroupRingElement::monomial(rs, &rs.zero_weight(), v_pow(-a))];
    for i in r0.into_iter().chain(r1) {
        factors.push(GroupRingElement::koszul_factor(rs, &rs.positive_roots()[i].weight));
    }
    pushforward(&group_ring_product(rs, &factors)?)
}

/// Checks that each orbit's McGovern class is `C(λ_O)` for some `λ_O`.
pub fn verify_mcgovern(rs: &Arc<RootSystem>) -> Vec<VerificationReport> {
    let orbits = match rs.orbit_table() {
        Ok(o) => o,
        Err(e) => return vec![VerificationReport::error("mcgovern", rs, None, e.into())],
    };
    let experimental = !in_verified_range(rs);
    orbits
        .par_iter()
        .map(|o| {
            let mut r = check_mcgovern(rs, o, None);
            if experimental {
                r.detail.push_str(" (experimental range)");
            }
            r
        })
        .collect()
}

/// Rank at most 2, or `A3`.
fn in_verified_range(rs: &RootSystem) -> bool {
    let l = rs.label();
    l.rank <= 2 || (l.cartan_type == CartanType::A && l.rank == 3)
}

fn check_mcgovern(rs: &Arc<RootSystem>, orbit: &OrbitDatum, expected: Option<&Weight>) -> VerificationReport {
    let check = if expected.is_some() { "sln-rule" } else { "mcgovern" };
    let x = match mcgovern_class(rs, orbit) {
        Ok(x) => x,
        Err(e) => return VerificationReport::error(check, rs, expected.cloned(), e),
    };
    match x.is_bar_invariant() {
        Ok(true) => {}
        Ok(false) => {
            return VerificationReport::fail(
                check,
                rs,
                expected.cloned(),
                format!("orbit {}: McGovern class is not bar-invariant", orbit.name),
                Witness::Class(x),
            )
        }
        Err(e) => return VerificationReport::error(check, rs, expected.cloned(), e),
    }
    match is_canonical(&x) {
        Ok(Some((1, lambda))) if expected.is_none_or(|e| *e == lambda) => VerificationReport::pass(
            check,
            rs,
            Some(lambda.clone()),
            format!("orbit {}: McGovern class = C({lambda})", orbit.name),
        ),
        Ok(found) => {
            let found = match found {
                Some((s, l)) => format!("sign {s} at {l}"),
                None => "not canonical".into(),
            };
            let wanted = expected.map(|e| format!(", expected C({e})")).unwrap_or_default();
            VerificationReport::fail(
                check,
                rs,
                expected.cloned(),
                format!("orbit {}: {found}{wanted}", orbit.name),
                Witness::Class(x),
            )
        }
        Err(e) => VerificationReport::error(check, rs, expected.cloned(), e),
    }
}

/// `v^{−ν} e^{λ−2ρ} ∏_{α∈R₊}(e⁰ − v²e^α)`, for `λ − 2ρ` dominant.
pub fn lowest_cell_class(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<KClass> {
    rs.check_rank(lambda)?;
    let shifted = lambda - &rs.rho().scaled(2);
    if !rs.is_dominant(&shifted) {
        return Err(RootSystemError::DominanceViolation(lambda.clone()).into());
    }
    let mut factors = vec![GroupRingElement::monomial(rs, &shifted, v_pow(-(rs.nu() as i64)))];
    for r in rs.positive_roots() {
        factors.push(GroupRingElement::koszul_factor(rs, &r.weight));
    }
    pushforward(&group_ring_product(rs, &factors)?)
}

/// Whether `λ + Σ_{α∈S} α` is dominant for every subset `S ⊆ R₊`.
pub fn is_very_dominant(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    if rs.nu() > MAX_SUBSET_ROOTS {
        return Err(Error::TooManyRoots(rs.nu()));
    }
    rs.check_rank(lambda)?;
    let mut sums = BTreeSet::from([lambda.clone()]);
    for r in rs.positive_roots() {
        let shifted: Vec<Weight> = sums.iter().map(|s| s + &r.weight).collect();
        sums.extend(shifted);
    }
    Ok(sums.iter().all(|s| rs.is_dominant(s)))
}

/// Compares the Koszul formula with `C(λ)` for every `λ = 2ρ + μ`, `μ`
/// dominant, with `⟨λ,2ρ^∨⟩ ≤ bound`. `λ = 2ρ` is always included.
pub fn verify_lowest_cell(rs: &Arc<RootSystem>, bound: i64) -> Vec<VerificationReport> {
    let two_rho = rs.rho().scaled(2);
    let mut lambdas: Vec<Weight> = rs
        .dominant_weights_up_to((bound - rs.height(&two_rho)).max(0))
        .iter()
        .map(|mu| mu + &two_rho)
        .filter(|l| rs.height(l) <= bound || *l == two_rho)
        .collect();
    rs.sort_linear(&mut lambdas);
    lambdas
        .par_iter()
        .map(|l| check_lowest_cell(rs, l))
        .collect()
}

fn check_lowest_cell(rs: &Arc<RootSystem>, lambda: &Weight) -> VerificationReport {
    let check = "lowest-cell";
    let result = (|| {
        let x = lowest_cell_class(rs, lambda)?;
        let c = canonical_element(rs, lambda)?;
        let very = match is_very_dominant(rs, lambda) {
            Ok(true) => "very dominant",
            Ok(false) => "not very dominant",
            Err(_) => "very dominance not checked",
        };
        Ok::<_, Error>((x, c, very))
    })();
    match result {
        Ok((x, c, very)) if x == c.e_coords => VerificationReport::pass(
            check,
            rs,
            Some(lambda.clone()),
            format!("Koszul formula = C({lambda}); {very}"),
        ),
        Ok((x, _, very)) => VerificationReport::fail(
            check,
            rs,
            Some(lambda.clone()),
            format!("Koszul formula differs from C({lambda}); {very}"),
            Witness::Class(x),
        ),
        Err(e) => VerificationReport::error(check, rs, Some(lambda.clone()), e),
    }
}

/// `Σ_{λ minimal} v^{ν−ν_λ} e^λ`.
pub fn graham_class(rs: &Arc<RootSystem>) -> KClass {
    let terms = rs.minimal_weights().into_iter().map(|l| {
        let k = aj_exponent(rs, &l);
        (l, LaurentPoly::v_pow(k))
    });
    KClass::from_e_coords(rs, terms).expect("minimal weights are dominant")
}

/// `C(λ) = AJ(λ)` for each minimal `λ`, and the Graham class as the signed
/// sum `Σ (−1)^{ν−ν_λ} C(λ)` of those canonical elements.
pub fn verify_graham(rs: &Arc<RootSystem>) -> Vec<VerificationReport> {
    let check = "graham";
    let mut reports = Vec::new();
    let mut sum = KClass::zero(rs);
    for l in rs.minimal_weights() {
        let result = (|| Ok::<_, Error>((canonical_element(rs, &l)?, aj_class(rs, &l)?)))();
        match result {
            Ok((c, aj)) => {
                let sign = LaurentPoly::neg_v_pow(aj_exponent(rs, &l)).eval_at_one();
                sum = &sum + &c.e_coords.scale(&LaurentPoly::constant(sign));
                reports.push(if c.e_coords == aj {
                    VerificationReport::pass(check, rs, Some(l.clone()), format!("C({l}) = AJ({l})"))
                } else {
                    VerificationReport::fail(
                        check,
                        rs,
                        Some(l.clone()),
                        format!("C({l}) differs from AJ({l})"),
                        Witness::Class(c.e_coords),
                    )
                });
            }
            Err(e) => reports.push(VerificationReport::error(check, rs, Some(l.clone()), e)),
        }
    }
    let g = graham_class(rs);
    reports.push(if g == sum {
        VerificationReport::pass(check, rs, None, format!("graham class = {}", g.format(Basis::E)))
    } else {
        VerificationReport::fail(
            check,
            rs,
            None,
            "graham class differs from the signed sum of C(λ) over minimal λ".into(),
            Witness::Class(sum),
        )
    });
    reports
}

/// `C(short dominant root) = v⁻¹e⁰ − v e^{α_s}` with `α_s` short simple, and
/// for `B2`, `C2`: `v(e^{α_s} − e^{α_l}) = C(long dominant root)`.
pub fn verify_subregular(rs: &Arc<RootSystem>) -> Vec<VerificationReport> {
    let check = "subregular";
    let mut reports = Vec::new();
    let alpha_s = rs.simple_root(rs.short_simple_index()).clone();
    let theta_s = rs.short_dominant_root();
    let lhs = pushforward(&GroupRingElement::from_terms(
        rs,
        [
            (rs.zero_weight(), LaurentPoly::v_pow(-1)),
            (alpha_s.clone(), LaurentPoly::monomial(-1, 1)),
        ],
    ));
    let rhs = canonical_element(rs, &theta_s);
    reports.push(match (lhs, rhs) {
        (Ok(x), Ok(c)) if x == c.e_coords => VerificationReport::pass(
            check,
            rs,
            Some(theta_s.clone()),
            format!("v^-1 e[0] - v e[alpha_s] = C({theta_s}) = {}", x.format(Basis::E)),
        ),
        (Ok(x), Ok(_)) => VerificationReport::fail(
            check,
            rs,
            Some(theta_s.clone()),
            format!("v^-1 e[0] - v e[alpha_s] differs from C({theta_s})"),
            Witness::Class(x),
        ),
        (Err(e), _) | (_, Err(e)) => VerificationReport::error(check, rs, Some(theta_s.clone()), e),
    });
    if rs.rank() == 2 && matches!(rs.label().cartan_type, CartanType::B | CartanType::C) {
        let theta = rs.long_dominant_root();
        let alpha_l = rs.simple_root(rs.long_simple_index()).clone();
        let x = pushforward(&GroupRingElement::from_terms(
            rs,
            [(alpha_s, LaurentPoly::v_pow(1)), (alpha_l, LaurentPoly::monomial(-1, 1))],
        ));
        let found = x.as_ref().map_err(Clone::clone).and_then(is_canonical);
        reports.push(match (x, found) {
            (Ok(_), Ok(Some((1, l)))) if l == theta => VerificationReport::pass(
                check,
                rs,
                Some(theta.clone()),
                format!("v(e[alpha_s] - e[alpha_l]) = C({theta})"),
            ),
            (Ok(x), Ok(_)) => VerificationReport::fail(
                check,
                rs,
                Some(theta.clone()),
                format!("v(e[alpha_s] - e[alpha_l]) is not C({theta})"),
                Witness::Class(x),
            ),
            (Err(e), _) | (_, Err(e)) => VerificationReport::error(check, rs, Some(theta.clone()), e),
        });
    }
    reports
}

/// The `G2` expansions of `C(ω₂)`, `C(ω₁)`, `C(2ω₂)` and of
/// `C(ω₂) + 2C(ω₁) + C(2ω₂)`.
pub fn verify_g2(rs: &Arc<RootSystem>) -> Vec<VerificationReport> {
    let check = "g2";
    if rs.label().cartan_type != CartanType::G {
        return vec![VerificationReport::fail(
            check,
            rs,
            None,
            "not a G2 root system".into(),
            Witness::Weight(rs.zero_weight()),
        )];
    }
    let w = |a, b| Weight::new(vec![a, b]);
    let (zero, w1, w2, ww2) = (w(0, 0), w(1, 0), w(0, 1), w(0, 2));
    let e = |terms: &[(&Weight, i32, i64)]| {
        KClass::from_e_coords(
            rs,
            terms.iter().map(|&(l, k, c)| (l.clone(), LaurentPoly::monomial(c, k))),
        )
        .expect("dominant")
    };
    let expected = [
        (w2.clone(), e(&[(&zero, -1, 1), (&w2, 5, -1)])),
        (w1.clone(), e(&[(&w2, 1, 1), (&w1, 5, -1)])),
        (ww2.clone(), e(&[(&w1, 3, 1), (&ww2, 5, -1)])),
    ];
    let mut reports = Vec::new();
    let mut sum = KClass::zero(rs);
    for (l, (lambda, x)) in expected.iter().enumerate() {
        match canonical_element(rs, lambda) {
            Ok(c) => {
                let mult = if l == 1 { 2 } else { 1 };
                sum = &sum + &c.e_coords.scale(&LaurentPoly::constant(mult));
                reports.push(if c.e_coords == *x {
                    VerificationReport::pass(
                        check,
                        rs,
                        Some(lambda.clone()),
                        format!("C({lambda}) = {}", x.format(Basis::E)),
                    )
                } else {
                    VerificationReport::fail(
                        check,
                        rs,
                        Some(lambda.clone()),
                        format!("C({lambda}) differs from {}", x.format(Basis::E)),
                        Witness::Class(c.e_coords),
                    )
                });
            }
            Err(e) => reports.push(VerificationReport::error(check, rs, Some(lambda.clone()), e)),
        }
    }
    let total = e(&[
        (&zero, -1, 1),
        (&w2, 1, 2),
        (&w1, 3, 1),
        (&w2, 5, -1),
        (&w1, 5, -2),
        (&ww2, 5, -1),
    ]);
    reports.push(if sum == total {
        VerificationReport::pass(check, rs, None, format!("C(0,1) + 2C(1,0) + C(0,2) = {}", total.format(Basis::E)))
    } else {
        VerificationReport::fail(
            check,
            rs,
            None,
            format!("C(0,1) + 2C(1,0) + C(0,2) differs from {}", total.format(Basis::E)),
            Witness::Class(sum),
        )
    });
    reports
}

/// The weighted Dynkin diagram of the orbit with Jordan type dual to `p`,
/// read as a weight.
pub fn sln_lambda_rule(n: i64, p: &Partition) -> Result<Weight> {
    if p.size() != n {
        return Err(RootSystemError::NotAPartitionOfN(p.parts().to_vec(), n).into());
    }
    Ok(Weight::new(partition_to_weighted_dynkin(&dual_partition(p), n)?))
}

/// For every partition `p` of `n`, the McGovern class of the orbit of Jordan
/// type `p` in `sl_n` is `C(sln_lambda_rule(n, p))`.
pub fn verify_sln_rule(n: i64) -> Vec<VerificationReport> {
    let rs = match RootSystem::from_label(&format!("A{}", n - 1)) {
        Ok(r) => Arc::new(r),
        Err(e) => {
            let a1 = Arc::new(RootSystem::from_label("A1").expect("A1"));
            return vec![VerificationReport::error("sln-rule", &a1, None, e.into())];
        }
    };
    let orbits = match rs.orbit_table() {
        Ok(o) => o,
        Err(e) => return vec![VerificationReport::error("sln-rule", &rs, None, e.into())],
    };
    partitions_of(n)
        .par_iter()
        .map(|p| {
            let orbit = orbits.iter().find(|o| o.partition.as_ref() == Some(p));
            match (orbit, sln_lambda_rule(n, p)) {
                (Some(o), Ok(l)) => {
                    let mut r = check_mcgovern(&rs, o, Some(&l));
                    r.detail = format!("partition {p}: {}", r.detail);
                    r
                }
                (None, _) => VerificationReport::fail(
                    "sln-rule",
                    &rs,
                    None,
                    format!("no orbit with Jordan type {p}"),
                    Witness::Weight(rs.zero_weight()),
                ),
                (_, Err(e)) => VerificationReport::error("sln-rule", &rs, None, e),
            }
        })
        .collect()
}

/// Every check that applies to `rs`, in a fixed order.
pub fn dashboard(rs: &Arc<RootSystem>, bound: i64) -> Vec<VerificationReport> {
    let label = rs.label();
    let mut jobs: Vec<Box<dyn Fn() -> Vec<VerificationReport> + Send + Sync>> = vec![
        Box::new(|| verify_graham(rs)),
        Box::new(|| verify_subregular(rs)),
        Box::new(move || verify_lowest_cell(rs, bound)),
    ];
    if rs.orbit_table().is_ok() {
        jobs.push(Box::new(|| verify_mcgovern(rs)));
    }
    if label.cartan_type == CartanType::A {
        jobs.push(Box::new(move || verify_sln_rule(label.rank as i64 + 1)));
    }
    if label.cartan_type == CartanType::G {
        jobs.push(Box::new(|| verify_g2(rs)));
    }
    let results: Vec<Vec<VerificationReport>> = jobs.par_iter().map(|job| job()).collect();
    results.into_iter().flatten().collect()
}
