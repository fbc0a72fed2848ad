//! The global-sections map `Γ`, realized through q-analogs of Kostant's
//! multiplicity formula at `q = v²`.
//!
//! For dominant `λ`, the graded multiplicity of `V_μ` in `Γ(e^λ)` is
//! `kostka_q(λ, μ)`; it vanishes unless `λ ≤ μ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::kclass::KClass;
use crate::laurent::LaurentPoly;
use crate::rootsys::{RootSystem, Weight};

/// `Σ_w (−1)^{l(w)} 𝔓_q(w(λ+ρ) − (μ+ρ))` with `q = v²`.
///
/// This is the q-analog of the multiplicity of the weight `μ` in `V_λ`; with
/// the arguments read the other way round it is the graded multiplicity of
/// `V_λ` in `Γ(e^μ)`.
pub fn kostka_q(rs: &RootSystem, mu: &Weight, lambda: &Weight) -> LaurentPoly {
    if !rs.dominance_leq(mu, lambda) {
        return LaurentPoly::zero();
    }
    let rho = rs.rho();
    let lr = lambda + &rho;
    let mr = mu + &rho;
    let mut total = LaurentPoly::zero();
    for w in rs.weyl_group() {
        let p = rs.q_partition(&(&w.apply(&lr) - &mr));
        if p.is_zero() {
            continue;
        }
        if w.sign() > 0 {
            total += &p;
        } else {
            total -= &p;
        }
    }
    total
}

/// A truncation of `Γ(x)`: coefficients of `V_μ` for `⟨μ,2ρ^∨⟩ ≤ cutoff`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    rs: Arc<RootSystem>,
    cutoff: i64,
    mults: BTreeMap<Weight, LaurentPoly>,
}

impl fmt::Debug for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedCharacter({}, ≤{}: {self})", self.rs.label(), self.cutoff)
    }
}

impl GradedCharacter {
    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn mults(&self) -> &BTreeMap<Weight, LaurentPoly> {
        &self.mults
    }

    pub fn coeff(&self, mu: &Weight) -> LaurentPoly {
        self.mults.get(mu).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// Keys in the fixed linear extension, lowest first.
    pub fn weights(&self) -> Vec<Weight> {
        let mut keys: Vec<Weight> = self.mults.keys().cloned().collect();
        self.rs.sort_linear(&mut keys);
        keys
    }

    /// `{"basis": "V", "cutoff": n, "terms": [...]}`, terms ordered as in
    /// K-class JSON.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .mults
            .iter()
            .map(|(w, c)| json!({"weight": w.coords(), "coeff": c.to_json()}))
            .collect();
        json!({"basis": "V", "cutoff": self.cutoff, "terms": terms})
    }
}

/// Lowest weight first, e.g. `V[0,0]=v^-2, V[0,3]=-v^2`.
impl fmt::Display for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return f.write_str("0");
        }
        for (i, w) in self.weights().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "V[{w}]={}", self.mults[w])?;
        }
        Ok(())
    }
}

impl Add<&GradedCharacter> for &GradedCharacter {
    type Output = GradedCharacter;

    /// Pointwise sum, truncated to the smaller cutoff.
    fn add(self, rhs: &GradedCharacter) -> GradedCharacter {
        assert_eq!(self.rs.label(), rhs.rs.label(), "mixed root systems");
        let cutoff = self.cutoff.min(rhs.cutoff);
        let mut mults = BTreeMap::new();
        for (w, c) in self.mults.iter().chain(&rhs.mults) {
            if self.rs.height(w) <= cutoff {
                let slot: &mut LaurentPoly = mults.entry(w.clone()).or_default();
                *slot += c;
            }
        }
        mults.retain(|_, c: &mut LaurentPoly| !c.is_zero());
        GradedCharacter {
            rs: self.rs.clone(),
            cutoff,
            mults,
        }
    }
}

/// `Γ(x)` truncated to `⟨μ,2ρ^∨⟩ ≤ cutoff`. Each retained coefficient is exact.
pub fn gamma_map(x: &KClass, cutoff: i64) -> GradedCharacter {
    let rs = x.root_system();
    let targets = if cutoff >= 0 {
        rs.dominant_weights_up_to(cutoff)
    } else {
        Vec::new()
    };
    let mut mults = BTreeMap::new();
    for mu in &targets {
        let mut c = LaurentPoly::zero();
        for (lambda, x_lambda) in x.e_coords() {
            let k = kostka_q(rs, lambda, mu);
            if !k.is_zero() {
                c += &(x_lambda * &k);
            }
        }
        if !c.is_zero() {
            mults.insert(mu.clone(), c);
        }
    }
    GradedCharacter {
        rs: rs.clone(),
        cutoff,
        mults,
    }
}
