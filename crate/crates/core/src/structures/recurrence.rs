//! Three-term recurrences of a Q-sequence and of the eigenvalues in a
//! Q-polynomial ordering:
//! `σ_{i+1} + σ_{i−1} = pσ_i + r`,
//! `θ_{ℓ+1} + θ_{ℓ−1} = pθ_ℓ + r*` and
//! `θ_{ℓ+1}θ_{ℓ−1} = θ_ℓ² − r*θ_ℓ − s*`.

use drg_algebra::FieldElem;

use super::QStructure;
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecurrenceFit {
    Fit {
        p: FieldElem,
        r: FieldElem,
        r_star: FieldElem,
        s_star: FieldElem,
    },
    NoFit(String),
}

impl RecurrenceFit {
    pub fn is_fit(&self) -> bool {
        matches!(self, RecurrenceFit::Fit { .. })
    }
}

/// Solves the overdetermined system for `p, r` from the cosine sequence of
/// the primary idempotent, then `r*, s*` from the eigenvalues in the
/// structure's ordering, verifying every equation for `1 ≤ i, ℓ ≤ d − 1`.
pub fn recurrence_fit(qs: &QStructure, spec: &Spectrum) -> RecurrenceFit {
    let d = qs.diameter();
    if d < 3 {
        return RecurrenceFit::NoFit("diameter below 3".into());
    }
    let sigma = spec.cosine_sequence(qs.primary());
    // Row i: p σ_i + r = σ_{i+1} + σ_{i−1}.
    let rhs = |i: usize| &sigma[i + 1] + &sigma[i - 1];
    let Some(j) = (2..d).find(|&j| sigma[j] != sigma[1]) else {
        return RecurrenceFit::NoFit("cosine sequence constant on 1..d-1".into());
    };
    let p = (rhs(1) - rhs(j)) / (&sigma[1] - &sigma[j]);
    let r = rhs(1) - &p * &sigma[1];
    if let Some(i) = (1..d).find(|&i| rhs(i) != &(&p * &sigma[i]) + &r) {
        return RecurrenceFit::NoFit(format!("cosine recurrence fails at i = {i}"));
    }
    let theta: Vec<&FieldElem> = qs.ordering.iter().map(|&e| spec.theta(e)).collect();
    let r_star = &(theta[2] + theta[0]) - &(&p * theta[1]);
    if let Some(l) = (1..d).find(|&l| (theta[l + 1] + theta[l - 1]) != (&(&p * theta[l]) + &r_star))
    {
        return RecurrenceFit::NoFit(format!("eigenvalue sum recurrence fails at l = {l}"));
    }
    let quad = |l: usize| &(theta[l] * theta[l]) - &(&r_star * theta[l]);
    let s_star = &quad(1) - &(theta[2] * theta[0]);
    if let Some(l) = (1..d).find(|&l| (theta[l + 1] * theta[l - 1]) != (&quad(l) - &s_star)) {
        return RecurrenceFit::NoFit(format!("eigenvalue product recurrence fails at l = {l}"));
    }
    RecurrenceFit::Fit {
        p,
        r,
        r_star,
        s_star,
    }
}
