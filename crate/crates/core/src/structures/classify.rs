//! Imprimitivity and dual imprimitivity flags, Schur-closed idempotent
//! sets, tightness and Schur products that are multiples of one idempotent.

use drg_algebra::FieldElem;
use num_rational::BigRational;

use super::QStructure;
use crate::array::IntersectionArray;
use crate::krein::KreinTensor;
use crate::scheme::Scheme;
use crate::spectrum::Spectrum;

/// Dual imprimitivity flags of one Q-polynomial structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DualFlags {
    pub dual_bipartite: bool,
    pub dual_antipodal: bool,
    pub almost_dual_bipartite: bool,
    pub almost_dual_antipodal: bool,
}

impl DualFlags {
    pub fn of(qs: &QStructure) -> Self {
        let d = qs.diameter();
        let kt = &qs.krein;
        let a_zero = |i: usize| qs.a_star[i].is_zero();
        DualFlags {
            dual_bipartite: (0..=d).all(a_zero),
            dual_antipodal: (0..=d)
                .filter(|&i| i != d / 2)
                .all(|i| qs.c_star[i] == qs.b_star[d - i]),
            almost_dual_bipartite: (0..d).all(a_zero) && !a_zero(d),
            almost_dual_antipodal: !kt.is_zero_at(d, 1, d)
                && (2..=d).all(|i| kt.is_zero_at(d, i, d)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub bipartite: bool,
    pub antipodal: bool,
    pub tight: bool,
    /// Present when the report was computed for a Q-polynomial structure.
    pub dual: Option<DualFlags>,
    /// Schur-closed idempotent sets, in the labels of the structure (or the
    /// natural labels when no structure was given).
    pub schur_closed_subsets: Vec<Vec<usize>>,
}

/// Every nonempty `T ⊆ {0..d}` with `q^h_{ij} ≠ 0 ⇒ h ∈ T` for `i, j ∈ T`,
/// in the labels of `kt`. Such `T` always contains 0.
pub fn schur_closed_subsets(kt: &KreinTensor) -> Vec<Vec<usize>> {
    let d = kt.diameter();
    let mut out = Vec::new();
    for mask in 0u32..(1 << d) {
        let set: Vec<usize> = std::iter::once(0)
            .chain((1..=d).filter(|&i| mask & (1 << (i - 1)) != 0))
            .collect();
        let closed = set.iter().all(|&i| {
            set.iter()
                .all(|&j| (0..=d).all(|h| set.contains(&h) || kt.is_zero_at(h, i, j)))
        });
        if closed {
            out.push(set);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Flags of the array together with the dual flags of `qs` when given.
pub fn imprimitivity(scheme: &Scheme, qs: Option<&QStructure>) -> ClassificationReport {
    let arr = &scheme.array;
    let kt = qs.map(|q| &q.krein).unwrap_or(&scheme.krein);
    ClassificationReport {
        bipartite: arr.is_bipartite(),
        antipodal: arr.is_antipodal(),
        tight: tightness(arr, &scheme.spectrum).is_tight(),
        dual: qs.map(DualFlags::of),
        schur_closed_subsets: schur_closed_subsets(kt),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TightnessFailure {
    DiameterBelowThree,
    Bipartite,
    EqualityFails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tightness {
    Tight,
    NotTight(TightnessFailure),
}

impl Tightness {
    pub fn is_tight(self) -> bool {
        self == Tightness::Tight
    }
}

/// Exact test of
/// `(θ_1 + k/(a_1+1))(θ_d + k/(a_1+1)) = −k a_1 b_1/(a_1+1)²` for
/// non-bipartite arrays of diameter at least 3.
pub fn tightness(arr: &IntersectionArray, spec: &Spectrum) -> Tightness {
    let d = arr.diameter();
    if d < 3 {
        return Tightness::NotTight(TightnessFailure::DiameterBelowThree);
    }
    if arr.is_bipartite() {
        return Tightness::NotTight(TightnessFailure::Bipartite);
    }
    let k = arr.valency();
    let a1 = arr.a(1);
    let b1 = arr.b(1);
    let shift = BigRational::new(k.into(), (a1 + 1).into());
    let field = spec.field();
    let lhs =
        (spec.theta(1) + &field.rational(shift.clone())) * (spec.theta(d) + &field.rational(shift));
    let rhs = BigRational::new((-k * a1 * b1).into(), ((a1 + 1) * (a1 + 1)).into());
    if lhs.as_rational() == Some(rhs) {
        Tightness::Tight
    } else {
        Tightness::NotTight(TightnessFailure::EqualityFails)
    }
}

/// Agreement of the tightness test with "not bipartite and `a_d = 0`" and
/// with "not bipartite and `a*_d = 0`" for a Q-polynomial structure.
pub fn tightness_crosscheck(scheme: &Scheme, qs: &QStructure) -> Result<(), String> {
    let arr = &scheme.array;
    let d = arr.diameter();
    if d < 3 {
        return Ok(());
    }
    let tight = tightness(arr, &scheme.spectrum).is_tight();
    let via_a = !arr.is_bipartite() && arr.a(d) == 0;
    let via_a_star = !arr.is_bipartite() && qs.a_star[d].is_zero();
    if tight == via_a && tight == via_a_star {
        Ok(())
    } else {
        Err(format!(
            "tight = {tight}, (non-bipartite, a_d = 0) = {via_a}, (non-bipartite, a*_d = 0) = {via_a_star}"
        ))
    }
}

/// An ordered pair `(E_i, E_j)` with `E_i ∘ E_j = scalar · E_h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurPair {
    pub i: usize,
    pub j: usize,
    pub h: usize,
    /// `q^h_{ij} / n`.
    pub scalar: FieldElem,
    /// Whether the scalar equals `m_i m_j / (n m_h)`.
    pub scalar_matches: bool,
}

/// All ordered pairs of non-trivial idempotents (natural labels) whose
/// Schur product has exactly one nonzero Krein coefficient.
pub fn schur_idempotent_pairs(scheme: &Scheme) -> Vec<SchurPair> {
    let d = scheme.diameter();
    let kt = &scheme.krein;
    let spec = &scheme.spectrum;
    let n = scheme.array.vertex_count();
    let mut out = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            let support: Vec<usize> = (0..=d).filter(|&h| !kt.is_zero_at(h, i, j)).collect();
            if let [h] = support[..] {
                let scalar = kt.get(h, i, j).div_rational(n);
                let expected =
                    (spec.multiplicity(i) * spec.multiplicity(j)) / spec.multiplicity(h).scale(n);
                out.push(SchurPair {
                    i,
                    j,
                    h,
                    scalar_matches: scalar == expected,
                    scalar,
                });
            }
        }
    }
    out
}

/// Checks the pairs against the trichotomy: tight — exactly the two
/// orderings of `(E_1, E_d)`; bipartite — exactly the pairs containing
/// `E_d`; otherwise — none.
pub fn schur_trichotomy(scheme: &Scheme, pairs: &[SchurPair]) -> Result<(), String> {
    let d = scheme.diameter();
    if d < 3 {
        return Ok(());
    }
    if let Some(p) = pairs.iter().find(|p| !p.scalar_matches) {
        return Err(format!(
            "scalar of (E_{}, E_{}) differs from m_i m_j/(n m_h)",
            p.i, p.j
        ));
    }
    let got: Vec<(usize, usize)> = pairs.iter().map(|p| (p.i, p.j)).collect();
    let expected: Vec<(usize, usize)> = if tightness(&scheme.array, &scheme.spectrum).is_tight() {
        vec![(1, d), (d, 1)]
    } else if scheme.array.is_bipartite() {
        (1..=d)
            .flat_map(|i| (1..=d).map(move |j| (i, j)))
            .filter(|&(i, j)| i == d || j == d)
            .collect()
    } else {
        Vec::new()
    };
    if got == expected {
        Ok(())
    } else {
        Err(format!("Schur pairs {got:?}, expected {expected:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;
    use crate::structures::q_structures;

    fn scheme(text: &str) -> Scheme {
        Scheme::new(&parse_array(text).unwrap()).unwrap()
    }

    #[test]
    fn hamming_flags() {
        let s = scheme("4,3,2,1;1,2,3,4");
        let qs = q_structures(&s);
        let r = imprimitivity(&s, Some(&qs[0]));
        assert!(r.bipartite && r.antipodal && !r.tight);
        let dual = r.dual.unwrap();
        assert!(dual.dual_bipartite && dual.dual_antipodal);
        assert!(r.schur_closed_subsets.contains(&vec![0, 2, 4]));
        assert!(r.schur_closed_subsets.contains(&vec![0, 4]));
        assert_eq!(
            tightness(&s.array, &s.spectrum),
            Tightness::NotTight(TightnessFailure::Bipartite)
        );
        let pairs = schur_idempotent_pairs(&s);
        assert!(pairs.iter().all(|p| p.i == 4 || p.j == 4));
        assert_eq!(pairs.len(), 7);
        schur_trichotomy(&s, &pairs).unwrap();
    }

    #[test]
    fn selfdual_is_tight() {
        let s = scheme("10,5,4,2;1,2,2,10");
        assert!(tightness(&s.array, &s.spectrum).is_tight());
        let pairs = schur_idempotent_pairs(&s);
        let ij: Vec<_> = pairs.iter().map(|p| (p.i, p.j)).collect();
        assert_eq!(ij, vec![(1, 4), (4, 1)]);
        schur_trichotomy(&s, &pairs).unwrap();
        for q in q_structures(&s) {
            tightness_crosscheck(&s, &q).unwrap();
        }
    }

    #[test]
    fn johnson_is_tight() {
        // The fundamental-bound equality holds: both sides equal −864/49.
        let s = scheme("16,9,4,1;1,4,9,16");
        assert!(tightness(&s.array, &s.spectrum).is_tight());
        let pairs = schur_idempotent_pairs(&s);
        assert_eq!(pairs.len(), 2);
    }

    #[test]
    fn dual_polar_is_almost_dual_bipartite() {
        let s = scheme("170,168,160,128;1,5,21,85");
        let qs = q_structures(&s);
        assert_eq!(qs.len(), 2);
        let flags: Vec<_> = qs.iter().map(DualFlags::of).collect();
        assert!(flags.iter().any(|f| f.almost_dual_bipartite));
    }
}
