//! Graded dimensions of the first cotangent module of a semigroup algebra,
//! computed from a minimal binomial presentation: outside the endomorphism
//! degrees,
//!
//! `dim T^1_l = #{i : a_i + l not in N} - dim V_l - 1`
//!
//! where `V_l` is the rational span of the lattice vectors of the relations
//! whose degree shifted by `l` leaves the semigroup. Endomorphism degrees
//! contribute zero. Ranks are exact (characteristic zero, integer
//! elimination), never floating point.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::SemigroupError;
use crate::linalg;
use crate::presentation::{self, Presentation};
use crate::semigroup::NumericalSemigroup;

/// Nonzero graded dimensions of `T^1` with their positive and negative
/// aggregate sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedT1 {
    pub by_degree: BTreeMap<i64, i64>,
    pub t1_plus: i64,
    pub t1_minus: i64,
}

/// The two ingredients of the dimension formula at one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCell {
    pub degree: i64,
    /// `#{i : a_i + degree not in N}`
    pub a_count: i64,
    /// `dim V_degree`
    pub v_dim: i64,
}

/// Both sides of the aggregation identity
/// `t1_plus = sum_{l > 0, l not endo} (a_count - v_dim) - g + lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub t1_plus: i64,
    pub rhs: i64,
    pub holds: bool,
}

pub fn degree_cell(s: &NumericalSemigroup, p: &Presentation, degree: i64) -> DegreeCell {
    let a_count = s
        .generators()
        .iter()
        .filter(|&&a| !s.contains(a + degree))
        .count() as i64;
    let active: Vec<Vec<i64>> = p
        .relations
        .iter()
        .filter(|r| !s.contains(r.degree + degree))
        .map(|r| r.lattice_vector.clone())
        .collect();
    let v_dim = linalg::rank(&active) as i64;
    DegreeCell {
        degree,
        a_count,
        v_dim,
    }
}

/// Graded dimension of `T^1` at a single degree. Requires a validated
/// presentation of the same semigroup; a negative formula value signals an
/// inconsistent presentation and is reported as an error.
pub fn t1_dimension(
    s: &NumericalSemigroup,
    p: &Presentation,
    degree: i64,
) -> Result<i64, SemigroupError> {
    if s.is_endo_degree(degree) {
        return Ok(0);
    }
    let cell = degree_cell(s, p, degree);
    let value = cell.a_count - cell.v_dim - 1;
    if value < 0 {
        return Err(SemigroupError::NegativeDimension { degree, value });
    }
    Ok(value)
}

/// All nonzero graded dimensions. The scan window `[-max d_i, F - a_1]` is
/// exhaustive: below it every lattice vector is active and the full rank
/// `r - 1` forces zero, above it every degree is an endomorphism degree.
pub fn t1_graded(s: &NumericalSemigroup) -> Result<GradedT1, SemigroupError> {
    let p = presentation::minimal_presentation(s)?;
    t1_graded_with(s, &p)
}

/// Same as [`t1_graded`] but reusing an already computed presentation.
pub fn t1_graded_with(
    s: &NumericalSemigroup,
    p: &Presentation,
) -> Result<GradedT1, SemigroupError> {
    let max_betti = p.betti_degrees.iter().copied().max().unwrap_or(0);
    let lo = -max_betti;
    let hi = s.frobenius() - s.multiplicity();
    let mut by_degree = BTreeMap::new();
    let mut t1_plus = 0;
    let mut t1_minus = 0;
    for degree in lo..=hi {
        let dim = t1_dimension(s, p, degree)?;
        if dim == 0 {
            continue;
        }
        by_degree.insert(degree, dim);
        if degree > 0 {
            t1_plus += dim;
        } else if degree < 0 {
            t1_minus += dim;
        }
    }
    Ok(GradedT1 {
        by_degree,
        t1_plus,
        t1_minus,
    })
}

/// True when `T^1` is supported entirely in negative degrees.
pub fn is_negatively_graded(s: &NumericalSemigroup) -> Result<bool, SemigroupError> {
    Ok(t1_graded(s)?.t1_plus == 0)
}

/// Checks that summing `a_count - v_dim` over the positive non-endomorphism
/// degrees and correcting by `lambda - g` reproduces `t1_plus` exactly.
pub fn t1_proof_identity_check(s: &NumericalSemigroup) -> Result<IdentityReport, SemigroupError> {
    let p = presentation::minimal_presentation(s)?;
    let graded = t1_graded_with(s, &p)?;
    let mut sum = 0;
    // every degree above F is an endomorphism degree, so [1, F] is enough
    for degree in 1..=s.frobenius() {
        if s.is_endo_degree(degree) {
            continue;
        }
        let cell = degree_cell(s, &p, degree);
        sum += cell.a_count - cell.v_dim;
    }
    let rhs = sum - s.genus() + s.lambda();
    Ok(IdentityReport {
        t1_plus: graded.t1_plus,
        rhs,
        holds: graded.t1_plus == rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn cusp_versal_degrees() {
        // y^2 = x^3: perturbations a x + b of weights -4 and -6 against the
        // weight-6 equation
        let s = sg(&[2, 3]);
        let g = t1_graded(&s).unwrap();
        assert_eq!(g.by_degree, BTreeMap::from([(-4, 1), (-6, 1)]));
        assert_eq!(g.t1_plus, 0);
        assert_eq!(g.t1_minus, 2);

        let p = presentation::minimal_presentation(&s).unwrap();
        for l in -20..=20 {
            let expected = i64::from(l == -4 || l == -6);
            assert_eq!(t1_dimension(&s, &p, l).unwrap(), expected, "degree {l}");
        }
    }

    #[test]
    fn twofive_versal_degrees() {
        // y^2 = x^5 + a3 x^3 + a2 x^2 + a1 x + a0
        let s = sg(&[2, 5]);
        let g = t1_graded(&s).unwrap();
        assert_eq!(
            g.by_degree,
            BTreeMap::from([(-4, 1), (-6, 1), (-8, 1), (-10, 1)])
        );
    }

    #[test]
    fn frobenius_degree_is_zero() {
        for gens in [vec![2, 3], vec![6, 7, 8], vec![3, 7, 11]] {
            let s = sg(&gens);
            let p = presentation::minimal_presentation(&s).unwrap();
            assert_eq!(t1_dimension(&s, &p, s.frobenius()).unwrap(), 0);
        }
    }

    #[test]
    fn graded_examples() {
        let s = NumericalSemigroup::from_gaps(&[1, 2, 3, 5, 7, 9]).unwrap();
        assert_eq!(t1_graded(&s).unwrap().t1_plus, 2);

        let fam1 = sg(&[6, 9, 10, 13, 14]);
        let g = t1_graded(&fam1).unwrap();
        assert_eq!(g.t1_plus, 2);
        assert_eq!(g.t1_minus, 19);

        assert_eq!(t1_graded(&sg(&[6, 7, 8])).unwrap().t1_plus, 3);
    }

    #[test]
    fn negatively_graded_examples() {
        assert!(is_negatively_graded(&sg(&[2, 3])).unwrap());
        let row1 = NumericalSemigroup::from_gaps(&[1, 2, 4, 5, 8]).unwrap();
        assert!(!is_negatively_graded(&row1).unwrap());
        assert!(is_negatively_graded(&sg(&[6, 8, 9, 10, 11])).unwrap());
    }

    #[test]
    fn identity_check_examples() {
        for gens in [vec![6, 7, 8], vec![2, 3], vec![6, 7, 15]] {
            let rep = t1_proof_identity_check(&sg(&gens)).unwrap();
            assert!(rep.holds, "{gens:?}: {rep:?}");
        }
        let rep = t1_proof_identity_check(&sg(&[6, 7, 8])).unwrap();
        assert_eq!(rep.t1_plus, 3);
        assert_eq!(rep.rhs, 3);
    }

    #[test]
    fn window_extension_adds_nothing() {
        for gens in [vec![2, 3], vec![6, 7, 8], vec![3, 7, 11], vec![6, 9, 10, 13, 14]] {
            let s = sg(&gens);
            let p = presentation::minimal_presentation(&s).unwrap();
            let max_betti = *p.betti_degrees.last().unwrap();
            let a_r = *s.generators().last().unwrap();
            let lo = -max_betti - a_r;
            let hi = s.frobenius() - s.multiplicity() + a_r;
            let g = t1_graded(&s).unwrap();
            let mut sum = 0;
            for l in lo..=hi {
                sum += t1_dimension(&s, &p, l).unwrap();
            }
            let total: i64 = g.by_degree.values().sum();
            assert_eq!(sum, total);
        }
    }

    #[test]
    fn endo_degrees_report_zero_inside_window() {
        let s = sg(&[6, 7, 8]);
        let p = presentation::minimal_presentation(&s).unwrap();
        for l in -30..=20 {
            if s.is_endo_degree(l) {
                assert_eq!(t1_dimension(&s, &p, l).unwrap(), 0);
            }
        }
    }

    #[test]
    fn rank_is_order_independent() {
        let s = sg(&[6, 9, 10, 13, 14]);
        let mut p = presentation::minimal_presentation(&s).unwrap();
        let g1 = t1_graded_with(&s, &p).unwrap();
        p.relations.reverse();
        let g2 = t1_graded_with(&s, &p).unwrap();
        assert_eq!(g1, g2);
    }
}
