//! Three one-parameter families of symmetric semigroups of multiplicity six,
//! their generating binomials, the syzygies between those binomials, and the
//! closed forms for their invariants. Everything is checked at concrete
//! parameter values rather than symbolically: the identities hold for every
//! tau >= 1 and the verifiers take tau as input.

use serde::Serialize;

use crate::error::SemigroupError;
use crate::poly::{VarSet, WeightedPolynomial};
use crate::presentation::BinomialRelation;
use crate::semigroup::NumericalSemigroup;

/// Closed-form invariants of one family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family_id: u8,
    pub tau: i64,
    pub generators: Vec<i64>,
    pub genus: i64,
    pub largest_gap: i64,
    pub np: i64,
    pub dp: i64,
    pub t1_plus: i64,
    /// Known in closed form for families 1 and 2 only.
    pub t1_minus: Option<i64>,
}

/// One generating binomial of a family ideal, isobaric of weight
/// `12 tau + weight_index`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InitialForm {
    pub label: &'static str,
    pub weight_index: i64,
    pub poly: WeightedPolynomial,
}

/// Non-vanishing substitution result for one form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParametrizationFailure {
    pub form: &'static str,
    pub residue: Vec<(i64, i64)>,
}

/// A syzygy whose expansion did not cancel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyFailure {
    pub syzygy: String,
    pub remainder: String,
}

fn check_family_tau(id: u8, tau: i64) -> Result<(), SemigroupError> {
    if !(1..=3).contains(&id) {
        return Err(SemigroupError::BadFamily(id));
    }
    if tau < 1 {
        return Err(SemigroupError::BadTau(tau));
    }
    Ok(())
}

pub fn family_generators(id: u8, tau: i64) -> Result<Vec<i64>, SemigroupError> {
    check_family_tau(id, tau)?;
    let t = 6 * tau;
    Ok(match id {
        1 => vec![6, 3 + t, 4 + t, 7 + t, 8 + t],
        2 => vec![6, 7 + t, 8 + t, 9 + t, 10 + t],
        _ => vec![6, 2 + t, 3 + t, 4 + t, 5 + t],
    })
}

/// The family member as a canonical semigroup.
pub fn family_semigroup(id: u8, tau: i64) -> Result<NumericalSemigroup, SemigroupError> {
    NumericalSemigroup::from_generators(&family_generators(id, tau)?)
}

/// Closed forms for genus, largest gap and the three bound columns.
pub fn family_expected_invariants(id: u8, tau: i64) -> Result<FamilySpec, SemigroupError> {
    let generators = family_generators(id, tau)?;
    let (genus, np, t1_plus, t1_minus) = match id {
        1 => (3 + 6 * tau, 8 * tau + 7, 4 * tau - 2, Some(11 * tau + 8)),
        2 => (6 + 6 * tau, 8 * tau + 11, 4 * tau, Some(11 * tau + 15)),
        _ => (1 + 6 * tau, 8 * tau + 5, 4 * tau - 4, None),
    };
    // all three families are symmetric: largest gap 2g - 1 and lambda = 1
    let largest_gap = 2 * genus - 1;
    let dp = 2 * genus - 2 + 1;
    Ok(FamilySpec {
        family_id: id,
        tau,
        generators,
        genus,
        largest_gap,
        np,
        dp,
        t1_plus,
        t1_minus,
    })
}

/// Variables of the projected ambient space for families 1 and 2, with the
/// monomial-curve weights attached.
pub fn family_vars(id: u8, tau: i64) -> Result<VarSet, SemigroupError> {
    check_family_tau(id, tau)?;
    let t = 6 * tau;
    Ok(match id {
        1 => VarSet::new(&[
            ("X", 6),
            ("Y3", 3 + t),
            ("Y4", 4 + t),
            ("Y7", 7 + t),
            ("Y8", 8 + t),
        ]),
        2 => VarSet::new(&[
            ("X", 6),
            ("Y7", 7 + t),
            ("Y8", 8 + t),
            ("Y9", 9 + t),
            ("Y10", 10 + t),
        ]),
        _ => return Err(SemigroupError::BadFamily(id)),
    })
}

// A form is a pair of monomials: (label, weight index, plus-exponents,
// minus-exponents), exponents over (X, Y_a, Y_b, Y_c, Y_d).
type FormData = (&'static str, i64, [u32; 5], [u32; 5]);

fn form_data(id: u8, tau: i64) -> Vec<FormData> {
    let t = tau as u32;
    match id {
        1 => vec![
            ("F6", 6, [0, 2, 0, 0, 0], [2 * t + 1, 0, 0, 0, 0]),
            ("F7", 7, [0, 1, 1, 0, 0], [t, 0, 0, 1, 0]),
            ("G8", 8, [0, 0, 2, 0, 0], [t, 0, 0, 0, 1]),
            ("G10", 10, [0, 1, 0, 1, 0], [t + 1, 0, 1, 0, 0]),
            ("F11", 11, [0, 0, 1, 1, 0], [0, 1, 0, 0, 1]),
            ("F12", 12, [0, 0, 1, 0, 1], [2 * t + 2, 0, 0, 0, 0]),
            ("F14", 14, [0, 0, 0, 2, 0], [t + 1, 0, 0, 0, 1]),
            ("F15", 15, [0, 0, 0, 1, 1], [t + 2, 1, 0, 0, 0]),
            ("G16", 16, [0, 0, 0, 0, 2], [t + 2, 0, 1, 0, 0]),
        ],
        _ => vec![
            ("F14", 14, [0, 2, 0, 0, 0], [t + 1, 0, 1, 0, 0]),
            ("F15", 15, [0, 1, 1, 0, 0], [t + 1, 0, 0, 1, 0]),
            ("F16", 16, [0, 1, 0, 1, 0], [t + 1, 0, 0, 0, 1]),
            ("G16", 16, [0, 0, 2, 0, 0], [t + 1, 0, 0, 0, 1]),
            ("F17", 17, [0, 0, 1, 1, 0], [0, 1, 0, 0, 1]),
            ("F18", 18, [0, 0, 1, 0, 1], [2 * t + 3, 0, 0, 0, 0]),
            ("G18", 18, [0, 0, 0, 2, 0], [2 * t + 3, 0, 0, 0, 0]),
            ("G19", 19, [0, 0, 0, 1, 1], [t + 2, 1, 0, 0, 0]),
            ("G20", 20, [0, 0, 0, 0, 2], [t + 2, 0, 1, 0, 0]),
        ],
    }
}

/// The nine generating binomials of the family ideal, in weight order.
pub fn family_initial_forms(id: u8, tau: i64) -> Result<Vec<InitialForm>, SemigroupError> {
    check_family_tau(id, tau)?;
    if id == 3 {
        // family 3's generators are not part of the family data; they come
        // out of the generic presentation machinery instead
        return Err(SemigroupError::BadFamily(id));
    }
    let vars = family_vars(id, tau)?;
    Ok(form_data(id, tau)
        .into_iter()
        .map(|(label, weight_index, plus, minus)| InitialForm {
            label,
            weight_index,
            poly: &WeightedPolynomial::monomial(&vars, &plus, 1)
                - &WeightedPolynomial::monomial(&vars, &minus, 1),
        })
        .collect())
}

// Syzygies as signed monomial multiples of the labelled forms. The
// multiplier is an exponent vector over the family variables.
type SyzygyData = Vec<(i64, [u32; 5], &'static str)>;

fn syzygy_data(id: u8, tau: i64) -> Vec<SyzygyData> {
    let t = tau as u32;
    match id {
        1 => vec![
            // Y4 F6 - Y3 F7 - X^t G10
            vec![
                (1, [0, 0, 1, 0, 0], "F6"),
                (-1, [0, 1, 0, 0, 0], "F7"),
                (-1, [t, 0, 0, 0, 0], "G10"),
            ],
            // X Y4 F7 - Y7 G10 + Y3 F14 - X Y3 G8
            vec![
                (1, [1, 0, 1, 0, 0], "F7"),
                (-1, [0, 0, 0, 1, 0], "G10"),
                (1, [0, 1, 0, 0, 0], "F14"),
                (-1, [1, 1, 0, 0, 0], "G8"),
            ],
            // Y4 F11 - Y7 G8 + Y8 F7
            vec![
                (1, [0, 0, 1, 0, 0], "F11"),
                (-1, [0, 0, 0, 1, 0], "G8"),
                (1, [0, 0, 0, 0, 1], "F7"),
            ],
            // Y4 F12 - Y8 G8 - X^t G16
            vec![
                (1, [0, 0, 1, 0, 0], "F12"),
                (-1, [0, 0, 0, 0, 1], "G8"),
                (-1, [t, 0, 0, 0, 0], "G16"),
            ],
            // Y4 F14 - Y8 G10 - Y7 F11
            vec![
                (1, [0, 0, 1, 0, 0], "F14"),
                (-1, [0, 0, 0, 0, 1], "G10"),
                (-1, [0, 0, 0, 1, 0], "F11"),
            ],
            // Y4 F15 - Y8 F11 - Y3 G16
            vec![
                (1, [0, 0, 1, 0, 0], "F15"),
                (-1, [0, 0, 0, 0, 1], "F11"),
                (-1, [0, 1, 0, 0, 0], "G16"),
            ],
        ],
        _ => vec![
            // Y10 F14 - Y8 F16 + Y7 F17
            vec![
                (1, [0, 0, 0, 0, 1], "F14"),
                (-1, [0, 0, 1, 0, 0], "F16"),
                (1, [0, 1, 0, 0, 0], "F17"),
            ],
            // Y10 F15 - Y9 G16 + Y8 F17
            vec![
                (1, [0, 0, 0, 0, 1], "F15"),
                (-1, [0, 0, 0, 1, 0], "G16"),
                (1, [0, 0, 1, 0, 0], "F17"),
            ],
            // Y10 G16 - Y8 F18 + X^{t+1} G20
            vec![
                (1, [0, 0, 0, 0, 1], "G16"),
                (-1, [0, 0, 1, 0, 0], "F18"),
                (1, [t + 1, 0, 0, 0, 0], "G20"),
            ],
            // Y10 F17 - Y8 G19 + Y7 G20
            vec![
                (1, [0, 0, 0, 0, 1], "F17"),
                (-1, [0, 0, 1, 0, 0], "G19"),
                (1, [0, 1, 0, 0, 0], "G20"),
            ],
            // Y10 F18 - X^{t+2} G16 - Y8 G20
            vec![
                (1, [0, 0, 0, 0, 1], "F18"),
                (-1, [t + 2, 0, 0, 0, 0], "G16"),
                (-1, [0, 0, 1, 0, 0], "G20"),
            ],
            // Y10 G18 - X^{t+2} F16 - Y9 G19
            vec![
                (1, [0, 0, 0, 0, 1], "G18"),
                (-1, [t + 2, 0, 0, 0, 0], "F16"),
                (-1, [0, 0, 0, 1, 0], "G19"),
            ],
            // Y10 G19 - X^{t+2} F17 - Y9 G20
            vec![
                (1, [0, 0, 0, 0, 1], "G19"),
                (-1, [t + 2, 0, 0, 0, 0], "F17"),
                (-1, [0, 0, 0, 1, 0], "G20"),
            ],
        ],
    }
}

fn describe_syzygy(vars: &VarSet, terms: &SyzygyData) -> String {
    let mut out = String::new();
    for (i, (sign, mult, label)) in terms.iter().enumerate() {
        if i == 0 {
            if *sign < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if *sign < 0 { " - " } else { " + " });
        }
        for (j, &e) in mult.iter().enumerate() {
            if e == 1 {
                out.push_str(&vars.names[j]);
            } else if e > 1 {
                out.push_str(&format!("{}^{}", vars.names[j], e));
            }
        }
        out.push_str(label);
    }
    out
}

/// Substitutes the monomial curve `X <- t^6`, `Y_j <- t^{j + 6 tau}` into
/// each of the nine generating binomials and checks exact vanishing.
pub fn verify_parametrization(id: u8, tau: i64) -> Result<(), ParametrizationFailure> {
    let forms = family_initial_forms(id, tau).expect("families 1 and 2 carry explicit forms");
    for f in &forms {
        let residue = f.poly.substitute_weights();
        if !residue.is_empty() {
            return Err(ParametrizationFailure {
                form: f.label,
                residue: residue.into_iter().collect(),
            });
        }
    }
    Ok(())
}

/// Expands the listed syzygies (six for family 1, seven for family 2) in the
/// polynomial engine and checks that each is identically zero.
pub fn verify_syzygies(id: u8, tau: i64) -> Result<(), SyzygyFailure> {
    let vars = family_vars(id, tau).expect("families 1 and 2 carry explicit forms");
    let forms = family_initial_forms(id, tau).expect("families 1 and 2 carry explicit forms");
    let lookup = |label: &str| {
        forms
            .iter()
            .find(|f| f.label == label)
            .expect("syzygy references a listed form")
    };
    for terms in syzygy_data(id, tau) {
        let mut acc = WeightedPolynomial::zero(&vars);
        for (sign, mult, label) in &terms {
            let m = WeightedPolynomial::monomial(&vars, mult, *sign);
            acc = &acc + &(&m * &lookup(label).poly);
        }
        if !acc.is_zero() {
            return Err(SyzygyFailure {
                syzygy: describe_syzygy(&vars, &terms),
                remainder: acc.to_string(),
            });
        }
    }
    Ok(())
}

/// Size of the monomial basis of the bicanonical sections, counted from the
/// explicit index ranges; always `3g - 3`.
pub fn bicanonical_basis_size(id: u8, tau: i64) -> Result<i64, SemigroupError> {
    check_family_tau(id, tau)?;
    let count = match id {
        // x^i (i <= 4t+1), x^i y_j (i <= 3t, four j), x^i y_3 y_8 (i <= 2t-1)
        1 => (4 * tau + 2) + 4 * (3 * tau + 1) + 2 * tau,
        // x^i (i <= 4t+3), x^i y_j (i <= 3t+2 for j = 7, 8; i <= 3t+1 for
        // j = 9, 10), x^i y_7 y_10 (i <= 2t)
        2 => (4 * tau + 4) + 2 * (3 * tau + 3) + 2 * (3 * tau + 2) + (2 * tau + 1),
        _ => return Err(SemigroupError::BadFamily(id)),
    };
    let genus = family_expected_invariants(id, tau)?.genus;
    debug_assert_eq!(count, 3 * genus - 3);
    Ok(count)
}

/// The binomial `X^alpha - X^beta` of a relation over the family variables.
pub fn relation_polynomial(vars: &VarSet, rel: &BinomialRelation) -> WeightedPolynomial {
    let to_u32 = |v: &[i64]| v.iter().map(|&x| x as u32).collect::<Vec<_>>();
    &WeightedPolynomial::monomial(vars, &to_u32(&rel.alpha.exponents), 1)
        - &WeightedPolynomial::monomial(vars, &to_u32(&rel.beta.exponents), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation;

    #[test]
    fn family_members() {
        let s = family_semigroup(1, 1).unwrap();
        assert_eq!(s.generators(), &[6, 9, 10, 13, 14]);
        assert_eq!(s.genus(), 9);
        assert_eq!(s.frobenius(), 17);
        assert!(s.is_symmetric());

        let s = family_semigroup(2, 1).unwrap();
        assert_eq!(s.generators(), &[6, 13, 14, 15, 16]);
        assert_eq!(s.genus(), 12);

        let s = family_semigroup(3, 1).unwrap();
        assert_eq!(s.generators(), &[6, 8, 9, 10, 11]);
    }

    #[test]
    fn family_closed_forms_match_construction() {
        for id in 1..=3u8 {
            for tau in 1..=6 {
                let spec = family_expected_invariants(id, tau).unwrap();
                let s = family_semigroup(id, tau).unwrap();
                assert_eq!(s.genus(), spec.genus, "family {id}, tau {tau}");
                assert_eq!(s.frobenius(), spec.largest_gap);
                assert!(s.is_symmetric());
                assert_eq!(s.lambda(), 1);
                assert_eq!(3 * s.genus() - 2 - s.effective_weight(), spec.np);
                assert_eq!(2 * s.genus() - 2 + 1, spec.dp);
            }
        }
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(family_semigroup(0, 1), Err(SemigroupError::BadFamily(0)));
        assert_eq!(family_semigroup(4, 1), Err(SemigroupError::BadFamily(4)));
        assert_eq!(family_semigroup(1, 0), Err(SemigroupError::BadTau(0)));
        assert_eq!(
            family_initial_forms(3, 1).err(),
            Some(SemigroupError::BadFamily(3))
        );
    }

    #[test]
    fn initial_form_examples() {
        // F6 at tau = 1 is Y3^2 - X^3, weight 18
        let forms = family_initial_forms(1, 1).unwrap();
        let f6 = &forms[0];
        assert_eq!(f6.label, "F6");
        assert_eq!(f6.poly.to_string(), "Y3^2 - X^3");
        assert_eq!(f6.poly.isobaric_weight(), Some(18));

        // G16 of family 1 is Y8^2 - X^{tau+2} Y4
        for tau in 1..=4 {
            let forms = family_initial_forms(1, tau).unwrap();
            let g16 = forms.iter().find(|f| f.label == "G16").unwrap();
            assert_eq!(g16.poly.isobaric_weight(), Some(12 * tau + 16));
            let expected = format!("Y8^2 - X^{}*Y4", tau + 2);
            assert_eq!(g16.poly.to_string(), expected);
        }

        // G18 of family 2 is Y9^2 - X^{2 tau + 3}
        for tau in 1..=4 {
            let forms = family_initial_forms(2, tau).unwrap();
            let g18 = forms.iter().find(|f| f.label == "G18").unwrap();
            assert_eq!(g18.poly.isobaric_weight(), Some(12 * tau + 18));
            assert_eq!(g18.poly.to_string(), format!("Y9^2 - X^{}", 2 * tau + 3));
        }
    }

    #[test]
    fn forms_are_isobaric_with_printed_weights() {
        for id in [1u8, 2] {
            for tau in 1..=10 {
                for f in family_initial_forms(id, tau).unwrap() {
                    assert_eq!(
                        f.poly.isobaric_weight(),
                        Some(12 * tau + f.weight_index),
                        "family {id}, tau {tau}, form {}",
                        f.label
                    );
                }
            }
        }
    }

    #[test]
    fn parametrization_vanishes() {
        for id in [1u8, 2] {
            for tau in [1, 3, 5] {
                assert_eq!(verify_parametrization(id, tau), Ok(()));
            }
        }
    }

    #[test]
    fn syzygies_vanish() {
        for id in [1u8, 2] {
            for tau in [1, 2, 10] {
                assert_eq!(verify_syzygies(id, tau), Ok(()), "family {id} tau {tau}");
            }
        }
    }

    #[test]
    fn syzygy_description_is_readable() {
        let vars = family_vars(1, 1).unwrap();
        let terms = &syzygy_data(1, 1)[0];
        assert_eq!(describe_syzygy(&vars, terms), "Y4F6 - Y3F7 - XG10");
    }

    #[test]
    fn bicanonical_sizes() {
        assert_eq!(bicanonical_basis_size(1, 1).unwrap(), 24);
        for tau in 1..=10 {
            assert_eq!(bicanonical_basis_size(1, tau).unwrap(), 18 * tau + 6);
            assert_eq!(bicanonical_basis_size(2, tau).unwrap(), 18 * tau + 15);
        }
    }

    #[test]
    fn presentation_reproduces_initial_forms() {
        for id in [1u8, 2] {
            for tau in 1..=3 {
                let s = family_semigroup(id, tau).unwrap();
                let p = presentation::minimal_presentation(&s).unwrap();
                assert_eq!(p.relations.len(), 9);
                let vars = family_vars(id, tau).unwrap();
                let mut forms = family_initial_forms(id, tau).unwrap();
                for rel in &p.relations {
                    let poly = relation_polynomial(&vars, rel);
                    let hit = forms
                        .iter()
                        .position(|f| f.poly == poly || f.poly == -&poly);
                    let hit = hit.unwrap_or_else(|| {
                        panic!("family {id} tau {tau}: unmatched relation {poly}")
                    });
                    forms.remove(hit);
                }
                assert!(forms.is_empty());
            }
        }
    }

    #[test]
    fn expected_invariant_examples() {
        let f = family_expected_invariants(1, 2).unwrap();
        assert_eq!((f.np, f.dp, f.t1_plus, f.t1_minus), (23, 29, 6, Some(30)));
        let f = family_expected_invariants(2, 1).unwrap();
        assert_eq!((f.np, f.dp, f.t1_plus, f.t1_minus), (19, 23, 4, Some(26)));
        let f = family_expected_invariants(3, 1).unwrap();
        assert_eq!((f.np, f.dp, f.t1_plus, f.t1_minus), (13, 13, 0, None));
    }
}
