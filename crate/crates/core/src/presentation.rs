//! Factorizations, Betti degrees and minimal binomial presentations of the
//! toric ideal of the monomial curve `(t^{a_1}, .., t^{a_r})`.
//!
//! The minimal generators are found degree by degree: at each member `n` the
//! factorizations of `n` form a graph whose edges join factorizations
//! sharing a generator in their supports. A degree contributes
//! `components - 1` minimal binomials, one per component beyond the first.
//! Degrees above `F + a_{r-1} + a_r` never contribute: there
//! `n - a_i - a_j > F` is a member for any two generators, which glues all
//! factorizations together.

use serde::Serialize;

use crate::error::SemigroupError;
use crate::linalg;
use crate::semigroup::NumericalSemigroup;

/// A factorization of `degree` over the minimal generators:
/// `sum_j exponents[j] * a_j = degree`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Factorization {
    pub exponents: Vec<i64>,
    pub degree: i64,
}

/// A binomial `X^alpha - X^beta` vanishing on the monomial curve: both
/// factorizations have the same degree and disjoint supports, and the
/// lattice vector `alpha - beta` is orthogonal to the generator vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialRelation {
    pub alpha: Factorization,
    pub beta: Factorization,
    pub degree: i64,
    pub lattice_vector: Vec<i64>,
}

/// A minimal binomial generating set together with its Betti degrees
/// (sorted, with multiplicity).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<i64>,
    pub relations: Vec<BinomialRelation>,
    pub betti_degrees: Vec<i64>,
}

/// Representative choice when a component holds several factorizations.
///
/// `LexMax` keeps the lexicographically largest exponent vector of each
/// component and orders components descending; the surviving representative
/// of the first component is then the factorization maximizing the power of
/// the multiplicity generator, which is the normal form on the curve. This
/// is the default. `LexMin` is the mirror-image rule, kept as an independent
/// tie-break for invariance checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LexMax,
    LexMin,
}

/// All factorizations of `n`, lexicographically sorted; empty when `n` is
/// not a member.
pub fn factorizations(s: &NumericalSemigroup, n: i64) -> Vec<Factorization> {
    let gens = s.generators();
    let mut out = Vec::new();
    let mut current = vec![0i64; gens.len()];
    recurse(gens, 0, n, &mut current, &mut out);
    out.iter_mut().for_each(|f| f.degree = n);
    out
}

fn recurse(
    gens: &[i64],
    idx: usize,
    remaining: i64,
    current: &mut Vec<i64>,
    out: &mut Vec<Factorization>,
) {
    if idx + 1 == gens.len() {
        if remaining % gens[idx] == 0 {
            current[idx] = remaining / gens[idx];
            out.push(Factorization {
                exponents: current.clone(),
                degree: 0,
            });
            current[idx] = 0;
        }
        return;
    }
    for k in 0..=remaining / gens[idx] {
        current[idx] = k;
        recurse(gens, idx + 1, remaining - k * gens[idx], current, out);
    }
    current[idx] = 0;
}

/// The Betti degrees of the semigroup ideal as a sorted multiset: degree `n`
/// appears once per factorization-graph component beyond the first.
pub fn betti_elements(s: &NumericalSemigroup) -> Result<Vec<i64>, SemigroupError> {
    let bound = search_bound(s)?;
    Ok(betti_elements_up_to(s, bound))
}

/// Betti degrees restricted to `n <= max_degree`. The unrestricted set is
/// recovered with the bound from `F + a_{r-1} + a_r`; larger windows are
/// useful to test that the bound is sound.
pub fn betti_elements_up_to(s: &NumericalSemigroup, max_degree: i64) -> Vec<i64> {
    let mut out = Vec::new();
    for n in 1..=max_degree {
        if !s.contains(n) {
            continue;
        }
        let facs = factorizations(s, n);
        if facs.len() < 2 {
            continue;
        }
        let comps = components(&facs);
        for _ in 1..component_count(&comps) {
            out.push(n);
        }
    }
    out
}

fn search_bound(s: &NumericalSemigroup) -> Result<i64, SemigroupError> {
    let gens = s.generators();
    if s.genus() == 0 || gens.len() < 2 {
        return Err(SemigroupError::GenusZero);
    }
    Ok(s.frobenius() + gens[gens.len() - 2] + gens[gens.len() - 1])
}

/// Union-find labels of the support-sharing graph on `facs`.
fn components(facs: &[Factorization]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..facs.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..facs.len() {
        for j in i + 1..facs.len() {
            let share = facs[i]
                .exponents
                .iter()
                .zip(&facs[j].exponents)
                .any(|(&x, &y)| x > 0 && y > 0);
            if share {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    (0..facs.len()).map(|i| find(&mut parent, i)).collect()
}

fn component_count(labels: &[usize]) -> usize {
    let mut roots: Vec<usize> = labels.to_vec();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Minimal binomial presentation under the default tie-break.
pub fn minimal_presentation(s: &NumericalSemigroup) -> Result<Presentation, SemigroupError> {
    minimal_presentation_with(s, TieBreak::default())
}

/// Minimal binomial presentation, one relation per missing edge of each
/// degree's factorization graph. Representatives inside components and the
/// component order follow `tie`; relations pair the first component's
/// representative with each of the others. Factorizations in distinct
/// components never share support, so the two sides of every relation have
/// disjoint supports.
pub fn minimal_presentation_with(
    s: &NumericalSemigroup,
    tie: TieBreak,
) -> Result<Presentation, SemigroupError> {
    let bound = search_bound(s)?;
    let mut relations = Vec::new();
    let mut betti_degrees = Vec::new();
    for n in 1..=bound {
        if !s.contains(n) {
            continue;
        }
        let facs = factorizations(s, n);
        if facs.len() < 2 {
            continue;
        }
        let labels = components(&facs);
        let mut reps: Vec<&Factorization> = Vec::new();
        let mut seen: Vec<usize> = Vec::new();
        for (i, &label) in labels.iter().enumerate() {
            match seen.iter().position(|&l| l == label) {
                Some(k) => {
                    let better = match tie {
                        TieBreak::LexMax => facs[i].exponents > reps[k].exponents,
                        TieBreak::LexMin => facs[i].exponents < reps[k].exponents,
                    };
                    if better {
                        reps[k] = &facs[i];
                    }
                }
                None => {
                    seen.push(label);
                    reps.push(&facs[i]);
                }
            }
        }
        if reps.len() < 2 {
            continue;
        }
        match tie {
            TieBreak::LexMax => reps.sort_unstable_by(|a, b| b.exponents.cmp(&a.exponents)),
            TieBreak::LexMin => reps.sort_unstable_by(|a, b| a.exponents.cmp(&b.exponents)),
        }
        let first = reps[0];
        for other in &reps[1..] {
            debug_assert!(
                first
                    .exponents
                    .iter()
                    .zip(&other.exponents)
                    .all(|(&x, &y)| x == 0 || y == 0),
                "representatives of distinct components share support"
            );
            let lattice_vector: Vec<i64> = first
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&x, &y)| x - y)
                .collect();
            relations.push(BinomialRelation {
                alpha: first.clone(),
                beta: (*other).clone(),
                degree: n,
                lattice_vector,
            });
            betti_degrees.push(n);
        }
    }
    Ok(Presentation {
        generators: s.generators().to_vec(),
        relations,
        betti_degrees,
    })
}

/// Outcome of [`validate_presentation`]: either a pass or the first failed
/// check with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PresentationVerdict {
    Pass,
    Fail(PresentationDefect),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PresentationDefect {
    /// `v_i . a != 0` for the relation at this index.
    NotOrthogonal { relation: usize, dot: i64 },
    /// Substituting `X_j <- t^{a_j}` does not annihilate the binomial.
    NotVanishing { relation: usize },
    /// The lattice vectors do not span a rank `r - 1` lattice.
    RankDeficit { rank: usize, expected: usize },
    /// The spanned lattice sits at finite index > 1 inside the kernel.
    LatticeIndex { index: i64 },
}

impl PresentationVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, PresentationVerdict::Pass)
    }
}

/// Independent soundness check of a presentation: orthogonality of each
/// lattice vector, vanishing under the curve parametrization, and equality
/// of the spanned lattice with the full kernel lattice (rank `r - 1`, index
/// one via Smith normal form). Reports the first violation.
pub fn validate_presentation(
    s: &NumericalSemigroup,
    p: &Presentation,
) -> PresentationVerdict {
    let gens = s.generators();
    for (i, rel) in p.relations.iter().enumerate() {
        let dot: i64 = rel
            .lattice_vector
            .iter()
            .zip(gens)
            .map(|(&v, &a)| v * a)
            .sum();
        if dot != 0 {
            return PresentationVerdict::Fail(PresentationDefect::NotOrthogonal {
                relation: i,
                dot,
            });
        }
    }
    for (i, rel) in p.relations.iter().enumerate() {
        // X_j <- t^{a_j} sends the binomial to t^(alpha.a) - t^(beta.a)
        let da: i64 = rel.alpha.exponents.iter().zip(gens).map(|(&e, &a)| e * a).sum();
        let db: i64 = rel.beta.exponents.iter().zip(gens).map(|(&e, &a)| e * a).sum();
        if da != db || da != rel.degree {
            return PresentationVerdict::Fail(PresentationDefect::NotVanishing { relation: i });
        }
    }
    let expected = gens.len() - 1;
    let vectors: Vec<Vec<i64>> = p.relations.iter().map(|r| r.lattice_vector.clone()).collect();
    let rank = linalg::rank(&vectors);
    if rank != expected {
        return PresentationVerdict::Fail(PresentationDefect::RankDeficit { rank, expected });
    }
    let kb = linalg::kernel_basis(gens);
    let mut coords = Vec::with_capacity(vectors.len());
    for (i, v) in vectors.iter().enumerate() {
        match kb.coordinates(v) {
            Some(c) => coords.push(c),
            None => {
                return PresentationVerdict::Fail(PresentationDefect::NotOrthogonal {
                    relation: i,
                    dot: v.iter().zip(gens).map(|(&x, &a)| x * a).sum(),
                })
            }
        }
    }
    let diag = linalg::smith_diagonal(&coords);
    let index: i64 = diag.iter().product();
    if diag.len() != expected || index != 1 {
        return PresentationVerdict::Fail(PresentationDefect::LatticeIndex { index });
    }
    PresentationVerdict::Pass
}
