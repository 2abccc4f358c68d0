//! Canonical representation of a numerical semigroup and its elementary
//! invariants: gaps, genus, Frobenius number, Apéry sets, symmetry, the
//! endomorphism gaps λ and the effective weight.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SemigroupError;
use crate::linalg::gcd;

/// Hard cap on the internal membership table, guarding against inputs whose
/// Frobenius number would not fit in memory.
const MAX_TABLE_LEN: usize = 1 << 26;

/// A numerical semigroup: a cofinite subset of the nonnegative integers that
/// contains 0 and is closed under addition.
///
/// The value is canonical and immutable: `generators` is the minimal
/// generating set, `gaps` the sorted complement, and membership queries are
/// answered from a table that covers every degree up to the Frobenius number
/// plus the largest generator (queries above the table are members).
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    gaps: Vec<i64>,
    frobenius: i64,
    genus: i64,
    membership: Vec<bool>,
}

/// The gaps that remain gaps under translation by every positive member,
/// i.e. `gaps(N) ∩ End(N)`. Their count λ is the correction term of the
/// upper moduli bound `2g - 2 + λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndSet {
    pub endo_gaps: Vec<i64>,
    pub lambda: i64,
}

/// Flat record used for JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub generators: Vec<i64>,
    pub gaps: Vec<i64>,
    pub genus: i64,
    pub frobenius: i64,
    pub symmetric: bool,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. Redundant generators are
    /// pruned; the result always carries the minimal generating set.
    pub fn from_generators(gens: &[i64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyInput);
        }
        for &g in gens {
            if g <= 0 {
                return Err(SemigroupError::NonPositiveElement(g));
            }
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let g = sorted.iter().fold(0i64, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::GcdError { gcd: g });
        }

        let m = sorted[0] as usize;
        if m > MAX_TABLE_LEN {
            return Err(SemigroupError::InputTooLarge(format!("{gens:?}")));
        }
        // Apéry set of the multiplicity via Dijkstra on residues mod m:
        // ap[r] is the least member congruent to r.
        let mut ap = vec![i64::MAX; m];
        ap[0] = 0;
        let mut heap = std::collections::BinaryHeap::new();
        heap.push(std::cmp::Reverse((0i64, 0usize)));
        while let Some(std::cmp::Reverse((d, r))) = heap.pop() {
            if d > ap[r] {
                continue;
            }
            for &gen in &sorted {
                let v = d
                    .checked_add(gen)
                    .ok_or_else(|| SemigroupError::InputTooLarge(format!("{gens:?}")))?;
                let nr = (v % m as i64) as usize;
                if v < ap[nr] {
                    ap[nr] = v;
                    heap.push(std::cmp::Reverse((v, nr)));
                }
            }
        }
        let frobenius = ap.iter().copied().max().unwrap() - m as i64;
        Self::from_parts(frobenius, |n| n >= ap[(n % m as i64) as usize], gens)
    }

    /// Builds the semigroup whose gap set is exactly `gaps`. Fails when the
    /// complement is not closed under addition.
    pub fn from_gaps(gaps: &[i64]) -> Result<Self, SemigroupError> {
        for &l in gaps {
            if l <= 0 {
                return Err(SemigroupError::NonPositiveElement(l));
            }
        }
        let mut sorted = gaps.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Self::from_generators(&[1]);
        }
        let frobenius = *sorted.last().unwrap();
        let is_gap = |n: i64| sorted.binary_search(&n).is_ok();
        // Closure check: a gap must not decompose as a sum of two members.
        for &l in &sorted {
            for a in 1..=l / 2 {
                let b = l - a;
                if !is_gap(a) && !is_gap(b) {
                    return Err(SemigroupError::NotASemigroup { a, b, sum: l });
                }
            }
        }
        Self::from_parts(frobenius, |n| !is_gap(n), &[])
    }

    /// The full semigroup of all nonnegative integers.
    pub fn trivial() -> Self {
        Self::from_generators(&[1]).expect("<1> is a valid semigroup")
    }

    fn from_parts(
        frobenius: i64,
        member: impl Fn(i64) -> bool,
        input: &[i64],
    ) -> Result<Self, SemigroupError> {
        // Provisional table up to F+1; extended below once the largest
        // minimal generator is known. Queries above the table are members.
        let table_len = usize::try_from(frobenius + 2)
            .ok()
            .filter(|&n| n <= MAX_TABLE_LEN)
            .ok_or_else(|| {
                SemigroupError::InputTooLarge(format!(
                    "Frobenius number {frobenius} from input {input:?}"
                ))
            })?;
        let mut membership: Vec<bool> = (0..table_len as i64).map(&member).collect();
        let contains = |t: &[bool], n: i64| n >= 0 && (n >= t.len() as i64 || t[n as usize]);

        let mut gaps = Vec::new();
        for n in 1..=frobenius {
            if !contains(&membership, n) {
                gaps.push(n);
            }
        }
        let genus = gaps.len() as i64;

        // Minimal generators are positive members not expressible as a sum
        // of two positive members; all of them lie at or below F + m.
        let multiplicity = (1..).find(|&n| contains(&membership, n)).unwrap();
        let mut generators = Vec::new();
        for n in 1..=(frobenius + multiplicity).max(multiplicity) {
            if !contains(&membership, n) {
                continue;
            }
            let decomposable = (1..=n / 2)
                .any(|p| contains(&membership, p) && contains(&membership, n - p));
            if !decomposable {
                generators.push(n);
            }
        }

        let max_gen = *generators.last().unwrap();
        let full_len = usize::try_from(frobenius + 2 + max_gen)
            .ok()
            .filter(|&n| n <= MAX_TABLE_LEN)
            .ok_or_else(|| {
                SemigroupError::InputTooLarge(format!(
                    "membership table for Frobenius {frobenius}, generator {max_gen}"
                ))
            })?;
        membership.resize(full_len, true);

        Ok(Self {
            generators,
            gaps,
            frobenius,
            genus,
            membership,
        })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    /// The largest gap, or -1 for the full semigroup.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// The smallest positive member.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Membership test for an arbitrary integer; negative integers are never
    /// members.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        if n >= self.membership.len() as i64 {
            return true;
        }
        self.membership[n as usize]
    }

    /// True when the Frobenius number attains its maximum 2g - 1, i.e. when
    /// membership of `n` and of `F - n` are complementary on `[0, F]`.
    pub fn is_symmetric(&self) -> bool {
        let symmetric = self.frobenius == 2 * self.genus - 1;
        if self.genus >= 1 {
            debug_assert_eq!(
                symmetric,
                (0..=self.frobenius).all(|n| self.contains(n) != self.contains(self.frobenius - n))
            );
        }
        symmetric
    }

    /// The Apéry set of a positive member `n`: for each residue class mod
    /// `n`, the least member in that class, listed by residue 0, 1, .., n-1.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>, SemigroupError> {
        if n <= 0 || !self.contains(n) {
            return Err(SemigroupError::NotAMember(n));
        }
        let mut ap = vec![i64::MAX; n as usize];
        let mut found = 0usize;
        let mut v = 0i64;
        while found < n as usize {
            let r = (v % n) as usize;
            if ap[r] == i64::MAX && self.contains(v) {
                ap[r] = v;
                found += 1;
            }
            v += 1;
        }
        Ok(ap)
    }

    /// True when `z + n` is a member for every positive member `n`. Holds for
    /// every member, every integer above `F - multiplicity`, and for exactly
    /// λ of the gaps.
    pub fn is_endo_degree(&self, z: i64) -> bool {
        if z + self.multiplicity() < 0 {
            return false;
        }
        // Members n > F - z land above the Frobenius number, so only the
        // finitely many below need checking.
        let mut n = 1;
        while n <= self.frobenius - z {
            if self.contains(n) && !self.contains(z + n) {
                return false;
            }
            n += 1;
        }
        true
    }

    /// The gaps fixed by every positive translation, with their count λ.
    pub fn end_set(&self) -> EndSet {
        let endo_gaps: Vec<i64> = self
            .gaps
            .iter()
            .copied()
            .filter(|&l| self.is_endo_degree(l))
            .collect();
        let lambda = endo_gaps.len() as i64;
        EndSet { endo_gaps, lambda }
    }

    /// λ = number of endomorphism gaps.
    pub fn lambda(&self) -> i64 {
        self.end_set().lambda
    }

    /// Sum over all gaps of the number of minimal generators strictly below
    /// the gap.
    pub fn effective_weight(&self) -> i64 {
        self.gaps
            .iter()
            .map(|&l| self.generators.iter().filter(|&&a| a < l).count() as i64)
            .sum()
    }

    pub fn record(&self) -> SemigroupRecord {
        SemigroupRecord {
            generators: self.generators.clone(),
            gaps: self.gaps.clone(),
            genus: self.genus,
            frobenius: self.frobenius,
            symmetric: self.is_symmetric(),
        }
    }

    /// Parses the textual forms `"6,7,8"` (generators) and
    /// `"gaps:1,2,4,5,8"` (gap set).
    pub fn parse(text: &str) -> Result<Self, SemigroupError> {
        let text = text.trim();
        let (by_gaps, list) = match text.strip_prefix("gaps:") {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let values = parse_comma_list(list)?;
        if by_gaps {
            Self::from_gaps(&values)
        } else {
            Self::from_generators(&values)
        }
    }
}

pub(crate) fn parse_comma_list(list: &str) -> Result<Vec<i64>, SemigroupError> {
    let list = list.trim();
    if list.is_empty() {
        return Err(SemigroupError::EmptyInput);
    }
    list.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| SemigroupError::InputTooLarge(format!("cannot parse `{tok}`")))
        })
        .collect()
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by genus, then lexicographically by gap set — the canonical
/// enumeration order.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.genus
            .cmp(&other.genus)
            .then_with(|| self.gaps.cmp(&other.gaps))
    }
}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.generators.hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn from_generators_examples() {
        let s = sg(&[6, 7, 8]);
        assert_eq!(s.genus(), 9);
        assert_eq!(s.frobenius(), 17);
        assert_eq!(s.gaps(), &[1, 2, 3, 4, 5, 9, 10, 11, 17]);

        let full = sg(&[1]);
        assert_eq!(full.genus(), 0);
        assert_eq!(full.frobenius(), -1);
        assert!(full.gaps().is_empty());

        let s = sg(&[2, 3]);
        assert_eq!(s.gaps(), &[1]);
        assert_eq!(s.genus(), 1);
        assert_eq!(s.frobenius(), 1);
    }

    #[test]
    fn from_generators_prunes_redundant() {
        assert_eq!(sg(&[2, 3, 4, 5]).generators(), &[2, 3]);
        assert_eq!(sg(&[6, 7, 8, 13, 20]).generators(), &[6, 7, 8]);
    }

    #[test]
    fn from_generators_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(SemigroupError::EmptyInput)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(SemigroupError::GcdError { gcd: 2 })
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(SemigroupError::NonPositiveElement(0))
        );
    }

    #[test]
    fn from_gaps_examples() {
        let s = NumericalSemigroup::from_gaps(&[1, 2, 4, 5, 8]).unwrap();
        assert_eq!(s.generators(), &[3, 7, 11]);
        assert_eq!(s.genus(), 5);
        assert_eq!(s.frobenius(), 8);

        let s = NumericalSemigroup::from_gaps(&[1]).unwrap();
        assert_eq!(s.generators(), &[2, 3]);

        assert_eq!(
            NumericalSemigroup::from_gaps(&[2]),
            Err(SemigroupError::NotASemigroup { a: 1, b: 1, sum: 2 })
        );
    }

    #[test]
    fn gap_and_generator_roundtrip() {
        for gens in [vec![2, 3], vec![6, 7, 8], vec![3, 7, 11], vec![6, 7, 15]] {
            let s = sg(&gens);
            let back = NumericalSemigroup::from_gaps(s.gaps()).unwrap();
            assert_eq!(back.generators(), s.generators());
            let again = NumericalSemigroup::from_generators(s.generators()).unwrap();
            assert_eq!(again.gaps(), s.gaps());
        }
    }

    #[test]
    fn symmetry() {
        assert!(sg(&[6, 7, 8]).is_symmetric());
        assert!(!sg(&[3, 4, 5]).is_symmetric());
        assert!(sg(&[2, 3]).is_symmetric());
        // membership XOR mirrored membership on [0, F]
        let s = sg(&[6, 7, 8]);
        for n in 0..=s.frobenius() {
            assert!(s.contains(n) ^ s.contains(s.frobenius() - n));
        }
    }

    #[test]
    fn apery_sets() {
        assert_eq!(sg(&[2, 3]).apery_set(2).unwrap(), vec![0, 3]);
        // class 3 mod 6 starts at 15 = 7 + 8, class 5 mod 6 at 23 = 7 + 8 + 8
        assert_eq!(sg(&[6, 7, 8]).apery_set(6).unwrap(), vec![0, 7, 8, 15, 16, 23]);
        assert_eq!(sg(&[3, 7, 11]).apery_set(3).unwrap(), vec![0, 7, 11]);
        assert_eq!(
            sg(&[2, 3]).apery_set(1),
            Err(SemigroupError::NotAMember(1))
        );
        assert_eq!(
            sg(&[6, 7, 8]).apery_set(9),
            Err(SemigroupError::NotAMember(9))
        );
    }

    #[test]
    fn apery_elements_are_least_members_per_class() {
        for (gens, n) in [(vec![6, 7, 8], 6i64), (vec![3, 7, 11], 3), (vec![6, 7, 15], 7)] {
            let s = sg(&gens);
            let ap = s.apery_set(n).unwrap();
            for (r, &a) in ap.iter().enumerate() {
                assert_eq!(a % n, r as i64);
                assert!(s.contains(a));
                let mut smaller = a - n;
                while smaller >= 0 {
                    assert!(!s.contains(smaller));
                    smaller -= n;
                }
            }
        }
    }

    #[test]
    fn end_lambda_examples() {
        let s = NumericalSemigroup::from_gaps(&[1, 2, 4, 5, 8]).unwrap();
        let end = s.end_set();
        assert_eq!(end.endo_gaps, vec![4, 8]);
        assert_eq!(end.lambda, 2);

        assert_eq!(sg(&[6, 7, 8]).lambda(), 1);
        assert_eq!(sg(&[2, 3]).lambda(), 1);
    }

    #[test]
    fn endo_degree_examples() {
        let s = sg(&[2, 3]);
        assert!(s.is_endo_degree(1));
        assert!(!s.is_endo_degree(-1));
        assert!(!sg(&[6, 7, 8]).is_endo_degree(11));
        // every degree at or above the Frobenius number is an endo degree
        for z in s.frobenius()..=s.frobenius() + 50 {
            assert!(s.is_endo_degree(z));
        }
        let s = sg(&[6, 7, 8]);
        for z in s.frobenius()..=s.frobenius() + 50 {
            assert!(s.is_endo_degree(z));
        }
        // members and 0 are always endo degrees
        assert!(s.is_endo_degree(0));
        assert!(s.is_endo_degree(6));
        assert!(!s.is_endo_degree(-100));
    }

    #[test]
    fn effective_weight_examples() {
        assert_eq!(sg(&[6, 7, 8]).effective_weight(), 12);
        assert_eq!(
            NumericalSemigroup::from_gaps(&[1, 2, 4, 5, 8])
                .unwrap()
                .effective_weight(),
            4
        );
        assert_eq!(sg(&[2, 3]).effective_weight(), 0);
        assert_eq!(sg(&[6, 7, 15]).effective_weight(), 17);
    }

    #[test]
    fn lambda_bounds() {
        for gens in [vec![2, 3], vec![3, 4, 5], vec![6, 7, 8], vec![6, 7, 15]] {
            let s = sg(&gens);
            let l = s.lambda();
            assert!(l >= 1 && l <= s.genus());
            // the Frobenius number is always an endo gap
            assert!(s.is_endo_degree(s.frobenius()));
        }
    }

    #[test]
    fn parse_and_display() {
        let s = NumericalSemigroup::parse("6,7,8").unwrap();
        assert_eq!(s.to_string(), "6,7,8");
        let s = NumericalSemigroup::parse("gaps:1,2,4,5,8").unwrap();
        assert_eq!(s.generators(), &[3, 7, 11]);
        assert!(NumericalSemigroup::parse("6, 7, x").is_err());
    }

    #[test]
    fn record_fields() {
        let r = sg(&[6, 7, 8]).record();
        assert_eq!(r.genus, 9);
        assert_eq!(r.frobenius, 17);
        assert!(r.symmetric);
        assert_eq!(r.generators, vec![6, 7, 8]);
    }
}
