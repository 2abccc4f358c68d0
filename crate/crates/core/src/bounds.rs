//! The dimension bounds for the moduli stratum of pointed curves with a
//! prescribed Weierstrass semigroup: Pflueger's effective-weight lower bound
//! `3g - 2 - ewt`, the Deligne–Pinkham upper bound `2g - 2 + lambda`, and
//! the sharpened candidate `2g - 2 + lambda - dim T^{1,+}`, together with
//! exhaustive checks of the inequality between them.

use rayon::prelude::*;
use serde::Serialize;

use crate::cotangent;
use crate::enumeration;
use crate::error::SemigroupError;
use crate::semigroup::NumericalSemigroup;

/// Every bound of a single semigroup. `lemma_holds` records
/// `np <= 2g - 2 + lambda - t1_plus`; a `false` value would be a
/// counterexample to the inequality and is worth reporting loudly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub gaps: Vec<i64>,
    pub generators: Vec<i64>,
    pub genus: i64,
    pub ewt: i64,
    pub lambda: i64,
    pub np: i64,
    pub dp: i64,
    pub t1_plus: i64,
    pub conj: i64,
    pub neg_graded: bool,
    pub lemma_holds: bool,
}

/// Exact CSV header for [`BoundsReport::csv_row`].
pub const CSV_HEADER: &str =
    "gaps;generators;genus;ewt;lambda;np;dp;t1_plus;conj;neg_graded;lemma_holds";

impl BoundsReport {
    pub fn csv_row(&self) -> String {
        let join = |v: &[i64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "{};{};{};{};{};{};{};{};{};{};{}",
            join(&self.gaps),
            join(&self.generators),
            self.genus,
            self.ewt,
            self.lambda,
            self.np,
            self.dp,
            self.t1_plus,
            self.conj,
            self.neg_graded,
            self.lemma_holds
        )
    }
}

/// Computes every field of the report for a semigroup of genus >= 1.
pub fn bounds_report(s: &NumericalSemigroup) -> Result<BoundsReport, SemigroupError> {
    if s.genus() == 0 {
        return Err(SemigroupError::GenusZero);
    }
    let g = s.genus();
    let ewt = s.effective_weight();
    let lambda = s.lambda();
    let np = 3 * g - 2 - ewt;
    let dp = 2 * g - 2 + lambda;
    let t1_plus = cotangent::t1_graded(s)?.t1_plus;
    let conj = dp - t1_plus;
    Ok(BoundsReport {
        gaps: s.gaps().to_vec(),
        generators: s.generators().to_vec(),
        genus: g,
        ewt,
        lambda,
        np,
        dp,
        t1_plus,
        conj,
        neg_graded: t1_plus == 0,
        lemma_holds: np <= conj,
    })
}

/// Reports for every semigroup of genus `1..=max_genus`, in enumeration
/// order. Work is distributed over the thread pool; the order of the output
/// does not depend on the worker count.
pub fn bounds_reports_up_to(max_genus: i64) -> Result<Vec<BoundsReport>, SemigroupError> {
    let semigroups: Vec<NumericalSemigroup> = enumeration::enumerate_by_genus(max_genus)?
        .filter(|s| s.genus() >= 1)
        .collect();
    semigroups
        .par_iter()
        .map(bounds_report)
        .collect::<Result<Vec<_>, _>>()
}

/// Every semigroup of genus `1..=max_genus` violating
/// `3g - 2 - ewt <= 2g - 2 + lambda - t1_plus`. Expected empty.
pub fn scan_lemma(max_genus: i64) -> Result<Vec<BoundsReport>, SemigroupError> {
    Ok(bounds_reports_up_to(max_genus)?
        .into_iter()
        .filter(|r| !r.lemma_holds)
        .collect())
}

/// Census of where the lower bound already meets the sharpened upper bound
/// (`np == conj`, both paper bounds pin the dimension) versus where the two
/// stay strictly apart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityCensus {
    pub total: usize,
    pub equality: usize,
    pub strict: Vec<BoundsReport>,
}

pub fn equality_census(max_genus: i64) -> Result<EqualityCensus, SemigroupError> {
    let reports = bounds_reports_up_to(max_genus)?;
    let total = reports.len();
    let strict: Vec<BoundsReport> = reports.into_iter().filter(|r| r.np < r.conj).collect();
    Ok(EqualityCensus {
        total,
        equality: total - strict.len(),
        strict,
    })
}
