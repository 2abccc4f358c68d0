use serde::Serialize;
use serde_json::json;

use nsmoduli::bounds::{self, BoundsReport, CSV_HEADER};
use nsmoduli::cotangent;
use nsmoduli::enumeration;
use nsmoduli::families;
use nsmoduli::presentation;
use nsmoduli::semigroup::NumericalSemigroup;
use nsmoduli::tables::GENUS6_NON_NEG_GRADED;
use nsmoduli::SemigroupError;

use crate::output::{render_table, Sink};
use crate::{Format, SemigroupArg};

pub struct CommandError {
    pub code: u8,
    pub message: String,
}

fn usage(message: impl Into<String>) -> CommandError {
    CommandError {
        code: 2,
        message: message.into(),
    }
}

fn mismatch(message: impl Into<String>) -> CommandError {
    CommandError {
        code: 1,
        message: message.into(),
    }
}

impl From<SemigroupError> for CommandError {
    fn from(e: SemigroupError) -> Self {
        match e {
            SemigroupError::EmptyInput
            | SemigroupError::GcdError { .. }
            | SemigroupError::NonPositiveElement(_)
            | SemigroupError::NotASemigroup { .. }
            | SemigroupError::CapExceeded { .. }
            | SemigroupError::BadFamily(_)
            | SemigroupError::BadTau(_)
            | SemigroupError::GenusZero
            | SemigroupError::InputTooLarge(_) => usage(e.to_string()),
            other => mismatch(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CommandError {
    fn from(e: std::io::Error) -> Self {
        mismatch(format!("cannot write output: {e}"))
    }
}

type CmdResult = Result<(), CommandError>;

fn parse_semigroup(arg: &SemigroupArg) -> Result<NumericalSemigroup, CommandError> {
    match (&arg.gens, &arg.gaps) {
        (Some(list), None) => Ok(NumericalSemigroup::parse(list)?),
        (None, Some(list)) => Ok(NumericalSemigroup::parse(&format!("gaps:{list}"))?),
        _ => Err(usage("exactly one of --gens or --gaps is required")),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn info(arg: &SemigroupArg, format: Format, sink: Sink) -> CmdResult {
    let s = parse_semigroup(arg)?;
    let content = match format {
        Format::Json => to_json(&s.record()),
        _ => {
            let end = s.end_set();
            let list = |v: &[i64]| {
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            format!(
                "generators          {}\n\
                 gaps                {}\n\
                 genus               {}\n\
                 frobenius           {}\n\
                 symmetric           {}\n\
                 multiplicity        {}\n\
                 embedding dimension {}\n\
                 effective weight    {}\n\
                 lambda              {}\n\
                 endo gaps           {}\n",
                s,
                list(s.gaps()),
                s.genus(),
                s.frobenius(),
                s.is_symmetric(),
                s.multiplicity(),
                s.embedding_dimension(),
                s.effective_weight(),
                end.lambda,
                list(&end.endo_gaps),
            )
        }
    };
    sink.write(&content)?;
    Ok(())
}

fn monomial_string(exponents: &[i64]) -> String {
    let parts: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("X_{}", i + 1)
            } else {
                format!("X_{}^{}", i + 1, e)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn presentation(arg: &SemigroupArg, format: Format, sink: Sink) -> CmdResult {
    let s = parse_semigroup(arg)?;
    let p = presentation::minimal_presentation(&s)?;
    let content = match format {
        Format::Json => {
            let rows: Vec<_> = p
                .relations
                .iter()
                .map(|r| {
                    json!({
                        "alpha": r.alpha.exponents,
                        "beta": r.beta.exponents,
                        "degree": r.degree,
                        "v": r.lattice_vector,
                    })
                })
                .collect();
            to_json(&rows)
        }
        _ => {
            let mut out = format!(
                "semigroup <{}>: {} relations, Betti degrees {:?}\n",
                s,
                p.relations.len(),
                p.betti_degrees
            );
            for r in &p.relations {
                out.push_str(&format!(
                    "  {} - {}   (degree {}, v = {:?})\n",
                    monomial_string(&r.alpha.exponents),
                    monomial_string(&r.beta.exponents),
                    r.degree,
                    r.lattice_vector,
                ));
            }
            out
        }
    };
    sink.write(&content)?;
    Ok(())
}

pub fn t1(arg: &SemigroupArg, sink: Sink) -> CmdResult {
    let s = parse_semigroup(arg)?;
    let graded = cotangent::t1_graded(&s)?;
    sink.write(&to_json(&graded))?;
    Ok(())
}

pub fn bounds(arg: &SemigroupArg, format: Format, sink: Sink) -> CmdResult {
    let s = parse_semigroup(arg)?;
    let r = bounds::bounds_report(&s)?;
    let content = match format {
        Format::Json => to_json(&r),
        Format::Csv => format!("{CSV_HEADER}\n{}\n", r.csv_row()),
        Format::Table => format!(
            "semigroup <{}>  genus {}\n\
             ewt        {}\n\
             lambda     {}\n\
             np  (3g-2-ewt)          {}\n\
             dp  (2g-2+lambda)       {}\n\
             t1_plus                 {}\n\
             conj (dp - t1_plus)     {}\n\
             negatively graded       {}\n\
             np <= conj              {}\n",
            s, r.genus, r.ewt, r.lambda, r.np, r.dp, r.t1_plus, r.conj, r.neg_graded,
            r.lemma_holds
        ),
    };
    sink.write(&content)?;
    Ok(())
}

struct VerifiedRow {
    gaps: Vec<i64>,
    np: i64,
    dp: i64,
    t1_plus: i64,
}

fn computed_table1_rows() -> Result<Vec<VerifiedRow>, CommandError> {
    let kept: Result<Vec<_>, _> =
        enumeration::filter_non_negatively_graded(enumeration::enumerate_by_genus(6)?).collect();
    kept?.iter()
        .map(|s| {
            let r = bounds::bounds_report(s)?;
            Ok(VerifiedRow {
                gaps: s.gaps().to_vec(),
                np: r.np,
                dp: r.dp,
                t1_plus: r.t1_plus,
            })
        })
        .collect()
}

pub fn table1(format: Format, sink: Sink) -> CmdResult {
    let rows = computed_table1_rows()?;
    if rows.len() != GENUS6_NON_NEG_GRADED.len() {
        return Err(mismatch(format!(
            "found {} non-negatively graded semigroups of genus <= 6, expected {}",
            rows.len(),
            GENUS6_NON_NEG_GRADED.len()
        )));
    }
    for (row, expected) in rows.iter().zip(&GENUS6_NON_NEG_GRADED) {
        if row.gaps != expected.gaps
            || (row.np, row.dp, row.t1_plus) != (expected.np, expected.dp, expected.t1_plus)
        {
            return Err(mismatch(format!(
                "row {:?}: computed (np, dp, t1+) = ({}, {}, {}) deviates from the reference ({}, {}, {})",
                row.gaps, row.np, row.dp, row.t1_plus, expected.np, expected.dp, expected.t1_plus
            )));
        }
    }
    let content = match format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "gaps": r.gaps,
                        "np": r.np,
                        "dim": r.np,
                        "dp": r.dp,
                        "t1_plus": r.t1_plus,
                    })
                })
                .collect();
            to_json(&rows)
        }
        Format::Csv => {
            let mut out = String::from("gaps;np;dim;dp;t1_plus\n");
            for r in &rows {
                let gaps = r
                    .gaps
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                out.push_str(&format!(
                    "{gaps};{};{};{};{}\n",
                    r.np, r.np, r.dp, r.t1_plus
                ));
            }
            out
        }
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.gaps
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(", "),
                        r.np.to_string(),
                        format!("{}*", r.np),
                        r.dp.to_string(),
                        r.t1_plus.to_string(),
                    ]
                })
                .collect();
            let mut out = render_table(&["gaps", "NP", "dim", "D-P", "T1+"], &cells);
            out.push_str("* the moduli dimension equals the lower bound NP on every row\n");
            out
        }
    };
    sink.write(&content)?;
    Ok(())
}

pub fn table2(tau_max: i64, format: Format, sink: Sink) -> CmdResult {
    if tau_max < 1 {
        return Err(usage("--tau-max must be at least 1"));
    }
    let mut rows: Vec<(u8, i64, String, i64, i64, i64)> = Vec::new();
    for id in 1..=3u8 {
        for tau in 1..=tau_max {
            let expected = families::family_expected_invariants(id, tau)?;
            let s = families::family_semigroup(id, tau)?;
            let r = bounds::bounds_report(&s)?;
            if (r.np, r.dp, r.t1_plus) != (expected.np, expected.dp, expected.t1_plus) {
                return Err(mismatch(format!(
                    "family {id}, tau {tau}: computed (np, dp, t1+) = ({}, {}, {}), closed forms give ({}, {}, {})",
                    r.np, r.dp, r.t1_plus, expected.np, expected.dp, expected.t1_plus
                )));
            }
            rows.push((id, tau, s.to_string(), r.np, r.dp, r.t1_plus));
        }
    }
    let content = match format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(id, tau, gens, np, dp, t1)| {
                    json!({
                        "family": id,
                        "tau": tau,
                        "generators": gens,
                        "np": np,
                        "dim": np,
                        "dp": dp,
                        "t1_plus": t1,
                    })
                })
                .collect();
            to_json(&rows)
        }
        Format::Csv => {
            let mut out = String::from("family;tau;generators;np;dim;dp;t1_plus\n");
            for (id, tau, gens, np, dp, t1) in &rows {
                out.push_str(&format!("{id};{tau};{gens};{np};{np};{dp};{t1}\n"));
            }
            out
        }
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|(id, tau, gens, np, dp, t1)| {
                    vec![
                        id.to_string(),
                        tau.to_string(),
                        format!("<{gens}>"),
                        np.to_string(),
                        format!("{np}*"),
                        dp.to_string(),
                        t1.to_string(),
                    ]
                })
                .collect();
            let mut out = render_table(
                &["family", "tau", "semigroup", "NP", "dim", "D-P", "T1+"],
                &cells,
            );
            out.push_str("* the moduli dimension equals the lower bound NP on every row\n");
            out
        }
    };
    sink.write(&content)?;
    Ok(())
}

pub fn scan(genus_max: i64, format: Format, non_neg_graded: bool, sink: Sink) -> CmdResult {
    if genus_max < 1 {
        return Err(usage("--genus-max must be at least 1"));
    }
    let mut reports = bounds::bounds_reports_up_to(genus_max)?;
    if non_neg_graded {
        reports.retain(|r| !r.neg_graded);
    }
    let lemma_counterexamples = reports.iter().filter(|r| !r.lemma_holds).count();
    let strict: Vec<&BoundsReport> = reports.iter().filter(|r| r.np < r.conj).collect();
    let content = match format {
        Format::Json => {
            let summary = json!({
                "rows": reports.len(),
                "lemma_counterexamples": lemma_counterexamples,
                "equality": reports.len() - strict.len(),
                "strict": strict.len(),
            });
            to_json(&json!({ "rows": reports, "summary": summary }))
        }
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in &reports {
                out.push_str(&r.csv_row());
                out.push('\n');
            }
            out.push_str(&format!("# rows: {}\n", reports.len()));
            out.push_str(&format!("# lemma_counterexamples: {lemma_counterexamples}\n"));
            out.push_str(&format!(
                "# equality: {} strict: {}\n",
                reports.len() - strict.len(),
                strict.len()
            ));
            out
        }
        Format::Table => {
            let cells: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.gaps
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                        r.generators
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                        r.genus.to_string(),
                        r.ewt.to_string(),
                        r.lambda.to_string(),
                        r.np.to_string(),
                        r.dp.to_string(),
                        r.t1_plus.to_string(),
                        r.conj.to_string(),
                        r.neg_graded.to_string(),
                        r.lemma_holds.to_string(),
                    ]
                })
                .collect();
            let mut out = render_table(
                &[
                    "gaps",
                    "generators",
                    "genus",
                    "ewt",
                    "lambda",
                    "np",
                    "dp",
                    "t1_plus",
                    "conj",
                    "neg_graded",
                    "lemma_holds",
                ],
                &cells,
            );
            out.push_str(&format!(
                "\nrows {}, lemma counterexamples {}, equality {} / strict {}\n",
                reports.len(),
                lemma_counterexamples,
                reports.len() - strict.len(),
                strict.len()
            ));
            for r in &strict {
                out.push_str(&format!(
                    "strict: <{}> np {} < conj {}\n",
                    r.generators
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    r.np,
                    r.conj
                ));
            }
            out
        }
    };
    sink.write(&content)?;
    if lemma_counterexamples > 0 {
        return Err(mismatch(format!(
            "{lemma_counterexamples} semigroups violate np <= conj"
        )));
    }
    Ok(())
}

pub fn enumerate(genus_max: i64, count_only: bool, sink: Sink) -> CmdResult {
    let mut out = String::new();
    if count_only {
        for (g, count) in enumeration::census(genus_max)?.iter().enumerate() {
            out.push_str(&format!("{g},{count}\n"));
        }
    } else {
        for s in enumeration::enumerate_by_genus(genus_max)? {
            out.push_str(&s.to_string());
            out.push('\n');
        }
    }
    sink.write(&out)?;
    Ok(())
}

/// Range of parameter values to check: a single `--tau` or `1..=tau_max`.
pub fn tau_range(tau: Option<i64>, tau_max: i64) -> std::ops::RangeInclusive<i64> {
    match tau {
        Some(t) => t..=t,
        None => 1..=tau_max,
    }
}

pub fn families_verify(
    taus: std::ops::RangeInclusive<i64>,
    family: Option<u8>,
    sink: Sink,
) -> CmdResult {
    if taus.is_empty() || *taus.start() < 1 {
        return Err(usage("--tau/--tau-max must be at least 1"));
    }
    let ids: Vec<u8> = match family {
        Some(id) if (1..=3).contains(&id) => vec![id],
        Some(id) => return Err(usage(format!("unknown family {id}"))),
        None => vec![1, 2, 3],
    };
    let mut failures: Vec<serde_json::Value> = Vec::new();
    let mut checked = 0u32;
    for &id in &ids {
        for tau in taus.clone() {
            let expected = families::family_expected_invariants(id, tau)?;
            let s = families::family_semigroup(id, tau)?;
            let r = bounds::bounds_report(&s)?;
            checked += 1;
            let mut checks: Vec<(&str, i64, i64)> = vec![
                ("genus", s.genus(), expected.genus),
                ("largest_gap", s.frobenius(), expected.largest_gap),
                ("np", r.np, expected.np),
                ("dp", r.dp, expected.dp),
                ("t1_plus", r.t1_plus, expected.t1_plus),
                ("symmetric", s.is_symmetric() as i64, 1),
            ];
            if let Some(minus) = expected.t1_minus {
                let got = cotangent::t1_graded(&s)?.t1_minus;
                checks.push(("t1_minus", got, minus));
            }
            if id != 3 {
                let basis = families::bicanonical_basis_size(id, tau)?;
                checks.push(("bicanonical_basis", basis, 3 * expected.genus - 3));
            }
            for (field, computed, expected) in checks {
                if computed != expected {
                    failures.push(json!({
                        "family": id, "tau": tau, "field": field,
                        "computed": computed, "expected": expected,
                    }));
                }
            }
        }
    }
    if failures.is_empty() {
        sink.write(&format!(
            "families {:?}: all closed forms verified for tau in {}..={} ({checked} members)\n",
            ids,
            taus.start(),
            taus.end()
        ))?;
        Ok(())
    } else {
        sink.write(&to_json(&json!({ "failures": failures })))?;
        Err(mismatch(format!(
            "{} family invariant mismatches",
            failures.len()
        )))
    }
}

pub fn syzygy_verify(family: u8, taus: std::ops::RangeInclusive<i64>, sink: Sink) -> CmdResult {
    if !(1..=2).contains(&family) {
        return Err(usage(
            "--family must be 1 or 2 (family 3 carries no explicit syzygy list)",
        ));
    }
    if taus.is_empty() || *taus.start() < 1 {
        return Err(usage("--tau/--tau-max must be at least 1"));
    }
    for tau in taus.clone() {
        if let Err(e) = families::verify_syzygies(family, tau) {
            sink.write(&to_json(&json!({
                "family": family, "tau": tau,
                "syzygy": e.syzygy, "remainder": e.remainder,
            })))?;
            return Err(mismatch(format!(
                "family {family}, tau {tau}: syzygy does not vanish"
            )));
        }
        if let Err(e) = families::verify_parametrization(family, tau) {
            sink.write(&to_json(&json!({
                "family": family, "tau": tau,
                "form": e.form, "residue": e.residue,
            })))?;
            return Err(mismatch(format!(
                "family {family}, tau {tau}: form {} does not vanish on the curve",
                e.form
            )));
        }
    }
    sink.write(&format!(
        "family {family}: all syzygies and parametrization checks pass for tau in {}..={}\n",
        taus.start(),
        taus.end()
    ))?;
    Ok(())
}
