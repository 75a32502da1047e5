use anyhow::Result;
use impsub_core::formulas::{
    bell, factorial, method_one_mobius, method_two_corrected_sum, method_two_paper_sum, mu_top_closed_form,
    p_chain_formula, p_composition_printed, p_composition_row, p_oracle,
};
use impsub_core::{enumerate_all, ExactChainSumReport, ExactInt, ImpLattice, IntervalPoset, Scalar};
use serde::Serialize;
use serde_json::json;

use crate::config::{CommandConfig, Format, RunConfig};
use crate::Outcome;

/// Largest `n` for which the p-table includes the recursion column.
const P_ORACLE_MAX: usize = 5;

pub fn run(config: &RunConfig) -> Result<(String, Outcome)> {
    let format = config.format;
    match &config.command {
        CommandConfig::Enumerate { n } => enumerate(*n, format),
        CommandConfig::Mobius { lower, upper } => mobius(lower, upper, format),
        CommandConfig::Verify { suite, n_max } => {
            let report = suite.run(*n_max)?;
            let outcome = if report.all_passed() { Outcome::Pass } else { Outcome::CheckFailed };
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report)?,
                _ => {
                    let mut lines: Vec<String> = report.verdicts.iter().map(|v| v.to_string()).collect();
                    lines.push(format!(
                        "suite {} n_max={}: {} passed, {} failed",
                        report.suite, report.n_max, report.passed, report.failed
                    ));
                    lines.join("\n")
                }
            };
            Ok((text, outcome))
        }
        CommandConfig::Identity { n_max } => identity(*n_max, format),
        CommandConfig::Table { n, k } => p_table(*n, *k, format),
        CommandConfig::Export { lower, upper } => {
            let interval = IntervalPoset::new(lower, upper)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&interval)?,
                _ => interval.to_dot(),
            };
            Ok((text, Outcome::Pass))
        }
    }
}

fn enumerate(n: usize, format: Format) -> Result<(String, Outcome)> {
    let all = enumerate_all(n)?;
    let expected = bell::<ExactInt>(n + 1);
    let outcome = if ExactInt::from(all.len()) == expected { Outcome::Pass } else { Outcome::CheckFailed };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "n": n,
            "count": all.len(),
            "bell": expected.to_string(),
            "sublattices": all,
        }))?,
        _ => {
            let mut lines: Vec<String> = all.iter().map(|a| a.to_string()).collect();
            lines.push(format!("count {}  bell(n+1) {}", all.len(), expected));
            lines.join("\n")
        }
    };
    Ok((text, outcome))
}

fn mobius(lower: &ImpLattice, upper: &ImpLattice, format: Format) -> Result<(String, Outcome)> {
    let interval = IntervalPoset::new(lower, upper)?;
    let oracle = interval.mobius::<ExactInt>().top().clone();
    let closed_form = (upper == &ImpLattice::full(upper.n())?).then(|| method_one_mobius::<ExactInt>(lower));
    let agree = closed_form.as_ref().map(|c| c == &oracle);
    let outcome = if agree == Some(false) { Outcome::CheckFailed } else { Outcome::Pass };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "lower": lower,
            "upper": upper,
            "size": interval.len(),
            "oracle": oracle.to_string(),
            "method_one": closed_form.as_ref().map(ToString::to_string),
            "agree": agree,
        }))?,
        _ => {
            let mut lines = vec![
                format!("lower       {lower}"),
                format!("upper       {upper}"),
                format!("size        {}", interval.len()),
                format!("oracle      {oracle}"),
            ];
            if let (Some(c), Some(a)) = (&closed_form, agree) {
                lines.push(format!("method_one  {c}"));
                lines.push(format!("agree       {a}"));
            }
            lines.join("\n")
        }
    };
    Ok((text, outcome))
}

/// Fixed-width table with right-aligned cells.
fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .map(|r| r[c].chars().count())
                .chain(std::iter::once(header[c].len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        cells.iter().zip(&widths).map(|(cell, w)| format!("{cell:>w$}")).collect::<Vec<_>>().join("  ")
    };
    std::iter::once(line(header.to_vec()))
        .chain(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())))
        .collect::<Vec<_>>()
        .join("\n")
}

// Rows are serialized through these structs rather than `serde_json::Value`,
// which cannot hold chain counts beyond u64.
#[derive(Serialize)]
struct IdentityRow {
    n: usize,
    closed_form: String,
    corrected: ExactChainSumReport,
    paper: ExactChainSumReport,
    #[serde(rename = "match")]
    matched: bool,
}

#[derive(Serialize)]
struct PRow {
    k: usize,
    chain: ExactChainSumReport,
    composition: String,
    composition_printed: String,
    oracle: Option<String>,
    #[serde(rename = "match")]
    matched: bool,
}

#[derive(Serialize)]
struct PTable<'a> {
    n: usize,
    rows: &'a [PRow],
}

fn identity(n_max: usize, format: Format) -> Result<(String, Outcome)> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let closed = mu_top_closed_form::<ExactInt>(n);
        let corrected = method_two_corrected_sum::<ExactInt>(n)?;
        let paper = method_two_paper_sum::<ExactInt>(n)?;
        let paper_expected = ExactInt::sign_pow(n as i64) * factorial::<ExactInt>(n - 1);
        let matched = corrected.value == closed && paper.value == paper_expected;
        rows.push(IdentityRow { n, closed_form: closed.to_string(), corrected, paper, matched });
    }
    let outcome = if rows.iter().all(|r| r.matched) { Outcome::Pass } else { Outcome::CheckFailed };
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Table<'a> {
                rows: &'a [IdentityRow],
            }
            serde_json::to_string_pretty(&Table { rows: &rows })?
        }
        _ => render_table(
            &["n", "(-1)^n n!", "corrected_m2", "paper_m2", "chains", "match"],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.closed_form.clone(),
                        r.corrected.value.to_string(),
                        r.paper.value.to_string(),
                        r.corrected.chain_count.to_string(),
                        r.matched.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    Ok((text, outcome))
}

fn p_table(n: usize, only_k: Option<usize>, format: Format) -> Result<(String, Outcome)> {
    let composition = p_composition_row::<ExactInt>(n)?;
    let ks: Vec<usize> = match only_k {
        Some(k) => vec![k],
        None => (1..=n).collect(),
    };
    let mut rows = Vec::new();
    for k in ks {
        let chain = p_chain_formula::<ExactInt>(k, n)?;
        let comp = composition[k - 1].clone();
        let printed = p_composition_printed::<ExactInt>(k, n)?;
        let oracle = if n <= P_ORACLE_MAX { Some(p_oracle::<ExactInt>(k, n)?) } else { None };
        let matched = chain.value == comp && oracle.as_ref().is_none_or(|o| o == &chain.value);
        rows.push(PRow {
            k,
            chain,
            composition: comp.to_string(),
            composition_printed: printed.to_string(),
            oracle: oracle.map(|o| o.to_string()),
            matched,
        });
    }
    let outcome = if rows.iter().all(|r| r.matched) { Outcome::Pass } else { Outcome::CheckFailed };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&PTable { n, rows: &rows })?,
        _ => render_table(
            &["k", "chain", "composition", "printed", "oracle", "match"],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.chain.value.to_string(),
                        r.composition.clone(),
                        r.composition_printed.clone(),
                        r.oracle.clone().unwrap_or_else(|| "-".to_string()),
                        r.matched.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    Ok((text, outcome))
}
