//! Named verification suites.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::forms::{check_sigma_form, mod12_check, sigma_constant_check, SigmaFormCheck};
use super::verdict::{
    analyze_with, index_four_endgame, repeated_root_gate, search, AnalyzeOptions, Outcome, Rule, K5_SURVIVOR,
};
use super::{cell_data, dual_root_report, lemma31_suite, CertifyError, Check, SuiteReport};
use crate::algebra::{Polynomial, Rational, Ring};
use crate::trace::{has_essential_cyclic, sigma_polynomial, trace_polynomial, Signature};
use crate::words::{enumerate_words, word_stats, Word};

pub const SUITES: [&str; 7] = ["lemma31", "lemma33", "lemma34", "mod12", "cells", "k1", "k5"];

pub fn suite_names() -> &'static [&'static str] {
    &SUITES
}

/// Runs a suite by name. `word` overrides the default word of suites that
/// take one (lemma31).
pub fn run_suite(name: &str, word: Option<&Word>, opts: &AnalyzeOptions) -> Result<SuiteReport, CertifyError> {
    let checks = match name {
        "lemma31" => lemma31(word)?,
        "lemma33" => lemma33()?,
        "lemma34" => lemma34()?,
        "mod12" => mod12(),
        "cells" => cells(),
        "k1" => k1(opts)?,
        "k5" => k5(opts)?,
        _ => return Err(CertifyError::Precondition(format!("unknown suite {:?}", name))),
    };
    Ok(SuiteReport { suite: String::from(name), checks })
}

/// First canonical word with an essential cyclic representation.
fn default_essential_word() -> Option<Word> {
    (1..=5).flat_map(enumerate_words).find(|w| {
        trace_polynomial(w, Signature::Gamma)
            .map(|r| has_essential_cyclic(&r))
            .unwrap_or(false)
    })
}

fn lemma31(word: Option<&Word>) -> Result<Vec<Check>, CertifyError> {
    let w = match word {
        Some(w) => w.clone(),
        None => default_essential_word()
            .ok_or_else(|| CertifyError::Precondition("no essential-cyclic word found".into()))?,
    };
    let rep = lemma31_suite(&w)?;
    let mut checks = alloc::vec![Check::new("word", true, format!("{}", w))];
    checks.extend(rep.checks);
    Ok(checks)
}

fn sf(u1: usize, u2: usize, u3: usize, u4: usize) -> SigmaFormCheck {
    SigmaFormCheck { matches: true, u1, u2, u3, u4, sign: 1 }
}

fn cell_checks(n: i64, expect: (i64, i64, i64, i64, i64)) -> Result<Vec<Check>, CertifyError> {
    let c = cell_data(n)?;
    Ok(alloc::vec![
        Check::new(
            format!("cells at n = {}", n),
            (c.c0, c.c1, c.c2, c.euler, c.square_cells) == expect,
            format!("c = ({}, {}, {}), χ = {}, squares = {}", c.c0, c.c1, c.c2, c.euler, c.square_cells),
        ),
        Check::new(format!("gate n/4 at n = {}", n), c.gate, format!("{} > {}", c.square_cells, c.euler)),
        Check::new(format!("gate n/2 at n = {}", n), c.gate_alt, format!("{} > {}", c.square_cells_alt, c.euler)),
    ])
}

fn lemma33() -> Result<Vec<Check>, CertifyError> {
    let mut checks = dual_root_report().checks;
    checks.extend(cell_checks(24, (24, 48, 26, 2, 6))?);
    let fired = repeated_root_gate(&sf(1, 0, 2, 0))?;
    checks.push(Check::new("u3 = 2 fires L3.3", fired == [Rule::Lemma33], format!("{:?}", fired)));
    let fired = repeated_root_gate(&sf(1, 0, 1, 1))?;
    checks.push(Check::new("(1,0,1,1) fires nothing", fired.is_empty(), format!("{:?}", fired)));
    Ok(checks)
}

fn lemma34() -> Result<Vec<Check>, CertifyError> {
    let mut checks = cell_checks(60, (60, 120, 65, 5, 15))?;
    let fired = repeated_root_gate(&sf(1, 0, 0, 2))?;
    checks.push(Check::new("u4 = 2 fires L3.4", fired == [Rule::Lemma34], format!("{:?}", fired)));
    let p = |c: &[i64]| Polynomial::new(c.iter().map(|&v| Rational::from_integer(v)).collect());
    // μ⁴ − 3μ² + 1 = (μ² − μ − 1)(μ² + μ − 1): roots ±(1 ± √5)/2.
    let product = p(&[-1, -1, 1]).mul_ref(&p(&[-1, 1, 1]));
    checks.push(Check::new(
        "quartic factor carries the golden-ratio roots",
        product == p(&[1, 0, -3, 0, 1]),
        format!("{}", product),
    ));
    Ok(checks)
}

fn mod12() -> Vec<Check> {
    let cases = [(K5_SURVIVOR, 7, true), ("xy", 7, true), ("xy2", 10, false)];
    cases
        .iter()
        .map(|&(w, m, ok)| {
            let st = word_stats(&w.parse().expect("literal word"));
            Check::new(
                format!("{} mod 12", w),
                st.mod12 == m && mod12_check(&st) == ok,
                format!("4Σα + 3Σβ ≡ {}", st.mod12),
            )
        })
        .collect()
}

fn cells() -> Vec<Check> {
    let mut checks = Vec::new();
    for (n, e) in [(12, (12, 24, 13, 1, 3)), (24, (24, 48, 26, 2, 6)), (60, (60, 120, 65, 5, 15))] {
        match cell_checks(n, e) {
            Ok(c) => checks.extend(c),
            Err(err) => checks.push(Check::new(format!("cells at n = {}", n), false, format!("{}", err))),
        }
    }
    checks.push(Check::new(
        "n = 30 rejected",
        matches!(cell_data(30), Err(CertifyError::Divisibility(30))),
        "c2 must be integral",
    ));
    checks
}

fn verdict_check(w: &str, opts: &AnalyzeOptions, expected: Outcome) -> Result<Check, CertifyError> {
    let v = analyze_with(&w.parse().expect("literal word"), opts)?;
    let detail = v
        .trail
        .last()
        .map(|t| format!("{}: {}", t.check, t.evidence))
        .unwrap_or_default();
    Ok(Check::new(format!("{} -> {}", w, expected), v.outcome == expected, format!("{} ({})", v.outcome, detail)))
}

fn k1(opts: &AnalyzeOptions) -> Result<Vec<Check>, CertifyError> {
    Ok(alloc::vec![
        verdict_check("xy", opts, Outcome::VirtuallySoluble(Rule::S4))?,
        verdict_check("xy2", opts, Outcome::FreeSubgroup(Rule::Amalgam))?,
    ])
}

fn k5(opts: &AnalyzeOptions) -> Result<Vec<Check>, CertifyError> {
    let w: Word = K5_SURVIVOR.parse().expect("literal word");
    let mut checks = Vec::new();
    let survivors = search(5)?;
    checks.push(Check::new(
        "unique survivor at k = 5",
        survivors.len() == 1 && survivors[0].word == w.canonical(),
        format!("{} survivors", survivors.len()),
    ));
    let sigma = sigma_polynomial(&w)?;
    let sf = check_sigma_form(&sigma, 5);
    checks.push(Check::new(
        "sigma has u1 = 1, u2 = 0",
        sf.matches && sf.u1 == 1 && sf.u2 == 0,
        format!("σ(μ) = {}; (u1, u2, u3, u4) = ({}, {}, {}, {})", sigma, sf.u1, sf.u2, sf.u3, sf.u4),
    ));
    checks.push(Check::new("sigma(-sqrt3) = ±sqrt3", sigma_constant_check(&sigma), "constant term of σ(z − √3)"));
    let v = analyze_with(&w, opts)?;
    let settled = matches!(v.outcome, Outcome::FreeSubgroup(_) | Outcome::WitnessRequired { resolved: true });
    checks.push(Check::new("verdict settles the word", settled, format!("{}", v.outcome)));
    let r = index_four_endgame(&w, opts.witness.as_ref())?;
    let ranks: Vec<String> = r.classes.iter().map(|c| format!("{}", c.abelianization)).collect();
    checks.push(Check::new(
        "index-4 subgroup with abelianization of free rank >= 2",
        r.rank_two.is_some(),
        format!("{} classes: {}", r.classes.len(), ranks.join("; ")),
    ));
    if let Some(ok) = r.witness_ok {
        checks.push(Check::new("F2 witness", ok, "relators vanish and images generate F2"));
    }
    Ok(checks)
}
