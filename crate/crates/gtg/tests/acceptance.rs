//! One PASS/FAIL line per acceptance criterion.
//!
//! Two criteria fail for mathematical reasons (see README, "Known
//! deviations"). Each is checked to fail in exactly the documented way; the
//! process exits non-zero on any other failure.

use std::collections::BTreeSet;
use std::process::ExitCode;

use gtg::reproduce::survivor_structure_ok;
use gtg::search::par_search;
use gtg::{reproduce_all, ReproduceOptions};
use gtg_core::algebra::{Cyclotomic, Ring};
use gtg_core::certify::{
    analyze, cell_data, check_sigma_form, dual_root_report, index_four_endgame, lemma31_suite, sigma_constant_check,
    Outcome, Rule, K5_SURVIVOR,
};
use gtg_core::groups::{todd_coxeter, Presentation, DEFAULT_MAX_COSETS};
use gtg_core::trace::{
    constant_term_check, equal_up_to_sign, has_essential_cyclic, integer_coefficients, leading_coefficient_check, sigma_is_symmetric,
    sigma_polynomial, trace_polynomial, trace_polynomial_oracle, Signature, TraceError,
};
use gtg_core::words::{enumerate_words, word_stats, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Finding {
    passed: bool,
    detail: String,
    /// For a failing criterion: whether the failure is exactly the known one.
    known: bool,
}

/// Name, check and the reason behind a known failure.
type Criterion = (&'static str, Box<dyn Fn() -> Finding>, &'static str);

fn ok(passed: bool, detail: impl Into<String>) -> Finding {
    Finding { passed, detail: detail.into(), known: false }
}

fn canonical_upto(k: usize) -> Vec<Word> {
    (1..=k).flat_map(enumerate_words).collect()
}

fn k5_word() -> Word {
    K5_SURVIVOR.parse().expect("literal word")
}

fn survivors(k: usize) -> Vec<String> {
    par_search(k, 0).expect("search").into_iter().map(|s| s.word.to_string()).collect()
}

fn criterion_1() -> Finding {
    let (k3, k5, k7) = (survivors(3), survivors(5), survivors(7));
    let k1: BTreeSet<String> = enumerate_words(1)
        .map(|w| analyze(&w).map(|v| v.outcome.to_string()).unwrap_or_else(|e| e.to_string()))
        .collect();
    let want_k1: BTreeSet<String> =
        [Outcome::VirtuallySoluble(Rule::S4), Outcome::FreeSubgroup(Rule::Amalgam)].iter().map(|o| o.to_string()).collect();
    let k5_ok = k5 == [k5_word().canonical().to_string()];
    let rest = k5_ok && k7.is_empty() && k1 == want_k1;
    let detail = format!("k=1 {:?}; k=3 {:?}; k=5 {:?}; k=7 {:?}", k1, k3, k5, k7);
    Finding { passed: rest && k3.is_empty(), detail, known: rest && k3 == ["xyxyx2y3"] }
}

fn criterion_2() -> Finding {
    let mut bad = Vec::new();
    let mut words = canonical_upto(4);
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..100 {
        let k = rng.gen_range(1..=10);
        let pairs: Vec<(u8, u8)> = (0..k).map(|_| (rng.gen_range(1..=2), rng.gen_range(1..=3))).collect();
        words.push(Word::from_pairs(&pairs));
    }
    for w in &words {
        let m = trace_polynomial(w, Signature::Gamma).expect("Γ").tau;
        let o = trace_polynomial_oracle(w, Signature::Gamma).expect("Γ");
        if !equal_up_to_sign(&m, &o) {
            bad.push(w.to_string());
        }
    }
    ok(bad.is_empty(), format!("{} words, mismatches {:?}", words.len(), bad))
}

fn criterion_3() -> Finding {
    let words = canonical_upto(4);
    let bad: Vec<String> = words
        .iter()
        .filter(|w| {
            let r = trace_polynomial(w, Signature::Gamma).expect("Γ");
            let want = Cyclotomic::sqrt2().pow(word_stats(w).kappa as u32);
            !(leading_coefficient_check(&r) && equal_up_to_sign(&r.leading, &want))
        })
        .map(|w| w.to_string())
        .collect();
    ok(bad.is_empty(), format!("{} words, mismatches {:?}", words.len(), bad))
}

fn criterion_4() -> Finding {
    let words = canonical_upto(4);
    let bad: Vec<String> = words
        .iter()
        .filter(|w| !constant_term_check(&trace_polynomial(w, Signature::Gamma).expect("Γ")))
        .map(|w| w.to_string())
        .collect();
    ok(bad.is_empty(), format!("{} words, mismatches {:?}", words.len(), bad))
}

fn criterion_5() -> Finding {
    let mut total = 0;
    let mut bad = Vec::new();
    for k in [1, 3, 5, 7, 9] {
        for s in par_search(k, 0).expect("search") {
            total += 1;
            if !survivor_structure_ok(&s) {
                bad.push(s.word.to_string());
            }
        }
    }
    ok(bad.is_empty(), format!("{} survivors over k = 1, 3, 5, 7, 9; violations {:?}", total, bad))
}

fn criterion_6() -> Finding {
    let Some(w) = canonical_upto(5).into_iter().find(|w| {
        has_essential_cyclic(&trace_polynomial(w, Signature::Gamma).expect("Γ"))
    }) else {
        return ok(false, "no word with an essential cyclic representation for k <= 5");
    };
    match lemma31_suite(&w) {
        Ok(r) => {
            let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
            ok(
                failed.is_empty() && r.kl_free_rank == 4 && r.kn_free_rank == 3,
                format!("word {}: K/L rank {}, K/N rank {}, failed {:?}", w, r.kl_free_rank, r.kn_free_rank, failed),
            )
        }
        Err(e) => ok(false, e.to_string()),
    }
}

fn criterion_7() -> Finding {
    let r = dual_root_report();
    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    ok(r.passed(), format!("{} checks, failed {:?}", r.checks.len(), failed))
}

fn criterion_8() -> Finding {
    let (a, b) = (cell_data(24), cell_data(60));
    match (a, b) {
        (Ok(a), Ok(b)) => ok(
            (a.c0, a.c1, a.c2, a.euler) == (24, 48, 26, 2)
                && (b.c0, b.c1, b.c2, b.euler) == (60, 120, 65, 5)
                && (a.square_cells, b.square_cells) == (6, 15)
                && a.gate
                && b.gate
                && a.gate_alt
                && b.gate_alt,
            format!(
                "n=24: ({}, {}, {}) χ={} {}>{}; n=60: ({}, {}, {}) χ={} {}>{}; n/2 counts {}, {}",
                a.c0, a.c1, a.c2, a.euler, a.square_cells, a.euler, b.c0, b.c1, b.c2, b.euler, b.square_cells, b.euler,
                a.square_cells_alt, b.square_cells_alt
            ),
        ),
        (a, b) => ok(false, format!("{:?} {:?}", a.err(), b.err())),
    }
}

fn criterion_9() -> Finding {
    let mut bad = Vec::new();
    let mut n = 0;
    for w in canonical_upto(5).into_iter().filter(|w| word_stats(w).kappa == 0) {
        match sigma_polynomial(&w) {
            Ok(s) => {
                n += 1;
                if !(sigma_is_symmetric(&s) && integer_coefficients(&s).is_some()) {
                    bad.push(w.to_string());
                }
            }
            Err(TraceError::QuotientProperPower) => {}
            Err(e) => bad.push(format!("{}: {}", w, e)),
        }
    }
    let sigma = sigma_polynomial(&k5_word()).expect("σ of the k = 5 word");
    let sf = check_sigma_form(&sigma, 5);
    let k5 = sf.matches && sf.u1 == 1 && sf.u2 == 0 && sigma_constant_check(&sigma);
    ok(bad.is_empty() && k5, format!("{} words, violations {:?}; k=5 σ = {}", n, bad, sigma))
}

fn criterion_10(witness: Option<&gtg_core::certify::F2Witness>) -> Finding {
    let s4: Presentation = "gens: x, y; rels: x^3, y^4, (x*y)^2".parse().expect("literal");
    let order = todd_coxeter(&s4, &[], DEFAULT_MAX_COSETS).map(|t| t.index());
    let d: Presentation = "gens: x, Y; rels: x^3, Y^2, (x*Y)^2".parse().expect("literal");
    let index = todd_coxeter(&d, &[d.parse_word("Y").expect("gen")], DEFAULT_MAX_COSETS).map(|t| t.index());
    let first = order == Ok(24) && index == Ok(3);
    match index_four_endgame(&k5_word(), witness) {
        Ok(r) => {
            let abs: Vec<String> = r.classes.iter().map(|c| c.abelianization.to_string()).collect();
            let detail = format!(
                "order {:?}, index {:?}; k=5 index-4 abelianizations {:?}; witness {:?}",
                order, index, abs, r.witness_ok
            );
            let max_rank = r.classes.iter().map(|c| c.abelianization.free_rank).max();
            Finding {
                passed: first && r.resolved(),
                detail,
                known: first && r.classes.len() == 3 && max_rank == Some(1) && r.witness_ok.is_none(),
            }
        }
        Err(e) => ok(false, e.to_string()),
    }
}

fn criterion_11() -> Finding {
    let run = |jobs| reproduce_all(&ReproduceOptions { jobs, ..Default::default() }).to_json_without_timing();
    match (run(1), run(1), run(4)) {
        (Ok(a), Ok(b), Ok(c)) => ok(a == b && a == c, format!("{} bytes; runs equal {}, jobs 1 vs 4 equal {}", a.len(), a == b, a == c)),
        (a, b, c) => ok(false, format!("schema: {:?} {:?} {:?}", a.err(), b.err(), c.err())),
    }
}

fn main() -> ExitCode {
    let witness = std::env::var_os(gtg::cli::WITNESS_ENV)
        .map(std::path::PathBuf::from)
        .filter(|p| p.exists())
        .map(|p| gtg::io::read_witness(&p).expect("witness file"));
    let criteria: Vec<Criterion> = vec![
        ("1 search reproduction", Box::new(criterion_1), "xyxyx2y3 (k = 3) has τ = λ²(λ − √2) and survives the search"),
        ("2 oracle equivalence", Box::new(criterion_2), ""),
        ("3 leading coefficient", Box::new(criterion_3), ""),
        ("4 constant term", Box::new(criterion_4), ""),
        ("5 survivor structure", Box::new(criterion_5), ""),
        ("6 lemma 3.1 suite", Box::new(criterion_6), ""),
        ("7 dual-number certificate", Box::new(criterion_7), ""),
        ("8 cell gates", Box::new(criterion_8), ""),
        ("9 sigma properties", Box::new(criterion_9), ""),
        (
            "10 endgames",
            Box::new(move || criterion_10(witness.as_ref())),
            "the three index-4 subgroup classes of the k = 5 group abelianize to free rank at most 1",
        ),
        ("11 determinism", Box::new(criterion_11), ""),
    ];
    let mut unexpected = 0;
    for (name, f, reason) in &criteria {
        let o = f();
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("{} criterion {}: {}", tag, name, o.detail);
        if !o.passed {
            if o.known {
                println!("     known deviation: {}", reason);
            } else {
                unexpected += 1;
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{} unexpected failures", unexpected);
        ExitCode::FAILURE
    }
}
