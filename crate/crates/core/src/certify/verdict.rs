//! The per-word classifier and the exhaustive survivor search.

use core::fmt;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::forms::{check_sigma_form, check_tau_form, mod12_check, sigma_constant_check, SigmaFormCheck, TauFormCheck};
use super::{cell_data, dual_root_certificate, CertifyError};
use crate::algebra::{AbelianGroup, Cyclotomic, Ring};
use crate::groups::{
    abelianization, f2_witness_check, low_index_subgroups, reidemeister_schreier, todd_coxeter, CosetTable, FreeWord,
    Presentation, DEFAULT_MAX_COSETS,
};
use crate::trace::{
    essential_cyclic_z12, has_essential_cyclic, sigma_polynomial, trace_polynomial, Signature, TraceReport, Tracer,
};
use crate::words::{enumerate_words, quotient_word, word_stats, Word};

/// The unique survivor of the search at k = 5.
pub const K5_SURVIVOR: &str = "xyxyx2y3x2yxy3";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Even k, settled elsewhere.
    EvenK,
    /// Essential representation onto Z₁₂.
    Lemma31,
    /// τ(−√2) = 0; replace X by X⁻¹.
    InverseTrick,
    /// Some essential representation into SL(2, C) is non-elementary.
    Lemma21,
    /// w̄ is a proper power in Z₃ * Z₂.
    Bms,
    /// Non-elementary essential representation of Γ̄.
    Lemma21Bar,
    /// √2 is a repeated root of σ.
    Lemma33,
    /// (1 + √5)/2 is a repeated root of σ.
    Lemma34,
    /// Γ ≅ S₄.
    S4,
    /// Γ is an amalgamated free product with proper factors.
    Amalgam,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::EvenK => "EvenK",
            Rule::Lemma31 => "L3.1",
            Rule::InverseTrick => "InverseTrick",
            Rule::Lemma21 => "L2.1",
            Rule::Bms => "BMS",
            Rule::Lemma21Bar => "L2.1-bar",
            Rule::Lemma33 => "L3.3",
            Rule::Lemma34 => "L3.4",
            Rule::S4 => "S4",
            Rule::Amalgam => "Amalgam",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    FreeSubgroup(Rule),
    VirtuallySoluble(Rule),
    WitnessRequired { resolved: bool },
    EvenKDelegated,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::FreeSubgroup(r) => write!(f, "FreeSubgroup({})", r),
            Outcome::VirtuallySoluble(r) => write!(f, "VirtuallySoluble({})", r),
            Outcome::WitnessRequired { resolved } => write!(f, "WitnessRequired(resolved={})", resolved),
            Outcome::EvenKDelegated => f.write_str("EvenK-Delegated"),
        }
    }
}

/// A passed check and what it established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrailEntry {
    pub check: String,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub input: Word,
    /// Canonical representative that was analyzed.
    pub word: Word,
    pub outcome: Outcome,
    pub trail: Vec<TrailEntry>,
}

/// An index-4 subgroup and images in F₂ = ⟨a, b⟩ of the generators of its
/// Reidemeister–Schreier presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Witness {
    pub subgroup: CosetTable,
    pub images: Vec<FreeWord>,
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub witness: Option<F2Witness>,
    pub max_cosets: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { witness: None, max_cosets: DEFAULT_MAX_COSETS }
    }
}

struct Trail(Vec<TrailEntry>);

impl Trail {
    fn pass(&mut self, check: &str, evidence: impl Into<String>) {
        self.0.push(TrailEntry { check: check.into(), evidence: evidence.into() });
    }
}

fn contradiction(msg: String) -> CertifyError {
    CertifyError::InternalContradiction(msg)
}

pub fn analyze(w: &Word) -> Result<Verdict, CertifyError> {
    analyze_with(w, &AnalyzeOptions::default())
}

pub fn analyze_with(input: &Word, opts: &AnalyzeOptions) -> Result<Verdict, CertifyError> {
    if input.is_proper_power() {
        return Err(CertifyError::ProperPower);
    }
    let w = input.canonical();
    let k = w.len();
    let mut trail = Trail(Vec::new());
    let done = |outcome, trail: Trail| Ok(Verdict { input: input.clone(), word: w.clone(), outcome, trail: trail.0 });
    trail.pass("canonical", format!("{} ~ {}", input, w));

    if k.is_multiple_of(2) {
        trail.pass("even-k", format!("k = {}", k));
        return done(Outcome::EvenKDelegated, trail);
    }
    trail.pass("odd-k", format!("k = {}", k));

    let report = trace_polynomial(&w, Signature::Gamma)?;
    trail.pass("trace", format!("tau(λ) = {}", report.tau));

    if has_essential_cyclic(&report) {
        let (a, b) = essential_cyclic_z12(&w)
            .ok_or_else(|| contradiction(format!("tau vanishes at a cyclic value but {} has no Z12 map", w)))?;
        trail.pass("essential-cyclic", format!("x -> {}, y -> {} in Z12", a, b));
        return done(Outcome::FreeSubgroup(Rule::Lemma31), trail);
    }
    trail.pass("no-essential-cyclic", "tau(2cos(π/12)) != 0 and tau(2cos(7π/12)) != 0");

    let at = report.tau.eval(&Cyclotomic::sqrt2().neg_ref());
    if at.is_zero() {
        trail.pass("tau(-sqrt2) = 0", "the representation with X replaced by X^-1 is essential");
        return done(Outcome::FreeSubgroup(Rule::InverseTrick), trail);
    }
    trail.pass("tau(-sqrt2) != 0", format!("tau(-sqrt2) = {}", at));

    if k == 1 {
        return k1_endgame(&w, opts, trail).map(|(outcome, trail)| Verdict {
            input: input.clone(),
            word: w.clone(),
            outcome,
            trail: trail.0,
        });
    }

    let tf = check_tau_form(&report);
    if !tf.matches {
        trail.pass("tau-form-fails", "tau is not ±(√2)^κ λ^s (λ−√2)^(k−s)");
        return done(Outcome::FreeSubgroup(Rule::Lemma21), trail);
    }
    trail.pass("tau-form", format!("s = {}, κ = {}, sign = {}", tf.s, tf.kappa_used, tf.sign));

    let st = word_stats(&w);
    let excess = k as i64 - 2 * tf.s as i64;
    if tf.kappa_used != 0 || excess.abs() != 1 || !mod12_check(&st) {
        return Err(contradiction(format!(
            "{} has tau form with κ = {}, k − 2s = {}, 4Σα + 3Σβ ≡ {} (mod 12)",
            w, tf.kappa_used, excess, st.mod12
        )));
    }
    trail.pass("survivor-shape", format!("κ = 0, k − 2s = {}, 4Σα + 3Σβ ≡ {} (mod 12)", excess, st.mod12));

    let q = quotient_word(&w).map_err(|_| contradiction(format!("{} contains y^2", w)))?;
    if q.proper_power {
        trail.pass("quotient-proper-power", format!("w̄ = {}", q.word));
        return done(Outcome::FreeSubgroup(Rule::Bms), trail);
    }
    trail.pass("quotient-primitive", format!("w̄ = {}", q.word));

    let sigma = sigma_polynomial(&w)?;
    let sf = check_sigma_form(&sigma, k);
    if !sf.matches {
        trail.pass("sigma-form-fails", format!("σ(μ) = {}", sigma));
        return done(Outcome::FreeSubgroup(Rule::Lemma21Bar), trail);
    }
    trail.pass(
        "sigma-form",
        format!("σ(μ) = {}; (u1, u2, u3, u4) = ({}, {}, {}, {})", sigma, sf.u1, sf.u2, sf.u3, sf.u4),
    );
    if sf.u1 != 1 || sf.u2 != 0 {
        return Err(contradiction(format!("{} has u1 = {}, u2 = {}", w, sf.u1, sf.u2)));
    }
    if !sigma_constant_check(&sigma) {
        return Err(contradiction(format!("σ(−√3) != ±√3 for {}", w)));
    }
    trail.pass("sigma-constant", "σ(−√3) = ±√3, so u1 = 1 and u2 = 0");

    let fired = repeated_root_gate(&sf)?;
    if let Some(&rule) = fired.first() {
        let evidence = match rule {
            Rule::Lemma33 => format!("u3 = {}; dual certificate and cell gate at |S4| = 24 hold", sf.u3),
            _ => format!("u4 = {}; cell gate at |A5| = 60 holds", sf.u4),
        };
        trail.pass("repeated-root", evidence);
        return done(Outcome::FreeSubgroup(rule), trail);
    }
    if k != 1 + 2 * sf.u3 + 4 * sf.u4 {
        return Err(contradiction(format!("k = {} but 1 + 2u3 + 4u4 = {}", k, 1 + 2 * sf.u3 + 4 * sf.u4)));
    }
    trail.pass("degree", format!("k = 1 + 2·{} + 4·{}", sf.u3, sf.u4));
    if k != 5 {
        return Err(contradiction(format!("{} survives at k = {}", w, k)));
    }
    k5_endgame(&w, opts, trail).map(|(outcome, trail)| Verdict {
        input: input.clone(),
        word: w.clone(),
        outcome,
        trail: trail.0,
    })
}

/// Rules fired by repeated roots of σ: L3.3 when u₃ ≥ 2, L3.4 when
/// u₄ ≥ 2. The cell gates behind each lemma are validated on firing.
pub fn repeated_root_gate(sf: &SigmaFormCheck) -> Result<Vec<Rule>, CertifyError> {
    if !sf.matches {
        return Err(CertifyError::Precondition("sigma does not have the product form".into()));
    }
    let mut fired = Vec::new();
    if sf.u3 >= 2 {
        let c = cell_data(24)?;
        if !(c.gate && c.gate_alt && dual_root_certificate()) {
            return Err(contradiction("S4 gate failed".into()));
        }
        fired.push(Rule::Lemma33);
    }
    if sf.u4 >= 2 {
        let c = cell_data(60)?;
        if !(c.gate && c.gate_alt) {
            return Err(contradiction("A5 gate failed".into()));
        }
        fired.push(Rule::Lemma34);
    }
    Ok(fired)
}

fn k1_endgame(w: &Word, opts: &AnalyzeOptions, mut trail: Trail) -> Result<(Outcome, Trail), CertifyError> {
    let s = w.syllables()[0];
    match (s.alpha, s.beta) {
        (1, 1) => {
            let p = Presentation::triangle(w);
            let t = todd_coxeter(&p, &[], opts.max_cosets)?;
            if t.index() != 24 {
                return Err(contradiction(format!("|Γ| = {} for xy", t.index())));
            }
            trail.pass("order", format!("coset enumeration of {} gives 24 cosets", p));
            Ok((Outcome::VirtuallySoluble(Rule::S4), trail))
        }
        (1, 2) => {
            let a: Presentation = "gens: x, t; rels: x^3, t^2, (x*t)^2".parse()?;
            let ia = todd_coxeter(&a, &[a.parse_word("t")?], opts.max_cosets)?.index();
            let b: Presentation = "gens: y; rels: y^4".parse()?;
            let ib = todd_coxeter(&b, &[b.parse_word("y^2")?], opts.max_cosets)?.index();
            if (ia, ib) != (3, 2) {
                return Err(contradiction(format!("amalgam indices {} and {}", ia, ib)));
            }
            trail.pass(
                "amalgam",
                "Γ = ⟨x,t | x^3, t^2, (xt)^2⟩ *_{t = y^2} ⟨y | y^4⟩ with ⟨t⟩ of index 3 and ⟨y^2⟩ of index 2",
            );
            Ok((Outcome::FreeSubgroup(Rule::Amalgam), trail))
        }
        _ => Err(contradiction(format!("unexpected canonical word {} at k = 1", w))),
    }
}

/// One conjugacy class of index-4 subgroups with the abelianization of its
/// Reidemeister–Schreier presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexFourClass {
    pub table: CosetTable,
    pub generators: usize,
    pub relators: usize,
    pub abelianization: AbelianGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexFourReport {
    pub classes: Vec<IndexFourClass>,
    /// First class with abelianization of free rank at least 2.
    pub rank_two: Option<usize>,
    /// Outcome of the witness check, when a witness was supplied.
    pub witness_ok: Option<bool>,
}

impl IndexFourReport {
    /// The necessary condition holds and any supplied witness checks out.
    pub fn resolved(&self) -> bool {
        self.rank_two.is_some() && self.witness_ok != Some(false)
    }
}

/// Index-4 subgroups of ⟨x, y | x³, y⁴, w²⟩ and the necessary condition for
/// one of them to map onto F₂: abelianization of free rank ≥ 2.
pub fn index_four_endgame(w: &Word, witness: Option<&F2Witness>) -> Result<IndexFourReport, CertifyError> {
    let p = Presentation::triangle(w);
    let mut classes = Vec::new();
    for table in low_index_subgroups(&p, 4)?.into_iter().filter(|t| t.index() == 4) {
        let q = reidemeister_schreier(&p, &table)?;
        classes.push(IndexFourClass {
            table,
            generators: q.ngens(),
            relators: q.relators().len(),
            abelianization: abelianization(&q),
        });
    }
    let rank_two = classes.iter().position(|c| c.abelianization.free_rank >= 2);
    let witness_ok = witness.map(|wit| {
        wit.subgroup.index() == 4
            && wit.subgroup.ngens() == p.ngens()
            && wit.subgroup.is_consistent()
            && wit.subgroup.is_relator_closed(&p)
            && match reidemeister_schreier(&p, &wit.subgroup) {
                Ok(q) => f2_witness_check(&q, &wit.images),
                Err(_) => false,
            }
    });
    Ok(IndexFourReport { classes, rank_two, witness_ok })
}

fn k5_endgame(w: &Word, opts: &AnalyzeOptions, mut trail: Trail) -> Result<(Outcome, Trail), CertifyError> {
    let report = index_four_endgame(w, opts.witness.as_ref())?;
    if let Some(i) = report.rank_two {
        let ranks: Vec<usize> = report.classes.iter().map(|c| c.abelianization.free_rank).collect();
        trail.pass(
            "index-4-abelianization",
            format!("{} classes of index-4 subgroups, free ranks {:?}; class {} qualifies", ranks.len(), ranks, i),
        );
    }
    if report.witness_ok == Some(true) {
        trail.pass("f2-witness", "relators vanish in F2 and the images fold to the rose");
    }
    Ok((Outcome::WitnessRequired { resolved: report.resolved() }, trail))
}

/// A word whose τ has the surviving product form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Survivor {
    pub word: Word,
    pub tau: TauFormCheck,
    pub verdict: Result<Verdict, CertifyError>,
}

/// τ and the shape test for one canonical word; `Some` when it survives.
pub fn screen(tracer: &Tracer, w: &Word) -> Result<Option<(TraceReport, TauFormCheck)>, CertifyError> {
    let report = tracer.report(w)?;
    let tf = check_tau_form(&report);
    Ok(tf.matches.then_some((report, tf)))
}

/// Canonical words with k syllables whose τ passes the shape test, in
/// enumeration order, each with its verdict.
pub fn search(k: usize) -> Result<Vec<Survivor>, CertifyError> {
    let tracer = Tracer::new(Signature::Gamma);
    let mut out = Vec::new();
    for w in enumerate_words(k) {
        if let Some((_, tf)) = screen(&tracer, &w)? {
            let verdict = analyze(&w);
            out.push(Survivor { word: w, tau: tf, verdict });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn k1_endgames() {
        assert_eq!(analyze(&word("xy")).unwrap().outcome, Outcome::VirtuallySoluble(Rule::S4));
        assert_eq!(analyze(&word("x2y3")).unwrap().outcome, Outcome::VirtuallySoluble(Rule::S4));
        assert_eq!(analyze(&word("xy2")).unwrap().outcome, Outcome::FreeSubgroup(Rule::Amalgam));
    }

    #[test]
    fn even_k_is_delegated() {
        assert_eq!(analyze(&word("xyxy2")).unwrap().outcome, Outcome::EvenKDelegated);
    }

    #[test]
    fn proper_power_rejected() {
        assert_eq!(analyze(&word("xyxy")), Err(CertifyError::ProperPower));
    }

    #[test]
    fn gate_examples() {
        let sf = |u1, u2, u3, u4| SigmaFormCheck { matches: true, u1, u2, u3, u4, sign: 1 };
        assert_eq!(repeated_root_gate(&sf(1, 0, 2, 0)).unwrap(), alloc::vec![Rule::Lemma33]);
        assert_eq!(repeated_root_gate(&sf(1, 0, 0, 2)).unwrap(), alloc::vec![Rule::Lemma34]);
        assert!(repeated_root_gate(&sf(1, 0, 1, 1)).unwrap().is_empty());
    }

    #[test]
    fn k3_survivor_reaches_the_unreachable_branch() {
        // τ(xyxyx²y³) = λ²(λ − √2), σ = μ(μ² − 2): no rule settles it.
        let s = search(3).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].word, word("xyxyx2y3"));
        assert_eq!(s[0].tau.s, 2);
        assert!(matches!(s[0].verdict, Err(CertifyError::InternalContradiction(_))));
    }

    #[test]
    fn k5_survivor_has_repeated_root_sqrt2() {
        let v = analyze(&word(K5_SURVIVOR)).unwrap();
        assert_eq!(v.outcome, Outcome::FreeSubgroup(Rule::Lemma33));
        let r = index_four_endgame(&word(K5_SURVIVOR), None).unwrap();
        let ranks: Vec<usize> = r.classes.iter().map(|c| c.abelianization.free_rank).collect();
        assert_eq!(ranks.len(), 3);
        assert_eq!(ranks.iter().max(), Some(&1));
        assert!(!r.resolved());
    }
}
