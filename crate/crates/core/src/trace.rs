//! Trace polynomials of relator words.
//!
//! For the signature (3,4) the generators are lifted to
//!
//! ```text
//! A = [[e^{iπ/3}, 0], [1, e^{-iπ/3}]],   B = [[e^{iπ/4}, z], [0, e^{-iπ/4}]]
//! ```
//!
//! so that tr A = 1, tr B = √2 and tr AB = z − (√6 − √2)/2. The trace of
//! w(A, B) is computed as a polynomial in z and then rewritten in
//! λ = tr AB. For (3,2) the second generator is `[[i, z], [0, −i]]` and
//! tr ÃB̃ = z − √3.
//!
//! [`trace_polynomial_oracle`] recomputes the same polynomial from trace
//! identities alone and shares no code with the matrix route.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Cyclotomic, Matrix2, Polynomial, Rational, Ring};
use crate::words::{quotient_word, word_stats, Word, WordError};

/// Generator orders of the free product the word lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Signature {
    /// ⟨x, y | x³ = y⁴ = 1⟩
    Gamma,
    /// ⟨x, y | x³ = y² = 1⟩
    GammaBar,
}

impl Signature {
    pub fn orders(self) -> (u32, u32) {
        match self {
            Signature::Gamma => (3, 4),
            Signature::GammaBar => (3, 2),
        }
    }

    /// 2cos(π/ℓ)
    pub fn trace_x(self) -> Cyclotomic {
        Cyclotomic::two_cos(4)
    }

    /// 2cos(π/m)
    pub fn trace_y(self) -> Cyclotomic {
        match self {
            Signature::Gamma => Cyclotomic::two_cos(3),
            Signature::GammaBar => Cyclotomic::two_cos(6),
        }
    }

    /// c with tr AB = z − c; the substitution is z = λ + c.
    pub fn shift(self) -> Cyclotomic {
        match self {
            Signature::Gamma => Cyclotomic::two_cos(5),
            Signature::GammaBar => Cyclotomic::sqrt3(),
        }
    }

    /// Name of the trace variable.
    pub fn variable(self) -> &'static str {
        match self {
            Signature::Gamma => "λ",
            Signature::GammaBar => "μ",
        }
    }

    fn admits(self, w: &Word) -> bool {
        match self {
            Signature::Gamma => true,
            Signature::GammaBar => w.syllables().iter().all(|s| s.beta == 1),
        }
    }

    /// The generator lifts as matrices over Q(ζ₂₄)[z].
    pub fn generators(self) -> (Matrix2<Polynomial<Cyclotomic>>, Matrix2<Polynomial<Cyclotomic>>) {
        let c = |x: Cyclotomic| Polynomial::constant(x);
        let a = Matrix2::new(
            c(Cyclotomic::zeta_pow(4)),
            Polynomial::zero(),
            Polynomial::one(),
            c(Cyclotomic::zeta_pow(-4)),
        );
        let y_angle = match self {
            Signature::Gamma => 3,
            Signature::GammaBar => 6,
        };
        let b = Matrix2::new(
            c(Cyclotomic::zeta_pow(y_angle)),
            Polynomial::var(),
            Polynomial::zero(),
            c(Cyclotomic::zeta_pow(-y_angle)),
        );
        (a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceError {
    /// A y-exponent other than 1 under signature (3,2).
    SignatureMismatch,
    /// The word has a syllable with β = 2.
    KappaNonZero,
    /// w̄ is a proper power.
    QuotientProperPower,
    /// σ has a coefficient outside Z.
    NonIntegerCoefficient,
}

impl fmt::Display for TraceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceError::SignatureMismatch => f.write_str("word does not fit the signature"),
            TraceError::KappaNonZero => f.write_str("word contains y^2"),
            TraceError::QuotientProperPower => f.write_str("quotient word is a proper power"),
            TraceError::NonIntegerCoefficient => f.write_str("sigma has a non-integer coefficient"),
        }
    }
}

impl core::error::Error for TraceError {}

impl From<WordError> for TraceError {
    fn from(_: WordError) -> Self {
        TraceError::KappaNonZero
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReport {
    pub word: Word,
    pub signature: Signature,
    /// τ(λ) (or σ(μ) for (3,2)).
    pub tau: Polynomial<Cyclotomic>,
    pub degree: usize,
    pub leading: Cyclotomic,
    /// τ(0).
    pub constant: Cyclotomic,
    /// tr w(A, B) at z = 0.
    pub z_constant: Cyclotomic,
}

/// Precomputed syllable matrices AᵅBᵝ for one signature.
pub struct Tracer {
    signature: Signature,
    syllables: [[Matrix2<Polynomial<Cyclotomic>>; 3]; 2],
}

impl Tracer {
    pub fn new(signature: Signature) -> Self {
        let (a, b) = signature.generators();
        let syllables = [1u32, 2].map(|alpha| {
            let xa = a.pow(alpha);
            [1u32, 2, 3].map(|beta| xa.mul(&b.pow(beta)))
        });
        Tracer { signature, syllables }
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    /// tr w(A, B) as a polynomial in z.
    pub fn trace_in_z(&self, w: &Word) -> Result<Polynomial<Cyclotomic>, TraceError> {
        if !self.signature.admits(w) {
            return Err(TraceError::SignatureMismatch);
        }
        let mut it = w.syllables().iter();
        let first = it.next().expect("words are non-empty");
        let mut acc = self.syllables[first.alpha as usize - 1][first.beta as usize - 1].clone();
        for s in it {
            acc = acc.mul(&self.syllables[s.alpha as usize - 1][s.beta as usize - 1]);
        }
        Ok(acc.trace())
    }

    pub fn report(&self, w: &Word) -> Result<TraceReport, TraceError> {
        let in_z = self.trace_in_z(w)?;
        let z_constant = in_z.constant_term();
        let tau = in_z.shift(&self.signature.shift());
        let degree = tau.degree().unwrap_or(0);
        debug_assert_eq!(degree, w.len());
        Ok(TraceReport {
            word: w.clone(),
            signature: self.signature,
            leading: tau.leading(),
            constant: tau.constant_term(),
            degree,
            tau,
            z_constant,
        })
    }
}

pub fn trace_polynomial(w: &Word, sig: Signature) -> Result<TraceReport, TraceError> {
    Tracer::new(sig).report(w)
}

/// Integer polynomial in (tr X, tr Y, tr XY); keys are exponent triples.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TracePolynomial3 {
    terms: BTreeMap<[u32; 3], BigInt>,
}

impl TracePolynomial3 {
    fn constant(c: i64) -> Self {
        let mut t = Self::default();
        t.add_term([0, 0, 0], BigInt::from(c));
        t
    }

    fn variable(index: usize) -> Self {
        let mut e = [0u32; 3];
        e[index] = 1;
        let mut t = Self::default();
        t.add_term(e, BigInt::one());
        t
    }

    fn add_term(&mut self, e: [u32; 3], c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    /// Multiplies by one of the three trace variables.
    fn times_variable(&self, index: usize) -> Self {
        let mut out = Self::default();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[index] += 1;
            out.add_term(e2, c.clone());
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 3], BigInt> {
        &self.terms
    }

    /// Substitutes tr X, tr Y and λ = tr XY.
    pub fn instantiate(&self, trace_x: &Cyclotomic, trace_y: &Cyclotomic) -> Polynomial<Cyclotomic> {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            let coeff = trace_x
                .pow(e[0])
                .mul_ref(&trace_y.pow(e[1]))
                .scale(&Rational::from(c.clone()));
            let mut mono = vec![Cyclotomic::zero(); e[2] as usize + 1];
            mono[e[2] as usize] = coeff;
            out = out.add_ref(&Polynomial::new(mono));
        }
        out
    }
}

/// Cyclic word in X, Y with positive exponents: (generator, exponent).
type CyclicWord = Vec<(u8, u32)>;

/// tr of a cyclic word by Cayley–Hamilton reduction, memoized on the
/// least rotation.
struct Horowitz {
    memo: BTreeMap<CyclicWord, TracePolynomial3>,
}

impl Horowitz {
    fn normalize(w: &[(u8, u32)]) -> CyclicWord {
        let mut out: CyclicWord = Vec::with_capacity(w.len());
        for &(g, e) in w {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.0 == g => last.1 += e,
                _ => out.push((g, e)),
            }
        }
        while out.len() > 1 && out[0].0 == out[out.len() - 1].0 {
            let (_, e) = out.pop().unwrap();
            out[0].1 += e;
        }
        // least rotation
        let n = out.len();
        (0..n)
            .map(|r| {
                let mut v = out.clone();
                v.rotate_left(r);
                v
            })
            .min()
            .unwrap_or(out)
    }

    /// tr(Gⁿ) in terms of t = tr G, with t₀ = 2, t₁ = t.
    fn chebyshev(index: usize, n: u32) -> TracePolynomial3 {
        let mut prev = TracePolynomial3::constant(2);
        if n == 0 {
            return prev;
        }
        let mut cur = TracePolynomial3::variable(index);
        for _ in 1..n {
            let next = cur.times_variable(index).sub(&prev);
            prev = cur;
            cur = next;
        }
        cur
    }

    fn trace(&mut self, w: &[(u8, u32)]) -> TracePolynomial3 {
        let w = Self::normalize(w);
        if let Some(t) = self.memo.get(&w) {
            return t.clone();
        }
        let result = match w.len() {
            0 => TracePolynomial3::constant(2),
            1 => Self::chebyshev(w[0].0 as usize, w[0].1),
            _ => match w.iter().position(|&(_, e)| e >= 2) {
                // tr(U·Gᵉ) = tr G · tr(U·Gᵉ⁻¹) − tr(U·Gᵉ⁻²)
                Some(i) => {
                    let g = w[i].0 as usize;
                    let mut one_less = w.clone();
                    one_less[i].1 -= 1;
                    let mut two_less = w.clone();
                    two_less[i].1 -= 2;
                    let a = self.trace(&one_less).times_variable(g);
                    let b = self.trace(&two_less);
                    a.sub(&b)
                }
                // alternating XYXY⋯ = (XY)ⁿ
                None => Self::chebyshev(2, (w.len() / 2) as u32),
            },
        };
        self.memo.insert(w, result.clone());
        result
    }
}

/// Horowitz's integer polynomial for tr w(X, Y).
pub fn horowitz_polynomial(w: &Word) -> TracePolynomial3 {
    let letters: Vec<(u8, u32)> = w.letters().map(|(g, e)| (g, e as u32)).collect();
    Horowitz { memo: BTreeMap::new() }.trace(&letters)
}

/// τ computed from trace identities only, instantiated at
/// (tr X, tr Y, tr XY) = (1, 2cos(π/m), λ).
pub fn trace_polynomial_oracle(w: &Word, sig: Signature) -> Result<Polynomial<Cyclotomic>, TraceError> {
    if !sig.admits(w) {
        return Err(TraceError::SignatureMismatch);
    }
    Ok(horowitz_polynomial(w).instantiate(&sig.trace_x(), &sig.trace_y()))
}

/// Whether `p == q` or `p == −q`.
pub fn equal_up_to_sign<R: Ring>(p: &R, q: &R) -> bool {
    p == q || *p == q.neg_ref()
}

/// Leading coefficient of τ from the product of sine ratios
/// sin(απ/ℓ)sin(βπ/m) / (sin(π/ℓ)sin(π/m)), each ratio realized exactly as
/// a Chebyshev value in 2cos(π/n).
pub fn predicted_leading(w: &Word, sig: Signature) -> Cyclotomic {
    fn sine_ratio(trace: &Cyclotomic, e: u8) -> Cyclotomic {
        // sin(eθ)/sin θ = U_{e−1}(cos θ), with U₀ = 1, U₁ = 2cos θ.
        let mut prev = Cyclotomic::zero();
        let mut cur = Cyclotomic::one();
        for _ in 1..e {
            let next = trace.mul_ref(&cur).sub_ref(&prev);
            prev = cur;
            cur = next;
        }
        cur
    }
    let (tx, ty) = (sig.trace_x(), sig.trace_y());
    w.syllables().iter().fold(Cyclotomic::one(), |acc, s| {
        acc.mul_ref(&sine_ratio(&tx, s.alpha)).mul_ref(&sine_ratio(&ty, s.beta))
    })
}

/// The leading coefficient of τ is ±(√2)^κ and agrees with the sine-ratio
/// product.
pub fn leading_coefficient_check(report: &TraceReport) -> bool {
    let kappa = word_stats(&report.word).kappa as u32;
    let expected = Cyclotomic::sqrt2().pow(kappa);
    let predicted = predicted_leading(&report.word, report.signature);
    equal_up_to_sign(&report.leading, &expected) && equal_up_to_sign(&predicted, &expected)
}

/// tr w(A, B) at z = 0 equals 2cos((4∑α + 3∑β)π/12) exactly.
pub fn constant_term_check(report: &TraceReport) -> bool {
    let st = word_stats(&report.word);
    report.z_constant == Cyclotomic::two_cos(4 * st.sum_alpha + 3 * st.sum_beta)
}

/// Values 2cos(π/12) and 2cos(7π/12) of tr XY for the two essential
/// cyclic representations.
pub fn cyclic_trace_values() -> [Cyclotomic; 2] {
    [Cyclotomic::two_cos(1), Cyclotomic::two_cos(7)]
}

/// τ vanishes at 2cos(π/12) or 2cos(7π/12).
pub fn has_essential_cyclic(report: &TraceReport) -> bool {
    cyclic_trace_values().iter().any(|v| report.tau.eval(v).is_zero())
}

/// An essential homomorphism onto Z₁₂ by direct enumeration: images
/// (a, b) of x and y of orders 3 and 4 with w of order 2.
pub fn essential_cyclic_z12(w: &Word) -> Option<(i64, i64)> {
    let st = word_stats(w);
    [4i64, 8]
        .into_iter()
        .flat_map(|a| [3i64, 9].into_iter().map(move |b| (a, b)))
        .find(|&(a, b)| (a * st.sum_alpha + b * st.sum_beta).rem_euclid(12) == 6)
}

/// σ(μ) = tr w̄(X̄, Ȳ) with integer coefficients.
pub fn sigma_polynomial(w: &Word) -> Result<Polynomial<Rational>, TraceError> {
    let q = quotient_word(w)?;
    if q.proper_power {
        return Err(TraceError::QuotientProperPower);
    }
    let report = trace_polynomial(&q.word, Signature::GammaBar)?;
    let coeffs = report
        .tau
        .coeffs()
        .iter()
        .map(|c| c.to_rational().filter(Rational::is_integer))
        .collect::<Option<Vec<_>>>()
        .ok_or(TraceError::NonIntegerCoefficient)?;
    Ok(Polynomial::new(coeffs))
}

/// σ(μ) = ±σ(−μ)
pub fn sigma_is_symmetric(sigma: &Polynomial<Rational>) -> bool {
    equal_up_to_sign(sigma, &sigma.reflect())
}

/// Integer coefficients of an integer polynomial, lowest degree first.
pub fn integer_coefficients(p: &Polynomial<Rational>) -> Option<Vec<i64>> {
    p.coeffs().iter().map(Rational::to_i64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn lam(coeffs: &[Cyclotomic]) -> Polynomial<Cyclotomic> {
        Polynomial::new(coeffs.to_vec())
    }

    #[test]
    fn generator_traces() {
        let (a, b) = Signature::Gamma.generators();
        assert_eq!(a.trace(), Polynomial::constant(Cyclotomic::one()));
        assert_eq!(b.trace(), Polynomial::constant(Cyclotomic::sqrt2()));
        assert_eq!(a.det(), Polynomial::one());
        assert_eq!(b.det(), Polynomial::one());
        let (_, bb) = Signature::GammaBar.generators();
        assert_eq!(bb.trace(), Polynomial::zero());
    }

    #[test]
    fn small_tau() {
        let one = Cyclotomic::one();
        let s2 = Cyclotomic::sqrt2();
        let tau = |s: &str| trace_polynomial(&w(s), Signature::Gamma).unwrap().tau;
        assert_eq!(tau("xy"), lam(&[Cyclotomic::zero(), one.clone()]));
        assert_eq!(tau("xy2"), lam(&[-one.clone(), s2.clone()]));
        assert_eq!(tau("xy3"), lam(&[-s2, one]));
    }

    #[test]
    fn oracle_small_cases() {
        let one = Cyclotomic::one();
        let xy = trace_polynomial_oracle(&w("xy"), Signature::Gamma).unwrap();
        assert_eq!(xy, lam(&[Cyclotomic::zero(), one.clone()]));
        let sq = trace_polynomial_oracle(&w("xyxy"), Signature::Gamma).unwrap();
        assert_eq!(sq, lam(&[Cyclotomic::from_int(-2), Cyclotomic::zero(), one]));
        let p = horowitz_polynomial(&w("xy"));
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms().get(&[0, 0, 1]), Some(&BigInt::one()));
    }

    #[test]
    fn signature_mismatch() {
        assert_eq!(
            trace_polynomial(&w("xy2"), Signature::GammaBar),
            Err(TraceError::SignatureMismatch)
        );
    }

    #[test]
    fn leading_and_constant_checks() {
        for s in ["xy", "xy2", "xy3", "x2y2", "xyxy2", "xyxyx2y3x2yxy3"] {
            let r = trace_polynomial(&w(s), Signature::Gamma).unwrap();
            assert!(leading_coefficient_check(&r), "{}", s);
            assert!(constant_term_check(&r), "{}", s);
        }
        let r = trace_polynomial(&w("xy2"), Signature::Gamma).unwrap();
        assert!(equal_up_to_sign(&r.leading, &Cyclotomic::sqrt2()));
    }

    #[test]
    fn constant_term_values() {
        // xy: −(√6 − √2)/2 ; xy³: −(√6 + √2)/2
        let r = trace_polynomial(&w("xy"), Signature::Gamma).unwrap();
        let half = Rational::new(-1, 2);
        assert_eq!(r.z_constant, (Cyclotomic::sqrt6() - Cyclotomic::sqrt2()).scale(&half));
        let r = trace_polynomial(&w("xy3"), Signature::Gamma).unwrap();
        assert_eq!(r.z_constant, (Cyclotomic::sqrt6() + Cyclotomic::sqrt2()).scale(&half));
    }

    #[test]
    fn essential_cyclic_examples() {
        let check = |s: &str| has_essential_cyclic(&trace_polynomial(&w(s), Signature::Gamma).unwrap());
        assert!(!check("xy"));
        assert!(check("xyxy2xy3"));
        assert!(!check("xyxyx2y3x2yxy3"));
        assert_eq!(essential_cyclic_z12(&w("xyxy2xy3")), Some((4, 3)));
        assert_eq!(essential_cyclic_z12(&w("xy")), None);
    }

    #[test]
    fn sigma_examples() {
        let s = sigma_polynomial(&w("xy")).unwrap();
        assert_eq!(integer_coefficients(&s), Some(alloc::vec![0, 1]));
        assert!(sigma_is_symmetric(&s));
        assert_eq!(sigma_polynomial(&w("xy2")), Err(TraceError::KappaNonZero));
        assert_eq!(sigma_polynomial(&w("xyxy3")), Err(TraceError::QuotientProperPower));
    }
}
