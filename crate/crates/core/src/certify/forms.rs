//! Shape tests for τ and σ.

use crate::algebra::{Cyclotomic, Polynomial, Rational, Ring};
use crate::trace::{Signature, TraceReport};
use crate::words::{word_stats, WordStats};

/// Result of matching τ(λ) = ±(√2)^κ λ^s (λ − √2)^{k−s}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TauFormCheck {
    pub matches: bool,
    /// Multiplicity of the root 0.
    pub s: usize,
    pub kappa_used: usize,
    pub sign: i8,
}

pub fn check_tau_form(report: &TraceReport) -> TauFormCheck {
    let k = report.word.len();
    let kappa = word_stats(&report.word).kappa;
    let tau = &report.tau;
    let s = tau.valuation();
    let fail = TauFormCheck { matches: false, s, kappa_used: kappa, sign: 1 };
    if report.signature != Signature::Gamma || tau.is_zero() || s > k {
        return fail;
    }
    let mut rest = tau.shift_down(s);
    let factor = Polynomial::linear_factor(&Cyclotomic::sqrt2());
    for _ in 0..k - s {
        match rest.divrem(&factor) {
            Ok((q, r)) if r.is_zero() => rest = q,
            _ => return fail,
        }
    }
    if rest.degree() != Some(0) {
        return fail;
    }
    let c = rest.constant_term();
    let expected = Cyclotomic::sqrt2().pow(kappa as u32);
    let sign = if c == expected {
        1
    } else if c == expected.neg_ref() {
        -1
    } else {
        return fail;
    };
    TauFormCheck { matches: true, s, kappa_used: kappa, sign }
}

/// Result of matching σ(μ) = ±μ^{u₁}(μ²−1)^{u₂}(μ²−2)^{u₃}(μ⁴−3μ²+1)^{u₄}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaFormCheck {
    pub matches: bool,
    pub u1: usize,
    pub u2: usize,
    pub u3: usize,
    pub u4: usize,
    pub sign: i8,
}

fn int_poly(c: &[i64]) -> Polynomial<Rational> {
    Polynomial::new(c.iter().map(|&v| Rational::from_integer(v)).collect())
}

pub fn check_sigma_form(sigma: &Polynomial<Rational>, k: usize) -> SigmaFormCheck {
    let factors = [
        int_poly(&[0, 1]),
        int_poly(&[-1, 0, 1]),
        int_poly(&[-2, 0, 1]),
        int_poly(&[1, 0, -3, 0, 1]),
    ];
    let mut u = [0usize; 4];
    let mut rest = sigma.clone();
    for (slot, f) in u.iter_mut().zip(&factors) {
        match rest.factor_multiplicity(f) {
            Ok((m, q)) => {
                *slot = m;
                rest = q;
            }
            Err(_) => return SigmaFormCheck { matches: false, u1: 0, u2: 0, u3: 0, u4: 0, sign: 1 },
        }
    }
    let sign = if rest == int_poly(&[1]) {
        1
    } else if rest == int_poly(&[-1]) {
        -1
    } else {
        0
    };
    let degree_ok = u[0] + 2 * u[1] + 2 * u[2] + 4 * u[3] == k;
    SigmaFormCheck {
        matches: sign != 0 && degree_ok,
        u1: u[0],
        u2: u[1],
        u3: u[2],
        u4: u[3],
        sign: if sign == 0 { 1 } else { sign },
    }
}

/// σ(−√3) = ±√3, i.e. the constant term of σ(z − √3) at z = 0.
pub fn sigma_constant_check(sigma: &Polynomial<Rational>) -> bool {
    let at = Cyclotomic::sqrt3().neg_ref();
    let value = sigma.map(|c| Cyclotomic::from_rational(c.clone())).eval(&at);
    value == Cyclotomic::sqrt3() || value == at
}

/// 4∑α + 3∑β ≡ 1, 5, 7 or 11 (mod 12).
pub fn mod12_check(stats: &WordStats) -> bool {
    matches!(stats.mod12, 1 | 5 | 7 | 11)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::trace_polynomial;
    use crate::words::Word;

    fn report_with(tau: Polynomial<Cyclotomic>, word: &str) -> TraceReport {
        let mut r = trace_polynomial(&word.parse::<Word>().unwrap(), Signature::Gamma).unwrap();
        r.tau = tau;
        r
    }

    #[test]
    fn synthetic_tau_form() {
        // λ(λ − √2)², k = 3, κ = 0
        let lam = Polynomial::<Cyclotomic>::var();
        let f = Polynomial::linear_factor(&Cyclotomic::sqrt2());
        let tau = lam.mul_ref(&f).mul_ref(&f);
        let c = check_tau_form(&report_with(tau.clone(), "xyxyxy3"));
        assert!(c.matches);
        assert_eq!((c.s, c.sign), (1, 1));
        let c = check_tau_form(&report_with(tau.neg_ref(), "xyxyxy3"));
        assert_eq!((c.matches, c.sign), (true, -1));
    }

    #[test]
    fn xy2_fails_tau_form() {
        let r = trace_polynomial(&"xy2".parse().unwrap(), Signature::Gamma).unwrap();
        assert!(!check_tau_form(&r).matches);
    }

    #[test]
    fn k5_survivor_matches() {
        let r = trace_polynomial(&"xyxyx2y3x2yxy3".parse().unwrap(), Signature::Gamma).unwrap();
        let c = check_tau_form(&r);
        assert!(c.matches);
        assert_eq!(c.kappa_used, 0);
        assert_eq!((5i64 - 2 * c.s as i64).abs(), 1);
    }

    #[test]
    fn sigma_forms() {
        let c = check_sigma_form(&int_poly(&[0, -2, 0, 1]), 3);
        assert!(c.matches);
        assert_eq!((c.u1, c.u2, c.u3, c.u4), (1, 0, 1, 0));
        let c = check_sigma_form(&int_poly(&[0, 1, 0, -3, 0, 1]), 5);
        assert_eq!((c.matches, c.u1, c.u4), (true, 1, 1));
        let c = check_sigma_form(&int_poly(&[0, 0, 0, 1]), 3);
        assert_eq!((c.matches, c.u1), (true, 3));
        let c = check_sigma_form(&int_poly(&[0, 0, 0, 2]), 3);
        assert!(!c.matches);
        let c = check_sigma_form(&int_poly(&[0, 1]), 3);
        assert!(!c.matches);
    }

    #[test]
    fn mod12_examples() {
        let st = |s: &str| word_stats(&s.parse().unwrap());
        assert_eq!(st("xyxyx2y3x2yxy3").mod12, 7);
        assert!(mod12_check(&st("xyxyx2y3x2yxy3")));
        assert!(mod12_check(&st("xy")));
        assert_eq!(st("xy2").mod12, 10);
        assert!(!mod12_check(&st("xy2")));
    }

    #[test]
    fn sigma_constant() {
        // μ(μ² − 2) at −√3 is −√3.
        assert!(sigma_constant_check(&int_poly(&[0, -2, 0, 1])));
        assert!(!sigma_constant_check(&int_poly(&[0, 0, 0, 1])));
    }
}
