use gtg_core::algebra::{Cyclotomic, Polynomial, Ring};
use gtg_core::certify::check_tau_form;
use gtg_core::trace::{
    constant_term_check, equal_up_to_sign, integer_coefficients, leading_coefficient_check, sigma_is_symmetric,
    sigma_polynomial, trace_polynomial, trace_polynomial_oracle, Signature, TraceError,
};
use gtg_core::words::{canonicalize, enumerate_words, word_stats, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn canonical_upto(k: usize) -> impl Iterator<Item = Word> {
    (1..=k).flat_map(enumerate_words)
}

fn tau(w: &Word) -> Polynomial<Cyclotomic> {
    trace_polynomial(w, Signature::Gamma).unwrap().tau
}

#[test]
fn oracle_matches_matrices_exhaustive_k4() {
    let mut n = 0;
    for w in canonical_upto(4) {
        let oracle = trace_polynomial_oracle(&w, Signature::Gamma).unwrap();
        assert!(equal_up_to_sign(&tau(&w), &oracle), "{}", w);
        n += 1;
    }
    assert_eq!(n, 2 + 6 + 14 + 63);
}

#[test]
fn oracle_matches_matrices_random_k10() {
    let mut rng = StdRng::seed_from_u64(0x7a11);
    for _ in 0..100 {
        let k = rng.gen_range(1..=10);
        let pairs: Vec<(u8, u8)> = (0..k).map(|_| (rng.gen_range(1..=2), rng.gen_range(1..=3))).collect();
        let w = Word::from_pairs(&pairs);
        let oracle = trace_polynomial_oracle(&w, Signature::Gamma).unwrap();
        assert!(equal_up_to_sign(&tau(&w), &oracle), "{}", w);
    }
}

#[test]
fn leading_and_constant_k4() {
    for w in canonical_upto(4) {
        let r = trace_polynomial(&w, Signature::Gamma).unwrap();
        assert_eq!(r.degree, w.len());
        assert!(leading_coefficient_check(&r), "leading {}", w);
        let kappa = word_stats(&w).kappa as u32;
        assert!(equal_up_to_sign(&r.leading, &Cyclotomic::sqrt2().pow(kappa)), "{}", w);
        assert!(constant_term_check(&r), "constant {}", w);
    }
}

#[test]
fn sigma_symmetric_and_integral_k5() {
    let mut checked = 0;
    for w in canonical_upto(5).filter(|w| word_stats(w).kappa == 0) {
        match sigma_polynomial(&w) {
            Ok(s) => {
                assert!(sigma_is_symmetric(&s), "{}: {}", w, s);
                assert!(integer_coefficients(&s).is_some(), "{}", w);
                assert_eq!(s.degree(), Some(w.len()));
                checked += 1;
            }
            Err(TraceError::QuotientProperPower) => {}
            Err(e) => panic!("{}: {}", w, e),
        }
    }
    assert!(checked > 20);
}

#[test]
fn tau_under_word_symmetries_k3() {
    let sqrt2 = Cyclotomic::sqrt2();
    for k in 1..=3 {
        for w in gtg_core::words::all_words(k) {
            let t = tau(&w);
            let form = check_tau_form(&trace_polynomial(&w, Signature::Gamma).unwrap()).matches;
            for v in [w.rotate(1), w.inverse()] {
                assert!(equal_up_to_sign(&tau(&v), &t), "{} vs {}", w, v);
            }
            // x ↦ x² and y ↦ y³ send the roots r to √2 − r.
            let mirrored = t.shift(&sqrt2).reflect();
            for v in [w.flip_x(), w.flip_y()] {
                assert!(equal_up_to_sign(&tau(&v), &mirrored), "{} vs {}", w, v);
            }
            let c = canonicalize(&w);
            let cf = check_tau_form(&trace_polynomial(&c, Signature::Gamma).unwrap()).matches;
            assert_eq!(form, cf, "{} vs {}", w, c);
        }
    }
}
