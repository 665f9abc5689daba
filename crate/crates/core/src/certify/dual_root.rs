//! The first-order deformation of the S₄ representation at μ = √2.

use alloc::format;
use alloc::vec::Vec;

use super::{Check, SuiteReport};
use crate::algebra::{Cyclotomic, Dual, Matrix2, Ring};

type D = Dual<Cyclotomic>;

fn c(x: Cyclotomic) -> D {
    Dual::constant(x)
}

/// ρ(x) = [[e^{iπ/3}, μ], [0, e^{−iπ/3}]], ρ(y) = [[0, −1], [1, 0]] at
/// μ = √2 + ε.
fn generators(mu: D) -> (Matrix2<D>, Matrix2<D>) {
    let x = Matrix2::new(c(Cyclotomic::zeta_pow(4)), mu, D::zero(), c(Cyclotomic::zeta_pow(-4)));
    let y = Matrix2::new(D::zero(), D::one().neg_ref(), D::one(), D::zero());
    (x, y)
}

/// M = [[2√2, −2(1 + i√3)], [2(1 − i√3), −2√2]]
fn expected_m() -> Matrix2<Cyclotomic> {
    let two = Cyclotomic::from_int(2);
    let i_sqrt3 = Cyclotomic::i().mul_ref(&Cyclotomic::sqrt3());
    let s = two.mul_ref(&Cyclotomic::sqrt2());
    Matrix2::new(
        s.clone(),
        two.mul_ref(&Cyclotomic::one().add_ref(&i_sqrt3)).neg_ref(),
        two.mul_ref(&Cyclotomic::one().sub_ref(&i_sqrt3)),
        s.neg_ref(),
    )
}

pub fn dual_root_report() -> SuiteReport {
    let mu = Dual::new(Cyclotomic::sqrt2(), Cyclotomic::one());
    let (x, y) = generators(mu.clone());
    let xy = x.mul(&y);
    let xy4 = xy.pow(4);
    let m = expected_m();
    let minus_i = Matrix2::<D>::identity().neg();
    let value = xy4.map(|d| d.value.clone());
    let eps = xy4.map(|d| d.eps.clone());
    let plain_x = x.map(|d| d.value.clone());
    let plain_y = y.map(|d| d.value.clone());
    let plain = plain_x.mul(&plain_y).pow(4);
    let x3 = x.pow(3);
    let mut checks = Vec::new();
    checks.push(Check::new("tr rho(x) = 1", x.trace() == D::one(), format!("{}", x.trace().value)));
    checks.push(Check::new("rho(y)^2 = -I", y.pow(2) == minus_i, "exact"));
    checks.push(Check::new(
        "tr rho(x)rho(y) = sqrt2 + eps",
        xy.trace() == mu,
        format!("value {}, eps {}", xy.trace().value, xy.trace().eps),
    ));
    checks.push(Check::new(
        "rho((xy)^4) = -I + eps*M",
        value == Matrix2::identity().neg() && eps == m,
        format!("eps part [[{}, {}], [{}, {}]]", eps.a, eps.b, eps.c, eps.d),
    ));
    checks.push(Check::new("M != 0", !m.is_zero(), "exact"));
    checks.push(Check::new("rho(x)^3 = -I", x3 == minus_i, "order-3 lift"));
    checks.push(Check::new(
        "value part matches mu = sqrt2",
        plain == value,
        "projection of the dual computation",
    ));
    SuiteReport { suite: "dual_root".into(), checks }
}

/// All dual-number identities of the S₄ deformation hold exactly.
pub fn dual_root_certificate() -> bool {
    dual_root_report().passed()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_holds() {
        let r = dual_root_report();
        for c in &r.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert!(dual_root_certificate());
    }
}
