use core::fmt;

use super::ring::{Field, Ring};

/// `value + eps·ε` with ε² = 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dual<R> {
    pub value: R,
    pub eps: R,
}

impl<R: Ring> Dual<R> {
    pub fn new(value: R, eps: R) -> Self {
        Dual { value, eps }
    }

    pub fn constant(value: R) -> Self {
        Dual { value, eps: R::zero() }
    }

    /// ε itself.
    pub fn epsilon() -> Self {
        Dual {
            value: R::zero(),
            eps: R::one(),
        }
    }
}

impl<R: Ring> Ring for Dual<R> {
    fn zero() -> Self {
        Self::constant(R::zero())
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.eps.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Dual::new(self.value.add_ref(&rhs.value), self.eps.add_ref(&rhs.eps))
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Dual::new(self.value.sub_ref(&rhs.value), self.eps.sub_ref(&rhs.eps))
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Dual::new(
            self.value.mul_ref(&rhs.value),
            self.value
                .mul_ref(&rhs.eps)
                .add_ref(&self.eps.mul_ref(&rhs.value)),
        )
    }
    fn neg_ref(&self) -> Self {
        Dual::new(self.value.neg_ref(), self.eps.neg_ref())
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(R::from_i64(n))
    }
}

impl<R: Field> Field for Dual<R> {
    /// (a + bε)⁻¹ = a⁻¹ − b·a⁻²·ε; only defined for a ≠ 0.
    fn inv(&self) -> Option<Self> {
        let a_inv = self.value.inv()?;
        let eps = self.eps.mul_ref(&a_inv).mul_ref(&a_inv).neg_ref();
        Some(Dual::new(a_inv, eps))
    }
}

crate::impl_ring_ops!(Dual<R>, R);

impl<R: fmt::Debug> fmt::Debug for Dual<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + ({:?})ε)", self.value, self.eps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cyclotomic;

    #[test]
    fn epsilon_squares_to_zero() {
        let e: Dual<Cyclotomic> = Dual::epsilon();
        assert!((&e * &e).is_zero());
    }

    #[test]
    fn product_rule() {
        let a = Dual::new(Cyclotomic::from_int(2), Cyclotomic::from_int(3));
        let b = Dual::new(Cyclotomic::sqrt2(), Cyclotomic::from_int(5));
        let p = &a * &b;
        assert_eq!(p.value, Cyclotomic::sqrt2().scale(&2.into()));
        assert_eq!(p.eps, Cyclotomic::from_int(10) + Cyclotomic::sqrt2().scale(&3.into()));
    }

    #[test]
    fn invertibility() {
        let a = Dual::new(Cyclotomic::sqrt3(), Cyclotomic::from_int(7));
        assert_eq!(&a * &a.inv().unwrap(), Dual::one());
        let nil = Dual::new(Cyclotomic::zero(), Cyclotomic::from_int(1));
        assert!(nil.inv().is_none());
    }
}
