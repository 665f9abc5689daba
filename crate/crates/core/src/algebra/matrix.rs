use core::fmt;

use super::ring::Ring;

/// A 2×2 matrix `[[a, b], [c, d]]` over a commutative ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Matrix2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::scalar(R::one())
    }

    pub fn scalar(s: R) -> Self {
        Matrix2::new(s.clone(), R::zero(), R::zero(), s)
    }

    pub fn zero() -> Self {
        Self::scalar(R::zero())
    }

    pub fn trace(&self) -> R {
        self.a.add_ref(&self.d)
    }

    pub fn det(&self) -> R {
        self.a.mul_ref(&self.d).sub_ref(&self.b.mul_ref(&self.c))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Matrix2 {
            a: self.a.mul_ref(&rhs.a).add_ref(&self.b.mul_ref(&rhs.c)),
            b: self.a.mul_ref(&rhs.b).add_ref(&self.b.mul_ref(&rhs.d)),
            c: self.c.mul_ref(&rhs.a).add_ref(&self.d.mul_ref(&rhs.c)),
            d: self.c.mul_ref(&rhs.b).add_ref(&self.d.mul_ref(&rhs.d)),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, R::add_ref)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, R::sub_ref)
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg_ref)
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|x| x.mul_ref(s))
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Matrix2<S> {
        Matrix2 {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
        }
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        Matrix2 {
            a: f(&self.a, &rhs.a),
            b: f(&self.b, &rhs.b),
            c: f(&self.c, &rhs.c),
            d: f(&self.d, &rhs.d),
        }
    }

    /// Square-and-multiply power.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Adjugate; equals the inverse when `det = 1`.
    pub fn adjugate(&self) -> Self {
        Matrix2 {
            a: self.d.clone(),
            b: self.b.neg_ref(),
            c: self.c.neg_ref(),
            d: self.a.clone(),
        }
    }
}

impl<R: fmt::Debug> fmt::Debug for Matrix2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{:?}, {:?}], [{:?}, {:?}]]", self.a, self.b, self.c, self.d)
    }
}

/// Dual-number matrix powers: `m` raised to `n` with ε² = 0 enforced by the
/// coefficient ring.
pub fn dual_matrix_pow<R: super::Field>(
    m: &Matrix2<super::Dual<R>>,
    n: u32,
) -> Matrix2<super::Dual<R>> {
    m.pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Cyclotomic, Dual};

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_int(n)
    }

    #[test]
    fn rotation_squares_to_minus_identity() {
        let y = Matrix2::new(c(0), c(-1), c(1), c(0));
        assert_eq!(y.pow(2), Matrix2::scalar(c(-1)));
        assert_eq!(y.pow(4), Matrix2::identity());
    }

    #[test]
    fn dual_identity_power() {
        let id: Matrix2<Dual<Cyclotomic>> = Matrix2::identity();
        for n in 0..6 {
            assert_eq!(dual_matrix_pow(&id, n), id);
        }
    }

    #[test]
    fn adjugate_inverts_unimodular() {
        let m = Matrix2::new(c(2), c(3), c(1), c(2));
        assert_eq!(m.mul(&m.adjugate()), Matrix2::identity());
    }
}
