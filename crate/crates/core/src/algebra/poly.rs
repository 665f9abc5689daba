//! Dense univariate polynomials, lowest degree first.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use super::ring::{Field, Ring};
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    /// `variable - root`
    pub fn linear_factor(root: &R) -> Self {
        Self::new(vec![root.neg_ref(), R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn constant_term(&self) -> R {
        self.coeff(0)
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// p(x + shift), by Horner's rule.
    pub fn shift(&self, shift: &R) -> Self {
        let step = Self::new(vec![shift.clone(), R::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul_ref(&step).add_ref(&Self::constant(c.clone())))
    }

    /// p(−x)
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg_ref() } else { c.clone() })
                .collect(),
        )
    }

    /// Multiplicity of 0 as a root, i.e. the number of vanishing low-order
    /// coefficients. The zero polynomial reports 0.
    pub fn valuation(&self) -> usize {
        if self.coeffs.is_empty() {
            return 0;
        }
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by x^n, discarding the low coefficients.
    pub fn shift_down(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().skip(n).cloned().collect())
    }
}

impl<R: Field> Polynomial<R> {
    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self), AlgebraError> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lead_inv = d.leading().inv().ok_or(AlgebraError::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        let n = match self.degree() {
            Some(n) if n >= dd => n,
            _ => return Ok((Self::zero(), self.clone())),
        };
        let mut quot = vec![R::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = rem[i + dd].mul_ref(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub_ref(&c.mul_ref(dc));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Largest m with `factor^m | self`, together with the cofactor.
    /// The zero polynomial reports multiplicity 0.
    pub fn factor_multiplicity(&self, factor: &Self) -> Result<(usize, Self), AlgebraError> {
        if factor.degree().unwrap_or(0) == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut m = 0;
        let mut cur = self.clone();
        if cur.is_zero() {
            return Ok((0, cur));
        }
        loop {
            let (q, r) = cur.divrem(factor)?;
            if !r.is_zero() {
                return Ok((m, cur));
            }
            m += 1;
            cur = q;
        }
    }
}

impl<R: Ring> Ring for Polynomial<R> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.add_ref(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::new(out)
    }
    fn neg_ref(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(R::from_i64(n))
    }
}

crate::impl_ring_ops!(Polynomial<R>, R);

impl<R: Ring + fmt::Display> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})·x", c)?,
                _ => write!(f, "({})·x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

impl<R: fmt::Debug> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
