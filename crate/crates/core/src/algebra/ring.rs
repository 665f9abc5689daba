use core::fmt::Debug;

/// A commutative ring with identity.
///
/// Operations take references so that coefficient types with heap storage are
/// not cloned on every product.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_i64(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

/// Implements `Add`, `Sub`, `Mul`, `Neg` (owned and borrowed) in terms of
/// [`Ring`] methods.
#[macro_export]
#[doc(hidden)]
macro_rules! impl_ring_ops {
    ($t:ty $(, $g:ident)?) => {
        impl$(<$g: $crate::algebra::Ring>)? core::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $crate::algebra::Ring::add_ref(&self, &rhs)
            }
        }
        impl<'a $(, $g: $crate::algebra::Ring)?> core::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                $crate::algebra::Ring::add_ref(self, rhs)
            }
        }
        impl$(<$g: $crate::algebra::Ring>)? core::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $crate::algebra::Ring::sub_ref(&self, &rhs)
            }
        }
        impl<'a $(, $g: $crate::algebra::Ring)?> core::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                $crate::algebra::Ring::sub_ref(self, rhs)
            }
        }
        impl$(<$g: $crate::algebra::Ring>)? core::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $crate::algebra::Ring::mul_ref(&self, &rhs)
            }
        }
        impl<'a $(, $g: $crate::algebra::Ring)?> core::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                $crate::algebra::Ring::mul_ref(self, rhs)
            }
        }
        impl$(<$g: $crate::algebra::Ring>)? core::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::algebra::Ring::neg_ref(&self)
            }
        }
        impl<'a $(, $g: $crate::algebra::Ring)?> core::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::algebra::Ring::neg_ref(self)
            }
        }
    };
}
