//! The cyclotomic field Q(ζ) with ζ = e^{iπ/12}, a primitive 24th root of
//! unity.
//!
//! Elements are stored in the power basis 1, ζ, …, ζ⁷ and reduced eagerly
//! with ζ⁸ = ζ⁴ − 1, so equality is coefficient-wise.

use core::fmt;
use core::str::FromStr;

use alloc::string::String;
use alloc::vec::Vec;
use num_complex::Complex64;

use super::rational::Rational;
use super::ring::{Field, Ring};
use super::AlgebraError;

pub const DEGREE: usize = 8;

/// Order of ζ.
pub const ORDER: i64 = 24;

/// Exponents j with gcd(j, 24) = 1: the Galois group acts by ζ ↦ ζʲ.
const UNITS_MOD_24: [usize; 8] = [1, 5, 7, 11, 13, 17, 19, 23];

const fn power_table() -> [[i8; DEGREE]; 24] {
    let mut t = [[0i8; DEGREE]; 24];
    t[0][0] = 1;
    let mut n = 1;
    while n < 24 {
        let prev = t[n - 1];
        let mut cur = [0i8; DEGREE];
        let mut j = 0;
        while j < DEGREE - 1 {
            cur[j + 1] = prev[j];
            j += 1;
        }
        cur[4] += prev[7];
        cur[0] -= prev[7];
        t[n] = cur;
        n += 1;
    }
    t
}

/// ζⁿ in the power basis, for n in 0..24.
static POWERS: [[i8; DEGREE]; 24] = power_table();

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    coeffs: [Rational; DEGREE],
}

impl Cyclotomic {
    pub fn from_coeffs(coeffs: [Rational; DEGREE]) -> Self {
        Cyclotomic { coeffs }
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = r;
        c
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn coeffs(&self) -> &[Rational; DEGREE] {
        &self.coeffs
    }

    /// ζⁿ for any integer n.
    pub fn zeta_pow(n: i64) -> Self {
        let row = &POWERS[n.rem_euclid(ORDER) as usize];
        Cyclotomic {
            coeffs: core::array::from_fn(|j| Rational::from_integer(row[j] as i64)),
        }
    }

    /// 2cos(nπ/12) = ζⁿ + ζ⁻ⁿ.
    pub fn two_cos(n: i64) -> Self {
        Self::zeta_pow(n).add_ref(&Self::zeta_pow(-n))
    }

    pub fn sqrt2() -> Self {
        Self::two_cos(3)
    }

    pub fn sqrt3() -> Self {
        Self::two_cos(2)
    }

    pub fn sqrt6() -> Self {
        Self::sqrt2().mul_ref(&Self::sqrt3())
    }

    pub fn i() -> Self {
        Self::zeta_pow(6)
    }

    /// The rational value, if this element lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            coeffs: core::array::from_fn(|j| self.coeffs[j].mul(r)),
        }
    }

    /// Image under the field automorphism ζ ↦ ζʲ (`j` coprime to 24).
    pub fn galois(&self, j: i64) -> Self {
        debug_assert!(j.rem_euclid(2) == 1 && j.rem_euclid(3) != 0);
        let mut acc = [(); DEGREE].map(|_| Rational::ZERO);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &POWERS[(i as i64 * j).rem_euclid(ORDER) as usize];
            for (slot, &p) in acc.iter_mut().zip(row.iter()) {
                if p != 0 {
                    *slot = slot.add(&c.mul(&Rational::from_integer(p as i64)));
                }
            }
        }
        Cyclotomic { coeffs: acc }
    }

    /// Complex conjugation, ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        self.galois(23)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let mut acc = self.clone();
        for &j in &UNITS_MOD_24[1..] {
            acc = acc.mul_ref(&self.galois(j as i64));
        }
        acc.to_rational().expect("norm of a cyclotomic number is rational")
    }

    pub fn try_inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut others = Self::one();
        for &j in &UNITS_MOD_24[1..] {
            others = others.mul_ref(&self.galois(j as i64));
        }
        let norm = self
            .mul_ref(&others)
            .to_rational()
            .expect("norm of a cyclotomic number is rational");
        Ok(others.scale(&norm.inv().expect("nonzero element has nonzero norm")))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul_ref(&rhs.try_inv()?))
    }

    /// Value under the embedding ζ ↦ e^{iπ/12}.
    pub fn to_complex(&self) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let theta = core::f64::consts::PI * j as f64 / 12.0;
            z += Complex64::new(libm::cos(theta), libm::sin(theta)) * c.to_f64();
        }
        z
    }

    fn mul_small(&self, rhs: &Self) -> Option<Self> {
        let mut a = [0i64; DEGREE];
        let mut b = [0i64; DEGREE];
        for j in 0..DEGREE {
            a[j] = self.coeffs[j].to_i64()?;
            b[j] = rhs.coeffs[j].to_i64()?;
        }
        let mut prod = [0i128; 2 * DEGREE - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = prod[i + j].checked_add(x as i128 * y as i128)?;
            }
        }
        for d in (DEGREE..2 * DEGREE - 1).rev() {
            let top = prod[d];
            prod[d - 4] = prod[d - 4].checked_add(top)?;
            prod[d - 8] = prod[d - 8].checked_sub(top)?;
        }
        let mut out = [0i64; DEGREE];
        for j in 0..DEGREE {
            out[j] = i64::try_from(prod[j]).ok()?;
        }
        Some(Cyclotomic {
            coeffs: out.map(Rational::from_integer),
        })
    }

    fn mul_general(&self, rhs: &Self) -> Self {
        let mut prod: Vec<Rational> = (0..2 * DEGREE - 1).map(|_| Rational::ZERO).collect();
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] = prod[i + j].add(&x.mul(y));
                }
            }
        }
        for d in (DEGREE..2 * DEGREE - 1).rev() {
            let top = core::mem::take(&mut prod[d]);
            prod[d - 4] = prod[d - 4].add(&top);
            prod[d - 8] = prod[d - 8].sub(&top);
        }
        prod.truncate(DEGREE);
        let mut it = prod.into_iter();
        Cyclotomic {
            coeffs: core::array::from_fn(|_| it.next().unwrap()),
        }
    }
}

impl Ring for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic {
            coeffs: [(); DEGREE].map(|_| Rational::ZERO),
        }
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Cyclotomic {
            coeffs: core::array::from_fn(|j| self.coeffs[j].add(&rhs.coeffs[j])),
        }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Cyclotomic {
            coeffs: core::array::from_fn(|j| self.coeffs[j].sub(&rhs.coeffs[j])),
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_small(rhs).unwrap_or_else(|| self.mul_general(rhs))
    }
    fn neg_ref(&self) -> Self {
        Cyclotomic {
            coeffs: core::array::from_fn(|j| self.coeffs[j].neg()),
        }
    }
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Field for Cyclotomic {
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

crate::impl_ring_ops!(Cyclotomic);

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.signum() < 0 { ("-", c.neg()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            match (j, mag == Rational::ONE) {
                (0, _) => write!(f, "{}", mag)?,
                (_, true) => write!(f, "ζ^{}", j)?,
                (_, false) => write!(f, "{}·ζ^{}", mag, j)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Named constants of Q(ζ₂₄).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constant {
    Sqrt2,
    Sqrt3,
    Sqrt6,
    I,
    /// e^{iπk/12}
    Exp(i64),
    /// 2cos(kπ/12)
    TwoCos(i64),
}

impl Constant {
    pub fn value(self) -> Cyclotomic {
        match self {
            Constant::Sqrt2 => Cyclotomic::sqrt2(),
            Constant::Sqrt3 => Cyclotomic::sqrt3(),
            Constant::Sqrt6 => Cyclotomic::sqrt6(),
            Constant::I => Cyclotomic::i(),
            Constant::Exp(k) => Cyclotomic::zeta_pow(k),
            Constant::TwoCos(k) => Cyclotomic::two_cos(k),
        }
    }

    pub fn approx(self) -> Complex64 {
        use core::f64::consts::PI;
        match self {
            Constant::Sqrt2 => Complex64::new(libm::sqrt(2.0), 0.0),
            Constant::Sqrt3 => Complex64::new(libm::sqrt(3.0), 0.0),
            Constant::Sqrt6 => Complex64::new(libm::sqrt(6.0), 0.0),
            Constant::I => Complex64::new(0.0, 1.0),
            Constant::Exp(k) => {
                let t = PI * k as f64 / 12.0;
                Complex64::new(libm::cos(t), libm::sin(t))
            }
            Constant::TwoCos(k) => Complex64::new(2.0 * libm::cos(PI * k as f64 / 12.0), 0.0),
        }
    }
}

impl FromStr for Constant {
    type Err = AlgebraError;

    /// Names: `sqrt2`, `sqrt3`, `sqrt6`, `i`, `exp(k)` for e^{iπk/12},
    /// `2cos(k)` for 2cos(kπ/12).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let unknown = || AlgebraError::UnknownConstant(String::from(s));
        let arg = |prefix: &str| -> Option<Result<i64, AlgebraError>> {
            let inner = s.strip_prefix(prefix)?.strip_suffix(')')?;
            Some(inner.trim().parse::<i64>().map_err(|_| unknown()))
        };
        match s {
            "sqrt2" => return Ok(Constant::Sqrt2),
            "sqrt3" => return Ok(Constant::Sqrt3),
            "sqrt6" => return Ok(Constant::Sqrt6),
            "i" => return Ok(Constant::I),
            _ => {}
        }
        if let Some(k) = arg("exp(") {
            return Ok(Constant::Exp(k?));
        }
        if let Some(k) = arg("2cos(") {
            return Ok(Constant::TwoCos(k?));
        }
        Err(unknown())
    }
}

/// Looks up a named constant; see [`Constant`] for the accepted names.
pub fn cyc_constant(name: &str) -> Result<Cyclotomic, AlgebraError> {
    Ok(name.parse::<Constant>()?.value())
}
