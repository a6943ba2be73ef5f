use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gaussian::Gaussian;
use super::poly::QPoly;
use super::FieldError;

/// An element of Q(i)(q) kept as `numerator / denominator` with coprime
/// parts and a monic denominator, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    num: QPoly,
    den: QPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_gaussian(Gaussian::one())
    }

    pub fn i() -> Self {
        Scalar::from_gaussian(Gaussian::i())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Scalar {
            num: QPoly::monomial(Gaussian::one(), 1),
            den: QPoly::one(),
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = QPoly::monomial(Gaussian::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Scalar { num: m, den: QPoly::one() }
        } else {
            Scalar { num: QPoly::one(), den: m }
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_gaussian(Gaussian::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_gaussian(Gaussian::from_ratio(n, d))
    }

    pub fn from_gaussian(g: Gaussian) -> Self {
        Scalar {
            num: QPoly::constant(g),
            den: QPoly::one(),
        }
    }

    /// Builds `Σ num[k] q^k / Σ den[k] q^k`, normalizing.
    pub fn from_coeffs(num: Vec<Gaussian>, den: Vec<Gaussian>) -> Result<Self, FieldError> {
        let mut n = QPoly::zero();
        for (k, c) in num.into_iter().enumerate() {
            n = n.add(&QPoly::monomial(c, k));
        }
        let mut d = QPoly::zero();
        for (k, c) in den.into_iter().enumerate() {
            d = d.add(&QPoly::monomial(c, k));
        }
        Scalar::from_parts(n, d)
    }

    fn from_parts(num: QPoly, den: QPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = d.lc().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.inv().unwrap();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Ok(Scalar { num: n, den: d })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on `q`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// The Gaussian value when `is_constant`.
    pub fn as_gaussian(&self) -> Option<Gaussian> {
        if !self.is_constant() {
            return None;
        }
        Some(self.num.coeffs.first().cloned().unwrap_or_else(Gaussian::zero))
    }

    pub fn numerator_coeffs(&self) -> &[Gaussian] {
        &self.num.coeffs
    }

    pub fn denominator_coeffs(&self) -> &[Gaussian] {
        &self.den.coeffs
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        let inv = rhs.inv()?;
        Ok(self * &inv)
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Scalar::from_parts(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Result<Scalar, FieldError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Substitutes `q = value`.
    pub fn eval_q(&self, value: &Gaussian) -> Result<Gaussian, FieldError> {
        let d = self.den.eval(value);
        let dinv = d.inv().ok_or_else(|| FieldError::Pole(value.to_string()))?;
        Ok(&self.num.eval(value) * &dinv)
    }

    /// Substitutes `q = value` and returns the result as a constant scalar.
    pub fn specialize(&self, value: &Gaussian) -> Result<Scalar, FieldError> {
        if self.is_constant() {
            return Ok(self.clone());
        }
        self.eval_q(value).map(Scalar::from_gaussian)
    }

    /// Size measure used to pick sparse pivots.
    pub(crate) fn weight(&self) -> usize {
        self.num.term_count() + self.den.term_count()
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar {
                num: self.num.add(&rhs.num),
                den: QPoly::one(),
            };
        }
        if self.den == rhs.den {
            return Scalar::from_parts(self.num.add(&rhs.num), self.den.clone()).unwrap();
        }
        let g = self.den.gcd(&rhs.den);
        let l = self.den.exact_div(&g);
        let r = rhs.den.exact_div(&g);
        let num = self.num.mul(&r).add(&rhs.num.mul(&l));
        let den = self.den.mul(&r);
        Scalar::from_parts(num, den).unwrap()
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar {
                num: self.num.mul(&rhs.num),
                den: QPoly::one(),
            };
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1);
        let d2 = rhs.den.exact_div(&g1);
        let n2 = rhs.num.exact_div(&g2);
        let d1 = self.den.exact_div(&g2);
        Scalar::from_parts(n1.mul(&n2), d1.mul(&d2)).unwrap()
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] to handle it.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Gaussian> for Scalar {
    fn from(g: Gaussian) -> Self {
        Scalar::from_gaussian(g)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num.render(0));
        }
        // q^k denominators print as Laurent polynomials
        if self.den.term_count() == 1 {
            let k = self.den.degree().unwrap() as i64;
            return write!(f, "{}", self.num.render(k));
        }
        let n = self.num.render(0);
        let n = if self.num.term_count() > 1 || n.contains(' ') {
            format!("({n})")
        } else {
            n
        };
        write!(f, "{}/({})", n, self.den.render(0))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
