//! Reduced rational functions over the Gaussian rationals.
//!
//! Canonical form: `gcd(num, den) = 1` and the denominator monic, so
//! structural equality is function equality.

use crate::error::{Error, Result};
use crate::gauss::GaussRat;
use crate::poly::Poly;
use crate::rat::Rat;
use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFn { num: Poly::zero(), den: Poly::one() });
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g)?;
        let mut den = den.exact_div(&g)?;
        let lead_inv = den.leading().unwrap().inv().unwrap();
        num = num.scale(&lead_inv);
        den = den.scale(&lead_inv);
        Ok(RatFn { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn { num: p, den: Poly::one() }
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussRat::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// The identity function `z`.
    pub fn z() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<GaussRat> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// deg num - deg den; the degree of growth at infinity. `None` for 0.
    pub fn inf_degree(&self) -> Option<isize> {
        Some(self.num.degree()? as isize - self.den.degree().unwrap() as isize)
    }

    pub fn eval(&self, z: &GaussRat) -> Result<GaussRat> {
        let d = self.den.eval(z);
        if d.is_zero() {
            return Err(Error::EvalAtPole);
        }
        Ok(&self.num.eval(z) / &d)
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        self.num.eval_c64(z) / self.den.eval_c64(z)
    }

    pub fn inv(&self) -> Result<RatFn> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self) -> RatFn {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        RatFn::new(n, d).expect("nonzero denominator square")
    }

    /// `f^#(z) = conj(f(conj(z)))`: coefficient-wise conjugation. The
    /// denominator stays monic, so the result is canonical.
    pub fn sharp(&self) -> RatFn {
        RatFn { num: self.num.conj_coeffs(), den: self.den.conj_coeffs() }
    }

    /// `f = f^#`, which for the canonical form means all coefficients real.
    pub fn is_sharp_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }

    pub fn scale(&self, c: &GaussRat) -> RatFn {
        if c.is_zero() {
            return RatFn::zero();
        }
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn scale_rat(&self, c: &Rat) -> RatFn {
        self.scale(&GaussRat::from_rat(c.clone()))
    }

    /// Ratio of leading coefficients, i.e. `lim f(z)/z^inf_degree`.
    pub fn leading_ratio(&self) -> Option<GaussRat> {
        Some(&self.num.leading()?.clone() / self.den.leading().unwrap())
    }

    pub fn pow(&self, e: i32) -> Result<RatFn> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFn::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let d = &self.den * &rhs.den;
        RatFn::new(n, d).expect("nonzero denominators")
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        self * &rhs.inv().expect("division by zero function")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}
