//! Gaussian rationals, the coefficient field for everything complex-valued.

use crate::rat::{format_rat, rat_int, rat_to_f64, Rat};
use num_complex::Complex64;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element of Q(i): `re + im*i` with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat { re: Rat::zero(), im: rat_int(1) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|^2, exact.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", format_rat(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", format_rat(&self.im))
        } else if self.im < Rat::zero() {
            write!(f, "{}{}i", format_rat(&self.re), format_rat(&self.im))
        } else {
            write!(f, "{}+{}i", format_rat(&self.re), format_rat(&self.im))
        }
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self * &rhs.inv().expect("division by zero GaussRat")
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re.clone(), im: -self.im.clone() }
    }
}

macro_rules! forward_owned {
    ($($t:ident :: $m:ident),*) => {$(
        impl $t for GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: GaussRat) -> GaussRat { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use proptest::prelude::*;

    fn arb_g() -> impl Strategy<Value = GaussRat> {
        ((-50i64..50, 1i64..20), (-50i64..50, 1i64..20))
            .prop_map(|((a, b), (c, d))| GaussRat::new(rat(a, b), rat(c, d)))
    }

    #[test]
    fn inverse_and_conjugation() {
        let z = GaussRat::new(rat(1, 2), rat(-3, 4));
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, GaussRat::one());
        assert_eq!(z.conj().conj(), z);
        assert_eq!(GaussRat::zero().inv(), None);
        assert_eq!(&GaussRat::i() * &GaussRat::i(), GaussRat::from_int(-1));
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_g(), b in arb_g(), c in arb_g()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), GaussRat::one());
            }
            // conjugation is a field involution
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        }
    }
}
