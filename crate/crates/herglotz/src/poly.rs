//! Dense univariate polynomials with Gaussian-rational coefficients.

use crate::error::{Error, Result};
use crate::gauss::GaussRat;
use crate::rat::Rat;
use crate::rpoly::RPoly;
use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients ascending; the zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<GaussRat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(GaussRat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::new(vec![GaussRat::zero(), GaussRat::one()])
    }

    /// Monic linear factor `z - r`.
    pub fn linear(r: &GaussRat) -> Self {
        Poly::new(vec![-r, GaussRat::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| GaussRat::from_int(c)).collect())
    }

    pub fn from_real(p: &RPoly) -> Self {
        Poly::new(p.coeffs().iter().map(|c| GaussRat::from_rat(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussRat {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussRat> {
        self.coeffs.last()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussRat::is_real)
    }

    /// Real-coefficient view, if all imaginary parts vanish.
    pub fn to_real(&self) -> Option<RPoly> {
        if self.is_real() {
            Some(RPoly::new(self.coeffs.iter().map(|c| c.re.clone()).collect()))
        } else {
            None
        }
    }

    /// Real and imaginary coefficient parts, `p = re + i*im`.
    pub fn split_parts(&self) -> (RPoly, RPoly) {
        (
            RPoly::new(self.coeffs.iter().map(|c| c.re.clone()).collect()),
            RPoly::new(self.coeffs.iter().map(|c| c.im.clone()).collect()),
        )
    }

    /// Coefficient-wise conjugation, i.e. `z -> conj(p(conj(z)))`.
    pub fn conj_coeffs(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(GaussRat::conj).collect() }
    }

    pub fn eval(&self, x: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> GaussRat {
        self.eval(&GaussRat::from_rat(x.clone()))
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_c64();
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussRat::from_rat(Rat::from_integer(k.into())))
                .collect(),
        )
    }

    pub fn scale(&self, s: &GaussRat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let dl = d.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((Poly::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![GaussRat::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] * &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[k + j] = &rem[k + j] - &t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Internal("inexact polynomial division".into()))
        }
    }

    /// Monic gcd. Real inputs run on the integer pseudo-remainder kernel;
    /// genuinely complex inputs fall back to monic Euclid (they stay small
    /// in this crate).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if let (Some(a), Some(b)) = (self.to_real(), other.to_real()) {
            return Poly::from_real(&a.gcd(&b));
        }
        let mut a = self.monic();
        let mut b = other.monic();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun's squarefree decomposition: pairwise-coprime monic squarefree
    /// factors with multiplicities, ordered by increasing multiplicity.
    /// The product of `factor^multiplicity` reconstructs the input up to a
    /// constant. Constants decompose into the empty list.
    pub fn squarefree_decompose(&self) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.monic();
        if p.is_constant() {
            return Ok(vec![]);
        }
        let dp = p.derivative();
        let g = p.gcd(&dp);
        let mut w = p.exact_div(&g)?;
        let mut y = dp.exact_div(&g)?;
        let mut out = Vec::new();
        let mut mult = 1usize;
        loop {
            let z = &y - &w.derivative();
            if w.is_constant() {
                break;
            }
            let a = w.gcd(&z);
            if !a.is_constant() {
                out.push((a.monic(), mult));
            }
            w = w.exact_div(&a)?;
            y = z.exact_div(&a)?;
            mult += 1;
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*z"),
                _ => format!("({c})*z^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::x()
    }

    #[test]
    fn squarefree_cube() {
        // x^3 -> [(x, 3)]
        let p = x().pow(3);
        let d = p.squarefree_decompose().unwrap();
        assert_eq!(d, vec![(x(), 3)]);
    }

    #[test]
    fn squarefree_mixed() {
        // (x^2-1)^2 (x-2) -> [(x-2, 1), (x^2-1, 2)], verified by expansion
        let a = Poly::from_i64(&[-1, 0, 1]);
        let b = Poly::from_i64(&[-2, 1]);
        let p = &a.pow(2) * &b;
        let d = p.squarefree_decompose().unwrap();
        assert_eq!(d, vec![(b.clone(), 1), (a.clone(), 2)]);
        // reconstruction up to a constant (monic input here, so exact)
        let rebuilt = d
            .iter()
            .fold(Poly::one(), |acc, (f, m)| &acc * &f.pow(*m as u32));
        assert_eq!(rebuilt, p.monic());
    }

    #[test]
    fn squarefree_already() {
        let p = Poly::from_i64(&[1, 0, 1]);
        assert_eq!(p.squarefree_decompose().unwrap(), vec![(p.clone(), 1)]);
        assert!(Poly::zero().squarefree_decompose().is_err());
        assert_eq!(Poly::from_i64(&[5]).squarefree_decompose().unwrap(), vec![]);
    }

    #[test]
    fn complex_gcd() {
        // gcd((z-i)(z+1), (z-i)(z-3)) = z-i
        let zi = Poly::linear(&GaussRat::i());
        let p = &zi * &Poly::from_i64(&[1, 1]);
        let q = &zi * &Poly::from_i64(&[-3, 1]);
        assert_eq!(p.gcd(&q), zi.monic());
    }
}
