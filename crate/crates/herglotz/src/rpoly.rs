//! Dense univariate polynomials with rational coefficients.
//!
//! This is the workhorse of the real-root machinery: Sturm chains, interval
//! evaluation and the Cauchy root bound all live here. Complex-coefficient
//! polynomials are in [`crate::poly`]; they project down to `RPoly` when a
//! realness check has passed.

use crate::error::{Error, Result};
use crate::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

// ---------------------------------------------------------------------
// integer polynomial kernel
//
// Remainder sequences over Q suffer quadratic coefficient blowup from the
// per-step fraction reductions. The gcd and Sturm-chain hot paths therefore
// run on primitive integer polynomials with positive-multiplier
// pseudo-remainders; contents are stripped after every step.
// ---------------------------------------------------------------------

type ZPoly = Vec<BigInt>; // ascending, trimmed, primitive unless noted

fn zp_trim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn zp_content(p: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn zp_primitive(p: ZPoly) -> ZPoly {
    let p = zp_trim(p);
    let g = zp_content(&p);
    if g.is_zero() || g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Clears denominators and strips content.
fn zp_from_rpoly(p: &RPoly) -> ZPoly {
    let mut lcm = BigInt::one();
    for c in &p.coeffs {
        lcm = lcm.lcm(c.denom());
    }
    zp_primitive(
        p.coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect(),
    )
}

fn zp_to_rpoly(p: &ZPoly) -> RPoly {
    RPoly::new(p.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

fn zp_derivative(p: &ZPoly) -> ZPoly {
    if p.len() <= 1 {
        return vec![];
    }
    zp_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect(),
    )
}

/// Pseudo-remainder of `a` by `b` premultiplied by an even power of the
/// leading coefficient of `b`, so the result differs from the true
/// remainder by a positive factor (required for Sturm sign fidelity).
fn zp_prem_pos(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut rem = a.clone();
    let mut steps = 0usize;
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let lead = rem.last().unwrap().clone();
        // rem = lb * rem - lead * x^k * b
        for c in rem.iter_mut() {
            *c *= &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[k + j] -= &lead * bc;
        }
        rem = zp_trim(rem);
        steps += 1;
        if rem.is_empty() {
            break;
        }
    }
    // each elimination step multiplied by lb once; square the factor when
    // it was applied an odd number of times and lb is negative
    if steps % 2 == 1 && lb.is_negative() {
        for c in rem.iter_mut() {
            *c = -&*c;
        }
    }
    rem
}

fn zp_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut a = zp_primitive(a.clone());
    let mut b = zp_primitive(b.clone());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = zp_primitive(zp_prem_pos(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// Sign of `p(u/v)` for integers `u`, `v > 0`: the sign of the homogeneous
/// evaluation `sum c_k u^k v^(d-k)` by Horner with cached powers of `v`.
fn zp_sign_at(p: &ZPoly, u: &BigInt, v: &BigInt) -> i32 {
    if p.is_empty() {
        return 0;
    }
    let d = p.len() - 1;
    let mut vpow = Vec::with_capacity(d + 1);
    vpow.push(BigInt::one());
    for k in 0..d {
        let next = &vpow[k] * v;
        vpow.push(next);
    }
    let mut acc = BigInt::zero();
    for (k, c) in p.iter().enumerate().rev() {
        acc = acc * u + c * &vpow[d - k];
    }
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

/// Coefficients ascending; the zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RPoly {
    coeffs: Vec<Rat>,
}

impl RPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RPoly { coeffs }
    }

    pub fn zero() -> Self {
        RPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RPoly::new(vec![c])
    }

    pub fn x() -> Self {
        RPoly::new(vec![Rat::zero(), Rat::one()])
    }

    /// Monic linear factor `x - r`.
    pub fn linear(r: &Rat) -> Self {
        RPoly::new(vec![-r.clone(), Rat::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RPoly::new(coeffs.iter().map(|&c| crate::rat::rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(x)` through the integer kernel: avoids rational
    /// normalization inside the Horner loop.
    pub fn eval_sign(&self, x: &Rat) -> i32 {
        if self.is_zero() {
            return 0;
        }
        zp_sign_at(&zp_from_rpoly(self), x.numer(), x.denom())
    }

    /// Interval extension of the polynomial over `[lo, hi]` (Horner with
    /// interval arithmetic). Returns an enclosure of the range.
    pub fn eval_interval(&self, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
        let mut alo = Rat::zero();
        let mut ahi = Rat::zero();
        for c in self.coeffs.iter().rev() {
            // [alo, ahi] * [lo, hi]
            let p1 = &alo * lo;
            let p2 = &alo * hi;
            let p3 = &ahi * lo;
            let p4 = &ahi * hi;
            let mut nlo = p1.clone();
            let mut nhi = p1;
            for p in [p2, p3, p4] {
                if p < nlo {
                    nlo = p.clone();
                }
                if p > nhi {
                    nhi = p;
                }
            }
            alo = nlo + c;
            ahi = nhi + c;
        }
        (alo, ahi)
    }

    pub fn derivative(&self) -> RPoly {
        if self.coeffs.len() <= 1 {
            return RPoly::zero();
        }
        RPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rat) -> RPoly {
        if s.is_zero() {
            return RPoly::zero();
        }
        RPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn monic(&self) -> RPoly {
        match self.leading() {
            None => RPoly::zero(),
            Some(l) => self.scale(&(Rat::one() / l)),
        }
    }

    pub fn div_rem(&self, d: &RPoly) -> Result<(RPoly, RPoly)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let dl = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((RPoly::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![Rat::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[k + j] = &rem[k + j] - &t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((RPoly::new(quot), RPoly::new(rem)))
    }

    /// Division that must be exact; errors on a nonzero remainder.
    pub fn exact_div(&self, d: &RPoly) -> Result<RPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Internal("inexact polynomial division".into()))
        }
    }

    /// Monic gcd via a primitive integer pseudo-remainder sequence.
    pub fn gcd(&self, other: &RPoly) -> RPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let g = zp_gcd(&zp_from_rpoly(self), &zp_from_rpoly(other));
        zp_to_rpoly(&g).monic()
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Result<RPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.exact_div(&g)?.monic())
    }

    /// Strict upper bound on the absolute value of every real root:
    /// `1 + max |c_i| / |c_d|`.
    pub fn root_bound(&self) -> Rat {
        match self.degree() {
            None | Some(0) => Rat::one(),
            Some(d) => {
                let lead = self.coeffs[d].abs();
                let mx = self.coeffs[..d]
                    .iter()
                    .map(|c| c.abs())
                    .max()
                    .unwrap_or_else(Rat::zero);
                Rat::one() + mx / lead
            }
        }
    }

    /// The Sturm chain over primitive integer polynomials.
    pub fn sturm_chain(&self) -> SturmChain {
        SturmChain::new(self)
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    ///
    /// Multiple roots are counted once; works for non-squarefree input.
    pub fn sturm_count(&self, a: &Rat, b: &Rat) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if a >= b {
            return Err(Error::EmptyInterval);
        }
        if self.eval(a).is_zero() || self.eval(b).is_zero() {
            return Err(Error::EndpointIsRoot);
        }
        let chain = self.sturm_chain();
        Ok(chain.variations(a) - chain.variations(b))
    }

    /// Number of distinct real roots, via sign variations at -inf and +inf
    /// (no point evaluations needed).
    pub fn count_real_roots(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let chain = self.sturm_chain();
        Ok(chain.variations_at_neg_inf() - chain.variations_at_pos_inf())
    }

    /// The smallest power of two strictly beyond the Cauchy root bound;
    /// keeps bisection points dyadic with small numerators.
    pub fn dyadic_root_bound(&self) -> Rat {
        let bound = self.root_bound();
        let mut b = Rat::one();
        let two = Rat::from_integer(2.into());
        while b <= bound {
            b = &b * &two;
        }
        b
    }
}

/// Sturm chain with integer coefficients; each member differs from the
/// textbook chain by a positive constant, which preserves sign variations.
pub struct SturmChain {
    chain: Vec<ZPoly>,
}

impl SturmChain {
    pub fn new(p: &RPoly) -> SturmChain {
        let f0 = zp_from_rpoly(p);
        let mut chain = vec![f0];
        let f1 = zp_primitive(zp_derivative(&chain[0]));
        if f1.is_empty() {
            return SturmChain { chain };
        }
        chain.push(f1);
        loop {
            let n = chain.len();
            let mut r = zp_prem_pos(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            for c in r.iter_mut() {
                *c = -&*c;
            }
            chain.push(zp_primitive(r));
        }
        SturmChain { chain }
    }

    /// Sign variations at the rational point `x`.
    pub fn variations(&self, x: &Rat) -> usize {
        let (u, v) = (x.numer(), x.denom());
        let mut last = 0i32;
        let mut var = 0usize;
        for p in &self.chain {
            let s = zp_sign_at(p, u, v);
            if s != 0 {
                if last != 0 && s != last {
                    var += 1;
                }
                last = s;
            }
        }
        var
    }

    /// Degree of the last chain element, i.e. of gcd(p, p'): zero exactly
    /// when the input was squarefree.
    pub fn gcd_degree(&self) -> usize {
        self.chain.last().map_or(0, |p| p.len().saturating_sub(1))
    }

    /// Sign variations at +inf: signs of the leading coefficients.
    pub fn variations_at_pos_inf(&self) -> usize {
        let mut last = 0i32;
        let mut var = 0usize;
        for p in &self.chain {
            let Some(l) = p.last() else { continue };
            let s = if l.is_negative() { -1 } else { 1 };
            if last != 0 && s != last {
                var += 1;
            }
            last = s;
        }
        var
    }

    /// Sign variations at -inf: leading signs flipped by degree parity.
    pub fn variations_at_neg_inf(&self) -> usize {
        let mut last = 0i32;
        let mut var = 0usize;
        for p in &self.chain {
            let Some(l) = p.last() else { continue };
            let mut s = if l.is_negative() { -1 } else { 1 };
            if (p.len() - 1) % 2 == 1 {
                s = -s;
            }
            if last != 0 && s != last {
                var += 1;
            }
            last = s;
        }
        var
    }
}

impl fmt::Display for RPoly {
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
                0 => crate::rat::format_rat(c),
                1 => format!("{}*z", crate::rat::format_rat(c)),
                _ => format!("{}*z^{}", crate::rat::format_rat(c), k),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &RPoly {
    type Output = RPoly;
    fn add(self, rhs: &RPoly) -> RPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RPoly {
    type Output = RPoly;
    fn sub(self, rhs: &RPoly) -> RPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RPoly {
    type Output = RPoly;
    fn mul(self, rhs: &RPoly) -> RPoly {
        if self.is_zero() || rhs.is_zero() {
            return RPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        RPoly::new(out)
    }
}

impl Neg for RPoly {
    type Output = RPoly;
    fn neg(self) -> RPoly {
        RPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}
