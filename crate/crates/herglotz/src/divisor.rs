//! Divisor functions on the real line with finite support.
//!
//! `DivisorFn` records zero multiplicities (positive values) and pole
//! multiplicities (negative values) of a function at exact real points. The
//! n-interlacing predicate and the colouring decomposition into 1-interlacing
//! parts both live here.

use crate::error::{Error, Result};
use crate::ratfn::RatFn;
use crate::roots::{self, order_refine, Point};
use crate::rat::Rat;
use std::cmp::Ordering;

/// Sorted support with nonzero integer values.
#[derive(Debug, Clone, Default)]
pub struct DivisorFn {
    support: Vec<(Point, i64)>,
}

impl DivisorFn {
    pub fn empty() -> Self {
        DivisorFn { support: vec![] }
    }

    /// Builds from unsorted entries; merges equal points, drops zeros.
    pub fn from_entries(entries: Vec<(Point, i64)>) -> Result<Self> {
        let mut items: Vec<(Point, i64)> = Vec::new();
        'outer: for (p, v) in entries {
            if v == 0 {
                continue;
            }
            for (q, w) in items.iter_mut() {
                if q.try_eq(&p)? {
                    *w += v;
                    continue 'outer;
                }
            }
            items.push((p, v));
        }
        items.retain(|(_, v)| *v != 0);
        // strict sort with interval refinement
        for i in 1..items.len() {
            let mut j = i;
            while j > 0 {
                let (left, right) = items.split_at_mut(j);
                match order_refine(&mut left[j - 1].0, &mut right[0].0)? {
                    Ordering::Greater => {
                        items.swap(j - 1, j);
                        j -= 1;
                    }
                    Ordering::Less => break,
                    Ordering::Equal => {
                        return Err(Error::Internal("unmerged duplicate point".into()))
                    }
                }
            }
        }
        Ok(DivisorFn { support: items })
    }

    pub fn support(&self) -> &[(Point, i64)] {
        &self.support
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.support.iter().map(|(_, v)| *v)
    }

    /// Pointwise sum of two divisors (values at equal points add and may
    /// cancel).
    pub fn add(&self, other: &DivisorFn) -> Result<DivisorFn> {
        let mut entries = self.support.clone();
        entries.extend(other.support.iter().cloned());
        DivisorFn::from_entries(entries)
    }

    /// Sum of the values at support points strictly inside `(a, b)`.
    pub fn interval_sum(&self, a: &Rat, b: &Rat) -> Result<i64> {
        if a >= b {
            return Err(Error::EmptyInterval);
        }
        let pa = Point::Rational(a.clone());
        let pb = Point::Rational(b.clone());
        let mut sum = 0i64;
        for (p, v) in &self.support {
            let ca = p.try_cmp(&pa)?;
            let cb = p.try_cmp(&pb)?;
            if ca == Ordering::Equal || cb == Ordering::Equal {
                return Err(Error::EndpointOnSupport);
            }
            if ca == Ordering::Greater && cb == Ordering::Less {
                sum += v;
            }
        }
        Ok(sum)
    }

    /// The least `n` such that the divisor is n-interlacing: the maximum of
    /// `|sum|` over contiguous runs of support values. 0 for the empty
    /// divisor.
    pub fn min_interlacing_order(&self) -> usize {
        let mut best = 0i64;
        let mut hi = 0i64; // max suffix sum ending here
        let mut lo = 0i64; // min suffix sum ending here
        for v in self.values() {
            hi = (hi + v).max(v);
            lo = (lo + v).min(v);
            best = best.max(hi).max(-lo);
        }
        best as usize
    }

    pub fn is_n_interlacing(&self, n: usize) -> bool {
        self.min_interlacing_order() <= n
    }

    /// The contiguous run of support attaining the interlacing order
    /// (1-based index range and the run sum) — used as a reject witness.
    pub fn extremal_run(&self) -> Option<(usize, usize, i64)> {
        let vals: Vec<i64> = self.values().collect();
        let mut best: Option<(usize, usize, i64)> = None;
        for i in 0..vals.len() {
            let mut s = 0i64;
            for (j, v) in vals.iter().enumerate().skip(i) {
                s += v;
                if best.is_none() || s.abs() > best.unwrap().2.abs() {
                    best = Some((i + 1, j + 1, s));
                }
            }
        }
        best
    }

    /// Colouring decomposition: exactly `min_interlacing_order` divisors,
    /// each 1-interlacing with values in {-1, +1}, summing pointwise to
    /// `self`. Construction via the cumulative step function: part `j`
    /// contains the points where the cumulative value crosses level `j`,
    /// with the crossing direction as sign. Output ordered by increasing
    /// level.
    pub fn colour_decompose(&self) -> Result<Vec<DivisorFn>> {
        if self.is_empty() {
            return Ok(vec![]);
        }
        // cumulative function on the regions between support points,
        // anchored so that the region containing 0 matches the paper's
        // normalization (any anchor yields the same parts)
        let k = self.support.len();
        let mut theta = vec![0i64; k + 1];
        for (i, (_, v)) in self.support.iter().enumerate() {
            theta[i + 1] = theta[i] + v;
        }
        let mut neg_sum = 0i64;
        for (p, v) in &self.support {
            if p.sign()? < 0 {
                neg_sum += v;
            }
        }
        for t in theta.iter_mut() {
            *t -= neg_sum;
        }
        let jmin = *theta.iter().min().unwrap();
        let jmax = *theta.iter().max().unwrap();
        let mut parts = Vec::new();
        for j in jmin..jmax {
            let mut sup = Vec::new();
            for (i, (p, _)) in self.support.iter().enumerate() {
                let before = theta[i];
                let after = theta[i + 1];
                if after > j && j >= before {
                    sup.push((p.clone(), 1i64));
                } else if before > j && j >= after {
                    sup.push((p.clone(), -1i64));
                }
            }
            debug_assert!(!sup.is_empty());
            parts.push(DivisorFn { support: sup });
        }
        debug_assert_eq!(parts.len(), self.min_interlacing_order());
        Ok(parts)
    }
}

/// The divisor of a rational function: zero multiplicities minus pole
/// multiplicities. Requires every root of numerator and denominator real
/// (checked: the isolated multiplicities must account for the full degree).
pub fn divisor_of(f: &RatFn) -> Result<DivisorFn> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut entries: Vec<(Point, i64)> = Vec::new();
    for (poly, sign) in [(f.num(), 1i64), (f.den(), -1i64)] {
        if poly.is_constant() {
            continue;
        }
        // a polynomial with all real roots is real up to a constant
        let normalized = poly.monic();
        if !normalized.is_real() {
            return Err(Error::NonRealRoots);
        }
        let roots = roots::isolate_real_roots(&normalized)?;
        let with_mult: usize = roots.iter().map(|r| r.multiplicity).sum();
        if with_mult != normalized.degree().unwrap() {
            return Err(Error::NonRealRoots);
        }
        for r in roots {
            entries.push((r.point, sign * r.multiplicity as i64));
        }
    }
    DivisorFn::from_entries(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rat::{rat, rat_int};

    fn pt(n: i64) -> Point {
        Point::Rational(rat_int(n))
    }

    fn ratfn(num: &[i64], den: &[i64]) -> RatFn {
        RatFn::new(Poly::from_i64(num), Poly::from_i64(den)).unwrap()
    }

    #[test]
    fn divisor_of_examples() {
        // (z-1)/z -> {(0,-1),(1,+1)}
        let d = divisor_of(&ratfn(&[-1, 1], &[0, 1])).unwrap();
        let pts: Vec<(f64, i64)> =
            d.support().iter().map(|(p, v)| (p.approx_f64(), *v)).collect();
        assert_eq!(pts, vec![(0.0, -1), (1.0, 1)]);

        // (z^2-2)/z^3 -> {(-sqrt2,+1),(0,-3),(sqrt2,+1)}
        let d = divisor_of(&ratfn(&[-2, 0, 1], &[0, 0, 0, 1])).unwrap();
        let vals: Vec<i64> = d.values().collect();
        assert_eq!(vals, vec![1, -3, 1]);
        assert_eq!(d.support()[1].0.as_rational(), Some(&rat_int(0)));
        assert!((d.support()[0].0.approx_f64() + 2f64.sqrt()).abs() < 1e-9);

        // constant -> empty
        assert!(divisor_of(&RatFn::one()).unwrap().is_empty());

        // nonreal roots rejected
        assert!(matches!(
            divisor_of(&ratfn(&[1, 0, 1], &[1])),
            Err(Error::NonRealRoots)
        ));
    }

    #[test]
    fn interval_sums() {
        let d = DivisorFn::from_entries(vec![(pt(0), -1), (pt(1), 1)]).unwrap();
        assert_eq!(d.interval_sum(&rat_int(-1), &rat(1, 2)).unwrap(), -1);
        assert_eq!(d.interval_sum(&rat_int(5), &rat_int(9)).unwrap(), 0);
        assert!(matches!(
            d.interval_sum(&rat_int(0), &rat_int(2)),
            Err(Error::EndpointOnSupport)
        ));

        let d = divisor_of(&ratfn(&[-2, 0, 1], &[0, 0, 0, 1])).unwrap();
        assert_eq!(d.interval_sum(&rat_int(-2), &rat_int(2)).unwrap(), -1);
    }

    #[test]
    fn interlacing_order() {
        let alt = DivisorFn::from_entries(vec![(pt(-1), 1), (pt(0), -1), (pt(1), 1)]).unwrap();
        assert_eq!(alt.min_interlacing_order(), 1);
        let two = DivisorFn::from_entries(vec![(pt(0), 2)]).unwrap();
        assert_eq!(two.min_interlacing_order(), 2);
        assert!(!two.is_n_interlacing(1));
        assert!(two.is_n_interlacing(2));
        assert!(DivisorFn::empty().is_n_interlacing(1));
        // divisor of (z^2-2)/z^3 has order 3 (brute force over runs: the
        // single run {-3} attains it)
        let d = divisor_of(&ratfn(&[-2, 0, 1], &[0, 0, 0, 1])).unwrap();
        assert_eq!(d.min_interlacing_order(), 3);
        assert!(!d.is_n_interlacing(2));
    }

    #[test]
    fn colouring_example() {
        // {(0,+2),(1,-1)} -> [{(0,+1)}, {(0,+1),(1,-1)}]
        let d = DivisorFn::from_entries(vec![(pt(0), 2), (pt(1), -1)]).unwrap();
        let parts = d.colour_decompose().unwrap();
        assert_eq!(parts.len(), 2);
        let flat: Vec<Vec<(f64, i64)>> = parts
            .iter()
            .map(|p| p.support().iter().map(|(q, v)| (q.approx_f64(), *v)).collect())
            .collect();
        assert_eq!(flat[0], vec![(0.0, 1)]);
        assert_eq!(flat[1], vec![(0.0, 1), (1.0, -1)]);
        // already 1-interlacing: single part equal to the divisor
        let alt = DivisorFn::from_entries(vec![(pt(-1), 1), (pt(0), -1)]).unwrap();
        let parts = alt.colour_decompose().unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].values().collect::<Vec<_>>(), vec![1, -1]);
        assert!(DivisorFn::empty().colour_decompose().unwrap().is_empty());
    }

    #[test]
    fn colouring_sums_back_and_is_one_interlacing() {
        let d = divisor_of(&ratfn(&[-2, 0, 1], &[0, 0, 0, 1])).unwrap();
        let parts = d.colour_decompose().unwrap();
        assert_eq!(parts.len(), 3);
        let mut sum = DivisorFn::empty();
        for p in &parts {
            assert!(p.is_n_interlacing(1));
            assert!(p.values().all(|v| v == 1 || v == -1));
            sum = sum.add(p).unwrap();
        }
        assert_eq!(sum.len(), d.len());
        for ((p, v), (q, w)) in sum.support().iter().zip(d.support()) {
            assert!(p.try_eq(q).unwrap());
            assert_eq!(v, w);
        }
    }

    #[test]
    fn divisor_addition_cancels() {
        let a = DivisorFn::from_entries(vec![(pt(0), 1), (pt(1), 2)]).unwrap();
        let b = DivisorFn::from_entries(vec![(pt(0), -1), (pt(1), 1)]).unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.values().collect::<Vec<_>>(), vec![3]);
    }
}
