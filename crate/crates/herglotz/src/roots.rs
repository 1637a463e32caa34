//! Real-root isolation and exact arithmetic with real algebraic points.
//!
//! A real algebraic number is stored as a squarefree defining polynomial
//! together with an open isolating interval with rational endpoints that are
//! not roots. Every decision (ordering, equality, sign of a polynomial at
//! the point) is made exactly: equalities reduce to gcd computations and
//! Sturm counts, strict signs to interval refinement that is guaranteed to
//! terminate and is cut off only by the global refinement cap.

use crate::error::{Error, Result};
use crate::numeric;
use crate::poly::Poly;
use crate::rat::{rat_sign, rat_to_f64, Rat};
use crate::refine_cap;
use crate::rpoly::RPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A real algebraic number: the unique root of `poly` in the open interval
/// `(lo, hi)`. `poly` is squarefree and monic, `poly(lo) != 0 != poly(hi)`.
#[derive(Debug, Clone)]
pub struct AlgebraicReal {
    pub poly: RPoly,
    pub lo: Rat,
    pub hi: Rat,
}

/// A point on the real line, exact.
#[derive(Debug, Clone)]
pub enum Point {
    Rational(Rat),
    Algebraic(AlgebraicReal),
}

/// A real root of a polynomial together with its multiplicity in the
/// original (not squarefree) polynomial.
#[derive(Debug, Clone)]
pub struct RealRoot {
    pub point: Point,
    pub multiplicity: usize,
}

impl AlgebraicReal {
    /// Verified constructor: checks the isolation invariants.
    pub fn new(poly: RPoly, lo: Rat, hi: Rat) -> Result<Self> {
        if lo >= hi {
            return Err(Error::EmptyInterval);
        }
        if poly.gcd(&poly.derivative()).degree() != Some(0) {
            return Err(Error::Malformed("defining polynomial is not squarefree".into()));
        }
        if poly.sturm_count(&lo, &hi)? != 1 {
            return Err(Error::Malformed("interval does not isolate exactly one root".into()));
        }
        Ok(AlgebraicReal { poly: poly.monic(), lo, hi })
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// A point strictly inside the interval that is not a root of `poly`.
    fn split_point(&self) -> Rat {
        let w = self.width();
        let deg = self.poly.degree().unwrap_or(0);
        // 1/2, then a sweep of other fractions; some offset must miss the
        // finitely many roots
        let half = &self.lo + &(&w * &crate::rat::rat(1, 2));
        if !self.poly.eval(&half).is_zero() {
            return half;
        }
        for k in 1..=(deg as i64 + 2) {
            let c = &self.lo + &(&w * &crate::rat::rat(2 * k + 1, 4 * k + 4));
            if !self.poly.eval(&c).is_zero() {
                return c;
            }
        }
        unreachable!("polynomial vanished at deg+2 distinct points");
    }

    /// One bisection step (the split point is never a root by construction).
    pub fn refine_once(&mut self) {
        let m = self.split_point();
        let sl = rat_sign(&self.poly.eval(&self.lo));
        let sm = rat_sign(&self.poly.eval(&m));
        debug_assert!(sm != 0);
        if sl != sm {
            self.hi = m;
        } else {
            self.lo = m;
        }
    }

    /// Shrinks the interval until it no longer contains `x` (which must not
    /// be the root itself).
    fn refine_away_from(&mut self, x: &Rat) {
        while &self.lo < x && x < &self.hi {
            self.refine_once();
        }
    }

    /// Exact sign of `q` at this point: `Some(-1|0|1)`, or `Undecided` when
    /// the refinement cap is exhausted.
    ///
    /// The zero test is exact (gcd with the defining polynomial), so the
    /// refinement loop only runs when the value is provably nonzero and must
    /// terminate mathematically; the cap is a safety valve.
    pub fn sign_of(&self, q: &RPoly) -> Result<i32> {
        if q.is_zero() {
            return Ok(0);
        }
        let g = q.gcd(&self.poly);
        if g.degree().unwrap_or(0) > 0 && g.sturm_count(&self.lo, &self.hi)? == 1 {
            return Ok(0);
        }
        let mut win = self.clone();
        for _ in 0..refine_cap() {
            let (qlo, qhi) = q.eval_interval(&win.lo, &win.hi);
            if qlo.is_positive() {
                return Ok(1);
            }
            if qhi.is_negative() {
                return Ok(-1);
            }
            win.refine_once();
        }
        Err(Error::Undecided(refine_cap()))
    }

    /// Midpoint as f64, refined until the enclosure is tighter than f64
    /// resolution.
    pub fn approx_f64(&self) -> f64 {
        let mut win = self.clone();
        for _ in 0..128 {
            if rat_to_f64(&win.width()) < 1e-14 * (1.0 + rat_to_f64(&win.lo).abs()) {
                break;
            }
            win.refine_once();
        }
        (rat_to_f64(&win.lo) + rat_to_f64(&win.hi)) / 2.0
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in ({}, {})", self.poly, crate::rat::format_rat(&self.lo),
            crate::rat::format_rat(&self.hi))
    }
}

impl Point {
    pub fn rational(r: Rat) -> Self {
        Point::Rational(r)
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Point::Rational(r) => Some(r),
            Point::Algebraic(_) => None,
        }
    }

    pub fn approx_f64(&self) -> f64 {
        match self {
            Point::Rational(r) => rat_to_f64(r),
            Point::Algebraic(a) => a.approx_f64(),
        }
    }

    /// Exact sign of the point (comparison with zero).
    pub fn sign(&self) -> Result<i32> {
        match self {
            Point::Rational(r) => Ok(rat_sign(r)),
            Point::Algebraic(a) => a.sign_of(&RPoly::x()),
        }
    }

    /// Exact comparison; refines local copies, so repeated comparisons of
    /// wide intervals redo work. `order_refine` is the mutating variant.
    pub fn try_cmp(&self, other: &Point) -> Result<Ordering> {
        let mut a = self.clone();
        let mut b = other.clone();
        order_refine(&mut a, &mut b)
    }

    pub fn try_eq(&self, other: &Point) -> Result<bool> {
        Ok(self.try_cmp(other)? == Ordering::Equal)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Rational(r) => write!(f, "{}", crate::rat::format_rat(r)),
            Point::Algebraic(a) => write!(f, "{a}"),
        }
    }
}

/// Exact comparison that refines the stored intervals in place, so ordered
/// algebraic points end up with disjoint intervals.
pub fn order_refine(a: &mut Point, b: &mut Point) -> Result<Ordering> {
    use Point::*;
    match (&mut *a, &mut *b) {
        (Rational(x), Rational(y)) => Ok((*x).cmp(y)),
        (Rational(x), Algebraic(beta)) => {
            if beta.lo < *x && *x < beta.hi && beta.poly.eval(x).is_zero() {
                return Ok(Ordering::Equal);
            }
            beta.refine_away_from(x);
            Ok(if *x <= beta.lo { Ordering::Less } else { Ordering::Greater })
        }
        (Algebraic(_), Rational(_)) => Ok(order_refine(b, a)?.reverse()),
        (Algebraic(alpha), Algebraic(beta)) => {
            let olo = alpha.lo.clone().max(beta.lo.clone());
            let ohi = alpha.hi.clone().min(beta.hi.clone());
            if olo < ohi {
                let g = alpha.poly.gcd(&beta.poly);
                if g.degree().unwrap_or(0) > 0 && g.sturm_count(&olo, &ohi)? >= 1 {
                    return Ok(Ordering::Equal);
                }
            }
            for _ in 0..refine_cap() {
                if alpha.hi <= beta.lo {
                    return Ok(Ordering::Less);
                }
                if beta.hi <= alpha.lo {
                    return Ok(Ordering::Greater);
                }
                if alpha.width() >= beta.width() {
                    alpha.refine_once();
                } else {
                    beta.refine_once();
                }
            }
            Err(Error::Undecided(refine_cap()))
        }
    }
}

/// A rational number strictly between two distinct points, refining as
/// needed.
pub fn rational_between(a: &Point, b: &Point) -> Result<Rat> {
    let mut x = a.clone();
    let mut y = b.clone();
    if order_refine(&mut x, &mut y)? != Ordering::Less {
        return Err(Error::Internal("rational_between needs a < b".into()));
    }
    let upper_of = |p: &Point| match p {
        Point::Rational(r) => r.clone(),
        Point::Algebraic(al) => al.hi.clone(),
    };
    let lower_of = |p: &Point| match p {
        Point::Rational(r) => r.clone(),
        Point::Algebraic(be) => be.lo.clone(),
    };
    // refine until the enclosures are strictly separated; then the midpoint
    // of the gap is strictly between the two points
    for _ in 0..(4 * refine_cap()) {
        if upper_of(&x) < lower_of(&y) {
            return Ok((&upper_of(&x) + &lower_of(&y)) / crate::rat::rat_int(2));
        }
        match (&mut x, &mut y) {
            (Point::Algebraic(al), Point::Algebraic(be)) => {
                if al.width() >= be.width() {
                    al.refine_once();
                } else {
                    be.refine_once();
                }
            }
            (Point::Algebraic(al), Point::Rational(_)) => al.refine_once(),
            (Point::Rational(_), Point::Algebraic(be)) => be.refine_once(),
            (Point::Rational(_), Point::Rational(_)) => unreachable!("distinct rationals separate"),
        }
    }
    Err(Error::Undecided(refine_cap()))
}

/// Sorts `(Point, payload)` pairs by strictly increasing point, refining
/// isolating intervals to pairwise disjointness. Errors on equal points.
pub fn sort_points_strict<T>(items: &mut Vec<(Point, T)>) -> Result<()> {
    // insertion sort: comparisons mutate (refine) both sides
    for i in 1..items.len() {
        let mut j = i;
        while j > 0 {
            let (left, right) = items.split_at_mut(j);
            let ord = order_refine(&mut left[j - 1].0, &mut right[0].0)?;
            match ord {
                Ordering::Greater => {
                    items.swap(j - 1, j);
                    j -= 1;
                }
                Ordering::Equal => {
                    return Err(Error::Internal("duplicate points in strict sort".into()))
                }
                Ordering::Less => break,
            }
        }
    }
    Ok(())
}

/// Continued-fraction convergents of `x` that approximate it unusually
/// well for their denominator size (the signature of an exactly rational
/// `x` known to ~1e-12). Keeps the exact verification workload small: an
/// irrational root rarely produces any candidate.
fn rational_candidates(x: f64) -> Vec<Rat> {
    if !x.is_finite() {
        return vec![];
    }
    let mut out = Vec::new();
    let mut a = x;
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::from(a.floor() as i64), BigInt::one());
    let mut push_if_sharp = |p: &BigInt, q: &BigInt| {
        let qa = q.to_string().parse::<f64>().unwrap_or(f64::MAX);
        let pa = p.to_string().parse::<f64>().unwrap_or(f64::MAX);
        if (x - pa / qa).abs() < 1e-3 / (qa * qa).max(1.0) {
            out.push(Rat::new(p.clone(), q.clone()));
        }
    };
    push_if_sharp(&p1, &q1);
    a -= a.floor();
    for _ in 0..40 {
        if a.abs() < 1e-13 {
            break;
        }
        a = 1.0 / a;
        if !a.is_finite() || a.abs() >= 1e15 {
            break;
        }
        let ai = BigInt::from(a.floor() as i64);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > BigInt::from(1_000_000_000_000u64) {
            break;
        }
        push_if_sharp(&p2, &q2);
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        a -= a.floor();
    }
    out
}

/// Splits a squarefree real polynomial into its rational roots and the
/// rational-root-free cofactor.
///
/// Candidates come from numerically approximated roots (continued-fraction
/// convergents); every accepted root is verified by exact evaluation and
/// removed by exact division, so a missed candidate only means the root
/// stays represented as an algebraic point — never an incorrect result.
pub fn extract_rational_roots(sf: &RPoly) -> (Vec<Rat>, RPoly) {
    let mut rats: Vec<Rat> = Vec::new();
    let mut g = sf.monic();
    if g.is_constant() {
        return (rats, g);
    }
    let approx = numeric::complex_roots(&Poly::from_real(&g));
    for r in approx {
        if r.im.abs() > 1e-6 {
            continue;
        }
        for cand in rational_candidates(r.re) {
            if g.eval_sign(&cand) == 0 {
                g = g.exact_div(&RPoly::linear(&cand)).expect("verified root divides");
                rats.push(cand);
                break;
            }
        }
    }
    rats.sort();
    (rats, g)
}

/// Isolates all real roots of a squarefree real polynomial, returned in
/// increasing order.
pub fn isolate_squarefree(sf: &RPoly) -> Result<Vec<Point>> {
    isolate_squarefree_impl(sf, None)
}

fn isolate_squarefree_impl(
    sf: &RPoly,
    chain: Option<&crate::rpoly::SturmChain>,
) -> Result<Vec<Point>> {
    if sf.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut rats, mut g) = extract_rational_roots(sf);
    // a prebuilt chain belongs to `sf` itself; reusable only when the
    // rational extraction removed nothing
    let mut reusable = if rats.is_empty() { chain } else { None };
    let algs: Vec<AlgebraicReal> = loop {
        match try_isolate(&g, reusable)? {
            IsolateOutcome::Done(v) => break v,
            IsolateOutcome::FoundRational(r) => {
                g = g.exact_div(&RPoly::linear(&r)).expect("exact root divides");
                rats.push(r.clone());
                rats.sort();
                reusable = None;
            }
        }
    };
    let mut pts: Vec<(Point, ())> = rats
        .into_iter()
        .map(|r| (Point::Rational(r), ()))
        .chain(algs.into_iter().map(|a| (Point::Algebraic(a), ())))
        .collect();
    sort_points_strict(&mut pts)?;
    Ok(pts.into_iter().map(|(p, _)| p).collect())
}

enum IsolateOutcome {
    Done(Vec<AlgebraicReal>),
    /// Bisection landed exactly on a rational root the numeric pass missed.
    FoundRational(Rat),
}

fn try_isolate(
    g: &RPoly,
    prebuilt: Option<&crate::rpoly::SturmChain>,
) -> Result<IsolateOutcome> {
    if g.is_constant() {
        return Ok(IsolateOutcome::Done(vec![]));
    }
    let owned;
    let chain = match prebuilt {
        Some(c) => c,
        None => {
            owned = g.sturm_chain();
            &owned
        }
    };
    let var = |x: &Rat| chain.variations(x);
    let total = chain.variations_at_neg_inf() - chain.variations_at_pos_inf();
    if total == 0 {
        return Ok(IsolateOutcome::Done(vec![]));
    }
    // numeric seeding: candidate intervals from approximate roots, then a
    // full exact verification; on any mismatch fall back to bisection
    if let Some(out) = seeded_isolation(g, &chain, total) {
        return Ok(IsolateOutcome::Done(out));
    }
    let bound = g.dyadic_root_bound();
    let mut stack = vec![(-bound.clone(), bound.clone())];
    // depth-first, left interval popped first, so the output comes out sorted
    let mut ordered = Vec::new();
    while let Some((a, b)) = stack.pop() {
        let count = var(&a) - var(&b);
        match count {
            0 => {}
            1 => ordered.push(AlgebraicReal { poly: g.monic(), lo: a, hi: b }),
            _ => {
                let m = (&a + &b) / crate::rat::rat_int(2);
                if g.eval_sign(&m) == 0 {
                    // exact hit: a rational root the numeric pass missed
                    return Ok(IsolateOutcome::FoundRational(m));
                }
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    Ok(IsolateOutcome::Done(ordered))
}

/// Builds isolating intervals around the numerically approximated real
/// roots and verifies them with exactly one Sturm variation count per
/// endpoint. Returns `None` (falling back to exact bisection) whenever the
/// numeric picture does not certify.
fn seeded_isolation(g: &RPoly, chain: &crate::rpoly::SturmChain, total: usize) -> Option<Vec<AlgebraicReal>> {
    let mut reals: Vec<f64> = numeric::complex_roots(&Poly::from_real(g))
        .into_iter()
        .filter(|z| z.im.abs() < 1e-7)
        .map(|z| z.re)
        .collect();
    reals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if reals.len() != total {
        return None;
    }
    // dyadic cut points strictly between consecutive approximate roots
    let mut cuts: Vec<Rat> = Vec::with_capacity(total + 1);
    cuts.push(Rat::from_float(reals[0] - 1.0 - reals[0].abs() * 0.01)?);
    for k in 1..total {
        cuts.push(Rat::from_float((reals[k - 1] + reals[k]) / 2.0)?);
    }
    cuts.push(Rat::from_float(reals[total - 1] + 1.0 + reals[total - 1].abs() * 0.01)?);
    // endpoints must not be roots
    for c in &cuts {
        if g.eval_sign(c) == 0 {
            return None;
        }
    }
    let vars: Vec<usize> = cuts.iter().map(|c| chain.variations(c)).collect();
    let mut out = Vec::with_capacity(total);
    for k in 0..total {
        if vars[k] - vars[k + 1] != 1 {
            return None;
        }
        out.push(AlgebraicReal {
            poly: g.monic(),
            lo: cuts[k].clone(),
            hi: cuts[k + 1].clone(),
        });
    }
    // the per-interval differences sum to `total`, which equals the count
    // between -inf and +inf, so no root escapes the cut range
    Some(out)
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
pub fn sturm_count(p: &Poly, a: &Rat, b: &Rat) -> Result<usize> {
    let rp = p.to_real().ok_or(Error::NonRealCoefficients)?;
    rp.sturm_count(a, b)
}

/// True iff every root of `p` is real (counted without multiplicity on the
/// squarefree part).
pub fn all_roots_real(p: &Poly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    let s = p.exact_div(&g)?.monic();
    if s.is_constant() {
        return Ok(true);
    }
    let rp = match s.to_real() {
        Some(rp) => rp,
        // a monic polynomial with all real roots has real coefficients
        None => return Ok(false),
    };
    Ok(rp.count_real_roots()? == rp.degree().unwrap())
}

/// Peels verified rational roots off `p` together with their
/// multiplicities (repeated exact division); candidates come from the
/// numeric roots, so nothing here needs a remainder sequence.
fn peel_rational_roots(p: &RPoly) -> (Vec<(Rat, usize)>, RPoly) {
    let mut rest = p.monic();
    let mut out: Vec<(Rat, usize)> = Vec::new();
    let approx = numeric::complex_roots(&Poly::from_real(&rest));
    let mut seen: Vec<Rat> = Vec::new();
    for r in approx {
        if r.im.abs() > 1e-6 {
            continue;
        }
        for cand in rational_candidates(r.re) {
            if seen.contains(&cand) {
                break;
            }
            if rest.eval_sign(&cand) == 0 {
                let lin = RPoly::linear(&cand);
                let mut mult = 0usize;
                loop {
                    let (quot, rem) = rest.div_rem(&lin).expect("linear divisor");
                    if !rem.is_zero() {
                        break;
                    }
                    rest = quot;
                    mult += 1;
                }
                seen.push(cand.clone());
                out.push((cand, mult));
                break;
            }
        }
    }
    (out, rest)
}

/// Isolates all distinct real roots of `p` (real coefficients required),
/// sorted, with multiplicities from the squarefree structure.
///
/// Fast paths: rational roots are peeled first by verified numeric
/// candidates; a squarefree remainder (detected from the tail of the Sturm
/// chain, which is gcd up to a constant) skips the full decomposition and
/// reuses the chain for isolation.
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<RealRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_real() {
        return Err(Error::NonRealCoefficients);
    }
    let rp = p.to_real().unwrap();
    let mut roots: Vec<(Point, usize)> = Vec::new();
    let rest = if rp.is_constant() {
        rp
    } else {
        let (rats, rest) = peel_rational_roots(&rp);
        for (r, m) in rats {
            roots.push((Point::Rational(r), m));
        }
        rest
    };
    if !rest.is_constant() {
        let chain = rest.sturm_chain();
        if chain.gcd_degree() == 0 {
            for point in isolate_squarefree_impl(&rest, Some(&chain))? {
                roots.push((point, 1));
            }
        } else {
            for (factor, mult) in Poly::from_real(&rest).squarefree_decompose()? {
                let rf = factor
                    .to_real()
                    .ok_or_else(|| Error::Internal("real input produced complex factor".into()))?;
                for pt in isolate_squarefree(&rf)? {
                    roots.push((pt, mult));
                }
            }
        }
    }
    sort_points_strict(&mut roots)?;
    Ok(roots
        .into_iter()
        .map(|(point, multiplicity)| RealRoot { point, multiplicity })
        .collect())
}

/// Exact sign of the value of the Gaussian-rational-coefficient polynomial
/// `p` at a real point, split into (sign of real part, sign of imaginary
/// part).
pub fn complex_sign_at(p: &Poly, at: &Point) -> Result<(i32, i32)> {
    let (re, im) = p.split_parts();
    match at {
        Point::Rational(r) => Ok((rat_sign(&re.eval(r)), rat_sign(&im.eval(r)))),
        Point::Algebraic(a) => Ok((a.sign_of(&re)?, a.sign_of(&im)?)),
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn isolates_sqrt2() {
        // x^2 - 2: two algebraic roots; refinable below (-3/2,-7/5), (7/5,3/2),
        // checked against bisection of the numeric value of sqrt(2)
        let p = Poly::from_i64(&[-2, 0, 1]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert_eq!(r.multiplicity, 1);
        }
        match (&roots[0].point, &roots[1].point) {
            (Point::Algebraic(a), Point::Algebraic(b)) => {
                let mut a = a.clone();
                let mut b = b.clone();
                while a.width() > rat(1, 100) {
                    a.refine_once();
                }
                while b.width() > rat(1, 100) {
                    b.refine_once();
                }
                assert!(a.lo >= rat(-3, 2) && a.hi <= rat(-7, 5));
                assert!(b.lo >= rat(7, 5) && b.hi <= rat(3, 2));
            }
            _ => panic!("expected algebraic points"),
        }
    }

    #[test]
    fn isolates_rational_and_multiple() {
        // x^3: one root at 0 with multiplicity 3
        let p = Poly::from_i64(&[0, 0, 0, 1]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 3);
        assert_eq!(roots[0].point.as_rational(), Some(&rat_int(0)));
        // x^2 + 1: none
        let q = Poly::from_i64(&[1, 0, 1]);
        assert!(isolate_real_roots(&q).unwrap().is_empty());
    }

    #[test]
    fn all_roots_real_examples() {
        assert!(all_roots_real(&Poly::from_i64(&[-2, 0, 1])).unwrap());
        assert!(!all_roots_real(&Poly::from_i64(&[1, 0, 1])).unwrap());
        // (x^2+1)(x-1): one real, two nonreal
        let p = &Poly::from_i64(&[1, 0, 1]) * &Poly::from_i64(&[-1, 1]);
        assert!(!all_roots_real(&p).unwrap());
        assert!(all_roots_real(&Poly::from_i64(&[7])).unwrap());
    }

    #[test]
    fn ordering_mixed_points() {
        // sqrt(2) vs 3/2 vs sqrt(3)
        let s2 = isolate_squarefree(&RPoly::from_i64(&[-2, 0, 1])).unwrap()[1].clone();
        let s3 = isolate_squarefree(&RPoly::from_i64(&[-3, 0, 1])).unwrap()[1].clone();
        let th = Point::Rational(rat(3, 2));
        assert_eq!(s2.try_cmp(&th).unwrap(), Ordering::Less);
        assert_eq!(s3.try_cmp(&th).unwrap(), Ordering::Greater);
        assert_eq!(s2.try_cmp(&s3).unwrap(), Ordering::Less);
        assert!(s2.try_eq(&s2).unwrap());
        // same root through different polynomials: sqrt(2) as root of
        // (x^2-2) and of (x^2-2)(x^2-3)/(x^2-3) ... use x^4-5x^2+6
        let mixed = isolate_squarefree(&RPoly::from_i64(&[6, 0, -5, 0, 1])).unwrap();
        // roots: +-sqrt(2), +-sqrt(3)
        assert_eq!(mixed.len(), 4);
        assert!(s2.try_eq(&mixed[2]).unwrap());
        assert!(s3.try_eq(&mixed[3]).unwrap());
    }

    #[test]
    fn sign_of_decides_exactly() {
        let s2 = match isolate_squarefree(&RPoly::from_i64(&[-2, 0, 1])).unwrap()[1].clone() {
            Point::Algebraic(a) => a,
            _ => panic!(),
        };
        // x^2 - 2 vanishes at sqrt(2)
        assert_eq!(s2.sign_of(&RPoly::from_i64(&[-2, 0, 1])).unwrap(), 0);
        // x - 1 is positive there
        assert_eq!(s2.sign_of(&RPoly::from_i64(&[-1, 1])).unwrap(), 1);
        // x - 2 is negative there
        assert_eq!(s2.sign_of(&RPoly::from_i64(&[-2, 1])).unwrap(), -1);
        // 2x^2 - 4 also vanishes (gcd path with non-monic input)
        assert_eq!(s2.sign_of(&RPoly::from_i64(&[-4, 0, 2])).unwrap(), 0);
    }

    #[test]
    fn rational_extraction_with_cf_candidates() {
        // (x - 1/3)(x - 7)(x^2 - 2), squarefree
        let p = &(&RPoly::linear(&rat(1, 3)) * &RPoly::linear(&rat_int(7)))
            * &RPoly::from_i64(&[-2, 0, 1]);
        let (rats, rest) = extract_rational_roots(&p);
        assert_eq!(rats, vec![rat(1, 3), rat_int(7)]);
        assert_eq!(rest, RPoly::from_i64(&[-2, 0, 1]).monic());
    }

    #[test]
    fn rational_between_points() {
        let s2 = isolate_squarefree(&RPoly::from_i64(&[-2, 0, 1])).unwrap()[1].clone();
        let r = rational_between(&Point::Rational(rat_int(0)), &s2).unwrap();
        assert!(r > rat_int(0));
        let minus = Point::Rational(rat_int(-1));
        let r2 = rational_between(&minus, &Point::Rational(rat_int(1))).unwrap();
        assert_eq!(r2, rat_int(0));
    }
}
