//! Scalar rational Herglotz functions: verification, synthesis from
//! interlacing data, factorization into Herglotz factors, the classical
//! Hermite-Biehler test, and the argument-principle oracle.

use crate::divisor::{divisor_of, DivisorFn};
use crate::error::{Error, Result};
use crate::gauss::GaussRat;
use crate::numeric;
use crate::poly::Poly;
use crate::rat::{format_rat, rat_sign, rat_to_f64, Rat};
use crate::ratfn::RatFn;
use crate::roots::{self, rational_between, AlgebraicReal, Point};
use crate::rpoly::RPoly;
use crate::verdict::{Check, CheckResult, Verdict};
use num_traits::{Signed, Zero};

/// Partial-fraction data of a scalar function with real simple poles:
/// `q(z) = c + d*z + sum_j w_j / (z_j - z)`.
///
/// For rational poles the weight is an exact rational; for algebraic poles
/// it is the exact value `num(at)/den(at)` of a rational expression at the
/// isolated point, which supports certified sign queries but has no finite
/// rational numeral.
#[derive(Debug, Clone)]
pub struct ScalarPFRep {
    pub c: Rat,
    pub d: Rat,
    pub terms: Vec<PoleTerm>,
}

#[derive(Debug, Clone)]
pub struct PoleTerm {
    pub pole: Point,
    pub weight: Weight,
}

#[derive(Debug, Clone)]
pub enum Weight {
    Rational(Rat),
    Algebraic { num: RPoly, den: RPoly, at: AlgebraicReal },
}

impl Weight {
    pub fn sign(&self) -> Result<i32> {
        match self {
            Weight::Rational(r) => Ok(rat_sign(r)),
            Weight::Algebraic { num, den, at } => Ok(at.sign_of(num)? * at.sign_of(den)?),
        }
    }

    pub fn approx_f64(&self) -> f64 {
        match self {
            Weight::Rational(r) => rat_to_f64(r),
            Weight::Algebraic { num, den, at } => {
                let x = at.approx_f64();
                let h = |p: &RPoly| {
                    p.coeffs()
                        .iter()
                        .rev()
                        .fold(0.0, |acc, c| acc * x + rat_to_f64(c))
                };
                h(num) / h(den)
            }
        }
    }

    pub fn display(&self) -> String {
        match self {
            Weight::Rational(r) => format_rat(r),
            Weight::Algebraic { .. } => format!("~{}", self.approx_f64()),
        }
    }
}

/// Sign of `lim_{z->z0} (z0 - z)^m f(z)` at a real point `z0` where the
/// denominator of `f` vanishes to order exactly `m`.
///
/// With `den = (z - z0)^m e(z)` the limit equals `(-1)^m num(z0) / e(z0)`
/// and `e(z0) = den^(m)(z0) / m!`, so the sign reduces to two certified
/// polynomial sign queries.
pub fn pole_limit_sign(f: &RatFn, at: &Point, m: usize) -> Result<i32> {
    let num = f
        .num()
        .to_real()
        .ok_or(Error::NonRealCoefficients)?;
    let mut dm = f.den().to_real().ok_or(Error::NonRealCoefficients)?;
    for _ in 0..m {
        dm = dm.derivative();
    }
    let parity = if m % 2 == 0 { 1 } else { -1 };
    match at {
        Point::Rational(r) => Ok(parity * rat_sign(&num.eval(r)) * rat_sign(&dm.eval(r))),
        Point::Algebraic(a) => Ok(parity * a.sign_of(&num)? * a.sign_of(&dm)?),
    }
}

/// Extracts the partial-fraction representation of a #-real rational
/// function with real simple poles and at most linear growth.
pub fn scalar_pf_rep(q: &RatFn) -> Result<ScalarPFRep> {
    if !q.is_sharp_real() {
        return Err(Error::NotSharpReal);
    }
    if q.inf_degree().unwrap_or(0) > 1 {
        return Err(Error::Malformed("degree of numerator exceeds degree of denominator + 1".into()));
    }
    if !roots::all_roots_real(q.den())? {
        return Err(Error::NonRealRoots);
    }
    let (poly_part, _) = q.num().div_rem(q.den())?;
    let c = poly_part.coeff(0).re.clone();
    let d = poly_part.coeff(1).re.clone();
    let num = q.num().to_real().unwrap();
    let den = q.den().to_real().unwrap();
    let dden = den.derivative();
    let mut terms = Vec::new();
    if !q.den().is_constant() {
        for root in roots::isolate_real_roots(q.den())? {
            if root.multiplicity > 1 {
                return Err(Error::NonSimplePole(1, 1));
            }
            // weight = lim (z0 - z) q(z) = -num(z0) / den'(z0)
            let weight = match &root.point {
                Point::Rational(r) => Weight::Rational(-(num.eval(r) / dden.eval(r))),
                Point::Algebraic(a) => Weight::Algebraic {
                    num: RPoly::new(num.coeffs().iter().map(|c| -c.clone()).collect()),
                    den: dden.clone(),
                    at: a.clone(),
                },
            };
            terms.push(PoleTerm { pole: root.point, weight });
        }
    }
    let rep = ScalarPFRep { c, d, terms };
    // with rational poles the reconstruction identity is checked exactly;
    // algebraic weights have no rational numeral, and the identity is forced
    // by simple-pole partial fraction theory
    if rep.terms.iter().all(|t| t.pole.as_rational().is_some()) {
        let rebuilt = rep.reconstruct()?;
        if &rebuilt != q {
            return Err(Error::Internal("partial-fraction reconstruction mismatch".into()));
        }
    }
    Ok(rep)
}

impl ScalarPFRep {
    /// Exact reconstruction `c + d z + sum w/(z_j - z)`; rational poles only.
    pub fn reconstruct(&self) -> Result<RatFn> {
        let mut acc = RatFn::from_poly(Poly::new(vec![
            GaussRat::from_rat(self.c.clone()),
            GaussRat::from_rat(self.d.clone()),
        ]));
        for t in &self.terms {
            let z0 = t.pole.as_rational().ok_or(Error::AlgebraicPole)?;
            let w = match &t.weight {
                Weight::Rational(w) => w.clone(),
                Weight::Algebraic { .. } => return Err(Error::AlgebraicPole),
            };
            // w / (z0 - z)
            let term = RatFn::new(
                Poly::constant(GaussRat::from_rat(-w)),
                Poly::new(vec![GaussRat::from_rat(-z0.clone()), GaussRat::one()]),
            )?;
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

/// Decides whether `q` is a (meromorphic rational) Herglotz function, via
/// the finite-pole specialization of the integral representation: #-real,
/// growth at most linear with nonnegative linear coefficient, all poles
/// real and simple, all pole weights positive.
pub fn check_scalar_herglotz(q: &RatFn) -> Verdict {
    let mut checks = Vec::new();
    if q.is_zero() {
        checks.push(
            Check::new("zero_function", CheckResult::Pass)
                .with_witness("note", "identically zero; degenerate Herglotz"),
        );
        return Verdict::from_checks(checks);
    }
    if !q.is_sharp_real() {
        checks.push(Check::new("sharp_real", CheckResult::Fail).with_witness("function", q));
        return Verdict::from_checks(checks);
    }
    checks.push(Check::new("sharp_real", CheckResult::Pass));
    if q.inf_degree().unwrap_or(0) > 1 {
        checks.push(
            Check::new("growth_at_infinity", CheckResult::Fail)
                .with_witness("inf_degree", q.inf_degree().unwrap()),
        );
        return Verdict::from_checks(checks);
    }
    checks.push(Check::new("growth_at_infinity", CheckResult::Pass));
    match roots::all_roots_real(q.den()) {
        Ok(true) => checks.push(Check::new("poles_real", CheckResult::Pass)),
        Ok(false) => {
            checks.push(Check::new("poles_real", CheckResult::Fail).with_witness("den", q.den()));
            return Verdict::from_checks(checks);
        }
        Err(e) => {
            checks.push(Check::new("poles_real", CheckResult::Undecided).with_witness("error", e));
            return Verdict::from_checks(checks);
        }
    }
    if !q.den().gcd(&q.den().derivative()).is_constant() {
        checks.push(Check::new("poles_simple", CheckResult::Fail).with_witness("den", q.den()));
        return Verdict::from_checks(checks);
    }
    checks.push(Check::new("poles_simple", CheckResult::Pass));
    let rep = match scalar_pf_rep(q) {
        Ok(rep) => rep,
        Err(Error::Undecided(n)) => {
            checks.push(Check::new("partial_fractions", CheckResult::Undecided)
                .with_witness("refine_cap", n));
            return Verdict::from_checks(checks);
        }
        Err(e) => {
            checks.push(Check::new("partial_fractions", CheckResult::Fail).with_witness("error", e));
            return Verdict::from_checks(checks);
        }
    };
    let mut undecided = false;
    for t in &rep.terms {
        match t.weight.sign() {
            Ok(1) => checks.push(
                Check::new("weight_positive", CheckResult::Pass)
                    .with_witness("pole", &t.pole)
                    .with_witness("weight", t.weight.display()),
            ),
            Ok(_) => {
                checks.push(
                    Check::new("weight_positive", CheckResult::Fail)
                        .with_witness("pole", &t.pole)
                        .with_witness("weight", t.weight.display()),
                );
                return Verdict::from_checks(checks);
            }
            Err(Error::Undecided(n)) => {
                undecided = true;
                checks.push(
                    Check::new("weight_positive", CheckResult::Undecided)
                        .with_witness("pole", &t.pole)
                        .with_witness("refine_cap", n),
                );
            }
            Err(e) => {
                checks.push(Check::new("weight_positive", CheckResult::Undecided)
                    .with_witness("error", e));
                undecided = true;
            }
        }
    }
    if rep.d.is_negative() {
        checks.push(
            Check::new("linear_coefficient_nonnegative", CheckResult::Fail)
                .with_witness("d", format_rat(&rep.d)),
        );
        return Verdict::from_checks(checks);
    }
    checks.push(
        Check::new("linear_coefficient_nonnegative", CheckResult::Pass)
            .with_witness("d", format_rat(&rep.d)),
    );
    checks.push(
        Check::new("constant_real", CheckResult::Pass).with_witness("c", format_rat(&rep.c)),
    );
    if !undecided {
        let terms: Vec<String> = rep
            .terms
            .iter()
            .map(|t| format!("({}; {})", t.pole, t.weight.display()))
            .collect();
        checks.push(
            Check::new("representation", CheckResult::Info)
                .with_witness("c", format_rat(&rep.c))
                .with_witness("d", format_rat(&rep.d))
                .with_witness("terms", terms.join(", ")),
        );
    }
    Verdict::from_checks(checks)
}

/// Strictly alternating zero/pole data for synthesis: sorted rational
/// points with each pole preceding its paired zero, a positive scale, and
/// optionally an unmatched leading zero or trailing pole.
#[derive(Debug, Clone)]
pub struct InterlacingData {
    pub zeros: Vec<Rat>,
    pub poles: Vec<Rat>,
    pub scale: Rat,
}

impl InterlacingData {
    fn validate(&self) -> Result<Vec<(Rat, bool)>> {
        if !self.scale.is_positive() {
            return Err(Error::InterlacingViolated("scale must be positive".into()));
        }
        for w in self.zeros.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InterlacingViolated("zeros not strictly increasing".into()));
            }
        }
        for w in self.poles.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InterlacingViolated("poles not strictly increasing".into()));
            }
        }
        // merge; true = zero, false = pole
        let mut merged: Vec<(Rat, bool)> = self
            .zeros
            .iter()
            .map(|a| (a.clone(), true))
            .chain(self.poles.iter().map(|b| (b.clone(), false)))
            .collect();
        merged.sort_by(|x, y| x.0.cmp(&y.0));
        for w in merged.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InterlacingViolated("zero and pole coincide".into()));
            }
            if w[0].1 == w[1].1 {
                return Err(Error::InterlacingViolated(
                    "two zeros or two poles without a point of the other kind between them".into(),
                ));
            }
        }
        Ok(merged)
    }
}

/// Builds the rational Herglotz function with the given zeros and poles:
/// the product of elementary factors (normalized `(1 - z/a)/(1 - z/b)` for
/// paired points away from zero, unnormalized `(a - z)/(b - z)` when a
/// paired point sits at the origin, `a - z` for an unmatched leading zero,
/// `1/(b - z)` for an unmatched trailing pole), scaled and sign-corrected
/// to the Herglotz branch.
pub fn synth_from_interlacing(data: &InterlacingData) -> Result<RatFn> {
    let merged = data.validate()?;
    let mut num = Poly::constant(GaussRat::from_rat(data.scale.clone()));
    let mut den = Poly::one();
    let mut i = 0usize;
    while i < merged.len() {
        let (pt, is_zero) = &merged[i];
        if *is_zero {
            if i == 0 {
                // unmatched leading zero: a - z
                num = &num * &Poly::new(vec![GaussRat::from_rat(pt.clone()), GaussRat::from_int(-1)]);
            }
            i += 1;
            continue;
        }
        // pole: pairs with the immediately following zero if there is one
        if i + 1 < merged.len() {
            let (a, _) = &merged[i + 1];
            let b = pt;
            if a.is_zero() || b.is_zero() {
                // (a - z)/(b - z)
                num = &num * &Poly::new(vec![GaussRat::from_rat(a.clone()), GaussRat::from_int(-1)]);
                den = &den * &Poly::new(vec![GaussRat::from_rat(b.clone()), GaussRat::from_int(-1)]);
            } else {
                // (1 - z/a)/(1 - z/b)
                num = &num
                    * &Poly::new(vec![
                        GaussRat::one(),
                        GaussRat::from_rat(-(Rat::from_integer(1.into()) / a)),
                    ]);
                den = &den
                    * &Poly::new(vec![
                        GaussRat::one(),
                        GaussRat::from_rat(-(Rat::from_integer(1.into()) / b)),
                    ]);
            }
            i += 2;
        } else {
            // unmatched trailing pole: 1/(b - z)
            den = &den * &Poly::new(vec![GaussRat::from_rat(pt.clone()), GaussRat::from_int(-1)]);
            i += 1;
        }
    }
    let f = RatFn::new(num, den)?;
    herglotz_branch(&f)
}

/// Of `f` and `-f`, returns the one with positive imaginary part at `i`
/// (the Herglotz branch). Constants are returned unchanged.
fn herglotz_branch(f: &RatFn) -> Result<RatFn> {
    if f.is_constant() {
        return Ok(f.clone());
    }
    let v = f.eval(&GaussRat::i()).map_err(|_| {
        Error::Internal("pole at i for a real-rooted function".into())
    })?;
    match rat_sign(&v.im) {
        1 => Ok(f.clone()),
        -1 => Ok(-f),
        _ => Err(Error::Internal("vanishing imaginary part at i for nonconstant function".into())),
    }
}

/// Numeric winding count of `f` over the circle with diameter `[a, b]`
/// (the two semicircular arcs of the argument-principle contour),
/// approximating the divisor sum of `f` over `(a, b)`.
pub fn winding_oracle(f: &RatFn, a: &Rat, b: &Rat, steps: usize) -> Result<f64> {
    if a >= b {
        return Err(Error::EmptyInterval);
    }
    for endpoint in [a, b] {
        let x = GaussRat::from_rat(endpoint.clone());
        if f.den().eval(&x).is_zero() || f.num().eval(&x).is_zero() {
            return Err(Error::SingularOnContour);
        }
    }
    let center = (rat_to_f64(a) + rat_to_f64(b)) / 2.0;
    let radius = (rat_to_f64(b) - rat_to_f64(a)) / 2.0;
    numeric::winding_circle(
        f.num(),
        f.den(),
        num_complex::Complex64::new(center, 0.0),
        radius,
        steps,
    )
}

/// Classical Hermite-Biehler: all zeros of `A + iB` lie in the open lower
/// half-plane iff the zeros of `A` and `B` are real, simple and interlace,
/// and `A'B - B'A > 0` somewhere (equivalently everywhere, given the
/// interlacing, so a single certified sample point decides).
pub fn classical_hb_check(a: &Poly, b: &Poly) -> Result<Verdict> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !a.is_real() || !b.is_real() {
        return Err(Error::NonRealCoefficients);
    }
    let mut checks = Vec::new();
    if !a.gcd(b).is_constant() {
        checks.push(
            Check::new("coprime", CheckResult::Fail)
                .with_witness("common_factor", a.gcd(b)),
        );
        return Ok(Verdict::from_checks(checks));
    }
    checks.push(Check::new("coprime", CheckResult::Pass));
    for (name, p) in [("zeros_of_A_real_simple", a), ("zeros_of_B_real_simple", b)] {
        let real = roots::all_roots_real(p)?;
        let simple = p.gcd(&p.derivative()).is_constant();
        if !(real && simple) {
            checks.push(Check::new(name, CheckResult::Fail).with_witness("poly", p));
            return Ok(Verdict::from_checks(checks));
        }
        checks.push(Check::new(name, CheckResult::Pass));
    }
    let q = RatFn::new(a.clone(), b.clone())?;
    let div = divisor_of(&q)?;
    if !div.is_n_interlacing(1) {
        let run = div.extremal_run();
        let mut c = Check::new("interlacing", CheckResult::Fail);
        if let Some((i, j, s)) = run {
            c = c
                .with_witness("run_start", i)
                .with_witness("run_end", j)
                .with_witness("run_sum", s);
        }
        checks.push(c);
        return Ok(Verdict::from_checks(checks));
    }
    checks.push(Check::new("interlacing", CheckResult::Pass));
    // A'B - B'A; under the interlacing above it has no real zeros, so a
    // single sample point determines its sign on all of R
    let w = &(&a.derivative() * b) - &(&b.derivative() * a);
    let wr = w.to_real().unwrap();
    let mut sample = None;
    for k in 0..=(wr.degree().unwrap_or(0) as i64 + 1) {
        let x = crate::rat::rat_int(k);
        let v = wr.eval(&x);
        if !v.is_zero() {
            sample = Some((x, v));
            break;
        }
    }
    match sample {
        Some((x, v)) if v.is_positive() => {
            checks.push(
                Check::new("wronskian_positive", CheckResult::Pass)
                    .with_witness("sample_point", format_rat(&x))
                    .with_witness("value", format_rat(&v)),
            );
        }
        Some((x, v)) => {
            checks.push(
                Check::new("wronskian_positive", CheckResult::Fail)
                    .with_witness("sample_point", format_rat(&x))
                    .with_witness("value", format_rat(&v)),
            );
        }
        None => {
            checks.push(
                Check::new("wronskian_positive", CheckResult::Fail)
                    .with_witness("note", "A'B - B'A is identically zero"),
            );
        }
    }
    Ok(Verdict::from_checks(checks))
}

/// Numeric count of roots of `p` in the open lower half-plane; test oracle
/// for `classical_hb_check`.
pub fn lower_halfplane_roots_oracle(p: &Poly) -> Result<usize> {
    numeric::lower_halfplane_root_count(p)
}

// ---------------------------------------------------------------------------
// factorization into Herglotz factors
// ---------------------------------------------------------------------------

/// A unit of the factor search: a set of support positions that must stay
/// together (all real roots of one rational squarefree factor), with a sign.
#[derive(Debug, Clone)]
struct Unit {
    /// (position in the global sorted point list, sign)
    points: Vec<(usize, i32)>,
    /// polynomial carrying the zero-set of this unit, split into numerator
    /// part (sign +1 points) and denominator part (sign -1 points)
    num: Poly,
    den: Poly,
}

/// Factors a #-real rational function with real zeros/poles satisfying the
/// n-interlacing condition into `sign * q_1 * ... * q_n` with every `q_j`
/// rational Herglotz; the product identity is exact.
///
/// With rational support this colours the divisor by cumulative levels and
/// synthesizes one factor per colour. Algebraic points must keep their full
/// conjugate set (the roots of one squarefree rational factor) inside a
/// single factor for the factor to have rational coefficients, so the
/// search assigns whole root groups to factors, inserting cancelling
/// rational zero/pole pairs between group members when no direct assignment
/// exists.
pub fn factor_into_herglotz(f: &RatFn, n: usize) -> Result<(i32, Vec<RatFn>)> {
    if n == 0 {
        return Err(Error::NotNInterlacing(0));
    }
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    if !f.is_sharp_real() {
        return Err(Error::NotSharpReal);
    }
    let theta = match divisor_of(f) {
        Ok(t) => t,
        Err(Error::NonRealRoots) => return Err(Error::NotNInterlacing(n)),
        Err(e) => return Err(e),
    };
    if !theta.is_n_interlacing(n) {
        return Err(Error::NotNInterlacing(n));
    }
    let mut factors = if theta.support().iter().all(|(p, _)| p.as_rational().is_some()) {
        // exact colouring route
        let parts = theta.colour_decompose()?;
        let mut fs = Vec::new();
        for part in parts {
            fs.push(synth_from_part(&part)?);
        }
        fs
    } else {
        factor_with_groups(&theta, n)?
    };
    while factors.len() < n {
        factors.push(RatFn::one());
    }
    // fix the constant by comparing f with the product of the factors
    let mut prod = RatFn::one();
    for q in &factors {
        prod = &prod * q;
    }
    let kappa = (f / &prod)
        .constant_value()
        .ok_or_else(|| Error::Internal("factor product has wrong divisor".into()))?;
    if !kappa.is_real() || kappa.is_zero() {
        return Err(Error::Internal("non-real or zero leading constant".into()));
    }
    let sign = rat_sign(&kappa.re);
    let scale = GaussRat::from_rat(kappa.re.abs());
    factors[0] = factors[0].scale(&scale);
    Ok((sign, factors))
}

/// Synthesizes the Herglotz function whose divisor is the given
/// 1-interlacing divisor with rational support and values in {-1, +1}.
fn synth_from_part(part: &DivisorFn) -> Result<RatFn> {
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (p, v) in part.support() {
        let r = p
            .as_rational()
            .ok_or_else(|| Error::Internal("rational part expected".into()))?;
        let lin = Poly::new(vec![GaussRat::from_rat(-r.clone()), GaussRat::one()]);
        match v {
            1 => num = &num * &lin,
            -1 => den = &den * &lin,
            _ => return Err(Error::Internal("colour part with value outside {-1,1}".into())),
        }
    }
    herglotz_branch(&RatFn::new(num, den)?)
}

fn factor_with_groups(theta: &DivisorFn, n: usize) -> Result<Vec<RatFn>> {
    // group support points: algebraic points sharing a defining polynomial
    // form one group; rational points are singletons
    let support = theta.support();
    let mut groups: Vec<(Vec<usize>, i64)> = Vec::new();
    let mut group_poly: Vec<Option<RPoly>> = Vec::new();
    'points: for (idx, (p, v)) in support.iter().enumerate() {
        if let Point::Algebraic(a) = p {
            for (g, (members, value)) in groups.iter_mut().enumerate() {
                if group_poly[g].as_ref() == Some(&a.poly) {
                    if *value != *v {
                        return Err(Error::FactorSearchExhausted);
                    }
                    members.push(idx);
                    continue 'points;
                }
            }
            groups.push((vec![idx], *v));
            group_poly.push(Some(a.poly.clone()));
        } else {
            groups.push((vec![idx], *v));
            group_poly.push(None);
        }
    }
    // first attempt: whole groups as units
    let units = make_units(support, &groups, &group_poly, false)?;
    if let Some(parts) = assign_units(&units, n, support.len()) {
        return synth_assignment(&units, &parts, n);
    }
    // second attempt: split multi-point groups with cancelling rational
    // separator pairs
    let units = make_units(support, &groups, &group_poly, true)?;
    if let Some(parts) = assign_units(&units, n, support.len()) {
        return synth_assignment(&units, &parts, n);
    }
    Err(Error::FactorSearchExhausted)
}

/// Builds assignable units. With `split`, each multi-point group of k roots
/// becomes one spanning unit (the group with k-1 opposite-sign rational
/// separators strictly between consecutive roots) plus k-1 singleton units
/// carrying the separators with the group's sign, so the pointwise sum is
/// unchanged. Separator points get fresh positions appended after the
/// original support in global order.
fn make_units(
    support: &[(Point, i64)],
    groups: &[(Vec<usize>, i64)],
    group_poly: &[Option<RPoly>],
    split: bool,
) -> Result<Vec<Unit>> {
    let mut units = Vec::new();
    let mut next_pos = support.len();
    for (g, (members, value)) in groups.iter().enumerate() {
        let sign = if *value > 0 { 1i32 } else { -1i32 };
        let layers = value.unsigned_abs() as usize;
        let unit_polys = |member_ids: &[usize]| -> (Poly, Poly) {
            let mut num = Poly::one();
            let mut den = Poly::one();
            let base = match &group_poly[g] {
                Some(p) => Poly::from_real(p),
                None => {
                    let r = support[member_ids[0]].0.as_rational().unwrap();
                    Poly::new(vec![GaussRat::from_rat(-r.clone()), GaussRat::one()])
                }
            };
            if sign > 0 {
                num = &num * &base;
            } else {
                den = &den * &base;
            }
            (num, den)
        };
        if !split || members.len() == 1 {
            let (num, den) = unit_polys(members);
            for _ in 0..layers {
                units.push(Unit {
                    points: members.iter().map(|&i| (i, sign)).collect(),
                    num: num.clone(),
                    den: den.clone(),
                });
            }
        } else {
            // spanning unit with separators + compensating singletons
            let mut separators = Vec::new();
            for w in members.windows(2) {
                let r = rational_between(&support[w[0]].0, &support[w[1]].0)?;
                separators.push(r);
            }
            let (mut num, mut den) = unit_polys(members);
            let mut span_points: Vec<(usize, i32)> = members.iter().map(|&i| (i, sign)).collect();
            let mut single_units = Vec::new();
            for (k, r) in separators.iter().enumerate() {
                let pos = next_pos;
                next_pos += 1;
                let lin = Poly::new(vec![GaussRat::from_rat(-r.clone()), GaussRat::one()]);
                // separator joins the spanning unit with the opposite sign
                span_points.push((pos, -sign));
                if sign > 0 {
                    den = &den * &lin;
                } else {
                    num = &num * &lin;
                }
                // and a compensating singleton with the group sign
                let (snum, sden) = if sign > 0 {
                    (lin.clone(), Poly::one())
                } else {
                    (Poly::one(), lin.clone())
                };
                single_units.push(Unit {
                    points: vec![(pos, sign)],
                    num: snum,
                    den: sden,
                });
                let _ = k;
            }
            // keep the member/separator points of the spanning unit ordered:
            // positions interleave as m0 < s0 < m1 < s1 < ...
            let mut ordered = Vec::new();
            for (k, &m) in members.iter().enumerate() {
                ordered.push((m, sign));
                if k < separators.len() {
                    ordered.push((span_points[members.len() + k].0, -sign));
                }
            }
            for _ in 0..layers {
                units.push(Unit {
                    points: ordered.clone(),
                    num: num.clone(),
                    den: den.clone(),
                });
                for u in &single_units {
                    units.push(u.clone());
                }
            }
        }
    }
    Ok(units)
}

/// Global ordering key for a unit point: separator positions are appended
/// after the original support, but their true position interleaves; build
/// an order-preserving map once.
fn position_order(units: &[Unit], support_len: usize) -> Vec<usize> {
    // Original support indices are already sorted. Separators were created
    // between consecutive members m_k, m_{k+1}, so their order key can be
    // taken as just after m_k. Sort all mentioned positions accordingly.
    let mut keys: Vec<(usize, usize)> = Vec::new(); // (position, sort key*2)
    for u in units {
        let mut prev_member = None;
        for &(pos, _) in &u.points {
            if pos < support_len {
                prev_member = Some(pos);
                if !keys.iter().any(|(p, _)| *p == pos) {
                    keys.push((pos, 2 * pos));
                }
            } else if !keys.iter().any(|(p, _)| *p == pos) {
                let anchor = prev_member.unwrap_or(0);
                keys.push((pos, 2 * anchor + 1));
            }
        }
    }
    keys.sort_by_key(|&(_, k)| k);
    let max_pos = keys.iter().map(|&(p, _)| p).max().unwrap_or(0);
    let mut order = vec![usize::MAX; max_pos + 1];
    for (rank, &(pos, _)) in keys.iter().enumerate() {
        order[pos] = rank;
    }
    order
}

/// Backtracking assignment of units to `n` parts such that every part's
/// merged divisor is 1-interlacing with values in {-1, +1}. Bounded search.
fn assign_units(units: &[Unit], n: usize, support_len: usize) -> Option<Vec<usize>> {
    let order = position_order(units, support_len);
    let mut assignment = vec![usize::MAX; units.len()];
    let mut budget = 200_000usize;
    fn part_valid(units: &[Unit], assignment: &[usize], part: usize, order: &[usize]) -> bool {
        let mut pts: Vec<(usize, i32)> = Vec::new();
        for (u, &a) in assignment.iter().enumerate() {
            if a == part {
                for &(pos, s) in &units[u].points {
                    pts.push((order[pos], s));
                }
            }
        }
        pts.sort();
        // merge equal positions
        let mut merged: Vec<i32> = Vec::new();
        let mut k = 0;
        while k < pts.len() {
            let mut s = pts[k].1;
            let mut j = k + 1;
            while j < pts.len() && pts[j].0 == pts[k].0 {
                s += pts[j].1;
                j += 1;
            }
            if s != 0 {
                if s.abs() > 1 {
                    return false;
                }
                merged.push(s);
            }
            k = j;
        }
        // 1-interlacing: every contiguous run sum has |sum| <= 1, i.e. the
        // prefix sums span a window of width at most 1
        let mut acc = 0i32;
        let mut lo = 0i32;
        let mut hi = 0i32;
        for v in merged {
            acc += v;
            lo = lo.min(acc);
            hi = hi.max(acc);
        }
        hi - lo <= 1
    }
    fn rec(
        units: &[Unit],
        n: usize,
        order: &[usize],
        assignment: &mut Vec<usize>,
        next: usize,
        budget: &mut usize,
    ) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        if next == units.len() {
            return (0..n).all(|p| part_valid(units, assignment, p, order));
        }
        for part in 0..n {
            assignment[next] = part;
            // partial pruning: only check full validity at the end, but a
            // part that already carries two identical layers of one unit
            // can never recover
            if part_candidate_ok(units, assignment, next, part) {
                if rec(units, n, order, assignment, next + 1, budget) {
                    return true;
                }
            }
            assignment[next] = usize::MAX;
        }
        false
    }
    fn part_candidate_ok(units: &[Unit], assignment: &[usize], next: usize, part: usize) -> bool {
        // no duplicated unit point with the same sign in one part
        for (u, &a) in assignment.iter().enumerate().take(next) {
            if a == part {
                for &(p1, s1) in &units[u].points {
                    for &(p2, s2) in &units[next].points {
                        if p1 == p2 && s1 == s2 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
    if rec(units, n, &order, &mut assignment, 0, &mut budget) {
        Some(assignment)
    } else {
        None
    }
}

fn synth_assignment(units: &[Unit], assignment: &[usize], n: usize) -> Result<Vec<RatFn>> {
    let mut factors = Vec::new();
    for part in 0..n {
        let mut num = Poly::one();
        let mut den = Poly::one();
        for (u, &a) in assignment.iter().enumerate() {
            if a == part {
                num = &num * &units[u].num;
                den = &den * &units[u].den;
            }
        }
        let f = RatFn::new(num, den)?;
        if f.is_constant() {
            factors.push(RatFn::one());
        } else {
            factors.push(herglotz_branch(&f)?);
        }
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use crate::verdict::Outcome;

    fn rf(num: &[i64], den: &[i64]) -> RatFn {
        RatFn::new(Poly::from_i64(num), Poly::from_i64(den)).unwrap()
    }

    #[test]
    fn herglotz_accepts_canonical_examples() {
        // -1/z: single term, weight 1 at pole 0
        let v = check_scalar_herglotz(&rf(&[-1], &[0, 1]));
        assert_eq!(v.outcome, Outcome::Accept);
        // 1 - 1/z: c = 1, d = 0, term (0, 1)
        let q = rf(&[-1, 1], &[0, 1]);
        let v = check_scalar_herglotz(&q);
        assert_eq!(v.outcome, Outcome::Accept);
        let rep = scalar_pf_rep(&q).unwrap();
        assert_eq!(rep.c, rat_int(1));
        assert_eq!(rep.d, rat_int(0));
        assert_eq!(rep.terms.len(), 1);
        assert_eq!(rep.terms[0].pole.as_rational(), Some(&rat_int(0)));
        match &rep.terms[0].weight {
            Weight::Rational(w) => assert_eq!(w, &rat_int(1)),
            _ => panic!("rational weight expected"),
        }
        // z is Herglotz with d = 1
        assert_eq!(check_scalar_herglotz(&rf(&[0, 1], &[1])).outcome, Outcome::Accept);
    }

    #[test]
    fn herglotz_rejects() {
        // 1/z: weight -1
        let v = check_scalar_herglotz(&rf(&[1], &[0, 1]));
        assert_eq!(v.outcome, Outcome::Reject);
        assert!(v.failed_conditions().contains(&"weight_positive"));
        // z^2: degree growth
        let v = check_scalar_herglotz(&rf(&[0, 0, 1], &[1]));
        assert_eq!(v.outcome, Outcome::Reject);
        assert!(v.failed_conditions().contains(&"growth_at_infinity"));
        // -z: negative linear coefficient
        let v = check_scalar_herglotz(&rf(&[0, -1], &[1]));
        assert!(v.failed_conditions().contains(&"linear_coefficient_nonnegative"));
        // 1/(z^2+1): nonreal poles
        let v = check_scalar_herglotz(&rf(&[1], &[1, 0, 1]));
        assert!(v.failed_conditions().contains(&"poles_real"));
        // 1/z^2: double pole
        let v = check_scalar_herglotz(&rf(&[1], &[0, 0, 1]));
        assert!(v.failed_conditions().contains(&"poles_simple"));
        // iz: not #-real
        let iz = RatFn::from_poly(Poly::new(vec![GaussRat::zero(), GaussRat::i()]));
        assert!(check_scalar_herglotz(&iz).failed_conditions().contains(&"sharp_real"));
    }

    #[test]
    fn herglotz_algebraic_weights() {
        // (z^2 - 2)/z has poles {0} with weight 2 and is Herglotz
        let q = rf(&[-2, 0, 1], &[0, 1]);
        assert_eq!(check_scalar_herglotz(&q).outcome, Outcome::Accept);
        // 1/(z^2 - 2): poles at +-sqrt(2), weights -+1/(2 sqrt 2): rejected
        let q = rf(&[1], &[-2, 0, 1]);
        let v = check_scalar_herglotz(&q);
        assert_eq!(v.outcome, Outcome::Reject);
        // -(z)/(z^2-2) = "Herglotz-like"? weights: lim (r-z) -z/(z^2-2) at
        // r=sqrt2: -(-r)/(2r) ... = 1/2 > 0 at both poles; and d=0, growth ok
        let q = rf(&[0, -1], &[-2, 0, 1]);
        assert_eq!(check_scalar_herglotz(&q).outcome, Outcome::Accept);
    }

    #[test]
    fn synthesis_examples() {
        // zeros {1}, poles {0} -> 1 - 1/z
        let d = InterlacingData { zeros: vec![rat_int(1)], poles: vec![rat_int(0)], scale: rat_int(1) };
        let q = synth_from_interlacing(&d).unwrap();
        assert_eq!(q, rf(&[-1, 1], &[0, 1]));
        assert_eq!(check_scalar_herglotz(&q).outcome, Outcome::Accept);
        // zeros {0}, poles {-1, 1} -> z/((1+z)(1-z)) with weights 1/2
        let d = InterlacingData {
            zeros: vec![rat_int(0)],
            poles: vec![rat_int(-1), rat_int(1)],
            scale: rat_int(1),
        };
        let q = synth_from_interlacing(&d).unwrap();
        assert_eq!(check_scalar_herglotz(&q).outcome, Outcome::Accept);
        let rep = scalar_pf_rep(&q).unwrap();
        assert_eq!(rep.terms.len(), 2);
        for t in &rep.terms {
            match &t.weight {
                Weight::Rational(w) => assert_eq!(w, &rat(1, 2)),
                _ => panic!(),
            }
        }
        // no points: constant scale
        let d = InterlacingData { zeros: vec![], poles: vec![], scale: rat_int(3) };
        assert_eq!(synth_from_interlacing(&d).unwrap(), RatFn::from_int(3));
        // violation: two zeros in a row
        let d = InterlacingData {
            zeros: vec![rat_int(0), rat_int(1)],
            poles: vec![],
            scale: rat_int(1),
        };
        assert!(matches!(
            synth_from_interlacing(&d),
            Err(Error::InterlacingViolated(_))
        ));
    }

    #[test]
    fn synthesis_round_trip_divisor() {
        let d = InterlacingData {
            zeros: vec![rat(-1, 2), rat(3, 2), rat_int(4)],
            poles: vec![rat_int(-1), rat_int(1), rat_int(3)],
            scale: rat(7, 3),
        };
        let q = synth_from_interlacing(&d).unwrap();
        assert_eq!(check_scalar_herglotz(&q).outcome, Outcome::Accept);
        let div = divisor_of(&q).unwrap();
        let zeros: Vec<Rat> = div
            .support()
            .iter()
            .filter(|(_, v)| *v == 1)
            .map(|(p, _)| p.as_rational().unwrap().clone())
            .collect();
        assert_eq!(zeros, d.zeros);
    }

    #[test]
    fn winding_matches_divisor_counts() {
        // z - 1 over (0, 2): one zero
        let f = rf(&[-1, 1], &[1]);
        let w = winding_oracle(&f, &rat_int(0), &rat_int(2), 512).unwrap();
        assert!((w - 1.0).abs() < 0.05);
        // (z^2-2)/z^3 over (-3, 3): 2 - 3 = -1
        let f = rf(&[-2, 0, 1], &[0, 0, 0, 1]);
        let w = winding_oracle(&f, &rat_int(-3), &rat_int(3), 2048).unwrap();
        assert!((w + 1.0).abs() < 0.05, "got {w}");
        // constant: 0
        let w = winding_oracle(&RatFn::one(), &rat_int(-1), &rat_int(1), 64).unwrap();
        assert!(w.abs() < 1e-9);
        // endpoint on a zero: singular
        assert!(matches!(
            winding_oracle(&rf(&[-1, 1], &[1]), &rat_int(1), &rat_int(2), 64),
            Err(Error::SingularOnContour)
        ));
    }

    #[test]
    fn classical_hb_examples() {
        // A = z^2 - 2, B = 3z: p = A + iB = (z+i)(z+2i), stable
        let a = Poly::from_i64(&[-2, 0, 1]);
        let b = Poly::from_i64(&[0, 3]);
        let v = classical_hb_check(&a, &b).unwrap();
        assert_eq!(v.outcome, Outcome::Accept);
        // A = z^2 - 2, B = -3z: A'B - B'A = -3z^2 - 6 < 0
        let b = Poly::from_i64(&[0, -3]);
        let v = classical_hb_check(&a, &b).unwrap();
        assert_eq!(v.outcome, Outcome::Reject);
        assert!(v.failed_conditions().contains(&"wronskian_positive"));
        // A = z^2 + 1: no real roots
        let a = Poly::from_i64(&[1, 0, 1]);
        let b = Poly::from_i64(&[0, 1]);
        let v = classical_hb_check(&a, &b).unwrap();
        assert!(v.failed_conditions().contains(&"zeros_of_A_real_simple"));
    }

    #[test]
    fn hb_agrees_with_halfplane_oracle() {
        // cross-check the two examples above against the numeric oracle
        let a = Poly::from_i64(&[-2, 0, 1]);
        let b3 = Poly::from_i64(&[0, 3]);
        let p = &a + &b3.scale(&GaussRat::i());
        assert_eq!(lower_halfplane_roots_oracle(&p).unwrap(), 2);
        let bm3 = Poly::from_i64(&[0, -3]);
        let p = &a + &bm3.scale(&GaussRat::i());
        assert_eq!(lower_halfplane_roots_oracle(&p).unwrap(), 0);
    }

    #[test]
    fn factorization_rational_support() {
        // 1 - 1/z with n = 1
        let f = rf(&[-1, 1], &[0, 1]);
        let (sign, factors) = factor_into_herglotz(&f, 1).unwrap();
        assert_eq!(sign, 1);
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0], f);
        // -1/z^2 with n = 2
        let f = rf(&[-1], &[0, 0, 1]);
        let (sign, factors) = factor_into_herglotz(&f, 2).unwrap();
        assert_eq!(factors.len(), 2);
        let mut prod = RatFn::from_int(sign as i64);
        for q in &factors {
            assert_eq!(check_scalar_herglotz(q).outcome, Outcome::Accept, "factor {q}");
            prod = &prod * q;
        }
        assert_eq!(prod, f);
        // not n-interlacing: -1/z^2 with n = 1
        assert!(matches!(
            factor_into_herglotz(&rf(&[-1], &[0, 0, 1]), 1),
            Err(Error::NotNInterlacing(1))
        ));
    }

    #[test]
    fn factorization_algebraic_support() {
        // (z^2-2)/z^2 with n = 2: conjugate zeros must stay together
        let f = rf(&[-2, 0, 1], &[0, 0, 1]);
        let (sign, factors) = factor_into_herglotz(&f, 2).unwrap();
        assert_eq!(factors.len(), 2);
        let mut prod = RatFn::from_int(sign as i64);
        for q in &factors {
            assert_eq!(check_scalar_herglotz(q).outcome, Outcome::Accept, "factor {q}");
            prod = &prod * q;
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn factorization_with_separator_split() {
        // z^2 - 2 with n = 2: needs a cancelling rational pair
        let f = rf(&[-2, 0, 1], &[1]);
        let (sign, factors) = factor_into_herglotz(&f, 2).unwrap();
        let mut prod = RatFn::from_int(sign as i64);
        for q in &factors {
            assert_eq!(check_scalar_herglotz(q).outcome, Outcome::Accept, "factor {q}");
            prod = &prod * q;
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn pole_limit_signs() {
        // -3/z^2 at 0 with m=2: limit -3
        let f = rf(&[-3], &[0, 0, 1]);
        assert_eq!(
            pole_limit_sign(&f, &Point::Rational(rat_int(0)), 2).unwrap(),
            -1
        );
        // 1/z^2: limit (0-z)^2/z^2 = 1
        let f = rf(&[1], &[0, 0, 1]);
        assert_eq!(
            pole_limit_sign(&f, &Point::Rational(rat_int(0)), 2).unwrap(),
            1
        );
        // -1/z at 0 with m=1: limit +1
        let f = rf(&[-1], &[0, 1]);
        assert_eq!(
            pole_limit_sign(&f, &Point::Rational(rat_int(0)), 1).unwrap(),
            1
        );
    }

    #[test]
    fn monotone_on_pole_free_interval() {
        // accepted function increases between poles
        let d = InterlacingData {
            zeros: vec![rat_int(0)],
            poles: vec![rat_int(-1), rat_int(1)],
            scale: rat_int(1),
        };
        let q = synth_from_interlacing(&d).unwrap();
        let x1 = GaussRat::from_rat(rat(-1, 2));
        let x2 = GaussRat::from_rat(rat(1, 2));
        let v1 = q.eval(&x1).unwrap();
        let v2 = q.eval(&x2).unwrap();
        assert!(v1.re <= v2.re);
    }
}
