//! Shared generators for the randomized suites. Everything is seeded, so
//! runs are reproducible.

use herglotz::cmat::CMat;
use herglotz::gauss::GaussRat;
use herglotz::matfn::MatRatFn;
use herglotz::matrix::PartialFractionRep;
use herglotz::poly::Poly;
use herglotz::rat::{rat, Rat};
use herglotz::ratfn::RatFn;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational with numerator in [-num_range, num_range] and
/// denominator in [1, den_range].
pub fn rand_rat(r: &mut ChaCha8Rng, num_range: i64, den_range: i64) -> Rat {
    rat(r.gen_range(-num_range..=num_range), r.gen_range(1..=den_range))
}

pub fn rand_gauss(r: &mut ChaCha8Rng, num_range: i64, den_range: i64) -> GaussRat {
    GaussRat::new(rand_rat(r, num_range, den_range), rand_rat(r, num_range, den_range))
}

/// `count` pairwise distinct rationals, sorted.
pub fn distinct_rats(r: &mut ChaCha8Rng, count: usize, num_range: i64, den_range: i64) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    while out.len() < count {
        let c = rand_rat(r, num_range, den_range);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out.sort();
    out
}

/// Random Hermitian matrix with small Gaussian-rational entries.
pub fn rand_hermitian(r: &mut ChaCha8Rng, n: usize, range: i64) -> CMat {
    let mut b = CMat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] = rand_gauss(r, range, 2);
        }
    }
    let adj = b.adjoint();
    (&b + &adj).scale(&GaussRat::from_rat(rat(1, 2)))
}

/// Random PSD matrix of rank at most `rank`, nonzero.
pub fn rand_psd(r: &mut ChaCha8Rng, n: usize, rank: usize, range: i64) -> CMat {
    loop {
        let mut acc = CMat::zero(n, n);
        for _ in 0..rank.max(1) {
            let v = rand_vector(r, n, range);
            let vs = v.adjoint();
            acc = &acc + &(&v * &vs);
        }
        if !acc.is_zero() {
            return acc;
        }
    }
}

/// Random column vector as an n x 1 matrix.
pub fn rand_vector(r: &mut ChaCha8Rng, n: usize, range: i64) -> CMat {
    let mut v = CMat::zero(n, 1);
    for i in 0..n {
        v[(i, 0)] = rand_gauss(r, range, 2);
    }
    v
}

/// Random nonzero vector.
pub fn rand_nonzero_vector(r: &mut ChaCha8Rng, n: usize, range: i64) -> CMat {
    loop {
        let v = rand_vector(r, n, range);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Random valid partial-fraction data: Hermitian C, PSD D, nonzero PSD A_j
/// at distinct rational poles in [-10, 10].
pub fn rand_herglotz_rep(r: &mut ChaCha8Rng, n: usize, max_poles: usize) -> PartialFractionRep {
    let k = r.gen_range(1..=max_poles);
    let poles = distinct_rats(r, k, 10, 1);
    let mut terms = Vec::new();
    for p in poles {
        let rank = r.gen_range(1..=n);
        let a = rand_psd(r, n, rank, 2);
        terms.push((p, a));
    }
    let c = rand_hermitian(r, n, 2);
    let d = if r.gen_bool(0.5) {
        let rank = r.gen_range(1..=n);
        rand_psd(r, n, rank, 1)
    } else {
        CMat::zero(n, n)
    };
    PartialFractionRep { c, d, terms }
}

/// Makes one weight indefinite with minimum eigenvalue <= -1/4 (Rayleigh
/// quotient certificate), leaving it Hermitian and nonzero.
pub fn break_one_weight(r: &mut ChaCha8Rng, rep: &PartialFractionRep) -> PartialFractionRep {
    let mut rep = rep.clone();
    let n = rep.c.n();
    let idx = r.gen_range(0..rep.terms.len());
    let v = rand_nonzero_vector(r, n, 2);
    let vs = v.adjoint();
    let norm2 = (&vs * &v)[(0, 0)].re.clone();
    let ray = (&(&vs * &rep.terms[idx].1) * &v)[(0, 0)].re.clone();
    // c = (v*Av + |v|^2/4 + |v|^2) / |v|^4 pushes the Rayleigh quotient of
    // v below -1/4 - 1
    let c = (&ray + &(&norm2 * &rat(5, 4))) / (&norm2 * &norm2);
    let bad = &rep.terms[idx].1 - &(&v * &vs).scale(&GaussRat::from_rat(c));
    rep.terms[idx].1 = bad;
    rep
}

/// Monic polynomial with the given complex roots.
pub fn poly_from_roots(roots: &[GaussRat]) -> Poly {
    let mut p = Poly::one();
    for r in roots {
        p = &p * &Poly::new(vec![-r, GaussRat::one()]);
    }
    p
}

/// Real-rooted #-real rational function with the given zeros and poles.
pub fn ratfn_from_zeros_poles(zeros: &[Rat], poles: &[Rat], scale: &Rat) -> RatFn {
    let num = poly_from_roots(&zeros.iter().map(|z| GaussRat::from_rat(z.clone())).collect::<Vec<_>>());
    let den = poly_from_roots(&poles.iter().map(|z| GaussRat::from_rat(z.clone())).collect::<Vec<_>>());
    RatFn::new(num.scale(&GaussRat::from_rat(scale.clone())), den).unwrap()
}

/// Diagonal matrix of products of Blaschke factors; returns (E_minus,
/// E_plus) with E_minus = E_plus^# and E_plus^{-1} E_minus inner.
pub fn rand_blaschke_pair(
    r: &mut ChaCha8Rng,
    n: usize,
    max_deg: usize,
) -> (MatRatFn, MatRatFn) {
    let mut em = Vec::new();
    let mut ep = Vec::new();
    for _ in 0..n {
        let deg = r.gen_range(0..=max_deg);
        let mut num = Poly::one();
        let mut den = Poly::one();
        for _ in 0..deg {
            let a = rand_rat(r, 4, 2);
            let b = rat(r.gen_range(1..=4), r.gen_range(1..=2));
            let root = GaussRat::new(a, b);
            num = &num * &Poly::new(vec![-&root, GaussRat::one()]);
            den = &den * &Poly::new(vec![-&root.conj(), GaussRat::one()]);
        }
        em.push(RatFn::from_poly(num));
        ep.push(RatFn::from_poly(den));
    }
    (MatRatFn::diag(em), MatRatFn::diag(ep))
}
