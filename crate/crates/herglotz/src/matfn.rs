//! Square matrices of rational functions.
//!
//! Determinants clear denominators row-wise and run fraction-free Bareiss
//! elimination on the polynomial matrix, so intermediate divisions are exact.
//! The Moore-Penrose inverse of a matrix function with constant kernel and
//! range is computed square-root-free through the projection onto the
//! constant range.

use crate::cmat::{projection_onto_colspace, CMat, IndexSet};
use crate::error::{Error, Result};
use crate::gauss::GaussRat;
use crate::poly::Poly;
use crate::rat::rat_int;
use crate::ratfn::RatFn;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatRatFn {
    n: usize,
    e: Vec<RatFn>,
}

impl MatRatFn {
    pub fn new(n: usize, e: Vec<RatFn>) -> Result<Self> {
        if e.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{n}x{n} needs {} entries, got {}",
                n * n,
                e.len()
            )));
        }
        Ok(MatRatFn { n, e })
    }

    pub fn from_rows(rows: Vec<Vec<RatFn>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(MatRatFn { n, e: rows.into_iter().flatten().collect() })
    }

    pub fn zero(n: usize) -> Self {
        MatRatFn { n, e: vec![RatFn::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, RatFn::one())
    }

    pub fn scalar(n: usize, f: RatFn) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = f.clone();
        }
        m
    }

    pub fn diag(entries: Vec<RatFn>) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n);
        for (i, f) in entries.into_iter().enumerate() {
            m[(i, i)] = f;
        }
        m
    }

    pub fn from_const(c: &CMat) -> Self {
        let n = c.n();
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = RatFn::constant(c[(i, j)].clone());
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[RatFn] {
        &self.e
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(RatFn::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.e.iter().all(RatFn::is_constant)
    }

    /// Constant value, if the matrix function is constant.
    pub fn constant_value(&self) -> Option<CMat> {
        if !self.is_constant() {
            return None;
        }
        let mut c = CMat::zero(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                c[(i, j)] = self[(i, j)].constant_value().unwrap();
            }
        }
        Some(c)
    }

    pub fn scale(&self, f: &RatFn) -> MatRatFn {
        MatRatFn { n: self.n, e: self.e.iter().map(|x| x * f).collect() }
    }

    /// `M^#(z) = M(conj z)^*`: entrywise sharp conjugate of the transpose.
    pub fn sharp_adjoint(&self) -> MatRatFn {
        let mut out = MatRatFn::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self[(j, i)].sharp();
            }
        }
        out
    }

    pub fn is_sharp_real(&self) -> bool {
        *self == self.sharp_adjoint()
    }

    pub fn eval(&self, z: &GaussRat) -> Result<CMat> {
        let mut c = CMat::zero(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                c[(i, j)] = self[(i, j)].eval(z)?;
            }
        }
        Ok(c)
    }

    /// Is `z` a pole of some entry?
    pub fn has_pole_at(&self, z: &GaussRat) -> bool {
        self.e.iter().any(|f| f.den().eval(z).is_zero())
    }

    /// Fraction-free determinant: rows are cleared to polynomials (row lcm
    /// of denominators), Bareiss runs on the polynomial matrix, and the
    /// result divides back out.
    pub fn det(&self) -> Result<RatFn> {
        let n = self.n;
        if n == 0 {
            return Ok(RatFn::one());
        }
        let mut denom = Poly::one();
        let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(n);
        for i in 0..n {
            // lcm of the denominators in row i
            let mut l = Poly::one();
            for j in 0..n {
                let d = self[(i, j)].den();
                let g = l.gcd(d);
                l = &l.exact_div(&g)? * d;
            }
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let f = &self[(i, j)];
                row.push(&f.num().clone() * &l.exact_div(f.den())?);
            }
            denom = &denom * &l;
            rows.push(row);
        }
        let det_poly = bareiss_det(rows)?;
        RatFn::new(det_poly, denom)
    }

    pub fn minor(&self, ix: &IndexSet) -> Result<RatFn> {
        if ix.indices().last().copied().unwrap_or(0) > self.n {
            return Err(Error::IndexOutOfRange(self.n));
        }
        self.principal_submatrix(ix).det()
    }

    pub fn principal_submatrix(&self, ix: &IndexSet) -> MatRatFn {
        let m = ix.len();
        let mut out = MatRatFn::zero(m);
        for (a, &i) in ix.indices().iter().enumerate() {
            for (b, &j) in ix.indices().iter().enumerate() {
                out[(a, b)] = self[(i - 1, j - 1)].clone();
            }
        }
        out
    }

    /// Deletes row and column `j` (0-based).
    pub fn delete_row_col(&self, j: usize) -> MatRatFn {
        let keep: Vec<usize> = (0..self.n).filter(|&k| k != j).collect();
        let mut out = MatRatFn::zero(self.n - 1);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &k) in keep.iter().enumerate() {
                out[(a, b)] = self[(i, k)].clone();
            }
        }
        out
    }

    /// Rank over the rational function field.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let n = self.n;
        let mut rank = 0usize;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a[(r, col)].is_zero()) else { continue };
            if p != rank {
                for j in 0..n {
                    let t = a[(p, j)].clone();
                    a[(p, j)] = a[(rank, j)].clone();
                    a[(rank, j)] = t;
                }
            }
            let inv = a[(rank, col)].inv().unwrap();
            for j in col..n {
                a[(rank, j)] = &a[(rank, j)] * &inv;
            }
            for r in 0..n {
                if r != rank && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for j in col..n {
                        let t = &f * &a[(rank, j)];
                        a[(r, j)] = &a[(r, j)] - &t;
                    }
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    pub fn inverse(&self) -> Result<MatRatFn> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = MatRatFn::identity(n);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Err(Error::SingularMatrix);
            };
            if p != col {
                for j in 0..n {
                    let t = a[(p, j)].clone();
                    a[(p, j)] = a[(col, j)].clone();
                    a[(col, j)] = t;
                    let t = inv[(p, j)].clone();
                    inv[(p, j)] = inv[(col, j)].clone();
                    inv[(col, j)] = t;
                }
            }
            let piv_inv = a[(col, col)].inv().unwrap();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] * &piv_inv;
                inv[(col, j)] = &inv[(col, j)] * &piv_inv;
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for j in 0..n {
                        let t = &f * &a[(col, j)];
                        a[(r, j)] = &a[(r, j)] - &t;
                        let t = &f * &inv[(col, j)];
                        inv[(r, j)] = &inv[(r, j)] - &t;
                    }
                }
            }
        }
        Ok(inv)
    }
}

fn bareiss_det(mut a: Vec<Vec<Poly>>) -> Result<Poly> {
    let n = a.len();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = ((k + 1)..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(Poly::zero());
            };
            a.swap(k, p);
            sign = !sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.exact_div(&prev)?;
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { -&d } else { d })
}

/// Evaluation points used to probe pointwise kernels and ranges; the first
/// three that avoid all entry poles are used.
pub(crate) fn probe_points(m: &MatRatFn) -> Result<Vec<GaussRat>> {
    let mut pts = Vec::new();
    let candidates = [
        (0, 1),
        (0, 2),
        (1, 1),
        (0, 3),
        (1, 2),
        (2, 1),
        (0, 5),
        (1, 3),
        (3, 1),
        (2, 3),
        (0, 7),
        (3, 2),
    ];
    for (re, im) in candidates {
        let z = GaussRat::new(rat_int(re), rat_int(im));
        if !m.has_pole_at(&z) {
            pts.push(z);
            if pts.len() == 3 {
                return Ok(pts);
            }
        }
    }
    Err(Error::Internal("could not find pole-free probe points".into()))
}

/// Moore-Penrose inverse of a rational matrix function whose kernel and
/// range are constant.
///
/// Checked preconditions: the pointwise kernel and range agree at three
/// sample points and with the rank over the function field, and kernel and
/// range coincide with those of the pointwise adjoint. The inverse is then
/// `P (R + I - P)^-1 P` with `P` the projection onto the constant range;
/// all four Moore-Penrose axioms are verified exactly before returning.
pub fn moore_penrose_ratfn(r: &MatRatFn) -> Result<MatRatFn> {
    let n = r.n();
    if r.is_zero() {
        return Ok(MatRatFn::zero(n));
    }
    let rank = r.rank();
    let pts = probe_points(r)?;
    let mut kernel_canon: Option<CMat> = None;
    let mut range_canon: Option<CMat> = None;
    let mut range_basis: Option<CMat> = None;
    let mut evals = Vec::new();
    for z in &pts {
        let rz = r.eval(z)?;
        if rz.rank() != rank {
            return Err(Error::ConstantKernelViolated(format!(
                "rank at z={z} differs from function-field rank {rank}"
            )));
        }
        let ker = rz.null_basis();
        let ran = rz.col_space_canonical();
        match &kernel_canon {
            None => kernel_canon = Some(ker.clone()),
            Some(k0) if *k0 != ker => {
                return Err(Error::ConstantKernelViolated(format!(
                    "kernel at z={z} differs from kernel at z={}",
                    pts[0]
                )))
            }
            _ => {}
        }
        match &range_canon {
            None => {
                range_canon = Some(ran.clone());
                range_basis = Some(rz.col_basis());
            }
            Some(r0) if *r0 != ran => {
                return Err(Error::ConstantKernelViolated(format!(
                    "range at z={z} differs from range at z={}",
                    pts[0]
                )))
            }
            _ => {}
        }
        evals.push((rz, ker, ran));
    }
    // Lemma scope: kernel and range must match those of the pointwise adjoint
    for (rz, ker, ran) in &evals {
        let adj = rz.adjoint();
        if adj.null_basis() != *ker || adj.col_space_canonical() != *ran {
            return Err(Error::KernelAdjointMismatch);
        }
    }
    let p = projection_onto_colspace(&range_basis.unwrap())?;
    let p_fn = MatRatFn::from_const(&p);
    let i_minus_p = MatRatFn::from_const(&(&CMat::identity(n) - &p));
    let s = &(r + &i_minus_p);
    let s_inv = s.inverse().map_err(|_| {
        Error::Internal("R + (I - P) singular despite constant kernel/range".into())
    })?;
    let y = &(&p_fn * &s_inv) * &p_fn;
    // verify the Moore-Penrose axioms as exact rational identities
    let ry = r * &y;
    let yr = &y * r;
    if &(&ry * r) != r || (&yr * &y) != y || ry != p_fn || yr != p_fn {
        return Err(Error::Internal("Moore-Penrose axioms failed to verify".into()));
    }
    Ok(y)
}

impl std::ops::Index<(usize, usize)> for MatRatFn {
    type Output = RatFn;
    fn index(&self, (i, j): (usize, usize)) -> &RatFn {
        &self.e[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatRatFn {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RatFn {
        &mut self.e[i * self.n + j]
    }
}

impl Add for &MatRatFn {
    type Output = MatRatFn;
    fn add(self, rhs: &MatRatFn) -> MatRatFn {
        assert_eq!(self.n, rhs.n);
        MatRatFn { n: self.n, e: self.e.iter().zip(&rhs.e).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &MatRatFn {
    type Output = MatRatFn;
    fn sub(self, rhs: &MatRatFn) -> MatRatFn {
        assert_eq!(self.n, rhs.n);
        MatRatFn { n: self.n, e: self.e.iter().zip(&rhs.e).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &MatRatFn {
    type Output = MatRatFn;
    fn mul(self, rhs: &MatRatFn) -> MatRatFn {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = MatRatFn::zero(n);
        for i in 0..n {
            for k in 0..n {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if rhs[(k, j)].is_zero() {
                        continue;
                    }
                    let t = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &t;
                }
            }
        }
        out
    }
}

impl Neg for &MatRatFn {
    type Output = MatRatFn;
    fn neg(self) -> MatRatFn {
        MatRatFn { n: self.n, e: self.e.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for MatRatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn rf(num: &[i64], den: &[i64]) -> RatFn {
        RatFn::new(Poly::from_i64(num), Poly::from_i64(den)).unwrap()
    }

    #[test]
    fn determinant_of_diag() {
        // diag(-1/z, -1/(z-1)): det = 1/(z(z-1))
        let q = MatRatFn::diag(vec![rf(&[-1], &[0, 1]), rf(&[-1], &[-1, 1])]);
        let d = q.det().unwrap();
        assert_eq!(d, rf(&[1], &[0, -1, 1]));
        // single-index minor is the diagonal entry
        let ix = IndexSet::new(vec![2], 2).unwrap();
        assert_eq!(q.minor(&ix).unwrap(), rf(&[-1], &[-1, 1]));
    }

    #[test]
    fn determinant_with_common_poles() {
        // [[-1/z, -2/z], [-2/z, -1/z]]: det = (1 - 4)/z^2 = -3/z^2
        let q = MatRatFn::from_rows(vec![
            vec![rf(&[-1], &[0, 1]), rf(&[-2], &[0, 1])],
            vec![rf(&[-2], &[0, 1]), rf(&[-1], &[0, 1])],
        ])
        .unwrap();
        assert_eq!(q.det().unwrap(), rf(&[-3], &[0, 0, 1]));
    }

    #[test]
    fn inverse_round_trip() {
        let q = MatRatFn::from_rows(vec![
            vec![rf(&[0, 1], &[1]), rf(&[1], &[1])],
            vec![rf(&[0], &[1]), rf(&[0, 1], &[1])],
        ])
        .unwrap();
        let inv = q.inverse().unwrap();
        assert_eq!(&q * &inv, MatRatFn::identity(2));
        assert!(MatRatFn::zero(2).inverse().is_err());
    }

    #[test]
    fn moore_penrose_scalar_blaschke() {
        // R = (-2i/(z+i)) I: R+ = (i(z+i)/2) I
        let i = GaussRat::i();
        let minus_2i = GaussRat::new(rat(0, 1), rat(-2, 1));
        let r_scalar = RatFn::new(
            Poly::constant(minus_2i),
            &Poly::x() + &Poly::constant(i.clone()),
        )
        .unwrap();
        let r = MatRatFn::scalar(2, r_scalar.clone());
        let rp = moore_penrose_ratfn(&r).unwrap();
        let expect_scalar = r_scalar.inv().unwrap();
        assert_eq!(rp, MatRatFn::scalar(2, expect_scalar));
    }

    #[test]
    fn moore_penrose_diag_with_kernel() {
        // R = diag(z, 0): R+ = diag(1/z, 0)
        let r = MatRatFn::diag(vec![rf(&[0, 1], &[1]), RatFn::zero()]);
        let rp = moore_penrose_ratfn(&r).unwrap();
        assert_eq!(rp, MatRatFn::diag(vec![rf(&[1], &[0, 1]), RatFn::zero()]));
    }

    #[test]
    fn moore_penrose_rejects_varying_kernel() {
        // [[1, z], [0, 0]]: kernel varies with z
        let r = MatRatFn::from_rows(vec![
            vec![RatFn::one(), rf(&[0, 1], &[1])],
            vec![RatFn::zero(), RatFn::zero()],
        ])
        .unwrap();
        assert!(matches!(
            moore_penrose_ratfn(&r),
            Err(Error::ConstantKernelViolated(_))
        ));
    }
}
