//! Exact complex linear algebra over the Gaussian rationals.
//!
//! Everything is dense and exact: RREF, determinants, kernels, Moore-Penrose
//! inverses. Positive semi-definiteness is decided by Sylvester's criterion
//! in its semi-definite form (all principal minors nonnegative), which keeps
//! the decision inside rational arithmetic.

use crate::error::{Error, Result};
use crate::gauss::GaussRat;
use crate::rat::Rat;
use num_complex::Complex64;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A strictly increasing tuple of 1-based indices selecting a principal
/// submatrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        if indices.is_empty()
            || indices.windows(2).any(|w| w[0] >= w[1])
            || indices[0] < 1
            || *indices.last().unwrap() > n
        {
            return Err(Error::IndexOutOfRange(n));
        }
        Ok(IndexSet(indices))
    }

    pub fn full(n: usize) -> Self {
        IndexSet((1..=n).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All nonempty index sets of size `m` out of `n`, lexicographic.
    pub fn all_of_size(n: usize, m: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if cur.len() == m {
                out.push(IndexSet(cur.clone()));
                return;
            }
            for i in start..=n {
                cur.push(i);
                rec(i + 1, n, m, cur, out);
                cur.pop();
            }
        }
        rec(1, n, m, &mut cur, &mut out);
        out
    }

    /// Complement within 1..=n.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        (1..=n).filter(|i| !self.0.contains(i)).collect()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Dense complex matrix with exact entries. Most spec-level objects are
/// square; rectangular shapes appear in factorizations and basis matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMat {
    rows: usize,
    cols: usize,
    e: Vec<GaussRat>,
}

impl CMat {
    pub fn new(rows: usize, cols: usize, e: Vec<GaussRat>) -> Result<Self> {
        if e.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} needs {} entries, got {}",
                rows * cols,
                e.len()
            )));
        }
        Ok(CMat { rows, cols, e })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        CMat { rows, cols, e: vec![GaussRat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = GaussRat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(CMat { rows: r, cols: c, e: rows.into_iter().flatten().collect() })
    }

    pub fn diag(entries: Vec<GaussRat>) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, v) in entries.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn n(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(GaussRat::is_zero)
    }

    pub fn adjoint(&self) -> CMat {
        let mut out = CMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> CMat {
        let mut out = CMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn scale(&self, c: &GaussRat) -> CMat {
        CMat {
            rows: self.rows,
            cols: self.cols,
            e: self.e.iter().map(|x| x * c).collect(),
        }
    }

    /// Hermitian real/imaginary parts: `M = Re + i*Im` with both Hermitian.
    pub fn re_part(&self) -> CMat {
        let h = self.adjoint();
        (self + &h).scale(&GaussRat::new(crate::rat::rat(1, 2), Rat::zero()))
    }

    pub fn im_part(&self) -> CMat {
        let h = self.adjoint();
        // (M - M*) / 2i
        let half_i_inv = GaussRat::new(Rat::zero(), crate::rat::rat(-1, 2));
        (self - &h).scale(&half_i_inv)
    }

    pub fn principal_submatrix(&self, ix: &IndexSet) -> Result<CMat> {
        if !self.is_square() || ix.indices().last().copied().unwrap_or(0) > self.rows {
            return Err(Error::IndexOutOfRange(self.rows));
        }
        let m = ix.len();
        let mut out = CMat::zero(m, m);
        for (a, &i) in ix.indices().iter().enumerate() {
            for (b, &j) in ix.indices().iter().enumerate() {
                out[(a, b)] = self[(i - 1, j - 1)].clone();
            }
        }
        Ok(out)
    }

    /// Submatrix selecting arbitrary (0-based) rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> CMat {
        let mut out = CMat::zero(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn det(&self) -> Result<GaussRat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of non-square".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = GaussRat::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero());
            let Some(p) = pivot else { return Ok(GaussRat::zero()) };
            if p != col {
                for j in 0..n {
                    let t = a[(p, j)].clone();
                    a[(p, j)] = a[(col, j)].clone();
                    a[(col, j)] = t;
                }
                det = -&det;
            }
            let pv = a[(col, col)].clone();
            det = &det * &pv;
            let inv = pv.inv().unwrap();
            for r in (col + 1)..n {
                let f = &a[(r, col)] * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let t = &f * &a[(col, j)];
                    a[(r, j)] = &a[(r, j)] - &t;
                }
            }
        }
        Ok(det)
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (CMat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..a.cols {
            if row >= a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..a.cols {
                    let t = a[(p, j)].clone();
                    a[(p, j)] = a[(row, j)].clone();
                    a[(row, j)] = t;
                }
            }
            let inv = a[(row, col)].inv().unwrap();
            for j in col..a.cols {
                a[(row, j)] = &a[(row, j)] * &inv;
            }
            for r in 0..a.rows {
                if r != row && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for j in col..a.cols {
                        let t = &f * &a[(row, j)];
                        a[(r, j)] = &a[(r, j)] - &t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the null space (from the RREF), as an n x k matrix
    /// of column vectors. The basis is canonical, so two subspaces are equal
    /// iff their `null_basis` matrices are equal.
    pub fn null_basis(&self) -> CMat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = CMat::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out[(fc, k)] = GaussRat::one();
            for (prow, &pc) in pivots.iter().enumerate() {
                out[(pc, k)] = -&r[(prow, fc)];
            }
        }
        out
    }

    /// A basis of the column space: the pivot columns of the original
    /// matrix, as an n x r matrix.
    pub fn col_basis(&self) -> CMat {
        let (_, pivots) = self.rref();
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &pivots)
    }

    /// Canonical form of the column space (RREF of the adjoint-free
    /// transpose restricted to nonzero rows); equal spaces give equal forms.
    pub fn col_space_canonical(&self) -> CMat {
        let (r, pivots) = self.transpose().rref();
        r.submatrix(&(0..pivots.len()).collect::<Vec<_>>(), &(0..r.cols).collect::<Vec<_>>())
    }

    pub fn inverse(&self) -> Result<CMat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        let mut aug = CMat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = GaussRat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).any(|&p| p >= n) {
            return Err(Error::SingularMatrix);
        }
        Ok(r.submatrix(&(0..n).collect::<Vec<_>>(), &(n..2 * n).collect::<Vec<_>>()))
    }

    /// Sylvester's criterion in semi-definite form: Hermitian `M` is PSD iff
    /// every principal minor is >= 0. Exact; errors on non-Hermitian input.
    /// On failure returns the offending index set and minor value.
    pub fn psd_witness(&self) -> Result<std::result::Result<(), (IndexSet, GaussRat)>> {
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let n = self.rows;
        for m in 1..=n {
            for ix in IndexSet::all_of_size(n, m) {
                let minor = self.principal_submatrix(&ix)?.det()?;
                debug_assert!(minor.is_real(), "principal minor of Hermitian must be real");
                if minor.re < Rat::zero() {
                    return Ok(Err((ix, minor)));
                }
            }
        }
        Ok(Ok(()))
    }

    pub fn is_psd(&self) -> Result<bool> {
        Ok(self.psd_witness()?.is_ok())
    }

    /// Moore-Penrose inverse by full-rank factorization `M = F G` over exact
    /// arithmetic: `M+ = G* (G G*)^-1 (F* F)^-1 F*`.
    pub fn moore_penrose(&self) -> CMat {
        let (rref, pivots) = self.rref();
        let r = pivots.len();
        if r == 0 {
            return CMat::zero(self.cols, self.rows);
        }
        let f = self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &pivots);
        let g = rref.submatrix(&(0..r).collect::<Vec<_>>(), &(0..self.cols).collect::<Vec<_>>());
        let gs = g.adjoint();
        let fs = f.adjoint();
        let ggs_inv = (&g * &gs).inverse().expect("G G* invertible for full row rank");
        let fsf_inv = (&fs * &f).inverse().expect("F* F invertible for full column rank");
        &(&(&gs * &ggs_inv) * &fsf_inv) * &fs
    }

    pub fn to_c64(&self) -> Vec<Complex64> {
        self.e.iter().map(GaussRat::to_c64).collect()
    }
}

/// Orthogonal projection onto the column space of `v` (which must have full
/// column rank): `P = V (V*V)^-1 V*`, Hermitian and idempotent, exact.
pub fn projection_onto_colspace(v: &CMat) -> Result<CMat> {
    if v.cols() == 0 {
        return Ok(CMat::zero(v.rows(), v.rows()));
    }
    let vs = v.adjoint();
    let gram = &vs * v;
    let inv = gram.inverse().map_err(|_| Error::RankDeficient)?;
    Ok(&(v * &inv) * &vs)
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = GaussRat;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRat {
        &self.e[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRat {
        &mut self.e[i * self.cols + j]
    }
}

impl Add for &CMat {
    type Output = CMat;
    fn add(self, rhs: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMat {
            rows: self.rows,
            cols: self.cols,
            e: self.e.iter().zip(&rhs.e).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CMat {
    type Output = CMat;
    fn sub(self, rhs: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMat {
            rows: self.rows,
            cols: self.cols,
            e: self.e.iter().zip(&rhs.e).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &CMat {
    type Output = CMat;
    fn mul(self, rhs: &CMat) -> CMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = CMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &t;
                }
            }
        }
        out
    }
}

impl Neg for &CMat {
    type Output = CMat;
    fn neg(self) -> CMat {
        CMat { rows: self.rows, cols: self.cols, e: self.e.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for CMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
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

    fn m2(a: i64, b: i64, c: i64, d: i64) -> CMat {
        CMat::from_rows(vec![
            vec![GaussRat::from_int(a), GaussRat::from_int(b)],
            vec![GaussRat::from_int(c), GaussRat::from_int(d)],
        ])
        .unwrap()
    }

    #[test]
    fn psd_by_principal_minors() {
        // [[1,2],[2,1]]: det = -3, not PSD
        assert!(!m2(1, 2, 2, 1).is_psd().unwrap());
        assert!(CMat::identity(3).is_psd().unwrap());
        // [[1,1],[1,1]]: minors 1, 1, 0 -> PSD
        assert!(m2(1, 1, 1, 1).is_psd().unwrap());
        // non-Hermitian input is an error
        assert!(matches!(m2(1, 2, 3, 4).is_psd(), Err(Error::NotHermitian)));
        // witness carries the offending minor
        let w = m2(1, 2, 2, 1).psd_witness().unwrap().unwrap_err();
        assert_eq!(w.0.indices(), &[1, 2]);
        assert_eq!(w.1, GaussRat::from_int(-3));
    }

    #[test]
    fn index_sets() {
        let all = IndexSet::all_of_size(3, 2);
        assert_eq!(all.len(), 3);
        assert_eq!(all[0].indices(), &[1, 2]);
        assert_eq!(all[2].indices(), &[2, 3]);
        let m = CMat::diag(vec![
            GaussRat::from_int(5),
            GaussRat::from_int(6),
            GaussRat::from_int(7),
        ]);
        let sub = m.principal_submatrix(&IndexSet::new(vec![1, 3], 3).unwrap()).unwrap();
        assert_eq!(sub[(0, 0)], GaussRat::from_int(5));
        assert_eq!(sub[(1, 1)], GaussRat::from_int(7));
        assert_eq!(
            m.principal_submatrix(&IndexSet::full(3)).unwrap(),
            m
        );
        let single = m.principal_submatrix(&IndexSet::new(vec![2], 3).unwrap()).unwrap();
        assert_eq!(single[(0, 0)], GaussRat::from_int(6));
        assert!(IndexSet::new(vec![2, 1], 3).is_err());
        assert!(IndexSet::new(vec![0, 1], 3).is_err());
        assert!(IndexSet::new(vec![1, 4], 3).is_err());
    }

    #[test]
    fn moore_penrose_examples() {
        // diag(1,0) is its own pseudoinverse
        let d = CMat::diag(vec![GaussRat::one(), GaussRat::zero()]);
        assert_eq!(d.moore_penrose(), d);
        // [[1,1],[1,1]]+ = (1/4) [[1,1],[1,1]]
        let a = m2(1, 1, 1, 1);
        let p = a.moore_penrose();
        assert_eq!(p, a.scale(&GaussRat::from_rat(rat(1, 4))));
        // zero matrix
        let z = CMat::zero(2, 2);
        assert_eq!(z.moore_penrose(), z);
        // the four axioms
        for t in [m2(1, 1, 1, 1), m2(1, 2, 3, 4), m2(0, 1, 0, 0)] {
            let tp = t.moore_penrose();
            assert_eq!(&(&t * &tp) * &t, t);
            assert_eq!(&(&tp * &t) * &tp, tp);
            assert!((&t * &tp).is_hermitian());
            assert!((&tp * &t).is_hermitian());
            // involution
            assert_eq!(tp.moore_penrose(), t);
        }
    }

    #[test]
    fn projections() {
        // e1 -> diag(1, 0, ..., 0)
        let e1 = CMat::new(3, 1, vec![GaussRat::one(), GaussRat::zero(), GaussRat::zero()])
            .unwrap();
        let p = projection_onto_colspace(&e1).unwrap();
        let mut expect = CMat::zero(3, 3);
        expect[(0, 0)] = GaussRat::one();
        assert_eq!(p, expect);
        // (1,1)^T -> (1/2) [[1,1],[1,1]]
        let v = CMat::new(2, 1, vec![GaussRat::one(), GaussRat::one()]).unwrap();
        let p = projection_onto_colspace(&v).unwrap();
        assert_eq!(p, m2(1, 1, 1, 1).scale(&GaussRat::from_rat(rat(1, 2))));
        assert_eq!(&p * &p, p);
        assert!(p.is_hermitian());
        // identity columns -> identity
        let p = projection_onto_colspace(&CMat::identity(3)).unwrap();
        assert_eq!(p, CMat::identity(3));
        // rank-deficient input errors
        let bad = CMat::new(2, 2, vec![
            GaussRat::one(), GaussRat::one(),
            GaussRat::one(), GaussRat::one(),
        ]).unwrap();
        assert!(matches!(projection_onto_colspace(&bad), Err(Error::RankDeficient)));
    }

    #[test]
    fn kernel_canonical_basis() {
        let a = m2(1, 1, 1, 1);
        let nb = a.null_basis();
        assert_eq!(nb.cols(), 1);
        // kernel spanned by (-1, 1)
        assert!( (&a * &nb).is_zero() );
        // ker T = ker T+T
        let tp = a.moore_penrose();
        assert_eq!(nb, (&tp * &a).null_basis());
    }
}
