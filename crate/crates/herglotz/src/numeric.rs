//! Floating-point oracles.
//!
//! Nothing in here feeds an exact decision. These routines exist to
//! cross-check the exact code paths (root counts, eigenvalue signs) and to
//! guide searches whose results are then verified exactly (rational root
//! candidates).

use crate::error::{Error, Result};
use crate::poly::Poly;
use num_complex::Complex64;
use std::f64::consts::PI;

/// All complex roots of `p` by Durand-Kerner iteration.
///
/// Deterministic: fixed initial configuration, fixed iteration budget.
/// Accuracy degrades near multiple roots; callers that care pass squarefree
/// polynomials.
pub fn complex_roots(p: &Poly) -> Vec<Complex64> {
    let deg = match p.degree() {
        None | Some(0) => return vec![],
        Some(d) => d,
    };
    let lead = p.leading().unwrap().to_c64();
    let coeffs: Vec<Complex64> = p.coeffs().iter().map(|c| c.to_c64() / lead).collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let radius = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * PI * (k as f64) / (deg as f64) + 0.37;
            radius * 0.7 * Complex64::new(angle.cos(), angle.sin()) + seed * 0.01
        })
        .collect();
    for _ in 0..400 {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() < 1e-300 {
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-13 {
            break;
        }
    }
    roots
}

/// Counts roots of `p` with `Im < 0` via the Durand-Kerner roots. Declines
/// when any root is within `1e-9` of the real axis.
pub fn lower_halfplane_root_count(p: &Poly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let roots = complex_roots(p);
    if roots.iter().any(|r| r.im.abs() < 1e-9) {
        return Err(Error::RootNearAxis);
    }
    Ok(roots.iter().filter(|r| r.im < 0.0).count())
}

/// `(1/2*pi*i) * contour integral of f'/f` over the circle `|z - center| = radius`,
/// composite trapezoid with `steps` nodes per semicircular arc.
///
/// Returns the (real part of the) winding count. Errors if the integrand
/// blows up on a node.
pub fn winding_circle(
    num: &Poly,
    den: &Poly,
    center: Complex64,
    radius: f64,
    steps: usize,
) -> Result<f64> {
    let dnum = num.derivative();
    let dden = den.derivative();
    let logd = |z: Complex64| -> Result<Complex64> {
        let nv = num.eval_c64(z);
        let dv = den.eval_c64(z);
        if !nv.is_finite() || !dv.is_finite() || nv.norm() < 1e-280 || dv.norm() < 1e-280 {
            return Err(Error::SingularOnContour);
        }
        Ok(dnum.eval_c64(z) / nv - dden.eval_c64(z) / dv)
    };
    let n = 2 * steps.max(4);
    let h = 2.0 * PI / (n as f64);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        let t = h * (k as f64);
        let e = Complex64::new(t.cos(), t.sin());
        let z = center + radius * e;
        let dz = Complex64::new(0.0, radius) * e;
        let w = if k == 0 || k == n { 0.5 } else { 1.0 };
        acc += logd(z)? * dz * w;
    }
    acc *= h;
    let count = acc / Complex64::new(0.0, 2.0 * PI);
    if !count.re.is_finite() {
        return Err(Error::SingularOnContour);
    }
    Ok(count.re)
}

/// Winding count of `p` over the boundary of the half-disc
/// `{Im z > base_im, |z - i*base_im| < radius}`, i.e. the number of roots
/// with imaginary part above `base_im` when all roots stay clear of the
/// contour. A small positive base keeps real roots off the contour.
pub fn winding_upper_half_disc(p: &Poly, radius: f64, base_im: f64, steps: usize) -> Result<f64> {
    let dp = p.derivative();
    let logd = |z: Complex64| -> Result<Complex64> {
        let v = p.eval_c64(z);
        if !v.is_finite() || v.norm() < 1e-280 {
            return Err(Error::SingularOnContour);
        }
        Ok(dp.eval_c64(z) / v)
    };
    let n = steps.max(8);
    let mut acc = Complex64::new(0.0, 0.0);
    // segment from -radius + i*base to radius + i*base
    let h = 2.0 * radius / (n as f64);
    for k in 0..=n {
        let x = -radius + h * (k as f64);
        let w = if k == 0 || k == n { 0.5 } else { 1.0 };
        acc += logd(Complex64::new(x, base_im))? * Complex64::new(h * w, 0.0);
    }
    // arc i*base + radius e^{it}, t in [0, pi]
    let ht = PI / (n as f64);
    for k in 0..=n {
        let t = ht * (k as f64);
        let e = Complex64::new(t.cos(), t.sin());
        let z = Complex64::new(0.0, base_im) + radius * e;
        let dz = Complex64::new(0.0, radius) * e * ht;
        let w = if k == 0 || k == n { 0.5 } else { 1.0 };
        acc += logd(z)? * dz * w;
    }
    Ok((acc / Complex64::new(0.0, 2.0 * PI)).re)
}

/// Eigenvalues of a Hermitian matrix given as dense row-major complex data,
/// via cyclic Jacobi on the real symmetric embedding [[X, -Y], [Y, X]].
/// Returned sorted ascending (each eigenvalue of the input appears once).
pub fn hermitian_eigenvalues(n: usize, entries: &[Complex64]) -> Vec<f64> {
    assert_eq!(entries.len(), n * n);
    if n == 0 {
        return vec![];
    }
    let m = 2 * n;
    let mut a = vec![0.0f64; m * m];
    for i in 0..n {
        for j in 0..n {
            let z = entries[i * n + j];
            a[i * m + j] = z.re;
            a[(i + n) * m + (j + n)] = z.re;
            a[i * m + (j + n)] = -z.im;
            a[(i + n) * m + j] = z.im;
        }
    }
    // cyclic Jacobi sweeps
    for _ in 0..60 {
        let mut off = 0.0;
        for p in 0..m {
            for q in (p + 1)..m {
                off += a[p * m + q] * a[p * m + q];
            }
        }
        if off < 1e-24 {
            break;
        }
        for p in 0..m {
            for q in (p + 1)..m {
                let apq = a[p * m + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * m + p];
                let aqq = a[q * m + q];
                let theta = 0.5 * (aqq - app).atan2(2.0 * apq) * -1.0;
                // rotation chosen to zero a[p][q]
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let _ = theta;
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..m).map(|k| a[k * m + k]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    // embedding doubles each eigenvalue; take every other one
    eigs.into_iter().step_by(2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::GaussRat;
    use crate::rat::rat_int;

    #[test]
    fn roots_of_quadratic() {
        // z^2 + 3iz - 2 has roots -i and -2i
        let p = Poly::new(vec![
            GaussRat::from_int(-2),
            GaussRat::new(rat_int(0), rat_int(3)),
            GaussRat::one(),
        ]);
        let mut roots = complex_roots(&p);
        roots.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((roots[0] - Complex64::new(0.0, -2.0)).norm() < 1e-9);
        assert!((roots[1] - Complex64::new(0.0, -1.0)).norm() < 1e-9);
        assert_eq!(lower_halfplane_root_count(&p).unwrap(), 2);
    }

    #[test]
    fn halfplane_oracle_examples() {
        // z - i: no roots below the axis
        let p = Poly::new(vec![-&GaussRat::i(), GaussRat::one()]);
        assert_eq!(lower_halfplane_root_count(&p).unwrap(), 0);
        // z^2 + 1: one root on each side
        let q = Poly::from_i64(&[1, 0, 1]);
        assert_eq!(lower_halfplane_root_count(&q).unwrap(), 1);
        // z - 1: root on the axis, oracle declines
        let r = Poly::from_i64(&[-1, 1]);
        assert!(matches!(
            lower_halfplane_root_count(&r),
            Err(Error::RootNearAxis)
        ));
    }

    #[test]
    fn winding_counts_enclosed_zeros() {
        // (z-1): circle around [0,2] encloses the single zero
        let p = Poly::from_i64(&[-1, 1]);
        let w = winding_circle(&p, &Poly::one(), Complex64::new(1.0, 0.0), 1.0, 512).unwrap();
        assert!((w - 1.0).abs() < 0.05);
        // constant: zero winding
        let c = Poly::from_i64(&[7]);
        let w = winding_circle(&c, &Poly::one(), Complex64::new(0.0, 0.0), 2.0, 64).unwrap();
        assert!(w.abs() < 1e-9);
    }

    #[test]
    fn upper_half_disc_count() {
        // (z - i)(z + 2i): exactly one root in the upper half-plane
        let p = Poly::new(vec![
            GaussRat::from_int(2),
            GaussRat::new(rat_int(0), rat_int(1)),
            GaussRat::one(),
        ]);
        let w = winding_upper_half_disc(&p, 8.0, 1e-5, 4096).unwrap();
        assert!((w - 1.0).abs() < 0.05, "got {w}");
    }

    #[test]
    fn jacobi_eigenvalues() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3
        let entries = vec![
            Complex64::new(2.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(2.0, 0.0),
        ];
        let eigs = hermitian_eigenvalues(2, &entries);
        assert!((eigs[0] - 1.0).abs() < 1e-8);
        assert!((eigs[1] - 3.0).abs() < 1e-8);
    }
}
