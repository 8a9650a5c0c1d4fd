//! Polynomial root finding and scalar root polishing.
//!
//! Characteristic functions of atomic-weight problems are low-degree real
//! polynomials; their roots come from the balanced companion matrix and are
//! then polished by Newton steps with a bisection fallback, so eigenvalues
//! are accurate to machine precision even when the QR pass is not.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::C64;
use alloc::format;
use alloc::vec::Vec;
use num_traits::Float;

/// All (complex) roots of a real polynomial via companion-matrix
/// eigenvalues.
pub fn companion_roots(p: &Poly) -> Vec<C64> {
    let c = p.coeffs();
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = c[n];
    let mut m = nalgebra::DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i] / lead;
    }
    balance(&mut m);
    m.complex_eigenvalues().iter().copied().collect()
}

/// Parlett-Reinsch style diagonal balancing; improves companion-matrix
/// eigenvalue accuracy when coefficients span many magnitudes.
fn balance(m: &mut nalgebra::DMatrix<f64>) {
    let n = m.nrows();
    let radix = 2.0f64;
    for _ in 0..32 {
        let mut converged = true;
        for i in 0..n {
            let mut row_norm = 0.0;
            let mut col_norm = 0.0;
            for j in 0..n {
                if j != i {
                    row_norm += m[(i, j)].abs();
                    col_norm += m[(j, i)].abs();
                }
            }
            if row_norm == 0.0 || col_norm == 0.0 {
                continue;
            }
            let mut f = 1.0;
            let s = row_norm + col_norm;
            let mut c = col_norm;
            while c < row_norm / radix {
                f *= radix;
                c *= radix * radix;
            }
            while c > row_norm * radix {
                f /= radix;
                c /= radix * radix;
            }
            if (row_norm / f + col_norm * f) < 0.95 * s {
                converged = false;
                for j in 0..n {
                    m[(i, j)] /= f;
                }
                for j in 0..n {
                    m[(j, i)] *= f;
                }
            }
        }
        if converged {
            break;
        }
    }
}

/// Real simple roots of a real polynomial, sorted ascending.
///
/// Companion eigenvalues seed the search; every root is polished by
/// `polish_real_root` and checked for simplicity at relative spacing
/// `min_spacing`. Errors if any root fails to polish onto the real line.
pub fn real_simple_roots(p: &Poly, min_spacing: f64) -> Result<Vec<f64>> {
    let raw = companion_roots(p);
    let scale = raw.iter().fold(1.0f64, |m, r| m.max(r.norm()));
    let mut roots = Vec::new();
    for r in &raw {
        if r.im.abs() > 1e-8 * scale {
            return Err(Error::InvalidProblem(format!(
                "characteristic polynomial has a non-real root {r}"
            )));
        }
        roots.push(polish_real_root(p, r.re));
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for w in roots.windows(2) {
        if (w[1] - w[0]).abs() <= min_spacing * scale.max(1.0) {
            return Err(Error::InvalidProblem(format!(
                "characteristic roots {} and {} are not simple at spacing {min_spacing:e}",
                w[0], w[1]
            )));
        }
    }
    Ok(roots)
}

/// Newton polish of a near-root of a polynomial, with derivative safeguard.
pub fn polish_real_root(p: &Poly, x0: f64) -> f64 {
    let d = p.derivative();
    let mut x = x0;
    for _ in 0..64 {
        let f = p.eval_real(x);
        let df = d.eval_real(x);
        if df == 0.0 {
            break;
        }
        let step = f / df;
        let next = x - step;
        if !next.is_finite() {
            break;
        }
        if (next - x).abs() <= 1e-16 * x.abs().max(1.0) {
            return next;
        }
        x = next;
    }
    x
}

/// Bisection + secant hybrid for a scalar function with a sign change on
/// [lo, hi]. Used by the window-scan eigenvalue search.
pub fn refine_bracket<F: FnMut(f64) -> f64>(mut f: F, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == 0.0 {
        return lo;
    }
    if fhi == 0.0 {
        return hi;
    }
    debug_assert!(flo * fhi < 0.0);
    for iter in 0..200 {
        // Secant proposal inside the bracket; bisect every other step so a
        // one-sided secant cannot stagnate.
        let mut x = (lo * fhi - hi * flo) / (fhi - flo);
        if iter % 2 == 1 || !x.is_finite() || x <= lo || x >= hi {
            x = 0.5 * (lo + hi);
        }
        let fx = f(x);
        if fx == 0.0 {
            return x;
        }
        if flo * fx < 0.0 {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        if hi - lo <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            return 0.5 * (lo + hi);
        }
    }
    0.5 * (lo + hi)
}
