//! Real-coefficient polynomials in the spectral parameter z.
//!
//! In exact mode (purely atomic weight, piecewise constant sigma and chi)
//! every propagated quantity is a polynomial in z with real coefficients,
//! so the solution family, tail coefficients and reproducing kernels can be
//! manipulated symbolically. Degrees stay at the number of atoms, which is
//! small, so the dense coefficient representation is fine.

use crate::C64;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

/// Dense real polynomial, coefficients in ascending powers of z.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: f64) -> Self {
        Poly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    fn trim(&mut self) {
        while let Some(&c) = self.coeffs.last() {
            if c == 0.0 {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn eval(&self, z: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn eval_real(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| (i + 1) as f64 * c)
                .collect(),
        )
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0.0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Multiplication by the monomial z.
    pub fn mul_z(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0.0];
        out.extend_from_slice(&self.coeffs);
        Poly::new(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Divide by (z - root) assuming `root` is (numerically) a root;
    /// returns the quotient and the remainder left over by the division.
    pub fn deflate(&self, root: f64) -> (Poly, f64) {
        if self.is_zero() {
            return (Poly::zero(), 0.0);
        }
        let n = self.coeffs.len();
        let mut q = vec![0.0; n - 1];
        let mut carry = 0.0;
        for i in (0..n).rev() {
            let v = self.coeffs[i] + carry;
            if i == 0 {
                return (Poly::new(q), v);
            }
            q[i - 1] = v;
            carry = v * root;
        }
        unreachable!()
    }

    /// Largest coefficient magnitude, used for relative thresholds.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, &c| m.max(c.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_derivative() {
        // p(z) = 1 - 2z + 3z^2
        let p = Poly::new(vec![1.0, -2.0, 3.0]);
        assert_eq!(p.eval_real(2.0), 9.0);
        let d = p.derivative();
        assert_eq!(d.coeffs(), &[-2.0, 6.0]);
        let z = C64::new(0.5, -1.5);
        let expected = C64::new(1.0, 0.0) - 2.0 * z + 3.0 * z * z;
        assert!((p.eval(z) - expected).norm() < 1e-15);
    }

    #[test]
    fn arithmetic_and_deflation() {
        let p = Poly::new(vec![1.0, 1.0]); // 1 + z
        let q = Poly::new(vec![-2.0, 1.0]); // -2 + z
        let prod = p.mul(&q); // -2 - z + z^2
        assert_eq!(prod.coeffs(), &[-2.0, -1.0, 1.0]);
        let (defl, rem) = prod.deflate(2.0);
        assert!(rem.abs() < 1e-14);
        assert_eq!(defl.coeffs(), &[1.0, 1.0]);
        assert_eq!(p.mul_z().coeffs(), &[0.0, 1.0, 1.0]);
        assert!(p.sub(&p).is_zero());
    }
}
