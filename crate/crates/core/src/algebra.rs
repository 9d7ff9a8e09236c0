//! Operations shared by single Clifford algebras and their tensor products:
//! the exponential and the reversion-symmetrized bracket.

use crate::clifford::Multivector;
use crate::error::{Error, Result};

/// An element of a real associative algebra with unit and reversion.
pub trait AlgebraElement: Clone + PartialEq + Sized {
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn try_add(&self, rhs: &Self) -> Result<Self>;
    fn scale(&self, s: f64) -> Self;
    /// Multiplicative identity of the algebra `self` lives in.
    fn unit(&self) -> Self;
    /// Grade reversion (per factor for tensors).
    fn reversed(&self) -> Self;
    /// Hermitian adjoint (per factor for tensors); equals reversion on Cl(3,0).
    fn adjoint(&self) -> Self;
    /// `Some(c)` when the element is `c` times the identity.
    fn as_scalar(&self) -> Option<f64>;
    /// Coefficient of the identity.
    fn scalar_part(&self) -> f64;
    /// Sum of absolute coefficients (submultiplicative).
    fn norm1(&self) -> f64;
}

impl AlgebraElement for Multivector {
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.geometric_product(rhs)
    }

    fn try_add(&self, rhs: &Self) -> Result<Self> {
        Multivector::try_add(self, rhs)
    }

    fn scale(&self, s: f64) -> Self {
        Multivector::scale(self, s)
    }

    fn unit(&self) -> Self {
        Multivector::one(self.signature())
    }

    fn reversed(&self) -> Self {
        self.reverse()
    }

    fn adjoint(&self) -> Self {
        Multivector::adjoint(self)
    }

    fn as_scalar(&self) -> Option<f64> {
        Multivector::as_scalar(self)
    }

    fn scalar_part(&self) -> f64 {
        Multivector::scalar_part(self)
    }

    fn norm1(&self) -> f64 {
        Multivector::norm1(self)
    }
}

/// Cap on Taylor terms in the series fallback of [`exponential`].
pub const MAX_SERIES_TERMS: usize = 200;

/// `exp(a) = Σ aⁿ/n!`.
///
/// When `a²` is a scalar λ the closed form is used: `cos √-λ + a sin √-λ / √-λ`
/// for λ < 0, the hyperbolic analogue for λ > 0, and `1 + a` for λ = 0.
/// Otherwise `a` is scaled by 2^-s until its 1-norm is at most 1/2, the
/// truncated series is summed until the next term falls below `tol`, and the
/// result is squared `s` times.
pub fn exponential<T: AlgebraElement>(a: &T, tol: f64) -> Result<T> {
    let one = a.unit();
    let square = a.try_mul(a)?;
    if let Some(lambda) = square.as_scalar() {
        let (c, s) = if lambda < 0.0 {
            let r = (-lambda).sqrt();
            (r.cos(), r.sin() / r)
        } else if lambda > 0.0 {
            let r = lambda.sqrt();
            (r.cosh(), r.sinh() / r)
        } else {
            (1.0, 1.0)
        };
        return one.scale(c).try_add(&a.scale(s));
    }

    let norm = a.norm1();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a.scale(0.5f64.powi(squarings as i32));
    let mut sum = one.clone();
    let mut term = one;
    let mut residual = f64::INFINITY;
    for k in 1..=MAX_SERIES_TERMS {
        term = term.try_mul(&scaled)?.scale(1.0 / k as f64);
        sum = sum.try_add(&term)?;
        residual = term.norm1();
        if residual < tol * 1e-3 {
            break;
        }
    }
    if residual.is_nan() || residual >= tol * 1e-3 {
        return Err(Error::NonConvergence { residual });
    }
    for _ in 0..squarings {
        sum = sum.try_mul(&sum)?;
    }
    Ok(sum)
}

/// `½(a·rev(b) + rev(a)·b)` before projection.
pub fn symmetrized_product<T: AlgebraElement>(a: &T, b: &T) -> Result<T> {
    let left = a.try_mul(&b.reversed())?;
    let right = a.reversed().try_mul(b)?;
    Ok(left.try_add(&right)?.scale(0.5))
}

/// The theta bracket `{a, b}`: scalar part of `½(a·rev(b) + rev(a)·b)`,
/// returned as a multiple of the identity.
///
/// The unprojected product is not symmetric in general (for vectors
/// γ1, γ2 it gives γ1γ2 one way and γ2γ1 the other); its scalar part is.
/// [`symmetrized_product`] exposes the full element.
pub fn susy_bracket<T: AlgebraElement>(a: &T, b: &T) -> Result<T> {
    let full = symmetrized_product(a, b)?;
    Ok(full.unit().scale(full.scalar_part()))
}

/// Commutator `ab - ba`.
pub fn commutator<T: AlgebraElement>(a: &T, b: &T) -> Result<T> {
    a.try_mul(b)?.try_add(&b.try_mul(a)?.scale(-1.0))
}

/// Anticommutator `ab + ba`.
pub fn anticommutator<T: AlgebraElement>(a: &T, b: &T) -> Result<T> {
    a.try_mul(b)?.try_add(&b.try_mul(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Signature;
    use std::f64::consts::FRAC_PI_2;

    fn e(labels: &[u32]) -> Multivector {
        Multivector::product_of(Signature::cl30(), labels)
    }

    #[test]
    fn closed_forms() {
        let theta = 0.37;
        let got = exponential(&e(&[2, 3]).scale(theta), 1e-14).unwrap();
        let want = &e(&[]).scale(theta.cos()) + &e(&[2, 3]).scale(theta.sin());
        assert!(got.approx_eq(&want, 1e-15));

        let alpha = -1.1;
        let got = exponential(&e(&[1, 2, 3]).scale(alpha), 1e-14).unwrap();
        let want = &e(&[]).scale(alpha.cos()) + &e(&[1, 2, 3]).scale(alpha.sin());
        assert!(got.approx_eq(&want, 1e-15));

        let zero = Multivector::zero(Signature::cl30());
        assert_eq!(exponential(&zero, 1e-14).unwrap(), e(&[]));
    }

    #[test]
    fn hyperbolic_and_nilpotent_branches() {
        let x = exponential(&e(&[1]).scale(0.5), 1e-14).unwrap();
        assert!(x.approx_eq(&(&e(&[]).scale(0.5f64.cosh()) + &e(&[1]).scale(0.5f64.sinh())), 1e-15));
        // (e1 + e12)² = 1 - 1 + e1e12 + e12e1 = 0
        let n = &e(&[1]) + &e(&[1, 2]);
        assert!((&n * &n).is_zero());
        assert_eq!(exponential(&n, 1e-14).unwrap(), &e(&[]) + &n);
    }

    #[test]
    fn series_matches_closed_form_when_forced() {
        // a = θ e23 + φ e1 does not square to a scalar
        let a = &e(&[2, 3]).scale(0.7) + &e(&[1]).scale(0.3);
        assert!((&a * &a).as_scalar().is_none());
        let ex = exponential(&a, 1e-14).unwrap();
        // exp(a) exp(-a) = 1 since a commutes with itself
        let inv = exponential(&a.scale(-1.0), 1e-14).unwrap();
        assert!((&ex * &inv).approx_eq(&e(&[]), 1e-13));
    }

    #[test]
    fn x_gate_from_exponentials() {
        let ux1 = exponential(&e(&[1, 2, 3]).scale(-FRAC_PI_2), 1e-14).unwrap();
        let ux2 = exponential(&e(&[2, 3]).scale(FRAC_PI_2), 1e-14).unwrap();
        assert_eq!(&ux1 * &ux2, e(&[1]));
    }

    #[test]
    fn bracket_projection_is_symmetric_where_full_product_is_not() {
        let s = Signature::cl13();
        let g1 = Multivector::generator(s, 1);
        let g2 = Multivector::generator(s, 2);
        let ab = symmetrized_product(&g1, &g2).unwrap();
        let ba = symmetrized_product(&g2, &g1).unwrap();
        assert_eq!(ab, -&ba);
        assert_eq!(susy_bracket(&g1, &g2).unwrap(), susy_bracket(&g2, &g1).unwrap());
    }
}
