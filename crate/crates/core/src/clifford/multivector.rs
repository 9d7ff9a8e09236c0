use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Blade, Signature};
use crate::error::{Error, Result};

/// Coefficients with magnitude at or below this are dropped after arithmetic.
pub const PRUNE_EPS: f64 = 1e-14;

/// Sparse real multivector in a single Clifford algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<Blade, f64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: BTreeMap::new() }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        Self::from_terms(sig, [(Blade::SCALAR, value)])
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, 1.0)
    }

    pub fn from_blade(sig: Signature, blade: Blade, coeff: f64) -> Self {
        Self::from_terms(sig, [(blade, coeff)])
    }

    /// Builds a multivector from (blade, coefficient) pairs, summing repeats.
    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, f64)>) -> Self {
        let mut map = BTreeMap::new();
        for (b, c) in terms {
            debug_assert!(b.0 < (1 << sig.dim()));
            *map.entry(b).or_insert(0.0) += c;
        }
        let mut mv = Multivector { sig, terms: map };
        mv.prune();
        mv
    }

    /// Ordered product of generators given by their label digits, e.g.
    /// `product_of(cl13, &[3, 0])` is γ3γ0 (= -g03 canonically).
    ///
    /// Panics on a label the signature does not have.
    pub fn product_of(sig: Signature, labels: &[u32]) -> Self {
        let mut acc = Multivector::one(sig);
        for &l in labels {
            let pos = sig.position_of(l).unwrap_or_else(|| panic!("generator {}{l} not in {sig}", sig.prefix()));
            acc = &acc * &Multivector::from_blade(sig, Blade::generator(pos), 1.0);
        }
        acc
    }

    /// Generator with label digit `label`.
    pub fn generator(sig: Signature, label: u32) -> Self {
        Self::product_of(sig, &[label])
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> &BTreeMap<Blade, f64> {
        &self.terms
    }

    pub fn coeff(&self, blade: Blade) -> f64 {
        self.terms.get(&blade).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| c.abs() > PRUNE_EPS);
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch { left: self.sig, right: other.sig })
        }
    }

    /// Geometric product; fails if the signatures differ.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out: BTreeMap<Blade, f64> = BTreeMap::new();
        for (&a, &ca) in &self.terms {
            for (&b, &cb) in &other.terms {
                let (blade, sign) = a.product(b, &self.sig);
                *out.entry(blade).or_insert(0.0) += sign * ca * cb;
            }
        }
        let mut mv = Multivector { sig: self.sig, terms: out };
        mv.prune();
        Ok(mv)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_terms(self.sig, self.terms.iter().chain(&other.terms).map(|(b, c)| (*b, *c))))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_terms(self.sig, self.terms.iter().map(|(b, c)| (*b, c * s)))
    }

    /// Reversion: each grade-k part scaled by (-1)^(k(k-1)/2).
    pub fn reverse(&self) -> Self {
        Multivector { sig: self.sig, terms: self.terms.iter().map(|(b, c)| (*b, c * b.reverse_sign())).collect() }
    }

    /// Hermitian adjoint: every blade replaced by its inverse. Agrees with
    /// [`Multivector::reverse`] in Cl(3,0); in Cl(1,3) it is `γ0 x̃ γ0`, the
    /// reversion carried over from Cl(3,0) to the even subalgebra.
    pub fn adjoint(&self) -> Self {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().map(|(b, c)| (*b, c * b.adjoint_sign(&self.sig))).collect(),
        }
    }

    /// Grade-`k` part.
    pub fn grade_project(&self, k: u32) -> Self {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().filter(|(b, _)| b.grade() == k).map(|(b, c)| (*b, *c)).collect(),
        }
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeff(Blade::SCALAR)
    }

    /// `Some(c)` when the element equals `c·1`.
    pub fn as_scalar(&self) -> Option<f64> {
        match self.terms.len() {
            0 => Some(0.0),
            1 => self.terms.get(&Blade::SCALAR).copied(),
            _ => None,
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    /// Sum of absolute coefficients; submultiplicative under the product.
    pub fn norm1(&self) -> f64 {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Largest coefficient difference against `other` (same signature assumed).
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut m: f64 = 0.0;
        for (b, c) in &self.terms {
            m = m.max((c - other.coeff(*b)).abs());
        }
        for (b, c) in &other.terms {
            if !self.terms.contains_key(b) {
                m = m.max(c.abs());
            }
        }
        m
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.sig == other.sig && self.max_abs_diff(other) <= tol
    }
}

impl Mul for &Multivector {
    type Output = Multivector;

    /// Panics on signature mismatch; use [`Multivector::geometric_product`]
    /// for a checked product.
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("geometric product of mismatched signatures")
    }
}

impl Mul for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Add for &Multivector {
    type Output = Multivector;

    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("sum of mismatched signatures")
    }
}

impl Add for Multivector {
    type Output = Multivector;

    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        self + &rhs.scale(-1.0)
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(labels: &[u32]) -> Multivector {
        Multivector::product_of(Signature::cl30(), labels)
    }

    fn g(labels: &[u32]) -> Multivector {
        Multivector::product_of(Signature::cl13(), labels)
    }

    #[test]
    fn generator_squares() {
        assert_eq!(&e(&[1]) * &e(&[1]), Multivector::one(Signature::cl30()));
        assert_eq!(&g(&[1]) * &g(&[1]), Multivector::scalar(Signature::cl13(), -1.0));
        assert_eq!(&g(&[0]) * &g(&[0]), Multivector::one(Signature::cl13()));
    }

    #[test]
    fn distinct_generators_anticommute() {
        let e12 = Multivector::from_blade(Signature::cl30(), Blade(0b011), 1.0);
        assert_eq!(&e(&[1]) * &e(&[2]), e12);
        assert_eq!(&e(&[2]) * &e(&[1]), -&e12);
    }

    #[test]
    fn charge_conjugation_rewrite() {
        // (-ι)(γ1γ0) = γ2γ3 with ι = γ0γ1γ2γ3
        let iota = g(&[0, 1, 2, 3]);
        let lhs = &(-&iota) * &g(&[1, 0]);
        assert_eq!(lhs, g(&[2, 3]));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(e(&[1, 2]).reverse(), -e(&[1, 2]));
        assert_eq!(e(&[1]).reverse(), e(&[1]));
        assert_eq!(e(&[]).reverse(), e(&[]));
        assert_eq!(e(&[1, 2, 3]).reverse(), -e(&[1, 2, 3]));
    }

    #[test]
    fn adjoint_is_blade_inverse() {
        assert_eq!(e(&[1, 2]).adjoint(), e(&[1, 2]).reverse());
        assert_eq!(g(&[3, 0]).adjoint(), g(&[3, 0]));
        assert_eq!(g(&[1, 2]).adjoint(), -g(&[1, 2]));
        assert_eq!(g(&[0, 1, 2, 3]).adjoint(), -g(&[0, 1, 2, 3]));
        for m in 0..16 {
            let b = Multivector::from_blade(Signature::cl13(), Blade(m), 1.0);
            assert_eq!(&b * &b.adjoint(), Multivector::one(Signature::cl13()));
            assert_eq!(b.adjoint(), &(&g(&[0]) * &b.reverse()) * &g(&[0]));
        }
    }

    #[test]
    fn grade_projection() {
        let s = Signature::cl30();
        let x = &Multivector::one(s) + &e(&[1, 2]);
        assert_eq!(x.grade_project(2), e(&[1, 2]));
        assert_eq!(e(&[1, 2, 3]).grade_project(3), e(&[1, 2, 3]));
        assert!((&e(&[1]) + &e(&[2])).grade_project(0).is_zero());
    }

    #[test]
    fn mismatched_signatures_rejected() {
        let err = e(&[1]).geometric_product(&g(&[1])).unwrap_err();
        assert!(matches!(err, Error::SignatureMismatch { .. }));
    }

    #[test]
    fn product_of_normalizes_order() {
        // γ3γ0 = -g03
        let b = Multivector::from_blade(Signature::cl13(), Blade(0b1001), -1.0);
        assert_eq!(g(&[3, 0]), b);
    }

    #[test]
    fn tiny_coefficients_pruned() {
        let s = Signature::cl30();
        let x = Multivector::from_terms(s, [(Blade(1), 1e-15), (Blade(2), 1.0)]);
        assert_eq!(x.terms().len(), 1);
    }
}
