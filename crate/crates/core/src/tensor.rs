//! Tensor products of Clifford algebras.
//!
//! Products follow the plain algebra tensor product rule
//! `(x⊗y)(u⊗v) = xu ⊗ yv` with no sign between factors.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{self, AlgebraElement};
use crate::clifford::text::{blade_label, write_terms, Cursor};
use crate::clifford::{Blade, Multivector, Signature, PRUNE_EPS};
use crate::error::{Error, Result};
use crate::rank::real_rank;

/// One blade per tensor factor.
pub type BladeTuple = Vec<Blade>;

/// Sparse element of `A_1 ⊗ ... ⊗ A_n`.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorElement {
    factors: Vec<Signature>,
    terms: BTreeMap<BladeTuple, f64>,
}

impl TensorElement {
    pub fn zero(factors: Vec<Signature>) -> Self {
        TensorElement { factors, terms: BTreeMap::new() }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn identity(factors: Vec<Signature>) -> Self {
        let key = vec![Blade::SCALAR; factors.len()];
        Self::from_terms(factors, [(key, 1.0)])
    }

    pub fn from_terms(factors: Vec<Signature>, terms: impl IntoIterator<Item = (BladeTuple, f64)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            debug_assert_eq!(k.len(), factors.len());
            *map.entry(k).or_insert(0.0) += c;
        }
        let mut t = TensorElement { factors, terms: map };
        t.prune();
        t
    }

    /// Expands the pure tensor `parts[0] ⊗ parts[1] ⊗ ...`.
    ///
    /// Panics on an empty list.
    pub fn tensor_of(parts: &[Multivector]) -> Self {
        assert!(!parts.is_empty(), "tensor_of needs at least one factor");
        let factors: Vec<Signature> = parts.iter().map(Multivector::signature).collect();
        let mut terms: Vec<(BladeTuple, f64)> = vec![(Vec::new(), 1.0)];
        for part in parts {
            let mut next = Vec::with_capacity(terms.len() * part.terms().len());
            for (key, c) in &terms {
                for (b, cb) in part.terms() {
                    let mut k = key.clone();
                    k.push(*b);
                    next.push((k, c * cb));
                }
            }
            terms = next;
        }
        Self::from_terms(factors, terms)
    }

    /// `1 ⊗ .. ⊗ x ⊗ .. ⊗ 1` with `x` at `slot`, all factors in `x`'s signature.
    pub fn embed(x: &Multivector, slot: usize, n: usize) -> Self {
        let sig = x.signature();
        let parts: Vec<Multivector> =
            (0..n).map(|i| if i == slot { x.clone() } else { Multivector::one(sig) }).collect();
        Self::tensor_of(&parts)
    }

    pub fn factors(&self) -> &[Signature] {
        &self.factors
    }

    pub fn n_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn terms(&self) -> &BTreeMap<BladeTuple, f64> {
        &self.terms
    }

    pub fn coeff(&self, key: &[Blade]) -> f64 {
        self.terms.get(key).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| c.abs() > PRUNE_EPS);
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.factors == other.factors {
            Ok(())
        } else {
            Err(Error::FactorMismatch)
        }
    }

    /// Factor-wise product, no cross-factor sign.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out: BTreeMap<BladeTuple, f64> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut sign = ca * cb;
                let key: BladeTuple = ka
                    .iter()
                    .zip(kb)
                    .zip(&self.factors)
                    .map(|((a, b), sig)| {
                        let (blade, s) = a.product(*b, sig);
                        sign *= s;
                        blade
                    })
                    .collect();
                *out.entry(key).or_insert(0.0) += sign;
            }
        }
        let mut t = TensorElement { factors: self.factors.clone(), terms: out };
        t.prune();
        Ok(t)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_terms(self.factors.clone(), self.terms.iter().chain(&other.terms).map(|(k, c)| (k.clone(), *c))))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_terms(self.factors.clone(), self.terms.iter().map(|(k, c)| (k.clone(), c * s)))
    }

    /// Reversion applied independently in every factor.
    pub fn reverse_all(&self) -> Self {
        TensorElement {
            factors: self.factors.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * k.iter().map(|b| b.reverse_sign()).product::<f64>()))
                .collect(),
        }
    }

    /// Hermitian adjoint in every factor (blade inverse). Same as
    /// [`TensorElement::reverse_all`] over Cl(3,0) factors; over Cl(1,3)
    /// factors it is the reversion of the Pauli frame.
    pub fn adjoint_all(&self) -> Self {
        TensorElement {
            factors: self.factors.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    (k.clone(), c * k.iter().zip(&self.factors).map(|(b, s)| b.adjoint_sign(s)).product::<f64>())
                })
                .collect(),
        }
    }

    /// `adjoint_all(a) = -a`.
    pub fn is_anti_hermitian(&self) -> bool {
        self.adjoint_all() == self.scale(-1.0)
    }

    /// `adjoint_all(a) = a`.
    pub fn is_hermitian(&self) -> bool {
        self.adjoint_all() == *self
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeff(&vec![Blade::SCALAR; self.factors.len()])
    }

    pub fn as_scalar(&self) -> Option<f64> {
        match self.terms.len() {
            0 => Some(0.0),
            1 => {
                let (k, c) = self.terms.iter().next().unwrap();
                k.iter().all(|b| b.is_scalar()).then_some(*c)
            }
            _ => None,
        }
    }

    pub fn norm1(&self) -> f64 {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut m: f64 = 0.0;
        for (k, c) in &self.terms {
            m = m.max((c - other.coeff(k)).abs());
        }
        for (k, c) in &other.terms {
            if !self.terms.contains_key(k) {
                m = m.max(c.abs());
            }
        }
        m
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.factors == other.factors && self.max_abs_diff(other) <= tol
    }

    /// `exp(a)`; closed form when `a²` is a multiple of the identity tensor.
    pub fn exponential(&self, tol: f64) -> Result<Self> {
        algebra::exponential(self, tol)
    }

    /// Maps every factor through `f` (a linear map given on blades as a
    /// signed blade), producing an element over `new_factors`.
    pub(crate) fn map_blades(
        &self,
        new_factors: Vec<Signature>,
        mut f: impl FnMut(usize, Blade) -> Result<(Blade, f64)>,
    ) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            let mut sign = *c;
            let mut key = Vec::with_capacity(k.len());
            for (i, b) in k.iter().enumerate() {
                let (nb, s) = f(i, *b)?;
                sign *= s;
                key.push(nb);
            }
            terms.push((key, sign));
        }
        Ok(Self::from_terms(new_factors, terms))
    }
}

impl AlgebraElement for TensorElement {
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.multiply(rhs)
    }

    fn try_add(&self, rhs: &Self) -> Result<Self> {
        TensorElement::try_add(self, rhs)
    }

    fn scale(&self, s: f64) -> Self {
        TensorElement::scale(self, s)
    }

    fn unit(&self) -> Self {
        TensorElement::identity(self.factors.clone())
    }

    fn reversed(&self) -> Self {
        self.reverse_all()
    }

    fn adjoint(&self) -> Self {
        self.adjoint_all()
    }

    fn as_scalar(&self) -> Option<f64> {
        TensorElement::as_scalar(self)
    }

    fn scalar_part(&self) -> f64 {
        TensorElement::scalar_part(self)
    }

    fn norm1(&self) -> f64 {
        TensorElement::norm1(self)
    }
}

macro_rules! forward_ops {
    ($t:ty, $mul:ident, $add:ident) => {
        impl std::ops::Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                self.$mul(rhs).expect("product of elements from different algebras")
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl std::ops::Mul<f64> for &$t {
            type Output = $t;
            fn mul(self, rhs: f64) -> $t {
                self.scale(rhs)
            }
        }
        impl std::ops::Mul<f64> for $t {
            type Output = $t;
            fn mul(self, rhs: f64) -> $t {
                self.scale(rhs)
            }
        }
        impl std::ops::Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                self.$add(rhs).expect("sum of elements from different algebras")
            }
        }
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl std::ops::Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                self + &rhs.scale(-1.0)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale(-1.0)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale(-1.0)
            }
        }
    };
}

forward_ops!(TensorElement, multiply, try_add);

/// Dimension of the real span of `elems` (sparse Gaussian elimination,
/// pivot tolerance 1e-10). All elements must share one factor list.
pub fn rank_of_set(elems: &[TensorElement]) -> Result<usize> {
    if let Some(first) = elems.first() {
        if elems.iter().any(|e| e.factors != first.factors) {
            return Err(Error::FactorMismatch);
        }
    }
    Ok(real_rank(elems.iter().map(|e| e.terms.clone()), 1e-10))
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = &self.factors;
        write_terms(f, self.terms.iter().map(|(k, c)| (k, *c)), |k| {
            let parts: Vec<String> = k.iter().zip(factors).map(|(b, s)| blade_label(*b, s)).collect();
            Some(parts.join("⊗"))
        })
    }
}

fn eat_tensor_sign(cur: &mut Cursor<'_>) -> bool {
    cur.eat("⊗") || cur.eat("(x)")
}

fn factor_blade(cur: &mut Cursor<'_>, sig: &Signature) -> Result<Blade> {
    cur.skip_ws();
    if cur.peek() == Some('1') {
        cur.bump();
        if cur.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
            return Err(cur.error("scalar factor must be written as 1"));
        }
        return Ok(Blade::SCALAR);
    }
    if cur.peek() == Some(sig.prefix()) {
        return cur.blade(sig);
    }
    Err(cur.error(format!("expected '1' or a {sig} blade")))
}

impl TensorElement {
    /// Parses `e12⊗e1 + 1⊗e3` (ASCII `(x)` also accepted) over the given
    /// factor signatures.
    pub fn parse(factors: &[Signature], text: &str) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::OutOfRange { what: "factor count", value: 0 });
        }
        let mut cur = Cursor::new(text);
        let mut terms = Vec::new();
        cur.skip_ws();
        let mut sign = cur.sign().unwrap_or(1.0);
        loop {
            cur.skip_ws();
            let number_at = cur.pos();
            let number = cur.number()?;
            cur.skip_ws();
            let mut key = Vec::with_capacity(factors.len());
            let coeff;
            if eat_tensor_sign(&mut cur) {
                // the number was the leading "1" factor
                if number != Some(1.0) || &text[number_at..number_at + 1] != "1" {
                    return Err(Error::Parse { pos: number_at, msg: "scalar factor must be written as 1".into() });
                }
                coeff = 1.0;
                key.push(Blade::SCALAR);
            } else if cur.at_end() || matches!(cur.peek(), Some('+' | '-' | '\u{2212}')) {
                let c = number.ok_or_else(|| cur.error("expected a term"))?;
                terms.push((vec![Blade::SCALAR; factors.len()], sign * c));
                cur.skip_ws();
                if cur.at_end() {
                    break;
                }
                sign = cur.sign().unwrap();
                continue;
            } else {
                coeff = number.unwrap_or(1.0);
                key.push(factor_blade(&mut cur, &factors[0])?);
                cur.skip_ws();
                if key.len() < factors.len() && !eat_tensor_sign(&mut cur) {
                    return Err(cur.error(format!("expected {} tensor factors", factors.len())));
                }
            }
            while key.len() < factors.len() {
                key.push(factor_blade(&mut cur, &factors[key.len()])?);
                cur.skip_ws();
                if key.len() < factors.len() && !eat_tensor_sign(&mut cur) {
                    return Err(cur.error(format!("expected {} tensor factors", factors.len())));
                }
            }
            if eat_tensor_sign(&mut cur) {
                return Err(cur.error(format!("more than {} tensor factors", factors.len())));
            }
            terms.push((key, sign * coeff));
            cur.skip_ws();
            if cur.at_end() {
                break;
            }
            sign = cur.sign().ok_or_else(|| cur.error("expected '+' or '-' between terms"))?;
        }
        Ok(Self::from_terms(factors.to_vec(), terms))
    }

    /// Parses with every factor in `sig`; the factor count is taken from the
    /// first monomial.
    pub fn parse_uniform(sig: Signature, text: &str) -> Result<Self> {
        let first_term = text.split(['+', '-', '\u{2212}']).find(|t| !t.trim().is_empty()).unwrap_or("");
        let n = 1 + first_term.matches('⊗').count() + first_term.matches("(x)").count();
        Self::parse(&vec![sig; n], text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(labels: &[u32]) -> Multivector {
        Multivector::product_of(Signature::cl30(), labels)
    }

    fn t(parts: &[&[u32]]) -> TensorElement {
        let mvs: Vec<Multivector> = parts.iter().map(|l| e(l)).collect();
        TensorElement::tensor_of(&mvs)
    }

    #[test]
    fn tensor_of_expands_multilinearly() {
        let x = TensorElement::tensor_of(&[&e(&[3]) + &e(&[1]), e(&[])]);
        assert_eq!(x, &t(&[&[3], &[]]) + &t(&[&[1], &[]]));
        assert_eq!(x.terms().len(), 2);
    }

    #[test]
    fn product_has_no_cross_factor_sign() {
        // (e123 ⊗ 1)(e23 ⊗ 1) = -e1 ⊗ 1
        assert_eq!(&t(&[&[1, 2, 3], &[]]) * &t(&[&[2, 3], &[]]), -&t(&[&[1], &[]]));
        // (e1⊗e2)(e2⊗e1) = e1e2 ⊗ e2e1
        assert_eq!(&t(&[&[1], &[2]]) * &t(&[&[2], &[1]]), TensorElement::tensor_of(&[e(&[1, 2]), e(&[2, 1])]));
    }

    #[test]
    fn identity_is_neutral() {
        let x = &t(&[&[1, 2], &[3]]) + &t(&[&[2], &[]]).scale(0.25);
        let one = TensorElement::identity(vec![Signature::cl30(); 2]);
        assert_eq!(&one * &x, x);
        assert_eq!(&x * &one, x);
    }

    #[test]
    fn reverse_all_examples() {
        assert_eq!(t(&[&[1, 2], &[1]]).reverse_all(), -t(&[&[1, 2], &[1]]));
        assert_eq!(t(&[&[1, 2], &[1, 2]]).reverse_all(), t(&[&[1, 2], &[1, 2]]));
        assert_eq!(t(&[&[], &[]]).reverse_all(), t(&[&[], &[]]));
    }

    #[test]
    fn factor_mismatch_rejected() {
        let a = t(&[&[1]]);
        let b = t(&[&[1], &[2]]);
        assert_eq!(a.multiply(&b).unwrap_err(), Error::FactorMismatch);
    }

    #[test]
    fn rank_examples() {
        let set = vec![t(&[&[1, 2], &[]]), t(&[&[], &[1, 2]]), t(&[&[1, 2], &[]])];
        assert_eq!(rank_of_set(&set).unwrap(), 2);
        let combo = &set[0] + &set[1];
        assert_eq!(rank_of_set(&[set[0].clone(), set[1].clone(), combo]).unwrap(), 2);
    }

    #[test]
    fn text_round_trip() {
        let x = TensorElement::parse_uniform(Signature::cl30(), "e12⊗e1 + 1⊗e3").unwrap();
        assert_eq!(x, &t(&[&[1, 2], &[1]]) + &t(&[&[], &[3]]));
        let ascii = TensorElement::parse_uniform(Signature::cl30(), "e12(x)e1 + 1(x)e3").unwrap();
        assert_eq!(ascii, x);
        let text = x.to_string();
        assert_eq!(TensorElement::parse_uniform(Signature::cl30(), &text).unwrap(), x);

        let cnot =
            TensorElement::parse_uniform(Signature::cl30(), "0.5 1⊗1 + 0.5 1⊗e1 + 0.5 e3⊗1 - 0.5 e3⊗e1").unwrap();
        assert_eq!(cnot.to_string(), "0.5 1⊗1 + 0.5 1⊗e1 + 0.5 e3⊗1 - 0.5 e3⊗e1");
    }

    #[test]
    fn text_errors() {
        let s = [Signature::cl30(); 2];
        assert!(TensorElement::parse(&s, "e1⊗e2⊗e3").is_err());
        assert!(TensorElement::parse(&s, "e1").is_err());
        assert!(TensorElement::parse(&s, "2⊗e1").is_err());
        assert!(TensorElement::parse(&s, "e1⊗e21").is_err());
    }
}
