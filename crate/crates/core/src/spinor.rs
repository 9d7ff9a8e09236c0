//! Qubits as algebraic spinors: elements of the minimal left ideals
//! `[Cl(3,0)]^{⊗n} ε^{⊗n}` and `[Cl(1,3)+]^{⊗n} P^{⊗n}`.
//!
//! A single qubit `(a1 + i a2)|0⟩ + (a3 + i a4)|1⟩` corresponds to
//! `(a1 σ3 + a2 σ1σ2 + a3 σ1 + a4 σ2σ3) ε`.

use std::fmt;

use crate::clifford::{Blade, Multivector, Signature};
use crate::error::{Error, Result};
use crate::matrix::{rep_tensor, C64};
use crate::relativistic::{iso_zeta, iso_zeta_inv_blade, iso_zeta_tensor};
use crate::tensor::TensorElement;

/// Ideal-membership tolerance.
pub const IDEAL_TOL: f64 = 1e-12;

/// Dense amplitude vector of `n` qubits, first qubit most significant.
#[derive(Clone, PartialEq, Debug)]
pub struct QubitState {
    n: usize,
    amps: Vec<C64>,
}

impl QubitState {
    /// Fails unless the length is `2^n` with `n ≥ 1`.
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::OutOfRange { what: "amplitude count", value: len as i64 });
        }
        Ok(QubitState { n: len.trailing_zeros() as usize, amps })
    }

    /// `|k⟩` on `n` qubits.
    pub fn basis(n: usize, k: usize) -> Self {
        let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
        amps[k] = C64::new(1.0, 0.0);
        QubitState { n, amps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm() - 1.0).abs() < 1e-12
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroState);
        }
        Ok(QubitState { n: self.n, amps: self.amps.iter().map(|a| a / n).collect() })
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        self.amps.iter().zip(&other.amps).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Parses `re,im;re,im;...`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut amps = Vec::new();
        let mut offset = 0;
        for chunk in text.split(';') {
            let pos = offset + chunk.len() - chunk.trim_start().len();
            let bad = |msg: &str| Error::Parse { pos, msg: msg.to_string() };
            let (re, im) = chunk.split_once(',').ok_or_else(|| bad("expected 're,im'"))?;
            let re: f64 = re.trim().replace('\u{2212}', "-").parse().map_err(|_| bad("bad real part"))?;
            let im: f64 = im.trim().replace('\u{2212}', "-").parse().map_err(|_| bad("bad imaginary part"))?;
            amps.push(C64::new(re, im));
            offset += chunk.len() + 1;
        }
        Self::new(amps)
    }
}

fn fmt_real(x: f64) -> String {
    // no "-0"
    if x == 0.0 {
        "0".into()
    } else {
        x.to_string()
    }
}

impl fmt::Display for QubitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.amps.iter().map(|a| format!("{},{}", fmt_real(a.re), fmt_real(a.im))).collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// ε = ½(1 + e3) in Cl(3,0); P = ½(1 + γ3γ0) in Cl(1,3).
pub fn primitive_idempotent(sig: Signature) -> Result<Multivector> {
    let unit = Multivector::one(sig);
    let axis = if sig == Signature::cl30() {
        Multivector::generator(sig, 3)
    } else if sig == Signature::cl13() {
        Multivector::product_of(sig, &[3, 0])
    } else {
        return Err(Error::UnsupportedSignature(sig));
    };
    Ok((&unit + &axis).scale(0.5))
}

/// `idem ⊗ ... ⊗ idem` (n factors).
pub fn idempotent_tensor(sig: Signature, n: usize) -> Result<TensorElement> {
    let idem = primitive_idempotent(sig)?;
    Ok(TensorElement::tensor_of(&vec![idem; n]))
}

/// Real basis of the single-factor ideal, ordered as |0⟩, i|0⟩, |1⟩, i|1⟩:
/// `σ3ε, σ1σ2ε, σ1ε, σ2σ3ε` or `γ3γ0P, ιγ3γ0P, γ1γ0P, ιγ1γ0P`.
pub fn ideal_basis(sig: Signature) -> Result<Vec<Multivector>> {
    let s = Signature::cl30();
    let reps = [
        Multivector::product_of(s, &[3]),
        Multivector::product_of(s, &[1, 2]),
        Multivector::product_of(s, &[1]),
        Multivector::product_of(s, &[2, 3]),
    ];
    let eps = primitive_idempotent(s)?;
    let base: Vec<Multivector> = reps.iter().map(|r| r * &eps).collect();
    if sig == s {
        Ok(base)
    } else if sig == Signature::cl13() {
        base.iter().map(|b| iso_zeta(b).map(|e| e.into_inner())).collect()
    } else {
        Err(Error::UnsupportedSignature(sig))
    }
}

/// An element of the minimal left ideal, kept both as the representative
/// it was built from and as the absorbed product `representative · idem^{⊗n}`.
/// Equality compares the absorbed bodies, so `γ3γ0 P` and `P` are equal.
#[derive(Clone, Debug)]
pub struct IdealElement {
    representative: TensorElement,
    body: TensorElement,
}

fn ideal_signature(t: &TensorElement) -> Result<Signature> {
    let sig = *t.factors().first().ok_or(Error::OutOfRange { what: "factor count", value: 0 })?;
    if sig != Signature::cl30() && sig != Signature::cl13() {
        return Err(Error::UnsupportedSignature(sig));
    }
    if t.factors().iter().any(|s| *s != sig) {
        return Err(Error::FactorMismatch);
    }
    Ok(sig)
}

impl IdealElement {
    /// `x · idem^{⊗n}`.
    pub fn from_representative(x: TensorElement) -> Result<Self> {
        let sig = ideal_signature(&x)?;
        let body = x.multiply(&idempotent_tensor(sig, x.n_factors())?)?;
        Ok(IdealElement { representative: x, body })
    }

    /// Accepts `x` only if it is already absorbed: `x · idem^{⊗n} = x`.
    pub fn from_body(x: TensorElement) -> Result<Self> {
        let sig = ideal_signature(&x)?;
        let absorbed = x.multiply(&idempotent_tensor(sig, x.n_factors())?)?;
        let residual = absorbed.max_abs_diff(&x);
        if residual > IDEAL_TOL {
            return Err(Error::NotInIdeal { residual });
        }
        Ok(IdealElement { representative: x.clone(), body: x })
    }

    pub fn body(&self) -> &TensorElement {
        &self.body
    }

    pub fn representative(&self) -> &TensorElement {
        &self.representative
    }

    pub fn signature(&self) -> Signature {
        self.body.factors()[0]
    }

    pub fn n(&self) -> usize {
        self.body.n_factors()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.body.approx_eq(&other.body, tol)
    }

    pub fn scale(&self, s: f64) -> Self {
        IdealElement { representative: self.representative.scale(s), body: self.body.scale(s) }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(IdealElement {
            representative: self.representative.try_add(&other.representative)?,
            body: self.body.try_add(&other.body)?,
        })
    }

    fn marker(&self) -> &'static str {
        if self.signature() == Signature::cl30() {
            "ε"
        } else {
            "P"
        }
    }

    /// Parses `X ε⊗ε` / `X P⊗P` (representative, absorbed on the right;
    /// `eps` is accepted for ε) or a bare body that must already lie in
    /// the ideal.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_end();
        let (head, last) = match trimmed.rfind(char::is_whitespace) {
            Some(i) => (&trimmed[..i], trimmed[i..].trim()),
            None => ("", trimmed),
        };
        let marks: Vec<&str> = last.split('⊗').flat_map(|p| p.split("(x)")).collect();
        let is_marker = |m: &str| matches!(m, "ε" | "eps" | "P");
        if !head.trim().is_empty() && marks.iter().all(|m| is_marker(m)) {
            let eps = marks.iter().all(|m| *m != "P");
            if !eps && marks.iter().any(|m| *m != "P") {
                return Err(Error::Parse { pos: head.len(), msg: "mixed idempotent markers".into() });
            }
            let sig = if eps { Signature::cl30() } else { Signature::cl13() };
            let mut inner = head.trim();
            if inner.starts_with('(') && inner.ends_with(')') {
                inner = &inner[1..inner.len() - 1];
            }
            let offset = text.find(inner).unwrap_or(0);
            let rep = TensorElement::parse(&vec![sig; marks.len()], inner).map_err(|e| shift(e, offset))?;
            Self::from_representative(rep)
        } else {
            let sig = if text.contains('g') { Signature::cl13() } else { Signature::cl30() };
            Self::from_body(TensorElement::parse_uniform(sig, text)?)
        }
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

impl PartialEq for IdealElement {
    fn eq(&self, other: &Self) -> bool {
        self.body == other.body
    }
}

impl fmt::Display for IdealElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let markers = vec![self.marker(); self.n()].join("⊗");
        if self.representative.terms().len() > 1 {
            write!(f, "({}) {markers}", self.representative)
        } else {
            write!(f, "{} {markers}", self.representative)
        }
    }
}

/// Canonical section of [`decode`]: real parts on σ3 (bit 0) / σ1 (bit 1)
/// in every factor, imaginary parts on the same pattern except the last
/// factor, which carries σ1σ2 (bit 0) / σ2σ3 (bit 1).
pub fn encode(state: &QubitState) -> IdealElement {
    let n = state.n();
    let s = Signature::cl30();
    let (e1, e3, e12, e23) = (Blade(0b001), Blade(0b100), Blade(0b011), Blade(0b110));
    let mut terms = Vec::new();
    for (k, a) in state.amplitudes().iter().enumerate() {
        let bit = |slot: usize| (k >> (n - 1 - slot)) & 1 == 1;
        let real: Vec<Blade> = (0..n).map(|i| if bit(i) { e1 } else { e3 }).collect();
        let mut imag = real.clone();
        imag[n - 1] = if bit(n - 1) { e23 } else { e12 };
        terms.push((real, a.re));
        terms.push((imag, a.im));
    }
    IdealElement::from_representative(TensorElement::from_terms(vec![s; n], terms)).expect("Cl(3,0) factors")
}

/// [`encode`] followed by ζ in every factor when `sig` is Cl(1,3).
pub fn encode_in(sig: Signature, state: &QubitState) -> Result<IdealElement> {
    let x = encode(state);
    if sig == Signature::cl30() {
        Ok(x)
    } else if sig == Signature::cl13() {
        IdealElement::from_representative(iso_zeta_tensor(x.representative())?)
    } else {
        Err(Error::UnsupportedSignature(sig))
    }
}

/// First column of the Pauli image of a Cl(3,0) blade:
/// `i^{[σ2 present]} |[σ1 present] xor [σ2 present]⟩`.
fn blade_column(b: Blade) -> (usize, C64) {
    let has1 = b.mask() & 1 != 0;
    let has2 = b.mask() & 2 != 0;
    let phase = if has2 { C64::new(0.0, 1.0) } else { C64::new(1.0, 0.0) };
    ((has1 ^ has2) as usize, phase)
}

/// Qubit amplitudes of an ideal element. Real-linear; on pure tensors it is
/// the Kronecker product of single-factor decodes. Not injective for
/// `n ≥ 2`: `ι⊗1` and `1⊗ι` both decode to a factor `i`.
pub fn decode(x: &IdealElement) -> Result<QubitState> {
    let n = x.n();
    let cl13 = x.signature() == Signature::cl13();
    let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
    for (key, c) in x.body().terms() {
        let mut index = 0;
        let mut value = C64::new(*c, 0.0);
        for b in key {
            let b = if cl13 {
                let (pre, s) = iso_zeta_inv_blade(*b)?;
                value *= s;
                pre
            } else {
                *b
            };
            let (bit, phase) = blade_column(b);
            index = (index << 1) | bit;
            value *= phase;
        }
        amps[index] += value;
    }
    QubitState::new(amps)
}

/// Independent decode: first column of the Kronecker image of the body.
pub fn decode_via_rep(x: &IdealElement) -> Result<QubitState> {
    QubitState::new(rep_tensor(x.body())?.column(0))
}

/// Left multiplication `u · x`.
pub fn apply_gate(u: &TensorElement, x: &IdealElement) -> Result<IdealElement> {
    Ok(IdealElement { representative: u.multiply(&x.representative)?, body: u.multiply(&x.body)? })
}

/// Two-qubit product-state test: `|a00 a11 - a01 a10| < tol ‖ψ‖²`.
pub fn is_separable_bipartite(x: &IdealElement, tol: f64) -> Result<bool> {
    if x.n() != 2 {
        return Err(Error::OutOfRange { what: "qubit count for bipartite test", value: x.n() as i64 });
    }
    let psi = decode(x)?;
    let norm2 = psi.norm().powi(2);
    if norm2 == 0.0 {
        return Err(Error::ZeroState);
    }
    Ok(bipartite_det(&psi).norm() < tol * norm2)
}

/// `a00 a11 - a01 a10` of a two-qubit state.
pub fn bipartite_det(psi: &QubitState) -> C64 {
    let a = psi.amplitudes();
    a[0] * a[3] - a[1] * a[2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::real_rank;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn e(labels: &[u32]) -> Multivector {
        Multivector::product_of(Signature::cl30(), labels)
    }

    #[test]
    fn idempotents() {
        for sig in [Signature::cl30(), Signature::cl13()] {
            let x = primitive_idempotent(sig).unwrap();
            assert_eq!(&x * &x, x);
        }
        assert_eq!(primitive_idempotent(Signature::cl13()).unwrap().to_string(), "0.5 - 0.5 g03");
        let eps = primitive_idempotent(Signature::cl30()).unwrap();
        assert_ne!(&eps * &(&e(&[]) - &e(&[3])), eps);
        assert!(primitive_idempotent(Signature::new(2, 0).unwrap()).is_err());
    }

    #[test]
    fn ideal_has_real_dimension_four() {
        let s = Signature::cl30();
        let eps = primitive_idempotent(s).unwrap();
        let multiples = (0..8).map(|m| (&Multivector::from_blade(s, Blade(m), 1.0) * &eps).terms().clone());
        assert_eq!(real_rank(multiples, 1e-10), 4);
        for sig in [Signature::cl30(), Signature::cl13()] {
            let basis = ideal_basis(sig).unwrap();
            assert_eq!(real_rank(basis.iter().map(|b| b.terms().clone()), 1e-10), 4);
            let idem = primitive_idempotent(sig).unwrap();
            assert!(basis.iter().all(|b| &(b * &idem) == b));
        }
    }

    #[test]
    fn single_qubit_correspondence() {
        let zero = encode(&QubitState::basis(1, 0));
        assert_eq!(zero.representative(), &TensorElement::tensor_of(&[e(&[3])]));
        let i_one = encode(&QubitState::new(vec![c(0.0, 0.0), c(0.0, 1.0)]).unwrap());
        assert_eq!(i_one.representative(), &TensorElement::tensor_of(&[e(&[2, 3])]));
        let x = IdealElement::from_representative(TensorElement::tensor_of(&[e(&[1, 2])])).unwrap();
        assert_eq!(decode(&x).unwrap().amplitudes(), &[c(0.0, 1.0), c(0.0, 0.0)]);
    }

    #[test]
    fn bipartite_examples() {
        let x = encode(&QubitState::basis(2, 3));
        assert_eq!(x.representative(), &TensorElement::tensor_of(&[e(&[1]), e(&[1])]));
        let y = IdealElement::from_representative(TensorElement::tensor_of(&[e(&[1, 2]), e(&[1, 2])])).unwrap();
        let want = QubitState::new(vec![c(-1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(decode(&y).unwrap(), want);
        assert_eq!(decode_via_rep(&y).unwrap(), want);
    }

    #[test]
    fn non_ideal_body_rejected() {
        let raw = TensorElement::tensor_of(&[e(&[2]), e(&[2])]);
        assert!(matches!(IdealElement::from_body(raw), Err(Error::NotInIdeal { .. })));
    }

    #[test]
    fn gamma_absorption_normal_form() {
        let s = Signature::cl13();
        let p = IdealElement::from_representative(TensorElement::tensor_of(&[Multivector::one(s)])).unwrap();
        let q = IdealElement::from_representative(TensorElement::tensor_of(&[Multivector::product_of(s, &[3, 0])]))
            .unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn state_text() {
        let s = QubitState::parse("1,0; 0,-0.5").unwrap();
        assert_eq!(s.amplitudes(), &[c(1.0, 0.0), c(0.0, -0.5)]);
        assert_eq!(s.to_string(), "1,0;0,-0.5");
        assert!(QubitState::parse("1,0;0,0;1,0").is_err());
        assert!(matches!(QubitState::parse("1,0;x,0"), Err(Error::Parse { pos: 4, .. })));
    }

    #[test]
    fn ideal_text() {
        let x = encode(&QubitState::basis(1, 0));
        assert_eq!(x.to_string(), "e3 ε");
        assert_eq!(IdealElement::parse("e3 ε").unwrap(), x);
        assert_eq!(IdealElement::parse("e3 eps").unwrap(), x);
        let two = encode(&QubitState::basis(2, 3));
        assert_eq!(IdealElement::parse(&two.to_string()).unwrap(), two);
        assert!(matches!(IdealElement::parse("e2⊗e2"), Err(Error::NotInIdeal { .. })));
        let p = IdealElement::parse("g03 P").unwrap();
        assert_eq!(p.signature(), Signature::cl13());
    }

    #[test]
    fn separability() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bell = QubitState::new(vec![c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)]).unwrap();
        assert!(!is_separable_bipartite(&encode(&bell), 1e-10).unwrap());
        assert!(is_separable_bipartite(&encode(&QubitState::basis(2, 1)), 1e-10).unwrap());
        assert!(is_separable_bipartite(&encode(&QubitState::basis(1, 1)), 1e-10).is_err());
    }
}
