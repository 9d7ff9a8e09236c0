//! The isomorphism Cl(3,0) ≅ Cl(1,3)+ and the chirality, parity,
//! charge-conjugation and time-reversal operators on two Cl(1,3)+ factors.

use std::ops::Deref;
use std::sync::OnceLock;

use crate::algebra::AlgebraElement;
use crate::clifford::{Blade, Multivector, Signature};
use crate::error::{Error, Result};
use crate::tensor::TensorElement;

/// A Cl(1,3) multivector with only even-grade terms.
#[derive(Clone, PartialEq, Debug)]
pub struct EvenElement(Multivector);

impl EvenElement {
    pub fn new(mv: Multivector) -> Result<Self> {
        if mv.signature() != Signature::cl13() {
            return Err(Error::UnsupportedSignature(mv.signature()));
        }
        if !mv.is_even() {
            return Err(Error::OddGrade);
        }
        Ok(EvenElement(mv))
    }

    pub fn into_inner(self) -> Multivector {
        self.0
    }
}

impl Deref for EvenElement {
    type Target = Multivector;

    fn deref(&self) -> &Multivector {
        &self.0
    }
}

/// `(ζ(blade) for each Cl(3,0) blade mask)`: ζ(σk) = γkγ0 extended
/// multiplicatively. Every blade lands on ± one even blade.
fn zeta_table() -> &'static [(Blade, f64); 8] {
    static TABLE: OnceLock<[(Blade, f64); 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let g = |labels: &[u32]| Multivector::product_of(Signature::cl13(), labels);
        let images = [g(&[1, 0]), g(&[2, 0]), g(&[3, 0])];
        let mut table = [(Blade::SCALAR, 1.0); 8];
        for (mask, slot) in table.iter_mut().enumerate() {
            let mut acc = Multivector::one(Signature::cl13());
            for (k, img) in images.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    acc = &acc * img;
                }
            }
            let (b, c) = acc.terms().iter().next().expect("nonzero image");
            *slot = (*b, *c);
        }
        table
    })
}

pub fn iso_zeta_blade(blade: Blade) -> (Blade, f64) {
    zeta_table()[blade.mask() as usize]
}

/// ζ⁻¹ on a single even Cl(1,3) blade.
pub fn iso_zeta_inv_blade(blade: Blade) -> Result<(Blade, f64)> {
    if blade.grade() % 2 == 1 {
        return Err(Error::OddGrade);
    }
    zeta_table()
        .iter()
        .enumerate()
        .find(|(_, (b, _))| *b == blade)
        .map(|(mask, (_, s))| (Blade(mask as u32), *s))
        .ok_or(Error::OddGrade)
}

/// ζ: Cl(3,0) → Cl(1,3)+.
pub fn iso_zeta(a: &Multivector) -> Result<EvenElement> {
    if a.signature() != Signature::cl30() {
        return Err(Error::UnsupportedSignature(a.signature()));
    }
    let terms = a.terms().iter().map(|(b, c)| {
        let (img, s) = iso_zeta_blade(*b);
        (img, s * c)
    });
    Ok(EvenElement(Multivector::from_terms(Signature::cl13(), terms)))
}

/// ζ⁻¹: Cl(1,3)+ → Cl(3,0); odd-grade input is rejected.
pub fn iso_zeta_inv(a: &Multivector) -> Result<Multivector> {
    if a.signature() != Signature::cl13() {
        return Err(Error::UnsupportedSignature(a.signature()));
    }
    let mut terms = Vec::with_capacity(a.terms().len());
    for (b, c) in a.terms() {
        let (pre, s) = iso_zeta_inv_blade(*b)?;
        terms.push((pre, s * c));
    }
    Ok(Multivector::from_terms(Signature::cl30(), terms))
}

/// ζ applied in every factor of a [Cl(3,0)]^{⊗n} element.
pub fn iso_zeta_tensor(a: &TensorElement) -> Result<TensorElement> {
    if let Some(s) = a.factors().iter().find(|s| **s != Signature::cl30()) {
        return Err(Error::UnsupportedSignature(*s));
    }
    a.map_blades(vec![Signature::cl13(); a.n_factors()], |_, b| Ok(iso_zeta_blade(b)))
}

/// ζ⁻¹ applied in every factor of a [Cl(1,3)+]^{⊗n} element.
pub fn iso_zeta_inv_tensor(a: &TensorElement) -> Result<TensorElement> {
    if let Some(s) = a.factors().iter().find(|s| **s != Signature::cl13()) {
        return Err(Error::UnsupportedSignature(*s));
    }
    a.map_blades(vec![Signature::cl30(); a.n_factors()], |_, b| iso_zeta_inv_blade(b))
}

pub(crate) fn g(labels: &[u32]) -> Multivector {
    Multivector::product_of(Signature::cl13(), labels)
}

/// ι = γ0γ1γ2γ3.
pub fn iota() -> Multivector {
    g(&[0, 1, 2, 3])
}

fn pair(a: Multivector, b: Multivector) -> TensorElement {
    TensorElement::tensor_of(&[a, b])
}

fn one() -> Multivector {
    Multivector::one(Signature::cl13())
}

/// Γ5 = γ3γ0 ⊗ 1.
pub fn chirality_op() -> TensorElement {
    pair(g(&[3, 0]), one())
}

/// `(P_R, P_L) = ½(1⊗1 ± Γ5)`.
pub fn chiral_projectors() -> (TensorElement, TensorElement) {
    let id = pair(one(), one());
    let g5 = chirality_op();
    ((&id + &g5).scale(0.5), (&id - &g5).scale(0.5))
}

/// Φ_P = [1 ⊗ (cos φ + ι sin φ)] [γ3γ0 ⊗ 1].
pub fn parity_op(phi: f64) -> TensorElement {
    let phase = &one().scale(phi.cos()) + &iota().scale(phi.sin());
    &pair(one(), phase) * &chirality_op()
}

/// C = (-ι ⊗ 1)(γ1γ0 ⊗ γ2γ0) = γ3γ0γ2γ0 ⊗ γ2γ0.
pub fn charge_conjugation_op() -> TensorElement {
    &pair(-iota(), one()) * &pair(g(&[1, 0]), g(&[2, 0]))
}

/// T = 1 ⊗ γ2γ0.
pub fn time_reversal_op() -> TensorElement {
    pair(one(), g(&[2, 0]))
}

/// `s` with `x · x† = s · 1`, if the product is a scalar.
pub fn unitary_sign<T: AlgebraElement>(x: &T) -> Result<Option<f64>> {
    Ok(x.try_mul(&x.adjoint())?.as_scalar())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(labels: &[u32]) -> Multivector {
        Multivector::product_of(Signature::cl30(), labels)
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(*iso_zeta(&e(&[3])).unwrap(), g(&[3, 0]));
        assert_eq!(*iso_zeta(&e(&[1, 2])).unwrap(), -g(&[1, 2]));
        assert_eq!(*iso_zeta(&e(&[1, 2, 3])).unwrap(), iota());
        let eps = (&e(&[]) + &e(&[3])).scale(0.5);
        let p = (&one() + &g(&[3, 0])).scale(0.5);
        assert_eq!(*iso_zeta(&eps).unwrap(), p);
    }

    #[test]
    fn zeta_is_a_bijective_homomorphism_on_blades() {
        let mut seen = std::collections::BTreeSet::new();
        for a in 0..8 {
            let ea = Multivector::from_blade(Signature::cl30(), Blade(a), 1.0);
            seen.insert(iso_zeta_blade(Blade(a)).0);
            assert_eq!(iso_zeta_inv(&iso_zeta(&ea).unwrap()).unwrap(), ea);
            for b in 0..8 {
                let eb = Multivector::from_blade(Signature::cl30(), Blade(b), 1.0);
                let lhs = iso_zeta(&(&ea * &eb)).unwrap().into_inner();
                let rhs = &*iso_zeta(&ea).unwrap() * &*iso_zeta(&eb).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn odd_input_rejected() {
        assert_eq!(iso_zeta_inv(&g(&[1])).unwrap_err(), Error::OddGrade);
        assert_eq!(EvenElement::new(g(&[0])).unwrap_err(), Error::OddGrade);
    }

    #[test]
    fn operator_reversion_signs() {
        assert_eq!(chirality_op().adjoint_all(), chirality_op());
        assert_eq!(charge_conjugation_op().adjoint_all(), -charge_conjugation_op());
        assert_eq!(time_reversal_op().adjoint_all(), time_reversal_op());
        // plain grade reversion would flip Γ5
        assert_eq!(chirality_op().reverse_all(), -chirality_op());
        assert_eq!(charge_conjugation_op(), pair(&g(&[3, 0]) * &g(&[2, 0]), g(&[2, 0])));
        assert_eq!(unitary_sign(&charge_conjugation_op()).unwrap(), Some(1.0));
        assert_eq!(unitary_sign(&time_reversal_op()).unwrap(), Some(1.0));
    }

    #[test]
    fn parity_tilde_formula() {
        let phi: f64 = 0.83;
        let want = &pair(one(), &one().scale(phi.cos()) - &iota().scale(phi.sin())) * &chirality_op();
        assert!(parity_op(phi).adjoint_all().approx_eq(&want, 1e-15));
        assert!(unitary_sign(&parity_op(phi)).unwrap().is_some_and(|s| (s - 1.0).abs() < 1e-15));
    }

    #[test]
    fn projectors() {
        let (r, l) = chiral_projectors();
        let id = pair(one(), one());
        assert_eq!(&r + &l, id);
        assert_eq!(&r * &r, r);
        assert!((&r * &l).is_zero());
    }
}
