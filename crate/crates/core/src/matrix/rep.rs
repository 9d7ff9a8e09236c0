use super::{ComplexMatrix, C64};
use crate::clifford::{Blade, Multivector, Signature};
use crate::error::{Error, Result};
use crate::relativistic::iso_zeta_inv_blade;
use crate::tensor::TensorElement;

/// 2×2 image of a Cl(3,0) element:
///
/// ```text
/// [(a0+a3) + i(a12+a123)   (a1+a31) + i(a23-a2)]
/// [(a1-a31) + i(a23+a2)    (a0-a3) + i(a123-a12)]
/// ```
///
/// so σk maps to the Pauli matrices and σ1σ2σ3 to `i`.
pub fn rep_cl30(a: &Multivector) -> Result<ComplexMatrix> {
    let sig = a.signature();
    if sig != Signature::cl30() {
        return Err(Error::UnsupportedSignature(sig));
    }
    let c = |mask: u32| a.coeff(Blade(mask));
    let (a0, a1, a2, a3) = (c(0), c(0b001), c(0b010), c(0b100));
    let (a12, a23, a31, a123) = (c(0b011), c(0b110), -c(0b101), c(0b111));
    Ok(ComplexMatrix::from_rows(vec![
        vec![C64::new(a0 + a3, a12 + a123), C64::new(a1 + a31, a23 - a2)],
        vec![C64::new(a1 - a31, a23 + a2), C64::new(a0 - a3, a123 - a12)],
    ]))
}

/// Image of a single Cl(3,0) blade.
pub fn blade_rep_cl30(blade: Blade) -> ComplexMatrix {
    rep_cl30(&Multivector::from_blade(Signature::cl30(), blade, 1.0)).expect("Cl(3,0) blade")
}

fn factor_rep(sig: Signature, blade: Blade) -> Result<(ComplexMatrix, f64)> {
    if sig == Signature::cl30() {
        Ok((blade_rep_cl30(blade), 1.0))
    } else if sig == Signature::cl13() {
        let (b, s) = iso_zeta_inv_blade(blade)?;
        Ok((blade_rep_cl30(b), s))
    } else {
        Err(Error::UnsupportedSignature(sig))
    }
}

/// Kronecker image of a tensor element whose factors are Cl(3,0) or even
/// Cl(1,3) (pulled back through ζ⁻¹).
pub fn rep_tensor(a: &TensorElement) -> Result<ComplexMatrix> {
    let dim = 1usize << a.n_factors();
    let mut out = ComplexMatrix::zeros(dim, dim);
    for (key, coeff) in a.terms() {
        let mut m = ComplexMatrix::identity(1);
        let mut sign = *coeff;
        for (blade, sig) in key.iter().zip(a.factors()) {
            let (f, s) = factor_rep(*sig, *blade)?;
            sign *= s;
            m = m.kron(&f);
        }
        out = out.try_add(&m.scale(C64::new(sign, 0.0)))?;
    }
    if a.terms().is_empty() {
        for sig in a.factors() {
            if *sig != Signature::cl30() && *sig != Signature::cl13() {
                return Err(Error::UnsupportedSignature(*sig));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{pauli, I};
    use super::*;

    fn e(labels: &[u32]) -> Multivector {
        Multivector::product_of(Signature::cl30(), labels)
    }

    #[test]
    fn generator_images() {
        assert_eq!(rep_cl30(&e(&[3])).unwrap(), pauli::z());
        assert_eq!(rep_cl30(&e(&[1])).unwrap(), pauli::x());
        assert_eq!(rep_cl30(&e(&[2])).unwrap(), pauli::y());
        assert_eq!(rep_cl30(&e(&[1, 2])).unwrap(), ComplexMatrix::diagonal(&[I, -I]));
        assert_eq!(rep_cl30(&e(&[])).unwrap(), ComplexMatrix::identity(2));
        assert_eq!(rep_cl30(&e(&[1, 2, 3])).unwrap(), ComplexMatrix::identity(2).scale(I));
        assert_eq!(rep_cl30(&e(&[2, 3])).unwrap(), pauli::x().scale(I));
        assert_eq!(rep_cl30(&e(&[3, 1])).unwrap(), pauli::y().scale(I));
    }

    #[test]
    fn reverse_is_adjoint_on_blades() {
        for m in 0..8 {
            let b = Multivector::from_blade(Signature::cl30(), Blade(m), 1.0);
            assert_eq!(rep_cl30(&b.reverse()).unwrap(), rep_cl30(&b).unwrap().adjoint());
        }
    }

    #[test]
    fn wrong_signature_rejected() {
        let g = Multivector::generator(Signature::cl13(), 1);
        assert!(matches!(rep_cl30(&g), Err(Error::UnsupportedSignature(_))));
    }

    #[test]
    fn tensor_images() {
        let t = TensorElement::tensor_of(&[e(&[3]), e(&[3])]);
        assert_eq!(rep_tensor(&t).unwrap(), pauli::z().kron(&pauli::z()));
        let t = TensorElement::tensor_of(&[e(&[1, 2, 3]), e(&[])]);
        assert_eq!(rep_tensor(&t).unwrap(), ComplexMatrix::identity(4).scale(I));
    }
}
