//! Quantum gates as elements of [Cl(3,0)]^{⊗n}. Any small unitary is
//! synthesized as the exponential of an element of the u(2^n) generator basis.

use std::f64::consts::FRAC_PI_2;

use crate::algebra::exponential;
use crate::clifford::{Blade, Multivector, Signature};
use crate::error::{Error, Result};
use crate::matrix::{logm_unitary, pauli, rep_tensor, ComplexMatrix, C64};
use crate::tensor::{BladeTuple, TensorElement};

const PAULI: [char; 4] = ['I', 'X', 'Y', 'Z'];

const ONE: Blade = Blade(0);
const S1: Blade = Blade(0b001);
const S2: Blade = Blade(0b010);
const S3: Blade = Blade(0b100);
const S12: Blade = Blade(0b011);
const S13: Blade = Blade(0b101);
const S23: Blade = Blade(0b110);
const S123: Blade = Blade(0b111);

/// Pauli strings on `n` qubits, lexicographic in `I X Y Z`, first letter
/// most significant.
pub fn pauli_strings(n: usize) -> Vec<String> {
    (0..4usize.pow(n as u32))
        .map(|mut k| {
            let mut s = vec![' '; n];
            for slot in (0..n).rev() {
                s[slot] = PAULI[k % 4];
                k /= 4;
            }
            s.into_iter().collect()
        })
        .collect()
}

/// Hermitian lift of a Pauli string: X, Y, Z → σ1, σ2, σ3 and I → 1.
fn vector_lift(letters: &str) -> (BladeTuple, f64) {
    let key = letters
        .chars()
        .map(|c| match c {
            'X' => S1,
            'Y' => S2,
            'Z' => S3,
            _ => ONE,
        })
        .collect();
    (key, 1.0)
}

/// Anti-hermitian lift with image `i·P`: the first non-identity slot carries
/// σ2σ3, σ3σ1 or σ1σ2; the all-identity string puts σ1σ2σ3 in the last slot.
fn generator_lift(letters: &str) -> (BladeTuple, f64) {
    let (mut key, _) = vector_lift(letters);
    match letters.chars().position(|c| c != 'I') {
        None => {
            let last = key.len() - 1;
            key[last] = S123;
            (key, 1.0)
        }
        Some(slot) => {
            let (blade, sign) = match key[slot] {
                S1 => (S23, 1.0),
                S2 => (S13, -1.0), // σ3σ1 = -e13
                _ => (S12, 1.0),
            };
            key[slot] = blade;
            (key, sign)
        }
    }
}

/// The canonical basis of u(2^n) inside [Cl(3,0)]^{⊗n}.
#[derive(Clone, Debug)]
pub struct GeneratorBasis {
    pub n: usize,
    pub elements: Vec<TensorElement>,
    /// Pauli string `P` with `rep(element) = i·P`.
    pub labels: Vec<String>,
}

impl GeneratorBasis {
    /// Drops the all-identity (global phase) element.
    pub fn su(&self) -> GeneratorBasis {
        let keep: Vec<usize> = (0..self.labels.len()).filter(|&i| self.labels[i].chars().any(|c| c != 'I')).collect();
        GeneratorBasis {
            n: self.n,
            elements: keep.iter().map(|&i| self.elements[i].clone()).collect(),
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if (1..=3).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange { what: "qubit count", value: n as i64 })
    }
}

pub fn u_generator_basis(n: usize) -> Result<GeneratorBasis> {
    check_qubits(n)?;
    let factors = vec![Signature::cl30(); n];
    let labels = pauli_strings(n);
    let elements = labels.iter().map(|l| TensorElement::from_terms(factors.clone(), [generator_lift(l)])).collect();
    Ok(GeneratorBasis { n, elements, labels })
}

/// Real-linear section of the Pauli rep: `M = Σ (a_P + i b_P) P` is lifted
/// to `Σ a_P v(P) + b_P g(P)` with `v` the vector lift and `g` the
/// canonical generator. For CNOT this returns ½(1+σ3)⊗1 + ½(1-σ3)⊗σ1.
pub fn lift_matrix(m: &ComplexMatrix, n: usize) -> Result<TensorElement> {
    let dim = 1usize << n;
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::Shape(format!("{}x{} matrix for {n} qubits", m.rows(), m.cols())));
    }
    let mut terms = Vec::new();
    for letters in pauli_strings(n) {
        let p = pauli::string(&letters);
        let c = p.try_mul(m)?.trace() / dim as f64;
        let (kv, sv) = vector_lift(&letters);
        let (kg, sg) = generator_lift(&letters);
        terms.push((kv, sv * c.re));
        terms.push((kg, sg * c.im));
    }
    Ok(TensorElement::from_terms(vec![Signature::cl30(); n], terms))
}

fn e(labels: &[u32]) -> Multivector {
    Multivector::product_of(Signature::cl30(), labels)
}

/// X = σ1.
pub fn x_closed_form() -> TensorElement {
    TensorElement::tensor_of(&[e(&[1])])
}

/// exp(α σ123) · exp(θ σ23); α = -π/2, θ = π/2 gives σ1.
pub fn x_from_exponentials(alpha: f64, theta: f64) -> Result<TensorElement> {
    let u1 = exponential(&TensorElement::tensor_of(&[e(&[1, 2, 3]).scale(alpha)]), 1e-15)?;
    let u2 = exponential(&TensorElement::tensor_of(&[e(&[2, 3]).scale(theta)]), 1e-15)?;
    u1.multiply(&u2)
}

/// ½(1+σ3)⊗1 + ½(1-σ3)⊗σ1.
pub fn cnot_closed_form() -> TensorElement {
    let one = e(&[]);
    let plus = (&one + &e(&[3])).scale(0.5);
    let minus = (&one - &e(&[3])).scale(0.5);
    &TensorElement::tensor_of(&[plus, one]) + &TensorElement::tensor_of(&[minus, e(&[1])])
}

/// ½(σ123⊗1 + σ12⊗1 + σ123⊗σ1 - σ12⊗σ1), which squares to -1⊗1.
pub fn cnot_exponent_direction() -> TensorElement {
    let t = |a: &[u32], b: &[u32]| TensorElement::tensor_of(&[e(a), e(b)]);
    (&(&(&t(&[1, 2, 3], &[]) + &t(&[1, 2], &[])) + &t(&[1, 2, 3], &[1])) - &t(&[1, 2], &[1])).scale(0.5)
}

/// exp[α(σ123⊗1)] · exp[θ · cnot_exponent_direction()].
pub fn cnot_from_exponentials(alpha: f64, theta: f64) -> Result<TensorElement> {
    let u1 = exponential(&TensorElement::tensor_of(&[e(&[1, 2, 3]), e(&[])]).scale(alpha), 1e-15)?;
    let u2 = exponential(&cnot_exponent_direction().scale(theta), 1e-15)?;
    u1.multiply(&u2)
}

/// The exponential parameters used in the constructions above.
pub const GATE_ALPHA: f64 = -FRAC_PI_2;
pub const GATE_THETA: f64 = FRAC_PI_2;

/// Standard gate matrix by catalog name.
pub fn catalog(name: &str) -> Option<(ComplexMatrix, usize)> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let c = |re: f64, im: f64| C64::new(re, im);
    let perm = |map: [usize; 4]| {
        let mut m = ComplexMatrix::zeros(4, 4);
        for (from, to) in map.iter().enumerate() {
            m[(*to, from)] = c(1.0, 0.0);
        }
        m
    };
    Some(match name {
        "x" => (pauli::x(), 1),
        "y" => (pauli::y(), 1),
        "z" => (pauli::z(), 1),
        "h" => (ComplexMatrix::from_real_rows(&[&[r, r], &[r, -r]]), 1),
        "s" => (ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 1.0)]), 1),
        "t" => (ComplexMatrix::diagonal(&[c(1.0, 0.0), c(r, r)]), 1),
        "cnot" => (perm([0, 1, 3, 2]), 2),
        "swap" => (perm([0, 2, 1, 3]), 2),
        "cz" => (ComplexMatrix::diagonal(&[c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]), 2),
        _ => return None,
    })
}

pub const CATALOG: [&str; 9] = ["x", "y", "z", "h", "s", "t", "cnot", "swap", "cz"];

/// Result of [`synthesize`].
#[derive(Clone, Debug)]
pub struct Synthesis {
    /// `G` in the span of the canonical u(2^n) basis.
    pub generator: TensorElement,
    /// `exp(G)` computed in the algebra.
    pub element: TensorElement,
    /// `‖rep(exp G) - U‖_F`.
    pub residual: f64,
    /// The target had an eigenvalue at -1; the +π branch was taken.
    pub branch_ambiguous: bool,
}

/// Finds `G` with `rep(exp G) = U`: principal `logm`, expansion over
/// `i·P` with coefficients `-i tr(P A) / 2^n`, and the canonical basis.
pub fn synthesize(target: &ComplexMatrix, n: usize) -> Result<Synthesis> {
    check_qubits(n)?;
    let dim = 1usize << n;
    if target.rows() != dim || target.cols() != dim {
        return Err(Error::Shape(format!("{}x{} target for {n} qubits", target.rows(), target.cols())));
    }
    let log = logm_unitary(target)?;
    let basis = u_generator_basis(n)?;
    let mut generator = TensorElement::zero(vec![Signature::cl30(); n]);
    for (label, g) in basis.labels.iter().zip(&basis.elements) {
        let coeff = (C64::new(0.0, -1.0) * pauli::string(label).try_mul(&log.log)?.trace() / dim as f64).re;
        generator = generator.try_add(&g.scale(coeff))?;
    }
    let element = exponential(&generator, 1e-15)?;
    let residual = rep_tensor(&element)?.distance(target);
    Ok(Synthesis { generator, element, residual, branch_ambiguous: log.branch_ambiguous })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::commutator;
    use crate::matrix::{rank_c, I};
    use crate::tensor::rank_of_set;

    #[test]
    fn basis_counts_and_hermiticity() {
        for (n, count) in [(1, 4), (2, 16), (3, 64)] {
            let b = u_generator_basis(n).unwrap();
            assert_eq!(b.elements.len(), count);
            assert!(b.elements.iter().all(TensorElement::is_anti_hermitian));
            assert_eq!(rank_of_set(&b.elements).unwrap(), count);
            let images: Vec<ComplexMatrix> = b.elements.iter().map(|x| rep_tensor(x).unwrap()).collect();
            assert_eq!(rank_c(&images).unwrap(), count);
            for (img, label) in images.iter().zip(&b.labels) {
                assert_eq!(*img, pauli::string(label).scale(I));
            }
        }
        assert!(u_generator_basis(0).is_err());
        assert!(u_generator_basis(4).is_err());
        assert_eq!(u_generator_basis(2).unwrap().su().elements.len(), 15);
    }

    #[test]
    fn single_qubit_basis_and_commutators() {
        let b = u_generator_basis(1).unwrap();
        let one = |m: Multivector| TensorElement::tensor_of(&[m]);
        assert_eq!(b.elements[0], one(e(&[1, 2, 3])));
        assert_eq!(b.elements[1], one(e(&[2, 3])));
        assert_eq!(b.elements[2], one(e(&[3, 1])));
        assert_eq!(b.elements[3], one(e(&[1, 2])));
        let (s12, s23, s31) = (e(&[1, 2]), e(&[2, 3]), e(&[3, 1]));
        assert_eq!(commutator(&s12, &s23).unwrap(), s31.scale(-2.0));
        assert_eq!(commutator(&s12, &s31).unwrap(), s23.scale(2.0));
        assert!(commutator(&e(&[1, 2, 3]), &s12).unwrap().is_zero());
    }

    #[test]
    fn x_and_cnot_constructions() {
        assert_eq!(x_from_exponentials(GATE_ALPHA, GATE_THETA).unwrap(), x_closed_form());
        let d = cnot_exponent_direction();
        assert_eq!(&d * &d, TensorElement::identity(vec![Signature::cl30(); 2]).scale(-1.0));
        assert_eq!(cnot_from_exponentials(GATE_ALPHA, GATE_THETA).unwrap(), cnot_closed_form());
        let cnot = cnot_closed_form();
        assert_eq!(&cnot * &cnot, TensorElement::identity(vec![Signature::cl30(); 2]));
        assert_eq!(rep_tensor(&cnot).unwrap(), catalog("cnot").unwrap().0);
    }

    #[test]
    fn lift_is_a_section() {
        for name in CATALOG {
            let (m, n) = catalog(name).unwrap();
            let lifted = lift_matrix(&m, n).unwrap();
            assert!(rep_tensor(&lifted).unwrap().distance(&m) < 1e-14, "{name}");
        }
        assert_eq!(lift_matrix(&catalog("cnot").unwrap().0, 2).unwrap(), cnot_closed_form());
        assert_eq!(lift_matrix(&pauli::x(), 1).unwrap(), x_closed_form());
    }

    #[test]
    fn synthesis_of_x_and_identity() {
        let s = synthesize(&pauli::x(), 1).unwrap();
        assert!(s.branch_ambiguous);
        assert!(s.residual < 1e-12);
        assert!(s.element.approx_eq(&x_closed_form(), 1e-14));
        let id = synthesize(&ComplexMatrix::identity(2), 1).unwrap();
        assert!(id.generator.is_zero());
        assert_eq!(id.element, TensorElement::identity(vec![Signature::cl30()]));
    }

    #[test]
    fn synthesis_of_catalog() {
        for name in CATALOG {
            let (m, n) = catalog(name).unwrap();
            let s = synthesize(&m, n).unwrap();
            assert!(s.residual < 1e-8, "{name}: {}", s.residual);
        }
    }
}
