//! Theta elements of Cl(1,3)+ and the two-factor charge conjugation Ĉ.

use crate::algebra::{susy_bracket, symmetrized_product};
use crate::clifford::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::relativistic::{g, iota};
use crate::spinor::{apply_gate, decode, encode_in, QubitState};
use crate::tensor::TensorElement;

/// θ1 = 1 + γ3γ0, θ̄1 = 1 - γ3γ0, θ2 = γ1γ0 + ιγ2γ0, θ̄2 = -γ1γ0 + ιγ2γ0.
#[derive(Clone, Debug, PartialEq)]
pub struct Thetas {
    pub theta1: Multivector,
    pub theta1_bar: Multivector,
    pub theta2: Multivector,
    pub theta2_bar: Multivector,
}

impl Thetas {
    /// In the order θ1, θ̄1, θ2, θ̄2.
    pub fn all(&self) -> [(&'static str, &Multivector); 4] {
        [("θ1", &self.theta1), ("θ̄1", &self.theta1_bar), ("θ2", &self.theta2), ("θ̄2", &self.theta2_bar)]
    }
}

pub fn theta_elements() -> Thetas {
    let one = Multivector::one(Signature::cl13());
    let g30 = g(&[3, 0]);
    let g10 = g(&[1, 0]);
    let ig20 = &iota() * &g(&[2, 0]);
    Thetas { theta1: &one + &g30, theta1_bar: &one - &g30, theta2: &g10 + &ig20, theta2_bar: &ig20 - &g10 }
}

/// `table[a][b] = {x_a, x_b}` over θ1, θ̄1, θ2, θ̄2.
pub fn bracket_table() -> Result<[[f64; 4]; 4]> {
    let t = theta_elements();
    let all = t.all();
    let mut table = [[0.0; 4]; 4];
    for (a, (_, x)) in all.iter().enumerate() {
        for (b, (_, y)) in all.iter().enumerate() {
            table[a][b] = susy_bracket(*x, *y)?.scalar_part();
        }
    }
    Ok(table)
}

/// The unprojected `½(x ỹ + x̃ y)` for every ordered theta pair.
pub fn symmetrized_table() -> Result<Vec<(String, Multivector)>> {
    let t = theta_elements();
    let all = t.all();
    let mut out = Vec::new();
    for (na, x) in all {
        for (nb, y) in all {
            out.push((format!("{{{na},{nb}}}"), symmetrized_product(x, y)?));
        }
    }
    Ok(out)
}

/// Action of `op` on the real basis states `|0..0⟩ .. |1..1⟩` of the
/// Cl(1,3)+ ideal, in the row convention `M[j][k]` = component `k` of
/// `op · basis_j`. Fails if some image leaves the real span.
pub fn action_matrix(op: &TensorElement) -> Result<Vec<Vec<f64>>> {
    let n = op.n_factors();
    let mut rows = Vec::with_capacity(1 << n);
    for j in 0..1usize << n {
        let basis = encode_in(Signature::cl13(), &QubitState::basis(n, j))?;
        let image = decode(&apply_gate(op, &basis)?)?;
        let imag = image.amplitudes().iter().map(|a| a.im.abs()).fold(0.0, f64::max);
        if imag > 1e-12 {
            return Err(Error::NotInIdeal { residual: imag });
        }
        rows.push(image.amplitudes().iter().map(|a| a.re).collect());
    }
    Ok(rows)
}

/// 2×2 action matrices of θ1, θ̄1, θ2, θ̄2 in the basis {γ3γ0P, γ1γ0P}.
pub fn theta_matrix_rep() -> Result<[Vec<Vec<f64>>; 4]> {
    let t = theta_elements();
    let m = |x: &Multivector| action_matrix(&TensorElement::tensor_of(std::slice::from_ref(x)));
    Ok([m(&t.theta1)?, m(&t.theta1_bar)?, m(&t.theta2)?, m(&t.theta2_bar)?])
}

/// Ĉ = -(1⊗ι)(γ2γ0⊗1).
pub fn charge_conj_hat() -> TensorElement {
    let one = Multivector::one(Signature::cl13());
    (&TensorElement::tensor_of(&[one.clone(), iota()]) * &TensorElement::tensor_of(&[g(&[2, 0]), one])).scale(-1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rep_tensor;
    use crate::spinor::IdealElement;

    fn state(x: Multivector) -> IdealElement {
        IdealElement::from_representative(TensorElement::tensor_of(&[x])).unwrap()
    }

    #[test]
    fn bracket_table_values() {
        let t = bracket_table().unwrap();
        let want = [[0.0, 2.0, 0.0, 0.0], [2.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 2.0], [0.0, 0.0, 2.0, 0.0]];
        assert_eq!(t, want);
    }

    #[test]
    fn theta_actions() {
        let t = theta_elements();
        let half = |x: &Multivector| TensorElement::tensor_of(&[x.scale(0.5)]);
        let p30 = state(g(&[3, 0]));
        let p10 = state(g(&[1, 0]));
        assert_eq!(apply_gate(&half(&t.theta1), &p30).unwrap(), p30);
        assert!(apply_gate(&half(&t.theta1_bar), &p30).unwrap().body().is_zero());
        assert_eq!(apply_gate(&half(&t.theta2), &p10).unwrap(), p30);
        assert_eq!(apply_gate(&half(&t.theta2_bar), &p30).unwrap(), p10.scale(-1.0));
    }

    #[test]
    fn theta_matrices() {
        let [t1, tb1, t2, tb2] = theta_matrix_rep().unwrap();
        assert_eq!(t1, vec![vec![2.0, 0.0], vec![0.0, 0.0]]);
        assert_eq!(tb1, vec![vec![0.0, 0.0], vec![0.0, 2.0]]);
        assert_eq!(t2, vec![vec![0.0, 0.0], vec![2.0, 0.0]]);
        assert_eq!(tb2, vec![vec![0.0, -2.0], vec![0.0, 0.0]]);
    }

    #[test]
    fn c_hat() {
        let c = charge_conj_hat();
        assert_eq!(c.reverse_all(), -&c);
        assert_eq!(c.adjoint_all(), -&c);
        let block = [[0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0], [-1.0, 0.0, 0.0, 0.0], [0.0, -1.0, 0.0, 0.0]];
        let m = action_matrix(&c).unwrap();
        assert_eq!(m, block.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        let rep = rep_tensor(&c).unwrap();
        for (i, row) in block.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(rep[(j, i)].re, *v);
                assert_eq!(rep[(j, i)].im, 0.0);
            }
        }
    }

    #[test]
    fn c_hat_on_bell_states() {
        let c = charge_conj_hat();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bell = |a: [u32; 2], b: [u32; 2], sign: f64| {
            let x = TensorElement::tensor_of(&[g(&[a[0], 0]), g(&[a[1], 0])]);
            let y = TensorElement::tensor_of(&[g(&[b[0], 0]), g(&[b[1], 0])]).scale(sign);
            IdealElement::from_representative((&x + &y).scale(s)).unwrap()
        };
        let cases = [
            (bell([3, 3], [1, 1], 1.0), bell([1, 3], [3, 1], -1.0)),
            (bell([3, 1], [1, 3], 1.0), bell([1, 1], [3, 3], -1.0)),
        ];
        for (input, want) in cases {
            let got = decode(&apply_gate(&c, &input).unwrap()).unwrap();
            assert!(got.max_abs_diff(&decode(&want).unwrap()) < 1e-15);
        }
    }
}
