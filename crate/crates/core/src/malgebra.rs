//! Cl(0,7) and Cl(10,1) generators inside tensor powers of Cl(1,3)+, the
//! antisymmetrized gamma products, and the 528-element M-algebra basis.

use rayon::prelude::*;
use serde::Serialize;

use crate::clifford::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::matrix::{rank_c, rep_tensor, ComplexMatrix};
use crate::relativistic::{g, iota};
use crate::tensor::{rank_of_set, TensorElement};

const REP_TOL: f64 = 1e-12;

/// A list of would-be Clifford generators together with the squares they
/// are expected to have.
#[derive(Clone, Debug)]
pub struct GeneratorFamily {
    pub name: String,
    pub elements: Vec<TensorElement>,
    pub expected_signature: Vec<f64>,
}

/// Outcome of squaring and anticommuting every generator of a family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyCheck {
    /// `s_i` with `x_i² = s_i · 1`; `None` when the square is not a scalar.
    pub measured_signature: Vec<Option<f64>>,
    /// 1-based index pairs whose anticommutator is nonzero.
    pub offending_pairs: Vec<(usize, usize)>,
    pub pairs_checked: usize,
}

impl FamilyCheck {
    pub fn anticommuting(&self) -> bool {
        self.offending_pairs.is_empty()
    }
}

impl GeneratorFamily {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn check(&self) -> FamilyCheck {
        let measured_signature = self.elements.iter().map(|x| (x * x).as_scalar()).collect();
        let pairs: Vec<(usize, usize)> =
            (0..self.len()).flat_map(|i| (i + 1..self.len()).map(move |j| (i, j))).collect();
        let offending_pairs = pairs
            .par_iter()
            .filter(|&&(i, j)| {
                let (a, b) = (&self.elements[i], &self.elements[j]);
                !(&(a * b) + &(b * a)).is_zero()
            })
            .map(|&(i, j)| (i + 1, j + 1))
            .collect();
        FamilyCheck { measured_signature, offending_pairs, pairs_checked: pairs.len() }
    }

    /// True when the squares match and every pair anticommutes.
    pub fn is_valid(&self) -> bool {
        let c = self.check();
        c.anticommuting() && c.measured_signature.iter().zip(&self.expected_signature).all(|(m, e)| *m == Some(*e))
    }
}

fn ig20() -> Multivector {
    &iota() * &g(&[2, 0])
}

fn one() -> Multivector {
    Multivector::one(Signature::cl13())
}

/// The seven three-factor γ^j of Cl(0,7).
fn cl07_parts() -> Vec<[Multivector; 3]> {
    let (g10, g30, i20) = (g(&[1, 0]), g(&[3, 0]), ig20());
    vec![
        [i20.clone(), g10.clone(), one()],
        [i20.clone(), g30.clone(), one()],
        [one(), i20.clone(), g10.clone()],
        [one(), i20.clone(), g30.clone()],
        [g10, one(), i20.clone()],
        [g30, one(), i20.clone()],
        [i20.clone(), i20.clone(), i20],
    ]
}

pub fn cl07_generators() -> GeneratorFamily {
    GeneratorFamily {
        name: "cl07".into(),
        elements: cl07_parts().iter().map(|p| TensorElement::tensor_of(p)).collect(),
        expected_signature: vec![-1.0; 7],
    }
}

fn cl101_family(tenth: Multivector, name: &str) -> GeneratorFamily {
    let (g10, g30) = (g(&[1, 0]), g(&[3, 0]));
    let mut elements: Vec<TensorElement> =
        cl07_parts().into_iter().map(|[a, b, c]| TensorElement::tensor_of(&[g10.clone(), ig20(), a, b, c])).collect();
    let pad = |x: Multivector, y: Multivector| TensorElement::tensor_of(&[x, y, one(), one(), one()]);
    elements.push(pad(g10.clone(), g10.clone()));
    elements.push(pad(g10, g30.clone()));
    elements.push(pad(tenth, one()));
    elements.push(pad(g30, one()));
    let mut expected_signature = vec![1.0; 11];
    expected_signature[9] = -1.0;
    GeneratorFamily { name: name.into(), elements, expected_signature }
}

/// Γ1..Γ11 of Cl(10,1) over five factors. The tenth generator is
/// ιγ2γ0⊗1⊗1⊗1⊗1, the τ2-type lift that anticommutes with the other ten.
pub fn cl101_generators() -> GeneratorFamily {
    cl101_family(ig20(), "cl101")
}

/// Same family with the tenth generator written ιγ3γ0⊗1⊗1⊗1⊗1. It still
/// squares to -1 but commutes with γ3γ0⊗1⊗1⊗1⊗1.
pub fn cl101_generators_with_iota_g30() -> GeneratorFamily {
    cl101_family(&iota() * &g(&[3, 0]), "cl101-iota-g30")
}

/// γ3γ0⊗1⊗1⊗1⊗1, a five-factor charge conjugation candidate acting on the first factor only.
pub fn first_factor_charge_conjugation() -> TensorElement {
    TensorElement::tensor_of(&[g(&[3, 0]), one(), one(), one(), one()])
}

fn permutations(l: usize) -> Vec<(Vec<usize>, f64)> {
    if l == 0 {
        return vec![(Vec::new(), 1.0)];
    }
    let mut out = Vec::new();
    for (rest, sign) in permutations(l - 1) {
        // insert l-1 at position p: moves it past (l-1-p) larger-indexed slots
        for p in 0..l {
            let mut perm = rest.clone();
            perm.insert(p, l - 1);
            let s = if (l - 1 - p).is_multiple_of(2) { sign } else { -sign };
            out.push((perm, s));
        }
    }
    out
}

/// `Γ_[μ1..μl] = (1/l!) Σ_σ ε(σ) Γ_μσ(1) ... Γ_μσ(l)` with 0-based indices.
/// The flag is set when an index repeats, in which case the element is zero.
pub fn antisym_gamma(family: &GeneratorFamily, indices: &[usize]) -> Result<(TensorElement, bool)> {
    if indices.is_empty() || indices.len() > 5 {
        return Err(Error::OutOfRange { what: "antisymmetrized rank", value: indices.len() as i64 });
    }
    if let Some(&bad) = indices.iter().find(|&&i| i >= family.len()) {
        return Err(Error::OutOfRange { what: "generator index", value: bad as i64 });
    }
    let factors = family.elements[0].factors().to_vec();
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok((TensorElement::zero(factors), true));
    }
    let perms = permutations(indices.len());
    let mut acc = TensorElement::zero(factors.clone());
    for (perm, sign) in &perms {
        let mut prod = TensorElement::identity(factors.clone());
        for &k in perm {
            prod = prod.multiply(&family.elements[indices[k]])?;
        }
        acc = acc.try_add(&prod.scale(*sign))?;
    }
    Ok((acc.scale(1.0 / perms.len() as f64), false))
}

/// Product of the generators whose matrix representation is antisymmetric,
/// in family order, with their 1-based indices.
pub fn recipe_charge_conjugation(family: &GeneratorFamily) -> Result<(TensorElement, Vec<usize>)> {
    let mut c = TensorElement::identity(family.elements[0].factors().to_vec());
    let mut used = Vec::new();
    for (i, x) in family.elements.iter().enumerate() {
        let m = rep_tensor(x)?;
        if m.max_abs_diff(&m.transpose().scale((-1.0).into())) <= REP_TOL {
            c = c.multiply(x)?;
            used.push(i + 1);
        }
    }
    Ok((c, used))
}

#[derive(Clone, Debug)]
pub struct MAlgebraElement {
    /// 1-based generator indices.
    pub indices: Vec<usize>,
    /// Central-charge slot the element stands for: P, Z2 or Z5.
    pub label: String,
    pub element: TensorElement,
}

#[derive(Clone, Debug)]
pub struct MAlgebraBasis {
    pub charge_conjugation: TensorElement,
    pub rank1: Vec<MAlgebraElement>,
    pub rank2: Vec<MAlgebraElement>,
    pub rank5: Vec<MAlgebraElement>,
}

impl MAlgebraBasis {
    pub fn len(&self) -> usize {
        self.rank1.len() + self.rank2.len() + self.rank5.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &MAlgebraElement> {
        self.rank1.iter().chain(&self.rank2).chain(&self.rank5)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for last in k - 1..n {
        for mut head in combinations(last, k - 1) {
            head.push(last);
            out.push(head);
        }
    }
    out.sort();
    out
}

fn build_rank(family: &GeneratorFamily, c: &TensorElement, k: usize, label: &str) -> Result<Vec<MAlgebraElement>> {
    combinations(family.len(), k)
        .into_par_iter()
        .map(|idx| {
            let (gamma, _) = antisym_gamma(family, &idx)?;
            Ok(MAlgebraElement {
                indices: idx.iter().map(|i| i + 1).collect(),
                label: label.into(),
                element: c.multiply(&gamma)?,
            })
        })
        .collect()
}

/// `Ĉ·Γ_μ`, `Ĉ·Γ_[μν]`, `Ĉ·Γ_[μ1..μ5]` over the given family and Ĉ.
pub fn m_algebra_basis_for(family: &GeneratorFamily, c: &TensorElement) -> Result<MAlgebraBasis> {
    Ok(MAlgebraBasis {
        charge_conjugation: c.clone(),
        rank1: build_rank(family, c, 1, "P")?,
        rank2: build_rank(family, c, 2, "Z2")?,
        rank5: build_rank(family, c, 5, "Z5")?,
    })
}

/// The basis over [`cl101_generators`] with Ĉ from [`recipe_charge_conjugation`].
pub fn m_algebra_basis() -> Result<MAlgebraBasis> {
    let family = cl101_generators();
    let (c, _) = recipe_charge_conjugation(&family)?;
    m_algebra_basis_for(&family, &c)
}

/// `ξ` with `C Γ_μ Cᵀ = ξ Γ_μᵀ` for every μ and `α` with `Cᵀ = α C`, each
/// `None` when no single sign works.
pub fn charge_conjugation_signs(family: &GeneratorFamily, c: &TensorElement) -> Result<(Option<f64>, Option<f64>)> {
    let cm = rep_tensor(c)?;
    let ct = cm.transpose();
    let sign_of = |lhs: &ComplexMatrix, rhs: &ComplexMatrix| {
        [1.0, -1.0].into_iter().find(|s: &f64| lhs.max_abs_diff(&rhs.scale((*s).into())) <= REP_TOL)
    };
    let mut xi: Option<Option<f64>> = None;
    for x in &family.elements {
        let gm = rep_tensor(x)?;
        let s = sign_of(&cm.try_mul(&gm)?.try_mul(&ct)?, &gm.transpose());
        match xi {
            None => xi = Some(s),
            Some(prev) if prev != s => xi = Some(None),
            _ => {}
        }
    }
    Ok((xi.flatten(), sign_of(&ct, &cm)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MAlgebraReport {
    pub family: FamilyCheck,
    pub charge_conjugation: String,
    /// 1-based indices of the generators multiplied into Ĉ.
    pub charge_conjugation_from: Vec<usize>,
    pub counts: [usize; 3],
    pub total: usize,
    pub tensor_rank: usize,
    pub xi: Option<f64>,
    pub alpha: Option<f64>,
    pub symmetric_count: usize,
    pub antisymmetric_count: usize,
    pub complex_rank: usize,
    pub symmetric_dimension: usize,
    pub first_factor_charge_conjugation: String,
    pub first_factor_xi: Option<f64>,
    pub first_factor_alpha: Option<f64>,
}

pub fn verify_m_algebra() -> Result<MAlgebraReport> {
    let family = cl101_generators();
    let (c, used) = recipe_charge_conjugation(&family)?;
    let basis = m_algebra_basis_for(&family, &c)?;
    let elements: Vec<TensorElement> = basis.iter().map(|e| e.element.clone()).collect();
    let tensor_rank = rank_of_set(&elements)?;
    let reps: Vec<ComplexMatrix> = elements.par_iter().map(rep_tensor).collect::<Result<_>>()?;
    let symmetric_count = reps.iter().filter(|m| m.is_symmetric(REP_TOL)).count();
    let antisymmetric_count =
        reps.iter().filter(|m| m.max_abs_diff(&m.transpose().scale((-1.0).into())) <= REP_TOL).count();
    let (xi, alpha) = charge_conjugation_signs(&family, &c)?;
    let candidate = first_factor_charge_conjugation();
    let (first_factor_xi, first_factor_alpha) = charge_conjugation_signs(&family, &candidate)?;
    let dim = reps.first().map_or(0, |m| m.rows());
    Ok(MAlgebraReport {
        family: family.check(),
        charge_conjugation: c.to_string(),
        charge_conjugation_from: used,
        counts: [basis.rank1.len(), basis.rank2.len(), basis.rank5.len()],
        total: basis.len(),
        tensor_rank,
        xi,
        alpha,
        symmetric_count,
        antisymmetric_count,
        complex_rank: rank_c(&reps)?,
        symmetric_dimension: dim * (dim + 1) / 2,
        first_factor_charge_conjugation: candidate.to_string(),
        first_factor_xi,
        first_factor_alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cl07_relations() {
        let f = cl07_generators();
        let c = f.check();
        assert_eq!(c.measured_signature, vec![Some(-1.0); 7]);
        assert_eq!(c.pairs_checked, 21);
        assert!(c.anticommuting());
        assert!(f.is_valid());
    }

    #[test]
    fn cl101_relations() {
        let c = cl101_generators().check();
        assert_eq!(c.pairs_checked, 55);
        assert!(c.anticommuting());
        let plus = c.measured_signature.iter().filter(|s| **s == Some(1.0)).count();
        let minus = c.measured_signature.iter().filter(|s| **s == Some(-1.0)).count();
        assert_eq!((plus, minus), (10, 1));
    }

    #[test]
    fn iota_g30_tenth_generator_commutes_with_eleventh() {
        let f = cl101_generators_with_iota_g30();
        let c = f.check();
        assert_eq!(c.offending_pairs, vec![(10, 11)]);
        assert_eq!(c.measured_signature[9], Some(-1.0));
        assert!(!f.is_valid());
    }

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        for (perm, s) in p {
            let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            assert_eq!(s, if inv % 2 == 0 { 1.0 } else { -1.0 });
        }
    }

    #[test]
    fn antisym_collapses() {
        let f = cl101_generators();
        let (one, _) = antisym_gamma(&f, &[4]).unwrap();
        assert_eq!(one, f.elements[4]);
        let (two, _) = antisym_gamma(&f, &[2, 9]).unwrap();
        assert_eq!(two, &f.elements[2] * &f.elements[9]);
        let idx = [0, 3, 7, 9, 10];
        let (five, _) = antisym_gamma(&f, &idx).unwrap();
        let prod =
            idx.iter().fold(TensorElement::identity(f.elements[0].factors().to_vec()), |acc, &i| &acc * &f.elements[i]);
        assert_eq!(five, prod);
        let (z, flag) = antisym_gamma(&f, &[3, 3]).unwrap();
        assert!(z.is_zero() && flag);
        assert!(antisym_gamma(&f, &[11]).is_err());
    }

    #[test]
    fn recipe_picks_tenth_generator() {
        let f = cl101_generators();
        let (c, used) = recipe_charge_conjugation(&f).unwrap();
        assert_eq!(used, vec![10]);
        assert_eq!(c, f.elements[9]);
        assert_eq!(charge_conjugation_signs(&f, &c).unwrap(), (Some(-1.0), Some(-1.0)));
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(11, 1).len(), 11);
        assert_eq!(combinations(11, 2).len(), 55);
        assert_eq!(combinations(11, 5).len(), 462);
        assert_eq!(combinations(4, 2)[0], vec![0, 1]);
    }

    #[test]
    fn full_report() {
        let r = verify_m_algebra().unwrap();
        assert_eq!(r.counts, [11, 55, 462]);
        assert_eq!((r.total, r.tensor_rank, r.symmetric_dimension), (528, 528, 528));
        assert_eq!((r.xi, r.alpha), (Some(-1.0), Some(-1.0)));
        assert_eq!((r.symmetric_count, r.complex_rank), (528, 528));
        assert_eq!(r.first_factor_xi, None);
    }
}
