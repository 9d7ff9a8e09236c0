use std::f64::consts::FRAC_1_SQRT_2;

use rand::Rng;

use super::{Config, Group};
use crate::algebra::AlgebraElement;
use crate::clifford::{Blade, Multivector, Signature};
use crate::error::Result;
use crate::malgebra::{
    antisym_gamma, cl07_generators, cl101_generators, cl101_generators_with_iota_g30, verify_m_algebra,
};
use crate::matrix::rep_tensor;
use crate::random::{dyadic, state, stream};
use crate::relativistic::{
    charge_conjugation_op, chiral_projectors, chirality_op, g, iota, iso_zeta, iso_zeta_blade, iso_zeta_inv, parity_op,
    time_reversal_op, unitary_sign,
};
use crate::report::Check;
use crate::spinor::{apply_gate, bipartite_det, decode, decode_via_rep, encode_in, IdealElement};
use crate::susy::{action_matrix, bracket_table, charge_conj_hat, symmetrized_table, theta_elements, theta_matrix_rep};
use crate::tensor::TensorElement;

pub(super) fn relativistic() -> Vec<(&'static str, Group)> {
    vec![
        ("zeta", zeta_exhaustive),
        ("chirality", chirality),
        ("projections", chiral_separability),
        ("parity", parity),
        ("charge", charge_conjugation),
        ("time", time_reversal),
        ("unitarity", operator_unitarity),
    ]
}

pub(super) fn susy() -> Vec<(&'static str, Group)> {
    vec![("bracket", theta_bracket), ("thetas", theta_actions), ("c-hat", c_hat)]
}

pub(super) fn m_algebra() -> Vec<(&'static str, Group)> {
    vec![("families", families), ("antisym", antisym_collapse), ("basis", m_basis)]
}

fn cl13_one() -> Multivector {
    Multivector::one(Signature::cl13())
}

/// `γaγ0 ⊗ γbγ0` for `a, b ∈ {1, 3}`.
fn pair(a: u32, b: u32) -> TensorElement {
    TensorElement::tensor_of(&[g(&[a, 0]), g(&[b, 0])])
}

fn one_iota() -> TensorElement {
    TensorElement::tensor_of(&[cl13_one(), iota()])
}

fn ideal(x: TensorElement) -> Result<IdealElement> {
    IdealElement::from_representative(x)
}

/// Second-factor parts of the general bipartite state, in α order:
/// γ3γ0, γ1γ0γ2γ0, γ1γ0, γ2γ0γ3γ0.
fn second_parts() -> [Multivector; 4] {
    [g(&[3, 0]), g(&[1, 0, 2, 0]), g(&[1, 0]), g(&[2, 0, 3, 0])]
}

/// `Σ α_k (first ⊗ second)_k` over the eight terms of the general bipartite state, with the
/// first four on γ3γ0 and the last four on γ1γ0. `signs` scales each term.
fn general_state(alpha: &[f64; 8], signs: [f64; 8]) -> TensorElement {
    let mut acc = TensorElement::zero(vec![Signature::cl13(); 2]);
    for (k, (a, s)) in alpha.iter().zip(signs).enumerate() {
        let first = if k < 4 { g(&[3, 0]) } else { g(&[1, 0]) };
        let term = TensorElement::tensor_of(&[first, second_parts()[k % 4].clone()]);
        acc = &acc + &term.scale(a * s);
    }
    acc
}

fn dyadic_alpha(rng: &mut impl Rng) -> [f64; 8] {
    std::array::from_fn(|_| dyadic(rng))
}

fn zeta_exhaustive(_: &Config) -> Result<Vec<Check>> {
    let s = Signature::cl30();
    let mut worst: f64 = 0.0;
    let mut images = std::collections::BTreeSet::new();
    for a in 0..8 {
        let ea = Multivector::from_blade(s, Blade(a), 1.0);
        images.insert(iso_zeta_blade(Blade(a)).0);
        worst = worst.max(iso_zeta_inv(&iso_zeta(&ea)?.into_inner())?.max_abs_diff(&ea));
        for b in 0..8 {
            let eb = Multivector::from_blade(s, Blade(b), 1.0);
            let lhs = iso_zeta(&(&ea * &eb))?.into_inner();
            worst = worst.max(lhs.max_abs_diff(&(&*iso_zeta(&ea)? * &*iso_zeta(&eb)?)));
        }
    }
    Ok(vec![
        Check::exact("ζ homomorphism and ζ⁻¹ζ = id on all blades", worst, "64 blade pairs"),
        Check::expect("ζ is a bijection onto the even blades", images.len() == 8, (8 - images.len()) as f64, ""),
    ])
}

fn chirality(cfg: &Config) -> Result<Vec<Check>> {
    let g5 = chirality_op();
    let (pr, pl) = chiral_projectors();
    let id = TensorElement::identity(vec![Signature::cl13(); 2]);
    let mut out = vec![
        Check::exact("Γ5† = Γ5", g5.adjoint_all().max_abs_diff(&g5), ""),
        Check::reported("Γ5 under plain grade reversion", g5.reverse_all().max_abs_diff(&g5), "reverse_all(Γ5) = -Γ5"),
        Check::exact("P_R + P_L = 1⊗1", (&pr + &pl).max_abs_diff(&id), ""),
        Check::exact("P_R² = P_R, P_L² = P_L", (&pr * &pr).max_abs_diff(&pr).max((&pl * &pl).max_abs_diff(&pl)), ""),
        Check::exact("P_R P_L = 0", (&pr * &pl).norm1(), ""),
    ];
    let mut rng = stream(cfg.seed, "relativistic/chirality");
    let (mut split, mut eig, mut keep): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for _ in 0..200 {
        let alpha = dyadic_alpha(&mut rng);
        let psi = ideal(general_state(&alpha, [1.0; 8]))?;
        let r = apply_gate(&pr, &psi)?;
        let l = apply_gate(&pl, &psi)?;
        split = split.max(r.try_add(&l)?.body().max_abs_diff(psi.body()));
        eig = eig.max(apply_gate(&g5, &r)?.body().max_abs_diff(r.body()));
        eig = eig.max(apply_gate(&g5, &l)?.body().max_abs_diff(l.scale(-1.0).body()));
        let right = ideal(general_state(&alpha, [1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0]))?;
        let left = ideal(general_state(&alpha, [0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0]))?;
        keep = keep.max(r.body().max_abs_diff(right.body())).max(l.body().max_abs_diff(left.body()));
    }
    out.push(Check::exact("Ψ = P_RΨ + P_LΨ", split, "200 dyadic bipartite states"));
    out.push(Check::exact("Γ5 P_RΨ = P_RΨ, Γ5 P_LΨ = -P_LΨ", eig, "200 dyadic bipartite states"));
    out.push(Check::exact("P_R keeps α1..α4, P_L keeps α5..α8", keep, "200 dyadic bipartite states"));
    Ok(out)
}

fn chiral_separability(cfg: &Config) -> Result<Vec<Check>> {
    let (pr, pl) = chiral_projectors();
    let mut rng = stream(cfg.seed, "relativistic/separable");
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let psi = encode_in(Signature::cl13(), &state(&mut rng, 2))?;
        for p in [&pr, &pl] {
            worst = worst.max(bipartite_det(&decode(&apply_gate(p, &psi)?)?).norm());
        }
    }
    Ok(vec![Check::within(
        "chiral projections are separable",
        worst,
        cfg.tol(1e-10),
        "200 random states; residual is max |det|",
    )])
}

fn parity(cfg: &Config) -> Result<Vec<Check>> {
    let flip = [1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0];
    let mut rng = stream(cfg.seed, "relativistic/parity");
    let (mut zero, mut phased, mut tilde): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for _ in 0..100 {
        let alpha = dyadic_alpha(&mut rng);
        let psi = ideal(general_state(&alpha, [1.0; 8]))?;
        let flipped = ideal(general_state(&alpha, flip))?;
        zero = zero.max(apply_gate(&parity_op(0.0), &psi)?.body().max_abs_diff(flipped.body()));
        let phi = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        let phase = TensorElement::tensor_of(&[cl13_one(), &cl13_one().scale(phi.cos()) + &iota().scale(phi.sin())]);
        let want = apply_gate(&phase, &flipped)?;
        phased = phased.max(apply_gate(&parity_op(phi), &psi)?.body().max_abs_diff(want.body()));
        let conj = TensorElement::tensor_of(&[cl13_one(), &cl13_one().scale(phi.cos()) - &iota().scale(phi.sin())]);
        tilde = tilde.max(parity_op(phi).adjoint_all().max_abs_diff(&(&conj * &chirality_op())));
    }
    Ok(vec![
        Check::exact("Φ_P(φ=0) flips the α5..α8 block", zero, "100 dyadic states"),
        Check::within("Φ_P(φ) = [1⊗(cos φ + ι sin φ)] × flipped state", phased, cfg.tol(1e-12), "100 states, random φ"),
        Check::within("Φ_P† = [1⊗(cos φ - ι sin φ)](γ3γ0⊗1)", tilde, cfg.tol(1e-12), "100 random φ"),
    ])
}

/// `(1/√2)(x + sign·y) P⊗P`.
fn bell(x: TensorElement, y: TensorElement, sign: f64) -> Result<IdealElement> {
    ideal((&x + &y.scale(sign)).scale(FRAC_1_SQRT_2))
}

fn det_gap(x: &IdealElement) -> Result<f64> {
    Ok((bipartite_det(&decode(x)?).norm() - 0.5).abs())
}

fn charge_conjugation(cfg: &Config) -> Result<Vec<Check>> {
    let c = charge_conjugation_op();
    let g20 = g(&[2, 0]);
    let t = |a: Multivector, b: Multivector| TensorElement::tensor_of(&[a, b]);
    let g123 = g(&[1, 0, 2, 0, 3, 0]);
    let g12 = g(&[1, 0, 2, 0]);
    let g23 = g(&[2, 0, 3, 0]);
    // (input, algebraic image, image in the simplest representation)
    let table = [
        (pair(3, 3), t(g20.clone(), g23.clone()).scale(-1.0), pair(1, 1)),
        (pair(1, 1), t(g123.clone(), g12.clone()), pair(3, 3).scale(-1.0)),
        (pair(3, 1), t(g20, g12), pair(1, 3).scale(-1.0)),
        (pair(1, 3), t(g123, g23).scale(-1.0), pair(3, 1)),
    ];
    let mut alg: f64 = 0.0;
    let mut dec: f64 = 0.0;
    let mut oracle: f64 = 0.0;
    for (input, image, simple) in table {
        let got = apply_gate(&c, &ideal(input)?)?;
        alg = alg.max(got.body().max_abs_diff(ideal(image)?.body()));
        let want = decode(&ideal(simple)?)?;
        dec = dec.max(decode(&got)?.max_abs_diff(&want));
        oracle = oracle.max(decode_via_rep(&got)?.max_abs_diff(&want));
    }
    let bells = [
        (bell(pair(3, 3), pair(1, 1), 1.0)?, bell(pair(1, 1), pair(3, 3), -1.0)?),
        (bell(pair(3, 1), pair(1, 3), 1.0)?, bell(pair(3, 1), pair(1, 3), -1.0)?),
    ];
    let (mut bell_gap, mut det): (f64, f64) = (0.0, 0.0);
    for (input, want) in &bells {
        let got = apply_gate(&c, input)?;
        bell_gap = bell_gap.max(decode(&got)?.max_abs_diff(&decode(want)?));
        det = det.max(det_gap(&got)?);
    }
    let tol = cfg.tol(1e-12);
    let ct = TensorElement::tensor_of(&[&g(&[3, 0]) * &g(&[2, 0]), g(&[2, 0])]);
    Ok(vec![
        Check::exact("C = γ3γ0γ2γ0 ⊗ γ2γ0", c.max_abs_diff(&ct), c.to_string()),
        Check::exact("C† = -C", c.adjoint_all().max_abs_diff(&c.scale(-1.0)), ""),
        Check::exact("C on basis states, algebraic form", alg, "4 actions"),
        Check::exact("C on basis states, equivalent representation", dec, "4 actions compared after decoding"),
        Check::exact("C on basis states, matrix oracle", oracle, "4 actions"),
        Check::within("C on Bell combinations", bell_gap, tol, "2 actions compared after decoding"),
        Check::within("C keeps Bell images maximally entangled", det, tol, "residual is ||det| - 1/2|"),
    ])
}

fn time_reversal(cfg: &Config) -> Result<Vec<Check>> {
    let tr = time_reversal_op();
    let phase = one_iota();
    let table = [
        (pair(3, 3), &phase * &pair(3, 1)),
        (pair(1, 1), (&phase * &pair(1, 3)).scale(-1.0)),
        (pair(3, 1), (&phase * &pair(3, 3)).scale(-1.0)),
        (pair(1, 3), &phase * &pair(1, 1)),
    ];
    let mut basis: f64 = 0.0;
    for (input, image) in table {
        basis = basis.max(apply_gate(&tr, &ideal(input)?)?.body().max_abs_diff(ideal(image)?.body()));
    }
    let bells = [
        (bell(pair(3, 3), pair(1, 1), 1.0)?, bell(&phase * &pair(3, 1), &phase * &pair(1, 3), -1.0)?),
        (bell(pair(3, 1), pair(1, 3), 1.0)?, bell(&phase * &pair(1, 1), &phase * &pair(3, 3), -1.0)?),
    ];
    let (mut bell_gap, mut det): (f64, f64) = (0.0, 0.0);
    for (input, want) in &bells {
        let got = apply_gate(&tr, input)?;
        bell_gap = bell_gap.max(got.body().max_abs_diff(want.body()));
        det = det.max(det_gap(&got)?);
    }
    let tol = cfg.tol(1e-12);
    Ok(vec![
        Check::exact("T† = T", tr.adjoint_all().max_abs_diff(&tr), ""),
        Check::exact("T on basis states", basis, "4 actions, each with a (1⊗ι) phase"),
        Check::within("T on Bell combinations", bell_gap, tol, "2 actions"),
        Check::within("T keeps Bell images maximally entangled", det, tol, "residual is ||det| - 1/2|"),
    ])
}

fn operator_unitarity(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "relativistic/unitary");
    let phi = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
    let ops =
        [("C", charge_conjugation_op()), ("T", time_reversal_op()), ("Φ_P", parity_op(phi)), ("Γ5", chirality_op())];
    let mut out = Vec::new();
    for (name, x) in ops {
        match unitary_sign(&x)? {
            Some(s) => out.push(Check::within(
                format!("{name} {name}† = 1⊗1"),
                (s - 1.0).abs(),
                cfg.tol(1e-12),
                format!("sign {s}"),
            )),
            None => out.push(Check::failed(format!("{name} {name}† = 1⊗1"), "product is not a scalar")),
        }
        let rev = x.try_mul(&x.reverse_all())?;
        let details = match rev.as_scalar() {
            Some(s) => format!("x·reverse_all(x) = {s}"),
            None => format!("x·reverse_all(x) = {rev} is not a scalar"),
        };
        out.push(Check::reported(format!("{name}·reverse_all({name})"), 0.0, details));
    }
    Ok(out)
}

fn theta_bracket(_: &Config) -> Result<Vec<Check>> {
    let want = [[0.0, 2.0, 0.0, 0.0], [2.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 2.0], [0.0, 0.0, 2.0, 0.0]];
    let got = bracket_table()?;
    let worst = (0..16).map(|k| (got[k / 4][k % 4] - want[k / 4][k % 4]).abs()).fold(0.0, f64::max);
    let mut out = vec![Check::exact("theta bracket table", worst, "16 ordered pairs")];
    let full: Vec<String> = symmetrized_table()?
        .into_iter()
        .filter(|(_, v)| v.as_scalar().is_none())
        .map(|(k, v)| format!("{k} = {v}"))
        .collect();
    out.push(Check::reported("unprojected symmetrized products", full.len() as f64, full.join("; ")));
    Ok(out)
}

fn theta_actions(_: &Config) -> Result<Vec<Check>> {
    let t = theta_elements();
    let half = |x: &Multivector| TensorElement::tensor_of(&[x.scale(0.5)]);
    let one = |x: Multivector| ideal(TensorElement::tensor_of(&[x]));
    let p30 = one(g(&[3, 0]))?;
    let p10 = one(g(&[1, 0]))?;
    let cases = [
        ("½θ1 γ3γ0P = γ3γ0P", half(&t.theta1), &p30, p30.clone()),
        ("½θ̄1 γ3γ0P = 0", half(&t.theta1_bar), &p30, p30.scale(0.0)),
        ("½θ2 γ1γ0P = γ3γ0P", half(&t.theta2), &p10, p30.clone()),
        ("½θ̄2 γ3γ0P = -γ1γ0P", half(&t.theta2_bar), &p30, p10.scale(-1.0)),
    ];
    let mut out = Vec::new();
    for (name, op, input, want) in cases {
        out.push(Check::exact(name, apply_gate(&op, input)?.body().max_abs_diff(want.body()), ""));
    }
    let wants =
        [[[2.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 2.0]], [[0.0, 0.0], [2.0, 0.0]], [[0.0, -2.0], [0.0, 0.0]]];
    for ((name, _), (got, want)) in t.all().iter().zip(theta_matrix_rep()?.iter().zip(wants)) {
        let worst = (0..4).map(|k| (got[k / 2][k % 2] - want[k / 2][k % 2]).abs()).fold(0.0, f64::max);
        out.push(Check::exact(format!("matrix of {name}"), worst, "basis {γ3γ0P, γ1γ0P}, row j = image of basis j"));
    }
    Ok(out)
}

fn c_hat(cfg: &Config) -> Result<Vec<Check>> {
    let c = charge_conj_hat();
    let expected = [[0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0], [-1.0, 0.0, 0.0, 0.0], [0.0, -1.0, 0.0, 0.0]];
    let action = action_matrix(&c)?;
    let rep = rep_tensor(&c)?;
    let (mut act, mut tr): (f64, f64) = (0.0, 0.0);
    for i in 0..4 {
        for j in 0..4 {
            act = act.max((action[i][j] - expected[i][j]).abs());
            tr = tr.max((rep[(j, i)] - expected[i][j]).norm());
        }
    }
    let bells = [
        (bell(pair(3, 3), pair(1, 1), 1.0)?, bell(pair(1, 3), pair(3, 1), -1.0)?),
        (bell(pair(3, 1), pair(1, 3), 1.0)?, bell(pair(1, 1), pair(3, 3), -1.0)?),
    ];
    let mut gap: f64 = 0.0;
    for (input, want) in &bells {
        gap = gap.max(decode(&apply_gate(&c, input)?)?.max_abs_diff(&decode(want)?));
    }
    Ok(vec![
        Check::exact("reverse_all(Ĉ) = -Ĉ", c.reverse_all().max_abs_diff(&c.scale(-1.0)), c.to_string()),
        Check::exact("Ĉ† = -Ĉ", c.adjoint_all().max_abs_diff(&c.scale(-1.0)), ""),
        Check::exact("matrix of Ĉ", act, "row j = image of |j⟩, same convention as the theta matrices"),
        Check::exact("Pauli rep of Ĉ is the transpose of its matrix", tr, "column convention"),
        Check::within("Ĉ on Bell combinations", gap, cfg.tol(1e-12), "2 actions compared after decoding"),
    ])
}

fn families(_: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let signature = |s: &[Option<f64>]| {
        s.iter().map(|x| x.map_or("?".to_string(), |v| format!("{v:+}"))).collect::<Vec<_>>().join(" ")
    };
    let c07 = cl07_generators().check();
    let bad_sq = c07.measured_signature.iter().filter(|s| **s != Some(-1.0)).count();
    out.push(Check::exact("cl07 squares are -1", bad_sq as f64, signature(&c07.measured_signature)));
    out.push(Check::exact(
        "cl07 pairs anticommute",
        c07.offending_pairs.len() as f64,
        format!("{} pairs checked", c07.pairs_checked),
    ));
    let c101 = cl101_generators().check();
    let plus = c101.measured_signature.iter().filter(|s| **s == Some(1.0)).count();
    let minus = c101.measured_signature.iter().filter(|s| **s == Some(-1.0)).count();
    out.push(Check::expect(
        "cl101 signature ten +1, one -1",
        (plus, minus) == (10, 1),
        (plus as f64 - 10.0).abs() + (minus as f64 - 1.0).abs(),
        signature(&c101.measured_signature),
    ));
    out.push(Check::exact(
        "cl101 pairs anticommute",
        c101.offending_pairs.len() as f64,
        format!("{} pairs checked", c101.pairs_checked),
    ));
    let variant = cl101_generators_with_iota_g30().check();
    out.push(Check::reported(
        "cl101 with tenth generator ιγ3γ0⊗1⊗1⊗1⊗1",
        variant.offending_pairs.len() as f64,
        format!("signature {}; commuting pairs {:?}", signature(&variant.measured_signature), variant.offending_pairs),
    ));
    Ok(out)
}

fn antisym_collapse(_: &Config) -> Result<Vec<Check>> {
    let f = cl101_generators();
    let ordered = |idx: &[usize]| {
        idx.iter().fold(TensorElement::identity(f.elements[0].factors().to_vec()), |acc, &i| &acc * &f.elements[i])
    };
    let mut out = Vec::new();
    for l in [2usize, 5] {
        let mut worst: f64 = 0.0;
        let mut count = 0;
        let mut idx: Vec<usize> = (0..l).collect();
        loop {
            worst = worst.max(antisym_gamma(&f, &idx)?.0.max_abs_diff(&ordered(&idx)));
            count += 1;
            // next combination in lexicographic order
            let Some(k) = (0..l).rev().find(|&k| idx[k] < f.len() - l + k) else { break };
            idx[k] += 1;
            for m in k + 1..l {
                idx[m] = idx[m - 1] + 1;
            }
        }
        out.push(Check::exact(format!("Γ_[μ1..μ{l}] = ordered product"), worst, format!("{count} index sets")));
    }
    let (z, flag) = antisym_gamma(&f, &[2, 2])?;
    out.push(Check::expect("repeated index gives flagged zero", flag && z.is_zero(), z.norm1(), ""));
    Ok(out)
}

fn m_basis(_: &Config) -> Result<Vec<Check>> {
    let r = verify_m_algebra()?;
    let sign = |s: Option<f64>| s.map_or("none".to_string(), |v| format!("{v:+}"));
    let p = 10u32;
    let xi_want = if (p - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let alpha_want = if (p * (p - 1) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    let relations_hold = r.xi == Some(xi_want) && r.alpha == Some(alpha_want);
    Ok(vec![
        Check::expect(
            "basis counts 11/55/462",
            r.counts == [11, 55, 462] && r.total == 528,
            (r.total as f64 - 528.0).abs(),
            format!("{:?}, total {}", r.counts, r.total),
        ),
        Check::expect(
            "tensor rank of the 528 elements",
            r.tensor_rank == 528,
            (r.tensor_rank as f64 - 528.0).abs(),
            format!("rank {}", r.tensor_rank),
        ),
        Check::reported(
            "Ĉ5 from antisymmetric generators",
            if relations_hold { 0.0 } else { 1.0 },
            format!(
                "Ĉ5 = {} (generators {:?}); ξ = {}, α = {}; (-1)^(p-1) = {xi_want:+}, (-1)^(p(p-1)/2) = {alpha_want:+}",
                r.charge_conjugation,
                r.charge_conjugation_from,
                sign(r.xi),
                sign(r.alpha)
            ),
        ),
        Check::reported(
            "transpose-symmetric rep matrices",
            (r.symmetric_dimension as f64 - r.symmetric_count as f64).abs(),
            format!("{} symmetric, {} antisymmetric of {}", r.symmetric_count, r.antisymmetric_count, r.total),
        ),
        Check::reported(
            "complex rank against symmetric 32×32 matrices",
            (r.symmetric_dimension as f64 - r.complex_rank as f64).abs(),
            format!("rank {} vs dimension {}", r.complex_rank, r.symmetric_dimension),
        ),
        Check::reported(
            "γ3γ0⊗1⊗1⊗1⊗1 as charge conjugation",
            0.0,
            format!(
                "{}: ξ = {}, α = {}",
                r.first_factor_charge_conjugation,
                sign(r.first_factor_xi),
                sign(r.first_factor_alpha)
            ),
        ),
    ])
}
