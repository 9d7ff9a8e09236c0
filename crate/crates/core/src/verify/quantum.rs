use rand::Rng;

use super::{Config, Group};
use crate::algebra::commutator;
use crate::clifford::{Blade, Multivector, Signature};
use crate::error::{Error, Result};
use crate::gates::{
    catalog, cnot_closed_form, cnot_from_exponentials, lift_matrix, synthesize, u_generator_basis, x_closed_form,
    x_from_exponentials, CATALOG, GATE_ALPHA, GATE_THETA,
};
use crate::matrix::{rank_c, rep_tensor, ComplexMatrix, C64};
use crate::random::{dyadic_tensor, state, stream, unitary};
use crate::relativistic::iso_zeta;
use crate::report::Check;
use crate::spinor::{
    apply_gate, decode, decode_via_rep, encode, encode_in, ideal_basis, primitive_idempotent, IdealElement, QubitState,
};
use crate::tensor::{rank_of_set, TensorElement};

pub(super) fn spinor() -> Vec<(&'static str, Group)> {
    vec![
        ("idempotents", idempotents),
        ("ideal", ideal_dimension),
        ("correspondence", correspondence),
        ("decode", decode_oracle),
        ("intertwining", intertwining),
        ("encode", encode_round_trip),
    ]
}

pub(super) fn gates() -> Vec<(&'static str, Group)> {
    vec![
        ("basis", generator_basis),
        ("commutators", commutator_table),
        ("x", x_gate),
        ("cnot", cnot_gate),
        ("synthesis", synthesis_round_trip),
        ("catalog", catalog_gates),
    ]
}

/// Random element of the n-factor ideal; Cl(1,3) representatives keep
/// only even blades.
fn random_ideal(rng: &mut impl Rng, sig: Signature, n: usize) -> Result<IdealElement> {
    loop {
        let t = dyadic_tensor(rng, &vec![sig; n], 6);
        let keep = t.terms().iter().filter(|(k, _)| sig == Signature::cl30() || k.iter().all(|b| b.grade() % 2 == 0));
        let t = TensorElement::from_terms(vec![sig; n], keep.map(|(k, c)| (k.clone(), *c)).collect::<Vec<_>>());
        let x = IdealElement::from_representative(t)?;
        if !x.body().is_zero() {
            return Ok(x);
        }
    }
}

fn idempotents(_: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for sig in [Signature::cl30(), Signature::cl13()] {
        let e = primitive_idempotent(sig)?;
        out.push(Check::exact(format!("idempotent {sig}"), (&e * &e).max_abs_diff(&e), ""));
    }
    let eps = primitive_idempotent(Signature::cl30())?;
    let p = primitive_idempotent(Signature::cl13())?;
    out.push(Check::exact("ζ(ε) = P", iso_zeta(&eps)?.max_abs_diff(&p), ""));
    Ok(out)
}

fn ideal_dimension(_: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for sig in [Signature::cl30(), Signature::cl13()] {
        let idem = primitive_idempotent(sig)?;
        let multiples: Vec<TensorElement> = (0..sig.blade_count() as u32)
            .map(Blade)
            .filter(|b| sig == Signature::cl30() || b.grade() % 2 == 0)
            .map(|b| TensorElement::tensor_of(&[&Multivector::from_blade(sig, b, 1.0) * &idem]))
            .collect();
        let rank = rank_of_set(&multiples)?;
        out.push(Check::expect(
            format!("left ideal dimension {sig}"),
            rank == 4,
            (rank as f64 - 4.0).abs(),
            format!("rank {rank} over {} left multiples", multiples.len()),
        ));
    }
    Ok(out)
}

fn correspondence(_: &Config) -> Result<Vec<Check>> {
    let i = C64::new(0.0, 1.0);
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    let want = [[one, zero], [i, zero], [zero, one], [zero, i]];
    let mut out = Vec::new();
    for sig in [Signature::cl30(), Signature::cl13()] {
        let mut worst: f64 = 0.0;
        for (b, w) in ideal_basis(sig)?.into_iter().zip(want) {
            let x = IdealElement::from_body(TensorElement::tensor_of(&[b]))?;
            worst = worst.max(decode(&x)?.max_abs_diff(&QubitState::new(w.to_vec())?));
        }
        out.push(Check::exact(format!("basis ↔ |0⟩, i|0⟩, |1⟩, i|1⟩ in {sig}"), worst, ""));
    }
    let zero_state = encode(&QubitState::basis(1, 0));
    out.push(Check::expect(
        "encode |0⟩ = e3 ε",
        zero_state == IdealElement::parse("e3 ε")?,
        0.0,
        zero_state.to_string(),
    ));
    let outside = TensorElement::parse_uniform(Signature::cl30(), "1 e2⊗e2")?;
    let rejected = matches!(IdealElement::from_body(outside), Err(Error::NotInIdeal { .. }));
    out.push(Check::expect("e2⊗e2 rejected as ideal element", rejected, 0.0, ""));
    Ok(out)
}

fn decode_oracle(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "spinor/decode");
    let mut worst: f64 = 0.0;
    for k in 0..200 {
        let sig = if k % 2 == 0 { Signature::cl30() } else { Signature::cl13() };
        let x = random_ideal(&mut rng, sig, 1 + k % 3)?;
        worst = worst.max(decode(&x)?.max_abs_diff(&decode_via_rep(&x)?));
    }
    Ok(vec![Check::within("decode = first column of rep", worst, cfg.tol(1e-12), "200 ideal elements, 1-3 factors")])
}

fn intertwining(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "spinor/intertwine");
    let mut worst: f64 = 0.0;
    for k in 0..200 {
        let n = 1 + k % 3;
        let x = random_ideal(&mut rng, Signature::cl30(), n)?;
        let u = dyadic_tensor(&mut rng, &vec![Signature::cl30(); n], 6);
        let lhs = decode(&apply_gate(&u, &x)?)?;
        let rhs = rep_tensor(&u)?.apply(decode(&x)?.amplitudes())?;
        worst = worst.max(lhs.max_abs_diff(&QubitState::new(rhs)?));
    }
    Ok(vec![Check::within("decode(u x) = rep(u) decode(x)", worst, cfg.tol(1e-12), "200 pairs")])
}

fn encode_round_trip(cfg: &Config) -> Result<Vec<Check>> {
    let tol = cfg.tol(1e-12);
    let mut rng = stream(cfg.seed, "spinor/encode");
    let (mut back, mut canon, mut proj): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for k in 0..200 {
        let n = 1 + k % 3;
        let sig = if k % 2 == 0 { Signature::cl30() } else { Signature::cl13() };
        let s = state(&mut rng, n);
        let x = encode_in(sig, &s)?;
        back = back.max(decode(&x)?.max_abs_diff(&s));
        canon = canon.max(encode_in(sig, &decode(&x)?)?.body().max_abs_diff(x.body()));
        let y = random_ideal(&mut rng, sig, n)?;
        let py = encode_in(sig, &decode(&y)?)?;
        let ppy = encode_in(sig, &decode(&py)?)?;
        proj = proj.max(ppy.body().max_abs_diff(py.body())).max(decode(&py)?.max_abs_diff(&decode(&y)?));
    }
    Ok(vec![
        Check::within("decode(encode s) = s", back, tol, "200 random states"),
        Check::within("encode∘decode = id on the canonical subspace", canon, tol, "200 encoded states"),
        Check::within("encode∘decode is a projection on the ideal", proj, tol, "200 random ideal elements"),
    ])
}

fn generator_basis(_: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let b = u_generator_basis(n)?;
        let want = 4usize.pow(n as u32);
        let rank = rank_of_set(&b.elements)?;
        let images: Vec<ComplexMatrix> = b.elements.iter().map(rep_tensor).collect::<Result<_>>()?;
        let crank = rank_c(&images)?;
        let anti = b.elements.iter().filter(|g| g.reverse_all() != g.scale(-1.0)).count();
        out.push(Check::expect(
            format!("u(2^{n}) tensor rank"),
            rank == want,
            (rank as f64 - want as f64).abs(),
            format!("rank {rank} of {}", b.elements.len()),
        ));
        out.push(Check::expect(
            format!("u(2^{n}) rep rank"),
            crank == want,
            (crank as f64 - want as f64).abs(),
            format!("complex rank {crank}"),
        ));
        out.push(Check::exact(format!("u(2^{n}) reverse_all(g) = -g"), anti as f64, "residual counts violations"));
    }
    Ok(out)
}

/// Number of `items` outside the real span of `span`.
fn escaping(span: &[TensorElement], items: impl IntoIterator<Item = TensorElement>) -> Result<usize> {
    let base = rank_of_set(span)?;
    let mut n = 0;
    for x in items {
        let mut with = span.to_vec();
        with.push(x);
        if rank_of_set(&with)? != base {
            n += 1;
        }
    }
    Ok(n)
}

fn commutator_table(_: &Config) -> Result<Vec<Check>> {
    let s = Signature::cl30();
    let e = |l: &[u32]| TensorElement::tensor_of(&[Multivector::product_of(s, l)]);
    let (s12, s23, s31, s123) = (e(&[1, 2]), e(&[2, 3]), e(&[3, 1]), e(&[1, 2, 3]));
    let mut out = vec![
        Check::exact("[σ1σ2, σ2σ3] = -2σ3σ1", commutator(&s12, &s23)?.max_abs_diff(&s31.scale(-2.0)), ""),
        Check::exact("[σ1σ2, σ3σ1] = 2σ2σ3", commutator(&s12, &s31)?.max_abs_diff(&s23.scale(2.0)), ""),
        Check::exact("[σ2σ3, σ3σ1] = -2σ1σ2", commutator(&s23, &s31)?.max_abs_diff(&s12.scale(-2.0)), ""),
    ];
    let basis = u_generator_basis(1)?.elements;
    let central = basis.iter().map(|g| commutator(&s123, g).map(|c| c.norm1())).collect::<Result<Vec<_>>>()?;
    out.push(Check::exact("σ1σ2σ3 central", central.into_iter().fold(0.0, f64::max), ""));
    // products close on the bivectors; σ123 times a bivector is a vector
    let bivectors = [s12, s23, s31];
    let mut span = bivectors.to_vec();
    span.push(TensorElement::identity(vec![s]));
    let escapes = escaping(&span, bivectors.iter().flat_map(|a| bivectors.iter().map(move |b| a * b)))?;
    out.push(Check::exact(
        "products of su(2) bivectors lie in span{1, σ1σ2, σ2σ3, σ3σ1}",
        escapes as f64,
        "9 products; residual counts escapes",
    ));
    let brackets = basis.iter().flat_map(|a| basis.iter().map(move |b| commutator(a, b)));
    let escapes = escaping(&basis, brackets.collect::<Result<Vec<_>>>()?)?;
    out.push(Check::exact(
        "u(2) commutators lie in span{basis}",
        escapes as f64,
        "16 commutators; residual counts escapes",
    ));
    Ok(out)
}

fn x_gate(_: &Config) -> Result<Vec<Check>> {
    let built = x_from_exponentials(GATE_ALPHA, GATE_THETA)?;
    let e1 = TensorElement::tensor_of(&[Multivector::generator(Signature::cl30(), 1)]);
    let (x, _) = catalog("x").expect("catalog has x");
    let flipped = decode(&apply_gate(&built, &encode(&QubitState::basis(1, 0)))?)?;
    Ok(vec![
        Check::exact("exp(-π/2 σ123) exp(π/2 σ23) = σ1", built.max_abs_diff(&e1), ""),
        Check::exact("closed form of X is σ1", x_closed_form().max_abs_diff(&e1), ""),
        Check::exact("lift(X) = σ1", lift_matrix(&x, 1)?.max_abs_diff(&e1), ""),
        Check::exact("σ1 |0⟩ = |1⟩", flipped.max_abs_diff(&QubitState::basis(1, 1)), ""),
    ])
}

fn cnot_gate(_: &Config) -> Result<Vec<Check>> {
    let closed = cnot_closed_form();
    let built = cnot_from_exponentials(GATE_ALPHA, GATE_THETA)?;
    let (m, _) = catalog("cnot").expect("catalog has cnot");
    let mut out = vec![
        Check::exact(
            "CNOT from exponentials = ½(1+σ3)⊗1 + ½(1-σ3)⊗σ1",
            built.max_abs_diff(&closed),
            closed.to_string(),
        ),
        Check::exact("lift(CNOT) = closed form", lift_matrix(&m, 2)?.max_abs_diff(&closed), ""),
    ];
    for (from, to) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
        let got = apply_gate(&closed, &encode(&QubitState::basis(2, from)))?;
        let want = encode(&QubitState::basis(2, to));
        out.push(Check::exact(format!("CNOT |{from:02b}⟩ = |{to:02b}⟩"), got.body().max_abs_diff(want.body()), ""));
    }
    Ok(out)
}

fn synthesis_round_trip(cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (n, count) in [(1, 50), (2, 50), (3, 10)] {
        let mut rng = stream(cfg.seed, &format!("gates/synth/{n}"));
        let mut worst: f64 = 0.0;
        for _ in 0..count {
            let u = unitary(&mut rng, 1 << n);
            let s = synthesize(&u, n)?;
            worst = worst.max(s.residual);
        }
        let name = format!("synthesis round trip n={n}");
        let details = format!("{count} random unitaries");
        out.push(if n < 3 {
            Check::within(name, worst, cfg.tol(1e-8), details)
        } else {
            Check::reported(name, worst, details)
        });
    }
    Ok(out)
}

fn catalog_gates(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "gates/catalog");
    let mut out = Vec::new();
    for name in CATALOG {
        let (m, n) = catalog(name).expect("catalog entry");
        let s = synthesize(&m, n)?;
        let branch = if s.branch_ambiguous { "eigenvalue -1, +π branch" } else { "principal branch" };
        out.push(Check::within(format!("synthesize {name}"), s.residual, cfg.tol(1e-8), branch));
        let lifted = lift_matrix(&m, n)?;
        let psi = state(&mut rng, n);
        let via_algebra = decode(&apply_gate(&lifted, &encode(&psi))?)?;
        let via_matrix = QubitState::new(m.apply(psi.amplitudes())?)?;
        out.push(Check::within(
            format!("apply {name} through the algebra"),
            via_algebra.max_abs_diff(&via_matrix),
            cfg.tol(1e-12),
            "",
        ));
    }
    Ok(out)
}
