use super::{Config, Group};
use crate::algebra::susy_bracket;
use crate::clifford::{Blade, Multivector, Signature};
use crate::error::Result;
use crate::matrix::{blade_rep_cl30, expm, logm_unitary, rep_cl30, rep_tensor};
use crate::random::{bounded_multivector, dyadic_multivector, dyadic_tensor, stream, unitary};
use crate::report::Check;
use crate::tensor::TensorElement;

pub(super) fn core() -> Vec<(&'static str, Group)> {
    vec![
        ("relations", relations),
        ("associativity", associativity),
        ("reversion", reversion),
        ("exponential", exponential_oracle),
        ("text", text_round_trip),
    ]
}

pub(super) fn tensor() -> Vec<(&'static str, Group)> {
    vec![
        ("associativity", tensor_associativity),
        ("reversion", tensor_reversion),
        ("bracket", bracket_symmetry),
        ("kronecker", kronecker_oracle),
    ]
}

pub(super) fn rep() -> Vec<(&'static str, Group)> {
    vec![
        ("homomorphism", homomorphism),
        ("adjoint", reversion_adjoint),
        ("exponential", exponential_oracle),
        ("logm", logm_round_trip),
    ]
}

fn relations(_: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for sig in [Signature::cl30(), Signature::cl13()] {
        let n = sig.dim();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (Multivector::generator(sig, sig.label(i)), Multivector::generator(sig, sig.label(j)));
                let want = if i == j { 2.0 * sig.square(i) } else { 0.0 };
                worst = worst.max((&(&a * &b) + &(&b * &a)).max_abs_diff(&Multivector::scalar(sig, want)));
            }
        }
        out.push(Check::exact(format!("generator anticommutators {sig}"), worst, format!("{} pairs", n * n)));
    }
    Ok(out)
}

fn associativity(cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for sig in [Signature::cl30(), Signature::cl13()] {
        let mut rng = stream(cfg.seed, &format!("core/assoc/{sig}"));
        let mut worst: f64 = 0.0;
        for _ in 0..1000 {
            let a = dyadic_multivector(&mut rng, sig, 4);
            let b = dyadic_multivector(&mut rng, sig, 4);
            let c = dyadic_multivector(&mut rng, sig, 4);
            worst = worst.max((&(&a * &b) * &c).max_abs_diff(&(&a * &(&b * &c))));
        }
        out.push(Check::exact(format!("associativity {sig}"), worst, "1000 dyadic triples"));
    }
    Ok(out)
}

fn reversion(cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for sig in [Signature::cl30(), Signature::cl13()] {
        let mut rng = stream(cfg.seed, &format!("core/rev/{sig}"));
        let (mut inv, mut anti): (f64, f64) = (0.0, 0.0);
        for _ in 0..1000 {
            let a = dyadic_multivector(&mut rng, sig, 5);
            let b = dyadic_multivector(&mut rng, sig, 5);
            inv = inv.max(a.reverse().reverse().max_abs_diff(&a));
            anti = anti.max((&a * &b).reverse().max_abs_diff(&(&b.reverse() * &a.reverse())));
        }
        out.push(Check::exact(format!("reversion involutive {sig}"), inv, "1000 elements"));
        out.push(Check::exact(format!("reversion anti-automorphism {sig}"), anti, "1000 pairs"));
    }
    Ok(out)
}

fn exponential_oracle(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "exp");
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let a = bounded_multivector(&mut rng, Signature::cl30(), 4.0);
        let lhs = rep_cl30(&crate::algebra::exponential(&a, 1e-15)?)?;
        worst = worst.max(lhs.distance(&expm(&rep_cl30(&a)?)));
    }
    Ok(vec![Check::within("rep(exp a) = expm(rep a)", worst, cfg.tol(1e-10), "200 elements, norm <= 4")])
}

fn text_round_trip(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "core/text");
    let mut bad = 0usize;
    for i in 0..400 {
        let sig = if i % 2 == 0 { Signature::cl30() } else { Signature::cl13() };
        let a = dyadic_multivector(&mut rng, sig, 5);
        if Multivector::parse(sig, &a.to_string())? != a {
            bad += 1;
        }
    }
    Ok(vec![Check::exact("parse(display(a)) = a", bad as f64, "400 elements; residual counts mismatches")])
}

fn tensor_associativity(cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for factors in [vec![Signature::cl30(); 2], vec![Signature::cl13(); 3]] {
        let mut rng = stream(cfg.seed, &format!("tensor/assoc/{}", factors.len()));
        let mut worst: f64 = 0.0;
        for _ in 0..500 {
            let a = dyadic_tensor(&mut rng, &factors, 4);
            let b = dyadic_tensor(&mut rng, &factors, 4);
            let c = dyadic_tensor(&mut rng, &factors, 4);
            worst = worst.max(a.multiply(&b)?.multiply(&c)?.max_abs_diff(&a.multiply(&b.multiply(&c)?)?));
        }
        let label = format!("associativity {}^{}", factors[0], factors.len());
        out.push(Check::exact(label, worst, "500 dyadic triples"));
    }
    Ok(out)
}

fn tensor_reversion(cfg: &Config) -> Result<Vec<Check>> {
    let factors = vec![Signature::cl30(), Signature::cl30()];
    let mut rng = stream(cfg.seed, "tensor/rev");
    let mut worst: f64 = 0.0;
    for _ in 0..500 {
        let a = dyadic_tensor(&mut rng, &factors, 4);
        let b = dyadic_tensor(&mut rng, &factors, 4);
        worst = worst.max(a.multiply(&b)?.reverse_all().max_abs_diff(&b.reverse_all().multiply(&a.reverse_all())?));
    }
    Ok(vec![Check::exact("reverse_all(ab) = reverse_all(b) reverse_all(a)", worst, "500 pairs")])
}

fn bracket_symmetry(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "tensor/bracket");
    let mut worst: f64 = 0.0;
    for i in 0..500 {
        let factors = if i % 2 == 0 { vec![Signature::cl30(); 2] } else { vec![Signature::cl13(); 2] };
        let a = dyadic_tensor(&mut rng, &factors, 4);
        let b = dyadic_tensor(&mut rng, &factors, 4);
        worst = worst.max(susy_bracket(&a, &b)?.max_abs_diff(&susy_bracket(&b, &a)?));
    }
    Ok(vec![Check::exact("bracket(a,b) = bracket(b,a)", worst, "500 pairs")])
}

fn kronecker_oracle(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "tensor/kron");
    let mut pure: f64 = 0.0;
    let mut dense: f64 = 0.0;
    for i in 0..200 {
        let n = 2 + i % 2;
        let factors = vec![Signature::cl30(); n];
        let a = dyadic_tensor(&mut rng, &factors, 1);
        let b = dyadic_tensor(&mut rng, &factors, 1);
        pure = pure.max(rep_tensor(&a.multiply(&b)?)?.max_abs_diff(&rep_tensor(&a)?.try_mul(&rep_tensor(&b)?)?));
        let a = dyadic_tensor(&mut rng, &factors, 6);
        let b = dyadic_tensor(&mut rng, &factors, 6);
        dense = dense.max(rep_tensor(&a.multiply(&b)?)?.max_abs_diff(&rep_tensor(&a)?.try_mul(&rep_tensor(&b)?)?));
    }
    Ok(vec![
        Check::within("rep(ab) = rep(a) rep(b), pure tensors", pure, cfg.tol(1e-12), "200 pairs, 2-3 factors"),
        Check::within("rep(ab) = rep(a) rep(b), sums", dense, cfg.tol(1e-12), "200 pairs, 2-3 factors"),
    ])
}

fn homomorphism(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "rep/hom");
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let a = bounded_multivector(&mut rng, Signature::cl30(), 2.0);
        let b = bounded_multivector(&mut rng, Signature::cl30(), 2.0);
        worst = worst.max(rep_cl30(&(&a * &b))?.max_abs_diff(&rep_cl30(&a)?.try_mul(&rep_cl30(&b)?)?));
    }
    let mut ten: f64 = 0.0;
    for _ in 0..200 {
        let factors = vec![Signature::cl13(); 2];
        let even = |t: TensorElement| {
            let terms =
                t.terms().iter().filter(|(k, _)| k.iter().all(|b| b.grade() % 2 == 0)).map(|(k, c)| (k.clone(), *c));
            TensorElement::from_terms(t.factors().to_vec(), terms.collect::<Vec<_>>())
        };
        let a = even(dyadic_tensor(&mut rng, &factors, 8));
        let b = even(dyadic_tensor(&mut rng, &factors, 8));
        ten = ten.max(rep_tensor(&a.multiply(&b)?)?.max_abs_diff(&rep_tensor(&a)?.try_mul(&rep_tensor(&b)?)?));
    }
    Ok(vec![
        Check::within("rep(ab) = rep(a) rep(b)", worst, cfg.tol(1e-12), "1000 pairs in Cl(3,0)"),
        Check::within(
            "rep through ζ⁻¹ is multiplicative",
            ten,
            cfg.tol(1e-12),
            "200 even pairs in Cl(1,3)+ ⊗ Cl(1,3)+",
        ),
    ])
}

fn reversion_adjoint(cfg: &Config) -> Result<Vec<Check>> {
    let mut blades: f64 = 0.0;
    for mask in 0..8 {
        let b = Blade(mask);
        let mv = Multivector::from_blade(Signature::cl30(), b, 1.0);
        blades = blades.max(rep_cl30(&mv.reverse())?.max_abs_diff(&blade_rep_cl30(b).adjoint()));
    }
    let mut rng = stream(cfg.seed, "rep/adjoint");
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let a = bounded_multivector(&mut rng, Signature::cl30(), 2.0);
        worst = worst.max(rep_cl30(&a.reverse())?.max_abs_diff(&rep_cl30(&a)?.adjoint()));
    }
    Ok(vec![
        Check::exact("rep(reverse b) = rep(b)† on blades", blades, "8 blades"),
        Check::within("rep(reverse a) = rep(a)†", worst, cfg.tol(1e-12), "1000 elements"),
    ])
}

fn logm_round_trip(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "rep/logm");
    let mut worst: f64 = 0.0;
    for i in 0..60 {
        let u = unitary(&mut rng, 2 << (i % 3));
        worst = worst.max(expm(&logm_unitary(&u)?.log).distance(&u));
    }
    Ok(vec![Check::within("expm(logm U) = U", worst, cfg.tol(1e-9), "60 unitaries of size 2, 4, 8")])
}
