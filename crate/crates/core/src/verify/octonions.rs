use super::{Config, Group};
use crate::error::Result;
use crate::octonion::{
    associator, octonionic_cl101, oqubit_pattern_check, structure_constant, Octonion, OctonionMatrix,
    OctonionQubitPair, Pattern,
};
use crate::random::{octonion, stream};
use crate::report::Check;

pub(super) fn octonion_groups() -> Vec<(&'static str, Group)> {
    vec![("norm", norm_checks), ("table", table_checks), ("patterns", patterns), ("generators", generators)]
}

fn norm_checks(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "octonion/norm");
    let (mut mult, mut alt, mut zero): (f64, f64, usize) = (0.0, 0.0, 0);
    for _ in 0..1000 {
        let a = octonion(&mut rng);
        let b = octonion(&mut rng);
        let ab = a * b;
        mult = mult.max((ab.norm() - a.norm() * b.norm()).abs() / (a.norm() * b.norm()));
        let left = ((a * a) * b - a * (a * b)).norm();
        let right = ((a * b) * b - a * (b * b)).norm();
        alt = alt.max(left).max(right);
        if ab.is_zero() {
            zero += 1;
        }
    }
    let witness = associator(&Octonion::unit(1), &Octonion::unit(2), &Octonion::unit(4));
    Ok(vec![
        Check::within("|ab| = |a||b|", mult, cfg.tol(1e-10), "1000 random pairs, relative"),
        Check::within("alternativity", alt, cfg.tol(1e-12), "(aa)b = a(ab) and (ab)b = a(bb), 1000 pairs"),
        Check::exact("no zero divisors among random pairs", zero as f64, "1000 pairs"),
        Check::exact("associator (o1, o2, o4) has norm 2", (witness.norm() - 2.0).abs(), format!("= {witness}")),
    ])
}

fn table_checks(_: &Config) -> Result<Vec<Check>> {
    let (mut anti, mut unit_zero, mut squares): (f64, usize, f64) = (0.0, 0, 0.0);
    for i in 1..8 {
        squares = squares.max((Octonion::unit(i) * Octonion::unit(i) + Octonion::ONE).norm());
        for j in 1..8 {
            if (Octonion::unit(i) * Octonion::unit(j)).is_zero() {
                unit_zero += 1;
            }
            for k in 1..8 {
                let c = structure_constant(i, j, k);
                anti = anti.max((c + structure_constant(j, i, k)).abs()).max((c - structure_constant(j, k, i)).abs());
            }
        }
    }
    Ok(vec![
        Check::exact("o_i² = -1", squares, "7 units"),
        Check::exact("structure constants totally antisymmetric", anti, "343 index triples"),
        Check::exact("no zero products among units", unit_zero as f64, "49 pairs"),
    ])
}

fn patterns(cfg: &Config) -> Result<Vec<Check>> {
    let mut rng = stream(cfg.seed, "octonion/pattern");
    let z = Octonion::ZERO;
    let (mut wrong_diag, mut wrong_single, mut wrong_product) = (0usize, 0usize, 0usize);
    for k in 0..200 {
        let (a, b) = (octonion(&mut rng), octonion(&mut rng));
        for s in [[a, z, z, b], [z, a, b, z]] {
            if oqubit_pattern_check(&OctonionQubitPair::new(s))? != Pattern::Entangled {
                wrong_diag += 1;
            }
        }
        let mut single = [z; 4];
        single[k % 4] = a;
        if oqubit_pattern_check(&OctonionQubitPair::new(single))? != Pattern::PossiblySeparable {
            wrong_single += 1;
        }
        let p = OctonionQubitPair::product([a, octonion(&mut rng)], [b, octonion(&mut rng)]);
        if oqubit_pattern_check(&p)? != Pattern::PossiblySeparable {
            wrong_product += 1;
        }
    }
    Ok(vec![
        Check::exact(
            "(ζa,0,0,ζb) and (0,ζa,ζb,0) are entangled",
            wrong_diag as f64,
            "400 states; residual counts misses",
        ),
        Check::exact("one nonzero component is possibly separable", wrong_single as f64, "200 states"),
        Check::exact("product states are possibly separable", wrong_product as f64, "200 states"),
    ])
}

fn generators(_: &Config) -> Result<Vec<Check>> {
    let gens = octonionic_cl101();
    let n = gens.len();
    let (mut squares, mut anti, mut assoc): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut signature = Vec::new();
    for (i, (name, a)) in gens.iter().enumerate() {
        let sq = a.try_mul(a)?;
        let sign = if name == "0" { -1.0 } else { 1.0 };
        signature.push(format!("{name}:{sign:+}"));
        squares = squares.max(sq.max_abs_diff(&OctonionMatrix::identity(4).scale(sign)));
        for (_, b) in &gens[i + 1..] {
            anti = anti.max(a.try_mul(b)?.try_add(&b.try_mul(a)?)?.max_abs_diff(&OctonionMatrix::zeros(4)));
        }
        for (_, b) in &gens {
            for (_, c) in &gens {
                assoc = assoc.max(a.try_mul(b)?.try_mul(c)?.max_abs_diff(&a.try_mul(&b.try_mul(c)?)?));
            }
        }
    }
    Ok(vec![
        Check::exact("octonionic generator squares", squares, signature.join(" ")),
        Check::exact("octonionic generators anticommute", anti, format!("{} pairs", n * (n - 1) / 2)),
        Check::reported("matrix product associator, max entry", assoc, format!("{} triples", n * n * n)),
    ])
}
