//! Octonions, 4×4 octonionic matrices for Cl(10,1), and the zero-pattern
//! entanglement test for pairs of octonionic qubits.
//!
//! Units o1..o7 multiply along the oriented Fano lines
//! (1,2,3) (1,4,5) (1,7,6) (2,4,6) (2,5,7) (3,4,7) (3,6,5):
//! `o_i o_j = o_k` going around a line, `-o_k` against it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::Serialize;

use crate::clifford::text::{write_terms, Cursor};
use crate::error::{Error, Result};

pub const FANO_LINES: [[usize; 3]; 7] = [[1, 2, 3], [1, 4, 5], [1, 7, 6], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 6, 5]];

/// Below this norm a component counts as zero.
pub const ZERO_TOL: f64 = 1e-12;

/// `table[i][j] = (s, k)` with `o_i o_j = s o_k`.
fn table() -> &'static [[(f64, usize); 8]; 8] {
    static TABLE: OnceLock<[[(f64, usize); 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[(0.0, 0); 8]; 8];
        for (i, row) in t.iter_mut().enumerate() {
            row[0] = (1.0, i);
            row[i] = if i == 0 { (1.0, 0) } else { (-1.0, 0) };
        }
        t[0] = std::array::from_fn(|i| (1.0, i));
        for [a, b, c] in FANO_LINES {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                t[x][y] = (1.0, z);
                t[y][x] = (-1.0, z);
            }
        }
        t
    })
}

/// Structure constant `C̄_ijk` for `i, j, k ∈ 1..=7`.
pub fn structure_constant(i: usize, j: usize, k: usize) -> f64 {
    if i == 0 || j == 0 || i == j || i > 7 || j > 7 {
        return 0.0;
    }
    let (s, m) = table()[i][j];
    if m == k {
        s
    } else {
        0.0
    }
}

/// `λ0 + λ1 o1 + ... + λ7 o7`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize)]
pub struct Octonion(pub [f64; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

    pub fn real(x: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = x;
        Octonion(c)
    }

    /// The unit `o_i`; `unit(0)` is 1.
    pub fn unit(i: usize) -> Self {
        assert!(i < 8, "octonion unit o{i} does not exist");
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Octonion(c)
    }

    pub fn components(&self) -> &[f64; 8] {
        &self.0
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let t = table();
        let mut out = [0.0; 8];
        for (i, a) in self.0.iter().enumerate().filter(|(_, a)| **a != 0.0) {
            for (j, b) in other.0.iter().enumerate().filter(|(_, b)| **b != 0.0) {
                let (s, k) = t[i][j];
                out[k] += s * a * b;
            }
        }
        Octonion(out)
    }

    pub fn conj(&self) -> Self {
        let mut c = self.0.map(|x| -x);
        c[0] = self.0[0];
        Octonion(c)
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Octonion(self.0.map(|x| s * x))
    }

    pub fn is_zero(&self) -> bool {
        self.norm() < ZERO_TOL
    }

    /// Parses `λ0 + λ1 o1 - λ4 o4 ...`; terms may come in any order and a
    /// bare `o3` means `1 o3`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let mut out = [0.0; 8];
        cur.skip_ws();
        let mut sign = cur.sign().unwrap_or(1.0);
        loop {
            cur.skip_ws();
            let coeff = cur.number()?;
            cur.skip_ws();
            let unit = if cur.eat("o") {
                let at = cur.pos();
                match cur.bump().and_then(|c| c.to_digit(10)) {
                    Some(d) if (1..=7).contains(&d) => d as usize,
                    _ => return Err(Error::Parse { pos: at, msg: "expected unit index 1..7 after 'o'".into() }),
                }
            } else {
                0
            };
            if coeff.is_none() && unit == 0 {
                return Err(cur.error("expected coefficient or unit"));
            }
            out[unit] += sign * coeff.unwrap_or(1.0);
            cur.skip_ws();
            if cur.at_end() {
                break;
            }
            sign = cur.sign().ok_or_else(|| cur.error("expected '+' or '-' between terms"))?;
        }
        Ok(Octonion(out))
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.0.iter().enumerate().filter(|(_, c)| **c != 0.0).map(|(i, c)| (i, *c));
        write_terms(f, terms, |i| (*i != 0).then(|| format!("o{i}")))
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Self) -> Self {
        Octonion(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Self) -> Self {
        Octonion(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Self) -> Self {
        self.multiply(&rhs)
    }
}

pub fn oct_multiply(a: &Octonion, b: &Octonion) -> Octonion {
    a.multiply(b)
}

pub fn oct_conj(a: &Octonion) -> Octonion {
    a.conj()
}

pub fn oct_norm(a: &Octonion) -> f64 {
    a.norm()
}

/// `(a b) c - a (b c)`.
pub fn associator(a: &Octonion, b: &Octonion, c: &Octonion) -> Octonion {
    a.multiply(b).multiply(c) - a.multiply(&b.multiply(c))
}

/// Square matrix of octonions, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct OctonionMatrix {
    n: usize,
    entries: Vec<Octonion>,
}

impl OctonionMatrix {
    pub fn zeros(n: usize) -> Self {
        OctonionMatrix { n, entries: vec![Octonion::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = Octonion::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Octonion>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("octonion matrix rows must form a square".into()));
        }
        Ok(OctonionMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    /// Real matrix times a fixed octonion.
    pub fn real_times(rows: &[[f64; 4]; 4], o: Octonion) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|x| o.scale(*x)).collect()).collect();
        Self::from_rows(rows).expect("4×4")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Octonion {
        self.entries[i * self.n + j]
    }

    /// `(MN)_ik = Σ_j M_ij ∘ N_jk`, M-entry on the left.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Shape(format!("octonion matrices {}×{} and {}×{}", self.n, self.n, other.n, other.n)));
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                out.entries[i * n + k] =
                    (0..n).fold(Octonion::ZERO, |acc, j| acc + self.get(i, j).multiply(&other.get(j, k)));
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Shape("octonion matrix sizes differ".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| *a + *b).collect();
        Ok(OctonionMatrix { n: self.n, entries })
    }

    pub fn scale(&self, s: f64) -> Self {
        OctonionMatrix { n: self.n, entries: self.entries.iter().map(|e| e.scale(s)).collect() }
    }

    /// `M v` with each entry `M_ij ∘ v_j`.
    pub fn apply(&self, v: &[Octonion]) -> Result<Vec<Octonion>> {
        if v.len() != self.n {
            return Err(Error::Shape(format!("{}×{} octonion matrix applied to length {}", self.n, self.n, v.len())));
        }
        Ok((0..self.n)
            .map(|i| (0..self.n).fold(Octonion::ZERO, |acc, j| acc + self.get(i, j).multiply(&v[j])))
            .collect())
    }

    /// Largest entrywise distance.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        self.entries.iter().zip(&other.entries).map(|(a, b)| (*a - *b).norm()).fold(0.0, f64::max)
    }
}

pub fn oct_matrix_product(m: &OctonionMatrix, n: &OctonionMatrix) -> Result<OctonionMatrix> {
    m.try_mul(n)
}

pub fn oct_matrix_apply(m: &OctonionMatrix, v: &[Octonion]) -> Result<Vec<Octonion>> {
    m.apply(v)
}

/// The eleven 4×4 octonionic generators of Cl(10,1) in the order
/// Γ^{o1}..Γ^{o7}, Γ^{o,8}, Γ^{o,9}, Γ^{o,10}, Γ^{o,0}, with labels.
pub fn octonionic_cl101() -> Vec<(String, OctonionMatrix)> {
    const UNIT: [[f64; 4]; 4] =
        [[0.0, 0.0, 0.0, 1.0], [0.0, 0.0, -1.0, 0.0], [0.0, 1.0, 0.0, 0.0], [-1.0, 0.0, 0.0, 0.0]];
    const G8: [[f64; 4]; 4] = [[0.0, 0.0, 0.0, 1.0], [0.0, 0.0, 1.0, 0.0], [0.0, 1.0, 0.0, 0.0], [1.0, 0.0, 0.0, 0.0]];
    const G9: [[f64; 4]; 4] =
        [[0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, -1.0], [1.0, 0.0, 0.0, 0.0], [0.0, -1.0, 0.0, 0.0]];
    const G10: [[f64; 4]; 4] =
        [[1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, -1.0, 0.0], [0.0, 0.0, 0.0, -1.0]];
    const G0: [[f64; 4]; 4] =
        [[0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0], [-1.0, 0.0, 0.0, 0.0], [0.0, -1.0, 0.0, 0.0]];
    let mut out: Vec<(String, OctonionMatrix)> =
        (1..8).map(|i| (format!("o{i}"), OctonionMatrix::real_times(&UNIT, Octonion::unit(i)))).collect();
    for (name, rows) in [("8", G8), ("9", G9), ("10", G10), ("0", G0)] {
        out.push((name.into(), OctonionMatrix::real_times(&rows, Octonion::ONE)));
    }
    out
}

/// Two octonionic qubits as a four-component column.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OctonionQubitPair {
    pub zeta: [Octonion; 4],
}

impl OctonionQubitPair {
    pub fn new(zeta: [Octonion; 4]) -> Self {
        OctonionQubitPair { zeta }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.zeta.iter().map(|z| z.norm().powi(2)).sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= 1e-12
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm_sqr().sqrt();
        if n < ZERO_TOL {
            return Err(Error::ZeroState);
        }
        Ok(OctonionQubitPair { zeta: self.zeta.map(|z| z.scale(1.0 / n)) })
    }

    /// `(a1 b1, a1 b2, a2 b1, a2 b2)`.
    pub fn product(a: [Octonion; 2], b: [Octonion; 2]) -> Self {
        OctonionQubitPair { zeta: [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]] }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Pattern {
    Entangled,
    PossiblySeparable,
}

/// A product `(a1 b1, a1 b2, a2 b1, a2 b2)` over an algebra without zero
/// divisors has a zero pattern that is a boolean outer product. Any other
/// pattern proves entanglement; a matching pattern proves nothing.
pub fn oqubit_pattern_check(state: &OctonionQubitPair) -> Result<Pattern> {
    let nz = state.zeta.map(|z| !z.is_zero());
    if !nz.iter().any(|b| *b) {
        return Err(Error::ZeroState);
    }
    let rows = [nz[0] || nz[1], nz[2] || nz[3]];
    let cols = [nz[0] || nz[2], nz[1] || nz[3]];
    let outer = (0..4).all(|k| nz[k] == (rows[k / 2] && cols[k % 2]));
    Ok(if outer { Pattern::PossiblySeparable } else { Pattern::Entangled })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(i: usize) -> Octonion {
        Octonion::unit(i)
    }

    #[test]
    fn unit_products() {
        assert_eq!(o(1) * o(1), -Octonion::ONE);
        assert_eq!(o(1) * o(2), o(3));
        assert_eq!(o(2) * o(1), -o(3));
        assert_eq!(o(5) * o(6), -o(3));
        for i in 1..8 {
            for j in 1..8 {
                for k in 1..8 {
                    let c = structure_constant(i, j, k);
                    assert_eq!(c, -structure_constant(j, i, k));
                    assert_eq!(c, structure_constant(j, k, i));
                }
            }
        }
    }

    #[test]
    fn every_pair_lies_on_one_line() {
        for i in 1..8 {
            for j in i + 1..8 {
                let n = FANO_LINES.iter().filter(|l| l.contains(&i) && l.contains(&j)).count();
                assert_eq!(n, 1, "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn non_associative_witness() {
        let d = associator(&o(1), &o(2), &o(4));
        assert_eq!(d, o(7).scale(2.0));
        assert_eq!(d.norm(), 2.0);
    }

    #[test]
    fn conj_and_norm() {
        let a = Octonion([1.0, 2.0, -1.0, 0.5, 0.0, 3.0, 0.0, -2.0]);
        let n2 = a * a.conj();
        assert!((n2.0[0] - a.norm().powi(2)).abs() < 1e-12);
        assert!(n2.0[1..].iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn text_round_trip() {
        let a = Octonion([1.0, 0.0, -2.0, 0.0, 0.0, 0.5, 0.0, 0.0]);
        assert_eq!(a.to_string(), "1 - 2 o2 + 0.5 o5");
        assert_eq!(Octonion::parse(&a.to_string()).unwrap(), a);
        assert_eq!(Octonion::parse("o3").unwrap(), o(3));
        assert_eq!(Octonion::ZERO.to_string(), "0");
        assert!(matches!(Octonion::parse("1 + o9"), Err(Error::Parse { pos: 5, .. })));
    }

    #[test]
    fn generator_relations() {
        let gens = octonionic_cl101();
        let id = OctonionMatrix::identity(4);
        let mut minus = 0;
        for (name, g) in &gens {
            let sq = g.try_mul(g).unwrap();
            if sq == id.scale(-1.0) {
                minus += 1;
            } else {
                assert_eq!(sq, id, "Γ{name}");
            }
        }
        assert_eq!(minus, 1);
        for (i, (_, a)) in gens.iter().enumerate() {
            for (_, b) in &gens[i + 1..] {
                let ac = a.try_mul(b).unwrap().try_add(&b.try_mul(a).unwrap()).unwrap();
                assert_eq!(ac, OctonionMatrix::zeros(4));
            }
        }
    }

    #[test]
    fn apply_and_shape_errors() {
        let gens = octonionic_cl101();
        let v = [o(1), o(2), Octonion::ZERO, Octonion::ONE];
        let w = gens[7].1.apply(&v).unwrap();
        assert_eq!(w, vec![Octonion::ONE, Octonion::ZERO, o(2), o(1)]);
        assert!(gens[0].1.apply(&v[..3]).is_err());
        assert!(gens[0].1.try_mul(&OctonionMatrix::identity(2)).is_err());
    }

    #[test]
    fn patterns() {
        let (a, b, z) = (o(3).scale(0.6), Octonion::real(0.8), Octonion::ZERO);
        let check = |zeta| oqubit_pattern_check(&OctonionQubitPair::new(zeta)).unwrap();
        assert_eq!(check([a, z, z, b]), Pattern::Entangled);
        assert_eq!(check([z, a, b, z]), Pattern::Entangled);
        assert_eq!(check([a, z, z, z]), Pattern::PossiblySeparable);
        assert_eq!(check([a, b, z, z]), Pattern::PossiblySeparable);
        assert_eq!(check([a, b, a, z]), Pattern::Entangled);
        assert_eq!(oqubit_pattern_check(&OctonionQubitPair::new([z; 4])), Err(Error::ZeroState));
        let p = OctonionQubitPair::product([a, b], [o(5), o(1)]);
        assert_eq!(oqubit_pattern_check(&p).unwrap(), Pattern::PossiblySeparable);
    }
}
