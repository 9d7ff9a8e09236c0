use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Metric signature of a Clifford algebra together with generator labels.
///
/// Generators are addressed by *position* `0..p+q`. Each position carries a
/// printable label digit (`first_label + position`) and an explicit square
/// (+1 or -1), so that Cl(1,3) can put the timelike `g0` first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Signature {
    p: u8,
    q: u8,
    prefix: char,
    first_label: u8,
    /// Bit `i` set when generator `i` squares to -1.
    negative: u32,
}

impl Signature {
    pub const MAX_GENERATORS: usize = 16;

    /// Cl(p,q) with generators `e1..e{p+q}`, the first `p` squaring to +1.
    pub fn new(p: u8, q: u8) -> Result<Self> {
        let n = p as usize + q as usize;
        if n > Self::MAX_GENERATORS {
            return Err(Error::OutOfRange { what: "generator count", value: n as i64 });
        }
        let negative = ((1u32 << n) - 1) & !((1u32 << p) - 1);
        Ok(Signature { p, q, prefix: 'e', first_label: 1, negative })
    }

    /// Cl(3,0): `e1, e2, e3`, all squaring to +1.
    pub const fn cl30() -> Self {
        Signature { p: 3, q: 0, prefix: 'e', first_label: 1, negative: 0 }
    }

    /// Cl(1,3): `g0, g1, g2, g3` with g0² = +1 and gk² = -1.
    pub const fn cl13() -> Self {
        Signature { p: 1, q: 3, prefix: 'g', first_label: 0, negative: 0b1110 }
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.p as usize + self.q as usize
    }

    pub fn prefix(&self) -> char {
        self.prefix
    }

    /// Square of generator at `position` (+1 or -1).
    pub fn square(&self, position: usize) -> f64 {
        if self.negative >> position & 1 == 1 {
            -1.0
        } else {
            1.0
        }
    }

    pub(crate) fn negative_mask(&self) -> u32 {
        self.negative
    }

    /// Printable label digit of the generator at `position`.
    pub fn label(&self, position: usize) -> u32 {
        self.first_label as u32 + position as u32
    }

    /// Position of the generator printed as `label`, if any.
    pub fn position_of(&self, label: u32) -> Option<usize> {
        let pos = label.checked_sub(self.first_label as u32)? as usize;
        (pos < self.dim()).then_some(pos)
    }

    /// Number of basis blades, `2^(p+q)`.
    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacetime_puts_timelike_first() {
        let s = Signature::cl13();
        assert_eq!(s.square(0), 1.0);
        for k in 1..4 {
            assert_eq!(s.square(k), -1.0);
        }
        assert_eq!(s.position_of(0), Some(0));
        assert_eq!(s.position_of(4), None);
    }

    #[test]
    fn generic_signature_squares() {
        let s = Signature::new(2, 3).unwrap();
        let squares: Vec<f64> = (0..5).map(|i| s.square(i)).collect();
        assert_eq!(squares, vec![1.0, 1.0, -1.0, -1.0, -1.0]);
        assert_eq!(s.label(0), 1);
        assert!(Signature::new(10, 7).is_err());
    }
}
