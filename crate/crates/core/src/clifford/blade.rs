use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Signature;

/// A basis blade: the ordered product of distinct generators, stored as a
/// bitmask over generator positions (ascending order is canonical).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn generator(position: usize) -> Self {
        Blade(1 << position)
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    /// Generator positions in ascending order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |i| mask >> i & 1 == 1)
    }

    /// Geometric product of two basis blades: the resulting blade and its sign.
    ///
    /// The sign collects one factor of -1 per transposition needed to sort
    /// the concatenated generator list, times the metric square of every
    /// generator that appears in both blades.
    pub fn product(self, other: Blade, sig: &Signature) -> (Blade, f64) {
        let mut a = self.0 >> 1;
        let mut swaps = 0u32;
        while a != 0 {
            swaps += (a & other.0).count_ones();
            a >>= 1;
        }
        let negative_squares = (self.0 & other.0 & sig.negative_mask()).count_ones();
        let sign = if (swaps + negative_squares).is_multiple_of(2) { 1.0 } else { -1.0 };
        (Blade(self.0 ^ other.0), sign)
    }

    /// Sign picked up under reversion: (-1)^(k(k-1)/2) for grade k.
    pub fn reverse_sign(self) -> f64 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    /// Sign with `B† = ±B` where `B†` is the blade inverse: reversion times
    /// the metric squares of its generators. Equals [`Blade::reverse_sign`]
    /// in Euclidean signatures; in Cl(1,3) it is `x ↦ γ0 x̃ γ0`.
    pub fn adjoint_sign(self, sig: &Signature) -> f64 {
        if (self.0 & sig.negative_mask()).count_ones().is_multiple_of(2) {
            self.reverse_sign()
        } else {
            -self.reverse_sign()
        }
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Sign of a blade product by literally bubble-sorting the generator list.
    fn bubble_sign(a: Blade, b: Blade, sig: &Signature) -> (Blade, f64) {
        let mut list: Vec<usize> = a.positions().chain(b.positions()).collect();
        let mut sign = 1.0;
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..list.len().saturating_sub(1) {
                if list[i] > list[i + 1] {
                    list.swap(i, i + 1);
                    sign = -sign;
                    changed = true;
                }
            }
        }
        let mut mask = 0u32;
        let mut i = 0;
        while i < list.len() {
            if i + 1 < list.len() && list[i] == list[i + 1] {
                sign *= sig.square(list[i]);
                i += 2;
            } else {
                mask |= 1 << list[i];
                i += 1;
            }
        }
        (Blade(mask), sign)
    }

    #[test]
    fn bit_counting_matches_bubble_sort() {
        for sig in [Signature::cl30(), Signature::cl13(), Signature::new(2, 3).unwrap()] {
            let n = sig.blade_count() as u32;
            for a in 0..n {
                for b in 0..n {
                    let fast = Blade(a).product(Blade(b), &sig);
                    let slow = bubble_sign(Blade(a), Blade(b), &sig);
                    assert_eq!(fast, slow, "{sig} {a:b} {b:b}");
                }
            }
        }
    }

    #[test]
    fn reverse_signs_by_grade() {
        let signs: Vec<f64> = [0b0, 0b1, 0b11, 0b111, 0b1111].iter().map(|m| Blade(*m).reverse_sign()).collect();
        assert_eq!(signs, vec![1.0, 1.0, -1.0, -1.0, 1.0]);
    }
}
