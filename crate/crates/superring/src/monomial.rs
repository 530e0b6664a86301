//! Square-free monomials in the odd generators, encoded as bitmasks.
//!
//! Bit `i` set means generator `i` is present. Masks are sets, never
//! multisets, so the relation `g^2 = 0` is structural. Products carry the
//! Koszul sign `(-1)^{#{(i,j) : i in a, j in b, i > j}}` that counts the
//! transpositions needed to sort the concatenation.

/// Parity of a homogeneous quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// A square-free monomial over at most 32 odd generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn parity(self) -> Parity {
        if self.degree() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn contains_generator(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    /// Product of two monomials: `None` when a generator repeats,
    /// otherwise the union mask with its Koszul sign.
    pub fn mul(self, other: Monomial) -> Option<(i8, Monomial)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        Some((koszul_sign(self.0, other.0), Monomial(self.0 | other.0)))
    }

    /// The canonical monomial order: by degree, then by mask value.
    pub fn order_key(self) -> (u32, u32) {
        (self.degree(), self.0)
    }
}

/// Sign obtained when moving the generators of `b` past those of `a`
/// into sorted position: `(-1)^inversions` where inversions counts pairs
/// `i in a, j in b` with `i > j`. Assumes disjoint masks.
pub fn koszul_sign(a: u32, b: u32) -> i8 {
    let mut inversions = 0u32;
    let mut rest = a;
    while rest != 0 {
        let i = rest.trailing_zeros();
        // generators of b strictly below i
        inversions += (b & ((1u32 << i) - 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
