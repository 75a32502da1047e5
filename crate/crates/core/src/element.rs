//! Elements of the finite Boolean algebra `B_n`, stored as bit-sets of atom
//! indices `0..n`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported atom count.
pub const MAX_ATOMS: usize = 32;

/// Mask with the low `n` bits set.
pub(crate) fn full_mask(n: usize) -> u32 {
    debug_assert!(n <= MAX_ATOMS);
    u32::MAX.checked_shr((MAX_ATOMS - n) as u32).unwrap_or(0)
}

pub(crate) fn check_atoms(n: usize) -> Result<()> {
    if n > MAX_ATOMS {
        Err(Error::TooManyAtoms { n, max: MAX_ATOMS })
    } else {
        Ok(())
    }
}

/// Iterates the indices of the set bits of `bits`, ascending.
pub(crate) fn bit_indices(mut bits: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        }
    })
}

/// A member of `B_n`: the set of atoms below it.
///
/// `0` is the empty set and `1` is the full atom set. Binary operations
/// expect both operands to live in the same `B_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    bits: u32,
    n: u8,
}

impl Element {
    /// Builds an element from a bit mask; bits at or above `n` are rejected.
    pub fn from_bits(n: usize, bits: u32) -> Result<Self> {
        check_atoms(n)?;
        let stray = bits & !full_mask(n);
        if stray != 0 {
            return Err(Error::AtomOutOfRange { atom: stray.trailing_zeros() as usize, n });
        }
        Ok(Self::from_bits_unchecked(n, bits))
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u32) -> Self {
        debug_assert!(n <= MAX_ATOMS && bits & !full_mask(n) == 0);
        Element { bits, n: n as u8 }
    }

    /// Builds an element from atom indices.
    pub fn from_atoms<I: IntoIterator<Item = usize>>(n: usize, atoms: I) -> Result<Self> {
        check_atoms(n)?;
        let mut bits = 0u32;
        for atom in atoms {
            if atom >= n {
                return Err(Error::AtomOutOfRange { atom, n });
            }
            bits |= 1 << atom;
        }
        Ok(Self::from_bits_unchecked(n, bits))
    }

    /// The bottom element `0`.
    pub fn zero(n: usize) -> Result<Self> {
        Self::from_bits(n, 0)
    }

    /// The top element `1`.
    pub fn one(n: usize) -> Result<Self> {
        check_atoms(n)?;
        Ok(Self::from_bits_unchecked(n, full_mask(n)))
    }

    /// The atom with index `i`.
    pub fn atom(n: usize, i: usize) -> Result<Self> {
        Self::from_atoms(n, [i])
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Atom count of the ambient algebra.
    pub fn n(self) -> usize {
        self.n as usize
    }

    /// Number of atoms below this element.
    pub fn rank(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn atoms(self) -> impl Iterator<Item = usize> {
        bit_indices(self.bits)
    }

    pub fn contains_atom(self, i: usize) -> bool {
        i < MAX_ATOMS && self.bits & (1 << i) != 0
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn is_one(self) -> bool {
        self.bits == full_mask(self.n())
    }

    pub fn is_atom(self) -> bool {
        self.rank() == 1
    }

    pub fn complement(self) -> Self {
        Element { bits: !self.bits & full_mask(self.n()), n: self.n }
    }

    /// `self → other`, i.e. `¬self ∨ other`.
    pub fn implies(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        self.complement().join(other)
    }

    pub fn meet(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Element { bits: self.bits & other.bits, n: self.n }
    }

    pub fn join(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Element { bits: self.bits | other.bits, n: self.n }
    }

    /// Lattice order of `B_n` (set inclusion).
    pub fn leq(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Relabels atoms: atom `i` goes to `perm[i]`. `perm` must be a bijection
    /// on `0..n`.
    pub(crate) fn permute(self, perm: &[usize]) -> Self {
        let bits = self.atoms().fold(0u32, |acc, i| acc | 1 << perm[i]);
        Element { bits, n: self.n }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, atom) in self.atoms().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{atom}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: usize, atoms: &[usize]) -> Element {
        Element::from_atoms(n, atoms.iter().copied()).unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(el(3, &[0, 1]).complement(), el(3, &[2]));
        assert_eq!(el(3, &[]).complement(), el(3, &[0, 1, 2]));
        assert_eq!(el(1, &[0]).complement(), el(1, &[]));
    }

    #[test]
    fn implies_examples() {
        assert_eq!(el(2, &[0]).implies(el(2, &[])), el(2, &[1]));
        assert_eq!(el(2, &[0, 1]).implies(el(2, &[1])), el(2, &[1]));
        assert_eq!(el(3, &[]).implies(el(3, &[2])), el(3, &[0, 1, 2]));
    }

    #[test]
    fn meet_join_examples() {
        assert_eq!(el(2, &[0]).meet(el(2, &[1])), el(2, &[]));
        assert_eq!(el(2, &[0]).join(el(2, &[1])), el(2, &[0, 1]));
        assert_eq!(el(3, &[0, 1]).meet(el(3, &[1, 2])), el(3, &[1]));
    }

    #[test]
    fn exhaustive_small_identities() {
        for n in 0..=4 {
            for bits in 0..1u32 << n {
                let x = Element::from_bits(n, bits).unwrap();
                assert_eq!(x.complement().complement(), x);
                assert!(x.implies(x).is_one());
                assert!(x.rank() <= n);
            }
        }
        assert_eq!(Element::zero(5).unwrap().rank(), 0);
        assert_eq!(Element::one(5).unwrap().rank(), 5);
    }

    #[test]
    fn full_width_context() {
        let one = Element::one(32).unwrap();
        assert_eq!(one.bits(), u32::MAX);
        assert!(one.complement().is_zero());
        assert!(Element::one(0).unwrap().is_zero());
        assert!(matches!(Element::one(33), Err(Error::TooManyAtoms { .. })));
    }

    #[test]
    fn out_of_range_atoms_rejected() {
        assert_eq!(Element::from_atoms(2, [2]), Err(Error::AtomOutOfRange { atom: 2, n: 2 }));
        assert!(Element::from_bits(2, 0b100).is_err());
    }
}
