//! Implication sublattices of `B_n` in canonical partial-partition form.
//!
//! A sublattice `A` with minimum `a` is the Boolean subalgebra of `[a, 1]`
//! whose atoms are `a ∪ b` for the blocks `b`, so
//! `A = { a ∪ ⋃S : S ⊆ blocks }` and `|A| = 2^w(A)` with `w(A)` the number of
//! blocks.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::{bit_indices, check_atoms, full_mask, Element};
use crate::error::{ClosureOp, Error, Result};
use crate::partition::set_partitions;

/// Canonical form of an implication sublattice: a base element and a
/// partition of the remaining atoms, blocks ordered by least atom.
///
/// The total order on `ImpLattice` compares the number of blocks first, so
/// sorting any collection of sublattices of one `B_n` yields a linear
/// extension of inclusion.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ImpLatticeJson", into = "ImpLatticeJson")]
pub struct ImpLattice {
    n: u8,
    base: u32,
    blocks: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct ImpLatticeJson {
    n: usize,
    base: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl From<ImpLattice> for ImpLatticeJson {
    fn from(value: ImpLattice) -> Self {
        ImpLatticeJson {
            n: value.n(),
            base: bit_indices(value.base).collect(),
            blocks: value.blocks.iter().map(|&b| bit_indices(b).collect()).collect(),
        }
    }
}

impl TryFrom<ImpLatticeJson> for ImpLattice {
    type Error = Error;

    fn try_from(value: ImpLatticeJson) -> Result<Self> {
        let n = value.n;
        let base = Element::from_atoms(n, value.base)?;
        let blocks =
            value.blocks.into_iter().map(|b| Element::from_atoms(n, b)).collect::<Result<Vec<_>>>()?;
        ImpLattice::new(n, base, blocks)
    }
}

impl ImpLattice {
    /// Validates and canonicalizes `(base, blocks)`.
    pub fn new<I: IntoIterator<Item = Element>>(n: usize, base: Element, blocks: I) -> Result<Self> {
        check_atoms(n)?;
        let mut masks = Vec::new();
        for el in std::iter::once(base).chain(blocks) {
            if el.n() != n {
                return Err(Error::ContextMismatch { left: n, right: el.n() });
            }
            masks.push(el.bits());
        }
        let base = masks.remove(0);
        let mut seen = base;
        for &b in &masks {
            if b == 0 {
                return Err(Error::InvalidLattice("empty block".into()));
            }
            if seen & b != 0 {
                return Err(Error::InvalidLattice(format!(
                    "block {} overlaps the base or another block",
                    Element::from_bits_unchecked(n, b)
                )));
            }
            seen |= b;
        }
        if seen != full_mask(n) {
            return Err(Error::InvalidLattice(format!(
                "atoms {} are neither in the base nor in a block",
                Element::from_bits_unchecked(n, full_mask(n) & !seen)
            )));
        }
        Ok(Self::from_masks(n, base, masks))
    }

    /// Builds from raw masks that are known to form a valid partial partition.
    pub(crate) fn from_masks(n: usize, base: u32, mut blocks: Vec<u32>) -> Self {
        blocks.sort_unstable_by_key(|b| b.trailing_zeros());
        ImpLattice { n: n as u8, base, blocks }
    }

    /// `{1}`, the least implication sublattice.
    pub fn top_only(n: usize) -> Result<Self> {
        check_atoms(n)?;
        Ok(Self::from_masks(n, full_mask(n), Vec::new()))
    }

    /// The whole algebra `B_n`.
    pub fn full(n: usize) -> Result<Self> {
        check_atoms(n)?;
        Ok(Self::from_masks(n, 0, bit_indices(full_mask(n)).map(|i| 1 << i).collect()))
    }

    /// The interval `[a, 1]` of `B_n`.
    pub fn principal_filter(a: Element) -> Self {
        let n = a.n();
        Self::from_masks(n, a.bits(), bit_indices(!a.bits() & full_mask(n)).map(|i| 1 << i).collect())
    }

    /// Recovers the canonical form from an explicit element set.
    ///
    /// Fails with [`Error::NotClosed`] (carrying the first offending pair in
    /// ascending order) when the set is not closed under `→` and `∧`.
    pub fn from_elements<I: IntoIterator<Item = Element>>(n: usize, elements: I) -> Result<Self> {
        check_atoms(n)?;
        let set: BTreeSet<Element> = elements.into_iter().collect();
        if set.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(bad) = set.iter().find(|x| x.n() != n) {
            return Err(Error::ContextMismatch { left: n, right: bad.n() });
        }
        let lookup: HashSet<u32> = set.iter().map(|x| x.bits()).collect();
        for &x in &set {
            for &y in &set {
                let imp = x.implies(y);
                if !lookup.contains(&imp.bits()) {
                    return Err(Error::NotClosed { op: ClosureOp::Implies, x, y, result: imp });
                }
                let m = x.meet(y);
                if !lookup.contains(&m.bits()) {
                    return Err(Error::NotClosed { op: ClosureOp::Meet, x, y, result: m });
                }
            }
        }
        let base = set.iter().fold(full_mask(n), |acc, x| acc & x.bits());
        // atoms of the subalgebra of [base, 1] are the covers of base
        let above: Vec<u32> = set.iter().map(|x| x.bits()).filter(|&x| x != base).collect();
        let blocks: Vec<u32> = above
            .iter()
            .copied()
            .filter(|&x| !above.iter().any(|&y| y != x && y & !x == 0))
            .map(|x| x & !base)
            .collect();
        let lattice = Self::from_masks(n, base, blocks);
        debug_assert_eq!(lattice.elements(), set);
        Ok(lattice)
    }

    /// Atom count of the ambient algebra.
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The minimum `a = min A`.
    pub fn base(&self) -> Element {
        Element::from_bits_unchecked(self.n(), self.base)
    }

    pub fn blocks(&self) -> impl ExactSizeIterator<Item = Element> + '_ {
        self.blocks.iter().map(move |&b| Element::from_bits_unchecked(self.n(), b))
    }

    pub(crate) fn block_masks(&self) -> &[u32] {
        &self.blocks
    }

    /// `w(A)`, the number of atoms of `A` as a Boolean algebra.
    pub fn width(&self) -> usize {
        self.blocks.len()
    }

    /// `|a|`, the rank of the base in `B_n`.
    pub fn base_rank(&self) -> usize {
        self.base.count_ones() as usize
    }

    /// Number of elements, `2^w(A)`.
    pub fn len(&self) -> u64 {
        1u64 << self.width()
    }

    /// Always false: every sublattice contains `1`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The atoms of `A` itself: `a ∪ b` for each block `b`.
    pub fn atoms(&self) -> impl ExactSizeIterator<Item = Element> + '_ {
        self.blocks.iter().map(move |&b| Element::from_bits_unchecked(self.n(), self.base | b))
    }

    /// The explicit element set `{ a ∪ ⋃S : S ⊆ blocks }`.
    pub fn elements(&self) -> BTreeSet<Element> {
        let w = self.width();
        (0..1u64 << w)
            .map(|subset| {
                let bits = bit_indices(subset as u32).fold(self.base, |acc, i| acc | self.blocks[i]);
                Element::from_bits_unchecked(self.n(), bits)
            })
            .collect()
    }

    /// Membership test without expanding the element set.
    pub fn contains(&self, x: Element) -> bool {
        x.n() == self.n()
            && self.base & !x.bits() == 0
            && self.blocks.iter().all(|&b| b & x.bits() == 0 || b & !x.bits() == 0)
    }

    /// Inclusion `self ⊆ other`, decided on the canonical forms: the base of
    /// `self` is an element of `other` and every block of `self` is a union of
    /// blocks of `other`.
    pub fn is_sub(&self, other: &ImpLattice) -> Result<bool> {
        self.same_context(other)?;
        Ok(self.is_sub_unchecked(other))
    }

    pub(crate) fn is_sub_unchecked(&self, other: &ImpLattice) -> bool {
        other.contains(self.base())
            && self.blocks.iter().all(|&b| other.blocks.iter().all(|&c| c & b == 0 || c & !b == 0))
    }

    /// Inclusion decided by comparing explicit element sets.
    pub fn is_sub_by_elements(&self, other: &ImpLattice) -> Result<bool> {
        self.same_context(other)?;
        Ok(self.elements().is_subset(&other.elements()))
    }

    fn same_context(&self, other: &ImpLattice) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::ContextMismatch { left: self.n(), right: other.n() })
        }
    }

    /// `A ∪ A^c`: the base joins the blocks and the new base is `0`.
    pub fn complement_closure(&self) -> ImpLattice {
        if self.base == 0 {
            return self.clone();
        }
        let mut blocks = self.blocks.clone();
        blocks.push(self.base);
        Self::from_masks(self.n(), 0, blocks)
    }

    /// `A↑ = [min A, 1]`.
    pub fn up_closure(&self) -> ImpLattice {
        Self::principal_filter(self.base())
    }

    /// Fixed point of the complement closure.
    pub fn is_boolean_subalgebra(&self) -> bool {
        self.base == 0
    }

    /// `A = [c, 1]` for an atom `c`.
    pub fn is_ultrafilter(&self) -> bool {
        self.base_rank() == 1 && self.blocks.iter().all(|b| b.count_ones() == 1)
    }

    /// Relabels atom `i` as `perm[i]` in the base and every block.
    pub fn apply_atom_permutation(&self, perm: &[usize]) -> Result<ImpLattice> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::InvalidPermutation(format!("length {} for {n} atoms", perm.len())));
        }
        let mut seen = 0u32;
        for &p in perm {
            if p >= n || seen & (1 << p) != 0 {
                return Err(Error::InvalidPermutation(format!("{perm:?} is not a bijection")));
            }
            seen |= 1 << p;
        }
        let base = self.base().permute(perm).bits();
        let blocks = self.blocks().map(|b| b.permute(perm).bits()).collect();
        Ok(Self::from_masks(n, base, blocks))
    }

    /// Embeds a sublattice of `B_w` into `self`, reading atom `i` of `B_w` as
    /// the `i`-th block of `self` (`w = w(self)`).
    pub fn lift(&self, sub: &ImpLattice) -> Result<ImpLattice> {
        if sub.n() != self.width() {
            return Err(Error::ContextMismatch { left: self.width(), right: sub.n() });
        }
        let expand = |mask: u32| bit_indices(mask).fold(0u32, |acc, i| acc | self.blocks[i]);
        Ok(Self::from_masks(
            self.n(),
            self.base | expand(sub.base),
            sub.blocks.iter().map(|&b| expand(b)).collect(),
        ))
    }

    /// Inverse of [`lift`](Self::lift): coordinates of a sublattice of `self`
    /// as a sublattice of `B_w`.
    pub fn project(&self, sub: &ImpLattice) -> Result<ImpLattice> {
        if !sub.is_sub(self)? {
            return Err(Error::NotComparable);
        }
        let w = self.width();
        let shrink = |mask: u32| {
            self.blocks
                .iter()
                .enumerate()
                .filter(|(_, &b)| b & mask != 0)
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        };
        Ok(Self::from_masks(
            w,
            shrink(sub.base & !self.base),
            sub.blocks.iter().map(|&b| shrink(b)).collect(),
        ))
    }

    /// Every implication sublattice contained in `self`, in canonical order.
    pub fn sublattices(&self) -> Vec<ImpLattice> {
        let inner = enumerate_all(self.width()).expect("width is bounded by the atom count");
        let mut out: Vec<ImpLattice> =
            inner.iter().map(|s| self.lift(s).expect("enumerated over the block count")).collect();
        out.sort();
        out
    }
}

impl Ord for ImpLattice {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.blocks.len(), self.base, &self.blocks).cmp(&(
            other.n,
            other.blocks.len(),
            other.base,
            &other.blocks,
        ))
    }
}

impl PartialOrd for ImpLattice {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ImpLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} |", self.base())?;
        for b in self.blocks() {
            write!(f, " {b}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for ImpLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

/// Every implication sublattice of `B_n`, each exactly once, in canonical
/// order. There are `Bell(n + 1)` of them.
pub fn enumerate_all(n: usize) -> Result<Vec<ImpLattice>> {
    check_atoms(n)?;
    let full = full_mask(n);
    let mut out = Vec::new();
    for base in 0..=u64::from(full) {
        let base = base as u32;
        for blocks in set_partitions(full & !base) {
            out.push(ImpLattice::from_masks(n, base, blocks));
        }
    }
    out.sort();
    Ok(out)
}

/// The two closure operators on the lattice of implication sublattices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Closure {
    /// `A ↦ A ∪ A^c`; fixed points are the Boolean subalgebras.
    Complement,
    /// `A ↦ A↑ = [min A, 1]`; fixed points are the principal filters.
    Up,
}

impl Closure {
    pub const ALL: [Closure; 2] = [Closure::Complement, Closure::Up];

    pub fn apply(self, a: &ImpLattice) -> ImpLattice {
        match self {
            Closure::Complement => a.complement_closure(),
            Closure::Up => a.up_closure(),
        }
    }

    pub fn is_closed(self, a: &ImpLattice) -> bool {
        &self.apply(a) == a
    }

    pub fn name(self) -> &'static str {
        match self {
            Closure::Complement => "complement",
            Closure::Up => "up",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: usize, atoms: &[usize]) -> Element {
        Element::from_atoms(n, atoms.iter().copied()).unwrap()
    }

    fn lat(n: usize, base: &[usize], blocks: &[&[usize]]) -> ImpLattice {
        ImpLattice::new(n, el(n, base), blocks.iter().map(|b| el(n, b))).unwrap()
    }

    #[test]
    fn from_elements_examples() {
        assert_eq!(ImpLattice::from_elements(2, [el(2, &[0, 1])]).unwrap(), lat(2, &[0, 1], &[]));
        assert_eq!(
            ImpLattice::from_elements(2, [el(2, &[]), el(2, &[0]), el(2, &[1]), el(2, &[0, 1])]).unwrap(),
            lat(2, &[], &[&[0], &[1]])
        );
        let err = ImpLattice::from_elements(2, [el(2, &[]), el(2, &[0]), el(2, &[0, 1])]).unwrap_err();
        assert_eq!(
            err,
            Error::NotClosed { op: ClosureOp::Implies, x: el(2, &[0]), y: el(2, &[]), result: el(2, &[1]) }
        );
        assert_eq!(ImpLattice::from_elements(2, []), Err(Error::Empty));
    }

    #[test]
    fn elements_examples() {
        let e = lat(2, &[0], &[&[1]]).elements();
        assert_eq!(e, [el(2, &[0]), el(2, &[0, 1])].into_iter().collect());
        assert_eq!(lat(2, &[0, 1], &[]).elements().len(), 1);
        let e = lat(3, &[], &[&[0, 1], &[2]]).elements();
        assert_eq!(e, [el(3, &[]), el(3, &[0, 1]), el(3, &[2]), el(3, &[0, 1, 2])].into_iter().collect());
    }

    #[test]
    fn is_sub_examples() {
        assert!(lat(2, &[0, 1], &[]).is_sub(&lat(2, &[0], &[&[1]])).unwrap());
        assert!(lat(2, &[0], &[&[1]]).is_sub(&lat(2, &[], &[&[0], &[1]])).unwrap());
        assert!(!lat(3, &[], &[&[0, 1], &[2]]).is_sub(&lat(3, &[2], &[&[0], &[1]])).unwrap());
        assert_eq!(
            lat(2, &[], &[&[0, 1]]).is_sub(&ImpLattice::full(3).unwrap()),
            Err(Error::ContextMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_all(0).unwrap().len(), 1);
        assert_eq!(enumerate_all(2).unwrap().len(), 5);
        assert_eq!(enumerate_all(4).unwrap().len(), 52);
    }

    #[test]
    fn enumeration_order_is_linear_extension() {
        let all = enumerate_all(3).unwrap();
        for (i, a) in all.iter().enumerate() {
            for b in &all[..i] {
                assert!(!a.is_sub(b).unwrap(), "{a} ⊆ {b} but listed later");
            }
        }
    }

    #[test]
    fn complement_closure_examples() {
        assert_eq!(lat(2, &[0, 1], &[]).complement_closure(), lat(2, &[], &[&[0, 1]]));
        let b2 = ImpLattice::full(2).unwrap();
        assert_eq!(b2.complement_closure(), b2);
        assert_eq!(lat(3, &[2], &[&[0], &[1]]).complement_closure(), ImpLattice::full(3).unwrap());
    }

    #[test]
    fn complement_closure_is_union_with_complements() {
        for a in enumerate_all(3).unwrap() {
            let mut expected = a.elements();
            expected.extend(a.elements().iter().map(|x| x.complement()));
            assert_eq!(a.complement_closure().elements(), expected, "{a}");
        }
    }

    #[test]
    fn up_closure_examples() {
        assert_eq!(lat(3, &[0], &[&[1, 2]]).up_closure(), lat(3, &[0], &[&[1], &[2]]));
        assert_eq!(lat(3, &[], &[&[0, 2], &[1]]).up_closure(), ImpLattice::full(3).unwrap());
        let top = ImpLattice::top_only(3).unwrap();
        assert_eq!(top.up_closure(), top);
    }

    #[test]
    fn subalgebra_and_ultrafilter_predicates() {
        let a = lat(2, &[], &[&[0, 1]]);
        assert!(a.is_boolean_subalgebra() && !a.is_ultrafilter());
        assert!(lat(2, &[0], &[&[1]]).is_ultrafilter());
        let c = lat(3, &[0, 1], &[&[2]]);
        assert!(!c.is_boolean_subalgebra() && !c.is_ultrafilter());
    }

    #[test]
    fn permutation_examples() {
        let a = lat(3, &[0], &[&[1], &[2]]);
        assert_eq!(a.apply_atom_permutation(&[0, 1, 2]).unwrap(), a);
        assert_eq!(a.apply_atom_permutation(&[1, 0, 2]).unwrap(), lat(3, &[1], &[&[0], &[2]]));
        let b2 = ImpLattice::full(2).unwrap();
        assert_eq!(b2.apply_atom_permutation(&[1, 0]).unwrap(), b2);
        assert!(a.apply_atom_permutation(&[0, 0, 2]).is_err());
        assert!(a.apply_atom_permutation(&[0, 1]).is_err());
    }

    #[test]
    fn lift_project_round_trip() {
        let frame = lat(5, &[4], &[&[0, 2], &[1], &[3]]);
        for sub in enumerate_all(3).unwrap() {
            let lifted = frame.lift(&sub).unwrap();
            assert!(lifted.is_sub(&frame).unwrap());
            assert_eq!(frame.project(&lifted).unwrap(), sub);
        }
        assert_eq!(frame.sublattices().len(), 15);
    }

    #[test]
    fn invalid_canonical_forms_rejected() {
        let n = 3;
        assert!(ImpLattice::new(n, el(n, &[0]), [el(n, &[0, 1]), el(n, &[2])]).is_err());
        assert!(ImpLattice::new(n, el(n, &[0]), [el(n, &[1])]).is_err());
        assert!(ImpLattice::new(n, el(n, &[0]), [el(n, &[]), el(n, &[1, 2])]).is_err());
        assert!(ImpLattice::new(n, el(n, &[0]), [el(2, &[1])]).is_err());
    }

    #[test]
    fn json_encoding() {
        let a = lat(3, &[1], &[&[2], &[0]]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"n":3,"base":[1],"blocks":[[0],[2]]}"#);
        let back: ImpLattice = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<ImpLattice>(r#"{"n":2,"base":[0],"blocks":[]}"#).is_err());
        assert!(serde_json::from_str::<ImpLattice>(r#"{"n":2,"base":[5],"blocks":[[0,1]]}"#).is_err());
    }
}
