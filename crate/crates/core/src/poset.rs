//! Explicit intervals of the lattice of implication sublattices and their
//! Möbius functions.
//!
//! Intervals are materialized eagerly: members are listed in a linear
//! extension of inclusion (lower bound first, upper bound last) and the strict
//! order is kept as one bit-set per member.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{enumerate_all, Closure, ImpLattice};
use crate::scalar::Scalar;
use crate::verdict::Verdict;
use crate::ExactInt;

/// The interval `[lower, upper]` of implication sublattices, or a suborder of
/// it, with its order relation.
#[derive(Clone, Debug)]
pub struct IntervalPoset {
    lower: ImpLattice,
    upper: ImpLattice,
    members: Vec<ImpLattice>,
    index: HashMap<ImpLattice, usize>,
    below: Vec<FixedBitSet>,
}

impl IntervalPoset {
    /// Materializes `[lower, upper]` by enumerating the sublattices of
    /// `upper` through its block structure and keeping those above `lower`.
    pub fn new(lower: &ImpLattice, upper: &ImpLattice) -> Result<Self> {
        if !lower.is_sub(upper)? {
            return Err(Error::NotComparable);
        }
        let members = upper.sublattices().into_iter().filter(|d| lower.is_sub_unchecked(d)).collect();
        Ok(Self::from_members(lower.clone(), upper.clone(), members))
    }

    /// `members` must contain both endpoints and be sorted in canonical order.
    fn from_members(lower: ImpLattice, upper: ImpLattice, members: Vec<ImpLattice>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let m = members.len();
        let mut below = vec![FixedBitSet::with_capacity(m); m];
        for j in 0..m {
            let wj = members[j].width();
            for i in 0..j {
                // inclusion forces a strictly smaller width
                if members[i].width() < wj && members[i].is_sub_unchecked(&members[j]) {
                    below[j].insert(i);
                }
            }
        }
        let index = members.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        let poset = IntervalPoset { lower, upper, members, index, below };
        debug_assert_eq!(poset.index_of(&poset.lower), Some(0));
        debug_assert_eq!(poset.index_of(&poset.upper), Some(poset.len() - 1));
        poset
    }

    pub fn lower(&self) -> &ImpLattice {
        &self.lower
    }

    pub fn upper(&self) -> &ImpLattice {
        &self.upper
    }

    /// Members in a linear extension of inclusion.
    pub fn members(&self) -> &[ImpLattice] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, d: &ImpLattice) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// Order relation between members by index.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.below[j].contains(i)
    }

    /// Indices strictly below member `j`.
    pub fn strictly_below(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[j].ones()
    }

    /// Hasse diagram edges `(i, j)`: `j` covers `i`.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for j in 0..self.len() {
            let mut reachable = FixedBitSet::with_capacity(self.len());
            for k in self.below[j].ones() {
                reachable.union_with(&self.below[k]);
            }
            edges.extend(self.below[j].difference(&reachable).map(|i| (i, j)));
        }
        edges.sort_unstable();
        edges
    }

    /// Number of edges in a longest chain from `lower` to `upper`.
    pub fn maximal_chain_length(&self) -> usize {
        let mut longest = vec![0usize; self.len()];
        for j in 1..self.len() {
            longest[j] = self.below[j].ones().map(|i| longest[i] + 1).max().unwrap_or(0);
        }
        longest[self.len() - 1]
    }

    /// Restriction to the fixed points of `closure`; both endpoints must be
    /// closed.
    pub fn closed_suborder(closure: Closure, lower: &ImpLattice, upper: &ImpLattice) -> Result<Self> {
        if !closure.is_closed(lower) || !closure.is_closed(upper) {
            return Err(Error::NotClosedEndpoint);
        }
        let full = Self::new(lower, upper)?;
        let members = full.members.into_iter().filter(|d| closure.is_closed(d)).collect();
        Ok(Self::from_members(lower.clone(), upper.clone(), members))
    }

    /// Möbius function `μ(lower, ·)` by the defining recursion.
    pub fn mobius<T: Scalar>(&self) -> MobiusTable<'_, T> {
        let mut mu: Vec<T> = Vec::with_capacity(self.len());
        mu.push(T::one());
        for j in 1..self.len() {
            let sum = self.below[j].ones().fold(T::zero(), |acc, i| acc + mu[i].clone());
            mu.push(-sum);
        }
        MobiusTable { interval: self, mu }
    }

    /// Hasse diagram in DOT, nodes labeled by their JSON encoding.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, d) in self.members.iter().enumerate() {
            let label = serde_json::to_string(d).expect("sublattice serializes");
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (i, j) in self.cover_edges() {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for IntervalPoset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<[usize; 2]> = self.cover_edges().into_iter().map(|(i, j)| [i, j]).collect();
        let mut s = serializer.serialize_struct("IntervalPoset", 4)?;
        s.serialize_field("lower", &self.lower)?;
        s.serialize_field("upper", &self.upper)?;
        s.serialize_field("members", &self.members)?;
        s.serialize_field("cover_edges", &edges)?;
        s.end()
    }
}

/// `μ(lower, D)` for every member `D` of an interval.
#[derive(Clone, Debug)]
pub struct MobiusTable<'a, T> {
    interval: &'a IntervalPoset,
    mu: Vec<T>,
}

impl<'a, T: Scalar> MobiusTable<'a, T> {
    pub fn interval(&self) -> &'a IntervalPoset {
        self.interval
    }

    pub fn values(&self) -> &[T] {
        &self.mu
    }

    pub fn get(&self, i: usize) -> &T {
        &self.mu[i]
    }

    pub fn at(&self, d: &ImpLattice) -> Option<&T> {
        self.interval.index_of(d).map(|i| &self.mu[i])
    }

    /// `μ(lower, upper)`.
    pub fn top(&self) -> &T {
        self.mu.last().expect("intervals are nonempty")
    }

    /// Checks `μ(lower, lower) = 1` and `Σ_{lower ≤ E ≤ D} μ(lower, E) = 0`
    /// for every `D > lower`, summing over the order relation afresh.
    pub fn satisfies_defining_identity(&self) -> bool {
        if !self.mu[0].is_one() {
            return false;
        }
        (1..self.mu.len()).all(|j| {
            let sum = (0..=j)
                .filter(|&i| self.interval.leq(i, j))
                .fold(T::zero(), |acc, i| acc + self.mu[i].clone());
            sum.is_zero()
        })
    }
}

/// `μ(lower, upper)` in the lattice of implication sublattices.
pub fn mobius_oracle<T: Scalar>(lower: &ImpLattice, upper: &ImpLattice) -> Result<T> {
    let interval = IntervalPoset::new(lower, upper)?;
    let value = interval.mobius::<T>().top().clone();
    Ok(value)
}

/// Both sides of the closure theorem for `closure` at `y ⊆ z`:
/// `Σ_{x ≥ y, cl(x) = cl(z)} μ(y, x)` against `μ_closed(y, cl(z))` when `y`
/// is closed and `0` otherwise.
pub fn closure_theorem_check(closure: Closure, y: &ImpLattice, z: &ImpLattice) -> Result<Verdict> {
    if !y.is_sub(z)? {
        return Err(Error::NotComparable);
    }
    let n = y.n();
    let above_y = IntervalPoset::new(y, &ImpLattice::full(n)?)?;
    let mu = above_y.mobius::<ExactInt>();
    let (lhs, rhs) = closure_theorem_sides(closure, &mu, z, &mut HashMap::new())?;
    Ok(Verdict::new(format!("closure_theorem.{}", closure.name()), &[("n", n as i64)], lhs, rhs))
}

type ClosedMobiusCache = HashMap<ImpLattice, ExactInt>;

fn closure_theorem_sides(
    closure: Closure,
    above_y: &MobiusTable<'_, ExactInt>,
    z: &ImpLattice,
    closed_cache: &mut ClosedMobiusCache,
) -> Result<(ExactInt, ExactInt)> {
    let y = above_y.interval().lower();
    let cz = closure.apply(z);
    let lhs = above_y
        .interval()
        .members()
        .iter()
        .zip(above_y.values())
        .filter(|(x, _)| closure.apply(x) == cz)
        .fold(ExactInt::from(0), |acc, (_, mu)| acc + mu);
    let rhs = if closure.is_closed(y) {
        match closed_cache.get(&cz) {
            Some(v) => v.clone(),
            None => {
                let closed = IntervalPoset::closed_suborder(closure, y, &cz)?;
                let v = closed.mobius::<ExactInt>().top().clone();
                closed_cache.insert(cz, v.clone());
                v
            }
        }
    } else {
        ExactInt::from(0)
    };
    Ok((lhs, rhs))
}

/// Checks the closure theorem at every pair `y ⊆ z` of sublattices of `B_n`.
/// Returns `(pairs that held, pairs examined)`.
pub fn closure_theorem_sweep(closure: Closure, n: usize) -> Result<(usize, usize)> {
    let full = ImpLattice::full(n)?;
    let mut held = 0;
    let mut total = 0;
    for y in enumerate_all(n)? {
        let above_y = IntervalPoset::new(&y, &full)?;
        let mu = above_y.mobius::<ExactInt>();
        let mut cache = ClosedMobiusCache::new();
        for z in above_y.members() {
            let (lhs, rhs) = closure_theorem_sides(closure, &mu, z, &mut cache)?;
            total += 1;
            held += usize::from(lhs == rhs);
        }
    }
    Ok((held, total))
}

/// Relabels the atoms of `mask` onto `0..popcount(mask)` in ascending order.
fn compress(bits: u32, mask: u32) -> u32 {
    crate::element::bit_indices(mask)
        .enumerate()
        .filter(|&(_, atom)| bits & (1 << atom) != 0)
        .fold(0, |acc, (j, _)| acc | 1 << j)
}

/// `C ∩ [a, 1]` as a Boolean subalgebra of `[a, 1]`, for `C ⊇ A`, `a = min A`.
fn part_above(c: &ImpLattice, a: u32) -> ImpLattice {
    let blocks = c.block_masks().iter().copied().filter(|&b| b & a == 0).collect();
    ImpLattice::from_masks(c.n(), a, blocks)
}

/// `C ∩ [0, a]` as an implication sublattice of `[0, a] ≅ B_{|a|}`.
fn part_below(c: &ImpLattice, a: u32) -> ImpLattice {
    let m = a.count_ones() as usize;
    let blocks = c.block_masks().iter().copied().filter(|&b| b & !a == 0).map(|b| compress(b, a)).collect();
    ImpLattice::from_masks(m, compress(c.base().bits(), a), blocks)
}

/// `[A, B] ≅ P1 × P2` with `P1` the Boolean subalgebras of `[a, 1]` above
/// `A` and `P2` all implication sublattices of `[0, a]`.
#[derive(Clone, Debug)]
pub struct ProductDecomposition {
    pub whole: IntervalPoset,
    pub p1: IntervalPoset,
    pub p2: IntervalPoset,
    /// `map[i]` is the image of `whole.members()[i]` as indices into `p1`, `p2`.
    pub map: Vec<(usize, usize)>,
}

impl ProductDecomposition {
    pub fn new(a: &ImpLattice) -> Result<Self> {
        let n = a.n();
        let base = a.base().bits();
        let m = a.base_rank();
        let whole = IntervalPoset::new(a, &ImpLattice::full(n)?)?;
        let p1 = IntervalPoset::new(a, &a.up_closure())?;
        let p2 = IntervalPoset::new(&ImpLattice::top_only(m)?, &ImpLattice::full(m)?)?;
        let map = whole
            .members()
            .iter()
            .map(|c| {
                let above = p1.index_of(&part_above(c, base));
                let below = p2.index_of(&part_below(c, base));
                above.zip(below).ok_or(Error::NotComparable)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ProductDecomposition { whole, p1, p2, map })
    }

    pub fn is_bijection(&self) -> bool {
        let mut hit = FixedBitSet::with_capacity(self.p1.len() * self.p2.len());
        for &(i, j) in &self.map {
            let key = i * self.p2.len() + j;
            if hit.put(key) {
                return false;
            }
        }
        self.map.len() == self.p1.len() * self.p2.len()
    }

    /// `C ⊆ C'` iff both coordinates are ordered the same way.
    pub fn is_order_isomorphism(&self) -> bool {
        let m = self.whole.len();
        (0..m).all(|i| {
            (0..m).all(|j| {
                let (a1, b1) = self.map[i];
                let (a2, b2) = self.map[j];
                self.whole.leq(i, j) == (self.p1.leq(a1, a2) && self.p2.leq(b1, b2))
            })
        })
    }

    /// `(μ(A, B), μ_P1 · μ_P2)` by the recursion on each poset.
    pub fn mobius_sides<T: Scalar>(&self) -> (T, T) {
        let whole = self.whole.mobius::<T>().top().clone();
        let product = self.p1.mobius::<T>().top().clone() * self.p2.mobius::<T>().top().clone();
        (whole, product)
    }
}

/// Checks that swapping atoms `c1` and `c2` (both below `min A`) maps
/// `[A, [c1, 1]]` onto `[A, [c2, 1]]` preserving order.
///
/// The verdict counts members whose image lands in the target interval plus
/// the order check, against the size of the source interval plus one.
pub fn interval_isomorphism_via_permutation(a: &ImpLattice, c1: usize, c2: usize) -> Result<Verdict> {
    let n = a.n();
    let base = a.base();
    for c in [c1, c2] {
        if !base.contains_atom(c) {
            return Err(Error::AtomNotBelowBase { atom: c });
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(c1, c2);
    let filter = |c| ImpLattice::principal_filter(crate::Element::atom(n, c).expect("atom below base"));
    let source = IntervalPoset::new(a, &filter(c1))?;
    let target = IntervalPoset::new(a, &filter(c2))?;
    let images: Vec<Option<usize>> = source
        .members()
        .iter()
        .map(|d| d.apply_atom_permutation(&perm).map(|img| target.index_of(&img)))
        .collect::<Result<_>>()?;
    let landed = images.iter().flatten().count();
    let mut distinct: Vec<usize> = images.iter().flatten().copied().collect();
    distinct.sort_unstable();
    distinct.dedup();
    let onto = landed == source.len() && distinct.len() == target.len();
    let order = onto
        && (0..source.len()).all(|i| {
            (0..source.len()).all(|j| source.leq(i, j) == target.leq(images[i].unwrap(), images[j].unwrap()))
        });
    Ok(Verdict::tally(
        "lemma.transposition_isomorphism",
        &[("n", n as i64), ("c1", c1 as i64), ("c2", c2 as i64)],
        landed + usize::from(onto && order),
        source.len() + 1,
    ))
}

/// For Boolean subalgebras `c1`, `c2` with the same number of atoms, checks
/// that relabeling blocks maps `[{1}, c1]` isomorphically onto `[{1}, c2]`
/// and that sizes, longest chains and `μ` agree.
///
/// The verdict counts the five conditions that held, out of five.
pub fn equal_width_subalgebra_isomorphism(c1: &ImpLattice, c2: &ImpLattice) -> Result<Verdict> {
    if c1.n() != c2.n() {
        return Err(Error::ContextMismatch { left: c1.n(), right: c2.n() });
    }
    if !c1.is_boolean_subalgebra() || !c2.is_boolean_subalgebra() || c1.width() != c2.width() {
        return Err(Error::Domain("expected Boolean subalgebras with equal atom counts".into()));
    }
    let n = c1.n();
    let top = ImpLattice::top_only(n)?;
    let left = IntervalPoset::new(&top, c1)?;
    let right = IntervalPoset::new(&top, c2)?;
    let images: Vec<Option<usize>> = left
        .members()
        .iter()
        .map(|d| {
            let img = c2.lift(&c1.project(d)?)?;
            Ok(right.index_of(&img))
        })
        .collect::<Result<_>>()?;
    let mut hits: Vec<usize> = images.iter().flatten().copied().collect();
    hits.sort_unstable();
    hits.dedup();
    let bijective = images.iter().all(Option::is_some) && hits.len() == right.len();
    let order = bijective
        && (0..left.len()).all(|i| {
            (0..left.len()).all(|j| left.leq(i, j) == right.leq(images[i].unwrap(), images[j].unwrap()))
        });
    let sizes = left.len() == right.len();
    let chains = left.maximal_chain_length() == right.maximal_chain_length();
    let mobius = left.mobius::<ExactInt>().top() == right.mobius::<ExactInt>().top();
    let held = [bijective, order, sizes, chains, mobius].iter().filter(|&&b| b).count();
    Ok(Verdict::tally(
        "lemma.equal_width_subalgebra_isomorphism",
        &[("n", n as i64), ("k", c1.width() as i64)],
        held,
        5,
    ))
}
