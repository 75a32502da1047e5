//! Exact closed forms for Möbius values of implication sublattices.
//!
//! Where a published form of an identity and the Möbius recursion disagree,
//! both are available: the `*_printed` / `paper` variants evaluate the
//! formula as it was stated, the default variants evaluate the form that
//! agrees with [`crate::poset::mobius_oracle`].

use std::fmt;

use num::rational::Ratio;
use num::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{enumerate_all, ImpLattice};
use crate::partition::set_partitions_with_blocks;
use crate::poset::mobius_oracle;
use crate::scalar::Scalar;
use crate::verdict::Verdict;
use crate::ExactInt;

pub fn factorial<T: Scalar>(m: usize) -> T {
    (1..=m).fold(T::one(), |acc, i| acc * T::from_count(i))
}

pub fn binomial<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    // each prefix product is itself a binomial coefficient, so the division is exact
    (0..k).fold(T::one(), |acc, i| acc * T::from_count(n - i) / T::from_count(i + 1))
}

/// Rows `0..=n` of the Stirling triangle of the second kind:
/// `table[m][j] = S(m, j)`.
pub fn stirling2_table<T: Scalar>(n: usize) -> Vec<Vec<T>> {
    let mut table: Vec<Vec<T>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = vec![T::zero(); m + 1];
        if m == 0 {
            row[0] = T::one();
        } else {
            let prev = &table[m - 1];
            for j in 1..=m {
                let stay = if j < m { T::from_count(j) * prev[j].clone() } else { T::zero() };
                row[j] = stay + prev[j - 1].clone();
            }
        }
        table.push(row);
    }
    table
}

/// `S(n, k)`, the number of partitions of an `n`-set into `k` blocks.
/// Zero when `k > n`.
pub fn stirling2<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    stirling2_table::<T>(n)[n][k].clone()
}

/// Bell number: the number of set partitions of an `n`-set.
pub fn bell<T: Scalar>(n: usize) -> T {
    stirling2_table::<T>(n).pop().expect("table has n + 1 rows").into_iter().fold(T::zero(), |acc, s| acc + s)
}

/// `∏ (−1)^{m_i − 1} (m_i − 1)!`: the Möbius value between a set partition
/// with block sizes `m_i` and the partition into singletons.
pub fn partition_mobius<T: Scalar>(block_sizes: &[usize]) -> Result<T> {
    if block_sizes.is_empty() || block_sizes.contains(&0) {
        return Err(Error::Domain(format!(
            "block sizes must be a nonempty list of positive integers, got {block_sizes:?}"
        )));
    }
    Ok(block_sizes.iter().fold(T::one(), |acc, &m| acc * T::sign_pow(m as i64 - 1) * factorial::<T>(m - 1)))
}

/// `μ(A, B_n) = (−1)^{n − w(A)} |a|! ∏_b (|b| − 1)!`.
pub fn method_one_mobius<T: Scalar>(a: &ImpLattice) -> T {
    let exponent = a.n() as i64 - a.width() as i64;
    method_one_with_sign(a, exponent)
}

/// The same product with the sign exponent `|a| + w(A) − w(B)` as originally
/// stated. It differs from [`method_one_mobius`] by `(−1)^{|a|}`.
pub fn method_one_printed<T: Scalar>(a: &ImpLattice) -> T {
    let exponent = a.base_rank() as i64 + a.width() as i64 - a.n() as i64;
    method_one_with_sign(a, exponent)
}

fn method_one_with_sign<T: Scalar>(a: &ImpLattice, exponent: i64) -> T {
    a.blocks().fold(T::sign_pow(exponent) * factorial::<T>(a.base_rank()), |acc, b| {
        acc * factorial::<T>(b.rank() - 1)
    })
}

/// `μ({1}, B_n) = (−1)^n n!`.
pub fn mu_top_closed_form<T: Scalar>(n: usize) -> T {
    T::sign_pow(n as i64) * factorial::<T>(n)
}

/// Which signed Stirling chain sum a [`ChainSumReport`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainVariant {
    /// `Σ (−1)^{p+1} S(n_0,n_1)…S(n_{p−1},n_p)` over chains `n = n_0 > … > n_p = 1`.
    PaperM2,
    /// `Σ (−1)^{n_p + p} S(n_0,n_1)…` over chains `n = n_0 > … > n_p ≥ 1`,
    /// the trivial chain contributing `(−1)^n`.
    CorrectedM2,
    /// `Σ (−1)^p S(n_0,n_1)…` over chains `n = n_0 > … > n_p = k`.
    PChain,
}

impl ChainVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            ChainVariant::PaperM2 => "paper_m2",
            ChainVariant::CorrectedM2 => "corrected_m2",
            ChainVariant::PChain => "p_chain",
        }
    }
}

impl fmt::Display for ChainVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Value of a signed Stirling chain sum together with the number of chains
/// it ranges over (saturating at `u128::MAX`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSumReport<T> {
    pub n: usize,
    pub variant: ChainVariant,
    pub k: Option<usize>,
    pub value: T,
    pub chain_count: u128,
}

impl<T: Scalar> Serialize for ChainSumReport<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ChainSumReport", 5)?;
        s.serialize_field("variant", self.variant.as_str())?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("value", &self.value.to_string())?;
        s.serialize_field("chain_count", &self.chain_count)?;
        s.end()
    }
}

/// Sums `end_weight(n_p) · (−1)^p · ∏ S(n_{i−1}, n_i)` over strictly
/// decreasing chains from `top` whose last entry lies in `lo..=hi`.
///
/// Suffix sums are memoized per starting value: a chain from `m` is `m`
/// alone (when `m` is an admissible end) or `m` followed by a chain from
/// some `j < m`, and that extension flips the sign.
fn chain_sum<T: Scalar>(
    stirling: &[Vec<T>],
    top: usize,
    lo: usize,
    hi: usize,
    end_weight: impl Fn(usize) -> T,
) -> (T, u128) {
    let mut value: Vec<T> = vec![T::zero(); top + 1];
    let mut count: Vec<u128> = vec![0; top + 1];
    for m in lo..=top {
        let (mut v, mut c) = if m <= hi { (end_weight(m), 1u128) } else { (T::zero(), 0) };
        for j in lo..m {
            v = v - stirling[m][j].clone() * value[j].clone();
            c = c.saturating_add(count[j]);
        }
        value[m] = v;
        count[m] = c;
    }
    (value[top].clone(), count[top])
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(what()))
    }
}

/// The chain sum printed for `μ({1}, B_n)`, evaluated as written. It equals
/// `(−1)^n (n − 1)!`, not `(−1)^n n!`.
pub fn method_two_paper_sum<T: Scalar>(n: usize) -> Result<ChainSumReport<T>> {
    require(n >= 1, || format!("n must be at least 1, got {n}"))?;
    let s = stirling2_table::<T>(n);
    let (value, chain_count) = chain_sum(&s, n, 1, 1, |_| -T::one());
    Ok(ChainSumReport { n, variant: ChainVariant::PaperM2, k: None, value, chain_count })
}

/// `(−1)^n + Σ_{p ≥ 1} (−1)^{n_p + p} ∏ S(n_{i−1}, n_i)`, equivalently
/// `f(n) = (−1)^n − Σ_{k<n} S(n, k) f(k)`; equals `(−1)^n n!`.
pub fn method_two_corrected_sum<T: Scalar>(n: usize) -> Result<ChainSumReport<T>> {
    require(n >= 1, || format!("n must be at least 1, got {n}"))?;
    let s = stirling2_table::<T>(n);
    let (value, chain_count) = chain_sum(&s, n, 1, n, |m| T::sign_pow(m as i64));
    Ok(ChainSumReport { n, variant: ChainVariant::CorrectedM2, k: None, value, chain_count })
}

fn check_k_n(k: usize, n: usize) -> Result<()> {
    require(1 <= k && k <= n, || format!("need 1 <= k <= n, got k={k}, n={n}"))
}

/// `Σ (−1)^p S(n_0, n_1)…S(n_{p−1}, n_p)` over chains `n = n_0 > … > n_p = k`.
pub fn p_chain_formula<T: Scalar>(k: usize, n: usize) -> Result<ChainSumReport<T>> {
    check_k_n(k, n)?;
    let s = stirling2_table::<T>(n);
    let (value, chain_count) = chain_sum(&s, n, k, k, |_| T::one());
    Ok(ChainSumReport { n, variant: ChainVariant::PChain, k: Some(k), value, chain_count })
}

/// `p(k, B_n) = Σ μ(A, B_n)` over Boolean subalgebras `A` with `k` atoms,
/// each term computed by the Möbius recursion.
pub fn p_oracle<T: Scalar>(k: usize, n: usize) -> Result<T> {
    check_k_n(k, n)?;
    let full = ImpLattice::full(n)?;
    enumerate_all(n)?
        .iter()
        .filter(|a| a.is_boolean_subalgebra() && a.width() == k)
        .try_fold(T::zero(), |acc, a| Ok(acc + mobius_oracle::<T>(a, &full)?))
}

/// `p(k, B_n)` as the sum of [`partition_mobius`] over the `k`-block set
/// partitions of the atoms.
pub fn p_by_partition_types<T: Scalar>(k: usize, n: usize) -> Result<T> {
    check_k_n(k, n)?;
    set_partitions_with_blocks(crate::element::full_mask(n), k).iter().try_fold(T::zero(), |acc, blocks| {
        let sizes: Vec<usize> = blocks.iter().map(|b| b.count_ones() as usize).collect();
        Ok(acc + partition_mobius::<T>(&sizes)?)
    })
}

/// `sums[j] = Σ 1/(n_1 ⋯ n_j)` over ordered compositions `(n_1, …, n_j)` of
/// `n` into positive parts, for `j = 0..=n`.
fn composition_reciprocal_sums<T: Scalar>(n: usize) -> Vec<Ratio<T>> {
    // table[m][j]: compositions of m into j parts
    let zero = Ratio::from_integer(T::zero());
    let mut table = vec![vec![zero.clone(); n + 1]; n + 1];
    table[0][0] = Ratio::from_integer(T::one());
    for m in 1..=n {
        for j in 1..=m {
            let mut acc = zero.clone();
            for t in 1..=m - j + 1 {
                let prev = &table[m - t][j - 1];
                if !prev.is_zero() {
                    acc = acc + prev.clone() / Ratio::from_integer(T::from_count(t));
                }
            }
            table[m][j] = acc;
        }
    }
    table.pop().expect("n + 1 rows")
}

fn integral<T: Scalar>(value: Ratio<T>) -> Result<T> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegerResult(value.to_string()))
    }
}

/// `(−1)^{n−k} (n!/k!) Σ 1/∏ n_i` over ordered compositions of `n` into `k`
/// positive parts, for every `k = 1..=n` (index `k − 1`). This agrees with
/// [`p_oracle`].
pub fn p_composition_row<T: Scalar>(n: usize) -> Result<Vec<T>> {
    require(n >= 1, || format!("n must be at least 1, got {n}"))?;
    let sums = composition_reciprocal_sums::<T>(n);
    let n_fact = Ratio::from_integer(factorial::<T>(n));
    (1..=n)
        .map(|k| {
            let sign = Ratio::from_integer(T::sign_pow((n - k) as i64));
            let k_fact = Ratio::from_integer(factorial::<T>(k));
            integral(sign * n_fact.clone() / k_fact * sums[k].clone())
        })
        .collect()
}

/// Corrected composition formula for `p(k, B_n)`; see [`p_composition_row`].
pub fn p_composition_formula<T: Scalar>(k: usize, n: usize) -> Result<T> {
    check_k_n(k, n)?;
    Ok(p_composition_row::<T>(n)?.swap_remove(k - 1))
}

/// The composition formula as originally stated, without the `1/k!`:
/// `(−1)^{n−k} n! Σ 1/∏ n_i`. Equals `k! · p(k, B_n)`.
pub fn p_composition_printed<T: Scalar>(k: usize, n: usize) -> Result<T> {
    check_k_n(k, n)?;
    let sums = composition_reciprocal_sums::<T>(n);
    let sign = Ratio::from_integer(T::sign_pow((n - k) as i64));
    integral(sign * Ratio::from_integer(factorial::<T>(n)) * sums[k].clone())
}

/// `(−1)^{n−1} (n − 1)!` against the chain sum `p_chain(1, n)`.
pub fn idsix_check(n: usize) -> Result<Verdict> {
    let chain = p_chain_formula::<ExactInt>(1, n)?;
    let closed = ExactInt::sign_pow(n as i64 - 1) * factorial::<ExactInt>(n - 1);
    Ok(Verdict::new("p.k1_chain_closed_form", &[("n", n as i64)], chain.value, closed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Element;

    fn lat(n: usize, base: &[usize], blocks: &[&[usize]]) -> ImpLattice {
        let el = |a: &[usize]| Element::from_atoms(n, a.iter().copied()).unwrap();
        ImpLattice::new(n, el(base), blocks.iter().map(|b| el(b))).unwrap()
    }

    /// Every strictly decreasing chain from `top` down to something in `lo..=hi`.
    fn brute_chains(top: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![vec![top]];
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap();
            if (lo..=hi).contains(&last) {
                out.push(chain.clone());
            }
            for next in lo..last {
                let mut c = chain.clone();
                c.push(next);
                stack.push(c);
            }
        }
        out
    }

    /// Stirling numbers by inclusion–exclusion, independent of the recurrence.
    fn stirling_explicit(n: usize, k: usize) -> i128 {
        let sum: i128 = (0..=k)
            .map(|j| {
                let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
                sign * binomial::<i128>(k, j) * (j as i128).pow(n as u32)
            })
            .sum();
        sum / factorial::<i128>(k)
    }

    fn brute_sum(top: usize, lo: usize, hi: usize, term_sign: impl Fn(usize, usize) -> i128) -> (i128, u128) {
        let chains = brute_chains(top, lo, hi);
        let value = chains
            .iter()
            .map(|c| {
                let p = c.len() - 1;
                let prod: i128 = c.windows(2).map(|w| stirling_explicit(w[0], w[1])).product();
                term_sign(p, *c.last().unwrap()) * prod
            })
            .sum();
        (value, chains.len() as u128)
    }

    fn parity(e: usize) -> i128 {
        if e.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    #[test]
    fn basic_numbers() {
        assert_eq!(stirling2::<i64>(3, 2), 3);
        for n in 0..10 {
            assert_eq!(stirling2::<i64>(n, n), 1);
        }
        assert_eq!(bell::<i64>(4), 15);
        assert_eq!(factorial::<i64>(0), 1);
        assert_eq!(factorial::<i64>(6), 720);
        assert_eq!(binomial::<i64>(10, 3), 120);
        assert_eq!(binomial::<i64>(3, 5), 0);
        assert_eq!(stirling2::<i64>(2, 5), 0);
        for n in 0..12 {
            for k in 0..=n {
                assert_eq!(stirling2::<i128>(n, k), stirling_explicit(n, k), "S({n},{k})");
            }
        }
    }

    #[test]
    fn partition_mobius_examples() {
        assert_eq!(partition_mobius::<i64>(&[1, 1, 1, 1]).unwrap(), 1);
        assert_eq!(partition_mobius::<i64>(&[2]).unwrap(), -1);
        assert_eq!(partition_mobius::<i64>(&[3, 1]).unwrap(), 2);
        assert!(partition_mobius::<i64>(&[]).is_err());
        assert!(partition_mobius::<i64>(&[2, 0]).is_err());
    }

    #[test]
    fn method_one_examples() {
        for n in 0..6 {
            assert_eq!(method_one_mobius::<i64>(&ImpLattice::full(n).unwrap()), 1);
            assert_eq!(
                method_one_mobius::<i64>(&ImpLattice::top_only(n).unwrap()),
                mu_top_closed_form::<i64>(n)
            );
        }
        let a = lat(2, &[0], &[&[1]]);
        assert_eq!(method_one_mobius::<i64>(&a), -1);
        assert_eq!(method_one_printed::<i64>(&a), 1);
    }

    #[test]
    fn mu_top_examples() {
        assert_eq!(mu_top_closed_form::<i64>(0), 1);
        assert_eq!(mu_top_closed_form::<i64>(2), 2);
        assert_eq!(mu_top_closed_form::<i64>(4), 24);
    }

    #[test]
    fn paper_sum_examples() {
        let vals: Vec<i64> = (1..=3).map(|n| method_two_paper_sum::<i64>(n).unwrap().value).collect();
        assert_eq!(vals, [-1, 1, -2]);
        assert!(method_two_paper_sum::<i64>(0).is_err());
    }

    #[test]
    fn corrected_sum_examples() {
        let vals: Vec<i64> = (1..=3).map(|n| method_two_corrected_sum::<i64>(n).unwrap().value).collect();
        assert_eq!(vals, [-1, 2, -6]);
    }

    #[test]
    fn chain_sums_match_brute_force_enumeration() {
        for n in 1..=10 {
            let paper = method_two_paper_sum::<i128>(n).unwrap();
            assert_eq!((paper.value, paper.chain_count), brute_sum(n, 1, 1, |p, _| -parity(p)));
            let corrected = method_two_corrected_sum::<i128>(n).unwrap();
            assert_eq!(
                (corrected.value, corrected.chain_count),
                brute_sum(n, 1, n, |p, end| parity(p + end))
            );
            for k in 1..=n {
                let chain = p_chain_formula::<i128>(k, n).unwrap();
                assert_eq!((chain.value, chain.chain_count), brute_sum(n, k, k, |p, _| parity(p)));
            }
        }
    }

    #[test]
    fn p_examples() {
        for n in 1..=4 {
            assert_eq!(p_oracle::<i64>(n, n).unwrap(), 1);
            assert_eq!(p_chain_formula::<i64>(n, n).unwrap().value, 1);
        }
        assert_eq!(p_oracle::<i64>(1, 3).unwrap(), 2);
        assert_eq!(p_oracle::<i64>(2, 4).unwrap(), 11);
        assert_eq!(p_chain_formula::<i64>(1, 3).unwrap().value, 2);
        assert_eq!(p_chain_formula::<i64>(2, 4).unwrap().value, 11);
        assert_eq!(p_by_partition_types::<i64>(2, 4).unwrap(), 11);
        assert!(p_oracle::<i64>(0, 3).is_err());
        assert!(p_chain_formula::<i64>(4, 3).is_err());
    }

    #[test]
    fn composition_examples() {
        for n in 1..=8 {
            assert_eq!(
                p_composition_formula::<i64>(1, n).unwrap(),
                i64::sign_pow(n as i64 - 1) * factorial::<i64>(n - 1)
            );
        }
        assert_eq!(p_composition_formula::<i64>(2, 2).unwrap(), 1);
        assert_eq!(p_composition_printed::<i64>(2, 2).unwrap(), 2);
        assert_eq!(p_composition_formula::<i64>(2, 3).unwrap(), -3);
        assert_eq!(p_composition_printed::<i64>(2, 3).unwrap(), -6);
    }

    #[test]
    fn composition_sums_match_enumeration() {
        fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return if n == 0 { vec![vec![]] } else { vec![] };
            }
            (1..=n)
                .flat_map(|first| {
                    compositions(n - first, k - 1).into_iter().map(move |mut rest| {
                        rest.insert(0, first);
                        rest
                    })
                })
                .collect()
        }
        for n in 1..=8 {
            let sums = composition_reciprocal_sums::<i64>(n);
            for (k, sum) in sums.iter().enumerate().skip(1) {
                let expected = compositions(n, k).iter().fold(Ratio::from_integer(0i64), |acc, c| {
                    acc + Ratio::new(1, c.iter().product::<usize>() as i64)
                });
                assert_eq!(sum, &expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn idsix_examples() {
        for (n, v) in [(1, 1), (3, 2), (4, -6)] {
            let verdict = idsix_check(n).unwrap();
            assert!(verdict.pass);
            assert_eq!(verdict.lhs, v.into());
        }
    }

    #[test]
    fn report_json() {
        let r = method_two_corrected_sum::<ExactInt>(3).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"variant":"corrected_m2","n":3,"k":null,"value":"-6","chain_count":4}"#
        );
        let r = p_chain_formula::<ExactInt>(2, 4).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"variant":"p_chain","n":4,"k":2,"value":"11","chain_count":2}"#
        );
    }
}
