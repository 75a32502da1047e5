//! Set partitions of a bit-set.

/// All partitions of the atoms in `mask` into nonempty blocks.
///
/// Each partition lists its blocks ordered by least atom. The empty mask has
/// exactly one (empty) partition.
pub(crate) fn set_partitions(mask: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(mask, &mut current, &mut out);
    out
}

fn extend(rest: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(current.clone());
        return;
    }
    let lowest = rest & rest.wrapping_neg();
    let others = rest & !lowest;
    // every subset of the remaining atoms can join the block of the lowest one
    let mut sub = others;
    loop {
        current.push(lowest | sub);
        extend(others & !sub, current, out);
        current.pop();
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & others;
    }
}

/// Set partitions of `mask` with exactly `k` blocks.
pub(crate) fn set_partitions_with_blocks(mask: u32, k: usize) -> Vec<Vec<u32>> {
    set_partitions(mask).into_iter().filter(|p| p.len() == k).collect()
}
