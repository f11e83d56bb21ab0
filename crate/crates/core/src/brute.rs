//! Exhaustive generators. Nothing here knows about difference conditions;
//! these are the slow references the structured enumerators are checked
//! against.

use crate::cartan::{colors, Rank};
use crate::monomial::{Monomial, Variable};

/// Every monomial with all degrees `≤ -1` and depth at most `max_depth`,
/// sorted ascending.
pub fn all_monomials(ell: Rank, max_depth: u32) -> Vec<Monomial> {
    let mut vars = Vec::new();
    for n in 1..=max_depth as i32 {
        for c in colors(ell) {
            vars.push(Variable::new(c, -n));
        }
    }
    vars.sort_unstable();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(&vars, 0, max_depth as i64, &mut current, &mut out);
    out.sort();
    out
}

fn extend(vars: &[Variable], from: usize, budget: i64, current: &mut Vec<Variable>, out: &mut Vec<Monomial>) {
    out.push(Monomial::from_factors(current.clone()));
    for idx in from..vars.len() {
        let cost = -(vars[idx].degree as i64);
        if cost > budget {
            continue;
        }
        current.push(vars[idx]);
        extend(vars, idx, budget - cost, current, out);
        current.pop();
    }
}

/// All partitions of `n`, parts in non-increasing order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=max_part.min(n)).rev() {
            current.push(part);
            go(n - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n` whose parts are at least `min_part` and
/// pairwise differ by at least 2.
pub fn gap_two_partition_count(n: u32, min_part: u32) -> u64 {
    partitions(n)
        .into_iter()
        .filter(|p| {
            p.iter().all(|&x| x >= min_part) && p.windows(2).all(|w| w[0] >= w[1] + 2)
        })
        .count() as u64
}
