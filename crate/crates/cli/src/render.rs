//! ASCII picture of a monomial as a path in the strip of glued triangles
//! `Γ, Γ^τ, Γ, Γ^τ, …`.
//!
//! Degrees are laid out from the highest one down, one triangle per degree
//! (empty degrees included). An even-indexed degree sits in an upright copy
//! of `Γ` (color `(i,j)` at row `j`, column `i`); the next degree sits in the
//! transposed copy glued below it (row `i`, column `j`). Each pair shifts
//! `l` cells down and to the right, so a monomial satisfying the difference
//! conditions reads as one diagonal path running down the strip.

use std::collections::BTreeMap;

use cbasis_core::{Monomial, Rank};

pub fn render(p: &Monomial, ell: Rank) -> String {
    let l = ell.get();
    let (Some(top), Some(bottom)) = (p.max_degree(), p.min_degree()) else {
        return "(empty monomial)\n".to_string();
    };
    let parts = (top - bottom + 1) as usize;
    let blocks = parts.div_ceil(2);
    let rows = blocks * l + if parts.is_multiple_of(2) { l } else { 0 };
    let cols = blocks * l;
    let mut grid = vec![vec![' '; cols]; rows];
    let mut counts: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for v in p.factors() {
        let t = (top - v.degree) as usize;
        *counts.entry(cell(t, v.color.i(), v.color.j(), l)).or_default() += 1;
    }
    for t in 0..parts {
        for j in 1..=l {
            for i in 1..=j {
                let (r, c) = cell(t, i, j, l);
                grid[r][c] = match counts.get(&(r, c)) {
                    None => '.',
                    Some(1) => '*',
                    Some(&n) if n <= 9 => char::from_digit(n, 10).unwrap_or('+'),
                    Some(_) => '+',
                };
            }
        }
    }
    let mut out = String::new();
    for (t, d) in (bottom..=top).rev().enumerate() {
        let shape = if t % 2 == 0 { "Γ" } else { "Γ^τ" };
        out.push_str(&format!("# part {t}: degree {d} in {shape}\n"));
    }
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn cell(t: usize, i: usize, j: usize, l: usize) -> (usize, usize) {
    let base = (t / 2) * l;
    if t.is_multiple_of(2) {
        (base + j - 1, base + i - 1)
    } else {
        (base + l + i - 1, base + j - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(l: usize) -> Rank {
        Rank::new(l).unwrap()
    }

    #[test]
    fn single_degree() {
        let p: Monomial = "x[2,3](-1) x[1,1](-1)".parse().unwrap();
        let s = render(&p, rank(3));
        let grid: Vec<&str> = s.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(grid, vec!["*", "..", ".*."]);
    }

    #[test]
    fn two_degrees_glue_transposed() {
        let p: Monomial = "x[2,2](-2) x[1,1](-1)".parse().unwrap();
        let s = render(&p, rank(2));
        let grid: Vec<&str> = s.lines().filter(|l| !l.starts_with('#')).collect();
        // upright triangle for degree -1, transposed one for degree -2
        assert_eq!(grid, vec!["*", "..", "..", " *"]);
    }

    #[test]
    fn repeated_factor_shows_multiplicity() {
        let p: Monomial = "x[1,1](-1) x[1,1](-1)".parse().unwrap();
        assert!(render(&p, rank(1)).ends_with("2\n"));
        assert_eq!(render(&Monomial::one(), rank(2)), "(empty monomial)\n");
    }
}
