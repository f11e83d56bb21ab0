//! Weight multiplicities of `L(Λ)` by Freudenthal's recursion.
//!
//! This is the independent oracle for the graded characters produced by the
//! combinatorial enumerators. All inner products are doubled so that they
//! stay integral: for affine weights `λ = λ̄ + kΛ_0 - dδ`,
//!
//! ```text
//! 2(λ, λ') = λ̄·λ̄' - 2k d' - 2k' d
//! ```
//!
//! where `·` is the plain dot product in ε-coordinates.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use crate::cartan::{positive_roots, EpsVector, HighestWeight, Rank};
use crate::enumerate::GradedCharacter;
use crate::error::{Error, Result};

/// `λ̄ + level·Λ_0 - depth·δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub classical: EpsVector,
    pub level: i64,
    pub depth: i64,
}

impl AffineWeight {
    pub fn new(classical: EpsVector, level: i64, depth: i64) -> Self {
        AffineWeight {
            classical,
            level,
            depth,
        }
    }
}

/// A positive affine root `ᾱ + nδ` with its multiplicity; `depth` is `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootWithMult {
    pub classical: EpsVector,
    pub depth: i64,
    pub multiplicity: u32,
}

/// Positive roots with `n ≤ max_n`: `ᾱ + nδ` (`n ≥ 0`), `-ᾱ + nδ` (`n ≥ 1`)
/// and the imaginary `nδ` of multiplicity `l`.
pub fn positive_roots_up_to(ell: Rank, max_n: u32) -> Vec<RootWithMult> {
    let finite = positive_roots(ell);
    let mut out = Vec::new();
    for n in 0..=max_n as i64 {
        for a in &finite {
            out.push(RootWithMult {
                classical: a.clone(),
                depth: n,
                multiplicity: 1,
            });
        }
        if n == 0 {
            continue;
        }
        for a in &finite {
            out.push(RootWithMult {
                classical: -a,
                depth: n,
                multiplicity: 1,
            });
        }
        out.push(RootWithMult {
            classical: EpsVector::zero(ell.get()),
            depth: n,
            multiplicity: ell.get() as u32,
        });
    }
    out
}

/// `ρ = (l, l-1, …, 1) + (l+1)Λ_0`.
pub fn rho(ell: Rank) -> AffineWeight {
    let l = ell.get();
    AffineWeight {
        classical: EpsVector((1..=l as i64).rev().collect()),
        level: ell.dual_coxeter(),
        depth: 0,
    }
}

/// Doubled normalized form on affine weights.
pub fn affine_pairing(u: &AffineWeight, v: &AffineWeight) -> i64 {
    u.classical.dot(&v.classical) - 2 * u.level * v.depth - 2 * v.level * u.depth
}

/// Memoized multiplicity oracle for one highest weight.
///
/// By default multiplicities are memoized on dominant representatives
/// (the finite Weyl group acts by signed permutations and fixes depth).
/// [`Freudenthal::raw`] switches orbit reduction off, so each weight is
/// computed from its own recursion; this is how Weyl invariance is tested.
#[derive(Debug)]
pub struct Freudenthal {
    hw: HighestWeight,
    ell: Rank,
    level: i64,
    top: EpsVector,
    rho_bar: EpsVector,
    /// `|Λ̄+ρ̄|²`, doubled.
    top_norm: i64,
    roots: Rc<Vec<RootWithMult>>,
    roots_depth: i64,
    memo: HashMap<(i64, Vec<i64>), u64>,
    orbit_reduction: bool,
}

impl Freudenthal {
    pub fn new(hw: &HighestWeight) -> Self {
        let ell = hw.rank();
        let top = hw.classical();
        let rho_bar = rho(ell).classical;
        let shifted = &top + &rho_bar;
        Freudenthal {
            hw: hw.clone(),
            ell,
            level: hw.level() as i64,
            top_norm: shifted.dot(&shifted),
            top,
            rho_bar,
            roots: Rc::new(Vec::new()),
            roots_depth: -1,
            memo: HashMap::new(),
            orbit_reduction: true,
        }
    }

    pub fn raw(hw: &HighestWeight) -> Self {
        Freudenthal {
            orbit_reduction: false,
            ..Freudenthal::new(hw)
        }
    }

    pub fn highest_weight(&self) -> &HighestWeight {
        &self.hw
    }

    pub fn weight_multiplicity(&mut self, w: &AffineWeight) -> Result<u64> {
        if w.level != self.level {
            return Err(Error::LevelMismatch {
                got: w.level,
                expected: self.level,
            });
        }
        if w.classical.len() != self.ell.get() {
            return Err(Error::LengthMismatch {
                left: w.classical.len(),
                right: self.ell.get(),
            });
        }
        self.ensure_roots(w.depth);
        self.mult(w.depth, &w.classical)
    }

    /// `Λ - λ ∈ Q_+`: with `Λ - λ = β̄ + dδ` this is `d ≥ 0` and
    /// `β̄ + dθ` a non-negative combination of the finite simple roots.
    pub fn in_support_cone(&self, depth: i64, classical: &EpsVector) -> bool {
        if depth < 0 {
            return false;
        }
        let mut v: Vec<i64> = self.top.0.iter().zip(&classical.0).map(|(a, b)| a - b).collect();
        v[0] += 2 * depth;
        // coefficients on ε_1-ε_2, …, ε_{l-1}-ε_l, 2ε_l
        let l = v.len();
        let mut partial = 0;
        for &c in &v[..l - 1] {
            partial += c;
            if partial < 0 {
                return false;
            }
        }
        let total = partial + v[l - 1];
        total >= 0 && total % 2 == 0
    }

    fn ensure_roots(&mut self, depth: i64) {
        if depth > self.roots_depth {
            self.roots = Rc::new(positive_roots_up_to(self.ell, depth.max(0) as u32));
            self.roots_depth = depth.max(0);
        }
    }

    /// `2(Λ+ρ, Λ+ρ) - 2(λ+ρ, λ+ρ)`.
    fn norm_gap(&self, depth: i64, classical: &EpsVector) -> i64 {
        let shifted = classical + &self.rho_bar;
        let k_plus_h = self.level + self.ell.dual_coxeter();
        self.top_norm - shifted.dot(&shifted) + 4 * k_plus_h * depth
    }

    fn mult(&mut self, depth: i64, classical: &EpsVector) -> Result<u64> {
        if !self.in_support_cone(depth, classical) {
            return Ok(0);
        }
        let key_vec = if self.orbit_reduction {
            classical.dominant()
        } else {
            classical.clone()
        };
        if depth == 0 && key_vec == self.top {
            return Ok(1);
        }
        let key = (depth, key_vec.0);
        if let Some(&m) = self.memo.get(&key) {
            return Ok(m);
        }
        let gap = self.norm_gap(depth, classical);
        // A weight of L(Λ) other than Λ has |λ+ρ| < |Λ+ρ|.
        if gap <= 0 {
            self.memo.insert(key, 0);
            return Ok(0);
        }
        let roots = Rc::clone(&self.roots);
        let mut sum: i128 = 0;
        for root in roots.iter().filter(|r| r.depth <= depth) {
            let mut mu = classical.clone();
            let mut mu_depth = depth;
            loop {
                mu += &root.classical;
                mu_depth -= root.depth;
                if mu_depth < 0 || !self.in_support_cone(mu_depth, &mu) {
                    break;
                }
                let m = self.mult(mu_depth, &mu)?;
                if m > 0 {
                    let pair = mu.dot(&root.classical) + 2 * self.level * root.depth;
                    sum += root.multiplicity as i128 * m as i128 * pair as i128;
                }
            }
        }
        let rhs = 2 * sum;
        let inconsistent = |detail: String| Error::Inconsistent {
            depth,
            classical: classical.0.clone(),
            detail,
        };
        if rhs % gap as i128 != 0 {
            return Err(inconsistent(format!("{rhs} not divisible by {gap}")));
        }
        let m = rhs / gap as i128;
        if m < 0 {
            return Err(inconsistent(format!("negative multiplicity {m}")));
        }
        let m = m as u64;
        self.memo.insert(key, m);
        Ok(m)
    }

    /// All weights of `L(Λ)` with depth at most `max_depth`.
    pub fn character_table(&mut self, max_depth: u32) -> Result<GradedCharacter> {
        self.ensure_roots(max_depth as i64);
        let mut table = GradedCharacter::new();
        for d in 0..=max_depth as i64 {
            let bound = self.top_norm + 4 * (self.level + self.ell.dual_coxeter()) * d;
            for dom in self.dominant_candidates(bound) {
                if !self.in_support_cone(d, &dom) {
                    continue;
                }
                if self.orbit_reduction {
                    let m = self.mult(d, &dom)?;
                    if m == 0 {
                        continue;
                    }
                    for w in weyl_orbit(&dom) {
                        table.add(d, w, m);
                    }
                } else {
                    for w in weyl_orbit(&dom) {
                        let m = self.mult(d, &w)?;
                        if m > 0 {
                            table.add(d, w, m);
                        }
                    }
                }
            }
        }
        Ok(table)
    }

    /// Dominant `λ̄` with `|λ̄+ρ̄|² ≤ bound` (doubled form = dot product).
    fn dominant_candidates(&self, bound: i64) -> Vec<EpsVector> {
        fn go(rho: &[i64], idx: usize, cap: i64, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<EpsVector>) {
            if idx == rho.len() {
                out.push(EpsVector(cur.clone()));
                return;
            }
            for c in 0..=cap {
                let sq = (c + rho[idx]) * (c + rho[idx]);
                if sq > budget {
                    break;
                }
                cur.push(c);
                go(rho, idx + 1, c, budget - sq, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        let cap = (bound.max(0) as f64).sqrt() as i64 + 1;
        go(&self.rho_bar.0, 0, cap, bound, &mut Vec::new(), &mut out);
        out
    }
}

/// Orbit of `v` under signed permutations, each element once.
pub fn weyl_orbit(v: &EpsVector) -> BTreeSet<EpsVector> {
    fn go(rest: &mut Vec<i64>, cur: &mut Vec<i64>, out: &mut BTreeSet<EpsVector>) {
        if rest.is_empty() {
            out.insert(EpsVector(cur.clone()));
            return;
        }
        let mut seen = BTreeSet::new();
        for idx in 0..rest.len() {
            let a = rest[idx];
            if !seen.insert(a) {
                continue;
            }
            rest.remove(idx);
            for s in if a == 0 { vec![0] } else { vec![a, -a] } {
                cur.push(s);
                go(rest, cur, out);
                cur.pop();
            }
            rest.insert(idx, a);
        }
    }
    let mut abs: Vec<i64> = v.0.iter().map(|c| c.abs()).collect();
    abs.sort_unstable();
    let mut out = BTreeSet::new();
    go(&mut abs, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(l: usize) -> Rank {
        Rank::new(l).unwrap()
    }

    fn hw(s: &str) -> HighestWeight {
        s.parse().unwrap()
    }

    fn partitions(n: usize) -> u64 {
        let mut p = vec![0u64; n + 1];
        p[0] = 1;
        for part in 1..=n {
            for t in part..=n {
                p[t] += p[t - part];
            }
        }
        p[n]
    }

    #[test]
    fn root_counts() {
        // 4 positive roots at n = 0; 8 real + 1 imaginary per n ≥ 1
        assert_eq!(positive_roots_up_to(rank(2), 2).len(), 4 + 9 + 9);
        assert_eq!(positive_roots_up_to(rank(3), 0).len(), 9);
    }

    #[test]
    fn pairing_of_rho_plus_lambda0() {
        let mut w = rho(rank(2));
        w.level += 1;
        assert_eq!(affine_pairing(&w, &w), 5);
        let delta = AffineWeight::new(EpsVector::zero(2), 0, -1);
        assert_eq!(affine_pairing(&delta, &delta), 0);
        assert_eq!(affine_pairing(&w, &delta), 2 * 4);
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(weyl_orbit(&EpsVector(vec![1, 0])).len(), 4);
        assert_eq!(weyl_orbit(&EpsVector(vec![1, 1])).len(), 4);
        assert_eq!(weyl_orbit(&EpsVector(vec![2, 1, 0])).len(), 24);
        assert_eq!(weyl_orbit(&EpsVector(vec![0, 0])).len(), 1);
    }

    #[test]
    fn top_slice_of_lambda1() {
        let h = hw("0,1,0");
        let mut f = Freudenthal::new(&h);
        let t = f.character_table(0).unwrap();
        let slice = t.slice(0);
        assert_eq!(slice.len(), 4);
        assert!(slice.iter().all(|(w, m)| *m == 1 && w.dominant().0 == vec![1, 0]));
    }

    #[test]
    fn level_one_sl2_matches_theta_over_eta() {
        // L(Λ_0) for l = 1: Σ_n q^{n²} z^{2n} / Π(1-q^j)
        let h = hw("1,0");
        let mut f = Freudenthal::new(&h);
        let t = f.character_table(12).unwrap();
        for d in 0..=12i64 {
            for n in -4i64..=4 {
                let expect = if n * n <= d { partitions((d - n * n) as usize) } else { 0 };
                assert_eq!(t.get(d, &EpsVector(vec![2 * n])), expect, "d={d} n={n}");
            }
            assert_eq!(t.get(d, &EpsVector(vec![1])), 0);
        }
    }

    #[test]
    fn level_one_sl2_lambda1() {
        // L(Λ_1) for l = 1: Σ_n q^{n²+n} z^{2n+1} / Π(1-q^j)
        let h = hw("0,1");
        let mut f = Freudenthal::new(&h);
        let t = f.character_table(10).unwrap();
        for d in 0..=10i64 {
            for n in -4i64..=3 {
                let e = n * n + n;
                let expect = if e <= d { partitions((d - e) as usize) } else { 0 };
                assert_eq!(t.get(d, &EpsVector(vec![2 * n + 1])), expect, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn raw_recursion_is_weyl_invariant() {
        for s in ["0,1,0", "1,1,0", "0,0,2"] {
            let h = hw(s);
            let a = Freudenthal::new(&h).character_table(3).unwrap();
            let b = Freudenthal::raw(&h).character_table(3).unwrap();
            assert_eq!(a.first_mismatch(&b), None, "{s}");
        }
    }

    #[test]
    fn support_and_level_checks() {
        let h = hw("0,1,0");
        let mut f = Freudenthal::new(&h);
        let above = AffineWeight::new(EpsVector(vec![3, 0]), 1, 0);
        assert_eq!(f.weight_multiplicity(&above).unwrap(), 0);
        let odd = AffineWeight::new(EpsVector(vec![0, 0]), 1, 1);
        assert_eq!(f.weight_multiplicity(&odd).unwrap(), 0);
        let wrong = AffineWeight::new(EpsVector(vec![1, 0]), 2, 0);
        assert!(matches!(f.weight_multiplicity(&wrong), Err(Error::LevelMismatch { .. })));
        assert!(!f.in_support_cone(-1, &EpsVector(vec![1, 0])));
    }
}
