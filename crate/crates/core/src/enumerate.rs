//! Basis enumeration and graded characters.
//!
//! Level-1 bases are generated degree by degree, top degree first. The
//! only state carried between degrees is the frontier of the previous
//! degree: whether it was occupied and, if so, the largest column of its
//! diagonal path. Level-k bases are products of level-1 bases, one per slot,
//! deduplicated on canonical form.
//!
//! All depths reported here are relative to the highest weight vector
//! `v_Λ`: a head in `W_{-2m}` contributes its own depth plus the depth of
//! the extremal vector `v_Λ^{(-2m)}`.

use std::collections::{BTreeMap, HashMap};

use crate::cartan::{Color, EpsVector, HighestWeight, Rank};
use crate::conditions::check_dc_ic_level_k;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, Variable, WeightTag};
use crate::tails::{extremal_weight, normalize, SemiInfiniteMonomial};

/// Counts indexed by `(depth, classical weight)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedCharacter {
    entries: BTreeMap<(i64, EpsVector), u64>,
}

impl GradedCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, depth: i64, classical: EpsVector, count: u64) {
        if count == 0 {
            return;
        }
        *self.entries.entry((depth, classical)).or_insert(0) += count;
    }

    pub fn get(&self, depth: i64, classical: &EpsVector) -> u64 {
        self.entries
            .get(&(depth, classical.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// Entries sorted by depth, then lexicographically by weight.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &EpsVector, u64)> {
        self.entries.iter().map(|((d, mu), &c)| (*d, mu, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Total count per depth.
    pub fn depth_census(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for ((d, _), c) in &self.entries {
            *out.entry(*d).or_insert(0) += c;
        }
        out
    }

    pub fn truncated(&self, max_depth: i64) -> GradedCharacter {
        GradedCharacter {
            entries: self
                .entries
                .iter()
                .filter(|((d, _), _)| *d <= max_depth)
                .map(|(k, v)| (k.clone(), *v))
                .collect(),
        }
    }

    /// Entries at one depth.
    pub fn slice(&self, depth: i64) -> Vec<(EpsVector, u64)> {
        self.entries
            .range((depth, EpsVector::default())..)
            .take_while(|((d, _), _)| *d == depth)
            .map(|((_, mu), c)| (mu.clone(), *c))
            .collect()
    }

    /// First `(depth, weight, self, other)` where the two disagree.
    pub fn first_mismatch(&self, other: &GradedCharacter) -> Option<(i64, EpsVector, u64, u64)> {
        let mut keys: Vec<&(i64, EpsVector)> =
            self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|(d, mu)| {
            let a = self.get(*d, mu);
            let b = other.get(*d, mu);
            (a != b).then(|| (*d, mu.clone(), a, b))
        })
    }
}

pub fn graded_character<'a>(items: impl IntoIterator<Item = &'a WeightTag>) -> GradedCharacter {
    let mut ch = GradedCharacter::new();
    for tag in items {
        ch.add(tag.depth, tag.classical.clone(), 1);
    }
    ch
}

/// A diagonal path in the color triangle, listed by ascending column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalPath {
    pub colors: Vec<Color>,
    pub frontier: PathFrontier,
}

/// What the next lower degree needs to know about a degree part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathFrontier {
    pub occupied: bool,
    pub max_column: usize,
}

impl PathFrontier {
    pub const EMPTY: PathFrontier = PathFrontier {
        occupied: false,
        max_column: 0,
    };

    /// Rows of the next lower degree must exceed this.
    pub fn row_floor(self) -> usize {
        if self.occupied {
            self.max_column
        } else {
            0
        }
    }
}

/// All diagonal paths whose rows exceed `row_floor`, the empty path first.
pub fn diagonal_paths(ell: Rank, row_floor: usize) -> Vec<DiagonalPath> {
    fn go(l: usize, min_i: usize, min_j: usize, current: &mut Vec<Color>, out: &mut Vec<DiagonalPath>) {
        for i in min_i..=l {
            for j in i.max(min_j)..=l {
                current.push(Color::of(i, j));
                out.push(DiagonalPath {
                    colors: current.clone(),
                    frontier: PathFrontier {
                        occupied: true,
                        max_column: i,
                    },
                });
                go(l, i + 1, j + 1, current, out);
                current.pop();
            }
        }
    }
    let mut out = vec![DiagonalPath {
        colors: Vec::new(),
        frontier: PathFrontier::EMPTY,
    }];
    go(ell.get(), 1, row_floor + 1, &mut Vec::new(), &mut out);
    out
}

struct LevelOneSearch {
    /// lower_bound[d][f]: least depth contributed by degrees d, d-1, … when
    /// degree d has row floor f (only d ≥ 1 is stored; lower degrees give 0)
    lower_bound: Vec<Vec<i64>>,
    base: i64,
    max_depth: i64,
    out: Vec<(Monomial, i64)>,
}

impl LevelOneSearch {
    fn bound(&self, degree: i32, floor: usize) -> i64 {
        if degree >= 1 {
            self.lower_bound[degree as usize][floor]
        } else {
            0
        }
    }

    /// `paths[f]` holds the diagonal paths whose rows all exceed `f`.
    fn run(&mut self, paths: &[Vec<DiagonalPath>], degree: i32, floor: usize, acc: i64, stack: &mut Vec<Variable>) {
        if degree <= -1 && self.base + acc - degree as i64 > self.max_depth {
            let mut factors = stack.clone();
            factors.reverse();
            self.out.push((Monomial::from_sorted(factors), self.base + acc));
            return;
        }
        for path in &paths[floor] {
            let next = acc - degree as i64 * path.colors.len() as i64;
            let next_floor = path.frontier.row_floor();
            if self.base + next + self.bound(degree - 1, next_floor) > self.max_depth {
                continue;
            }
            let pushed = path.colors.len();
            stack.extend(path.colors.iter().map(|&c| Variable::new(c, degree)));
            self.run(paths, degree - 1, next_floor, next, stack);
            stack.truncate(stack.len() - pushed);
        }
    }
}

/// Basis monomials of `W_{-2m}` for `L(Λ_r)` whose depth relative to
/// `v_{Λ_r}` is at most `max_depth`, with that depth.
pub fn level_one_shifted(r: usize, ell: Rank, m: u32, max_depth: u32) -> Vec<(Monomial, i64)> {
    let l = ell.get();
    assert!(r <= l, "r = {r} out of range for rank {l}");
    let top = 2 * m as i32 - 1;
    let paths: Vec<Vec<DiagonalPath>> = (0..=l).map(|f| diagonal_paths(ell, f)).collect();
    let mut lower_bound = vec![vec![0i64; l + 1]; top.max(0) as usize + 1];
    for d in 1..=top.max(0) as usize {
        for f in 0..=l {
            lower_bound[d][f] = paths[f]
                .iter()
                .map(|p| {
                    let below = if d >= 2 {
                        lower_bound[d - 1][p.frontier.row_floor()]
                    } else {
                        0
                    };
                    -(d as i64) * p.colors.len() as i64 + below
                })
                .min()
                .unwrap_or(0);
        }
    }
    let base = l as i64 * (m as i64) * (m as i64) - (m as i64) * r as i64;
    let mut search = LevelOneSearch {
        lower_bound,
        base,
        max_depth: max_depth as i64,
        out: Vec::new(),
    };
    search.run(&paths, top, r, 0, &mut Vec::new());
    let mut out = search.out;
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Basis monomials of `W(Λ_r)` with every degree in `{-1, …, -N}` and
/// depth at most `N`, sorted ascending.
pub fn enumerate_level1(r: usize, ell: Rank, max_depth: u32) -> Vec<Monomial> {
    level_one_shifted(r, ell, 0, max_depth)
        .into_iter()
        .map(|(p, _)| p)
        .collect()
}

/// Basis monomials of `W_{-2m}` for `L(Λ)` with depth relative to `v_Λ` at
/// most `max_depth`, sorted ascending.
pub fn enumerate_level_k(hw: &HighestWeight, m: u32, max_depth: u32) -> Vec<Monomial> {
    let ell = hw.rank();
    let mut per_r: HashMap<usize, Vec<(Monomial, i64)>> = HashMap::new();
    for r in hw.slots() {
        per_r
            .entry(r)
            .or_insert_with(|| {
                let mut v = level_one_shifted(r, ell, m, max_depth);
                v.sort_by_key(|(_, d)| *d);
                v
            });
    }
    let mut products: HashMap<Monomial, i64> = HashMap::new();
    products.insert(Monomial::one(), 0);
    for r in hw.slots() {
        let slot = &per_r[&r];
        let mut next: HashMap<Monomial, i64> = HashMap::with_capacity(products.len() * 2);
        for (p, dp) in &products {
            for (q, dq) in slot {
                if dp + dq > max_depth as i64 {
                    break;
                }
                next.entry(p.multiply(q)).or_insert(dp + dq);
            }
        }
        products = next;
    }
    let mut out: Vec<Monomial> = products.into_keys().collect();
    out.sort();
    debug_assert!(out
        .iter()
        .all(|p| check_dc_ic_level_k(p, hw, m).is_some()));
    out
}

/// Weight of `x(head) v_Λ^{(-2m)}`: its classical weight and its depth
/// below `v_Λ`.
pub fn shifted_weight(head: &Monomial, hw: &HighestWeight, m: u32) -> Result<WeightTag> {
    let w = head.weight(hw.rank())?;
    let ext = extremal_weight(hw, m);
    Ok(WeightTag {
        classical: &w.classical + &ext.classical,
        depth: w.depth + ext.depth,
    })
}

/// Character of a list of heads of `W_{-2m}`.
pub fn shifted_character(heads: &[Monomial], hw: &HighestWeight, m: u32) -> Result<GradedCharacter> {
    let mut ch = GradedCharacter::new();
    for p in heads {
        let w = shifted_weight(p, hw, m)?;
        ch.add(w.depth, w.classical, 1);
    }
    Ok(ch)
}

/// The canonical semi-infinite basis up to a depth bound.
#[derive(Debug, Clone)]
pub struct SemiInfiniteBasis {
    /// Normalized pairs sorted by depth, then `m`, then head.
    pub elements: Vec<SemiInfiniteMonomial>,
    pub character: GradedCharacter,
    /// The tail index at which the census was taken.
    pub sweep_m: u32,
}

/// Sweeps `m` upward until the census of `B_{-2m}` at depths `≤ N` is the
/// same for three consecutive values, then normalizes.
///
/// The census at depth `≤ N` is exact from `m = N` on (`N + 1` when `Λ` is
/// not a multiple of `Λ_0`), so the sweep is capped at `N + kl + 3`.
pub fn enumerate_semi_infinite(hw: &HighestWeight, max_depth: u32) -> Result<SemiInfiniteBasis> {
    let cap = max_depth + (hw.level() * hw.rank().get()) as u32 + 3;
    let mut history: Vec<GradedCharacter> = Vec::new();
    for m in 0..=cap {
        let heads = enumerate_level_k(hw, m, max_depth);
        let census = shifted_character(&heads, hw, m)?;
        history.push(census);
        let n = history.len();
        if n >= 3 && history[n - 1] == history[n - 2] && history[n - 2] == history[n - 3] {
            let mut elements: Vec<(i64, SemiInfiniteMonomial)> = heads
                .into_iter()
                .map(|head| {
                    let s = normalize(&SemiInfiniteMonomial::new(m, head), hw);
                    let d = s.weight(hw).map(|w| w.depth);
                    d.map(|d| (d, s))
                })
                .collect::<Result<_>>()?;
            elements.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.m.cmp(&b.1.m)).then(a.1.head.cmp(&b.1.head)));
            return Ok(SemiInfiniteBasis {
                elements: elements.into_iter().map(|(_, s)| s).collect(),
                character: history.pop().expect("non-empty"),
                sweep_m: m,
            });
        }
    }
    Err(Error::NoStabilization { cap })
}
