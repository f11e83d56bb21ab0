//! Periodic tails and the chain of embeddings `B_0 ⊂ B_{-2} ⊂ B_{-4} ⊂ ⋯`.
//!
//! A semi-infinite monomial that stabilizes is stored as a pair `(m, head)`:
//! the head is a basis monomial of the shifted subspace `W_{-2m}` (degrees at
//! most `2m-1`), and the implicit tail is
//! `x(μ_Λ^{+2m+2}) x(μ_Λ^{+2m+4}) ⋯`. Embedding into `W_{-2m-2}` appends
//! the block `x(μ_Λ^{+2m+2})` to the head.

use std::fmt;
use std::str::FromStr;

use crate::cartan::{EpsVector, HighestWeight, Rank};
use crate::conditions::check_dc_ic_level_k;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, Variable, WeightTag};

/// `x(ν_r) = x_{l-r,l}(-1) ⋯ x_{1,r+1}(-1)`.
pub fn nu(r: usize, ell: Rank) -> Monomial {
    let l = ell.get();
    assert!(r <= l, "r = {r} out of range for rank {l}");
    Monomial::from_factors((1..=l - r).map(|s| Variable::x(s, r + s, -1)).collect())
}

/// `x(μ_r) = x(ν_{l-r}^-) x(ν_r)`: `r` factors in degree -2, `l-r` in -1.
pub fn mu(r: usize, ell: Rank) -> Monomial {
    nu(ell.get() - r, ell).shift(-1).multiply(&nu(r, ell))
}

/// `x(μ_Λ) = x(μ_{r_1}) ⋯ x(μ_{r_k})`.
pub fn mu_lambda(hw: &HighestWeight) -> Monomial {
    let ell = hw.rank();
    hw.slots()
        .into_iter()
        .fold(Monomial::one(), |acc, r| acc.multiply(&mu(r, ell)))
}

/// The `j`-th tail block `x(μ_Λ^{+2j})`, `j ≥ 1`.
pub fn tail_block(hw: &HighestWeight, j: u32) -> Monomial {
    assert!(j >= 1, "tail blocks are numbered from 1");
    mu_lambda(hw).shift(2 * j as i32)
}

/// Weight of the extremal vector `v_Λ^{(-2m)}` relative to `v_Λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtremalWeight {
    pub classical: EpsVector,
    pub depth: i64,
}

/// Telescopes `v_Λ^{(-2j+2)} = x(μ_Λ^{+2j}) v_Λ^{(-2j)}`: each step removes
/// the weight of one tail block.
pub fn extremal_weight(hw: &HighestWeight, m: u32) -> ExtremalWeight {
    let ell = hw.rank();
    let mut classical = hw.classical();
    let mut depth = 0i64;
    for j in 1..=m {
        let w = tail_block(hw, j)
            .weight(ell)
            .expect("tail blocks use colors of the rank");
        classical -= &w.classical;
        depth -= w.depth;
    }
    ExtremalWeight { classical, depth }
}

/// `(m, head)` standing for `x(head) x(μ_Λ^{+2m+2}) x(μ_Λ^{+2m+4}) ⋯ v_Λ^{(-∞)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemiInfiniteMonomial {
    pub m: u32,
    pub head: Monomial,
}

impl SemiInfiniteMonomial {
    pub fn new(m: u32, head: Monomial) -> Self {
        SemiInfiniteMonomial { m, head }
    }

    /// Whether the head is an element of `B_{-2m}` for `Λ`.
    pub fn is_valid(&self, hw: &HighestWeight) -> bool {
        self.head.fits(hw.rank()) && check_dc_ic_level_k(&self.head, hw, self.m).is_some()
    }

    /// Classical weight of the represented vector and its δ-depth below
    /// `v_Λ`.
    pub fn weight(&self, hw: &HighestWeight) -> Result<WeightTag> {
        let head = self.head.weight(hw.rank())?;
        let ext = extremal_weight(hw, self.m);
        Ok(WeightTag {
            classical: &head.classical + &ext.classical,
            depth: head.depth + ext.depth,
        })
    }
}

impl fmt::Display for SemiInfiniteMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}; {}", self.m, self.head)
    }
}

impl FromStr for SemiInfiniteMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected \"m=<int>; <monomial>\", got {s:?}"));
        let (m_part, head) = s.split_once(';').ok_or_else(bad)?;
        let m = m_part
            .trim()
            .strip_prefix("m=")
            .and_then(|v| v.trim().parse::<u32>().ok())
            .ok_or_else(bad)?;
        Ok(SemiInfiniteMonomial {
            m,
            head: head.parse()?,
        })
    }
}

pub fn embed(s: &SemiInfiniteMonomial, hw: &HighestWeight) -> SemiInfiniteMonomial {
    SemiInfiniteMonomial {
        m: s.m + 1,
        head: s.head.multiply(&tail_block(hw, s.m + 1)),
    }
}

/// Strips tail blocks from the top while the remainder stays a basis
/// monomial one step down the chain.
pub fn normalize(s: &SemiInfiniteMonomial, hw: &HighestWeight) -> SemiInfiniteMonomial {
    let mut current = s.clone();
    while current.m >= 1 {
        let block = tail_block(hw, current.m);
        match current.head.divide(&block) {
            Some(rest) if check_dc_ic_level_k(&rest, hw, current.m - 1).is_some() => {
                current = SemiInfiniteMonomial {
                    m: current.m - 1,
                    head: rest,
                };
            }
            _ => break,
        }
    }
    current
}
