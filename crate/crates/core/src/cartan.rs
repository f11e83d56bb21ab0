//! Root data of `C_l` in ε-coordinates.
//!
//! Everything here is exact integer arithmetic. The invariant form is
//! normalized so that the long root `θ = 2ε_1` has `⟨θ,θ⟩ = 2`, which makes
//! `⟨ε_i,ε_j⟩ = δ_ij / 2`; values of the form are therefore carried as
//! doubled integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// The rank `l` of `C_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(usize);

impl Rank {
    pub fn new(ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Rank(ell))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// The dual Coxeter number `l + 1`.
    pub fn dual_coxeter(self) -> i64 {
        self.0 as i64 + 1
    }
}

/// A weight or root written in the basis `ε_1, …, ε_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EpsVector(pub Vec<i64>);

impl EpsVector {
    pub fn zero(ell: usize) -> Self {
        EpsVector(vec![0; ell])
    }

    /// The unit vector `ε_i` (1-based).
    pub fn unit(i: usize, ell: usize) -> Self {
        let mut v = vec![0; ell];
        v[i - 1] = 1;
        EpsVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn scaled(&self, factor: i64) -> Self {
        EpsVector(self.0.iter().map(|c| c * factor).collect())
    }

    pub fn dot(&self, other: &Self) -> i64 {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Representative of the orbit under signed permutations: absolute
    /// values sorted in descending order.
    pub fn dominant(&self) -> Self {
        let mut v: Vec<i64> = self.0.iter().map(|c| c.abs()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        EpsVector(v)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().is_none_or(|&c| c >= 0)
    }
}

impl fmt::Display for EpsVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, c) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &EpsVector {
    type Output = EpsVector;
    fn add(self, rhs: &EpsVector) -> EpsVector {
        debug_assert_eq!(self.len(), rhs.len());
        EpsVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &EpsVector {
    type Output = EpsVector;
    fn sub(self, rhs: &EpsVector) -> EpsVector {
        debug_assert_eq!(self.len(), rhs.len());
        EpsVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &EpsVector {
    type Output = EpsVector;
    fn neg(self) -> EpsVector {
        EpsVector(self.0.iter().map(|c| -c).collect())
    }
}

impl AddAssign<&EpsVector> for EpsVector {
    fn add_assign(&mut self, rhs: &EpsVector) {
        debug_assert_eq!(self.len(), rhs.len());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&EpsVector> for EpsVector {
    fn sub_assign(&mut self, rhs: &EpsVector) {
        debug_assert_eq!(self.len(), rhs.len());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

/// A color `(ij) = ε_i + ε_j` with `1 ≤ i ≤ j ≤ l`.
///
/// `i` is the column and `j` the row of the color in the triangle picture.
/// The order puts `(i'j') < (ij)` when `i' > i`, or `i' = i` and `j' > j`,
/// so `(1,1)` is the greatest color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Color {
    i: u8,
    j: u8,
}

impl Color {
    pub fn new(i: usize, j: usize, ell: Rank) -> Result<Self> {
        if i < 1 || i > j || j > ell.get() || j > u8::MAX as usize {
            return Err(Error::InvalidColor {
                i,
                j,
                ell: ell.get(),
            });
        }
        Ok(Color {
            i: i as u8,
            j: j as u8,
        })
    }

    /// Builds a color without a rank bound. Panics unless `1 ≤ i ≤ j`.
    pub fn of(i: usize, j: usize) -> Self {
        assert!(i >= 1 && i <= j && j <= u8::MAX as usize, "bad color ({i},{j})");
        Color {
            i: i as u8,
            j: j as u8,
        }
    }

    /// Column index.
    pub fn i(self) -> usize {
        self.i as usize
    }

    /// Row index.
    pub fn j(self) -> usize {
        self.j as usize
    }

    pub fn fits(self, ell: Rank) -> bool {
        self.j() <= ell.get()
    }
}

impl Ord for Color {
    fn cmp(&self, other: &Self) -> Ordering {
        other.i.cmp(&self.i).then(other.j.cmp(&self.j))
    }
}

impl PartialOrd for Color {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// All colors for rank `l`, ascending.
pub fn colors(ell: Rank) -> Vec<Color> {
    let l = ell.get();
    let mut out = Vec::with_capacity(l * (l + 1) / 2);
    for i in (1..=l).rev() {
        for j in (i..=l).rev() {
            out.push(Color::of(i, j));
        }
    }
    out
}

pub fn color_weight(c: Color, ell: Rank) -> Result<EpsVector> {
    if !c.fits(ell) {
        return Err(Error::InvalidColor {
            i: c.i(),
            j: c.j(),
            ell: ell.get(),
        });
    }
    let mut v = EpsVector::zero(ell.get());
    v.0[c.i() - 1] += 1;
    v.0[c.j() - 1] += 1;
    Ok(v)
}

/// Twice the normalized invariant form, i.e. the plain dot product.
pub fn bilinear(u: &EpsVector, v: &EpsVector) -> Result<i64> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.dot(v))
}

pub fn is_root(alpha: &EpsVector) -> bool {
    let nonzero: Vec<i64> = alpha.0.iter().copied().filter(|&c| c != 0).collect();
    match nonzero.as_slice() {
        [a] => a.abs() == 2,
        [a, b] => a.abs() == 1 && b.abs() == 1,
        _ => false,
    }
}

/// `α∨ = 2α/⟨α,α⟩`, which is `2α` for short roots and `α` for long ones.
pub fn coroot(alpha: &EpsVector) -> Result<EpsVector> {
    if !is_root(alpha) {
        return Err(Error::NotARoot(alpha.0.clone()));
    }
    // doubled norm is 2 (short) or 4 (long): 2α / (norm/2) = 4α / doubled
    let doubled = alpha.dot(alpha);
    Ok(EpsVector(alpha.0.iter().map(|c| 4 * c / doubled).collect()))
}

/// `ω_r = ε_1 + … + ε_r`; `r = 0` gives the zero vector.
pub fn fundamental_weight(r: usize, ell: Rank) -> Result<EpsVector> {
    let l = ell.get();
    if r > l {
        return Err(Error::IndexOutOfRange { index: r, ell: l });
    }
    let mut v = EpsVector::zero(l);
    for c in v.0.iter_mut().take(r) {
        *c = 1;
    }
    Ok(v)
}

/// Positive roots of `C_l`: `ε_i ± ε_j` (i < j) and `2ε_i`.
pub fn positive_roots(ell: Rank) -> Vec<EpsVector> {
    let l = ell.get();
    let mut out = Vec::with_capacity(l * l);
    for i in 1..=l {
        for j in (i + 1)..=l {
            let mut minus = EpsVector::zero(l);
            minus.0[i - 1] = 1;
            minus.0[j - 1] = -1;
            out.push(minus);
            let mut plus = EpsVector::zero(l);
            plus.0[i - 1] = 1;
            plus.0[j - 1] = 1;
            out.push(plus);
        }
        let mut long = EpsVector::zero(l);
        long.0[i - 1] = 2;
        out.push(long);
    }
    out
}

/// A dominant integral highest weight `Λ = k_0Λ_0 + … + k_lΛ_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HighestWeight {
    coeffs: Vec<u32>,
}

impl HighestWeight {
    /// `coeffs` is `(k_0, …, k_l)`; the rank is inferred from its length.
    pub fn new(coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::ZeroRank);
        }
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::ZeroLevel);
        }
        Ok(HighestWeight { coeffs })
    }

    pub fn with_rank(coeffs: Vec<u32>, ell: Rank) -> Result<Self> {
        if coeffs.len() != ell.get() + 1 {
            return Err(Error::HighestWeightLength {
                got: coeffs.len(),
                expected: ell.get() + 1,
            });
        }
        Self::new(coeffs)
    }

    /// `Λ_r`.
    pub fn fundamental(r: usize, ell: Rank) -> Result<Self> {
        if r > ell.get() {
            return Err(Error::IndexOutOfRange {
                index: r,
                ell: ell.get(),
            });
        }
        let mut coeffs = vec![0; ell.get() + 1];
        coeffs[r] = 1;
        Self::new(coeffs)
    }

    pub fn rank(&self) -> Rank {
        Rank(self.coeffs.len() - 1)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn level(&self) -> usize {
        self.coeffs.iter().map(|&c| c as usize).sum()
    }

    /// Classical part `Σ k_r ω_r`.
    pub fn classical(&self) -> EpsVector {
        let l = self.coeffs.len() - 1;
        let mut v = EpsVector::zero(l);
        for (r, &k) in self.coeffs.iter().enumerate().skip(1) {
            for c in v.0.iter_mut().take(r) {
                *c += k as i64;
            }
        }
        v
    }

    /// The fundamental indices `r_1 ≥ … ≥ r_k` with multiplicity.
    pub fn slots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.level());
        for (r, &k) in self.coeffs.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(r, k as usize));
        }
        out
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, c) in self.coeffs.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for HighestWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad highest weight coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        HighestWeight::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(l: usize) -> Rank {
        Rank::new(l).unwrap()
    }

    #[test]
    fn color_lists() {
        assert_eq!(colors(rank(1)), vec![Color::of(1, 1)]);
        assert_eq!(
            colors(rank(2)),
            vec![Color::of(2, 2), Color::of(1, 2), Color::of(1, 1)]
        );
        assert_eq!(colors(rank(3)).len(), 6);
        for l in 1..=6 {
            let cs = colors(rank(l));
            assert_eq!(cs.len(), l * (l + 1) / 2);
            assert!(cs.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(*cs.last().unwrap(), Color::of(1, 1));
        }
    }

    #[test]
    fn color_order_is_total() {
        let cs = colors(rank(4));
        for a in &cs {
            for b in &cs {
                let n = [a < b, a == b, a > b].iter().filter(|&&x| x).count();
                assert_eq!(n, 1);
            }
        }
    }

    #[test]
    fn color_weights() {
        assert_eq!(color_weight(Color::of(1, 1), rank(2)).unwrap().0, vec![2, 0]);
        assert_eq!(color_weight(Color::of(1, 2), rank(2)).unwrap().0, vec![1, 1]);
        assert_eq!(
            color_weight(Color::of(2, 3), rank(3)).unwrap().0,
            vec![0, 1, 1]
        );
        assert!(color_weight(Color::of(2, 3), rank(2)).is_err());
        assert!(Color::new(2, 1, rank(3)).is_err());
        assert!(Color::new(0, 1, rank(3)).is_err());
    }

    #[test]
    fn form_values() {
        let theta = EpsVector(vec![2, 0]);
        assert_eq!(bilinear(&theta, &theta).unwrap(), 4); // ⟨θ,θ⟩ = 2
        let e1 = EpsVector(vec![1, 0]);
        let e2 = EpsVector(vec![0, 1]);
        assert_eq!(bilinear(&e1, &e2).unwrap(), 0);
        assert_eq!(bilinear(&e1, &e1).unwrap(), 1); // 1/2
        assert!(bilinear(&e1, &EpsVector(vec![1])).is_err());
    }

    #[test]
    fn coroots() {
        assert_eq!(coroot(&EpsVector(vec![2, 0])).unwrap().0, vec![2, 0]);
        assert_eq!(coroot(&EpsVector(vec![1, 1])).unwrap().0, vec![2, 2]);
        assert_eq!(coroot(&EpsVector(vec![1, -1])).unwrap().0, vec![2, -2]);
        assert!(coroot(&EpsVector(vec![1, 0])).is_err());
        assert!(coroot(&EpsVector(vec![1, 1, 1])).is_err());
        let l = rank(3);
        let mut sum = EpsVector::zero(3);
        for c in colors(l) {
            sum += &coroot(&color_weight(c, l).unwrap()).unwrap();
        }
        assert_eq!(sum.0, vec![6, 6, 6]);
    }

    #[test]
    fn fundamental_weights() {
        assert_eq!(fundamental_weight(0, rank(2)).unwrap().0, vec![0, 0]);
        assert_eq!(fundamental_weight(2, rank(3)).unwrap().0, vec![1, 1, 0]);
        assert_eq!(fundamental_weight(2, rank(2)).unwrap().0, vec![1, 1]);
        assert!(fundamental_weight(3, rank(2)).is_err());
    }

    #[test]
    fn colors_pair_to_one_with_omega() {
        for l in 1..=6 {
            let omega = fundamental_weight(l, rank(l)).unwrap();
            for c in colors(rank(l)) {
                assert_eq!(bilinear(&omega, &color_weight(c, rank(l)).unwrap()).unwrap(), 2);
            }
        }
    }

    #[test]
    fn highest_weights() {
        let hw: HighestWeight = "1,0,2".parse().unwrap();
        assert_eq!(hw.rank().get(), 2);
        assert_eq!(hw.level(), 3);
        assert_eq!(hw.slots(), vec![2, 2, 0]);
        assert_eq!(hw.classical().0, vec![2, 2]);
        assert_eq!(hw.to_string(), "1,0,2");
        assert!("0,0".parse::<HighestWeight>().is_err());
        assert!("1".parse::<HighestWeight>().is_err());
        assert!("1,x".parse::<HighestWeight>().is_err());
        assert!(HighestWeight::with_rank(vec![1, 0], rank(2)).is_err());
    }

    #[test]
    fn positive_root_count() {
        for l in 1..=5 {
            let roots = positive_roots(rank(l));
            assert_eq!(roots.len(), l * l);
            assert!(roots.iter().all(is_root));
        }
    }
}
