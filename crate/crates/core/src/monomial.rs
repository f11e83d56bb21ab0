//! Monomials in the commuting variables `x_γ(n)`, `γ ∈ Γ`, `n ∈ Z`.
//!
//! A [`Monomial`] keeps its factors in canonical order: ascending from left
//! to right, so the greatest variable is the rightmost one. Monomials are
//! compared lexicographically starting from the right; when one runs out
//! first it is the smaller one, so the empty monomial is the minimum. With
//! the opposite tie rule `1 > x_12(-3)` but `x_22(-3) < x_22(-3) x_12(-3)`,
//! and the order would not be compatible with multiplication.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::cartan::{color_weight, Color, EpsVector, Rank};
use crate::error::{Error, Result};

/// A variable `x_γ(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Variable {
    pub color: Color,
    pub degree: i32,
}

impl Variable {
    pub fn new(color: Color, degree: i32) -> Self {
        Variable { color, degree }
    }

    /// `x_ij(n)` without a rank check.
    pub fn x(i: usize, j: usize, degree: i32) -> Self {
        Variable {
            color: Color::of(i, j),
            degree,
        }
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then(self.color.cmp(&other.color))
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x[{},{}]({})",
            self.color.i(),
            self.color.j(),
            self.degree
        )
    }
}

pub fn cmp_variable(a: &Variable, b: &Variable) -> Ordering {
    a.cmp(b)
}

/// Classical weight and δ-depth of a monomial; depth is `-Σ degrees`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightTag {
    pub classical: EpsVector,
    pub depth: i64,
}

impl WeightTag {
    pub fn zero(ell: Rank) -> Self {
        WeightTag {
            classical: EpsVector::zero(ell.get()),
            depth: 0,
        }
    }
}

impl Add for &WeightTag {
    type Output = WeightTag;
    fn add(self, rhs: &WeightTag) -> WeightTag {
        WeightTag {
            classical: &self.classical + &rhs.classical,
            depth: self.depth + rhs.depth,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<Variable>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_factors(mut factors: Vec<Variable>) -> Self {
        factors.sort_unstable();
        Monomial { factors }
    }

    /// Wraps factors that are already ascending.
    pub(crate) fn from_sorted(factors: Vec<Variable>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] <= w[1]));
        Monomial { factors }
    }

    pub fn factors(&self) -> &[Variable] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn fits(&self, ell: Rank) -> bool {
        self.factors.iter().all(|v| v.color.fits(ell))
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.factors.last().map(|v| v.degree)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.factors.first().map(|v| v.degree)
    }

    /// Raises every degree by `m`.
    pub fn shift(&self, m: i32) -> Monomial {
        Monomial {
            factors: self
                .factors
                .iter()
                .map(|v| Variable::new(v.color, v.degree + m))
                .collect(),
        }
    }

    pub fn multiply(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => {
                    if x <= y {
                        out.push(**x);
                        a.next();
                    } else {
                        out.push(**y);
                        b.next();
                    }
                }
                (Some(_), None) => out.extend(a.by_ref().copied()),
                (None, Some(_)) => out.extend(b.by_ref().copied()),
                (None, None) => break,
            }
        }
        Monomial { factors: out }
    }

    pub fn with_factor(&self, v: Variable) -> Monomial {
        let pos = self.factors.partition_point(|w| *w <= v);
        let mut factors = self.factors.clone();
        factors.insert(pos, v);
        Monomial { factors }
    }

    /// Removes `sub` as a sub-multiset, if it is one.
    pub fn divide(&self, sub: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.len().saturating_sub(sub.len()));
        let mut rest = sub.factors.iter().peekable();
        for v in &self.factors {
            match rest.peek() {
                Some(w) if *w == v => {
                    rest.next();
                }
                _ => out.push(*v),
            }
        }
        if rest.next().is_some() {
            return None;
        }
        Some(Monomial { factors: out })
    }

    pub fn weight(&self, ell: Rank) -> Result<WeightTag> {
        let mut tag = WeightTag::zero(ell);
        for v in &self.factors {
            tag.classical += &color_weight(v.color, ell)?;
            tag.depth -= v.degree as i64;
        }
        Ok(tag)
    }

    /// `-Σ degrees`.
    pub fn depth(&self) -> i64 {
        -self.factors.iter().map(|v| v.degree as i64).sum::<i64>()
    }

    /// Factors grouped by degree, highest degree first. Inside a group the
    /// factors are ordered by ascending column.
    pub fn degree_parts(&self) -> Vec<(i32, Vec<Color>)> {
        let mut parts: Vec<(i32, Vec<Color>)> = Vec::new();
        for v in self.factors.iter().rev() {
            match parts.last_mut() {
                Some((d, cs)) if *d == v.degree => cs.push(v.color),
                _ => parts.push((v.degree, vec![v.color])),
            }
        }
        parts
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.factors.iter().rev();
        let mut b = other.factors.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (Some(x), Some(y)) => match x.cmp(y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn cmp_monomial(p: &Monomial, q: &Monomial) -> Ordering {
    p.cmp(q)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (idx, v) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Accepts tokens `x[i,j](n)` separated by whitespace in any order;
    /// `1` or an empty string is the empty monomial.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Monomial::one());
        }
        let mut factors = Vec::new();
        for token in s.split_whitespace() {
            factors.push(parse_variable(token)?);
        }
        Ok(Monomial::from_factors(factors))
    }
}

fn parse_variable(token: &str) -> Result<Variable> {
    let bad = || Error::Parse(format!("expected x[i,j](n), got {token:?}"));
    let rest = token.strip_prefix("x[").ok_or_else(bad)?;
    let (idx, rest) = rest.split_once(']').ok_or_else(bad)?;
    let (i, j) = idx.split_once(',').ok_or_else(bad)?;
    let deg = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    let j: usize = j.trim().parse().map_err(|_| bad())?;
    let degree: i32 = deg.trim().parse().map_err(|_| bad())?;
    if i < 1 || i > j || j > u8::MAX as usize {
        return Err(Error::Parse(format!("invalid color ({i},{j}) in {token:?}")));
    }
    Ok(Variable::new(Color::of(i, j), degree))
}
