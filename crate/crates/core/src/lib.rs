//! Combinatorial bases of standard modules for the affine Lie algebra
//! `C_l^(1)`.
//!
//! The crate enumerates monomial bases of Feigin–Stoyanovsky type subspaces
//! `W(Λ) = U(g̃_1) v_Λ` (difference and initial conditions on colored
//! variables `x_ij(n)`), their shifted copies `W_{-2m}`, and the stabilized
//! semi-infinite monomials that form a basis of the whole module `L(Λ)`.
//! An independent Freudenthal recursion computes weight multiplicities of
//! `L(Λ)` so the two graded characters can be compared exactly.
//!
//! Module map:
//!
//! - [`cartan`]: the `C_l` root data, colors, the normalized form.
//! - [`monomial`]: colored variables, canonical monomials, their order.
//! - [`conditions`]: difference/initial conditions and level-k factorization.
//! - [`tails`]: the periodic blocks `x(μ_Λ)` and the chain of embeddings.
//! - [`enumerate`]: basis generation and graded characters.
//! - [`freudenthal`]: the weight-multiplicity oracle.
//! - [`brute`]: exhaustive generators used to cross-check the fast paths.

pub mod brute;
pub mod cartan;
pub mod conditions;
pub mod enumerate;
pub mod error;
pub mod freudenthal;
pub mod monomial;
pub mod tails;

pub use cartan::{Color, EpsVector, HighestWeight, Rank};
pub use conditions::{Factorization, LevelOneTarget};
pub use enumerate::GradedCharacter;
pub use error::{Error, Result};
pub use freudenthal::{AffineWeight, Freudenthal};
pub use monomial::{Monomial, Variable, WeightTag};
pub use tails::{ExtremalWeight, SemiInfiniteMonomial};
