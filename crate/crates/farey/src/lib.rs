//! Exact arithmetic for negative and regular continued fractions, the Farey
//! graph, polygon dissections and their quiddities, continuants and
//! Ptolemy–Plücker labelings, and minimal positive words for PSL(2,Z).
//!
//! Every algorithm is generic over an integer ring implementing [`Scalar`].
//! `BigInt` is the default and never overflows; `i64`/`i128` are available for
//! bounded enumerations where speed matters.

pub mod census;
pub mod cfrac;
pub mod dissect;
pub mod error;
pub mod fareywalk;
pub mod modmat;
pub mod numcore;
pub mod present;
pub mod ptolemy;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub use error::{Error, Result};

/// Integer ring used by every algorithm in the crate.
pub trait Scalar:
    Clone + Debug + Display + Hash + Integer + Signed + Roots + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Lossless conversion from a small integer.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("scalar cannot represent i64 value")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + Hash + Integer + Signed + Roots + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Unbounded integer.
pub type Int = num_bigint::BigInt;
/// Point of the rational projective line over [`Int`].
pub type Rational = numcore::ProjRational<Int>;
/// Sign-carrying coprime pair over [`Int`].
pub type Pair = numcore::SignedPair<Int>;
/// Real quadratic surd over [`Int`].
pub type Surd = numcore::QuadSurd<Int>;
/// Unimodular 2×2 matrix over [`Int`].
pub type Matrix = modmat::Mat2<Int>;
/// Finite word of coefficients over [`Int`].
pub type IntWord = Vec<Int>;

/// Converts a slice of small integers into a word over any scalar.
pub fn word<T: Scalar>(values: &[i64]) -> Vec<T> {
    values.iter().map(|&v| T::from_int(v)).collect()
}
