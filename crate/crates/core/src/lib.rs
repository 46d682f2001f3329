pub mod charpoly;
pub mod circulant;
pub mod cyclotomic;
pub mod error;
pub mod factor;
pub mod ffpoly;
pub mod galois;
pub mod matrix;
pub mod modp;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod spectral;
pub mod symmetry;
pub mod transfer;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};

/// Independent sets in the torus `C_7 ⊠ C_7 ⊠ C_7`, quoted from the
/// literature (independence number 33, 16672544 maximum sets) and not
/// recomputed here.
pub const DOCUMENTED_C7_CUBE_TORUS_COUNT: &str = "2544256835855451311632423";

pub type IntPoly = poly::Poly<BigInt>;
pub type RatPoly = poly::Poly<BigRational>;
pub type CycPoly = poly::Poly<cyclotomic::Cyclotomic>;
pub type IntMatrix = matrix::Matrix<BigInt>;
pub type PolyMatrix = matrix::Matrix<IntPoly>;
