//! Exact computations in the shuffle algebra presentation of the elliptic Hall algebra,
//! the slope subalgebras and their symmetric-function models, and the extended affine
//! symmetric group.

pub mod affine;
pub mod arith;
pub mod pbw;
pub mod shuffle;
pub mod solomon;
pub mod symfunc;
pub mod verify;

pub use affine::{AffinePerm, CycleData};
pub use arith::{ArithError, LaurentPoly, Monomial, RatFunc, Rational, Vars};
pub use pbw::{PbwExpansion, PbwIndex, Window};
pub use shuffle::{Presentation, ShuffleElement, ShuffleError, SlopeParams};
pub use solomon::GroupAlgElem;
pub use symfunc::{Partition, Plethysm, SignSeq, SymFuncExpr};
pub use verify::{Status, Suite, VerifyOptions, VerifyReport};
