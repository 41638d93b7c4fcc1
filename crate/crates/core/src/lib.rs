//! Exact decision procedures for S-idempotent, S-multiplication, S-pure and
//! S-copure properties of finite modules over finite commutative rings, plus
//! a harness that checks the known implications between them on generated
//! families of instances.
//!
//! Elements of every ring and module are dense indices ([`Elem`]) in
//! lexicographic order of their coordinate vectors, with `0` the zero
//! element. Sub-objects are stored as sorted element sets plus generators.

pub mod construct;
pub mod error;
pub mod harness;
pub mod instance;
pub mod lattice;
pub mod limits;
pub mod localize;
pub mod module;
pub mod multset;
pub mod props;
pub mod radix;
pub mod report;
pub mod ring;
pub mod set;

pub use error::{Error, Result};
pub use limits::Limits;
pub use module::{FiniteModule, ModulePresentation, Submodule};
pub use multset::MultSet;
pub use props::{Property, Verdict};
pub use ring::{FiniteRing, Ideal, RingPresentation};
pub use set::{Elem, ElemSet};
