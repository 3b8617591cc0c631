pub mod braid;
pub mod brunnian;
pub mod error;
pub mod expr;
pub mod maps;
pub mod oracle;
pub mod pure;
pub mod verify;

pub use braid::{BraidWord, Generator, Permutation};
pub use error::{Error, Result};
pub use oracle::{FreeAutomorphism, FreeWord, Limits, Oracle};
pub use pure::{AbelianVector, PureLetter, PureWord};
