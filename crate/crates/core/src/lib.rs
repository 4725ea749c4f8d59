//! Exact arithmetic on ordinals below epsilon-zero and the number systems
//! built on them: surintegers, surrationals, root cuts and Gaussian surrationals.

pub mod complex;
pub mod cuts;
pub mod error;
pub mod eval;
pub mod hyper;
pub mod json;
pub mod natural;
pub mod oracle;
pub mod ordinal;
pub mod print;
pub mod surinteger;
pub mod surrational;
pub mod syntax;
pub mod value;

pub use error::{ArithError, ArithResult, Limits};
pub use eval::{Error, EvalError, Evaluator};
pub use ordinal::{Ordinal, OrdinalClass, Term};
pub use print::print_canonical;
pub use syntax::{parse, Diagnostic, Expr};
pub use value::Value;
