//! The formula language: lexer, parser, macro prelude, analysis, and the
//! evaluator.

pub mod ast;
pub mod eval;
pub mod lexer;
pub mod parser;
pub mod prelude;

pub use ast::{cost_estimate, Analysis, Formula, Var};
pub use eval::{evaluate, evaluate_sentence, BetweennessModel, Outcome};
pub use parser::Parser;
pub use prelude::{make_int_delta_slim, make_isometric, make_subgraph, Prelude};

use crate::error::Result;

/// Parse a formula against a prelude, expanding macros in place.
pub fn parse(text: &str, prelude: &Prelude) -> Result<Formula> {
    Parser::new(text, prelude)?.parse_formula()
}
