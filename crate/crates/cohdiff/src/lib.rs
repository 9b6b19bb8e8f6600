//! File formats and command-line front-end for `cohdiff-core`.

pub mod cli;
pub mod lex;
pub mod model_file;
pub mod program;

pub use lex::{Pos, SyntaxError};
pub use model_file::{load_model, ModelError};
pub use program::{parse_program, parse_term_str, parse_type_str, Program, TermDecl};
