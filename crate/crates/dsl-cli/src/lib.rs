//! Text format, expression evaluator and CLI for the DG Poisson Hopf
//! verification workbench.

mod cli;
mod expr;
mod lexer;
mod parser;
mod print;
mod report_io;

pub use cli::{run_command, EXIT_INPUT_ERROR, EXIT_PASS, EXIT_VIOLATION};
pub use expr::{parse_expression, Context, EvalEnv, EvalError, Expr, Value};
pub use lexer::ParseError;
pub use parser::{parse_presentation, ParsedPresentation};
pub use print::print_presentation;
pub use report_io::{all_passed, render_json, render_text, Parameters, SCHEMA_VERSION};
