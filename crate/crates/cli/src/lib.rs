//! JSON front end for the `coxkit` library. Every subcommand maps one input
//! document to one output document.

mod json;
mod monoid_cmd;
mod poly_cmd;
mod quotient_cmd;
mod toric_cmd;

use clap::ValueEnum;
use serde_json::Value;

pub use json::{render, CliError, Res};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Subcommand {
    DivisorTheory,
    CheckAxioms,
    Extend,
    Saturate,
    CoxData,
    Pullback,
    VerifyLift,
    Compose,
    Jacobian,
    WildnessCert,
    ShearFamily,
    QuotientReport,
    Reynolds,
    ParsePoly,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub depth: u32,
    pub cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            depth: coxkit::monoids::DEFAULT_DEPTH,
            cap: coxkit::finite_quotient::DEFAULT_CAP,
        }
    }
}

pub fn run(cmd: Subcommand, input: &Value, opts: &Options) -> Res<Value> {
    match cmd {
        Subcommand::DivisorTheory => monoid_cmd::divisor_theory(input),
        Subcommand::CheckAxioms => monoid_cmd::check_axioms(input, opts.depth),
        Subcommand::Extend => monoid_cmd::extend(input, opts.depth),
        Subcommand::Saturate => monoid_cmd::saturate(input),
        Subcommand::CoxData => toric_cmd::cox_data(input),
        Subcommand::Pullback => toric_cmd::pullback(input),
        Subcommand::VerifyLift => toric_cmd::verify_lift(input),
        Subcommand::Compose => poly_cmd::compose(input),
        Subcommand::Jacobian => poly_cmd::jacobian(input),
        Subcommand::WildnessCert => poly_cmd::wildness_cert(input),
        Subcommand::ShearFamily => poly_cmd::shear_family(input),
        Subcommand::QuotientReport => quotient_cmd::quotient_report(input, opts.cap),
        Subcommand::Reynolds => quotient_cmd::reynolds(input, opts.cap),
        Subcommand::ParsePoly => poly_cmd::parse(input),
    }
}

/// Parses `text` and runs `cmd`, returning the rendered output and exit code.
pub fn run_text(cmd: Subcommand, text: &str, opts: &Options, pretty: bool) -> (String, i32) {
    let result = serde_json::from_str::<Value>(text)
        .map_err(|e| CliError::Malformed(format!("invalid JSON: {e}")))
        .and_then(|v| run(cmd, &v, opts));
    match result {
        Ok(v) => (render(&v, pretty), 0),
        Err(e) => (render(&e.to_json(), pretty), e.exit_code()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_text_reports_codes() {
        let opts = Options::default();
        let (out, code) = run_text(Subcommand::ParsePoly, r#"{"text": "y2*y1 + y1*y2", "num_vars": 2}"#, &opts, false);
        assert_eq!(code, 0);
        assert!(out.contains(r#""canonical":"2*y1*y2""#));
        assert_eq!(run_text(Subcommand::ParsePoly, "[", &opts, false).1, 2);
        let (_, code) = run_text(Subcommand::Saturate, r#"{"ambient_rank": 1, "generators": [[2], [3]]}"#, &opts, false);
        assert_eq!(code, 0);
    }
}
