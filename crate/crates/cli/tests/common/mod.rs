//! Helpers for driving the `fpure` binary and validating its reports.
#![allow(dead_code)]

use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("not JSON ({e}):\n{}", self.stdout))
    }
}

pub fn fpure(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_fpure")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

pub fn schema() -> jsonschema::JSONSchema {
    let raw: Value = serde_json::from_str(fpure_cli::report::SCHEMA).expect("schema is JSON");
    jsonschema::JSONSchema::compile(&raw).expect("schema compiles")
}

/// Validation errors, rendered, or an empty list.
pub fn schema_errors(schema: &jsonschema::JSONSchema, report: &Value) -> Vec<String> {
    match schema.validate(report) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    }
}

/// `(args, expected exit code)` covering valid, malformed and resource-capped inputs.
pub const EXIT_MATRIX: &[(&[&str], i32)] = &[
    (&["fpure", "--char", "3", "--vars", "x,y,z", "y^2 - x^2*z"], 0),
    (&["fpure", "--char", "2", "--vars", "x,y,z", "y^2 - x^2*z"], 0),
    (&["fpure", "--char", "5", "--vars", "x,y", "--ideal", "x*y, x^2"], 0),
    (&["fpure-product", "--char", "5", "--vars", "x,y,z", "x, y*z"], 0),
    (&["member", "--char", "2", "--vars", "x,y", "x*y", "x^2,y^2"], 0),
    (&["groebner", "--char", "5", "--order", "lex", "--vars", "x,y", "x^2-1, x*y-1"], 0),
    (&["frobpow", "--char", "3", "--vars", "x,y", "--e", "1", "x+y"], 0),
    (&["frobroot", "--char", "2", "--vars", "x,y", "--e", "1", "x^2+y^2"], 0),
    (&["frobclosure", "--char", "2", "--vars", "a,b,c", "--quotient", "b^2-a*c^2", "a,c"], 0),
    (&["finj-cm", "--char", "2", "--vars", "a,b,c", "--quotient", "b^2-a*c^2", "--params", "a,c"], 0),
    (&["union-check", "--char", "5", "--vars", "z1,z2,z3,z4", "z1", "z3^2-z2^2*z4"], 0),
    (&["zoo", "list"], 0),
    (&["zoo", "verify", "1a", "--char", "3", "--r", "2"], 0),
    (&["zoo", "verify", "doherty", "--char", "2", "--r", "30"], 0),
    (&["zoo", "sweep", "--chars", "5", "--max-r", "3"], 0),
    // malformed input
    (&["fpure", "--char", "3", "--vars", "x,y", "x + w"], 2),
    (&["fpure", "--char", "3", "--vars", "x,y", "x^"], 2),
    (&["fpure", "--char", "3", "--vars", "x,y", ""], 2),
    (&["fpure", "--char", "4", "--vars", "x", "x"], 2),
    (&["fpure", "--vars", "x", "x"], 2),
    (&["fpure", "--char", "3", "x"], 2),
    (&["fpure", "--char", "3", "--vars", "x", "1 + x"], 2),
    (&["fpure", "--char", "3", "--vars", "x", "--order", "revlex", "x"], 2),
    (&["zoo", "verify", "1a", "--char", "2", "--r", "2"], 2),
    (&["zoo", "verify", "9z", "--char", "5", "--r", "2"], 2),
    (&["finj-cm", "--char", "2", "--vars", "a,b,c", "--quotient", "b^2-a*c^2", "--params", "a"], 2),
    (&["frobpow", "--char", "3", "--vars", "x", "--e", "0", "x"], 2),
    (&["nonsense"], 2),
    // resource caps
    (&["frobpow", "--char", "2", "--vars", "x", "--e", "40", "x"], 3),
    (&["frobroot", "--char", "2", "--vars", "x", "--e", "40", "x"], 3),
    (&["groebner", "--char", "2", "--vars", "x,y", "x^600 + y, y^2 + x"], 3),
];
