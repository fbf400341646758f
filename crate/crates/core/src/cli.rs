//! Command-line front end. `run` is pure: it returns the exit code and the
//! documents for stdout and stderr instead of printing them.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arrangement::ShiCone;
use crate::bernoulli::{bpq, UnivariateJson};
use crate::derivations::{phi, shi_basis, DerivationJson, NamedDerivation};
use crate::error::Error;
use crate::latex::{emit_latex, emit_text};
use crate::polyring::PolyJson;
use crate::verify::{run_verification, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    #[default]
    Text,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    #[default]
    Q,
    Hyperplanes,
}

#[derive(Debug, Parser)]
#[command(name = "shi-basis", version, about = "Basis of the derivation module of the cone over the type-A Shi arrangement")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print eta1, eta2 and phi_1..phi_ell (or a single phi_j).
    Construct {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        ell: u32,
        /// Print only phi_j.
        #[arg(long)]
        j: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the basis and the counting claims.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        ell: u32,
        /// Skip the determinant criterion and the counts derived from it.
        #[arg(long)]
        skip_saito: bool,
        /// Comma-separated primes for the point-counting cross-check.
        #[arg(long, value_delimiter = ',')]
        oracle_primes: Option<Vec<u64>>,
        /// Fail determinant checks whose predicted degree exceeds this bound.
        #[arg(long)]
        max_degree_guard: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the defining polynomial or the hyperplane list.
    Arrangement {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        ell: u32,
        #[arg(long, value_enum, default_value_t)]
        emit: Emit,
    },
    /// Print B_{p,q} for all p <= P, q <= Q.
    Bernoulli {
        #[arg(long, num_args = 2, value_names = ["P", "Q"], required = true)]
        table: Vec<u32>,
    },
    /// Print the number of chambers, derived from the verified basis.
    Chambers {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        ell: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn ok(stdout: String) -> Self {
        RunOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        RunOutput {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                RunOutput::usage(rendered)
            } else {
                RunOutput::ok(rendered)
            }
        }
    }
}

pub fn run(config: &RunConfig) -> RunOutput {
    let result = match &config.command {
        Command::Construct { ell, j, format } => construct(*ell as usize, j.map(|j| j as usize), *format),
        Command::Verify {
            ell,
            skip_saito,
            oracle_primes,
            max_degree_guard,
            format,
        } => {
            let options = VerifyOptions {
                skip_saito: *skip_saito,
                oracle_primes: oracle_primes.clone(),
                max_degree_guard: *max_degree_guard,
            };
            return verify(*ell as usize, &options, *format);
        }
        Command::Arrangement { ell, emit } => arrangement(*ell as usize, *emit),
        Command::Bernoulli { table } => Ok(bernoulli_table(table[0] as usize, table[1] as usize)),
        Command::Chambers { ell } => return chambers(*ell as usize),
    };
    match result {
        Ok(stdout) => RunOutput::ok(stdout),
        Err(e) => RunOutput::usage(format!("error: {e}\n")),
    }
}

fn latex_name(name: &str) -> String {
    let (greek, index) = name.split_at(name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len()));
    let greek = if greek == "phi" { "varphi" } else { greek };
    format!("\\{greek}_{{{index}}}")
}

fn construct(ell: usize, j: Option<usize>, format: Format) -> Result<String, Error> {
    let derivations: Vec<NamedDerivation> = match j {
        Some(j) => vec![NamedDerivation {
            name: format!("phi{j}"),
            derivation: phi(j, ell)?,
        }],
        None => shi_basis(ell)?,
    };
    let mut out = String::new();
    match format {
        Format::Json => {
            let docs: Vec<DerivationJson> = derivations.iter().map(DerivationJson::from).collect();
            out.push_str(&serde_json::to_string(&docs).expect("serializable"));
            out.push('\n');
        }
        Format::Latex => {
            for nd in &derivations {
                out.push_str("\\begin{align*}\n");
                out.push_str(&format!("{} &= {}\n", latex_name(&nd.name), emit_latex(&nd.derivation)));
                out.push_str("\\end{align*}\n");
            }
        }
        Format::Text => {
            for nd in &derivations {
                out.push_str(&format!("{} = {}\n", nd.name, emit_text(&nd.derivation)));
            }
        }
    }
    Ok(out)
}

fn verify(ell: usize, options: &VerifyOptions, format: Format) -> RunOutput {
    let report = match run_verification(ell, options) {
        Ok(r) => r,
        Err(e) => return RunOutput::usage(format!("error: {e}\n")),
    };
    let stdout = match format {
        Format::Json => report.to_json() + "\n",
        Format::Text | Format::Latex => report.to_text(),
    };
    RunOutput {
        code: if report.passed() { EXIT_OK } else { EXIT_FAILURE },
        stdout,
        stderr: String::new(),
    }
}

#[derive(Serialize)]
struct HyperplaneJson {
    label: String,
    form: PolyJson,
}

fn arrangement(ell: usize, emit: Emit) -> Result<String, Error> {
    let cone = ShiCone::new(ell)?;
    let doc = match emit {
        Emit::Q => serde_json::to_string(&PolyJson::from(&cone.defining_polynomial())),
        Emit::Hyperplanes => {
            let list: Vec<HyperplaneJson> = cone
                .hyperplanes()
                .iter()
                .map(|h| HyperplaneJson {
                    label: h.to_string(),
                    form: PolyJson::from(h.form.poly()),
                })
                .collect();
            serde_json::to_string(&list)
        }
    };
    Ok(doc.expect("serializable") + "\n")
}

#[derive(Serialize)]
struct BpqJson {
    p: usize,
    q: usize,
    poly: UnivariateJson,
}

fn bernoulli_table(p_max: usize, q_max: usize) -> String {
    let rows: Vec<BpqJson> = (0..=p_max)
        .flat_map(|p| (0..=q_max).map(move |q| (p, q)))
        .map(|(p, q)| BpqJson {
            p,
            q,
            poly: bpq(p, q).to_json_value("x"),
        })
        .collect();
    serde_json::to_string(&rows).expect("serializable") + "\n"
}

fn chambers(ell: usize) -> RunOutput {
    let report = match run_verification(ell, &VerifyOptions::default()) {
        Ok(r) => r,
        Err(e) => return RunOutput::usage(format!("error: {e}\n")),
    };
    match (report.passed(), report.chamber_count()) {
        (true, Ok(n)) => RunOutput::ok(format!("{n}\n")),
        _ => RunOutput {
            code: EXIT_FAILURE,
            stdout: report.to_text(),
            stderr: "error: basis verification failed; no chamber count\n".into(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::eta1;
    use crate::expr::parse_derivation;
    use crate::polyring::Ring;

    fn run_str(args: &[&str]) -> RunOutput {
        run_args(std::iter::once("shi-basis").chain(args.iter().copied()))
    }

    #[test]
    fn construct_text_rank_one() {
        let out = run_str(&["construct", "--ell", "1", "--format", "text"]);
        assert_eq!(out.code, 0);
        assert_eq!(
            out.stdout,
            "eta1 = d1 + d2\neta2 = x1*d1 + x2*d2 + z*dz\nphi1 = (x1 - x2 - z)*(x1*d1 + x2*d2)\n"
        );
    }

    #[test]
    fn construct_latex_parses_back() {
        let out = run_str(&["construct", "--ell", "2", "--format", "latex"]);
        assert_eq!(out.code, 0);
        let blocks: Vec<&str> = out.stdout.split("\\end{align*}").filter(|b| b.contains('=')).collect();
        assert_eq!(blocks.len(), 4);
        let r = Ring::new(2);
        assert_eq!(parse_derivation(blocks[0], r).unwrap(), eta1(2));
        assert_eq!(parse_derivation(blocks[3], r).unwrap(), phi(2, 2).unwrap());
    }

    #[test]
    fn chambers_rank_two() {
        assert_eq!(run_str(&["chambers", "--ell", "2"]).stdout, "16\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["construct", "--ell", "0"]).code, EXIT_USAGE);
        assert_eq!(run_str(&["construct", "--ell", "2", "--bogus"]).code, EXIT_USAGE);
        assert_eq!(run_str(&["construct", "--ell", "2", "--j", "3"]).code, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "--ell", "2", "--oracle-primes", "3"]).code, EXIT_USAGE);
        assert_eq!(run_str(&[]).code, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(run_str(&["verify", "--ell", "2"]).code, EXIT_OK);
        assert_eq!(run_str(&["verify", "--ell", "2", "--max-degree-guard", "1"]).code, EXIT_FAILURE);
    }

    #[test]
    fn bernoulli_table_rank_one() {
        let out = run_str(&["bernoulli", "--table", "1", "1"]);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 4);
        assert_eq!(v[3]["p"], 1);
        assert_eq!(v[3]["q"], 1);
        assert_eq!(
            v[3]["poly"],
            serde_json::json!({"var": "x", "terms": [{"c": "1/3", "e": [3]}, {"c": "-1/3", "e": [1]}]})
        );
    }

    #[test]
    fn arrangement_outputs() {
        let q = run_str(&["arrangement", "--ell", "1"]);
        let parsed = crate::polyring::Polynomial::from_json(q.stdout.trim()).unwrap();
        assert_eq!(parsed, ShiCone::new(1).unwrap().defining_polynomial());
        let hs = run_str(&["arrangement", "--ell", "1", "--emit", "hyperplanes"]);
        let v: serde_json::Value = serde_json::from_str(&hs.stdout).unwrap();
        assert_eq!(v[2]["label"], "x1 - x2 - z");
    }
}
