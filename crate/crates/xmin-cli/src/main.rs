//! `xmin`: runs the verification suites and prints the fixed-point, smoothness,
//! Białynicki-Birula, Poincaré and orbit tables.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use xmin_core::torus::{bb_decomposition, poincare, special_orbit_count, torus_fixed_points, OneParamSubgroup};
use xmin_core::verify::{self, Config, Suite};
use xmin_core::xmin::tangent_frames;
use xmin_core::XminError;

#[derive(Parser, Debug)]
#[command(name = "xmin", version, about = "Exact verification of the associative Grassmannian X_min")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Overrides every random sample count.
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one verification suite, or `all`.
    Verify {
        #[arg(value_parser = ["algebra", "forms", "grassmann", "xmin", "torus", "actions", "all"])]
        suite: String,
    },
    /// Torus-fixed points of X_min and their characters.
    FixedPoints,
    /// Jacobian rank and tangent dimension at every fixed point.
    Smoothness,
    /// Tangent weights and cell dimensions for the subgroup `C,D`.
    Bb {
        #[arg(long, value_parser = parse_ops, allow_hyphen_values = true)]
        ops: OneParamSubgroup,
    },
    /// Poincaré polynomial from the cells of the subgroup `C,D`.
    Poincare {
        #[arg(long, value_parser = parse_ops, allow_hyphen_values = true)]
        ops: OneParamSubgroup,
    },
    /// Orbit count of the compactification and the Δ_I table.
    Orbits,
    /// Run every suite and write the JSON report to PATH.
    Report {
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_ops(s: &str) -> Result<OneParamSubgroup, String> {
    let (c, d) = s.split_once(',').ok_or_else(|| format!("expected C,D, got `{s}`"))?;
    let c = c.trim().parse::<i32>().map_err(|e| format!("`{c}`: {e}"))?;
    let d = d.trim().parse::<i32>().map_err(|e| format!("`{d}`: {e}"))?;
    Ok(OneParamSubgroup::new(c, d))
}

fn polynomial(coeffs: &[i64]) -> String {
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
        let coef = if *c == 1 && k > 0 { String::new() } else { c.to_string() };
        terms.push(match k {
            0 => coef,
            1 => format!("{coef}t"),
            _ => format!("{coef}t^{k}"),
        });
    }
    terms.join(" + ")
}

fn emit(json_mode: bool, value: serde_json::Value, text: String) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(&value).expect("JSON value"));
    } else {
        print!("{text}");
    }
}

fn out_path(p: PathBuf) -> PathBuf {
    match std::env::var_os("XMIN_OUT_DIR") {
        Some(dir) if p.is_relative() => PathBuf::from(dir).join(p),
        _ => p,
    }
}

fn run(cli: Cli) -> Result<u8, XminError> {
    let cfg = Config { seed: cli.seed, samples: cli.samples };
    match cli.command {
        Command::Verify { suite } => {
            let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let report = verify::run(&suites, cfg)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(report.exit_code() as u8)
        }
        Command::FixedPoints => {
            let pts = torus_fixed_points()?;
            let text = pts.iter().map(|p| format!("{} {}\n", p.index, p.character)).collect();
            emit(cli.json, json!(pts), text);
            Ok(0)
        }
        Command::Smoothness => {
            let frames = tangent_frames();
            let rows: Vec<_> = frames
                .iter()
                .map(|f| {
                    json!({
                        "point": f.point.index,
                        "character": f.point.character,
                        "jacobian_rank": f.jacobian_rank,
                        "tangent_dimension": f.vectors.len(),
                    })
                })
                .collect();
            let smooth = frames.iter().all(|f| f.jacobian_rank == 4 && f.vectors.len() == 8);
            let mut text: String = frames
                .iter()
                .map(|f| format!("{} rank {} tangent dimension {}\n", f.point.index, f.jacobian_rank, f.vectors.len()))
                .collect();
            text.push_str(if smooth { "smooth at every fixed point\n" } else { "singular fixed point found\n" });
            emit(cli.json, json!({ "points": rows, "smooth": smooth }), text);
            Ok(if smooth { 0 } else { 1 })
        }
        Command::Bb { ops } => {
            let cells = bb_decomposition(ops)?;
            let text = cells
                .iter()
                .map(|c| {
                    let w: Vec<String> = c.weights.iter().map(|w| w.to_string()).collect();
                    format!("{} plus {} minus {} weights {}\n", c.point.index, c.plus_dim, c.minus_dim, w.join(" "))
                })
                .collect();
            emit(cli.json, json!({ "ops": [ops.c, ops.d], "cells": cells }), text);
            Ok(0)
        }
        Command::Poincare { ops } => {
            let p = poincare(ops)?;
            let text = format!("{}\n{}\n", p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","), polynomial(&p));
            emit(cli.json, json!({ "ops": [ops.c, ops.d], "coefficients": p, "polynomial": polynomial(&p) }), text);
            Ok(0)
        }
        Command::Orbits => {
            let o = special_orbit_count();
            let mut text: String = o
                .delta
                .iter()
                .map(|(j, d)| format!("J = {{{}}}  Δ_I(J) = {{{}}}\n", j.join(","), d.join(",")))
                .collect();
            text.push_str(&format!("orbits: {}\n", o.count));
            emit(cli.json, json!(o), text);
            Ok(0)
        }
        Command::Report { out } => {
            let report = verify::run(&Suite::ALL, cfg)?;
            let path = out_path(out);
            std::fs::write(&path, report.to_json() + "\n")
                .map_err(|e| XminError::Precondition(format!("cannot write {}: {e}", path.display())))?;
            let m = &report.summary;
            println!(
                "wrote {}: {} checks, {} pass, {} discrepancy ({} known), {} undecided",
                path.display(),
                m.total,
                m.pass,
                m.discrepancy,
                m.known_discrepancies,
                m.undecided
            );
            Ok(report.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e @ XminError::Irregular { .. }) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
