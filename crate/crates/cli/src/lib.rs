//! Command-line front end: argument parsing, dispatch and output formats.

pub mod args;
pub mod formats;

use std::fs;
use std::io::{self, Write};
use std::time::Instant;

use permutree::geometry;
use permutree::lattice::{self, predicted_node_bound};
use permutree::oracle::{self, Family, OracleReport};
use permutree::{Decoration, Lattice, Normalized};
use rayon::prelude::*;
use serde_json::{json, Value};

use args::{Cli, Command, DeltaChoice, GeometryFormat, LatticeFormat};

/// Largest decoration the oracle suite accepts.
pub const VERIFY_MAX_N: usize = oracle::BRUTEFORCE_MAX_N;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Guard(String),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error(transparent)]
    Library(#[from] permutree::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Io(_) | CliError::Library(_) => 1,
        }
    }
}

struct Context {
    max_n: usize,
    verbose: u8,
}

impl Context {
    fn log(&self, level: u8, message: impl AsRef<str>) {
        if self.verbose >= level {
            eprintln!("{}", message.as_ref());
        }
    }

    fn announce(&self, delta: &Normalized) {
        if delta.changed {
            eprintln!("note: endpoints normalized to none, decoration is {}", delta.decoration);
        }
    }

    fn guard(&self, decoration: &Decoration) -> Result<(), CliError> {
        let n = decoration.len();
        if n > self.max_n {
            return Err(CliError::Guard(format!(
                "decoration has {n} vertices, above --max-n {}",
                self.max_n
            )));
        }
        let bound = predicted_node_bound(decoration);
        if bound > 1_000_000 {
            // bit rows, a slotted tree and a few covers per node
            let bytes = bound.saturating_mul(96 * n as u128 + 128);
            eprintln!(
                "note: up to {bound} nodes expected, roughly {} MiB",
                bytes >> 20
            );
        }
        Ok(())
    }

    fn lattice(&self, decoration: &Decoration) -> Result<Lattice, CliError> {
        self.guard(decoration)?;
        let start = Instant::now();
        let l = lattice::enumerate_with_bound(decoration, self.max_n).map_err(|e| match e {
            permutree::Error::BoundExceeded { .. } => CliError::Guard(e.to_string()),
            other => other.into(),
        })?;
        self.log(
            1,
            format!(
                "{}: {} nodes, {} covers in {:.3} s",
                decoration,
                l.len(),
                l.covers().len(),
                start.elapsed().as_secs_f64()
            ),
        );
        Ok(l)
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let ctx = Context {
        max_n: cli.max_n,
        verbose: cli.verbose,
    };
    match &cli.command {
        Command::Enumerate { delta, format } => {
            ctx.announce(&delta.delta);
            let l = ctx.lattice(&delta.delta.decoration)?;
            let text = match format {
                LatticeFormat::Json => pretty(&formats::lattice_json(&l, delta.delta.changed)),
                LatticeFormat::Dot => formats::lattice_dot(&l),
            };
            emit(cli, &text)
        }
        Command::Meet(pairs) | Command::Join(pairs) => {
            let d = &pairs.delta.delta;
            ctx.announce(d);
            let (left, right) = pairs.sets().map_err(CliError::Usage)?;
            for (flag, set) in [("left", &left), ("right", &right)] {
                if let Some(v) = lattice::first_violation(set, &d.decoration)? {
                    return Err(CliError::Usage(format!(
                        "--{flag} is not an inversion set for {}: {v}",
                        d.decoration
                    )));
                }
            }
            let result = if matches!(cli.command, Command::Meet(_)) {
                lattice::meet(&left, &right, &d.decoration)?
            } else {
                ctx.guard(&d.decoration)?;
                lattice::join(&left, &right, &d.decoration)?
            };
            emit(cli, &format!("{}\n", result.to_literal()))
        }
        Command::Vectors { delta } => {
            ctx.announce(&delta.delta);
            let l = ctx.lattice(&delta.delta.decoration)?;
            emit(cli, &formats::vectors_csv(&l))
        }
        Command::Geometry {
            delta,
            from_lattice,
            format,
        } => {
            let l = match (delta, from_lattice) {
                (Some(d), _) => {
                    ctx.announce(d);
                    ctx.lattice(&d.decoration)?
                }
                (None, Some(path)) => {
                    let text = fs::read_to_string(path)?;
                    let file: formats::LatticeFile = serde_json::from_str(&text)
                        .map_err(|e| CliError::Usage(format!("--from-lattice {}: {e}", path.display())))?;
                    if file.n > ctx.max_n {
                        return Err(CliError::Guard(format!(
                            "lattice has {} vertices, above --max-n {}",
                            file.n, ctx.max_n
                        )));
                    }
                    file.into_lattice()
                        .map_err(|e| CliError::Usage(format!("--from-lattice {}: {e}", path.display())))?
                }
                (None, None) => unreachable!("clap requires one of --delta and --from-lattice"),
            };
            let p = geometry::build_polytope(&l);
            let c = geometry::build_cubical(&l)?;
            let text = match format {
                GeometryFormat::Json => pretty(&formats::geometry_json(&p, &c)),
                GeometryFormat::Off => formats::geometry_off(&c).ok_or_else(|| {
                    CliError::Usage(format!(
                        "--format off needs at most 4 vertices, the decoration has {}",
                        l.n()
                    ))
                })?,
            };
            emit(cli, &text)
        }
        Command::Corners { delta } => {
            ctx.announce(&delta.delta);
            let l = ctx.lattice(&delta.delta.decoration)?;
            emit(cli, &formats::corners_table(&l)?)
        }
        Command::Verify { delta, n } => verify(cli, &ctx, delta, *n),
    }
}

/// Every oracle comparison for one decoration.
pub fn verify_decoration(d: &Decoration) -> permutree::Result<(Lattice, Vec<OracleReport>)> {
    let l = lattice::enumerate(d)?;
    let mut reports = Vec::new();

    let brute = oracle::enumerate_bruteforce(d)?;
    let mut same = OracleReport::pass(d, "enumeration equals subset filter");
    if l.nodes() != brute.as_slice() {
        same.fail("enumerate", "subset filter", brute.len(), l.len());
    } else {
        let mut ours: Vec<(usize, usize)> = l.covers().iter().map(|c| (c.source, c.target)).collect();
        ours.sort_unstable();
        let hasse = oracle::hasse_diagram(&brute);
        if ours != hasse {
            same.fail("covers", "hasse diagram", hasse.len(), ours.len());
        }
    }
    reports.push(same);

    reports.extend(lattice::check_lattice(d)?.reports);

    let mut round_trip = OracleReport::pass(d, "reconstruction round-trips");
    for (t, e) in l.trees().iter().zip(l.nodes()) {
        match lattice::tree_from_inversion_set(e, d) {
            Ok(r) if &r == t => {}
            Ok(r) => round_trip.fail(format!("{{{e}}}"), "", t, r),
            Err(err) => round_trip.fail(format!("{{{e}}}"), "", t, err),
        }
    }
    reports.push(round_trip);

    let p = geometry::build_polytope(&l);
    reports.extend(geometry::verify_polytope(&p));
    match geometry::build_cubical(&l) {
        Ok(c) => reports.extend(geometry::check_cube(&c, &p, &l)),
        Err(e) => {
            let mut r = OracleReport::pass(d, "cells have unique extremes");
            r.fail("cells", "", "unique minimum and maximum", e);
            reports.push(r);
        }
    }
    Ok((l, reports))
}

fn verify(cli: &Cli, ctx: &Context, delta: &DeltaChoice, n: Option<usize>) -> Result<(), CliError> {
    let decorations = match delta {
        DeltaChoice::One(d) => {
            ctx.announce(d);
            if let Some(n) = n.filter(|&n| n != d.decoration.len()) {
                return Err(CliError::Usage(format!(
                    "--n {n} does not match the decoration length {}",
                    d.decoration.len()
                )));
            }
            vec![d.decoration.clone()]
        }
        DeltaChoice::All => {
            let n = n.ok_or_else(|| CliError::Usage("--delta all needs --n".to_string()))?;
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".to_string()));
            }
            Decoration::all(n)
        }
    };
    let n = decorations[0].len();
    let limit = VERIFY_MAX_N.min(ctx.max_n);
    if n > limit {
        return Err(CliError::Guard(format!(
            "verification enumerates every subset of pairs and is limited to n <= {limit}, got {n}"
        )));
    }
    let start = Instant::now();
    let results: Vec<(Decoration, Lattice, Vec<OracleReport>)> = decorations
        .par_iter()
        .map(|d| verify_decoration(d).map(|(l, r)| (d.clone(), l, r)))
        .collect::<permutree::Result<_>>()?;
    let mut specializations = Vec::new();
    if matches!(delta, DeltaChoice::All) {
        for family in [Family::Permutation, Family::Tamari, Family::Boolean, Family::Cambrian] {
            specializations.push(oracle::specialization_check(family, n)?);
        }
    }
    let mut failed: Vec<String> = Vec::new();
    let entries: Vec<Value> = results
        .iter()
        .map(|(d, l, reports)| {
            for r in reports.iter().filter(|r| !r.passed) {
                failed.push(r.to_string());
            }
            json!({
                "delta": d.word(),
                "nodes": l.len(),
                "covers": l.covers().len(),
                "passed": reports.iter().all(|r| r.passed),
                "checks": reports.iter().map(formats::report_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    failed.extend(specializations.iter().filter(|r| !r.passed).map(|r| r.to_string()));
    let report = json!({
        "n": n,
        "passed": failed.is_empty(),
        "decorations": entries,
        "specializations": specializations.iter().map(|r| json!({
            "family": r.property,
            "pattern": r.decoration,
            "passed": r.passed,
            "counterexample": formats::report_json(r)["counterexample"],
        })).collect::<Vec<_>>(),
    });
    ctx.log(
        1,
        format!(
            "verified {} decoration(s) in {:.3} s",
            results.len(),
            start.elapsed().as_secs_f64()
        ),
    );
    emit(cli, &pretty(&report))?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failed.join("; ")))
    }
}
