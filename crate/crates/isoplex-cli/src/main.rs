//! Command-line front end: solve, verify, topo, bench.
//!
//! Exit codes: 0 success, 1 malformed input (system file, certificate file,
//! or I/O), 2 solve budget exhausted, 3 certificate rejected by the exact
//! replay. Set `ISOPLEX_LOG=debug` to watch refinement progress.

use std::fs;
use std::path::PathBuf;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use isoplex::poly::random_bombieri;
use isoplex::verify::CertError;
use isoplex::{
    analyze, build_complex, check_certificate, export_off, format_certificate, parse_certificate,
    parse_system, solve, Decomposition, PolySystem, SolveParams, SolveResult, SolveStatus,
    TopologyReport,
};

const EXIT_OK: i32 = 0;
const EXIT_MALFORMED: i32 = 1;
const EXIT_BUDGET: i32 = 2;
const EXIT_REJECTED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "isoplex",
    version,
    about = "Certified piecewise-linear models of real projective varieties"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Certify a piecewise-linear model of a system's projective zero set
    Solve(SolveArgs),
    /// Replay a certificate in exact integer arithmetic
    Verify(VerifyArgs),
    /// Components and Z/2 Betti numbers of the certified model
    Topo(TopoArgs),
    /// Time the pipeline on random dense polynomials
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SolveOpts {
    /// Split-tree depth per face before the fan itself is refined
    #[arg(long, default_value_t = 32)]
    max_splits: usize,
    /// How many fan refinements to attempt before giving up
    #[arg(long, default_value_t = 10_000)]
    max_refinements: usize,
    /// Worker threads; results are identical for any value
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Seed for randomized fan validation
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SolveOpts {
    fn params(&self) -> SolveParams {
        SolveParams {
            max_splits: self.max_splits,
            max_refinements: self.max_refinements,
            threads: self.threads,
            seed: self.seed,
            ..SolveParams::default()
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// System file: one homogeneous polynomial per line
    input: PathBuf,
    /// Write the certificate here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip the exact replay of the freshly produced certificate
    #[arg(long)]
    no_verify: bool,
    #[command(flatten)]
    opts: SolveOpts,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// System file the certificate claims to model
    input: PathBuf,
    /// Certificate file
    cert: PathBuf,
    /// Seed for randomized fan validation
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TopoArgs {
    /// System file
    input: PathBuf,
    /// Use this certificate (after checking it) instead of solving afresh
    #[arg(long)]
    cert: Option<PathBuf>,
    /// Write the model as OFF (nOFF outside three variables); an `.edges`
    /// sidecar with the same name lists one-dimensional cells
    #[arg(long)]
    off: Option<PathBuf>,
    #[command(flatten)]
    opts: SolveOpts,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// Number of random systems
    #[arg(long, default_value_t = 5)]
    count: usize,
    /// Ambient variables
    #[arg(long, default_value_t = 3)]
    nvars: usize,
    /// Degree of each random polynomial
    #[arg(long, default_value_t = 3)]
    degree: usize,
    /// Seed for drawing the polynomials
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    #[command(flatten)]
    opts: SolveOpts,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("ISOPLEX_LOG", "warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Solve(a) => cmd_solve(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Topo(a) => cmd_topo(a),
        Cmd::Bench(a) => cmd_bench(a),
    };
    let code = match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_MALFORMED
        }
    };
    std::process::exit(code);
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn read_system(path: &PathBuf) -> Result<Option<PolySystem>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    match parse_system(&text) {
        Ok(sys) => Ok(Some(sys)),
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            Ok(None)
        }
    }
}

fn status_str(s: &SolveStatus) -> &'static str {
    match s {
        SolveStatus::Certified => "certified",
        SolveStatus::BudgetExhausted => "budget-exhausted",
    }
}

fn describe_system(sys: &PolySystem) -> String {
    let degs: Vec<String> = sys.degrees().iter().map(|d| d.to_string()).collect();
    format!(
        "{} equation{} in {} variables, degree{} {}",
        sys.m(),
        if sys.m() == 1 { "" } else { "s" },
        sys.nvars(),
        if sys.m() == 1 { "" } else { "s" },
        degs.join(" ")
    )
}

/// Run verify on a freshly formatted certificate; the result is a hard
/// invariant, so a failure is reported loudly rather than swallowed.
fn replay_own_certificate(
    sys: &PolySystem,
    res: &SolveResult,
    seed: u64,
) -> Result<(usize, usize, Duration), CertError> {
    let text = format_certificate(sys, res);
    let cert = parse_certificate(&text)?;
    let report = check_certificate(sys, &cert, seed)?;
    Ok((report.faces, report.leaves, report.wall))
}

fn cmd_solve(a: SolveArgs) -> Result<i32> {
    let sys = match read_system(&a.input)? {
        Some(s) => s,
        None => return Ok(EXIT_MALFORMED),
    };
    let res = solve(&sys, &a.opts.params());
    let certified = matches!(res.status, SolveStatus::Certified);
    let mut verify_info: Option<(usize, usize, Duration)> = None;
    if certified && !a.no_verify {
        match replay_own_certificate(&sys, &res, a.opts.seed) {
            Ok(info) => verify_info = Some(info),
            Err(e) => {
                eprintln!("error: freshly produced certificate failed replay: {e}");
                return Ok(EXIT_REJECTED);
            }
        }
    }
    let mut cert_path = None;
    if certified {
        if let Some(out) = &a.out {
            fs::write(out, format_certificate(&sys, &res))
                .with_context(|| format!("writing {}", out.display()))?;
            cert_path = Some(out.display().to_string());
        }
    }
    match a.format {
        Format::Text => {
            println!("system: {}", describe_system(&sys));
            println!("status: {}", status_str(&res.status));
            println!(
                "refinements: {}    cones: {}    faces: {}    face tests: {}",
                res.stats.refinements,
                res.stats.final_cones,
                res.stats.final_faces,
                res.stats.face_tests
            );
            println!(
                "max split depth: {}    leaves: {}",
                res.stats.max_split_depth, res.stats.total_leaves
            );
            println!("solve wall: {:.1} ms", ms(res.stats.wall));
            if let Some((faces, leaves, wall)) = verify_info {
                println!(
                    "verify: {faces} faces, {leaves} leaves replayed exactly in {:.1} ms",
                    ms(wall)
                );
            }
            if let Some(p) = &cert_path {
                println!("certificate: {p}");
            }
            if certified {
                println!("guarantee: {}", isoplex::guarantee_statement(sys.m()));
            }
        }
        Format::Json => {
            let obj = json!({
                "cmd": "solve",
                "input": a.input.display().to_string(),
                "nvars": sys.nvars(),
                "m": sys.m(),
                "degrees": sys.degrees(),
                "status": status_str(&res.status),
                "refinements": res.stats.refinements,
                "face_tests": res.stats.face_tests,
                "cones": res.stats.final_cones,
                "faces": res.stats.final_faces,
                "max_split_depth": res.stats.max_split_depth,
                "leaves": res.stats.total_leaves,
                "solve_ms": ms(res.stats.wall),
                "verified": verify_info.is_some(),
                "verify_ms": verify_info.map(|(_, _, w)| ms(w)),
                "certificate": cert_path,
            });
            println!("{obj}");
        }
    }
    Ok(if certified { EXIT_OK } else { EXIT_BUDGET })
}

fn cmd_verify(a: VerifyArgs) -> Result<i32> {
    let sys = match read_system(&a.input)? {
        Some(s) => s,
        None => return Ok(EXIT_MALFORMED),
    };
    let text =
        fs::read_to_string(&a.cert).with_context(|| format!("reading {}", a.cert.display()))?;
    let cert = match parse_certificate(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}: {e}", a.cert.display());
            return Ok(EXIT_MALFORMED);
        }
    };
    match check_certificate(&sys, &cert, a.seed) {
        Ok(report) => {
            match a.format {
                Format::Text => {
                    println!("system: {}", describe_system(&sys));
                    println!(
                        "verify: {} faces, {} leaves replayed exactly in {:.1} ms",
                        report.faces,
                        report.leaves,
                        ms(report.wall)
                    );
                    println!("guarantee: {}", isoplex::guarantee_statement(sys.m()));
                }
                Format::Json => {
                    let obj = json!({
                        "cmd": "verify",
                        "input": a.input.display().to_string(),
                        "certificate": a.cert.display().to_string(),
                        "faces": report.faces,
                        "leaves": report.leaves,
                        "verify_ms": ms(report.wall),
                        "ok": true,
                    });
                    println!("{obj}");
                }
            }
            Ok(EXIT_OK)
        }
        Err(e @ CertError::Malformed { .. }) => {
            eprintln!("error: {}: {e}", a.cert.display());
            Ok(EXIT_MALFORMED)
        }
        Err(e @ CertError::Rejected { .. }) => {
            eprintln!("error: {e}");
            Ok(EXIT_REJECTED)
        }
    }
}

fn cell_label(d: usize, n: usize) -> String {
    match d {
        0 => format!("{n} vertices"),
        1 => format!("{n} edges"),
        2 => format!("{n} polygons"),
        _ => format!("{n} {d}-cells"),
    }
}

fn print_topo_text(report: &TopologyReport) {
    let quot: Vec<String> = report
        .cells
        .iter()
        .enumerate()
        .map(|(d, &n)| cell_label(d, n))
        .collect();
    let sph: Vec<String> = report
        .sphere_cells
        .iter()
        .enumerate()
        .map(|(d, &n)| cell_label(d, n))
        .collect();
    if report.components == 0 {
        println!("the certified model is empty: the system has no projective zeros");
        return;
    }
    println!("cells (quotient): {}", quot.join(", "));
    println!("components: {}", report.components);
    for (i, b) in report.component_betti.iter().enumerate() {
        let bs: Vec<String> = b.iter().map(|x| x.to_string()).collect();
        println!("  component {}: betti ({})", i + 1, bs.join(", "));
    }
    let bs: Vec<String> = report.betti.iter().map(|x| x.to_string()).collect();
    println!("betti: ({})    euler: {}", bs.join(", "), report.euler);
    println!(
        "sphere cover: {} in {} component{}",
        sph.join(", "),
        report.sphere_components,
        if report.sphere_components == 1 {
            ""
        } else {
            "s"
        }
    );
}

fn cmd_topo(a: TopoArgs) -> Result<i32> {
    let sys = match read_system(&a.input)? {
        Some(s) => s,
        None => return Ok(EXIT_MALFORMED),
    };
    let (decomp, tilde) = match &a.cert {
        Some(cert_path) => {
            let text = fs::read_to_string(cert_path)
                .with_context(|| format!("reading {}", cert_path.display()))?;
            let cert = match parse_certificate(&text) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {}: {e}", cert_path.display());
                    return Ok(EXIT_MALFORMED);
                }
            };
            match check_certificate(&sys, &cert, a.opts.seed) {
                Ok(_) => {}
                Err(e @ CertError::Malformed { .. }) => {
                    eprintln!("error: {}: {e}", cert_path.display());
                    return Ok(EXIT_MALFORMED);
                }
                Err(e @ CertError::Rejected { .. }) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_REJECTED);
                }
            }
            let decomp = Decomposition::from_parts(cert.nvars, cert.rays, cert.cones)
                .expect("certificate fan was just validated");
            (decomp, cert.tilde)
        }
        None => {
            let res = solve(&sys, &a.opts.params());
            if !matches!(res.status, SolveStatus::Certified) {
                eprintln!(
                    "error: solve exhausted its budget after {} refinements; no model to analyze",
                    res.stats.refinements
                );
                return Ok(EXIT_BUDGET);
            }
            let tilde = res.tilde.exact_rows().to_vec();
            (res.decomp, tilde)
        }
    };
    let cx = build_complex(&decomp, &tilde);
    let report = analyze(&cx);
    let mut off_path = None;
    if let Some(path) = &a.off {
        let (off, edges) = export_off(&cx);
        fs::write(path, off).with_context(|| format!("writing {}", path.display()))?;
        if let Some(edges) = edges {
            let mut sidecar = path.as_os_str().to_owned();
            sidecar.push(".edges");
            fs::write(&sidecar, edges)
                .with_context(|| format!("writing {}", PathBuf::from(&sidecar).display()))?;
        }
        off_path = Some(path.display().to_string());
    }
    match a.format {
        Format::Text => {
            println!("system: {}", describe_system(&sys));
            print_topo_text(&report);
            if let Some(p) = &off_path {
                println!("geometry: {p}");
            }
        }
        Format::Json => {
            let obj = json!({
                "cmd": "topo",
                "input": a.input.display().to_string(),
                "cells": report.cells,
                "components": report.components,
                "betti": report.betti,
                "component_betti": report.component_betti,
                "euler": report.euler,
                "sphere_cells": report.sphere_cells,
                "sphere_components": report.sphere_components,
                "off": off_path,
            });
            println!("{obj}");
        }
    }
    Ok(EXIT_OK)
}

fn cmd_bench(a: BenchArgs) -> Result<i32> {
    if a.nvars < 2 || a.degree == 0 {
        eprintln!("error: bench needs at least two variables and degree one");
        return Ok(EXIT_MALFORMED);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.rng_seed);
    let params = a.opts.params();
    let mut certified = 0usize;
    let mut solve_ms: Vec<f64> = Vec::new();
    let mut verify_ms: Vec<f64> = Vec::new();
    if matches!(a.format, Format::Text) {
        println!("#    status            refinements  cones  depth   solve_ms  verify_ms");
    }
    for i in 0..a.count {
        let poly = random_bombieri(a.nvars, a.degree, &mut rng);
        let sys = PolySystem::new(vec![poly]).expect("random polynomial is a valid system");
        let res = solve(&sys, &params);
        let ok = matches!(res.status, SolveStatus::Certified);
        let mut vms = None;
        if ok {
            certified += 1;
            let (_, _, wall) = replay_own_certificate(&sys, &res, a.opts.seed)
                .map_err(|e| anyhow::anyhow!("random system {i}: replay failed: {e}"))?;
            vms = Some(ms(wall));
            verify_ms.push(ms(wall));
        }
        solve_ms.push(ms(res.stats.wall));
        match a.format {
            Format::Text => {
                println!(
                    "{:<4} {:<17} {:>11}  {:>5}  {:>5}  {:>9.1}  {:>9}",
                    i,
                    status_str(&res.status),
                    res.stats.refinements,
                    res.stats.final_cones,
                    res.stats.max_split_depth,
                    ms(res.stats.wall),
                    vms.map(|v| format!("{v:.1}")).unwrap_or_else(|| "-".into())
                );
            }
            Format::Json => {
                let obj = json!({
                    "cmd": "bench",
                    "index": i,
                    "nvars": a.nvars,
                    "degree": a.degree,
                    "status": status_str(&res.status),
                    "refinements": res.stats.refinements,
                    "cones": res.stats.final_cones,
                    "max_split_depth": res.stats.max_split_depth,
                    "solve_ms": ms(res.stats.wall),
                    "verify_ms": vms,
                });
                println!("{obj}");
            }
        }
    }
    let mean = |v: &[f64]| {
        if v.is_empty() {
            0.0
        } else {
            v.iter().sum::<f64>() / v.len() as f64
        }
    };
    let max = |v: &[f64]| v.iter().cloned().fold(0.0f64, f64::max);
    match a.format {
        Format::Text => {
            println!(
                "summary: {certified}/{} certified; solve mean {:.1} ms, max {:.1} ms; verify mean {:.1} ms, max {:.1} ms",
                a.count,
                mean(&solve_ms),
                max(&solve_ms),
                mean(&verify_ms),
                max(&verify_ms)
            );
        }
        Format::Json => {
            let obj = json!({
                "cmd": "bench-summary",
                "count": a.count,
                "certified": certified,
                "solve_ms_mean": mean(&solve_ms),
                "solve_ms_max": max(&solve_ms),
                "verify_ms_mean": mean(&verify_ms),
                "verify_ms_max": max(&verify_ms),
            });
            println!("{obj}");
        }
    }
    Ok(EXIT_OK)
}
