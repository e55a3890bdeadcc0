//! `greenfun`: Green tables, Lusztig–Shoji solves, oracles, pack validation
//! and congruence verification from the command line.
//!
//! Exit status is 0 on success, 1 when validation or verification fails and
//! 2 for malformed invocations.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use greenfun::arith::PrimePower;
use greenfun::congruence::{self, SweepItem, DEFAULT_BUDGET_DIGITS, SWEEP_PRIMES};
use greenfun::green::{compute, orthogonality_check};
use greenfun::group_data::GroupData;
use greenfun::lusztig_shoji::{build_omega, reconstruct_pi, reconstruct_pi_auto, solve_p_lambda};
use greenfun::oracles::{flag_fixed_points, gl_enumerate, green_matrix, FpMatrix};
use greenfun::partition::Partition;
use greenfun::springer::{default_pack, load_pack, pack_file_name, parse_pack, DataPack};
use greenfun::weyl::{cycle_type, TypeLabel};

#[derive(Parser, Debug)]
#[command(name = "greenfun", version, about = "Green functions of finite reductive groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Green table Q_w(u) at one q.
    Table(TableArgs),
    /// The matrices Omega-tilde and Omega.
    Omega(GroupArgs),
    /// The factorization P^tr Lambda P = Omega.
    Solve(GroupArgs),
    /// Interpolated polynomials pi with p = pi(q).
    Pi(PiArgs),
    /// Type-A oracles: Green polynomials, flag counts or an enumeration of GL_n(q).
    Oracle(OracleArgs),
    /// Load a pack file and run every consistency check.
    ValidatePack(ValidateArgs),
    /// Congruence report for one (type, q, r) or a sweep.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct PackArg {
    /// Pack file overriding the embedded data.
    #[arg(long)]
    pack: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long = "type", value_parser = parse_type)]
    label: TypeLabel,
    #[arg(long, value_parser = parse_q)]
    q: PrimePower,
    #[command(flatten)]
    pack: PackArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct PiArgs {
    #[arg(long = "type", value_parser = parse_type)]
    label: TypeLabel,
    /// Sample points; the next admissible prime power is held out.
    #[arg(long = "sample-q", value_delimiter = ',', value_parser = parse_q)]
    sample_q: Vec<PrimePower>,
    #[command(flatten)]
    pack: PackArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleKind {
    Green,
    Flags,
    Enumerate,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// A type A_n label.
    #[arg(long = "type", value_parser = parse_type)]
    label: TypeLabel,
    #[arg(long, value_parser = parse_q)]
    q: PrimePower,
    #[arg(long, value_enum, default_value = "green")]
    kind: OracleKind,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[arg(long)]
    pack: PathBuf,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Types to check; all supported types in a sweep when omitted.
    #[arg(long = "type", value_delimiter = ',', value_parser = parse_type)]
    label: Vec<TypeLabel>,
    #[arg(long, value_delimiter = ',', value_parser = parse_q)]
    q: Vec<PrimePower>,
    #[arg(long, value_delimiter = ',')]
    r: Vec<u64>,
    /// Run every combination of the given (or default) types, q and r.
    #[arg(long)]
    sweep: bool,
    /// Worker threads for a sweep; 0 chooses automatically.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long = "budget-digits", default_value_t = DEFAULT_BUDGET_DIGITS)]
    budget_digits: usize,
    #[command(flatten)]
    pack: PackArg,
}

fn parse_type(s: &str) -> Result<TypeLabel, String> {
    s.parse::<TypeLabel>().map_err(|e| e.to_string())
}

fn parse_q(s: &str) -> Result<PrimePower, String> {
    let v: u64 = s.parse().map_err(|_| format!("{s:?} is not an integer"))?;
    PrimePower::new(v).map_err(|e| e.to_string())
}

/// Success, or a failed check whose report has been printed.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            e.print().ok();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> anyhow::Result<Outcome> {
    match cmd {
        Command::Table(a) => table(a),
        Command::Omega(a) => omega(a),
        Command::Solve(a) => solve(a),
        Command::Pi(a) => pi(a),
        Command::Oracle(a) => oracle(a),
        Command::ValidatePack(a) => validate_pack(&a.pack),
        Command::Verify(a) => verify(a),
    }
}

/// Reports a malformed invocation the way argument parsing does, exit 2.
fn usage(msg: &str) -> ! {
    Cli::command().error(ErrorKind::ArgumentConflict, msg).exit()
}

fn read_pack(path: &Path) -> anyhow::Result<DataPack> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(load_pack(&text)?)
}

/// Explicit `--pack`, then `GREEN_PACK_DIR`, then the built-in data.
fn group(label: TypeLabel, pack: &PackArg) -> anyhow::Result<GroupData> {
    let from_dir = std::env::var_os("GREEN_PACK_DIR")
        .map(|d| PathBuf::from(d).join(pack_file_name(label)))
        .filter(|p| p.is_file());
    let data = match pack.pack.as_deref().map(Path::to_path_buf).or(from_dir) {
        Some(path) => read_pack(&path)?,
        None => default_pack(label)?,
    };
    Ok(GroupData::with_pack_for(label, data)?)
}

fn table(a: TableArgs) -> anyhow::Result<Outcome> {
    let g = group(a.group.label, &a.group.pack)?;
    let run = compute(&g, &a.group.q)?;
    match a.format {
        Format::Csv => print!("{}", run.table.to_csv()),
        Format::Text => print!("{}", run.table.to_text()),
    }
    let bad = orthogonality_check(&run.table, &g)?;
    if bad.is_empty() {
        Ok(Outcome::Pass)
    } else {
        for m in bad {
            eprintln!("orthogonality fails at ({}, {}): {} vs {}", m.row, m.col, m.found, m.expected);
        }
        Ok(Outcome::Fail)
    }
}

fn omega(a: GroupArgs) -> anyhow::Result<Outcome> {
    let g = group(a.label, &a.pack)?;
    let om = build_omega(&g, &a.q)?;
    println!("type: {}", a.label);
    println!("q: {}", a.q);
    println!("order: {}", om.labels.join(" "));
    for b in om.block_summary() {
        println!("block: {b}");
    }
    println!("Omega-tilde:");
    print!("{}", om.tilde);
    println!("Omega:");
    print!("{}", om.scaled);
    println!("det Omega-tilde: {}", om.det_tilde());
    Ok(Outcome::Pass)
}

fn solve(a: GroupArgs) -> anyhow::Result<Outcome> {
    let g = group(a.label, &a.pack)?;
    let sol = solve_p_lambda(&build_omega(&g, &a.q)?)?;
    println!("type: {}", a.label);
    println!("q: {}", a.q);
    println!("order: {}", sol.omega.labels.join(" "));
    for b in sol.omega.block_summary() {
        println!("block: {b}");
    }
    println!("P:");
    print!("{}", sol.p);
    println!("Lambda:");
    print!("{}", sol.lambda);
    Ok(Outcome::Pass)
}

fn pi(a: PiArgs) -> anyhow::Result<Outcome> {
    let g = group(a.label, &a.pack)?;
    let pi = if a.sample_q.is_empty() {
        reconstruct_pi_auto(&g)?
    } else {
        let top = a.sample_q.iter().map(|q| q.value().clone()).max().expect("non-empty");
        let held = g.pack.admissible_prime_powers().find(|q| q.value() > &top).expect("infinitely many");
        reconstruct_pi(&g, &a.sample_q, &[held])?
    };
    println!("type: {}", a.label);
    print!("{pi}");
    Ok(Outcome::Pass)
}

fn oracle(a: OracleArgs) -> anyhow::Result<Outcome> {
    let TypeLabel::A(rank) = a.label else {
        bail!("oracles exist for untwisted type A only, got {}", a.label);
    };
    let n = rank + 1;
    let qv: u64 = a.q.value().try_into().context("q too large")?;
    match a.kind {
        OracleKind::Green => {
            let g = GroupData::load(a.label)?;
            let rows: Vec<(String, Partition)> = g
                .weyl
                .classes()
                .iter()
                .map(|c| (c.label.clone(), cycle_type(&g.weyl, c.rep)))
                .collect();
            let cols: Vec<Partition> = Partition::all(n).into_iter().rev().collect();
            let rho: Vec<Partition> = rows.iter().map(|r| r.1.clone()).collect();
            let m = green_matrix(&rho, &cols, a.q.value())?;
            let sep = match a.format {
                Format::Csv => ",",
                Format::Text => " ",
            };
            let header: Vec<String> = cols.iter().map(ToString::to_string).collect();
            println!("w{sep}{}", header.join(sep));
            for ((label, _), row) in rows.iter().zip(&m) {
                let vals: Vec<String> = row.iter().map(ToString::to_string).collect();
                println!("{label}{sep}{}", vals.join(sep));
            }
        }
        OracleKind::Flags => {
            let p = u8::try_from(qv).context("q too large")?;
            for lambda in Partition::all(n).into_iter().rev() {
                let c = flag_fixed_points(&FpMatrix::unipotent(&lambda, p), n, qv)?;
                println!("{lambda}: {c}");
            }
        }
        OracleKind::Enumerate => {
            let inv = gl_enumerate(n, qv)?;
            println!("|GL_{n}({qv})|: {}", inv.group_order);
            for u in &inv.unipotent {
                println!("unipotent {}: class size {}, centralizer {}", u.jordan_type, u.class_size, u.centralizer_order);
            }
            for (rho, t) in &inv.tori {
                println!("torus {rho}: {t}");
            }
        }
    }
    Ok(Outcome::Pass)
}

fn validate_pack(path: &Path) -> anyhow::Result<Outcome> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let result = parse_pack(&text).and_then(|p| p.validate().map(|()| p));
    match result {
        Ok(p) => {
            println!("pack {} for {}: valid", path.display(), p.label);
            Ok(Outcome::Pass)
        }
        Err(e) => {
            println!("pack {}: {} {e}", path.display(), e.code());
            Ok(Outcome::Fail)
        }
    }
}

fn verify(a: VerifyArgs) -> anyhow::Result<Outcome> {
    if !a.sweep {
        let ([label], [q], [r]) = (a.label.as_slice(), a.q.as_slice(), a.r.as_slice()) else {
            usage("verify needs exactly one --type, --q and --r, or --sweep");
        };
        let g = group(*label, &a.pack)?;
        let rep = congruence::verify_full(&g, q, *r, a.budget_digits)?;
        print!("{rep}");
        let failed = rep.hypotheses_met() && !rep.passed();
        return Ok(if failed { Outcome::Fail } else { Outcome::Pass });
    }
    if a.pack.pack.is_some() {
        usage("--pack applies to a single verification only");
    }
    let labels = if a.label.is_empty() { TypeLabel::ALL.to_vec() } else { a.label.clone() };
    let qs: Vec<u64> = if a.q.is_empty() {
        vec![2, 3, 4, 5]
    } else {
        let small: Option<Vec<u64>> = a.q.iter().map(|q| q.value().try_into().ok()).collect();
        small.unwrap_or_else(|| usage("sweep values of q must fit in 64 bits"))
    };
    let rs = if a.r.is_empty() { SWEEP_PRIMES.to_vec() } else { a.r.clone() };
    let items: Vec<SweepItem> = congruence::sweep_items(&labels, &qs, &rs);
    let results = congruence::sweep(&items, a.jobs, a.budget_digits)?;
    let (mut passed, mut skipped, mut failed) = (0, 0, 0);
    for (it, res) in items.iter().zip(results) {
        println!("== {} q={} r={}", it.label, it.q, it.r);
        match res {
            Ok(rep) => {
                print!("{rep}");
                if !rep.hypotheses_met() {
                    skipped += 1;
                } else if rep.passed() {
                    passed += 1;
                } else {
                    failed += 1;
                }
            }
            Err(e) => {
                println!("error: {e}");
                failed += 1;
            }
        }
    }
    println!("sweep: {passed} passed, {skipped} hypotheses not met, {failed} failed");
    if failed == 0 && passed > 0 {
        println!("ALL CONGRUENCES HOLD");
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Fail)
    }
}
