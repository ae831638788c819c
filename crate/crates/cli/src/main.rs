//! deltajac — exact Jacobian groups of triangular circulant graphs on the
//! command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 method
//! inapplicable to the spec. Data rows go to stdout and are byte-identical
//! across runs; timings and warnings go to stderr.

mod record;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deltajac::cheb::{mu, nu, ChebPair};
use deltajac::reduction::d_values;
use deltajac::{
    closed_form_as_stated, compute_jacobian, jacobian_via_closed_form, spanning_tree_count,
    unit_jump_tree_count, verify_spec, DeltaGraphSpec, Method,
};
use num_bigint::BigInt;
use rayon::prelude::*;
use record::{OutputRecord, SweepRecord};
use std::time::Instant;

const EXIT_VERIFICATION_FAILURE: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_METHOD_MISMATCH: i32 = 3;

/// Exact Jacobian (critical) groups of the triangular circulant graphs
/// Δ(n;k,l,m): three n-cycles with jumps k, l, m, stacked and joined by
/// column triangles.
#[derive(Parser)]
#[command(name = "deltajac", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Jacobian group of one spec.
    Jacobian(JacobianArgs),
    /// Count spanning trees of one spec (Matrix-Tree determinant).
    Trees(TreesArgs),
    /// Cross-check every applicable method against the others and against
    /// the spanning-tree count, over all specs up to the given bounds.
    Verify(VerifyArgs),
    /// Emit one closed-form record per n for Δ(n;1,1,1).
    Sweep(SweepArgs),
    /// Run the built-in worked examples and identity checks.
    Selftest,
}

#[derive(Args)]
struct SpecArgs {
    /// Layer cycle length (n ≥ 3).
    #[arg(short, long)]
    n: u64,
    /// Jump of the first layer cycle (any value not ≡ 0 mod n).
    #[arg(short, default_value_t = 1, allow_hyphen_values = true)]
    k: i64,
    /// Jump of the second layer cycle.
    #[arg(short, default_value_t = 1, allow_hyphen_values = true)]
    l: i64,
    /// Jump of the third layer cycle.
    #[arg(short, default_value_t = 1, allow_hyphen_values = true)]
    m: i64,
}

#[derive(Args)]
struct JacobianArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Computation route: closed | snf | theorem1 | split.
    /// Default: closed for unit jumps, theorem1 otherwise.
    #[arg(long, value_parser = parse_method_token)]
    method: Option<Method>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args)]
struct TreesArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest n to test; every n from 3 up to this is covered.
    #[arg(long)]
    n_max: u64,
    /// Largest jump per layer (capped at ⌊n/2⌋, since jumps j and n−j give
    /// the same graph). Default: ⌊n/2⌋.
    #[arg(long)]
    jumps_max: Option<u64>,
}

#[derive(Args)]
struct SweepArgs {
    /// First n (≥ 3).
    n_from: u64,
    /// Last n (inclusive).
    n_to: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = SweepFormat::Json)]
    format: SweepFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepFormat {
    Json,
    Csv,
}

fn parse_method_token(token: &str) -> Result<Method, String> {
    Method::parse(token)
        .ok_or_else(|| format!("unknown method `{token}` (expected closed, snf, theorem1, or split)"))
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_METHOD_MISMATCH,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VERIFICATION_FAILURE,
            message: message.into(),
        }
    }
}

fn main() {
    // Rust ignores SIGPIPE by default, turning `deltajac sweep … | head` into
    // a broken-pipe panic; restore the conventional terminate-quietly
    // behavior expected of a line-oriented tool.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Err(failure) = run(cli) {
        eprintln!("error: {}", failure.message);
        std::process::exit(failure.code);
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Jacobian(args) => cmd_jacobian(args),
        Command::Trees(args) => cmd_trees(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Selftest => cmd_selftest(),
    }
}

fn build_spec(args: &SpecArgs) -> Result<DeltaGraphSpec, Failure> {
    let n = usize::try_from(args.n).map_err(|_| Failure::usage("n does not fit this platform"))?;
    DeltaGraphSpec::new(n, args.k, args.l, args.m)
        .map_err(|e| Failure::usage(format!("invalid spec: {e}")))
}

fn warn_if_disconnected(spec: &DeltaGraphSpec) {
    if !spec.is_connected() {
        eprintln!(
            "warning: {spec} is disconnected ({} components); it has no spanning trees \
             and its Laplacian cokernel has free rank {}",
            spec.component_count(),
            spec.component_count()
        );
    }
}

fn cmd_jacobian(args: JacobianArgs) -> Result<(), Failure> {
    let spec = build_spec(&args.spec)?;
    let method = args.method.unwrap_or_else(|| Method::default_for(&spec));
    let start = Instant::now();
    let group = compute_jacobian(&spec, method).map_err(|e| Failure::mismatch(e.to_string()))?;
    let trees = spanning_tree_count(&spec);
    let record = make_record(&spec, method, &group, trees, start.elapsed().as_millis());
    warn_if_disconnected(&spec);
    match args.format {
        Format::Human => {
            println!("{spec}");
            println!("method: {method}");
            println!("group: {group}");
            if method == Method::ClosedForm {
                println!("as stated: {}", closed_form_as_stated(spec.n() as u64));
            }
            println!("order: {}", group.order());
            println!("spanning trees: {}", record.trees);
        }
        Format::Json => println!("{}", record.to_json()),
        Format::Csv => println!("{}", record.to_csv()),
    }
    eprintln!(
        "# jacobian {spec} method={method} elapsed_ms={}",
        record.elapsed_ms
    );
    Ok(())
}

fn make_record(
    spec: &DeltaGraphSpec,
    method: Method,
    group: &deltajac::AbelianGroup,
    trees: BigInt,
    elapsed_ms: u128,
) -> OutputRecord {
    let [k, l, m] = spec.jumps();
    OutputRecord {
        n: spec.n() as u64,
        k: k as u64,
        l: l as u64,
        m: m as u64,
        method: method.token().to_string(),
        torsion: group.torsion_factors().to_vec(),
        free_rank: spec.component_count(),
        order: group.order(),
        trees,
        elapsed_ms,
    }
}

fn cmd_trees(args: TreesArgs) -> Result<(), Failure> {
    let spec = build_spec(&args.spec)?;
    let start = Instant::now();
    let trees = spanning_tree_count(&spec);
    let elapsed_ms = start.elapsed().as_millis();
    warn_if_disconnected(&spec);
    let [k, l, m] = spec.jumps();
    match args.format {
        Format::Human => println!("{spec}: {trees} spanning trees"),
        Format::Json => println!(
            "{{\"n\":{},\"k\":{k},\"l\":{l},\"m\":{m},\"trees\":\"{trees}\"}}",
            spec.n()
        ),
        Format::Csv => println!("{},{k},{l},{m},{trees}", spec.n()),
    }
    eprintln!("# trees {spec} elapsed_ms={elapsed_ms}");
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    if args.n_max < 3 {
        return Err(Failure::usage("--n-max must be at least 3"));
    }
    if args.jumps_max == Some(0) {
        return Err(Failure::usage("--jumps-max must be at least 1"));
    }
    let mut specs = Vec::new();
    for n in 3..=(args.n_max as usize) {
        let cap = n / 2;
        let bound = match args.jumps_max {
            Some(j) => cap.min(j as usize),
            None => cap,
        }
        .max(1);
        for k in 1..=bound {
            for l in 1..=bound {
                for m in 1..=bound {
                    specs.push(
                        DeltaGraphSpec::new(n, k as i64, l as i64, m as i64)
                            .expect("bounded jumps are valid"),
                    );
                }
            }
        }
    }
    let start = Instant::now();
    let reports: Vec<_> = specs.par_iter().map(verify_spec).collect();
    let mut first_failure = None;
    for report in &reports {
        let spec = report.spec();
        let connectivity = if spec.is_connected() {
            "connected"
        } else {
            "disconnected"
        };
        let methods = report
            .groups()
            .iter()
            .map(|(method, _)| method.token())
            .collect::<Vec<_>>()
            .join(",");
        let group = &report.groups()[0].1;
        let status = if report.is_consistent() { "ok" } else { "MISMATCH" };
        println!(
            "{spec}\t{connectivity}\tmethods={methods}\tgroup={group}\torder={}\ttrees={}\t{status}",
            group.order(),
            report.tree_count()
        );
        if first_failure.is_none() {
            first_failure = report.first_failure();
        }
    }
    eprintln!(
        "# verified {} specs in {} ms",
        reports.len(),
        start.elapsed().as_millis()
    );
    match first_failure {
        None => Ok(()),
        Some(message) => Err(Failure::verification(message)),
    }
}

fn cmd_sweep(args: SweepArgs) -> Result<(), Failure> {
    if args.n_from < 3 || args.n_from > args.n_to {
        return Err(Failure::usage("sweep range must satisfy 3 <= from <= to"));
    }
    let start = Instant::now();
    let rows: Vec<SweepRecord> = (args.n_from..=args.n_to)
        .into_par_iter()
        .map(|n| {
            let t = Instant::now();
            let group = jacobian_via_closed_form(n);
            let trees = unit_jump_tree_count(n);
            let record = OutputRecord {
                n,
                k: 1,
                l: 1,
                m: 1,
                method: Method::ClosedForm.token().to_string(),
                torsion: group.torsion_factors().to_vec(),
                free_rank: 1,
                order: group.order(),
                trees,
                elapsed_ms: t.elapsed().as_millis(),
            };
            SweepRecord {
                record,
                nu: nu(n),
                mu: mu(n),
            }
        })
        .collect();
    for row in &rows {
        match args.format {
            SweepFormat::Json => println!("{}", row.to_json()),
            SweepFormat::Csv => println!("{}", row.to_csv()),
        }
    }
    eprintln!(
        "# swept n={}..{} in {} ms",
        args.n_from,
        args.n_to,
        start.elapsed().as_millis()
    );
    Ok(())
}

fn cmd_selftest() -> Result<(), Failure> {
    let start = Instant::now();
    let mut checks = 0usize;
    let mut failures = 0usize;
    let mut check = |name: &str, ok: bool| {
        checks += 1;
        if !ok {
            failures += 1;
        }
        println!("{} {name}", if ok { "ok  " } else { "FAIL" });
    };

    let torsion_of = |n: u64| {
        jacobian_via_closed_form(n)
            .torsion_factors()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    check("worked instance n=3 torsion", torsion_of(3) == "6,6,18,18");
    check(
        "worked instance n=3 order",
        jacobian_via_closed_form(3).order() == BigInt::from(11664),
    );
    check("worked instance n=4 torsion", torsion_of(4) == "5,5,35,420");
    check(
        "worked instance n=4 order",
        jacobian_via_closed_form(4).order() == BigInt::from(367500),
    );

    let spec = DeltaGraphSpec::new(3, 1, 1, 1).expect("valid spec");
    check(
        "all methods agree with tree count on Δ(3;1,1,1)..Δ(10;1,1,1)",
        (3..=10).all(|n| {
            let s = DeltaGraphSpec::new(n, 1, 1, 1).expect("valid spec");
            verify_spec(&s).is_consistent()
        }),
    );
    check(
        "general-jump methods agree on Δ(5;1,2,2) and Δ(7;2,3,1)",
        [(5, 1, 2, 2), (7, 2, 3, 1)].iter().all(|&(n, k, l, m)| {
            let s = DeltaGraphSpec::new(n, k, l, m).expect("valid spec");
            verify_spec(&s).is_consistent()
        }),
    );

    // ChebPair::new and d_values assert their defining identities internally;
    // running them over a range is already a real check.
    check(
        "sequence identities hold for n <= 200",
        (1..=200).all(|n| {
            let pair = ChebPair::new(n);
            pair.n == n
        }),
    );
    check(
        "minors-gcd chain divides for n <= 50",
        (3..=50).all(|n| {
            let d = d_values(n);
            d.n == n
        }),
    );

    let record = make_record(
        &spec,
        Method::ClosedForm,
        &jacobian_via_closed_form(3),
        spanning_tree_count(&spec),
        0,
    );
    check(
        "JSON record round-trips",
        OutputRecord::from_json(&record.to_json()) == Ok(record),
    );

    println!("selftest: {checks} checks, {failures} failures");
    eprintln!("# selftest elapsed_ms={}", start.elapsed().as_millis());
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure::verification(format!(
            "{failures} selftest check(s) failed"
        )))
    }
}
