//! `ternlie` command line tool: symbolic verification of the averaged quintic
//! identity, group diagnostics, algebra builders, tensor checks, 2-dim
//! classification, and the full verification suite.
//!
//! Exit codes: 0 all checks passed, 1 checks ran and failed, 2 usage or
//! parse errors.

mod suite;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ternlie_core::classify::{classify, iso_witness, IsoOutcome};
use ternlie_core::constructions::{
    extract_structure_constants, traceless_basis_order2, vector_structure_constants, Carrier,
    CubicMatrix, TernaryProduct, VectorBracket,
};
use ternlie_core::free::{omega_polynomial, AssocKind};
use ternlie_core::group::{affine_to_perm, ga15_elements, generate, is_normal, AffineMap5, Perm5};
use ternlie_core::json::{
    check_report_to_value, class_report_to_value, iso_outcome_to_value, tensor_from_str,
    tensor_to_string, MAX_TENSOR_DIM,
};
use ternlie_core::tensor::{CheckReport, StructureTensor};
use ternlie_core::{EisMatrix, EisScalar, Error};

use suite::SuiteConfig;

#[derive(Parser)]
#[command(
    name = "ternlie",
    version,
    about = "Exact arithmetic checks and constructions for twisted ternary matrix algebras"
)]
struct Cli {
    /// emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand the averaged five-letter product and report whether it vanishes
    Verify {
        /// reading of the nested triple products
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Diagnose the order-20 substitution group and its affine model
    Group,
    /// Build algebras or check structure-constant files
    Algebra {
        #[command(subcommand)]
        action: AlgebraCmd,
    },
    /// Classify a 2-dimensional algebra from its tensor file
    Classify {
        /// tensor JSON file
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Search for an exact change of basis between two 2-dimensional algebras
    Iso {
        /// tensor JSON file of the source algebra
        a: PathBuf,
        /// tensor JSON file of the target algebra
        b: PathBuf,
    },
    /// Run every headline check and print one table row per check
    PaperSuite {
        /// offset added to every pseudo-random seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// override the trial count of every randomized check
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: Option<u64>,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Extract structure constants on a canonical basis and emit tensor JSON
    Build {
        /// which construction to run
        #[arg(long = "type", value_enum)]
        kind: BuildType,
        /// size: rows for rect, length for vector, order for the others
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// column count for the rect type (defaults to n)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: Option<u64>,
        /// basis choice for the cubic types
        #[arg(long, value_enum, default_value_t = BasisArg::Full)]
        basis: BasisArg,
        /// output path; without it the tensor JSON goes to stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check a tensor file against the cyclic symmetry and the group identity
    Check {
        /// tensor JSON file
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    First,
    Second,
    Free,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildType {
    Rect,
    Vector,
    CubicBeta,
    CubicGamma,
    Binary,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum BasisArg {
    Full,
    Traceless,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Cmd::Verify { kind } => cmd_verify(kind, cli.json),
        Cmd::Group => cmd_group(cli.json),
        Cmd::Algebra {
            action: AlgebraCmd::Build { kind, n, m, basis, out },
        } => cmd_build(kind, n as usize, m.map(|v| v as usize), basis, out, cli.json),
        Cmd::Algebra {
            action: AlgebraCmd::Check { input },
        } => cmd_check(&input, cli.json),
        Cmd::Classify { input } => cmd_classify(&input, cli.json),
        Cmd::Iso { a, b } => cmd_iso(&a, &b, cli.json),
        Cmd::PaperSuite { seed, trials } => {
            cmd_suite(seed, trials.map(|t| t as usize), cli.json)
        }
    }
}

fn kind_name(kind: KindArg) -> &'static str {
    match kind {
        KindArg::First => "first",
        KindArg::Second => "second",
        KindArg::Free => "free",
    }
}

fn type_name(kind: BuildType) -> &'static str {
    match kind {
        BuildType::Rect => "rect",
        BuildType::Vector => "vector",
        BuildType::CubicBeta => "cubic-beta",
        BuildType::CubicGamma => "cubic-gamma",
        BuildType::Binary => "binary",
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_verify(kind: KindArg, json: bool) -> Result<bool> {
    let start = Instant::now();
    let assoc = match kind {
        KindArg::First => AssocKind::First,
        KindArg::Second => AssocKind::Second,
        KindArg::Free => AssocKind::Free,
    };
    let exp = omega_polynomial(assoc);
    let zero = exp.poly.is_zero();
    let expect_zero = !matches!(kind, KindArg::Free);
    let passed = exp.raw_terms == 720 && zero == expect_zero;
    let elapsed = start.elapsed();
    if json {
        println!(
            "{}",
            json!({
                "command": "verify",
                "kind": kind_name(kind),
                "raw_terms": exp.raw_terms,
                "double_commutators": exp.double_commutators,
                "merged_terms": exp.poly.term_count(),
                "zero": zero,
                "passed": passed,
                "elapsed_ms": elapsed.as_millis() as u64,
            })
        );
    } else {
        println!("expansion kind: {}", kind_name(kind));
        println!("raw terms before merging: {}", exp.raw_terms);
        println!("double commutators summed: {}", exp.double_commutators);
        println!("terms after merging: {}", exp.poly.term_count());
        let verdict = match (passed, expect_zero) {
            (true, true) => "PASS (the averaged expansion collapses to zero)",
            (true, false) => "PASS (the free expansion stays nonzero)",
            (false, true) => "FAIL (expected the zero polynomial)",
            (false, false) => "FAIL (unexpected expansion statistics)",
        };
        println!("result: {verdict} [{elapsed:.2?}]");
    }
    Ok(passed)
}

fn cmd_group(json: bool) -> Result<bool> {
    let start = Instant::now();
    let s5 = Perm5::sigma();
    let t4 = Perm5::tau();
    let group = generate(&[s5.clone(), t4.clone()]);
    let mut checks: Vec<(&str, bool)> = Vec::new();
    checks.push((
        "the two substitutions generate exactly the 20 expected permutations",
        group.len() == 20 && group == ga15_elements(),
    ));
    checks.push(("the cycle generator has order 5", s5.pow(5).is_identity()));
    checks.push(("the stretch generator has order 4", t4.pow(4).is_identity()));
    checks.push((
        "conjugating the cycle by the stretch squares it",
        t4.inverse().compose(&s5).compose(&t4) == s5.pow(2),
    ));
    let mut factored = BTreeSet::new();
    for k in 0..5 {
        for j in 0..4 {
            factored.insert(s5.pow(k).compose(&t4.pow(j)));
        }
    }
    checks.push((
        "the 20 monomial products are distinct and cover the group",
        factored.len() == 20 && factored == group,
    ));
    let n = generate(&[s5.clone()]);
    let h = generate(&[t4.clone()]);
    checks.push((
        "the order-5 subgroup is normal",
        n.len() == 5 && is_normal(&n, &group),
    ));
    checks.push((
        "the order-4 subgroup is not normal",
        h.len() == 4 && !is_normal(&h, &group),
    ));
    let affine = AffineMap5::all();
    let mut multiplicative = affine.len() == 20;
    let mut images = BTreeSet::new();
    for x in &affine {
        images.insert(affine_to_perm(x));
        for y in &affine {
            let lhs = affine_to_perm(&x.compose(y));
            let rhs = affine_to_perm(x).compose(&affine_to_perm(y));
            if lhs != rhs {
                multiplicative = false;
            }
        }
    }
    checks.push((
        "affine composition matches permutation composition on all 400 pairs",
        multiplicative,
    ));
    checks.push(("the affine model covers the whole group", images == group));
    let passed = checks.iter().all(|(_, ok)| *ok);
    let elapsed = start.elapsed();
    if json {
        println!(
            "{}",
            json!({
                "command": "group",
                "order": group.len(),
                "checks": checks
                    .iter()
                    .map(|(name, ok)| json!({ "name": name, "passed": ok }))
                    .collect::<Vec<_>>(),
                "passed": passed,
                "elapsed_ms": elapsed.as_millis() as u64,
            })
        );
    } else {
        println!("group order: {}", group.len());
        for (name, ok) in &checks {
            println!("  [{}] {name}", if *ok { "ok" } else { "FAIL" });
        }
        println!(
            "result: {} ({} checks) [{elapsed:.2?}]",
            if passed { "PASS" } else { "FAIL" },
            checks.len()
        );
    }
    Ok(passed)
}

enum Built {
    Tensor(StructureTensor),
    Open(usize, usize, usize),
}

fn extract(prod: &TernaryProduct, basis: &[Carrier]) -> Result<Built> {
    match extract_structure_constants(prod, basis) {
        Ok(c) => Ok(Built::Tensor(c)),
        Err(Error::NotClosed(i, k, l)) => Ok(Built::Open(i, k, l)),
        Err(e) => Err(e.into()),
    }
}

fn budget(dim: usize, what: &str) -> Result<()> {
    if dim > MAX_TENSOR_DIM {
        bail!("{what} gives dimension {dim}, over the default budget of {MAX_TENSOR_DIM}");
    }
    Ok(())
}

fn cmd_build(
    kind: BuildType,
    n: usize,
    m: Option<usize>,
    basis: BasisArg,
    out: Option<PathBuf>,
    json: bool,
) -> Result<bool> {
    if m.is_some() && !matches!(kind, BuildType::Rect) {
        bail!("--m only applies to --type rect");
    }
    if basis == BasisArg::Traceless && !matches!(kind, BuildType::CubicBeta | BuildType::CubicGamma)
    {
        bail!("--basis traceless only applies to the cubic types");
    }
    let built = match kind {
        BuildType::Vector => {
            budget(n, "a coordinate space of that length")?;
            Built::Tensor(vector_structure_constants(n, VectorBracket::Cyclic)?)
        }
        BuildType::Rect => {
            let m = m.unwrap_or(n);
            budget(n * m, &format!("a {n}x{m} matrix space"))?;
            let units: Vec<Carrier> = (0..n)
                .flat_map(|i| (0..m).map(move |j| Carrier::Rect(EisMatrix::unit(n, m, i, j))))
                .collect();
            extract(&TernaryProduct::RectTranspose, &units)?
        }
        BuildType::Binary => {
            budget(n * n, &format!("a {n}x{n} matrix space"))?;
            let units: Vec<Carrier> = (0..n)
                .flat_map(|i| (0..n).map(move |j| Carrier::Rect(EisMatrix::unit(n, n, i, j))))
                .collect();
            extract(&TernaryProduct::BinaryDerived, &units)?
        }
        BuildType::CubicBeta | BuildType::CubicGamma => {
            let prod = if matches!(kind, BuildType::CubicBeta) {
                TernaryProduct::CubicBeta
            } else {
                TernaryProduct::CubicGamma
            };
            match basis {
                BasisArg::Traceless => {
                    if n != 2 {
                        bail!("the traceless basis is only constructed at order 2");
                    }
                    let (x1, x2) = traceless_basis_order2();
                    extract(&prod, &[Carrier::Cubic(x1), Carrier::Cubic(x2)])?
                }
                BasisArg::Full => {
                    if !(2..=3).contains(&n) {
                        bail!(
                            "order-{n} cubic matrices are over the default budget \
                             (allowed orders: 2 and 3)"
                        );
                    }
                    let mut units = Vec::new();
                    for i in 0..n {
                        for j in 0..n {
                            for k in 0..n {
                                let mut x = CubicMatrix::zero(n);
                                x.set(i, j, k, EisScalar::from_int(1));
                                units.push(Carrier::Cubic(x));
                            }
                        }
                    }
                    extract(&prod, &units)?
                }
            }
        }
    };
    match built {
        Built::Tensor(c) => {
            let text = tensor_to_string(&c);
            let nonzero = c.nonzero().count();
            if let Some(path) = out {
                fs::write(&path, format!("{text}\n"))
                    .with_context(|| format!("writing {}", path.display()))?;
                if json {
                    println!(
                        "{}",
                        json!({
                            "command": "algebra build",
                            "type": type_name(kind),
                            "dim": c.dim(),
                            "nonzero_entries": nonzero,
                            "out": path.display().to_string(),
                            "passed": true,
                        })
                    );
                } else {
                    println!("dimension: {}", c.dim());
                    println!("nonzero structure constants: {nonzero}");
                    println!("wrote {}", path.display());
                }
            } else {
                println!("{text}");
            }
            Ok(true)
        }
        Built::Open(i, k, l) => {
            if json {
                println!(
                    "{}",
                    json!({
                        "command": "algebra build",
                        "type": type_name(kind),
                        "closed": false,
                        "escaping_triple": [i, k, l],
                        "passed": false,
                    })
                );
            } else {
                println!("the commutator algebra is not closed on this basis");
                println!("first escaping product: basis triple ({i},{k},{l})");
                println!("result: FAIL");
            }
            Ok(false)
        }
    }
}

fn read_tensor(path: &Path) -> Result<StructureTensor> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let c = tensor_from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(c)
}

fn print_report(report: &CheckReport) {
    if report.passed() {
        println!("{}: PASS ({} tuples checked)", report.name, report.checked);
    } else {
        println!(
            "{}: FAIL ({} of {} tuples violated)",
            report.name, report.violation_count, report.checked
        );
        for v in &report.violations {
            let idx = v
                .indices
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            println!("  ({idx}): {}", v.detail);
        }
        if report.truncated() {
            println!("  (further violations suppressed)");
        }
    }
}

fn cmd_check(input: &Path, json: bool) -> Result<bool> {
    let start = Instant::now();
    let c = read_tensor(input)?;
    let symmetry = c.check_omega_symmetry();
    let identity = c.check_ga15_identity();
    let passed = symmetry.passed() && identity.passed();
    let elapsed = start.elapsed();
    if json {
        println!(
            "{}",
            json!({
                "command": "algebra check",
                "dim": c.dim(),
                "reports": [check_report_to_value(&symmetry), check_report_to_value(&identity)],
                "passed": passed,
                "elapsed_ms": elapsed.as_millis() as u64,
            })
        );
    } else {
        println!("dimension: {}", c.dim());
        print_report(&symmetry);
        print_report(&identity);
        println!(
            "result: {} [{elapsed:.2?}]",
            if passed { "PASS" } else { "FAIL" }
        );
    }
    Ok(passed)
}

fn cmd_classify(input: &Path, json: bool) -> Result<bool> {
    let c = read_tensor(input)?;
    let report =
        classify(&c).with_context(|| format!("classifying {}", input.display()))?;
    if json {
        println!("{}", serde_json::to_string(&class_report_to_value(&report))?);
    } else {
        println!("class: {}", report.label);
        println!("zero tensor: {}", yn(report.invariants.is_zero));
        println!(
            "balanced hyperplane (p = s): {}",
            yn(report.invariants.in_w)
        );
        println!(
            "discriminant p^2 - qr vanishes: {}",
            yn(report.invariants.disc_zero)
        );
    }
    Ok(true)
}

fn cmd_iso(a: &Path, b: &Path, json: bool) -> Result<bool> {
    let src = read_tensor(a)?;
    let dst = read_tensor(b)?;
    let outcome = iso_witness(&src, &dst).context("searching for a change of basis")?;
    if json {
        println!("{}", serde_json::to_string(&iso_outcome_to_value(&outcome))?);
    }
    match outcome {
        IsoOutcome::Found(w) => {
            if !json {
                println!("witness change of basis:");
                print!("{w}");
                println!("applying it to the first algebra reproduces the second exactly");
            }
            Ok(true)
        }
        IsoOutcome::NoWitness { reason } => {
            if !json {
                println!("no witness: {reason}");
            }
            Ok(false)
        }
    }
}

fn cmd_suite(seed: u64, trials: Option<usize>, json: bool) -> Result<bool> {
    let outcomes = suite::run(&SuiteConfig { seed, trials });
    let passed = outcomes.iter().all(|o| o.passed());
    if json {
        println!(
            "{}",
            json!({
                "command": "paper-suite",
                "checks": outcomes
                    .iter()
                    .map(|o| json!({
                        "index": o.index,
                        "name": o.name,
                        "claim": o.claim,
                        "passed": o.passed(),
                        "failures": o.failures,
                        "elapsed_ms": o.elapsed.as_millis() as u64,
                    }))
                    .collect::<Vec<_>>(),
                "passed": passed,
            })
        );
    } else {
        println!(
            "{:>2}  {:<6}{:>10}  {:<33}  {}",
            "#", "result", "time", "check", "claim"
        );
        for o in &outcomes {
            println!(
                "{:>2}  {:<6}{:>10}  {:<33}  {}",
                o.index,
                if o.passed() { "PASS" } else { "FAIL" },
                format!("{:.1?}", o.elapsed),
                o.name,
                o.claim
            );
            for failure in &o.failures {
                println!("      - {failure}");
            }
        }
        let n_pass = outcomes.iter().filter(|o| o.passed()).count();
        println!("{n_pass} of {} checks passed", outcomes.len());
    }
    Ok(passed)
}
