use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use weightgb::betti::{aci_comparison, aci_construct, betti_table};
use weightgb::bounds::{
    bound_a, bound_b, bound_prop47, bound_thm48, castelnuovo, load_corpus, verify_corpus, BoundReport, VerifyConfig,
};
use weightgb::homog::names_with_y;
use weightgb::ideal_file::{IdealFile, OrderSpec};
use weightgb::json::big_number;
use weightgb::lambda::{build_lambda, lambda_dim, SplitGenerator};
use weightgb::oracle::{hilbert_function, initial_ideal_generators, oracle_betti};
use weightgb::relative::{relative_gb, RelGbConfig};
use weightgb::{with_field, BigUint, Error, Field, Monomial, Poly, Result, RingCtx, WeightOrder};

const SEED_VAR: &str = "WEIGHTGB_SEED";

#[derive(Parser)]
#[command(name = "weightgb", version, about = "Weighted Gröbner bases, Betti numbers and Betti bounds")]
struct Cli {
    /// Seed for randomized constructions (default: $WEIGHTGB_SEED, then the file's seed, then 0).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal Gröbner basis and initial ideal generators for a weight preorder.
    Gb(GbArgs),
    /// Minimal generators of the initial ideal only.
    Initial(GbArgs),
    /// Graded Betti numbers in a window.
    Betti(BettiArgs),
    /// Dimensions of the Λ-module built from the generators.
    Lambda(LambdaArgs),
    /// Tables of the closed-form bounds.
    Bounds(BoundsArgs),
    /// Check a corpus against the bounds and its manifest.
    Verify(VerifyArgs),
    /// Brute-force linear-algebra cross-check of initial ideals and Betti numbers.
    Oracle(OracleArgs),
}

#[derive(Args)]
#[group(multiple = false)]
struct OrderArgs {
    /// Comma-separated weight vector.
    #[arg(long, value_delimiter = ',')]
    weight: Option<Vec<u64>>,
    /// The Omega_h matrix preorder of the ring.
    #[arg(long)]
    omega_h: bool,
    /// Matrix rows separated by ';', entries by ','.
    #[arg(long, value_parser = parse_matrix)]
    matrix: Option<Rows>,
}

#[derive(Args)]
struct GbArgs {
    file: PathBuf,
    #[command(flatten)]
    order: OrderArgs,
    /// Compute through this degree only (default for Omega_h and matrix orders: the window's max_j).
    #[arg(long)]
    degree_cap: Option<u32>,
    /// Include the per-iteration history.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct BettiArgs {
    file: PathBuf,
    /// `max_i,max_j`, overriding the file.
    #[arg(long, value_parser = parse_window)]
    window: Option<(u32, u32)>,
    /// Also build a linked almost complete intersection and compare.
    #[arg(long)]
    aci: bool,
    /// Degree of the extra ACI generator.
    #[arg(long, requires = "aci")]
    aci_degree: Option<u32>,
}

#[derive(Args)]
struct LambdaArgs {
    file: PathBuf,
    /// Degrees `a..b` (inclusive) or a single degree.
    #[arg(long, value_parser = parse_span)]
    j_range: Option<Span>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Values of h: `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_span)]
    h: Span,
    #[arg(long, value_parser = parse_span, default_value = "0")]
    i: Span,
    #[arg(long, value_parser = parse_span, default_value = "0..3")]
    j: Span,
    /// The `a` parameter of the Λ-based bound.
    #[arg(long, value_parser = parse_span, default_value = "1")]
    a: Span,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "corpus")]
    corpus_dir: PathBuf,
    /// Worker threads across corpus items (0: automatic).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Record elapsed time per item.
    #[arg(long)]
    timing: bool,
    /// Include Betti tables in the reports.
    #[arg(long)]
    tables: bool,
}

#[derive(Args)]
struct OracleArgs {
    file: PathBuf,
    #[command(flatten)]
    order: OrderArgs,
    /// Highest degree examined (default: the window's max_j).
    #[arg(long)]
    degree_cap: Option<u32>,
}

struct Outcome {
    json: Value,
    text: String,
    ok: bool,
}

/// Inclusive range `a..b` or a single value.
#[derive(Clone, Debug)]
struct Span(Vec<u64>);

fn parse_span(s: &str) -> std::result::Result<Span, String> {
    let bad = || format!("expected `a..b` or a number, got '{s}'");
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b)?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(Span((lo..=hi).collect()))
}

fn parse_window(s: &str) -> std::result::Result<(u32, u32), String> {
    let bad = || format!("expected `max_i,max_j`, got '{s}'");
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn parse_matrix(s: &str) -> std::result::Result<Rows, String> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|v| v.trim().parse().map_err(|_| format!("bad matrix entry '{v}'")))
                .collect()
        })
        .collect::<std::result::Result<_, _>>()
        .map(Rows)
}

#[derive(Clone, Debug)]
struct Rows(Vec<Vec<u64>>);

fn order_spec(args: &OrderArgs, file: &IdealFile) -> Result<OrderSpec> {
    if let Some(w) = &args.weight {
        return Ok(OrderSpec::Weight { omega: w.clone() });
    }
    if args.omega_h {
        return Ok(OrderSpec::OmegaH);
    }
    if let Some(m) = &args.matrix {
        return Ok(OrderSpec::Matrix { rows: m.0.clone() });
    }
    Ok(file.order.clone().unwrap_or(OrderSpec::OmegaH))
}

fn resolve_order(args: &OrderArgs, cap: Option<u32>, file: &IdealFile) -> Result<(OrderSpec, WeightOrder, Option<u32>)> {
    let spec = order_spec(args, file)?;
    let cap = match cap {
        Some(c) => Some(c),
        None if spec.needs_cap() => Some(file.window.max_j),
        None => None,
    };
    let w = spec.to_weight(file.n(), file.ring.h, cap.unwrap_or(0))?;
    Ok((spec, w, cap))
}

fn print_all<F: Field>(ring: &RingCtx, ps: &[Poly<F>]) -> Vec<String> {
    ps.iter().map(|p| ring.print(p)).collect()
}

fn instance_name(file: &IdealFile, path: &std::path::Path) -> String {
    file.name
        .clone()
        .unwrap_or_else(|| path.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string())
}

fn listing(text: &mut String, title: &str, items: &[String]) {
    let _ = writeln!(text, "{title} ({}):", items.len());
    for s in items {
        let _ = writeln!(text, "  {s}");
    }
}

fn run_gb<F: Field>(args: &GbArgs, file: &IdealFile, initial_only: bool) -> Result<Outcome> {
    let gens = file.polys::<F>()?;
    let (spec, w, cap) = resolve_order(&args.order, args.degree_cap, file)?;
    let res = relative_gb(&gens, &w, &RelGbConfig::capped(cap))?;
    let ring = &file.ring;
    let initial = print_all(ring, &res.initial_gens);
    let gb = print_all(ring, &res.gb);
    let parked = print_all(ring, &res.parked);
    let mut out = json!({
        "command": if initial_only { "initial" } else { "gb" },
        "instance": instance_name(file, &args.file),
        "field": file.field().to_string(),
        "order": spec,
        "weight": w.omega(),
        "degree_cap": cap,
        "initial_generators": initial,
        "iterations": res.history.len(),
    });
    let mut text = String::new();
    let _ = writeln!(text, "weight: {:?}", w.omega());
    if let Some(c) = cap {
        let _ = writeln!(text, "degree cap: {c}");
    }
    if !initial_only {
        out["gb"] = json!(gb);
        out["minimal"] = json!(res.minimal);
        listing(&mut text, "minimal Gröbner basis", &gb);
    }
    listing(&mut text, "initial ideal generators", &initial);
    if !parked.is_empty() {
        out["parked"] = json!(parked);
        listing(&mut text, "generators above the cap", &parked);
    }
    let _ = writeln!(text, "iterations: {}", res.history.len());
    if args.trace {
        out["history"] = serde_json::to_value(&res.history).map_err(|e| Error::Consistency(e.to_string()))?;
        let names = names_with_y(&ring.var_names);
        out["survivors"] = json!(res
            .survivors
            .iter()
            .map(|s| s.poly().display_with(&names).to_string())
            .collect::<Vec<_>>());
        for r in &res.history {
            let _ = writeln!(
                text,
                "  iteration {}: {} syzygies, {} pushed, {} added {:?}",
                r.iteration, r.syzygies, r.pushed, r.added, r.added_degrees
            );
        }
    }
    Ok(Outcome { json: out, text, ok: true })
}

fn run_betti<F: Field>(args: &BettiArgs, file: &IdealFile, seed: u64) -> Result<Outcome> {
    let gens = file.polys::<F>()?;
    let (max_i, max_j) = args.window.unwrap_or((file.window.max_i, file.window.max_j));
    let table = betti_table(&gens, max_i, max_j)?;
    let mut out = json!({
        "command": "betti",
        "instance": instance_name(file, &args.file),
        "field": file.field().to_string(),
        "betti": serde_json::to_value(&table).map_err(|e| Error::Consistency(e.to_string()))?,
    });
    let mut text = table.to_string();
    let mut ok = true;
    if args.aci {
        let inst = aci_construct(&gens, &[], args.aci_degree, seed)?;
        let rows = aci_comparison(&inst, max_j)?;
        ok = rows.iter().all(|(_, a, b)| a == b);
        let ring = &file.ring;
        out["aci"] = json!({
            "seed": seed,
            "f": print_all(ring, &inst.f),
            "g": ring.print(&inst.g),
            "d": inst.d,
            "d0": inst.d0,
            "attempts": inst.attempts,
            "comparison": rows.iter().map(|(j, a, b)| json!({"j": j, "beta_0j": a, "beta_1_d_plus_j": b})).collect::<Vec<_>>(),
            "ok": ok,
        });
        let _ = writeln!(text, "linked ACI: D = {}, D0 = {}, seed {seed}", inst.d, inst.d0);
        for (j, a, b) in &rows {
            let _ = writeln!(text, "  j = {j}: beta_0j(I) = {a}, beta_1,D+j(a) = {b}");
        }
    }
    Ok(Outcome { json: out, text, ok })
}

fn run_lambda<F: Field>(args: &LambdaArgs, file: &IdealFile) -> Result<Outcome> {
    let gens = file.polys::<F>()?;
    let h = file.ring.h;
    let split: Vec<SplitGenerator<F>> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| SplitGenerator::split(g, h, i))
        .collect::<Result<_>>()?;
    let l = build_lambda(&split, h);
    let top = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0) as u64;
    let js = match &args.j_range {
        Some(s) => s.0.clone(),
        None => (0..=top + 2).collect(),
    };
    let names = &file.ring.var_names;
    let basis: Vec<Value> = l
        .basis
        .iter()
        .map(|b| {
            let m = Monomial::from_exponents(&b.m);
            let mono = Poly::<F>::monomial(m.resized(file.n())).display_with(names).to_string();
            json!({"r": b.r, "m": mono, "degree": b.degree})
        })
        .collect();
    let dims: Vec<(u64, Value)> = js
        .iter()
        .map(|&j| (j, big_number(&lambda_dim(&l, j as i64)).into()))
        .collect();
    let mut text = format!("Λ basis ({} elements):\n", l.len());
    for b in &basis {
        let _ = writeln!(text, "  e^{}_{}  degree {}", b["r"], b["m"].as_str().unwrap_or(""), b["degree"]);
    }
    for (j, d) in &dims {
        let _ = writeln!(text, "lambda_{j} = {d}");
    }
    let out = json!({
        "command": "lambda",
        "instance": instance_name(file, &args.file),
        "h": h,
        "basis": basis,
        "dims": dims.iter().map(|(j, d)| json!({"j": j, "lambda": d})).collect::<Vec<_>>(),
    });
    Ok(Outcome { json: out, text, ok: true })
}

const MAX_BOUND_BITS: f64 = (1u64 << 24) as f64;

fn check_size(h: u64, exponent_log2: u64, what: &str) -> Result<()> {
    let bits = (exponent_log2 as f64).exp2() * (h.max(2) as f64).log2();
    if exponent_log2 >= 60 || bits > MAX_BOUND_BITS {
        return Err(Error::Resource(format!("{what} for h = {h} is too large to print")));
    }
    Ok(())
}

fn run_bounds(args: &BoundsArgs) -> Result<Outcome> {
    let (hs, is, js, as_) = (&args.h.0, &args.i.0, &args.j.0, &args.a.0);
    if hs.contains(&0) || as_.contains(&0) {
        return Err(Error::Precondition("h and a must be at least 1".into()));
    }
    let big = |v: &BigUint| -> Value { big_number(v).into() };
    let mut rows = Vec::new();
    let mut text = String::from("h\ti\tj\ta\tbound_A\tbound_B\tcastelnuovo\tbound_prop47\tbound_thm48\n");
    for &h in hs {
        for &i in is {
            for &j in js {
                for &a in as_ {
                    check_size(h, j + 1, "bound_A")?;
                    check_size(h, a + j + 1, "bound_prop47")?;
                    let (i32_, j32, a32) = (i as u32, j as u32, a as u32);
                    let ba = bound_a(h, j32);
                    let bb = bound_b(h);
                    let c = castelnuovo(h);
                    let p = bound_prop47(h, a32, i32_, j32);
                    let t = if h >= 2 {
                        check_size(h, j + h, "bound_thm48")?;
                        Some(bound_thm48(h, i32_, j32)?)
                    } else {
                        None
                    };
                    let _ = writeln!(
                        text,
                        "{h}\t{i}\t{j}\t{a}\t{ba}\t{bb}\t{c}\t{p}\t{}",
                        t.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "-".into())
                    );
                    rows.push(json!({
                        "h": h, "i": i, "j": j, "a": a,
                        "bound_A": big(&ba),
                        "bound_B": big(&bb),
                        "castelnuovo": big(&c),
                        "bound_prop47": big(&p),
                        "bound_thm48": t.as_ref().map(big),
                    }));
                }
            }
        }
    }
    Ok(Outcome {
        json: json!({"command": "bounds", "rows": rows}),
        text,
        ok: true,
    })
}

fn report_line(text: &mut String, r: &BoundReport) {
    let status = if r.ok() { "ok  " } else { "FAIL" };
    let passed = r.checks.iter().filter(|c| c.ok).count();
    let h = r.h.map(|h| h.to_string()).unwrap_or_else(|| "?".into());
    let _ = write!(text, "{status} {}  [{}]  h={h}", r.instance, r.field);
    if let Some(b) = r.bigheight {
        let _ = write!(text, " bigheight={b} (declared)");
    }
    let _ = writeln!(text, "  checks {passed}/{}", r.checks.len());
    if let Some(c) = &r.castelnuovo {
        let rel = if c.exceeded { ">" } else { "<=" };
        let _ = writeln!(text, "     castelnuovo: beta02 = {} {rel} {}", c.beta02, c.bound);
    }
    for c in r.failures() {
        let _ = writeln!(
            text,
            "     {} at (i={}, j={}): {} > {}",
            c.bound_name, c.i, c.j, c.computed, c.bound
        );
    }
    for g in r.regression.iter().filter(|g| !g.ok) {
        let _ = writeln!(
            text,
            "     manifest beta0{}: expected {}, computed {:?}",
            g.j, g.expected, g.computed
        );
    }
    if let Some(e) = &r.error {
        let _ = writeln!(text, "     error ({}): {}", e.kind, e.message);
    }
    if let Some(t) = &r.betti {
        for line in t.to_string().lines() {
            let _ = writeln!(text, "     {line}");
        }
    }
}

fn run_verify(args: &VerifyArgs) -> Result<Outcome> {
    let corpus = load_corpus(&args.corpus_dir)?;
    let cfg = VerifyConfig {
        jobs: args.jobs,
        timing: args.timing,
        tables: args.tables,
    };
    let reports = verify_corpus(&corpus, &cfg)?;
    let failed = reports.iter().filter(|r| !r.ok()).count();
    let mut text = String::new();
    for r in &reports {
        report_line(&mut text, r);
    }
    let _ = writeln!(text, "{} instances, {failed} failed", reports.len());
    let json = json!({
        "command": "verify",
        "reports": serde_json::to_value(&reports).map_err(|e| Error::Consistency(e.to_string()))?,
        "instances": reports.len(),
        "failed": failed,
    });
    Ok(Outcome {
        json,
        text,
        ok: failed == 0,
    })
}

fn run_oracle<F: Field>(args: &OracleArgs, file: &IdealFile) -> Result<Outcome> {
    let gens = file.polys::<F>()?;
    let cap = args.degree_cap.unwrap_or(file.window.max_j);
    let (spec, w, _) = resolve_order(&args.order, Some(cap), file)?;
    let hf = hilbert_function(&gens, cap)?;
    let init = initial_ideal_generators(&gens, &w, cap)?;
    let betti_i = oracle_betti(&gens, cap)?;
    let betti_in = oracle_betti(&init, cap)?;
    let ring = &file.ring;
    let init_s = print_all(ring, &init);
    let mut text = format!("weight: {:?}\ndegree cap: {cap}\nHilbert function: {hf:?}\n", w.omega());
    listing(&mut text, "initial ideal generators", &init_s);
    let _ = write!(text, "Betti numbers of I:\n{betti_i}Betti numbers of in(I):\n{betti_in}");
    let to_value = |t: &weightgb::betti::BettiTable| serde_json::to_value(t).map_err(|e| Error::Consistency(e.to_string()));
    let json = json!({
        "command": "oracle",
        "instance": instance_name(file, &args.file),
        "field": file.field().to_string(),
        "order": spec,
        "weight": w.omega(),
        "degree_cap": cap,
        "hilbert_function": hf,
        "initial_generators": init_s,
        "betti": to_value(&betti_i)?,
        "initial_betti": to_value(&betti_in)?,
    });
    Ok(Outcome { json, text, ok: true })
}

fn seed(cli: &Cli, file: Option<&IdealFile>) -> Result<u64> {
    if let Some(s) = cli.seed {
        return Ok(s);
    }
    if let Ok(v) = std::env::var(SEED_VAR) {
        return v
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("{SEED_VAR} must be an unsigned integer, got '{v}'")));
    }
    Ok(file.and_then(|f| f.seed).unwrap_or(0))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Gb(a) | Command::Initial(a) => {
            let initial_only = matches!(cli.command, Command::Initial(_));
            let file = IdealFile::read(&a.file)?;
            with_field!(file.field(), K => run_gb::<K>(a, &file, initial_only))
        }
        Command::Betti(a) => {
            let file = IdealFile::read(&a.file)?;
            let s = seed(cli, Some(&file))?;
            with_field!(file.field(), K => run_betti::<K>(a, &file, s))
        }
        Command::Lambda(a) => {
            let file = IdealFile::read(&a.file)?;
            with_field!(file.field(), K => run_lambda::<K>(a, &file))
        }
        Command::Bounds(a) => run_bounds(a),
        Command::Verify(a) => run_verify(a),
        Command::Oracle(a) => {
            let file = IdealFile::read(&a.file)?;
            with_field!(file.field(), K => run_oracle::<K>(a, &file))
        }
    }
}

fn error_object(kind: &str, message: &str) -> String {
    json!({"error": {"kind": kind, "message": message}}).to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{}", error_object("usage", e.to_string().trim_end()));
            return ExitCode::from(2);
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&o.json).expect("JSON output") + "\n"
            } else {
                o.text
            };
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("{}", error_object("io", &e.to_string()));
                    return ExitCode::from(1);
                }
            }
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", error_object(e.kind(), &e.to_string()));
            ExitCode::from(1)
        }
    }
}
