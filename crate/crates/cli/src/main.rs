//! `ublab`: invariants of user graphs, tree enumeration, family closed
//! forms and the exhaustive verification suites.
//!
//! Exit codes: 0 on success, 1 when a check fails or the input is valid
//! but outside the domain (e.g. disconnected), 2 on usage or parse errors.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ublab::edgelist::{parse_edge_list, parse_level_sequence};
use ublab::families::{
    make_double_star, make_path, make_spider, make_star, ub2_double_star_closed_form,
    ub2_double_star_excess_form, ub2_path_closed_form, ub2_spider_closed_form, ub_star_closed_form,
    SpiderSpec,
};
use ublab::invariants::{DistanceProfile, InvariantRecord};
use ublab::relaxation::sweep_claims;
use ublab::report::{counterexamples, reports_to_csv, reports_to_json, sweep_to_json};
use ublab::tree::enumerate_free_trees;
use ublab::verify::{verify_range, ExtremalReport};
use ublab::{Error, Graph};

const DEFAULT_MAX_ORDER: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "ublab", version, about = "Distance-unbalancedness of graphs and trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Mo, uB and uB2 of one connected graph.
    Invariants(InvariantsArgs),
    /// Canonical level sequences of all trees of one order.
    Enumerate(EnumerateArgs),
    /// Exhaustive verification suites.
    Verify(VerifyArgs),
    /// Closed form against direct computation for a named family.
    Family(FamilyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Edgelist,
    Levelseq,
}

#[derive(Args, Debug)]
struct InvariantsArgs {
    /// Input file; `-` or absent reads standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: InputFormat,
    #[arg(long)]
    json: bool,
    /// Also print the full closer-count matrix.
    #[arg(long)]
    closer_counts: bool,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    order: usize,
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, env = "UBLAB_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    max_allowed_order: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorem1,
    Lemma1,
    Case2,
    Relaxations,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 2)]
    min_order: usize,
    #[arg(long, default_value_t = 14)]
    max_order: usize,
    /// Largest n for the relaxation sweep.
    #[arg(long, default_value_t = 20)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Emit JSON instead of CSV.
    #[arg(long)]
    json: bool,
    /// Write the CSV table to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Fill in `elapsed_ms`. Output is then no longer reproducible.
    #[arg(long)]
    timings: bool,
    #[arg(long, env = "UBLAB_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    max_allowed_order: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Star,
    Path,
    Spider,
    DoubleStar,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    order: Option<usize>,
    /// Spider leg lengths, comma-separated and non-increasing.
    #[arg(long, value_delimiter = ',')]
    legs: Option<Vec<usize>>,
    #[arg(long)]
    json: bool,
}

/// What went wrong, mapped onto the exit-code contract.
enum Failure {
    Usage(String),
    Domain(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn classify(e: Error) -> Failure {
    match e {
        Error::DisconnectedGraph { .. } | Error::NotATree | Error::NoSplit | Error::Infeasible(_) => {
            Failure::Domain(e.to_string())
        }
        _ => Failure::Usage(e.to_string()),
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Invariants(a) => cmd_invariants(&a, &mut out),
        Command::Enumerate(a) => cmd_enumerate(&a, &mut out),
        Command::Verify(a) => cmd_verify(&a, &mut out),
        Command::Family(a) => cmd_family(&a, &mut out),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Err(Failure::Domain(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        (Err(Failure::Io(e)), _) | (Ok(_), Err(e)) => {
            if e.kind() == io::ErrorKind::BrokenPipe {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn cmd_invariants(a: &InvariantsArgs, out: &mut impl Write) -> Outcome {
    let text = read_input(a.input.as_ref())?;
    let graph: Graph = match a.format {
        InputFormat::Edgelist => parse_edge_list(&text).map_err(classify)?,
        InputFormat::Levelseq => parse_level_sequence(&text).map_err(classify)?.to_graph(),
    };
    let profile = DistanceProfile::new(&graph).map_err(classify)?;
    let record = InvariantRecord::from_profile(&graph, &profile);
    let n = graph.order();
    let matrix: Vec<&[u32]> = (0..n).map(|u| profile.counts.row(u)).collect();
    if a.json {
        let mut value = serde_json::to_value(&record).expect("record serializes");
        if a.closer_counts {
            value["closer_counts"] = json!(matrix);
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json"))?;
    } else {
        write!(
            out,
            "n={} mo={} ub={} ub2={} distance_balanced={} highly_distance_balanced={}",
            record.n, record.mo, record.ub, record.ub2, record.distance_balanced, record.highly_distance_balanced
        )?;
        if let Some(c) = &record.canonical {
            write!(out, " canonical={c}")?;
        }
        writeln!(out)?;
        if a.closer_counts {
            for row in matrix {
                let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
        }
    }
    Ok(true)
}

fn check_order_cap(order: usize, cap: usize) -> Result<(), Failure> {
    if order > cap {
        return Err(Failure::Usage(format!(
            "order {order} exceeds the cap of {cap} (raise UBLAB_MAX_ORDER to allow it)"
        )));
    }
    Ok(())
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut impl Write) -> Outcome {
    if a.order == 0 {
        return Err(Failure::Usage("--order must be at least 1".into()));
    }
    check_order_cap(a.order, a.max_allowed_order)?;
    let limit = a.limit.unwrap_or(usize::MAX);
    for seq in enumerate_free_trees(a.order).take(limit) {
        writeln!(out, "{seq}")?;
    }
    Ok(true)
}

fn emit_orders(a: &VerifyArgs, reports: &[ExtremalReport], out: &mut impl Write) -> io::Result<()> {
    if a.json {
        return writeln!(out, "{}", reports_to_json(reports, a.timings));
    }
    let csv = reports_to_csv(reports, a.timings);
    match &a.csv {
        Some(path) => fs::write(path, csv),
        None => out.write_all(csv.as_bytes()),
    }
}

fn report_failures(reports: &[ExtremalReport]) {
    let failures: Vec<_> = counterexamples(reports)
        .into_iter()
        .map(|(n, c)| json!({ "n": n, "check": c.check, "tree": c.tree, "detail": c.detail }))
        .collect();
    let bad_orders: Vec<_> = reports
        .iter()
        .filter(|r| !r.all_ok())
        .map(|r| json!({ "n": r.n, "min_ub": r.min_ub, "ub_minimizers": r.ub_minimizers, "min_ub2": r.min_ub2 }))
        .collect();
    if !bad_orders.is_empty() {
        eprintln!(
            "{}",
            serde_json::to_string_pretty(&json!({ "failed_orders": bad_orders, "counterexamples": failures }))
                .expect("json")
        );
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut impl Write) -> Outcome {
    if a.jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    if a.suite == Suite::Relaxations {
        let sweep = sweep_claims(a.max_n);
        writeln!(out, "{}", sweep_to_json(&sweep))?;
        for v in sweep.violations() {
            eprintln!("claim violated: {}", serde_json::to_string(v).expect("json"));
        }
        return Ok(sweep.all_hold());
    }

    if a.min_order == 0 || a.min_order > a.max_order {
        return Err(Failure::Usage(format!(
            "invalid order range {}..={}",
            a.min_order, a.max_order
        )));
    }
    check_order_cap(a.max_order, a.max_allowed_order)?;
    let reports = verify_range(a.min_order, a.max_order, a.jobs);

    let ok = reports.iter().all(|r| match a.suite {
        Suite::Theorem1 => r.star_bound_ok(),
        Suite::Lemma1 => r.lemma1_holds,
        Suite::Case2 => r.case2_ok,
        Suite::All => r.all_ok(),
        Suite::Relaxations => unreachable!(),
    });
    if !ok {
        report_failures(&reports);
    }

    if a.suite != Suite::All {
        emit_orders(a, &reports, out)?;
        return Ok(ok);
    }

    let sweep = sweep_claims(a.max_n);
    if a.json {
        let orders: serde_json::Value = serde_json::from_str(&reports_to_json(&reports, a.timings)).expect("json");
        let combined = json!({ "orders": orders, "relaxations": sweep.claims });
        writeln!(out, "{}", serde_json::to_string_pretty(&combined).expect("json"))?;
    } else {
        emit_orders(a, &reports, out)?;
        eprintln!(
            "relaxations: {} instances up to n = {}, {} violations",
            sweep.claims.len(),
            sweep.n_max,
            sweep.violations().count()
        );
    }
    Ok(ok && sweep.all_hold())
}

fn cmd_family(a: &FamilyArgs, out: &mut impl Write) -> Outcome {
    let need_order = || a.order.ok_or_else(|| Failure::Usage("--order is required for this family".into()));
    // (label, n, closed form, direct value, whether agreement is claimed)
    let (label, n, closed, direct, claimed) = match a.family {
        Family::Star => {
            let n = need_order()?;
            let g = make_star(n).map_err(classify)?;
            ("ub", n, ub_star_closed_form(n), direct_ub(&g)?, true)
        }
        Family::Path => {
            let n = need_order()?;
            let g = make_path(n).map_err(classify)?;
            ("ub2", n, ub2_path_closed_form(n), direct_ub2(&g)?, true)
        }
        Family::DoubleStar => {
            let n = need_order()?;
            let g = make_double_star(n).map_err(classify)?;
            let closed = ub2_double_star_closed_form(n).map_err(classify)?;
            if ub2_double_star_excess_form(n).map_err(classify)? != closed {
                return Ok(false);
            }
            ("ub2", n, closed, direct_ub2(&g)?, true)
        }
        Family::Spider => {
            let legs = a.legs.clone().ok_or_else(|| Failure::Usage("--legs is required for spiders".into()))?;
            let spec = SpiderSpec::new(legs).map_err(classify)?;
            let closed = ub2_spider_closed_form(&spec).map_err(classify)?;
            let g = make_spider(&spec);
            ("ub2", spec.order(), closed, direct_ub2(&g)?, spec.leg_count() >= 3)
        }
    };
    let matches = closed == direct;
    if a.json {
        let value = json!({
            "family": format!("{:?}", a.family).to_lowercase().replace("doublestar", "double-star"),
            "invariant": label,
            "n": n,
            "closed": closed,
            "direct": direct,
            "match": matches,
            "claimed": claimed,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json"))?;
    } else {
        let verdict = if matches { "match" } else { "MISMATCH" };
        let note = if claimed { "" } else { " (two legs: reported only)" };
        writeln!(out, "{label} n={n} closed={closed} direct={direct} {verdict}{note}")?;
    }
    Ok(matches || !claimed)
}

fn direct_ub(g: &Graph) -> Result<u64, Failure> {
    Ok(DistanceProfile::new(g).map_err(classify)?.unbalancedness())
}

fn direct_ub2(g: &Graph) -> Result<u64, Failure> {
    Ok(DistanceProfile::new(g).map_err(classify)?.square_unbalancedness())
}
