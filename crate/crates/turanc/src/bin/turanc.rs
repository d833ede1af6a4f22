//! Command-line front end. Every subcommand is a thin wrapper over the
//! library and emits either a short human summary or, with `--json`, a
//! deterministic machine-readable report (timing lives outside the
//! comparable `outputs` object).

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::time::Instant;
use turanc::bounds::{evaluate_all_bounds, BoundKind};
use turanc::construct;
use turanc::enumerate::{self, ExcOptions};
use turanc::tables;
use turanc::{
    find_embedding, from_graph6, is_saturated, parse_tree, to_graph6, tree_params, Graph, Tree,
};

const SCHEMA: &str = "turanc.report/1";

#[derive(Parser)]
#[command(
    name = "turanc",
    version,
    about = "Connected Turán numbers of trees: constructions, bounds, embedding checks, and an exhaustive oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to a file as well as stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for enumeration-backed commands (0 = library default).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    /// Allow n = 10 oracle runs (minutes to hours).
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the ten structural parameters of a tree.
    Params { tree: String },
    /// Build a named construction and print it as graph6 + JSON record.
    Construct(ConstructArgs),
    /// Decide whether a host graph contains a tree; prints a witness map.
    Check {
        /// Host: `g6:<string>`, `@<file>` (graph6 line), or `<name>:<n>`
        /// using a construction name such as `cycle:9`.
        #[arg(long)]
        host: String,
        tree: String,
        /// Also check whether the host is saturated with respect to the tree.
        #[arg(long)]
        saturated: bool,
    },
    /// Exhaustive oracle: exact ex_c(n, T) with all extremal graphs.
    Exc {
        tree: String,
        n: usize,
        /// Write extremal graphs as graph6 lines to this file.
        #[arg(long)]
        extremal_out: Option<PathBuf>,
    },
    /// Evaluate every applicable bound at (T, n), with oracle comparison
    /// when n is within oracle range.
    Bounds { tree: String, n: usize },
    /// Monotonicity scan: ex_c(n, T) for n from |T| - 1 to n-max.
    Scan {
        tree: String,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
    },
    /// Check every bundled table row against the oracle up to n-max.
    VerifyTables {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

#[derive(Args)]
struct ConstructArgs {
    /// Generator: kopylov | longest_path | induced_path | induced_path_spider
    /// | nearly_regular | clique_join_empty | delta2_blocks |
    /// complete_bipartite | branch | cycle_of_cliques | path_of_cliques,
    /// or a table name (cycle, star, k1_plus_k2_empty, k2_join_empty,
    /// k1_plus_matching, k2_bipartite, split_plus_edge,
    /// two_universal_plus_edge).
    name: String,
    #[arg(long)]
    n: usize,
    /// Tree expression, for tree-driven generators.
    #[arg(long)]
    tree: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    block: Option<usize>,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    });
}

fn opts(cli: &Cli) -> ExcOptions {
    ExcOptions {
        workers: cli.workers,
    }
}

fn check_large(cli: &Cli, n: usize) -> turanc::Result<()> {
    if n >= 10 && !cli.allow_large {
        return Err(turanc::Error::Invalid(
            "n = 10 takes minutes to hours; pass --allow-large to run it".into(),
        ));
    }
    Ok(())
}

fn run(cli: Cli) -> turanc::Result<bool> {
    let started = Instant::now();
    let (command, inputs, outputs, passed) = match &cli.command {
        Cmd::Params { tree } => {
            let t = parse_tree(tree)?;
            let p = tree_params(&t)?;
            let outputs = json!({
                "tree": t.family_name(),
                "vertices": t.vertex_count(),
                "params": p,
                "is_path": t.is_path(),
                "is_star": t.is_star(),
            });
            if !cli.json {
                println!("tree        {}", t.family_name());
                println!("vertices    {}", t.vertex_count());
                println!("ell         {}", p.ell);
                println!("p           {}", p.p);
                println!("max_deg     {}", p.max_deg);
                println!("min_deg     {}", p.min_deg);
                println!("nu          {}", p.nu);
                match p.delta2 {
                    Some(d) => println!("delta2      {d}"),
                    None => println!("delta2      (absent)"),
                }
                println!("m           {}", p.m);
                println!("m2          {}", p.m2);
                println!("bipartition ({}, {})", p.bipartition.0, p.bipartition.1);
                println!("w           {}", p.w);
            }
            ("params", json!({ "tree": tree }), outputs, true)
        }

        Cmd::Construct(args) => {
            let result = build_construction(args)?;
            let g6 = to_graph6(&result.graph)?;
            let outputs = json!({
                "name": result.name,
                "n": result.graph.vertex_count(),
                "params": result.params,
                "claimed_edges": result.claimed_edges,
                "actual_edges": result.graph.edge_count(),
                "graph6": g6,
            });
            if !cli.json {
                println!("{g6}");
                println!(
                    "{}: n={} claimed_edges={} actual_edges={}",
                    result.name,
                    result.graph.vertex_count(),
                    result.claimed_edges,
                    result.graph.edge_count()
                );
            }
            (
                "construct",
                json!({ "name": args.name, "n": args.n }),
                outputs,
                true,
            )
        }

        Cmd::Check {
            host,
            tree,
            saturated,
        } => {
            let g = parse_host(host)?;
            let t = parse_tree(tree)?;
            let witness = find_embedding(&g, &t);
            let sat = if *saturated {
                Some(is_saturated(&g, &t)?)
            } else {
                None
            };
            let outputs = json!({
                "host_vertices": g.vertex_count(),
                "host_edges": g.edge_count(),
                "tree": t.family_name(),
                "contains": witness.is_some(),
                "witness": witness.as_ref().map(|e| e.map.clone()),
                "saturated": sat,
            });
            if !cli.json {
                match &witness {
                    Some(e) => println!("contains: true  witness: {:?}", e.map),
                    None => println!("contains: false"),
                }
                if let Some(s) = sat {
                    println!("saturated: {s}");
                }
            }
            (
                "check",
                json!({ "host": host, "tree": tree }),
                outputs,
                true,
            )
        }

        Cmd::Exc {
            tree,
            n,
            extremal_out,
        } => {
            check_large(&cli, *n)?;
            let t = parse_tree(tree)?;
            let cache_dir = std::env::var_os("TURANC_CACHE_DIR").map(PathBuf::from);
            let record = enumerate::exc_cached(&t, *n, opts(&cli), cache_dir.as_deref())?;
            if let Some(path) = extremal_out {
                std::fs::write(path, record.extremal.join("\n") + "\n")?;
            }
            let outputs = serde_json::to_value(&record)?;
            if !cli.json {
                println!(
                    "ex_c({}, {}) = {}  ({} extremal graphs, {} graphs examined)",
                    record.n,
                    record.tree,
                    record.max_edges,
                    record.extremal.len(),
                    record.graphs_examined
                );
                for g6 in &record.extremal {
                    println!("  {g6}");
                }
            }
            ("exc", json!({ "tree": tree, "n": n }), outputs, true)
        }

        Cmd::Bounds { tree, n } => {
            let t = parse_tree(tree)?;
            let evaluations = evaluate_all_bounds(&t, *n)?;
            let oracle = if *n <= 9 || (*n == 10 && cli.allow_large) {
                Some(enumerate::exc_bruteforce(&t, *n, opts(&cli))?.max_edges)
            } else {
                None
            };
            let rows: Vec<Value> = evaluations
                .iter()
                .map(|b| {
                    let gap = match (oracle, b.value, b.kind) {
                        (Some(o), Some(v), BoundKind::Lower) => Some(o as i64 - v as i64),
                        (Some(o), Some(v), _) => Some(v as i64 - o as i64),
                        _ => None,
                    };
                    json!({
                        "name": b.name,
                        "kind": b.kind,
                        "value": b.value,
                        "reason": b.reason,
                        "witness_graph6": b.witness.as_ref().map(|w| to_graph6(&w.graph).unwrap()),
                        "oracle": oracle,
                        "gap": gap,
                    })
                })
                .collect();
            if !cli.json {
                for b in &evaluations {
                    match b.value {
                        Some(v) => println!("{:<18} {:<6} {v}", b.name, format!("{:?}", b.kind)),
                        None => println!(
                            "{:<18} {:<6} n/a ({})",
                            b.name,
                            format!("{:?}", b.kind),
                            b.reason.as_deref().unwrap_or("")
                        ),
                    }
                }
                if let Some(o) = oracle {
                    println!("{:<18} {:<6} {o}", "oracle", "Exact");
                }
            }
            (
                "bounds",
                json!({ "tree": tree, "n": n }),
                json!({ "bounds": rows, "oracle": oracle }),
                true,
            )
        }

        Cmd::Scan { tree, n_max } => {
            check_large(&cli, *n_max)?;
            let t = parse_tree(tree)?;
            let points = enumerate::monotonicity_scan(&t, *n_max, opts(&cli))?;
            if !cli.json {
                for p in &points {
                    println!(
                        "n={:<3} ex_c={:<4}{}",
                        p.n,
                        p.max_edges,
                        if p.violates {
                            "  MONOTONICITY VIOLATION"
                        } else {
                            ""
                        }
                    );
                }
            }
            (
                "scan",
                json!({ "tree": tree, "n_max": n_max }),
                serde_json::to_value(&points)?,
                true,
            )
        }

        Cmd::VerifyTables { n_max } => {
            check_large(&cli, *n_max)?;
            let checks = tables::verify_tables(*n_max, opts(&cli))?;
            let all_passed = checks.iter().all(|c| c.pass);
            if !cli.json {
                for c in &checks {
                    let tightness = match c.tight {
                        Some(true) => " (tight)",
                        Some(false) => " (strict)",
                        None => "",
                    };
                    println!(
                        "{} table{} {:<14} n={} {:?} expected={} oracle={}{}",
                        if c.pass { "PASS" } else { "FAIL" },
                        c.table,
                        c.tree,
                        c.n,
                        c.kind,
                        c.expected.map_or("-".into(), |v| v.to_string()),
                        c.oracle,
                        tightness
                    );
                }
                println!(
                    "{} checks, {} failures",
                    checks.len(),
                    checks.iter().filter(|c| !c.pass).count()
                );
            }
            (
                "verify-tables",
                json!({ "n_max": n_max }),
                serde_json::to_value(&checks)?,
                all_passed,
            )
        }
    };

    let report = json!({
        "schema": SCHEMA,
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "passed": passed,
        "elapsed_ms": started.elapsed().as_millis() as u64,
        "version": env!("CARGO_PKG_VERSION"),
    });
    let rendered = serde_json::to_string_pretty(&report)?;
    if cli.json {
        println!("{rendered}");
    }
    if let Some(path) = &cli.out {
        std::fs::write(path, rendered + "\n")?;
    }
    Ok(passed)
}

fn parse_host(input: &str) -> turanc::Result<Graph> {
    if let Some(g6) = input.strip_prefix("g6:") {
        return from_graph6(g6);
    }
    if let Some(path) = input.strip_prefix('@') {
        let text = std::fs::read_to_string(path)?;
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| turanc::Error::Invalid(format!("{path}: no graph6 line")))?;
        return from_graph6(line.trim());
    }
    if let Some((name, n)) = input.rsplit_once(':') {
        let n: usize = n
            .parse()
            .map_err(|_| turanc::Error::Invalid(format!("bad host size in `{input}`")))?;
        return Ok(construct::named_small(name, n)?.graph);
    }
    Err(turanc::Error::Invalid(format!(
        "host must be `g6:<string>`, `@<file>`, or `<name>:<n>` (got `{input}`)"
    )))
}

fn build_construction(args: &ConstructArgs) -> turanc::Result<turanc::ConstructionResult> {
    let n = args.n;
    let need_tree = || -> turanc::Result<Tree> {
        let expr = args
            .tree
            .as_ref()
            .ok_or_else(|| turanc::Error::Invalid("this generator needs --tree".into()))?;
        parse_tree(expr)
    };
    let need = |value: Option<usize>, flag: &str| -> turanc::Result<usize> {
        value.ok_or_else(|| turanc::Error::Invalid(format!("this generator needs --{flag}")))
    };
    match args.name.as_str() {
        "kopylov" => construct::kopylov(n, need(args.k, "k")?, need(args.s, "s")?),
        "longest_path" => construct::prop2_longest_path(&need_tree()?, n),
        "induced_path" => construct::prop2_induced_path(&need_tree()?, n),
        "induced_path_spider" => construct::prop2_induced_path_spider(&need_tree()?, n),
        "nearly_regular" => construct::nearly_regular(n, need(args.d, "d")?),
        "clique_join_empty" => construct::clique_join_empty(need(args.a, "a")?, n),
        "delta2_blocks" => construct::prop2_delta2(&need_tree()?, n),
        "complete_bipartite" => {
            construct::complete_bipartite(need(args.a, "a")?, need(args.b, "b")?)
        }
        "branch" => construct::branch_construction(&need_tree()?, n),
        "cycle_of_cliques" => construct::cycle_of_cliques(n, need(args.block, "block")?),
        "path_of_cliques" => construct::path_of_cliques(n, need(args.block, "block")?),
        name => construct::named_small(name, n),
    }
}
