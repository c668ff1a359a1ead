use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use matchseq::catalog::{
    self, explore_q1, explore_q2, explore_q3, pendant_lemma_check, verify_families, Case,
    VerifyConfig,
};
use matchseq::format::{
    edge_token, parse_edge_list, parse_ordering, write_edge_list, write_ordering,
};
use matchseq::{
    matching_number, render_matrix, Error, FamilySpec, Graph, OrderingMode, SolveBudget,
    SolveResult, SolveStatus, Solver,
};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "matchseq",
    version,
    about = "Edge orderings with every d consecutive edges forming a matching"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the optimal ordering of a family member and check its value.
    Construct(ConstructArgs),
    /// Matching number of an ordering file.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        ordering: PathBuf,
        #[arg(long, default_value = "cyclic")]
        mode: OrderingMode,
    },
    /// Exact (cyclic) matching sequencibility by exhaustive search.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "cyclic")]
        mode: OrderingMode,
        /// Decide whether an ordering with matching number >= TARGET exists.
        #[arg(long)]
        target: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Search sequentially; witnesses are then reproducible run to run.
        #[arg(long)]
        single_thread: bool,
    },
    /// Check every construction against its formula (and the solver on small graphs).
    Verify(VerifyArgs),
    /// Exact-value experiments.
    #[command(subcommand)]
    Explore(ExploreCommand),
}

#[derive(Args)]
struct ConstructArgs {
    /// complete | bipartite | cycle | path | circulant3 | doubled-complete
    #[arg(long)]
    family: String,
    #[arg(long, num_args = 1.., required = true)]
    params: Vec<usize>,
    /// Defaults to cyclic, or linear for complete bipartite graphs.
    #[arg(long)]
    mode: Option<OrderingMode>,
    /// Print the labeled biadjacency matrix (bipartite families).
    #[arg(long)]
    matrix: bool,
    /// Write the ordering here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the graph as an edge list.
    #[arg(long)]
    graph_out: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    #[arg(long, default_value_t = 60.0)]
    budget_seconds: f64,
    #[arg(long, default_value_t = 200_000_000)]
    budget_nodes: u64,
}

impl BudgetArgs {
    fn budget(&self) -> anyhow::Result<SolveBudget> {
        SolveBudget::new(self.budget_nodes, self.budget_seconds).map_err(|_| {
            anyhow!(
                "budget must be positive (got {} nodes, {} s)",
                self.budget_nodes,
                self.budget_seconds
            )
        })
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Complete graphs up to K_{2M+1}.
    #[arg(long, default_value_t = 8)]
    max_complete: usize,
    #[arg(long, default_value_t = 8)]
    max_bipartite: usize,
    #[arg(long, default_value_t = 16)]
    max_cycle: usize,
    #[arg(long, default_value_t = 16)]
    max_path: usize,
    #[arg(long, default_value_t = 10)]
    max_circulant: usize,
    /// Doubled complete graphs 2K_{2m+1} up to this m.
    #[arg(long, default_value_t = 3)]
    max_doubled: usize,
    #[arg(long, default_value_t = 12)]
    exact_up_to_edges: usize,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum ExploreCommand {
    /// ms(kG) and cms(kG) against the matching number of G.
    Q1 {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Largest ms - cms over all graphs on at most MAX_N vertices.
    Q2 {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        connected_only: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// cms(2G) against ms(G).
    Q3 {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Pendant edges at a maximum-degree vertex of a tree force value 1.
    Pendant {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
}

/// Failures that map to a specific exit code; anything else is an input error.
#[derive(Debug)]
struct Exit(u8);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "exit {}", self.0)
    }
}

impl std::error::Error for Exit {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_INPUT);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => match e.downcast_ref::<Exit>() {
            Some(Exit(code)) => ExitCode::from(*code),
            None => {
                eprintln!("error: {e:#}");
                ExitCode::from(EXIT_INPUT)
            }
        },
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("MATCHSEQ_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .with_context(|| format!("MATCHSEQ_THREADS={raw:?} is not a number"))?;
    if n == 0 {
        bail!("MATCHSEQ_THREADS must be at least 1");
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()?;
    Ok(())
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Construct(args) => construct(args),
        Command::Check {
            graph,
            ordering,
            mode,
        } => check(&graph, &ordering, mode),
        Command::Solve {
            graph,
            mode,
            target,
            budget,
            single_thread,
        } => solve(&graph, mode, target, budget.budget()?, !single_thread),
        Command::Verify(args) => verify(args),
        Command::Explore(cmd) => explore(cmd),
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| path.display().to_string())
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn parse_case(family: &str, params: &[usize]) -> anyhow::Result<Case> {
    let one = || match params {
        [n] => Ok(*n),
        _ => Err(anyhow!(
            "family {family} takes one parameter, got {}",
            params.len()
        )),
    };
    let case = match family {
        "complete" => FamilySpec::Complete { n: one()? }.into(),
        "bipartite" | "complete-bipartite" | "complete_bipartite" => match params {
            [p, q] => FamilySpec::CompleteBipartite { p: *p, q: *q }.into(),
            _ => bail!(
                "family {family} takes two parameters p q, got {}",
                params.len()
            ),
        },
        "cycle" => FamilySpec::Cycle { n: one()? }.into(),
        "path" => FamilySpec::Path { n: one()? }.into(),
        "circulant3" => FamilySpec::Circulant3 { n: one()? }.into(),
        "doubled-complete" | "doubled_complete" => Case::DoubledComplete { n: one()? },
        _ => bail!("unknown family {family:?}"),
    };
    Ok(case)
}

fn construct(args: ConstructArgs) -> anyhow::Result<()> {
    let case = parse_case(&args.family, &args.params)?;
    let mode = args.mode.unwrap_or(match case {
        Case::Family(FamilySpec::CompleteBipartite { .. }) => OrderingMode::Linear,
        _ => OrderingMode::Cyclic,
    });
    let ordering = case.construct(mode)?;
    let value = matching_number(&ordering).value;
    let predicted = match catalog::predicted(case, mode) {
        Ok(p) => Some(p.value),
        Err(Error::NoKnownFormula(_)) => None,
        Err(e) => return Err(e.into()),
    };

    if args.matrix {
        let layout = match case {
            Case::Family(spec) => spec.biadjacency(),
            Case::DoubledComplete { .. } => None,
        }
        .ok_or_else(|| anyhow!("{case} has no biadjacency matrix view"))?;
        print!("{}", render_matrix(&ordering, &layout)?);
    }
    let text = write_ordering(&ordering);
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None if !args.matrix => print!("{text}"),
        None => {}
    }
    if let Some(path) = &args.graph_out {
        write_file(path, &write_edge_list(ordering.graph()))?;
    }
    let shown = predicted.map_or("none".to_string(), |p| p.to_string());
    println!("value={value} predicted={shown}");
    if predicted.is_some_and(|p| p != value) {
        eprintln!("self-check failed: {case} {mode} constructed {value}, expected {shown}");
        return Err(Exit(EXIT_FAIL).into());
    }
    Ok(())
}

fn check(graph: &Path, ordering: &Path, mode: OrderingMode) -> anyhow::Result<()> {
    let g = Arc::new(read_graph(graph)?);
    let text =
        fs::read_to_string(ordering).with_context(|| format!("reading {}", ordering.display()))?;
    let o =
        parse_ordering(&text, g.clone(), mode).with_context(|| ordering.display().to_string())?;
    let report = matching_number(&o);
    println!("d={}", report.value);
    match report.violating_pair {
        Some(p) => {
            let tok = |id| edge_token(&g, id);
            println!(
                "violating pair: {} (label {}) and {} (label {}), gap {}",
                tok(p.first),
                p.first_position,
                tok(p.second),
                p.second_position,
                p.gap
            );
        }
        None => println!("violating pair: none (the edges form a matching)"),
    }
    Ok(())
}

fn solve_json(
    g: &Graph,
    mode: OrderingMode,
    target: Option<usize>,
    res: &SolveResult,
) -> serde_json::Value {
    json!({
        "mode": mode,
        "order": g.order(),
        "edges": g.edge_count(),
        "target": target,
        "status": res.status,
        "value": res.value,
        "lower_bound": res.lower_bound,
        "upper_bound": res.upper_bound,
        "witness": res.witness.as_ref().map(|w| write_ordering(w).trim_end().to_string()),
        "nodes": res.nodes_explored,
        "depth_histogram": res.depth_histogram,
    })
}

fn solve(
    path: &Path,
    mode: OrderingMode,
    target: Option<usize>,
    budget: SolveBudget,
    parallel: bool,
) -> anyhow::Result<()> {
    let g = read_graph(path)?;
    let solver = Solver::new(budget).parallel(parallel);
    let res = match target {
        Some(d) => solver.exists_ordering(&g, d, mode)?,
        None => solver.solve(&g, mode)?,
    };
    if let Some(w) = &res.witness {
        let got = matching_number(w).value;
        let need = res.value.unwrap_or(0);
        if got < need {
            bail!("internal error: witness scores {got} < {need}");
        }
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&solve_json(&g, mode, target, &res))?
    );
    if res.status == SolveStatus::BudgetExceeded {
        return Err(Exit(EXIT_BUDGET).into());
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> anyhow::Result<()> {
    let cfg = VerifyConfig {
        max_complete_m: args.max_complete,
        max_bipartite: args.max_bipartite,
        max_cycle: args.max_cycle,
        max_path: args.max_path,
        max_circulant: args.max_circulant,
        max_doubled_m: args.max_doubled,
        exact_up_to_edges: args.exact_up_to_edges,
        budget: args.budget.budget()?,
    };
    let report = verify_families(&cfg);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", report.to_text());
    }
    if !report.passed() {
        return Err(Exit(EXIT_FAIL).into());
    }
    Ok(())
}

fn opt(v: Option<usize>) -> String {
    v.map_or("?".to_string(), |x| x.to_string())
}

fn explore(cmd: ExploreCommand) -> anyhow::Result<()> {
    match cmd {
        ExploreCommand::Q1 {
            graph,
            k_max,
            budget,
            json,
        } => {
            let g = read_graph(&graph)?;
            let rows = explore_q1(&g, k_max, &budget.budget()?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
                return Ok(());
            }
            println!(
                "matching number p = {}",
                rows.first().map_or(0, |r| r.matching_number)
            );
            println!("{:>3} {:>6} {:>6}  reaches p (ms/cms)", "k", "ms", "cms");
            for r in &rows {
                let flag = |b: Option<bool>| b.map_or("?", |b| if b { "yes" } else { "no" });
                println!(
                    "{:>3} {:>6} {:>6}  {}/{}{}",
                    r.k,
                    opt(r.ms),
                    opt(r.cms),
                    flag(r.ms_reaches),
                    flag(r.cms_reaches),
                    if r.unresolved { "  unresolved" } else { "" }
                );
            }
        }
        ExploreCommand::Q2 {
            max_n,
            connected_only,
            budget,
            json,
        } => {
            let report = explore_q2(max_n, connected_only, &budget.budget()?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
                return Ok(());
            }
            println!(
                "graphs on {} vertices{}: {} classes, {} unresolved",
                report.max_n,
                if report.connected_only {
                    " (connected)"
                } else {
                    ""
                },
                report.graphs_examined,
                report.unresolved
            );
            println!("{:>4} {:>7}", "gap", "graphs");
            for (gap, count) in report.gap_histogram.iter().enumerate() {
                println!("{gap:>4} {count:>7}");
            }
            println!(
                "max gap {} attained by {} graphs:",
                report.max_gap,
                report.witnesses.len()
            );
            for w in &report.witnesses {
                let edges: Vec<String> = w.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                println!("  ms={} cms={}  {}", w.ms, w.cms, edges.join(" "));
            }
        }
        ExploreCommand::Q3 {
            graph,
            budget,
            json,
        } => {
            let g = read_graph(&graph)?;
            let r = explore_q3(&g, &budget.budget()?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
                return Ok(());
            }
            let equal = r
                .equal
                .map_or("unresolved", |e| if e { "yes" } else { "no" });
            println!(
                "cms(2G)={} ms(G)={} equal={equal}",
                opt(r.cms_doubled),
                opt(r.ms)
            );
        }
        ExploreCommand::Pendant {
            graph,
            budget,
            json,
        } => {
            let g = read_graph(&graph)?;
            let r = pendant_lemma_check(&g, &budget.budget()?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
                return Ok(());
            }
            println!(
                "tree order {} vertex {}: ms with n+1 pendants = {}, cms with n+2 pendants = {}, {}",
                r.tree_order,
                r.vertex,
                opt(r.ms_with_n_plus_1),
                opt(r.cms_with_n_plus_2),
                if r.pass { "holds" } else { "does not hold" }
            );
        }
    }
    Ok(())
}
