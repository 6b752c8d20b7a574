use std::fmt::Write as _;
use std::path::Path;

use serde_json::json;
use wpn_core::census::{self, CensusConfig, CensusError, CensusMode, CensusOutcome, Manifest, RunOptions};
use wpn_core::counting::{self, partition_stats, CountingError, PartitionSampler};
use wpn_core::graph6::{emit_graph6, parse_graph};
use wpn_core::witnessing::{
    classify_sequence, clique_stable_partition_exists, enumerate_really_canonical_sequences, theorem_certifier,
    verify_cycle_partition_claims, wpn, Classification, Theorem, WitnessError,
};
use wpn_core::Graph;

use crate::output::{write_out, Report};
use crate::{CensusArgs, Cli, Command, CountFn, SampleArgs};

#[derive(Debug)]
pub enum CliError {
    /// Bad input or a violated precondition: exit status 2.
    Precondition(String),
    /// Search budget exhausted: exit status 3.
    Budget(String),
    /// Census stopped before its last shard: exit status 4.
    Interrupted(String),
    /// A verification that ran to completion and failed: exit status 1.
    Failed(String),
    Io(String),
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::Precondition(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Interrupted(_) => 4,
            CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Precondition(m) | CliError::Budget(m) | CliError::Interrupted(m) | CliError::Failed(m) => {
                f.write_str(m)
            }
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<WitnessError> for CliError {
    fn from(e: WitnessError) -> Self {
        match e {
            WitnessError::BudgetExhausted { .. } => CliError::Budget(e.to_string()),
            e => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<CountingError> for CliError {
    fn from(e: CountingError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::Witness(w) => w.into(),
            CensusError::Manifest(m) => CliError::Io(m),
            e => CliError::Precondition(e.to_string()),
        }
    }
}

/// Reads a graph given as a graph6 string or as a file holding graph6 or
/// adjacency text.
fn read_graph(arg: &str) -> Result<Graph, CliError> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{arg}: {e}")))?
    } else {
        arg.to_string()
    };
    parse_graph(&text).map_err(|e| CliError::Precondition(format!("cannot read graph `{arg}`: {e}")))
}

fn parse_theorem(s: &str) -> Result<Theorem, CliError> {
    Ok(s.parse::<Theorem>()?)
}

fn parse_mode(s: &str) -> Result<CensusMode, CliError> {
    s.parse().map_err(CliError::Precondition)
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let report = match &cli.command {
        Command::Wpn { graph } => cmd_wpn(graph)?,
        Command::Certify { theorem, graph } => cmd_certify(theorem, graph)?,
        Command::Sequences { graph, k, budget } => cmd_sequences(graph, *k, *budget)?,
        Command::VerifyClaims { cycle } => return cmd_verify_claims(cli, *cycle),
        Command::Count { function, n } => cmd_count(*function, *n)?,
        Command::Bound { n, l } => cmd_bound(*n, *l)?,
        Command::SamplePartitions(args) => cmd_sample(args)?,
        Command::Census(args) => cmd_census(args)?,
        Command::Girth5 { n, mode } => cmd_girth5(*n, mode)?,
    };
    write_out(cli.output.as_deref(), &report.render(cli.format)?)
}

fn cmd_wpn(arg: &str) -> Result<Report, CliError> {
    let h = read_graph(arg)?;
    let k = wpn(&h);
    let split = (0..=k)
        .find(|&c| k > 0 && !clique_stable_partition_exists(&h, c, k - c))
        .map(|c| json!({ "cliques": c, "stables": k - c }));
    Ok(Report {
        command: "wpn",
        config: json!({ "graph": emit_graph6(&h) }),
        result: json!({ "graph": emit_graph6(&h), "n": h.n(), "wpn": k, "witness_split": split }),
        text: format!("{k}\n"),
        csv: None,
    })
}

fn cmd_certify(theorem: &str, arg: &str) -> Result<Report, CliError> {
    let t = parse_theorem(theorem)?;
    let g = read_graph(arg)?;
    let seq = t.sequence()?;
    let cert = theorem_certifier(&g, t)?;
    let text = match &cert {
        None => "NONE\n".to_string(),
        Some(c) => {
            let mut s = String::new();
            for (i, part) in c.to_json().parts.iter().enumerate() {
                let verts: Vec<String> = part.vertices.iter().map(usize::to_string).collect();
                let _ = writeln!(s, "part {i} [{}]: {}", part.family, verts.join(" "));
            }
            s
        }
    };
    Ok(Report {
        command: "certify",
        config: json!({ "graph": emit_graph6(&g), "theorem": t.id() }),
        result: json!({
            "graph": emit_graph6(&g),
            "theorem": t.id(),
            "sequence": seq.labels(),
            "certificate": cert.map(|c| c.to_json()),
        }),
        text,
        csv: None,
    })
}

fn cmd_sequences(arg: &str, k: usize, budget: u64) -> Result<Report, CliError> {
    let h = read_graph(arg)?;
    let found = enumerate_really_canonical_sequences(&h, k, budget)?;
    let classify = wpn_core::witnessing::SupportedCycle::of(&h).is_ok();
    let mut text = String::new();
    let mut items = Vec::new();
    for seq in &found.sequences {
        let case = if classify {
            match classify_sequence(&h, seq)? {
                Classification::Case { case, .. } => Some(json!(case)),
                Classification::NoMatch => Some(json!("no-match")),
            }
        } else {
            None
        };
        let _ = write!(text, "{}", seq.labels().join(" | "));
        if let Some(c) = &case {
            let _ = write!(text, "  case {c}");
        }
        text.push('\n');
        let mut item = json!({ "families": seq.labels() });
        if let Some(c) = case {
            item["case"] = c;
        }
        items.push(item);
    }
    Ok(Report {
        command: "sequences",
        config: json!({ "graph": emit_graph6(&h), "k": k, "budget": budget }),
        result: json!({
            "graph": emit_graph6(&h),
            "k": k,
            "count": items.len(),
            "sequences": items,
            "stats": found.stats,
        }),
        text,
        csv: None,
    })
}

fn cmd_verify_claims(cli: &Cli, cycle: usize) -> Result<(), CliError> {
    if cycle < 6 || cycle % 2 == 1 {
        return Err(CliError::Precondition(format!(
            "--cycle must be an even length of at least 6, got {cycle}"
        )));
    }
    let report = verify_cycle_partition_claims(cycle / 2);
    let mut text = String::new();
    for item in &report.items {
        let p = &item.parameters;
        let _ = writeln!(
            text,
            "{} {} edges={} non-edges={}: {:?} (expected {:?})",
            item.claim,
            p.shapes.join("+"),
            p.edges,
            p.non_edges,
            item.status,
            item.expected
        );
    }
    let _ = writeln!(text, "passed: {}", report.passed);
    let out = Report {
        command: "verify-claims",
        config: json!({ "cycle": cycle }),
        result: serde_json::to_value(&report).expect("claims serialize"),
        text,
        csv: None,
    };
    write_out(cli.output.as_deref(), &out.render(cli.format)?)?;
    if report.claim_applies && !report.passed {
        return Err(CliError::Failed(format!("some partition claims fail for C{cycle}")));
    }
    Ok(())
}

fn cmd_count(function: CountFn, n: usize) -> Result<Report, CliError> {
    let (name, value) = match function {
        CountFn::Bell => ("bell", counting::bell(n)),
        CountFn::F1 => ("f1", counting::f_star(1, n)?),
        CountFn::F2 => ("f2", counting::f_star(2, n)?),
        CountFn::F3 => ("f3", counting::f_star(3, n)?),
        CountFn::Cographs => ("cographs", counting::labeled_cograph_count(n)),
    };
    let value = value.to_string();
    Ok(Report {
        command: "count",
        config: json!({ "fn": name, "n": n }),
        result: json!({ "fn": name, "n": n, "value": value }),
        text: format!("{value}\n"),
        csv: Some(format!("fn,n,value\n{name},{n},{value}\n")),
    })
}

fn cmd_bound(n: usize, l: usize) -> Result<Report, CliError> {
    let b = counting::c2l_lower_bound(n, l)?;
    let exponent = format!("{}/{}", b.exponent_numerator, b.exponent_denominator);
    let exact = b.exact_value().map(|v| v.to_string());
    let floor = b.floor_value().to_string();
    let text = match &exact {
        Some(v) => format!("{v}\n"),
        None => format!("2^({exponent}) * {} >= {floor}\n", b.bell_factor),
    };
    Ok(Report {
        command: "bound",
        config: json!({ "n": n, "l": l }),
        result: json!({
            "n": n,
            "l": l,
            "exponent": exponent,
            "bell_index": b.bell_index,
            "bell_factor": b.bell_factor.to_string(),
            "exact": exact,
            "floor": floor,
            "log2": b.log2_approx(),
        }),
        text,
        csv: Some(format!("n,l,exponent,bell_index,bell_factor,floor\n{n},{l},{exponent},{},{},{floor}\n", b.bell_index, b.bell_factor)),
    })
}

fn cmd_sample(args: &SampleArgs) -> Result<Report, CliError> {
    let mut sampler = PartitionSampler::new(args.n, args.seed)?;
    let partitions: Vec<_> = (0..args.samples).map(|_| sampler.sample()).collect();
    let config = json!({
        "n": args.n,
        "samples": args.samples,
        "seed": args.seed,
        "stats": args.stats,
        "threshold": args.threshold,
    });
    if args.stats {
        let stats: Vec<_> = partitions.iter().map(|p| partition_stats(p, args.threshold)).collect();
        let mut csv = String::from("sample,blocks,nonsingletons,heavy_vertices\n");
        for (i, s) in stats.iter().enumerate() {
            let _ = writeln!(csv, "{i},{},{},{}", s.blocks, s.nonsingleton_blocks, s.heavy_vertices);
        }
        let threshold = stats.first().map(|s| s.threshold);
        return Ok(Report {
            command: "sample-partitions",
            config,
            result: json!({
                "n": args.n,
                "seed": args.seed,
                "threshold": threshold,
                "rows": stats.iter().map(|s| json!({
                    "blocks": s.blocks,
                    "nonsingletons": s.nonsingleton_blocks,
                    "heavy_vertices": s.heavy_vertices,
                })).collect::<Vec<_>>(),
            }),
            text: csv.clone(),
            csv: Some(csv),
        });
    }
    let mut text = String::new();
    let mut csv = String::from("sample,rgs\n");
    for (i, p) in partitions.iter().enumerate() {
        let blocks: Vec<String> = p
            .blocks()
            .iter()
            .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        let _ = writeln!(text, "{{{}}}", blocks.join(" | "));
        let rgs: Vec<String> = p.rgs().iter().map(usize::to_string).collect();
        let _ = writeln!(csv, "{i},{}", rgs.join(" "));
    }
    Ok(Report {
        command: "sample-partitions",
        config,
        result: json!({
            "n": args.n,
            "seed": args.seed,
            "partitions": partitions.iter().map(|p| p.blocks().to_vec()).collect::<Vec<_>>(),
        }),
        text,
        csv: Some(csv),
    })
}

fn shard_bits(shards: u64) -> Result<u32, CliError> {
    if shards == 0 || !shards.is_power_of_two() {
        return Err(CliError::Precondition(format!("--shards must be a power of two, got {shards}")));
    }
    Ok(shards.trailing_zeros())
}

fn cmd_census(args: &CensusArgs) -> Result<Report, CliError> {
    let forbidden = read_graph(&args.forbid)?;
    let theorem = parse_theorem(&args.theorem)?;
    let mode = parse_mode(&args.mode)?;
    let config = CensusConfig::new(args.n, forbidden, theorem, mode).with_shard_bits(shard_bits(args.shards)?);
    let opts = RunOptions {
        manifest: args.resume.as_deref(),
        resume: args.resume.is_some(),
        stop_after: args.stop_after,
    };
    let report = match census::run_census(&config, &opts)? {
        CensusOutcome::Complete(r) => r,
        CensusOutcome::Interrupted { done, pending } => {
            return Err(CliError::Interrupted(format!(
                "stopped with {done} shards done and {pending} pending; rerun with the same --resume manifest"
            )))
        }
    };
    if let (Some(csv_path), Some(manifest)) = (&args.shard_csv, &args.resume) {
        let m = Manifest::load(manifest)?;
        write_out(Some(csv_path), &shard_csv(&m))?;
    } else if let Some(csv_path) = &args.shard_csv {
        // Without a manifest there is a single merged row.
        let mut csv = String::from("prefix,total,hfree,certifiable\n");
        let _ = writeln!(csv, "all,{},{},{}", report.total, report.hfree, report.certifiable);
        write_out(Some(csv_path), &csv)?;
    }
    let mut text = String::new();
    let _ = writeln!(text, "n: {}", report.n);
    let _ = writeln!(text, "forbidden: {}", report.forbidden);
    let _ = writeln!(text, "theorem: {}", report.theorem);
    let _ = writeln!(text, "mode: {}", report.mode);
    let _ = writeln!(text, "total: {}", report.total);
    let _ = writeln!(text, "hfree: {}", report.hfree);
    let _ = writeln!(text, "certifiable: {}", report.certifiable);
    if let Some(f) = &report.certifiable_fraction {
        let _ = writeln!(text, "certifiable fraction: {} = {}", f.exact, f.decimal);
    }
    let _ = writeln!(
        text,
        "soundness: {} checked, {} failures",
        report.soundness.checked, report.soundness.failures
    );
    let csv = format!(
        "n,forbidden,theorem,mode,total,hfree,certifiable\n{},{},{},{},{},{},{}\n",
        report.n, report.forbidden, report.theorem, report.mode, report.total, report.hfree, report.certifiable
    );
    Ok(Report {
        command: "census",
        config: json!({
            "n": args.n,
            "forbidden": emit_graph6(&config.forbidden),
            "theorem": theorem.id(),
            "mode": mode,
            "shards": args.shards,
        }),
        result: serde_json::to_value(&report).expect("report serializes"),
        text,
        csv: Some(csv),
    })
}

fn shard_csv(m: &Manifest) -> String {
    let mut csv = String::from("prefix,done,total,hfree,certifiable\n");
    for s in &m.shards {
        let c = &s.counts;
        let _ = writeln!(csv, "{},{},{},{},{}", s.prefix, s.done, c.total, c.hfree, c.certifiable);
    }
    csv
}

fn cmd_girth5(n: usize, mode: &str) -> Result<Report, CliError> {
    let mode = parse_mode(mode)?;
    let r = census::girth5_census(n, mode)?;
    let mut text = String::new();
    let _ = writeln!(text, "n: {n}");
    let _ = writeln!(text, "girth >= 5: {} of {}", r.girth5, r.total);
    let _ = writeln!(
        text,
        "heavy-degree check: {} passed, {} failed",
        r.heavy_check_passed, r.heavy_check_failures
    );
    let dist = |m: &std::collections::BTreeMap<usize, u64>| {
        m.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
    };
    let _ = writeln!(text, "s distribution: {}", dist(&r.s_distribution));
    let _ = writeln!(text, "max degree distribution: {}", dist(&r.max_degree_distribution));
    Ok(Report {
        command: "girth5",
        config: json!({ "n": n, "mode": mode }),
        result: serde_json::to_value(&r).expect("report serializes"),
        text,
        csv: None,
    })
}
