mod args;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use rayon::prelude::*;
use thiserror::Error;

use szeged_core::blocks::block_decomposition;
use szeged_core::generators::{self, CactusParams, CorpusKind, CorpusManifest, GraphRecipe, ManifestEntry, NamedGraph};
use szeged_core::graph::{parse_edge_list_capped, DEFAULT_MAX_VERTICES};
use szeged_core::theorems::{self, Analysis, GraphVerification, VerifyOptions};
use szeged_core::{Graph, QuarterRational, TheoremVerdict};

use args::{Cli, Command, ComputeArgs, Family, GenArgs, VerifyArgs};
use report::{BatchReport, GraphStats, ReproductionCheck, RunReport};

/// Vertex count above which vertex-sum cross-checks need `--full-cross-check`.
const CROSS_CHECK_LIMIT: usize = 200;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

fn input_err(context: impl std::fmt::Display, err: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{context}: {err}"))
}

fn vertex_cap() -> Result<usize, CliError> {
    match std::env::var("CACTUS_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Input(format!("CACTUS_MAX_N={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_VERTICES),
    }
}

fn check_cap(id: &str, g: &Graph, cap: usize) -> Result<(), CliError> {
    if g.vertex_count() > cap {
        return Err(CliError::Input(format!("{id}: {} vertices exceed the cap of {cap}", g.vertex_count())));
    }
    Ok(())
}

fn read_graph(path: &Path, cap: usize) -> Result<szeged_core::ParsedGraph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| input_err(path.display(), e))?;
    parse_edge_list_capped(&text, cap).map_err(|e| input_err(path.display(), e))
}

fn emit_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Failed(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn compute(args: &ComputeArgs) -> Result<(), CliError> {
    let start = Instant::now();
    let cap = vertex_cap()?;
    let parsed = read_graph(&args.file, cap)?;
    let g = &parsed.graph;
    let vertex_sums = g.vertex_count() <= CROSS_CHECK_LIMIT || args.full_cross_check;
    let a = Analysis::new(g, vertex_sums).map_err(|e| input_err(args.file.display(), e))?;

    let mut verdicts = Vec::new();
    if args.verify {
        verdicts.push(theorems::check_distance_partition(&a));
        if vertex_sums {
            verdicts.push(theorems::check_vertex_sum_identity(&a));
            verdicts.push(theorems::check_difference_identity(&a));
        }
        verdicts.push(theorems::check_classical_chain(&a));
        verdicts.push(theorems::check_sz_vs_2w(&a));
        verdicts.push(theorems::check_revised_sz_vs_2w(&a));
    }
    let indices = a.indices().clone();
    let twice_w = 2 * indices.wiener;
    let report = RunReport {
        input: args.file.display().to_string(),
        graph: GraphStats::new(g.vertex_count(), g.edge_count(), g.is_bipartite(), a.blocks(), &parsed.labels),
        twice_wiener_equals_szeged: indices.szeged == twice_w,
        twice_wiener_equals_revised_szeged: indices.revised_szeged == QuarterRational::from(twice_w),
        indices,
        verdicts,
        elapsed_us: start.elapsed().as_micros(),
    };
    if args.json {
        emit_json(&report)?;
    } else {
        print!("{}", report.render_text());
    }

    let mut problems = report.indices.inconsistencies();
    problems.extend(
        report
            .verdicts
            .iter()
            .filter(|v| v.is_violated() || !v.prediction_matches())
            .map(|v| format!("{:?}: {}", v.claim, v.witness.as_deref().unwrap_or("violated"))),
    );
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(problems.join("\n")))
    }
}

fn verify_options(g: &Graph, full: bool) -> VerifyOptions {
    VerifyOptions { vertex_sums: full || g.vertex_count() <= CROSS_CHECK_LIMIT }
}

fn verify_all(graphs: &[(String, Graph)], full: bool) -> Result<Vec<GraphVerification>, CliError> {
    graphs
        .par_iter()
        .map(|(id, g)| theorems::verify_graph(id, g, verify_options(g, full)).map_err(|e| input_err(id, e)))
        .collect()
}

fn edge_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| input_err(dir.display(), e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "edges"))
        .collect();
    files.sort();
    Ok(files)
}

fn reference_reproduction(graphs: &[GraphVerification]) -> Vec<ReproductionCheck> {
    let expected: [(&str, &str, i128); 4] =
        [("fig2", "W", 96), ("fig2", "Sz", 192), ("fig3", "W", 1818), ("fig3", "Sz*", 3636)];
    expected
        .iter()
        .map(|&(graph, quantity, value)| {
            let report = &graphs.iter().find(|g| g.id == graph).expect("reference graph present").indices;
            let observed = match quantity {
                "W" => QuarterRational::from(report.wiener),
                "Sz" => QuarterRational::from(report.szeged),
                _ => report.revised_szeged,
            };
            let expected = QuarterRational::from_integer(value);
            ReproductionCheck {
                graph: graph.to_string(),
                quantity: quantity.to_string(),
                expected,
                observed,
                matches: expected == observed,
            }
        })
        .collect()
}

fn run_verify(args: &VerifyArgs) -> Result<BatchReport, CliError> {
    let cap = vertex_cap()?;
    let mut lemma: Vec<TheoremVerdict> = Vec::new();
    let (source, graphs): (String, Vec<(String, Graph)>) = if args.paper {
        let graphs = [NamedGraph::Fig2, NamedGraph::Fig3]
            .into_iter()
            .map(|n| (n.name().to_string(), n.build()))
            .collect();
        ("reference graphs".to_string(), graphs)
    } else if let Some(Family::Cycles) = args.family {
        let range = args.n.expect("clap enforces --n");
        if range.lo < 3 {
            return Err(CliError::Input(format!("cycles need n >= 3, got {range}")));
        }
        lemma = (range.lo..=range.hi)
            .into_par_iter()
            .map(|n| theorems::check_cycle_dis_lemma(n).expect("n >= 3"))
            .collect();
        let graphs = (range.lo..=range.hi)
            .map(|n| (format!("cycle-{n}"), generators::cycle(n).expect("n >= 3")))
            .collect();
        (format!("family cycles {range}"), graphs)
    } else if let Some(kind) = args.gen {
        let spec = args.corpus.spec(kind);
        let recipes = spec.recipes().map_err(|e| input_err("corpus", e))?;
        let graphs = recipes
            .par_iter()
            .map(|r| r.build().map(|g| (r.id(), g)).map_err(|e| input_err(r.id(), e)))
            .collect::<Result<Vec<_>, _>>()?;
        let source = serde_json::to_string(&spec).map_err(|e| CliError::Failed(e.to_string()))?;
        (format!("gen {source}"), graphs)
    } else {
        let path = args.path.as_ref().expect("clap enforces a source");
        let files = if path.is_dir() { edge_files(path)? } else { vec![path.clone()] };
        let mut graphs = Vec::with_capacity(files.len());
        for f in files {
            let parsed = read_graph(&f, cap)?;
            let id = f.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            graphs.push((id, parsed.graph));
        }
        (path.display().to_string(), graphs)
    };
    for (id, g) in &graphs {
        check_cap(id, g, cap)?;
    }
    let verifications = verify_all(&graphs, args.full_cross_check)?;
    let reproduction = if args.paper { reference_reproduction(&verifications) } else { Vec::new() };
    Ok(BatchReport::new(source, reproduction, lemma, verifications))
}

fn verify(args: &VerifyArgs) -> Result<(), CliError> {
    let report = match args.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| CliError::Input(format!("--threads {k}: {e}")))?
            .install(|| run_verify(args))?,
        None => run_verify(args)?,
    };
    if args.json {
        emit_json(&report)?;
    } else {
        print!("{}", report.render_text());
    }
    if report.summary.passed {
        return Ok(());
    }
    let mut dump = Vec::new();
    for g in &report.graphs {
        for v in g.violations() {
            dump.push(format!("{}: {:?} {}", g.id, v.claim, v.witness.as_deref().unwrap_or("")));
        }
        for p in g.indices.inconsistencies() {
            dump.push(format!("{}: {p}", g.id));
        }
    }
    for v in report.lemma.iter().filter(|v| v.is_violated()) {
        dump.push(format!("{:?}: {}", v.claim, v.witness.as_deref().unwrap_or("")));
    }
    for r in report.reproduction.iter().filter(|r| !r.matches) {
        dump.push(format!("{} {}: expected {} observed {}", r.graph, r.quantity, r.expected, r.observed));
    }
    Err(CliError::Failed(format!("verification failed:\n{}", dump.join("\n"))))
}

fn gen(args: &GenArgs) -> Result<(), CliError> {
    let cap = vertex_cap()?;
    let (corpus, recipes): (Option<_>, Vec<GraphRecipe>) = if let Some(name) = args.named {
        (None, vec![GraphRecipe::Named { name }])
    } else if args.cactus {
        let c = &args.corpus;
        if c.blocks.lo != c.blocks.hi {
            return Err(CliError::Input("--cactus takes a single --blocks value".into()));
        }
        let params = CactusParams {
            block_count: c.blocks.lo,
            min_cycle_length: c.cycle_lengths.lo,
            max_cycle_length: c.cycle_lengths.hi,
            edge_block_probability: c.edge_prob,
            parity: c.parity,
            seed: c.seed,
        };
        params.validate().map_err(|e| input_err("cactus", e))?;
        let recipe = if args.cycles_only {
            GraphRecipe::CycleCactus { params }
        } else {
            GraphRecipe::Cactus { params }
        };
        (None, vec![recipe])
    } else {
        let kind: CorpusKind = args.corpus_kind.expect("clap enforces a generator");
        let spec = args.corpus.spec(kind);
        (Some(spec), spec.recipes().map_err(|e| input_err("corpus", e))?)
    };

    fs::create_dir_all(&args.out).map_err(|e| input_err(args.out.display(), e))?;
    let mut entries = Vec::with_capacity(recipes.len());
    for recipe in recipes {
        let id = recipe.id();
        let g = recipe.build().map_err(|e| input_err(&id, e))?;
        check_cap(&id, &g, cap)?;
        let file = format!("{id}.edges");
        let path = args.out.join(&file);
        fs::write(&path, g.to_edge_list()).map_err(|e| input_err(path.display(), e))?;
        println!("wrote {} (n={}, m={}, blocks={})", path.display(), g.vertex_count(), g.edge_count(), block_decomposition(&g).blocks().len());
        entries.push(ManifestEntry { id, file, vertices: g.vertex_count(), edges: g.edge_count(), recipe });
    }
    let manifest = CorpusManifest { corpus, graphs: entries };
    let path = args.out.join("manifest.json");
    let text = serde_json::to_string_pretty(&manifest).map_err(|e| CliError::Failed(e.to_string()))?;
    fs::write(&path, text + "\n").map_err(|e| input_err(path.display(), e))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => verify(a),
        Command::Gen(a) => gen(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
