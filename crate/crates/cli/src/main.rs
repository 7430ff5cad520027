//! `fpolab`: framed partial orders from the command line.
//!
//! Exit status: 0 affirmative answer, 1 negative answer, 2 usage or
//! validation error, 3 search budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use fpolab::diagram::{diagram_to_fpo_with_provenance, validate_diagram, Diagram};
use fpolab::fop::{classify_map, find_fop_map_with, is_minimal_representative_with, projection_to_minrep};
use fpolab::quantum::{
    basis_states, evcond_check, is_clifford_22, zigzag1_report, CliffordVerdict, EvcondVerdict, GateData, QuantumError,
    UnitaryGateF64,
};
use fpolab::spacetime::{check_embedding, site_window_fpo, CausalSite, Localisation, SiteData};
use fpolab::structure::match_named;
use fpolab::{
    c_local_embed_with, catalog_named, enumerate_minimal_representatives_with, exogenise_with,
    minimal_representative_with, Catalog, ExogeniseError, Filter, Fpo, FpoClass, MinimalityStrategy, SearchError,
    DEFAULT_BUDGET,
};

/// Cached catalogs from another code version are rebuilt.
const CODE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+catalog-v1");

#[derive(Parser, Debug)]
#[command(
    name = "fpolab",
    version,
    about = "Framed partial orders: embeddability of circuit causal structures"
)]
struct Cli {
    /// Search node budget per query.
    #[arg(long, global = true, env = "FPOLAB_BUDGET")]
    budget: Option<u64>,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for randomized generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Validate inputs and stop before searching.
    #[arg(long, global = true)]
    dry_run: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert a diagram to its FPO.
    G {
        #[arg(long)]
        diagram: PathBuf,
        /// Include the boxes absorbed by each element.
        #[arg(long)]
        provenance: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search a FOP map from LHS to RHS (exit 0 if LHS ≻ RHS).
    Embeds {
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Classify a map given as a witness file.
    Classify {
        #[arg(long)]
        map: PathBuf,
    },
    /// Minimal representative of an FPO.
    Minrep {
        #[arg(long)]
        fpo: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the projection from the input onto its minimal representative.
        #[arg(long)]
        projection: Option<PathBuf>,
        /// Exit 1 unless the input is already minimal.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Strategy::General)]
        strategy: Strategy,
    },
    /// Catalog of minimal representatives of a class.
    Enumerate {
        /// Class as `m,n`.
        #[arg(long)]
        class: String,
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value = "all")]
        filter: String,
        #[arg(long, value_enum, default_value_t = Strategy::General)]
        strategy: Strategy,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory for cached catalogs.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Print a named structure, e.g. `named zz22 3` or `named full_frame 2 2`.
    Named {
        name: String,
        params: Vec<usize>,
        #[arg(long)]
        dot: bool,
    },
    /// Name an FPO up to frame permutation (exit 1 if unnamed).
    Recognise {
        #[arg(long)]
        fpo: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_zigzag: usize,
    },
    /// C-local embedding into a causal site.
    EmbedSpacetime {
        #[arg(long)]
        fpo: PathBuf,
        /// `mink:d=1,t=-4..4,x=-4..4[,strict]` or an explicit site JSON file.
        #[arg(long)]
        site: String,
        #[arg(long)]
        loc: PathBuf,
        /// Only timelike separations are causal.
        #[arg(long)]
        strict_timelike: bool,
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Print the finite window FPO instead of searching.
        #[arg(long)]
        window: bool,
    },
    /// Markov reduction of a causal-relevant FPO.
    Exogenise {
        #[arg(long)]
        fpo: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quantum checks on two-party gates.
    Quantum {
        #[command(subcommand)]
        command: QuantumCommand,
    },
    /// Graphviz rendering of an FPO or of a diagram's FPO.
    Dot {
        #[arg(long, conflicts_with = "diagram")]
        fpo: Option<PathBuf>,
        #[arg(long)]
        diagram: Option<PathBuf>,
    },
    /// Seeded random FPO or diagram.
    Random {
        #[arg(value_enum)]
        kind: RandomKind,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Internal elements (FPO) or boxes (diagram).
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 0.4)]
        p: f64,
    },
}

#[derive(Subcommand, Debug)]
enum QuantumCommand {
    /// Characteristic-polynomial test (exit 1 if violated).
    Evcond {
        #[command(flatten)]
        gate: GateArg,
        #[arg(long, default_value = "zero-plus")]
        basis: String,
    },
    /// Clifford test (exit 1 with a witness if not Clifford).
    Clifford {
        #[command(flatten)]
        gate: GateArg,
    },
    /// One-zigzag implementation compared with the gate's own channel.
    Zigzag1 {
        #[command(flatten)]
        gate: GateArg,
        /// Print the full report as JSON.
        #[arg(long)]
        report: bool,
    },
}

#[derive(Args, Debug)]
struct GateArg {
    /// `cnot`, `cz`, `swap`, `identity`, `tcnot` or a gate JSON file.
    #[arg(long)]
    gate: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Strategy {
    General,
    Idempotent,
}

impl From<Strategy> for MinimalityStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::General => MinimalityStrategy::General,
            Strategy::Idempotent => MinimalityStrategy::Idempotent,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RandomKind {
    Fpo,
    Diagram,
}

/// Ways a run can fail, with their exit codes.
#[derive(Debug)]
enum Failure {
    Usage(anyhow::Error),
    Budget(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Budget(b) => Failure::Budget(b.to_string()),
            other => Failure::Usage(other.into()),
        }
    }
}

impl From<QuantumError> for Failure {
    fn from(e: QuantumError) -> Self {
        Failure::Usage(e.into())
    }
}

/// `Ok(true)` is an affirmative answer, `Ok(false)` a negative one.
type Outcome = Result<bool, Failure>;

struct Ctx {
    budget: u64,
    seed: u64,
    dry_run: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            2
        }
        Err(Failure::Budget(e)) => {
            eprintln!("error: {e}");
            3
        }
    };
    ExitCode::from(code)
}

fn run(cli: Cli) -> Outcome {
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    if budget == 0 {
        return Err(anyhow!("budget must be positive").into());
    }
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(anyhow!("--threads must be positive").into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring worker threads")?;
    }
    let ctx = Ctx {
        budget,
        seed: cli.seed,
        dry_run: cli.dry_run,
    };
    match cli.command {
        Command::G {
            diagram,
            provenance,
            out,
        } => cmd_g(&ctx, &diagram, provenance, out.as_deref()),
        Command::Embeds { lhs, rhs, witness } => cmd_embeds(&ctx, &lhs, &rhs, witness.as_deref()),
        Command::Classify { map } => cmd_classify(&ctx, &map),
        Command::Minrep {
            fpo,
            out,
            projection,
            check,
            strategy,
        } => cmd_minrep(
            &ctx,
            &fpo,
            out.as_deref(),
            projection.as_deref(),
            check,
            strategy.into(),
        ),
        Command::Enumerate {
            class,
            max_order,
            filter,
            strategy,
            out,
            cache_dir,
        } => cmd_enumerate(
            &ctx,
            &class,
            max_order,
            &filter,
            strategy.into(),
            out.as_deref(),
            cache_dir.as_deref(),
        ),
        Command::Named { name, params, dot } => cmd_named(&ctx, &name, &params, dot),
        Command::Recognise { fpo, max_zigzag } => cmd_recognise(&ctx, &fpo, max_zigzag),
        Command::EmbedSpacetime {
            fpo,
            site,
            loc,
            strict_timelike,
            witness,
            window,
        } => cmd_embed_spacetime(&ctx, &fpo, &site, &loc, strict_timelike, witness.as_deref(), window),
        Command::Exogenise { fpo, out } => cmd_exogenise(&ctx, &fpo, out.as_deref()),
        Command::Quantum { command } => cmd_quantum(&ctx, command),
        Command::Dot { fpo, diagram } => cmd_dot(&ctx, fpo.as_deref(), diagram.as_deref()),
        Command::Random { kind, m, n, k, p } => cmd_random(&ctx, kind, m, n, k, p),
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path, what: &str) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {what} {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {what} {}", path.display()))
}

fn read_fpo(path: &Path) -> anyhow::Result<Fpo> {
    read_json(path, "FPO")
}

fn read_diagram(path: &Path) -> anyhow::Result<Diagram> {
    let d: Diagram = read_json(path, "diagram")?;
    let v = validate_diagram(&d);
    if !v.is_empty() {
        let msgs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        bail!("invalid diagram {}: {}", path.display(), msgs.join("; "));
    }
    Ok(d)
}

fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes `value` to `path` if given, and to stdout.
fn emit<T: Serialize>(value: &T, path: Option<&Path>) -> anyhow::Result<()> {
    let text = to_json(value)?;
    if let Some(p) = path {
        fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
    }
    print!("{text}");
    Ok(())
}

fn dry_run_ok(ctx: &Ctx) -> bool {
    if ctx.dry_run {
        eprintln!("dry run: inputs valid");
    }
    ctx.dry_run
}

fn cmd_g(ctx: &Ctx, path: &Path, provenance: bool, out: Option<&Path>) -> Outcome {
    let d = read_diagram(path)?;
    if dry_run_ok(ctx) {
        return Ok(true);
    }
    let g = diagram_to_fpo_with_provenance(&d).map_err(anyhow::Error::from)?;
    if provenance {
        emit(&g, out)?;
    } else {
        emit(&g.fpo, out)?;
    }
    Ok(true)
}

fn cmd_embeds(ctx: &Ctx, lhs: &Path, rhs: &Path, witness: Option<&Path>) -> Outcome {
    let (s, t) = (read_fpo(lhs)?, read_fpo(rhs)?);
    if s.class() != t.class() {
        return Err(anyhow!("class mismatch: {} vs {}", s.class(), t.class()).into());
    }
    if dry_run_ok(ctx) {
        return Ok(true);
    }
    match find_fop_map_with(&s, &t, ctx.budget)? {
        Some(map) => {
            eprintln!("embeds: FOP map found");
            emit(&map, witness)?;
            Ok(true)
        }
        None => {
            eprintln!("embeds: no FOP map");
            Ok(false)
        }
    }
}

fn cmd_classify(ctx: &Ctx, path: &Path) -> Outcome {
    let map: fpolab::FopMap = read_json(path, "map")?;
    if dry_run_ok(ctx) {
        return Ok(true);
    }
    match classify_map(&map) {
        Ok(c) => {
            println!("{}", c.class);
            if let Some(w) = &c.witness {
                eprintln!("not stronger because: {w:?}");
            }
            Ok(true)
        }
        Err(v) => {
            println!("NOT_FOP");
            eprintln!("{v}");
            Ok(false)
        }
    }
}

fn cmd_minrep(
    ctx: &Ctx,
    path: &Path,
    out: Option<&Path>,
    projection: Option<&Path>,
    check: bool,
    strategy: MinimalityStrategy,
) -> Outcome {
    let s = read_fpo(path)?;
    if dry_run_ok(ctx) {
        return Ok(true);
    }
    if check {
        let minimal = is_minimal_representative_with(&s, strategy, ctx.budget)?;
        eprintln!("{}", if minimal { "minimal" } else { "not minimal" });
        return Ok(minimal);
    }
    let m = minimal_representative_with(&s, ctx.budget)?;
    if let Some(p) = projection {
        let e = find_fop_map_with(&m, &s, ctx.budget)?.ok_or(SearchError::NotEquivalent)?;
        let proj = projection_to_minrep(&e)?;
        fs::write(p, to_json(&proj)?).with_context(|| format!("writing {}", p.display()))?;
    }
    eprintln!("minimal representative: {} elements (input {})", m.len(), s.len());
    emit(&m, out)?;
    Ok(true)
}

fn parse_class(s: &str) -> anyhow::Result<FpoClass> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    let (a, b) = t.split_once(',').ok_or_else(|| anyhow!("class must look like `m,n`"))?;
    Ok(FpoClass::new(a.trim().parse()?, b.trim().parse()?))
}

#[derive(Serialize, Deserialize)]
struct CachedCatalog {
    key: String,
    catalog: Catalog,
}

fn cache_key(class: FpoClass, max_order: usize, filter: Filter, strategy: MinimalityStrategy) -> String {
    format!(
        "{},{}|{max_order}|{filter}|{strategy:?}|{CODE_VERSION}",
        class.inputs, class.outputs
    )
}

fn cmd_enumerate(
    ctx: &Ctx,
    class: &str,
    max_order: usize,
    filter: &str,
    strategy: MinimalityStrategy,
    out: Option<&Path>,
    cache_dir: Option<&Path>,
) -> Outcome {
    let class = parse_class(class)?;
    let filter: Filter = filter.parse().map_err(|e: String| anyhow!(e))?;
    if max_order < class.inputs + class.outputs {
        return Err(anyhow!("max order {max_order} is below the frame size of {class}").into());
    }
    if dry_run_ok(ctx) {
        return Ok(true);
    }
    let key = cache_key(class, max_order, filter, strategy);
    let cache_file = cache_dir.map(|d| {
        d.join(format!(
            "catalog-{}x{}-o{max_order}-{filter}-{strategy:?}.json",
            class.inputs, class.outputs
        ))
    });
    let cached = cache_file
        .as_ref()
        .and_then(|f| fs::read_to_string(f).ok())
        .and_then(|t| serde_json::from_str::<CachedCatalog>(&t).ok())
        .filter(|c| c.key == key);
    let catalog = match cached {
        Some(c) => {
            eprintln!("using cached catalog");
            c.catalog
        }
        None => {
            let c = enumerate_minimal_representatives_with(class, max_order, filter, strategy, ctx.budget)?;
            if let (Some(f), Some(dir)) = (&cache_file, cache_dir) {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                let entry = CachedCatalog {
                    key,
                    catalog: c.clone(),
                };
                fs::write(f, to_json(&entry)?).with_context(|| format!("writing {}", f.display()))?;
            }
            c
        }
    };
    eprintln!(
        "{class} up to order {max_order} ({filter}): {} orbits, {} types",
        catalog.entries.len(),
        catalog.type_count()
    );
    emit(&catalog, out)?;
    Ok(true)
}

fn cmd_named(ctx: &Ctx, name: &str, params: &[usize], dot: bool) -> Outcome {
    let s = catalog_named(name, params).map_err(anyhow::Error::from)?;
    if dry_run_ok(ctx) {
        return Ok(true);
    }
    if dot {
        print!("{}", s.to_dot());
    } else {
        emit(&s, None)?;
    }
    Ok(true)
}

fn cmd_recognise(ctx: &Ctx, path: &Path, max_zigzag: usize) -> Outcome {
    let s = read_fpo(path)?;
    if dry_run_ok(ctx) {
        return Ok(true);
    }
    match match_named(&s, max_zigzag) {
        Some(name) => {
            println!("{name}");
            Ok(true)
        }
        None => {
            println!("unnamed");
            Ok(false)
        }
    }
}

fn load_site(spec: &str, strict: bool) -> anyhow::Result<CausalSite> {
    if spec.starts_with("mink:") {
        let full = if strict && !spec.contains("strict") {
            format!("{spec},strict")
        } else {
            spec.to_string()
        };
        return Ok(CausalSite::from_spec(&full)?);
    }
    if strict {
        bail!("--strict-timelike only applies to lattice sites");
    }
    let data: SiteData = read_json(Path::new(spec), "site")?;
    Ok(data.build()?)
}

#[derive(Serialize)]
struct SpacetimeWitness<'a> {
    fpo: &'a Fpo,
    site: &'a str,
    localisation: &'a Localisation,
    embedding: &'a fpolab::Embedding,
}

fn cmd_embed_spacetime(
    ctx: &Ctx,
    fpo: &Path,
    site_spec: &str,
    loc: &Path,
    strict: bool,
    witness: Option<&Path>,
    window: bool,
) -> Outcome {
    let s = read_fpo(fpo)?;
    let site = load_site(site_spec, strict)?;
    let loc_value: serde_json::Value = read_json(loc, "localisation")?;
    let loc = Localisation::from_json(&loc_value).map_err(|e| anyhow!(e))?;
    loc.resolve(&s, &site).map_err(anyhow::Error::from)?;
    if dry_run_ok(ctx) {
        return Ok(true);
    }
    if window {
        emit(&site_window_fpo(&site, &loc, &s).map_err(anyhow::Error::from)?, None)?;
        return Ok(true);
    }
    let found = c_local_embed_with(&s, &site, &loc, ctx.budget).map_err(|e| match e {
        fpolab::spacetime::EmbedError::Search(se) => Failure::from(se),
        other => Failure::Usage(other.into()),
    })?;
    match found {
        Some(e) => {
            check_embedding(&s, &site, &loc, &e).map_err(|v| anyhow!("internal error: bad embedding: {v}"))?;
            eprintln!("C-local embedding found");
            let w = SpacetimeWitness {
                fpo: &s,
                site: site_spec,
                localisation: &loc,
                embedding: &e,
            };
            emit(&w, witness)?;
            Ok(true)
        }
        None => {
            eprintln!("no C-local embedding");
            Ok(false)
        }
    }
}

fn cmd_exogenise(ctx: &Ctx, path: &Path, out: Option<&Path>) -> Outcome {
    let s = read_fpo(path)?;
    if dry_run_ok(ctx) {
        return Ok(true);
    }
    match exogenise_with(&s, ctx.budget) {
        Ok(r) => {
            emit(&r, out)?;
            Ok(true)
        }
        Err(ExogeniseError::Search(e)) => Err(e.into()),
        Err(e) => Err(anyhow::Error::from(e).into()),
    }
}

fn load_gate(spec: &str) -> anyhow::Result<UnitaryGateF64> {
    if let Some(g) = UnitaryGateF64::by_name(spec) {
        return Ok(g);
    }
    let path = Path::new(spec);
    if !path.exists() {
        bail!("unknown gate `{spec}` (expected cnot|cz|swap|identity|tcnot or a JSON file)");
    }
    let data: GateData = read_json(path, "gate")?;
    Ok(UnitaryGateF64::from_json(&data)?)
}

fn cmd_quantum(ctx: &Ctx, command: QuantumCommand) -> Outcome {
    match command {
        QuantumCommand::Evcond { gate, basis } => {
            let u = load_gate(&gate.gate)?;
            let states = basis_states::<f64>(&basis)
                .ok_or_else(|| anyhow!("unknown basis `{basis}` (expected zero-plus|computational|pauli)"))?;
            if u.dim_in_a != 2 || u.dim_in_b != 2 {
                return Err(anyhow!(
                    "named bases are single-qubit; gate has dims [{},{}]",
                    u.dim_in_a,
                    u.dim_in_b
                )
                .into());
            }
            if dry_run_ok(ctx) {
                return Ok(true);
            }
            let verdict = evcond_check(&u, &states, &states)?;
            emit(&verdict, None)?;
            match verdict {
                EvcondVerdict::Holds { .. } => {
                    eprintln!("holds (necessary condition only)");
                    Ok(true)
                }
                EvcondVerdict::Violated(w) => {
                    eprintln!(
                        "violated at ψ={}, ψ'={}, φ={}, φ'={}",
                        w.psi, w.psi_prime, w.phi, w.phi_prime
                    );
                    Ok(false)
                }
            }
        }
        QuantumCommand::Clifford { gate } => {
            let u = load_gate(&gate.gate)?;
            if dry_run_ok(ctx) {
                return Ok(true);
            }
            let verdict = is_clifford_22(&u)?;
            match &verdict {
                CliffordVerdict::Yes { tableau } => {
                    for line in tableau.lines() {
                        eprintln!("{line}");
                    }
                }
                CliffordVerdict::No { witness } => eprintln!("not Clifford: witness {witness}"),
            }
            emit(&verdict, None)?;
            Ok(matches!(verdict, CliffordVerdict::Yes { .. }))
        }
        QuantumCommand::Zigzag1 { gate, report } => {
            let u = load_gate(&gate.gate)?;
            if dry_run_ok(ctx) {
                return Ok(true);
            }
            let r = zigzag1_report(&u)?;
            if report {
                emit(&r, None)?;
            } else {
                println!("{:.3e}", r.distance);
            }
            let ok = r.distance < 1e-9 && r.trace_preserving && r.completely_positive;
            eprintln!(
                "one-zigzag channel {} the gate (Choi distance {:.3e})",
                if ok { "reproduces" } else { "does not reproduce" },
                r.distance
            );
            Ok(ok)
        }
    }
}

fn cmd_dot(ctx: &Ctx, fpo: Option<&Path>, diagram: Option<&Path>) -> Outcome {
    let s = match (fpo, diagram) {
        (Some(f), _) => read_fpo(f)?,
        (None, Some(d)) => {
            let d = read_diagram(d)?;
            diagram_to_fpo_with_provenance(&d).map_err(anyhow::Error::from)?.fpo
        }
        (None, None) => return Err(anyhow!("give --fpo or --diagram").into()),
    };
    if dry_run_ok(ctx) {
        return Ok(true);
    }
    print!("{}", s.to_dot());
    Ok(true)
}

fn cmd_random(ctx: &Ctx, kind: RandomKind, m: usize, n: usize, k: usize, p: f64) -> Outcome {
    if !(0.0..=1.0).contains(&p) {
        return Err(anyhow!("--p must lie in [0, 1]").into());
    }
    if dry_run_ok(ctx) {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    match kind {
        RandomKind::Fpo => emit(&fpolab::gen::random_fpo(&mut rng, m, n, k, p), None)?,
        RandomKind::Diagram => emit(&fpolab::gen::random_diagram(&mut rng, m, n, k), None)?,
    }
    Ok(true)
}
