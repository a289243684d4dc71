use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use glide_core::algebra::typing::{edge_raag, glide_raag, random_loop, HalvesFile, LoopFile};
use glide_core::algebra::word::display;
use glide_core::algebra::{
    abelianization, dimer_presentation, pi1_spanning_tree, tietze_reduce, typing_word, u_word,
    Abelianization, GlideLoop, Orientation,
};
use glide_core::braid::{braid_permutation, theta_n_permutation, VHalvesFile, VOrientation};
use glide_core::complex::npc_verdict;
use glide_core::dimer::labeling_components;
use glide_core::{
    BuildOptions, DimerModel, EdgeSet, Error, GlidingSystem, Hypergraph, Limits, NpcReport,
    StateSet, SubdivisionProfile,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "glide", version, about = "Dimer complexes, gliding systems and their groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Graph or hypergraph file (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_cubes: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_cycles: Option<u64>,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// List the dimer coverings.
    Dimers,
    /// Summarize the dimer complex.
    Complex,
    /// Both sides of the curvature criterion.
    CheckNpc {
        /// States file instead of a graph.
        #[arg(long, conflicts_with = "input")]
        states: Option<PathBuf>,
    },
    /// Reduced presentation of the fundamental group(oid) and its abelianization.
    Present {
        /// Base covering as comma-separated edge ids (default: the least covering).
        #[arg(long)]
        basepoint: Option<String>,
        #[arg(long)]
        groupoid: bool,
    },
    /// Hull of two coverings.
    Hull {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Permutation of marked edges along a loop.
    Braid {
        #[arg(long = "loop")]
        loop_file: PathBuf,
        #[arg(long)]
        vhalves: Option<PathBuf>,
        /// Subdivision profile, e.g. `ad=1,be=2`.
        #[arg(long)]
        subdivide: Option<String>,
    },
    /// Components of the space of dimer labelings.
    Components,
    /// Typing word of loops, its image under u, and whether that is trivial.
    Mu {
        #[arg(long = "loop")]
        loop_file: Option<PathBuf>,
        #[arg(long)]
        halves: Option<PathBuf>,
        /// Random loops to draw when no loop file is given.
        #[arg(long, default_value_t = 10)]
        loops: usize,
        /// Random walk length before closing up.
        #[arg(long, default_value_t = 8)]
        steps: usize,
    },
}

/// Exchange form of an abstract gliding system with its states.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StatesFile {
    edges: Vec<String>,
    glides: Vec<Vec<String>>,
    /// Independent glide pairs; edge-disjointness when absent.
    independent: Option<Vec<[usize; 2]>>,
    states: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct AbelianOut {
    betti: usize,
    torsion: Vec<String>,
}

impl From<&Abelianization> for AbelianOut {
    fn from(a: &Abelianization) -> Self {
        AbelianOut {
            betti: a.betti,
            torsion: a.torsion.iter().map(ToString::to_string).collect(),
        }
    }
}

fn abelian_text(a: &Abelianization) -> String {
    let mut parts: Vec<String> = Vec::new();
    if a.betti > 0 {
        parts.push(if a.betti == 1 { "Z".into() } else { format!("Z^{}", a.betti) });
    }
    parts.extend(a.torsion.iter().map(|t| format!("Z/{t}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

struct Ctx {
    global: Global,
    opts: BuildOptions,
}

impl Ctx {
    fn input(&self) -> anyhow::Result<&Path> {
        self.global
            .input
            .as_deref()
            .ok_or_else(|| anyhow!(Error::Malformed("--input is required".into())))
    }

    fn graph(&self) -> anyhow::Result<Hypergraph> {
        let path = self.input()?;
        let text = read(path)?;
        Ok(Hypergraph::from_json(&text, None)?)
    }

    fn model(&self) -> anyhow::Result<DimerModel> {
        Ok(DimerModel::new(self.graph()?, self.opts)?)
    }

    fn no_dot(&self) -> anyhow::Result<()> {
        if self.global.format == Format::Dot {
            return Err(Error::Malformed("dot output is only available for `complex`".into()).into());
        }
        Ok(())
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
        .with_context(|| format!("reading {}", path.display()))
}

fn load<T: for<'de> Deserialize<'de>>(path: &Path) -> anyhow::Result<T> {
    let text = read(path)?;
    serde_json::from_str(&text)
        .map_err(Error::from)
        .with_context(|| format!("parsing {}", path.display()))
}

fn pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("output serializes") + "\n"
}

fn ids(h: &Hypergraph, s: &EdgeSet) -> Vec<String> {
    h.edge_ids(s)
}

fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

fn covering_arg(model: &DimerModel, arg: &str) -> anyhow::Result<usize> {
    let names: Vec<&str> = arg.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let s = model.graph().edge_set(&names)?;
    Ok(model.covering_index(&s)?)
}

fn cmd_dimers(ctx: &Ctx) -> anyhow::Result<String> {
    ctx.no_dot()?;
    let h = ctx.graph()?;
    let coverings = glide_core::dimer::enumerate_dimer_coverings(&h);
    let lists: Vec<Vec<String>> = coverings.iter().map(|c| ids(&h, c)).collect();
    Ok(match ctx.global.format {
        Format::Text => lists.iter().map(|c| braces(c) + "\n").collect(),
        _ => pretty(&json!({ "count": lists.len(), "coverings": lists })),
    })
}

fn cmd_complex(ctx: &Ctx) -> anyhow::Result<String> {
    let model = ctx.model()?;
    let x = model.complex();
    let h = model.graph();
    if ctx.global.format == Format::Dot {
        return Ok(x.to_dot(h.edge_names()));
    }
    let components = x.components();
    let groups: Vec<Abelianization> = components
        .iter()
        .map(|c| pi1_spanning_tree(x, c[0]).map(|p| abelianization(&p)))
        .collect::<Result<_, _>>()?;
    let glides: Vec<Vec<String>> = model.glides().iter().map(|d| ids(h, d.cycle.edges())).collect();
    Ok(match ctx.global.format {
        Format::Text => {
            let mut out = String::new();
            let f: Vec<String> = x.f_vector().iter().map(ToString::to_string).collect();
            writeln!(out, "f-vector: ({})", f.join(","))?;
            match x.dimension() {
                Some(d) => writeln!(out, "dimension: {d}")?,
                None => writeln!(out, "dimension: empty")?,
            }
            writeln!(out, "components: {}", components.len())?;
            writeln!(out, "euler characteristic: {}", x.euler())?;
            writeln!(out, "glides: {}", glides.len())?;
            for (c, a) in components.iter().zip(&groups) {
                writeln!(out, "H1 of component at {}: {}", braces(&ids(h, x.state(c[0]))), abelian_text(a))?;
            }
            out
        }
        _ => pretty(&json!({
            "f_vector": x.f_vector(),
            "dimension": x.dimension(),
            "components": components.len(),
            "euler": x.euler(),
            "glides": glides,
            "h1": groups.iter().map(AbelianOut::from).collect::<Vec<_>>(),
        })),
    })
}

fn report_json(r: &NpcReport) -> Value {
    json!({
        "square": r.square,
        "three_cube": r.three_cube,
        "regular": r.regular,
        "simple": r.simple,
        "flag": r.flag,
        "combinatorial": r.combinatorial(),
        "geometric": r.geometric(),
        "npc": r.npc(),
    })
}

fn cmd_check_npc(ctx: &Ctx, states: Option<&Path>) -> anyhow::Result<String> {
    ctx.no_dot()?;
    let report = match states {
        Some(path) => {
            let file: StatesFile = load(path)?;
            let index = |name: &String| {
                file.edges
                    .iter()
                    .position(|e| e == name)
                    .ok_or_else(|| Error::UnknownId { kind: "edge", id: name.clone() })
            };
            let n = file.edges.len();
            let set = |names: &Vec<String>| -> Result<EdgeSet, Error> {
                Ok(EdgeSet::from_indices(n, names.iter().map(index).collect::<Result<Vec<_>, _>>()?))
            };
            let glides = file.glides.iter().map(set).collect::<Result<Vec<_>, _>>()?;
            let sys = match &file.independent {
                Some(pairs) => GlidingSystem::new(n, glides, pairs.iter().map(|p| (p[0], p[1])))?,
                None => GlidingSystem::disjointness(n, glides)?,
            };
            let states = StateSet::new(file.states.iter().map(set).collect::<Result<Vec<_>, _>>()?);
            npc_verdict(&sys, &states, ctx.opts.limits)?
        }
        None => {
            let model = ctx.model()?;
            npc_verdict(model.system(), model.complex().states(), ctx.opts.limits)?
        }
    };
    Ok(match ctx.global.format {
        Format::Text => {
            let mut out = String::new();
            for (k, v) in [
                ("square", report.square),
                ("3-cube", report.three_cube),
                ("regular", report.regular),
                ("simple", report.simple),
                ("flag", report.flag),
                ("nonpositively curved", report.npc()),
            ] {
                writeln!(out, "{k}: {}", if v { "yes" } else { "no" })?;
            }
            out
        }
        _ => pretty(&report_json(&report)),
    })
}

fn cmd_present(ctx: &Ctx, basepoint: Option<&str>, groupoid: bool) -> anyhow::Result<String> {
    ctx.no_dot()?;
    let model = ctx.model()?;
    let a0 = match basepoint {
        Some(b) => covering_arg(&model, b)?,
        None => 0,
    };
    let full = dimer_presentation(&model, a0, groupoid)?;
    let reduced = tietze_reduce(&full);
    let ab = abelianization(&reduced);
    let base = ids(model.graph(), model.covering(a0));
    Ok(match ctx.global.format {
        Format::Text => {
            let mut out = format!("basepoint: {}\n", braces(&base));
            out.push_str(&reduced.to_text());
            writeln!(out, "abelianization: {}", abelian_text(&ab))?;
            out
        }
        _ => {
            let p: Value = serde_json::from_str(&reduced.to_json())?;
            pretty(&json!({
                "basepoint": base,
                "groupoid": groupoid,
                "unreduced": { "generators": full.generators.len(), "relators": full.relators.len() },
                "presentation": p,
                "abelianization": AbelianOut::from(&ab),
            }))
        }
    })
}

fn cmd_hull(ctx: &Ctx, a: &str, b: &str) -> anyhow::Result<String> {
    ctx.no_dot()?;
    let model = ctx.model()?;
    let (ia, ib) = (covering_arg(&model, a)?, covering_arg(&model, b)?);
    let id = model.hull(ia, ib)?;
    let x = model.complex();
    let h = model.graph();
    let cube = x.cube(id);
    let base = ids(h, x.state(cube.base));
    let glides: Vec<Vec<String>> = cube
        .glides
        .iter()
        .map(|&g| ids(h, x.system().glide(g)))
        .collect();
    let vertices: Vec<Vec<String>> = x.vertices_of(id).iter().map(|v| ids(h, v)).collect();
    Ok(match ctx.global.format {
        Format::Text => {
            let mut out = format!("dimension: {}\nbase: {}\n", id.dim, braces(&base));
            for g in &glides {
                writeln!(out, "glide: {}", braces(g))?;
            }
            out
        }
        _ => pretty(&json!({
            "dimension": id.dim,
            "base": base,
            "glides": glides,
            "vertices": vertices,
        })),
    })
}

fn cmd_braid(
    ctx: &Ctx,
    loop_file: &Path,
    vhalves: Option<&Path>,
    subdivide: Option<&str>,
) -> anyhow::Result<String> {
    ctx.no_dot()?;
    let model = ctx.model()?;
    let lp = load::<LoopFile>(loop_file)?.resolve(&model)?;
    let vo = match vhalves {
        Some(p) => load::<VHalvesFile>(p)?.resolve(&model)?,
        None => VOrientation::canonical(&model),
    };
    let perm = match subdivide {
        Some(spec) => {
            let profile = SubdivisionProfile::parse(spec)?;
            theta_n_permutation(&model, &lp, &profile, &vo, ctx.opts)?
        }
        None => braid_permutation(&model, &lp, &vo)?,
    };
    Ok(match ctx.global.format {
        Format::Text => format!("{}\n", perm.one_line()),
        _ => pretty(&json!({
            "marks": perm.len(),
            "one_line": perm.one_line(),
            "cycles": perm.cycle_notation(),
            "images": perm.0,
            "identity": perm.is_identity(),
        })),
    })
}

fn cmd_components(ctx: &Ctx) -> anyhow::Result<String> {
    ctx.no_dot()?;
    let model = ctx.model()?;
    let comps = labeling_components(&model, ctx.opts)?;
    let summaries: Vec<_> = comps
        .iter()
        .map(|c| c.summary(model.graph(), model.cycles()))
        .collect();
    Ok(match ctx.global.format {
        Format::Text => {
            let mut out = format!("components: {}\n", summaries.len());
            for s in &summaries {
                let odd: Vec<String> = s.odd_cycles.iter().map(|c| braces(c)).collect();
                let f: Vec<String> = s.f_vector.iter().map(ToString::to_string).collect();
                writeln!(
                    out,
                    "odd cycles [{}]: {} coverings, f-vector ({})",
                    odd.join(" "),
                    s.coverings,
                    f.join(",")
                )?;
            }
            out
        }
        _ => pretty(&json!({ "count": summaries.len(), "components": summaries })),
    })
}

fn cmd_mu(
    ctx: &Ctx,
    loop_file: Option<&Path>,
    halves: Option<&Path>,
    loops: usize,
    steps: usize,
) -> anyhow::Result<String> {
    ctx.no_dot()?;
    let model = ctx.model()?;
    let o = match halves {
        Some(p) => load::<HalvesFile>(p)?.resolve(&model)?,
        None => Orientation::canonical(&model),
    };
    let paths: Vec<GlideLoop> = match loop_file {
        Some(p) => vec![load::<LoopFile>(p)?.resolve(&model)?],
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.global.seed);
            (0..loops)
                .map_while(|_| random_loop(&model, &mut rng, steps))
                .collect()
        }
    };
    let gr = glide_raag(&model);
    let er = edge_raag(&model);
    let mut records = Vec::new();
    let mut text = String::new();
    for lp in &paths {
        let w = typing_word(&model, lp, &o)?;
        let u = u_word(&model, &w, &o)?;
        let nf = er.normal_form(&u)?;
        let identity = nf.is_empty();
        let word = display(&w, gr.names()).to_string();
        let image = display(&u, er.names()).to_string();
        let normal = display(&nf, er.names()).to_string();
        writeln!(text, "mu = {word}")?;
        writeln!(text, "u(mu) = {image}")?;
        writeln!(text, "normal form = {normal} ({})", if identity { "identity" } else { "not identity" })?;
        records.push(json!({
            "loop": LoopFile::from_loop(&model, lp),
            "mu": word,
            "u": image,
            "normal_form": normal,
            "identity": identity,
        }));
    }
    let glides: Vec<Vec<String>> = model
        .glides()
        .iter()
        .map(|d| ids(model.graph(), d.cycle.edges()))
        .collect();
    Ok(match ctx.global.format {
        Format::Text => text,
        _ => pretty(&json!({ "glides": glides, "loops": records })),
    })
}

fn run(cli: Cli) -> anyhow::Result<String> {
    if let Some(j) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j as usize)
            .build_global()
            .context("configuring worker threads")?;
    }
    let mut limits = Limits::default();
    if let Some(c) = cli.global.max_cubes {
        limits.max_cubes = c as usize;
    }
    if let Some(c) = cli.global.max_cycles {
        limits.max_cycles = c as usize;
    }
    let ctx = Ctx {
        global: cli.global,
        opts: BuildOptions { max_dim: None, limits },
    };
    match &cli.command {
        Command::Dimers => cmd_dimers(&ctx),
        Command::Complex => cmd_complex(&ctx),
        Command::CheckNpc { states } => cmd_check_npc(&ctx, states.as_deref()),
        Command::Present { basepoint, groupoid } => cmd_present(&ctx, basepoint.as_deref(), *groupoid),
        Command::Hull { a, b } => cmd_hull(&ctx, a, b),
        Command::Braid { loop_file, vhalves, subdivide } => {
            cmd_braid(&ctx, loop_file, vhalves.as_deref(), subdivide.as_deref())
        }
        Command::Components => cmd_components(&ctx),
        Command::Mu { loop_file, halves, loops, steps } => {
            cmd_mu(&ctx, loop_file.as_deref(), halves.as_deref(), *loops, *steps)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(err) if err.is_budget() => ExitCode::from(3),
                Some(Error::Inconsistent(_)) => ExitCode::from(1),
                Some(_) => ExitCode::from(2),
                None => ExitCode::from(1),
            }
        }
    }
}
