//! `extracover`: build, verify and report on 4-cycle-free covers of
//! Cartesian powers of cycles and of hypercubes.
//!
//! Exit codes: 0 when every check passes, 1 on a certificate failure, 2 on
//! a usage or parameter error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use extracover::certify::{certify_extraspecial, certify_heisenberg, to_sorted_json};
use extracover::convolution::{
    convolve, hypercube_operator, lift, twisted_convolve, twisted_hypercube_operator, GroupFunction,
};
use extracover::cover::{
    build_cover, cohen_tits_signing, heisenberg_cover, induced_odd_cover, CoveringMap,
};
use extracover::gain::{cover_from_gain, degree_bound_search, gain_for_dims, twisted_adjacency};
use extracover::graph::{cayley, Graph};
use extracover::groups::{HeisenbergGroup, VectorGroup};
use extracover::spectral::{
    hermitian_eigenvalues, round_sig12, symmetric_eigenvalues, HermitianMatrix, SpectrumReport,
    MAX_ORDER,
};
use extracover::{Error, GroupSign, Prime};

/// Largest `d` accepted by `convolve-check`.
const MAX_CONVOLVE_D: usize = 6;

#[derive(Parser)]
#[command(
    name = "extracover",
    version,
    about = "4-cycle-free covers from extraspecial groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write total and base edge lists and the fiber map.
    Build(Flags),
    /// Certify fold, 4-cycle freeness, p-cycles and the connection-set checks.
    Verify(Flags),
    /// Interlacing degree bounds for induced subgraphs of C_p^dims.
    Bound(Flags),
    /// Adjacency spectrum of a cover, or twisted spectra of its base.
    Spectrum(Flags),
    /// Export the Z_p gain graph and check its derived cover.
    Gain(Flags),
    /// Check the twisted convolution identities on Z_2^d.
    ConvolveCheck(Flags),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Edges,
    Json,
}

#[derive(clap::Args)]
struct Flags {
    /// Odd prime.
    #[arg(long)]
    p: Option<u32>,
    /// Half-dimension: the cover of C_p^{2d}, or Q_d with --heisenberg.
    #[arg(long)]
    d: Option<usize>,
    /// Base dimension m of C_p^m; odd m uses the induced cover.
    #[arg(long)]
    dims: Option<usize>,
    #[arg(long, value_enum, default_value = "both")]
    sign: SignArg,
    /// Twist k in 0..p; repeat or separate by commas. Default: all of 1..p.
    #[arg(long, value_delimiter = ',')]
    twist: Vec<u32>,
    /// Use the Heisenberg cover of the hypercube Q_d.
    #[arg(long)]
    heisenberg: bool,
    /// Also compute the girth.
    #[arg(long)]
    girth: bool,
    /// Write files here instead of printing to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// Which cover a command acts on, validated.
#[derive(Clone, Copy)]
enum Target {
    Extraspecial {
        p: Prime,
        d: usize,
        /// Restrict to the induced cover of `C_p^{2d-1}`.
        induced: bool,
    },
    Heisenberg {
        d: usize,
    },
}

#[derive(Clone)]
struct RunConfig {
    target: Target,
    signs: Vec<GroupSign>,
    twists: Vec<u32>,
    girth: bool,
    out: Option<PathBuf>,
    format: Option<Format>,
}

impl RunConfig {
    fn from_flags(f: &Flags) -> CliResult<Self> {
        let target = if f.heisenberg {
            let d =
                f.d.or(f.dims)
                    .ok_or_else(|| usage("--heisenberg needs --d"))?;
            if d == 0 {
                return Err(Error::ZeroDimension.into());
            }
            Target::Heisenberg { d }
        } else {
            let p = Prime::odd(f.p.ok_or_else(|| usage("--p is required"))?)?;
            let (d, induced) = match (f.d, f.dims) {
                (Some(_), Some(_)) => return Err(usage("give only one of --d and --dims")),
                (Some(d), None) => (d, false),
                (None, Some(m)) => (m.div_ceil(2), m % 2 == 1),
                (None, None) => return Err(usage("--d or --dims is required")),
            };
            if d == 0 {
                return Err(Error::ZeroDimension.into());
            }
            Target::Extraspecial { p, d, induced }
        };
        let signs = match f.sign {
            SignArg::Plus => vec![GroupSign::Plus],
            SignArg::Minus => vec![GroupSign::Minus],
            SignArg::Both => GroupSign::BOTH.to_vec(),
        };
        Ok(RunConfig {
            target,
            signs,
            twists: f.twist.clone(),
            girth: f.girth,
            out: f.out.clone(),
            format: f.format,
        })
    }

    fn extraspecial(&self) -> CliResult<(Prime, usize, bool)> {
        match self.target {
            Target::Extraspecial { p, d, induced } => Ok((p, d, induced)),
            Target::Heisenberg { .. } => Err(usage("this command needs --p, not --heisenberg")),
        }
    }

    /// Base dimension `m` of `C_p^m`.
    fn dims(&self) -> usize {
        match self.target {
            Target::Extraspecial { d, induced, .. } => 2 * d - usize::from(induced),
            Target::Heisenberg { d } => d,
        }
    }
}

fn usage(msg: &str) -> CliError {
    CliError::Usage(msg.to_owned())
}

/// Writes `content` to `dir/name`, or to stdout when there is no directory.
fn emit(out: Option<&Path>, name: &str, content: &str) -> CliResult<()> {
    match out {
        Some(dir) => {
            let path = dir.join(name);
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent)?;
            }
            fs::write(path, content)?;
        }
        None => io::stdout().lock().write_all(content.as_bytes())?,
    }
    Ok(())
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<Value> = g.edges().map(|(u, v)| json!([u, v])).collect();
    json!({ "n": g.n(), "m": g.edge_count(), "edges": edges })
}

fn cover_json(cm: &CoveringMap) -> Value {
    json!({
        "total": graph_json(&cm.total),
        "base": graph_json(&cm.base),
        "gamma": cm.gamma,
    })
}

/// Covers named for output: `("plus", cover)`, or `("heisenberg", cover)`.
fn covers(cfg: &RunConfig) -> CliResult<Vec<(String, CoveringMap)>> {
    match cfg.target {
        Target::Heisenberg { d } => Ok(vec![("heisenberg".to_owned(), heisenberg_cover(d)?)]),
        Target::Extraspecial { p, d, induced } => cfg
            .signs
            .iter()
            .map(|&sign| {
                let cm = if induced {
                    induced_odd_cover(p, d, sign)?
                } else {
                    build_cover(p, d, sign)?
                };
                Ok((sign.name().to_owned(), cm))
            })
            .collect(),
    }
}

fn cmd_build(cfg: &RunConfig) -> CliResult<bool> {
    let covers = covers(cfg)?;
    let format = cfg.format.unwrap_or(Format::Edges);
    let out = cfg.out.as_deref();
    match format {
        Format::Json => {
            let doc: Map<String, Value> = covers
                .iter()
                .map(|(name, cm)| (name.clone(), cover_json(cm)))
                .collect();
            emit(out, "covers.json", &to_sorted_json(&doc))?;
        }
        Format::Edges if out.is_none() => {
            if covers.len() != 1 {
                return Err(usage("--sign both needs --out or --format json"));
            }
            emit(None, "", &covers[0].1.total.to_edge_list())?;
        }
        Format::Edges => {
            let nested = covers.len() > 1;
            for (name, cm) in &covers {
                let prefix = if nested {
                    format!("{name}/")
                } else {
                    String::new()
                };
                emit(
                    out,
                    &format!("{prefix}total.edges"),
                    &cm.total.to_edge_list(),
                )?;
                emit(out, &format!("{prefix}base.edges"), &cm.base.to_edge_list())?;
                emit(out, &format!("{prefix}fibers.txt"), &cm.fiber_map_text())?;
            }
        }
    }
    Ok(true)
}

fn cmd_verify(cfg: &RunConfig) -> CliResult<bool> {
    let reports = match cfg.target {
        Target::Heisenberg { d } => vec![certify_heisenberg(d, cfg.girth)?],
        Target::Extraspecial { p, d, induced } => cfg
            .signs
            .iter()
            .map(|&sign| certify_extraspecial(p, d, sign, induced, cfg.girth))
            .collect::<extracover::Result<Vec<_>>>()?,
    };
    let passed = reports.iter().all(|r| r.passed);
    let doc = json!({ "passed": passed, "reports": reports });
    emit(cfg.out.as_deref(), "report.json", &to_sorted_json(&doc))?;
    Ok(passed)
}

fn cmd_bound(cfg: &RunConfig) -> CliResult<bool> {
    let (p, _, _) = cfg.extraspecial()?;
    let twists = (!cfg.twists.is_empty()).then_some(cfg.twists.as_slice());
    let search = degree_bound_search(p, cfg.dims(), &cfg.signs, twists)?;
    let results: Vec<Value> = search
        .twists
        .iter()
        .map(|t| {
            json!({
                "sign": t.sign,
                "twist": t.twist,
                "clusters": t.spectrum.clusters,
                "thresholds": t.thresholds,
            })
        })
        .collect();
    let doc = json!({
        "p": search.p,
        "dims": search.dims,
        "n": search.n,
        "results": results,
        "best": search.best,
    });
    emit(cfg.out.as_deref(), "bound.json", &to_sorted_json(&doc))?;
    Ok(true)
}

fn adjacency_spectrum(g: &Graph, source: &str) -> CliResult<SpectrumReport> {
    if g.n() > MAX_ORDER {
        return Err(Error::SizeLimit {
            size: g.n() as u128,
            limit: MAX_ORDER as u128,
        }
        .into());
    }
    let ev = symmetric_eigenvalues(g.n(), &g.adjacency_matrix())?;
    Ok(SpectrumReport::from_eigenvalues(ev, source))
}

fn cmd_spectrum(cfg: &RunConfig) -> CliResult<bool> {
    let mut doc = Map::new();
    match cfg.target {
        Target::Heisenberg { d } => {
            let cm = heisenberg_cover(d)?;
            doc.insert(
                "cover".into(),
                json!(adjacency_spectrum(&cm.total, "cover adjacency")?),
            );
            let a = cohen_tits_signing(d)?;
            let signed = hermitian_eigenvalues(&HermitianMatrix::from_real(a.n(), &a.to_f64())?)?;
            doc.insert("signed_base".into(), json!(signed));
        }
        Target::Extraspecial { p, .. } => {
            for &sign in &cfg.signs {
                let entry = if cfg.twists.is_empty() {
                    let cm = covers(&RunConfig {
                        signs: vec![sign],
                        ..cfg.clone()
                    })?;
                    json!({ "cover": adjacency_spectrum(&cm[0].1.total, "cover adjacency")? })
                } else {
                    let gg = gain_for_dims(p, cfg.dims(), sign)?;
                    let mut twisted = Map::new();
                    for &k in &cfg.twists {
                        if k >= p.get() {
                            return Err(usage(&format!("twist {k} not in [0, {p})")));
                        }
                        let report = hermitian_eigenvalues(&twisted_adjacency(&gg, k))?;
                        twisted.insert(k.to_string(), json!(report));
                    }
                    json!({ "twisted": twisted })
                };
                doc.insert(sign.name().into(), entry);
            }
        }
    }
    emit(cfg.out.as_deref(), "spectrum.json", &to_sorted_json(&doc))?;
    Ok(true)
}

fn cmd_gain(cfg: &RunConfig) -> CliResult<bool> {
    let (p, d, induced) = cfg.extraspecial()?;
    let format = cfg.format.unwrap_or(Format::Json);
    if format == Format::Edges && cfg.out.is_none() && cfg.signs.len() > 1 {
        return Err(usage("--sign both needs --out or --format json"));
    }
    let mut doc = Map::new();
    let mut passed = true;
    for &sign in &cfg.signs {
        let gg = gain_for_dims(p, cfg.dims(), sign)?;
        let expected = if induced {
            induced_odd_cover(p, d, sign)?
        } else {
            build_cover(p, d, sign)?
        };
        let matches = cover_from_gain(&gg) == expected;
        passed &= matches;
        let arcs: Vec<(usize, usize, u32)> = gg
            .arcs()
            .filter(|&(u, v, _)| u < v)
            .map(|(u, v, g)| (u, v, g.value()))
            .collect();
        match format {
            Format::Edges => {
                let mut text = format!("{} {}\n", gg.base().n(), arcs.len());
                for (u, v, g) in &arcs {
                    text.push_str(&format!("{u} {v} {g}\n"));
                }
                emit(cfg.out.as_deref(), &format!("{}.gain", sign.name()), &text)?;
            }
            Format::Json => {
                doc.insert(
                    sign.name().into(),
                    json!({
                        "n": gg.base().n(),
                        "p": p.get(),
                        "arcs": arcs,
                        "cover_matches_cayley": matches,
                    }),
                );
            }
        }
    }
    if format == Format::Json {
        doc.insert("passed".into(), json!(passed));
        emit(cfg.out.as_deref(), "gain.json", &to_sorted_json(&doc))?;
    }
    Ok(passed)
}

fn cmd_convolve_check(cfg: &RunConfig) -> CliResult<bool> {
    let d = match cfg.target {
        Target::Heisenberg { d } => d,
        Target::Extraspecial {
            d, induced: false, ..
        } => d,
        _ => return Err(usage("convolve-check needs --d")),
    };
    if d > MAX_CONVOLVE_D {
        return Err(usage(&format!(
            "convolve-check supports d <= {MAX_CONVOLVE_D}"
        )));
    }
    let n = 1usize << d;
    let h = HeisenbergGroup::new(d)?;
    let mut lift_ok = true;
    for x in 0..n {
        for y in 0..n {
            let f = GroupFunction::<i64>::delta(n, x);
            let g = GroupFunction::<i64>::delta(n, y);
            let left = convolve(&h, &lift(d, &f)?, &lift(d, &g)?)?;
            // the sum over the central Z_2 counts every term twice
            let right = lift(d, &twisted_convolve(d, &f, &g)?)?.scale(2);
            lift_ok &= left == right;
        }
    }
    let cube = VectorGroup::new(Prime::new(2)?, d)?;
    let qd = cayley(&cube, &cube.standard_connection())?;
    let hypercube_ok = hypercube_operator(d)? == qd.adjacency_matrix();
    let beta = SpectrumReport::from_eigenvalues(
        symmetric_eigenvalues(n, &twisted_hypercube_operator(d)?)?,
        "twisted convolution by mu",
    );
    let signing = cohen_tits_signing(d)?;
    let huang = hermitian_eigenvalues(&HermitianMatrix::from_real(n, &signing.to_f64())?)?;
    let r = (d as f64).sqrt();
    let sqrt_d_ok = beta
        .eigenvalues
        .iter()
        .filter(|x| (*x - r).abs() < 1e-8)
        .count()
        == n / 2
        && beta
            .eigenvalues
            .iter()
            .filter(|x| (*x + r).abs() < 1e-8)
            .count()
            == n / 2;
    let agree = beta
        .eigenvalues
        .iter()
        .zip(&huang.eigenvalues)
        .all(|(a, b)| (a - b).abs() <= 1e-9);
    let checks = json!({
        "lift_intertwines_on_deltas": lift_ok,
        "mu_convolution_is_hypercube_adjacency": hypercube_ok,
        "twisted_spectrum_is_plus_minus_sqrt_d": sqrt_d_ok,
        "twisted_matches_signed_hypercube": agree,
    });
    let passed = lift_ok && hypercube_ok && sqrt_d_ok && agree;
    let doc = json!({
        "d": d,
        "sqrt_d": round_sig12(r),
        "checks": checks,
        "twisted_spectrum": beta,
        "signed_hypercube_spectrum": huang,
        "passed": passed,
    });
    emit(cfg.out.as_deref(), "convolve.json", &to_sorted_json(&doc))?;
    Ok(passed)
}

fn run(cli: &Cli) -> CliResult<bool> {
    let (flags, cmd): (&Flags, fn(&RunConfig) -> CliResult<bool>) = match &cli.command {
        Command::Build(f) => (f, cmd_build),
        Command::Verify(f) => (f, cmd_verify),
        Command::Bound(f) => (f, cmd_bound),
        Command::Spectrum(f) => (f, cmd_spectrum),
        Command::Gain(f) => (f, cmd_gain),
        Command::ConvolveCheck(f) => (f, cmd_convolve_check),
    };
    let cfg = match (&cli.command, flags) {
        // convolve-check only needs d
        (Command::ConvolveCheck(_), f) if !f.heisenberg && f.p.is_none() => {
            let d = f.d.ok_or_else(|| usage("--d is required"))?;
            if d == 0 {
                return Err(Error::ZeroDimension.into());
            }
            RunConfig {
                target: Target::Heisenberg { d },
                signs: Vec::new(),
                twists: Vec::new(),
                girth: false,
                out: f.out.clone(),
                format: f.format,
            }
        }
        (_, f) => RunConfig::from_flags(f)?,
    };
    if let Some(dir) = &cfg.out {
        fs::create_dir_all(dir)?;
    }
    cmd(&cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
