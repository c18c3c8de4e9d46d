//! Command-line front end over the quiver text format.
//!
//! Every command reads one quiver file with `dim` lines and prints
//! line-oriented text. With `--machine` each line becomes `key=value`.
//! Exit codes: 0 on success, 1 when a computation is refused, 2 on bad input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::bimodule::{
    dim_vector_e, dim_vector_f, dim_vector_m, embed_representation, BimoduleError, CanonicalBimodule,
    QuiverGrassmannian,
};
use crate::cells::{check_smooth, poincare_polynomial, CellsError};
use crate::counting::{
    default_primes, degree_bound, grassmannian_polynomial, interpolate, repvariety_samples, CountSample,
    CountingError, InterpolationResult, DEFAULT_CAP,
};
use crate::exactalg::{Matrix, Rationals, Subspace};
use crate::fixedpoints::{enumerate_fixed_points, euler_characteristic};
use crate::homology::path_euler_form;
use crate::motive::{recursion_solve, repvariety_motives, MotiveError};
use crate::quiver::{parse_quiver_file, PathQuiver, Quiver, QuiverError};

#[derive(Debug, Parser)]
#[command(
    name = "qgrass",
    version,
    about = "Grassmannians of sub-bimodules over path algebras"
)]
struct Cli {
    /// `tree` claims smoothness and cells, `paths` only counts; `auto` picks
    /// `tree` when no two paths are parallel.
    #[arg(long, value_enum, default_value_t = Mode::Auto, global = true)]
    mode: Mode,
    /// Print `key=value` lines.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Auto,
    Tree,
    Paths,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sizes, dimension vectors and the expected dimension.
    Info(FileArg),
    /// Torus fixed points and the Euler characteristic.
    FixedPoints {
        #[command(flatten)]
        file: FileArg,
        /// One fixed point per line.
        #[arg(long)]
        list: bool,
    },
    /// Poincaré polynomial from the cell decomposition.
    Poincare {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Point counts over prime fields and their interpolation.
    Count {
        #[command(flatten)]
        file: FileArg,
        /// Comma-separated primes.
        #[arg(long = "q", value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        /// Count the representation variety of the path quiver with this
        /// dimension vector (one entry per path) instead.
        #[arg(long, value_delimiter = ',')]
        gdim: Option<Vec<usize>>,
    },
    /// Framed-moduli motives from the stratification recursion.
    Motive {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Smoothness certificate by Ext-vanishing at every fixed point.
    Check {
        #[command(flatten)]
        file: FileArg,
        /// List the failing fixed points.
        #[arg(long)]
        list: bool,
    },
    /// The point of the Grassmannian attached to a representation.
    Embed {
        #[command(flatten)]
        file: FileArg,
        /// Arrow matrices, one `map <arrow-id> <rows> <cols> <entries…>` per line.
        #[arg(long)]
        rep: PathBuf,
    },
}

#[derive(Debug, Args)]
struct FileArg {
    /// Quiver file with `dim` lines.
    file: PathBuf,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Refused(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Refused(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Refused(m) => m,
        }
    }
}

impl From<QuiverError> for CliError {
    fn from(e: QuiverError) -> Self {
        CliError::Input(format!("quiver: {e}"))
    }
}

impl From<BimoduleError> for CliError {
    fn from(e: BimoduleError) -> Self {
        match e {
            BimoduleError::ParallelPathsUnsupported => CliError::Refused(format!("bimodule: {e}")),
            _ => CliError::Input(format!("bimodule: {e}")),
        }
    }
}

impl From<CellsError> for CliError {
    fn from(e: CellsError) -> Self {
        CliError::Refused(format!("cells: {e}"))
    }
}

impl From<CountingError> for CliError {
    fn from(e: CountingError) -> Self {
        match e {
            CountingError::EnumerationTooLarge { .. } | CountingError::Overflow => {
                CliError::Refused(format!("counting: {e}"))
            }
            _ => CliError::Input(format!("counting: {e}")),
        }
    }
}

impl From<MotiveError> for CliError {
    fn from(e: MotiveError) -> Self {
        match e {
            MotiveError::Counting(c) => c.into(),
            MotiveError::DimensionMismatch { .. } => CliError::Input(format!("motive: {e}")),
            _ => CliError::Refused(format!("motive: {e}")),
        }
    }
}

/// Output lines with a human and a machine rendering.
#[derive(Default)]
struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        let value = value.to_string();
        self.lines.push((
            format!("{key}: {value}"),
            format!("{}={value}", key.replace(' ', "_")),
        ));
    }

    fn line(&mut self, human: String, machine: String) {
        self.lines.push((human, machine));
    }

    fn render(&self, machine: bool) -> String {
        let mut out = String::new();
        for (h, m) in &self.lines {
            writeln!(out, "{}", if machine { m } else { h }).unwrap();
        }
        out
    }
}

fn tuple<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("({})", parts.join(","))
}

struct Input {
    quiver: Quiver,
    pq: PathQuiver,
    dims: Vec<usize>,
    tree: bool,
}

fn load(path: &PathBuf, mode: Mode) -> Result<Input, CliError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file = parse_quiver_file(&raw)?;
    let dims = file.dims()?;
    let parallel = file.quiver.has_parallel_paths();
    let tree = match mode {
        Mode::Auto => !parallel,
        Mode::Tree if parallel => {
            return Err(CliError::Input(
                "--mode tree needs a quiver without parallel paths".into(),
            ))
        }
        Mode::Tree => true,
        Mode::Paths => false,
    };
    let pq = PathQuiver::build(&file.quiver);
    Ok(Input {
        quiver: file.quiver,
        pq,
        dims,
        tree,
    })
}

impl Input {
    fn grassmannian(&self) -> Result<QuiverGrassmannian, CliError> {
        Ok(QuiverGrassmannian::of_bimodule(&self.pq, &self.dims)?)
    }

    fn require_tree(&self, what: &str) -> Result<(), CliError> {
        if self.tree {
            Ok(())
        } else {
            Err(CliError::Refused(format!("{what}: not available in paths mode")))
        }
    }
}

/// Runs one invocation, writing to `out` and `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.machine).as_bytes());
            0
        }
        Err((partial, e)) => {
            let _ = out.write_all(partial.render(cli.machine).as_bytes());
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}

type Outcome = Result<Report, (Report, CliError)>;

fn bare(e: impl Into<CliError>) -> (Report, CliError) {
    (Report::default(), e.into())
}

fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Info(f) => info(&load(&f.file, cli.mode).map_err(bare)?),
        Command::FixedPoints { file, list } => {
            fixed_points(&load(&file.file, cli.mode).map_err(bare)?, *list)
        }
        Command::Poincare { file, seed } => poincare(&load(&file.file, cli.mode).map_err(bare)?, *seed),
        Command::Count {
            file,
            primes,
            cap,
            gdim,
        } => count(
            &load(&file.file, cli.mode).map_err(bare)?,
            primes.as_deref(),
            *cap,
            gdim.as_deref(),
        ),
        Command::Motive { file, cap } => motive(&load(&file.file, cli.mode).map_err(bare)?, *cap),
        Command::Check { file, list } => check(&load(&file.file, cli.mode).map_err(bare)?, *list),
        Command::Embed { file, rep } => embed(&load(&file.file, cli.mode).map_err(bare)?, rep),
    }
}

fn info(input: &Input) -> Outcome {
    let pq = &input.pq;
    let mut r = Report::default();
    r.kv("vertices", input.quiver.vertex_count());
    r.kv("arrows", input.quiver.arrows().len());
    r.kv("paths", pq.vertex_count());
    r.kv(
        "parallel paths",
        if pq.has_parallel_paths() { "yes" } else { "no" },
    );
    r.kv("mode", if input.tree { "tree" } else { "paths" });
    let names: Vec<String> = (0..pq.vertex_count())
        .map(|v| pq.bound().name(v).to_string())
        .collect();
    r.kv("path order", names.join(" "));
    let f = dim_vector_f(pq, &input.dims);
    let e = dim_vector_e(pq, &input.dims);
    r.line(format!("f = {}", tuple(&f)), format!("f={}", tuple(&f)));
    r.line(format!("e = {}", tuple(&e)), format!("e={}", tuple(&e)));
    if input.tree {
        let d = path_euler_form(pq, &e, &f).map_err(|e| bare(CliError::Refused(format!("homology: {e}"))))?;
        r.line(format!("dim X = {d}"), format!("dim_X={d}"));
    }
    let m = dim_vector_m(pq, &input.dims);
    r.line(format!("dim M = {}", tuple(&m)), format!("dim_M={}", tuple(&m)));
    Ok(r)
}

fn fixed_points(input: &Input, list: bool) -> Outcome {
    let gr = input.grassmannian().map_err(bare)?;
    let mut r = Report::default();
    if list {
        let points = enumerate_fixed_points(&gr);
        r.kv("fixed points", points.len());
        for fp in &points {
            let s = fp.render(&gr);
            r.line(s.clone(), format!("point={s}"));
        }
    } else {
        r.kv("fixed points", euler_characteristic(&gr));
    }
    Ok(r)
}

fn poincare(input: &Input, seed: u64) -> Outcome {
    input.require_tree("poincare").map_err(bare)?;
    let gr = input.grassmannian().map_err(bare)?;
    let p = poincare_polynomial(&gr, seed).map_err(bare)?;
    let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    let mut r = Report::default();
    r.kv("coefficients", coeffs.join(" "));
    r.kv("poincare", p.render("q"));
    Ok(r)
}

/// A failed fit below the ambient dimension only says more primes are needed.
fn count_table(
    r: &mut Report,
    samples: &[CountSample],
    ambient: usize,
    fit: Result<InterpolationResult, CountingError>,
) -> Result<(), CliError> {
    r.line("q\tcount".into(), "columns=q,count".into());
    for s in samples {
        r.line(
            format!("{}\t{}", s.q, s.count),
            format!("count_{}={}", s.q, s.count),
        );
    }
    match fit {
        Ok(fit) => {
            r.kv("degree bound", fit.degree_bound);
            r.kv("polynomial", fit.polynomial.render("q"));
            Ok(())
        }
        Err(e @ CountingError::NotPolynomialCount { degree_bound, .. }) => {
            if degree_bound < ambient {
                r.kv(
                    "inconclusive",
                    format!("{e}; the ambient dimension is {ambient}, pass more primes"),
                );
            } else {
                r.kv("not polynomial count", e);
            }
            Ok(())
        }
        Err(e) => Err(e.into()),
    }
}

fn count(input: &Input, primes: Option<&[u64]>, cap: u64, gdim: Option<&[usize]>) -> Outcome {
    let mut r = Report::default();
    let (samples, ambient, fit) = match gdim {
        None => {
            let gr = input.grassmannian().map_err(bare)?;
            r.kv("target", "grassmannian");
            let (samples, fit) = grassmannian_polynomial(&gr, primes, cap).map_err(bare)?;
            (samples, gr.ambient_dimension(), fit)
        }
        Some(g) => {
            let quiver = input.pq.bound();
            if g.len() != quiver.vertex_count() {
                return Err(bare(CliError::Input(format!(
                    "--gdim needs {} entries, one per path",
                    quiver.vertex_count()
                ))));
            }
            r.kv("target", format!("representations {}", tuple(g)));
            let ambient = quiver.arrows().iter().map(|a| g[a.source] * g[a.target]).sum();
            let bound = degree_bound(ambient, primes);
            let primes = primes.map_or_else(|| default_primes(bound), <[u64]>::to_vec);
            let samples = repvariety_samples(quiver, g, &primes, cap).map_err(bare)?;
            let fit = interpolate(&samples, bound);
            (samples, ambient, fit)
        }
    };
    count_table(&mut r, &samples, ambient, fit).map_err(|e| (Report::default(), e))?;
    Ok(r)
}

fn motive(input: &Input, cap: u64) -> Outcome {
    input.require_tree("motive").map_err(bare)?;
    let rv = repvariety_motives(&input.pq, &input.dims, cap).map_err(bare)?;
    let table = recursion_solve(&input.pq, &input.dims, &rv).map_err(bare)?;
    let mut r = Report::default();
    for (g, m) in table.entries() {
        let top = g.as_slice() == table.top();
        let flag = if top { "  [top]" } else { "" };
        r.line(
            format!("{} : {}{flag}", tuple(g), m.render("L")),
            format!(
                "{}{}={}",
                if top { "top" } else { "entry" },
                tuple(g),
                m.render("L")
            ),
        );
    }
    Ok(r)
}

fn check(input: &Input, list: bool) -> Outcome {
    input.require_tree("check").map_err(bare)?;
    let gr = input.grassmannian().map_err(bare)?;
    let report = check_smooth(&gr).map_err(bare)?;
    let mut r = Report::default();
    r.kv("fixed points", report.fixed_points);
    r.kv("self ext1", report.self_ext1);
    if report.points_certified() {
        r.line(
            format!(
                "smooth: certified at {} support vertices, tangent dim {}",
                report.support_vertices, report.expected_dimension
            ),
            format!(
                "smooth=certified {} {}",
                report.support_vertices, report.expected_dimension
            ),
        );
        return Ok(r);
    }
    if list {
        let points = enumerate_fixed_points(&gr);
        for v in &report.violations {
            let ext = &v.ext;
            let s = points[v.fixed_point].render(&gr);
            r.line(
                format!("violation: {s} ext = ({},{},{})", ext.hom, ext.ext1, ext.ext2),
                format!("violation={s} ext=({},{},{})", ext.hom, ext.ext1, ext.ext2),
            );
        }
    }
    let msg = format!(
        "smoothness not certified: {} of {} fixed points fail, expected tangent dim {}",
        report.violations.len(),
        report.fixed_points,
        report.expected_dimension
    );
    Err((r, CliError::Refused(msg)))
}

fn parse_rational(token: &str) -> Option<BigRational> {
    token.parse::<BigRational>().ok()
}

/// Reads `map` lines; arrows without a line get the zero matrix.
fn parse_rep(raw: &str, quiver: &Quiver, dims: &[usize]) -> Result<Vec<Matrix<Rationals>>, CliError> {
    let q = Rationals;
    let mut maps: Vec<Option<Matrix<Rationals>>> = vec![None; quiver.arrows().len()];
    for (lineno, line) in raw.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let bad = |m: String| CliError::Input(format!("rep line {}: {m}", lineno + 1));
        if tokens[0] != "map" || tokens.len() < 4 {
            return Err(bad("expected `map <arrow-id> <rows> <cols> <entries…>`".into()));
        }
        let ai = quiver
            .arrow_index(tokens[1])
            .ok_or_else(|| bad(format!("unknown arrow `{}`", tokens[1])))?;
        let (rows, cols) = match (tokens[2].parse::<usize>(), tokens[3].parse::<usize>()) {
            (Ok(r), Ok(c)) => (r, c),
            _ => return Err(bad("rows and cols must be nonnegative integers".into())),
        };
        let a = &quiver.arrows()[ai];
        if rows != dims[a.target] || cols != dims[a.source] {
            return Err(bad(format!(
                "arrow `{}` needs a {}x{} matrix",
                a.id, dims[a.target], dims[a.source]
            )));
        }
        let entries = &tokens[4..];
        if entries.len() != rows * cols {
            return Err(bad(format!(
                "expected {} entries, found {}",
                rows * cols,
                entries.len()
            )));
        }
        let values = entries
            .iter()
            .map(|t| parse_rational(t).ok_or_else(|| bad(format!("`{t}` is not a rational number"))))
            .collect::<Result<Vec<_>, _>>()?;
        if maps[ai].is_some() {
            return Err(bad(format!("arrow `{}` given twice", a.id)));
        }
        maps[ai] = Some(Matrix::from_fn(&q, rows, cols, |i, j| {
            values[i * cols + j].clone()
        }));
    }
    Ok(maps
        .into_iter()
        .zip(quiver.arrows())
        .map(|(m, a)| m.unwrap_or_else(|| Matrix::zeros(&q, dims[a.target], dims[a.source])))
        .collect())
}

fn render_span(s: &Subspace<Rationals>) -> String {
    let vectors: Vec<String> = s.basis().iter().map(|v| tuple(v)).collect();
    format!("span{{{}}}", vectors.join(", "))
}

fn embed(input: &Input, rep_path: &PathBuf) -> Outcome {
    let raw = std::fs::read_to_string(rep_path).map_err(|e| {
        bare(CliError::Input(format!(
            "cannot read {}: {e}",
            rep_path.display()
        )))
    })?;
    let maps = parse_rep(&raw, &input.quiver, &input.dims).map_err(bare)?;
    let q = Rationals;
    let cb = CanonicalBimodule::build(&input.pq, &input.dims).map_err(bare)?;
    let point = embed_representation(&input.pq, &cb, &q, &maps).map_err(bare)?;
    let e = dim_vector_e(&input.pq, &input.dims);
    let m = cb.rep().representation(&q);
    point.validate(input.pq.bound(), &m, &e).map_err(bare)?;
    let mut r = Report::default();
    r.kv("point", "valid");
    r.line(format!("e = {}", tuple(&e)), format!("e={}", tuple(&e)));
    for v in (0..input.pq.vertex_count()).filter(|&v| e[v] > 0) {
        let name = input.pq.bound().name(v);
        let s = render_span(point.space(v));
        r.line(format!("{name}: {s}"), format!("space_{name}={s}"));
    }
    Ok(r)
}
