//! File formats and the `tmlab` command-line driver for `tmlab-core`.
//!
//! [`run`] is the whole program behind a function so tests can drive it
//! without spawning a process. Exit codes: [`EXIT_OK`], [`EXIT_INCOMPLETE`],
//! [`EXIT_INVALID`], [`EXIT_CAP`].

mod error;
pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde::Serialize;
use tmlab_core::ineq::{
    all_families, balanced_biclique_inequalities, basic_inequalities, is_valid, lifted_family,
    Validity,
};
use tmlab_core::polylab::{
    check_complete_description, face_dimension, polytope_dimension, polytope_hull, vertices,
};
use tmlab_core::separation::separate;
use tmlab_core::totalmatch::{
    alpha, enumerate_total_matchings, maximum_total_matching, nu, tau, Method,
};
use tmlab_core::{Graph, Limits, LinearInequality, Rational};

pub use error::{CliError, EXIT_CAP, EXIT_INCOMPLETE, EXIT_INVALID, EXIT_OK};
use format::{describe, format_inequality, format_point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Maximum total matching and the parameters alpha, nu, tau.
    Solve,
    /// Every total matching.
    Enumerate,
    /// Write an inequality family.
    Ineq,
    /// Validity, face dimension and facet status of each inequality.
    Facet,
    /// Facets of the total matching polytope.
    Hull,
    /// Vertices of the polyhedron given by an inequality file.
    Vertices,
    /// Compare the known families with the facets.
    Check,
    /// Violated family members at a point.
    Separate,
    /// Check nu_T >= max(alpha, nu) and tau <= nu_T.
    Bounds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    /// Vertex stars, edge inequalities and nonnegativity.
    Basic,
    /// Balanced biclique inequalities.
    Biclique,
    /// Lifted non-balanced biclique inequalities.
    Lifted,
    /// Basic, balanced up to --max-side, and lifted.
    All,
}

/// Verification laboratory for the total matching polytope.
#[derive(Debug, Parser)]
#[command(name = "tmlab", version)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Graph file: `n m` then one `u v` line per edge.
    #[arg(long, value_name = "PATH")]
    pub graph: PathBuf,
    /// Inequality family for `ineq`, or an override for `check`.
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// Side size for `ineq --family biclique`; all sizes up to --max-side if absent.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub r: Option<u64>,
    /// Largest biclique side scanned.
    #[arg(long, default_value_t = Limits::DEFAULT_MAX_SIDE as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_side: u64,
    /// Inequality file for `facet`, `vertices` and `check`.
    #[arg(long, value_name = "PATH")]
    pub ineq: Option<PathBuf>,
    /// Point file for `separate`.
    #[arg(long, value_name = "PATH")]
    pub point: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
    /// Raise the double description dimension cap.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub force_dim: Option<u64>,
    /// Cap on n + m for exhaustive enumeration (at most 64).
    #[arg(long, value_name = "N", default_value_t = Limits::DEFAULT_MAX_ELEMENTS as u64, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub max_elements: u64,
}

impl RunConfig {
    pub fn limits(&self) -> Limits {
        Limits {
            max_elements: self.max_elements as usize,
            max_hull_dim: self
                .force_dim
                .map_or(Limits::DEFAULT_MAX_HULL_DIM, |d| d as usize),
            max_side: self.max_side as usize,
        }
    }
}

/// Parses `args` (program name first), runs one command and returns the exit
/// code. Reports go to `out`, warnings and errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INVALID
                }
            };
        }
    };
    match execute(&config, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn require<'a>(opt: &'a Option<PathBuf>, flag: &str, command: &str) -> Result<&'a Path, CliError> {
    opt.as_deref()
        .ok_or_else(|| CliError::Usage(format!("`{command}` needs --{flag} PATH")))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
        path: PathBuf::from("<output>"),
        source,
    })
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    emit(out, &s)
}

#[derive(Serialize)]
struct InequalityJson {
    coeffs: Vec<String>,
    rhs: String,
    family: String,
}

impl From<&LinearInequality> for InequalityJson {
    fn from(i: &LinearInequality) -> Self {
        InequalityJson {
            coeffs: i.coeffs().iter().map(Rational::to_string).collect(),
            rhs: i.rhs().to_string(),
            family: describe(i.label()),
        }
    }
}

fn ineq_json(v: &[LinearInequality]) -> Vec<InequalityJson> {
    v.iter().map(InequalityJson::from).collect()
}

fn execute(c: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let limits = c.limits();
    if let Some(d) = c.force_dim {
        if d as usize > Limits::DEFAULT_MAX_HULL_DIM {
            let _ = writeln!(
                err,
                "warning: hull dimension cap raised from {} to {d}; double description may run for a long time",
                Limits::DEFAULT_MAX_HULL_DIM
            );
        }
    }
    let g = format::parse_graph(&read(&c.graph)?)?;
    match c.command {
        Command::Solve => cmd_solve(c, &g, &limits, out),
        Command::Enumerate => cmd_enumerate(c, &g, &limits, out),
        Command::Ineq => cmd_ineq(c, &g, out),
        Command::Facet => cmd_facet(c, &g, &limits, out),
        Command::Hull => cmd_hull(c, &g, &limits, out),
        Command::Vertices => cmd_vertices(c, &g, &limits, out),
        Command::Check => cmd_check(c, &g, &limits, out),
        Command::Separate => cmd_separate(c, &g, out),
        Command::Bounds => cmd_bounds(c, &g, &limits, out),
    }
}

#[derive(Serialize)]
struct BoundsJson {
    nu_t: usize,
    alpha: usize,
    nu: usize,
    tau: usize,
    nu_t_at_least_alpha_and_nu: bool,
    tau_at_most_nu_t: bool,
}

fn bounds(g: &Graph, nu_t: usize, limits: &Limits) -> Result<BoundsJson, CliError> {
    let (a, n, t) = (alpha(g, limits)?, nu(g, limits)?, tau(g, limits)?);
    Ok(BoundsJson {
        nu_t,
        alpha: a,
        nu: n,
        tau: t,
        nu_t_at_least_alpha_and_nu: nu_t >= a.max(n),
        tau_at_most_nu_t: t <= nu_t,
    })
}

fn bounds_text(b: &BoundsJson) -> String {
    let ok = |x: bool| if x { "ok" } else { "VIOLATED" };
    format!(
        "alpha {}\nnu {}\ntau {}\nbound nu_T >= max(alpha, nu): {}\nbound tau <= nu_T: {}\n",
        b.alpha,
        b.nu,
        b.tau,
        ok(b.nu_t_at_least_alpha_and_nu),
        ok(b.tau_at_most_nu_t)
    )
}

fn bounds_code(b: &BoundsJson) -> i32 {
    if b.nu_t_at_least_alpha_and_nu && b.tau_at_most_nu_t {
        EXIT_OK
    } else {
        EXIT_INCOMPLETE
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::TreeDp => "tree-dp",
        Method::Enumeration => "enumeration",
    }
}

fn cmd_solve(c: &RunConfig, g: &Graph, limits: &Limits, out: &mut dyn Write) -> Result<i32, CliError> {
    #[derive(Serialize)]
    struct SolveJson<'a> {
        nu_t: usize,
        total_matching: &'a [usize],
        method: &'static str,
        #[serde(flatten)]
        bounds: &'a BoundsJson,
    }
    let (t, method) = maximum_total_matching(g, limits)?;
    let b = bounds(g, t.len(), limits)?;
    if c.json {
        emit_json(
            out,
            &SolveJson {
                nu_t: t.len(),
                total_matching: t.elements(),
                method: method_name(method),
                bounds: &b,
            },
        )?;
    } else {
        emit(
            out,
            &format!(
                "nu_T {}\ntotal_matching {t}\nmethod {}\n{}",
                t.len(),
                method_name(method),
                bounds_text(&b)
            ),
        )?;
    }
    Ok(bounds_code(&b))
}

fn cmd_bounds(c: &RunConfig, g: &Graph, limits: &Limits, out: &mut dyn Write) -> Result<i32, CliError> {
    let (t, _) = maximum_total_matching(g, limits)?;
    let b = bounds(g, t.len(), limits)?;
    if c.json {
        emit_json(out, &b)?;
    } else {
        emit(out, &format!("nu_T {}\n{}", b.nu_t, bounds_text(&b)))?;
    }
    Ok(bounds_code(&b))
}

fn cmd_enumerate(c: &RunConfig, g: &Graph, limits: &Limits, out: &mut dyn Write) -> Result<i32, CliError> {
    let all = enumerate_total_matchings(g, limits)?;
    if c.json {
        #[derive(Serialize)]
        struct EnumJson {
            count: usize,
            total_matchings: Vec<Vec<usize>>,
        }
        emit_json(
            out,
            &EnumJson {
                count: all.len(),
                total_matchings: all.iter().map(|t| t.elements().to_vec()).collect(),
            },
        )?;
    } else {
        let mut s: String = all.iter().map(|t| format!("{t}\n")).collect();
        s.push_str(&format!("# {} total matchings\n", all.len()));
        emit(out, &s)?;
    }
    Ok(EXIT_OK)
}

fn write_system(c: &RunConfig, ineqs: &[LinearInequality], out: &mut dyn Write) -> Result<(), CliError> {
    if c.json {
        emit_json(out, &ineq_json(ineqs))
    } else {
        emit(out, &format::write_inequalities(ineqs))
    }
}

fn family_system(g: &Graph, family: FamilyName, r: Option<usize>, max_side: usize) -> Result<Vec<LinearInequality>, CliError> {
    Ok(match family {
        FamilyName::Basic => basic_inequalities(g),
        FamilyName::Biclique => match r {
            Some(r) => balanced_biclique_inequalities(g, r)?,
            None => {
                let mut v = Vec::new();
                for r in 2..=max_side {
                    v.extend(balanced_biclique_inequalities(g, r)?);
                }
                v
            }
        },
        FamilyName::Lifted => lifted_family(g, max_side),
        FamilyName::All => all_families(g, max_side),
    })
}

fn cmd_ineq(c: &RunConfig, g: &Graph, out: &mut dyn Write) -> Result<i32, CliError> {
    let family = c
        .family
        .ok_or_else(|| CliError::Usage("`ineq` needs --family basic|biclique|lifted|all".into()))?;
    let ineqs = family_system(g, family, c.r.map(|r| r as usize), c.max_side as usize)?;
    write_system(c, &ineqs, out)?;
    Ok(EXIT_OK)
}

fn cmd_facet(c: &RunConfig, g: &Graph, limits: &Limits, out: &mut dyn Write) -> Result<i32, CliError> {
    #[derive(Serialize)]
    struct FacetJson {
        inequality: InequalityJson,
        valid: bool,
        facet: bool,
        face_dimension: Option<isize>,
        violator: Option<Vec<usize>>,
    }
    let ineqs = format::parse_inequalities(&read(require(&c.ineq, "ineq", "facet")?)?, g.num_elements())?;
    let dim = polytope_dimension(g, limits)? as isize;
    let mut rows = Vec::with_capacity(ineqs.len());
    for ineq in &ineqs {
        let row = match is_valid(g, ineq, limits)? {
            Validity::Valid { .. } => {
                let f = face_dimension(g, ineq, limits)?;
                FacetJson {
                    inequality: ineq.into(),
                    valid: true,
                    facet: f == dim - 1,
                    face_dimension: Some(f),
                    violator: None,
                }
            }
            Validity::Invalid { violator, .. } => FacetJson {
                inequality: ineq.into(),
                valid: false,
                facet: false,
                face_dimension: None,
                violator: Some(violator.elements().to_vec()),
            },
        };
        rows.push(row);
    }
    if c.json {
        #[derive(Serialize)]
        struct Report {
            dimension: isize,
            inequalities: Vec<FacetJson>,
        }
        emit_json(
            out,
            &Report {
                dimension: dim,
                inequalities: rows,
            },
        )?;
    } else {
        let mut s = format!("dimension {dim}\n");
        for (ineq, row) in ineqs.iter().zip(&rows) {
            let verdict = match (&row.violator, row.face_dimension) {
                (Some(v), _) => format!("invalid, violated by {:?}", v),
                (None, Some(f)) if row.facet => format!("valid, facet (face dimension {f})"),
                (None, Some(f)) => format!("valid, not facet (face dimension {f})"),
                (None, None) => unreachable!("valid rows carry a face dimension"),
            };
            s.push_str(&format!("{verdict}: {}\n", format_inequality(ineq)));
        }
        emit(out, &s)?;
    }
    Ok(EXIT_OK)
}

fn cmd_hull(c: &RunConfig, g: &Graph, limits: &Limits, out: &mut dyn Write) -> Result<i32, CliError> {
    let rep = polytope_hull(g, limits)?;
    write_system(c, &rep.hrep, out)?;
    Ok(EXIT_OK)
}

fn cmd_vertices(c: &RunConfig, g: &Graph, limits: &Limits, out: &mut dyn Write) -> Result<i32, CliError> {
    let ineqs = format::parse_inequalities(&read(require(&c.ineq, "ineq", "vertices")?)?, g.num_elements())?;
    let rep = vertices(&ineqs, g.num_elements(), limits)?;
    if c.json {
        let pts: Vec<Vec<String>> = rep
            .vrep
            .iter()
            .map(|p| p.iter().map(Rational::to_string).collect())
            .collect();
        emit_json(out, &pts)?;
    } else {
        emit(out, &rep.vrep.iter().map(|p| format_point(p) + "\n").collect::<String>())?;
    }
    Ok(EXIT_OK)
}

fn is_complete_bipartite(g: &Graph) -> bool {
    g.is_connected()
        && g.bipartition()
            .is_some_and(|(a, b)| !b.is_empty() && g.m() == a.len() * b.len())
}

fn cmd_check(c: &RunConfig, g: &Graph, limits: &Limits, out: &mut dyn Write) -> Result<i32, CliError> {
    let max_side = c.max_side as usize;
    let (families, system) = if let Some(path) = &c.ineq {
        ("file".to_string(), format::parse_inequalities(&read(path)?, g.num_elements())?)
    } else if let Some(f) = c.family {
        let name = f.to_possible_value().expect("named").get_name().to_string();
        (name, family_system(g, f, c.r.map(|r| r as usize), max_side)?)
    } else if g.is_tree() {
        ("basic".to_string(), basic_inequalities(g))
    } else if is_complete_bipartite(g) {
        let mut sys = basic_inequalities(g);
        for r in 2..=max_side {
            sys.extend(balanced_biclique_inequalities(g, r)?);
        }
        sys.extend(lifted_family(g, max_side));
        ("basic+biclique+lifted".to_string(), sys)
    } else {
        ("all".to_string(), all_families(g, max_side))
    };
    let report = check_complete_description(g, &system, limits)?;
    if c.json {
        #[derive(Serialize)]
        struct CheckJson {
            families: String,
            complete: bool,
            missing_facets: Vec<InequalityJson>,
            redundant: Vec<InequalityJson>,
            dimension: usize,
        }
        emit_json(
            out,
            &CheckJson {
                families,
                complete: report.complete,
                missing_facets: ineq_json(&report.missing_facets),
                redundant: ineq_json(&report.redundant),
                dimension: report.dimension,
            },
        )?;
    } else {
        let mut s = format!(
            "families {families}\ndimension {}\ncomplete {}\nmissing_facets {}\nredundant {}\n",
            report.dimension,
            report.complete,
            report.missing_facets.len(),
            report.redundant.len()
        );
        for f in &report.missing_facets {
            s.push_str(&format!("missing {}\n", format_inequality(f)));
        }
        for r in &report.redundant {
            s.push_str(&format!("redundant {}\n", format_inequality(r)));
        }
        emit(out, &s)?;
    }
    Ok(if report.complete { EXIT_OK } else { EXIT_INCOMPLETE })
}

fn cmd_separate(c: &RunConfig, g: &Graph, out: &mut dyn Write) -> Result<i32, CliError> {
    let z = format::parse_point(&read(require(&c.point, "point", "separate")?)?, g.num_elements())?;
    let res = separate(g, &z, c.max_side as usize)?;
    if c.json {
        #[derive(Serialize)]
        struct ViolationJson {
            amount: String,
            inequality: InequalityJson,
        }
        #[derive(Serialize)]
        struct ScanJson {
            family: &'static str,
            sides: Option<(usize, usize)>,
            scanned: usize,
        }
        #[derive(Serialize)]
        struct SeparateJson {
            violated: Vec<ViolationJson>,
            searched_families: Vec<ScanJson>,
        }
        emit_json(
            out,
            &SeparateJson {
                violated: res
                    .violated
                    .iter()
                    .map(|v| ViolationJson {
                        amount: v.amount.to_string(),
                        inequality: (&v.inequality).into(),
                    })
                    .collect(),
                searched_families: res
                    .searched_families
                    .iter()
                    .map(|f| ScanJson {
                        family: f.family,
                        sides: f.sides,
                        scanned: f.scanned,
                    })
                    .collect(),
            },
        )?;
    } else {
        let mut s = format!("violated {}\n", res.violated.len());
        for v in &res.violated {
            s.push_str(&format!("violation {}: {}\n", v.amount, format_inequality(&v.inequality)));
        }
        for f in &res.searched_families {
            let sides = f.sides.map_or(String::new(), |(r, s)| format!(" K_{{{r},{s}}}"));
            s.push_str(&format!("searched {}{sides}: {}\n", f.family, f.scanned));
        }
        emit(out, &s)?;
    }
    Ok(EXIT_OK)
}
