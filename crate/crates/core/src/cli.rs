//! The `curvgeom` command line.
//!
//! Exit codes: 0 on success or a passing campaign, 1 when a construction is
//! infeasible or a campaign fails, 2 on usage errors.

use std::f64::consts::FRAC_PI_2;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::campaign::{run_campaign, Theorem};
use crate::cevians::{construct_from_ratios, Construction, RatioSumInput};
use crate::error::Error;
use crate::figures::{cevian_scene, foliation_scene, lexell_scene, limit_scene};
use crate::json::{self, reals, Real, UNITS_ANGLE, UNITS_LENGTH};
use crate::kernel::{
    disk_to_hpoint, hpoint_to_disk, DiskPoint, Euclidean, Geometry, GeometryKind, HPoint,
    Hyperbolic, Point2, SpherePoint, Spherical,
};
use crate::lexell::{
    apex_area_formula, cosh_c_from_angles, equal_subarc_check, foliation, foliation_limit,
    leaf_separation, lexell_locus, AreaLocus, BaseConfig, LocusCheck,
};
use crate::render::Scene;
use crate::sampling::{off_axis_direction, random_frame, trial_rng, uniform};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "curvgeom",
    version,
    about = "Triangle identities and constructions in curved planes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a seeded randomized check of one identity.
    Verify(VerifyArgs),
    /// Rebuild a triangle from six cevian segment lengths.
    Construct(ConstructArgs),
    /// Constant-area locus through an apex over the base of length 2x.
    Lexell(LexellArgs),
    /// Write a disk-model figure.
    Render(RenderArgs),
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(value_parser = parse_theorem)]
    pub theorem: Theorem,
    #[arg(long, default_value = "hyperbolic", value_parser = parse_geometry)]
    pub geometry: GeometryKind,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Override the default tolerance.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct ConstructArgs {
    /// AO BO CO OD OE OF
    #[arg(num_args = 6, value_names = ["AO", "BO", "CO", "OD", "OE", "OF"], allow_negative_numbers = true, required = true)]
    pub lengths: Vec<f64>,
    #[arg(long, default_value = "hyperbolic", value_parser = parse_geometry)]
    pub geometry: GeometryKind,
    /// Draw the triangle (hyperbolic only).
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct LexellArgs {
    /// Half the base length; A and B sit at distance x either side of the origin.
    #[arg(long)]
    pub x: f64,
    /// Apex on the perpendicular bisector at this height.
    #[arg(long, conflicts_with = "apex", allow_negative_numbers = true)]
    pub y: Option<f64>,
    /// Apex as a Poincare disk point `U,W`.
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub apex: Option<(f64, f64)>,
    /// Locus samples used for the area spread.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    /// Comma-separated target areas for extra leaves.
    #[arg(long, value_delimiter = ',')]
    pub foliate: Option<Vec<f64>>,
    /// Seed for the random chords of the equal-subarc check.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    Cevians,
    Lexell,
    Foliation,
    Limit,
}

#[derive(Debug, clap::Args)]
pub struct RenderArgs {
    #[arg(value_enum)]
    pub figure: Figure,
    #[arg(long)]
    pub svg: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_geometry(s: &str) -> Result<GeometryKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (u, w) = s.split_once(',').ok_or("expected U,W")?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}"));
    Ok((num(u)?, num(w)?))
}

/// What a subcommand hands back to `run`.
struct Outcome {
    json: String,
    code: u8,
}

/// A usage error or an infeasible request, both reported on stderr and in
/// JSON where applicable.
enum Failure {
    Usage(String),
    Infeasible(Error),
    Io(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Map a library error to usage (bad arguments) or infeasible (valid
/// arguments describing an impossible configuration).
fn classify(e: Error) -> Failure {
    match e {
        Error::Domain(_) | Error::Range(_) | Error::InvalidPoint(_) | Error::OutOfModel(_) => {
            Failure::Usage(e.to_string())
        }
        _ => Failure::Infeasible(e),
    }
}

#[derive(Serialize)]
struct InfeasibleReport {
    status: &'static str,
    reason: &'static str,
    message: String,
}

/// Parse `args`, run the command, and return the process exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let json_path = match &cli.command {
        Command::Verify(a) => a.json.clone(),
        Command::Construct(a) => a.json.clone(),
        Command::Lexell(a) => a.json.clone(),
        Command::Render(a) => a.json.clone(),
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Lexell(a) => cmd_lexell(a),
        Command::Render(a) => cmd_render(a),
    };
    let (json, code) = match result {
        Ok(Outcome { json, code }) => (json, code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_FAIL);
        }
        Err(Failure::Infeasible(e)) => {
            eprintln!("infeasible: {e}");
            let report = InfeasibleReport {
                status: "infeasible",
                reason: e.reason(),
                message: e.to_string(),
            };
            (json::to_string(&report), EXIT_FAIL)
        }
    };
    if let Err(e) = emit(&json, json_path.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_FAIL);
    }
    ExitCode::from(code)
}

fn emit(json: &str, path: Option<&Path>) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, json),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(json.as_bytes())?;
            out.flush()
        }
    }
}

fn write_svg(path: &Path, scene: &Scene) -> Result<(), Failure> {
    scene
        .validate()
        .map_err(|e| Failure::Io(format!("scene failed validation: {e}")))?;
    fs::write(path, scene.to_svg())?;
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<Outcome, Failure> {
    if let Some(t) = a.tolerance {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Failure::Usage(format!(
                "tolerance {t} must be positive and finite"
            )));
        }
    }
    if !a.theorem.supports(a.geometry) {
        return Err(Failure::Usage(format!(
            "{} is not available in {} geometry",
            a.theorem, a.geometry
        )));
    }
    let report =
        run_campaign(a.theorem, a.geometry, a.trials, a.seed, a.tolerance).map_err(classify)?;
    let code = if report.pass { EXIT_OK } else { EXIT_FAIL };
    Ok(Outcome {
        json: json::to_string(&report),
        code,
    })
}

/// Two-dimensional chart used to report vertices: the Poincare disk for the
/// hyperbolic plane, stereographic projection from the antipode of the
/// basepoint for the sphere, and plain coordinates for the plane.
trait Chart {
    fn chart(&self) -> [Real; 2];
}

impl Chart for HPoint {
    fn chart(&self) -> [Real; 2] {
        let d = hpoint_to_disk(self);
        reals([d.u, d.w])
    }
}

impl Chart for SpherePoint {
    fn chart(&self) -> [Real; 2] {
        let v = self.vec();
        reals([v.y / (1.0 + v.x), v.z / (1.0 + v.x)])
    }
}

impl Chart for Point2 {
    fn chart(&self) -> [Real; 2] {
        reals([self.x, self.y])
    }
}

#[derive(Serialize)]
struct Vertices {
    a: [Real; 2],
    b: [Real; 2],
    c: [Real; 2],
    o: [Real; 2],
    d: [Real; 2],
    e: [Real; 2],
    f: [Real; 2],
}

#[derive(Serialize)]
struct Residuals {
    relation: Real,
    angle_sum: Real,
    containment: Real,
    lengths: Real,
    angles: Real,
}

#[derive(Serialize)]
struct Lengths {
    ao: Real,
    bo: Real,
    co: Real,
    od: Real,
    oe: Real,
    of: Real,
}

impl From<&RatioSumInput> for Lengths {
    fn from(i: &RatioSumInput) -> Self {
        Self {
            ao: Real(i.ao),
            bo: Real(i.bo),
            co: Real(i.co),
            od: Real(i.od),
            oe: Real(i.oe),
            of: Real(i.of),
        }
    }
}

#[derive(Serialize)]
struct ConstructReport {
    status: &'static str,
    geometry: GeometryKind,
    input: Lengths,
    ratios: [Real; 3],
    ghi: [Real; 3],
    heron_radicand: Real,
    /// `sqrt(radicand) / (2 G H I)`.
    delta: Real,
    /// Area of the `G, H, I` triangle.
    m: Real,
    /// `[p, q, r]`.
    angles: [Real; 3],
    /// `[AOB, BOC, COA]`.
    vertex_angles: [Real; 3],
    sides: [Real; 3],
    chart: &'static str,
    vertices: Vertices,
    residuals: Residuals,
    svg: Option<String>,
    units_length: &'static str,
    units_angle: &'static str,
}

fn construct_report<G: Geometry>(
    c: &Construction<G>,
    chart: &'static str,
    svg: Option<String>,
) -> ConstructReport
where
    G::Point: Chart,
{
    let [g, h, i] = c.ghi;
    let t = &c.triangle;
    let f = &c.frame;
    ConstructReport {
        status: "ok",
        geometry: G::KIND,
        input: Lengths::from(&c.input),
        ratios: reals(c.input.ratios(G::KIND)),
        ghi: reals(c.ghi),
        heron_radicand: Real(c.delta),
        delta: Real(c.delta.sqrt() / (2.0 * g * h * i)),
        m: Real(c.area),
        angles: reals(c.angles),
        vertex_angles: reals(c.vertex_angles()),
        sides: reals(t.sides()),
        chart,
        vertices: Vertices {
            a: t.a.chart(),
            b: t.b.chart(),
            c: t.c.chart(),
            o: c.o.chart(),
            d: f.d.chart(),
            e: f.e.chart(),
            f: f.f.chart(),
        },
        residuals: Residuals {
            relation: Real(c.relation_residual),
            angle_sum: Real(c.angle_sum_residual),
            containment: Real(c.containment_residual),
            lengths: Real(c.length_residual),
            angles: Real(c.angle_residual),
        },
        svg,
        units_length: UNITS_LENGTH,
        units_angle: UNITS_ANGLE,
    }
}

fn cmd_construct(a: ConstructArgs) -> Result<Outcome, Failure> {
    let l = &a.lengths;
    let input = RatioSumInput {
        ao: l[0],
        bo: l[1],
        co: l[2],
        od: l[3],
        oe: l[4],
        of: l[5],
    };
    if a.svg.is_some() && a.geometry != GeometryKind::Hyperbolic {
        return Err(Failure::Usage(
            "--svg draws the Poincare disk and needs --geometry hyperbolic".into(),
        ));
    }
    let svg = a.svg.as_ref().map(|p| p.display().to_string());
    let report = match a.geometry {
        GeometryKind::Hyperbolic => {
            let c = construct_from_ratios::<Hyperbolic>(&input).map_err(classify)?;
            if let Some(path) = &a.svg {
                write_svg(path, &cevian_scene(&c.frame))?;
            }
            construct_report(&c, "poincare-disk", svg)
        }
        GeometryKind::Spherical => {
            let c = construct_from_ratios::<Spherical>(&input).map_err(classify)?;
            construct_report(&c, "stereographic", None)
        }
        GeometryKind::Euclidean => {
            let c = construct_from_ratios::<Euclidean>(&input).map_err(classify)?;
            construct_report(&c, "cartesian", None)
        }
    };
    Ok(Outcome {
        json: json::to_string(&report),
        code: EXIT_OK,
    })
}

#[derive(Serialize)]
struct CheckReport {
    samples: usize,
    area_spread: Real,
    area_deviation: Real,
    formula_residual: Real,
    mirror_residual: Real,
    midpoint_residual: Real,
    equal_subarc_residual: Real,
}

impl CheckReport {
    fn new(c: &LocusCheck, chords: f64) -> Self {
        Self {
            samples: c.samples,
            area_spread: Real(c.area_spread),
            area_deviation: Real(c.area_deviation),
            formula_residual: Real(c.formula_residual),
            mirror_residual: Real(c.mirror_residual),
            midpoint_residual: Real(c.midpoint_residual),
            equal_subarc_residual: Real(chords),
        }
    }
}

#[derive(Serialize)]
struct LocusReport {
    area: Real,
    /// Signed distance of the carrier from its axis.
    offset: Real,
    /// Height at which the carrier crosses the perpendicular bisector.
    bisector_height: Real,
    /// Ideal endpoints of the axis as boundary angles, backward end first.
    axis_endpoints: [Real; 2],
    apex: [Real; 2],
    apex_reflected: [Real; 2],
}

impl LocusReport {
    fn new(l: &AreaLocus) -> Self {
        let (p, q) = l.axis.ideal_endpoints();
        Self {
            area: Real(l.area),
            offset: Real(l.carrier.offset),
            bisector_height: Real(l.bisector_height),
            axis_endpoints: reals([p[1].atan2(p[0]), q[1].atan2(q[0])]),
            apex: l.apex.chart(),
            apex_reflected: l.apex_reflected.chart(),
        }
    }
}

#[derive(Serialize)]
struct LeafReport {
    target: Real,
    #[serde(flatten)]
    locus: LocusReport,
}

#[derive(Serialize)]
struct LexellReport {
    status: &'static str,
    x: Real,
    area_supremum: Real,
    formula_area: Real,
    #[serde(flatten)]
    locus: LocusReport,
    check: CheckReport,
    leaves: Vec<LeafReport>,
    /// Whether consecutive leaves are disjoint and their offsets increase.
    leaves_ordered: Option<bool>,
    seed: u64,
    svg: Option<String>,
    units_length: &'static str,
    units_angle: &'static str,
}

fn cmd_lexell(a: LexellArgs) -> Result<Outcome, Failure> {
    if a.samples < 2 {
        return Err(Failure::Usage("--samples must be at least 2".into()));
    }
    let base = BaseConfig::new(a.x).map_err(classify)?;
    let apex = match (a.y, a.apex) {
        (Some(y), None) => {
            if !y.is_finite() || y == 0.0 {
                return Err(Failure::Infeasible(Error::Degenerate(
                    "apex lies on the base line",
                )));
            }
            HPoint::from_polar(y.abs(), FRAC_PI_2.copysign(y))
        }
        (None, Some((u, w))) => {
            let d = DiskPoint::new(u, w).map_err(classify)?;
            disk_to_hpoint(&d)
        }
        _ => return Err(Failure::Usage("give exactly one of --y or --apex".into())),
    };
    let locus = lexell_locus(&base, &apex).map_err(classify)?;
    let check = locus.check(a.samples).map_err(classify)?;
    let mut rng = trial_rng(a.seed, 0);
    let chords = equal_subarc_check(&locus, a.samples, &mut rng).map_err(classify)?;

    let targets = a.foliate.unwrap_or_default();
    let leaves = foliation(&base, &targets).map_err(classify)?;
    let mut sorted = targets.clone();
    sorted.sort_by(f64::total_cmp);
    let leaves_ordered = if leaves.len() < 2 {
        None
    } else {
        let mut ok = true;
        for w in leaves.windows(2) {
            let sep = leaf_separation(&w[0], &w[1], a.samples).map_err(classify)?;
            ok &= sep.one_sided && w[0].carrier.offset < w[1].carrier.offset;
        }
        Some(ok)
    };

    let svg = a.svg.as_ref().map(|p| p.display().to_string());
    if let Some(path) = &a.svg {
        let scene = if leaves.is_empty() {
            lexell_scene(&locus)
        } else {
            foliation_scene(&leaves)
        };
        write_svg(path, &scene)?;
    }
    let report = LexellReport {
        status: "ok",
        x: Real(a.x),
        area_supremum: Real(foliation_limit(a.x)),
        formula_area: Real(apex_area_formula(a.x, locus.bisector_height).map_err(classify)?),
        locus: LocusReport::new(&locus),
        check: CheckReport::new(&check, chords),
        leaves: leaves
            .iter()
            .zip(sorted)
            .map(|(l, t)| LeafReport {
                target: Real(t),
                locus: LocusReport::new(l),
            })
            .collect(),
        leaves_ordered,
        seed: a.seed,
        svg,
        units_length: UNITS_LENGTH,
        units_angle: UNITS_ANGLE,
    };
    Ok(Outcome {
        json: json::to_string(&report),
        code: EXIT_OK,
    })
}

#[derive(Serialize)]
struct RenderReport {
    status: &'static str,
    figure: &'static str,
    seed: u64,
    elements: usize,
    svg: String,
}

/// The scene for `figure`; random choices come from trial stream 0 of `seed`.
pub fn figure_scene(figure: Figure, seed: u64) -> crate::Result<Scene> {
    let mut rng = trial_rng(seed, 0);
    match figure {
        Figure::Cevians => Ok(cevian_scene(&random_frame::<Hyperbolic, _>(&mut rng))),
        Figure::Lexell => {
            let base = BaseConfig::new(uniform(&mut rng, 0.3, 1.2))?;
            let apex =
                HPoint::from_polar(uniform(&mut rng, 0.4, 1.6), off_axis_direction(&mut rng));
            Ok(lexell_scene(&lexell_locus(&base, &apex)?))
        }
        Figure::Foliation => {
            let x = uniform(&mut rng, 0.5, 1.0);
            let limit = foliation_limit(x);
            let areas: Vec<f64> = (1..=5).map(|k| limit * k as f64 / 6.0).collect();
            Ok(foliation_scene(&foliation(&BaseConfig::new(x)?, &areas)?))
        }
        Figure::Limit => {
            let alpha = uniform(&mut rng, 0.3, 1.2);
            let beta = uniform(&mut rng, 0.3, 1.2);
            let c = cosh_c_from_angles(alpha, beta)?.acosh();
            limit_scene(&[0.5 * c, c, 1.5 * c], c)
        }
    }
}

fn cmd_render(a: RenderArgs) -> Result<Outcome, Failure> {
    let scene = figure_scene(a.figure, a.seed).map_err(classify)?;
    write_svg(&a.svg, &scene)?;
    let figure = match a.figure {
        Figure::Cevians => "cevians",
        Figure::Lexell => "lexell",
        Figure::Foliation => "foliation",
        Figure::Limit => "limit",
    };
    Ok(Outcome {
        json: json::to_string(&RenderReport {
            status: "ok",
            figure,
            seed: a.seed,
            elements: scene.elements.len(),
            svg: a.svg.display().to_string(),
        }),
        code: EXIT_OK,
    })
}
