use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fq_incidence::{
    additive_energy, check_beck, check_main, check_pinned_average, check_pinned_fraction,
    count_incidences, paraboloid_difference_count, rep_sum, BeckReport, CountMode, EnergySide,
    Engine, FieldSpec, IncidenceReport, LiftedVector, PinnedKind, PinnedReport, PointSet, Ratio,
    Space, SphereFamily, Status, DEFAULT_BUDGET,
};
use rand::Rng;
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::format::{self, Ingested};
use crate::generate::{generate, random_spheres, seeded_rng, GeneratorShape, RunRng};
use crate::report::{big, ratio, theta_display, Format, Report};

/// Exact verification of point-sphere incidence statements over F_q.
#[derive(Debug, Parser)]
#[command(name = "fq-incidence", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check the point-sphere incidence bound with all three engines.
    Incidence,
    /// Sweep r_{A-A}(x) over every x of F_q^(d+1), brute force vs closed form.
    LemmaRaa,
    /// Check the sumset mass and additive-energy identities on random sets.
    Identities,
    /// Check both pinned-distance statements.
    Pinned,
    /// Count determined circles against ceil(4q^3/9) (d = 2).
    Beck,
    /// Write a generated point set in the plain-text file format.
    Gen,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Incidence => "incidence",
            Command::LemmaRaa => "lemma-raa",
            Command::Identities => "identities",
            Command::Pinned => "pinned",
            Command::Beck => "beck",
            Command::Gen => "gen",
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    /// Field order, an odd prime. Taken from the file header with --points.
    #[arg(long, global = true)]
    pub q: Option<u64>,
    /// Dimension. Defaults to 2, or the file header with --points.
    #[arg(long, global = true)]
    pub d: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Point file to read instead of generating.
    #[arg(long, global = true)]
    pub points: Option<PathBuf>,
    /// Sphere family: a file path, `all`, or `random:N`.
    #[arg(long, global = true)]
    pub spheres: Option<String>,
    /// Generated point set: `full`, `line`, `random:N`, `circle:N`, `grid:AxB`.
    #[arg(long, global = true)]
    pub shape: Option<String>,
    /// Pinned-average parameter as `num/den` in (0, 1).
    #[arg(long, global = true, default_value = "1/2")]
    pub epsilon: String,
    /// Pinned-fraction parameter as `num/den` in (0, 1).
    #[arg(long, global = true, default_value = "1/2")]
    pub alpha: String,
    /// Number of instances (incidence: 1, identities: 100 by default).
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            q: None,
            d: None,
            seed: 0,
            points: None,
            spheres: None,
            shape: None,
            epsilon: "1/2".into(),
            alpha: "1/2".into(),
            trials: None,
            format: Format::Json,
            out: None,
        }
    }
}

/// What a run produced.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub body: String,
    pub verdict: Status,
}

impl Outcome {
    /// 0 when every check held or was vacuous, 1 when one was violated.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Status::Violated => 1,
            _ => 0,
        }
    }
}

/// Parses `num/den` (or an integer) and requires it to lie in (0, 1).
pub fn parse_unit_ratio(name: &str, text: &str) -> Result<Ratio<u64>, CliError> {
    let r: Ratio<u64> = text
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{name}: expected num/den, got {text:?}")))?;
    if *r.numer() == 0 || r >= Ratio::from_integer(1) {
        return Err(CliError::Usage(format!(
            "{name} must lie strictly between 0 and 1, got {text}"
        )));
    }
    Ok(r)
}

/// Where the point set of a run comes from.
enum PointSource {
    File(PathBuf, PointSet),
    Shape(GeneratorShape),
}

struct Context {
    space: Space,
    source: PointSource,
    rng: RunRng,
}

impl Context {
    fn new(config: &RunConfig) -> Result<Self, CliError> {
        let rng = seeded_rng(config.seed);
        if let Some(path) = &config.points {
            if config.shape.is_some() {
                return Err(CliError::Usage("--points and --shape are exclusive".into()));
            }
            let points = match format::ingest(path)? {
                Ingested::Points(p) => p,
                Ingested::Spheres(_) => {
                    return Err(CliError::Usage(format!(
                        "{}: expected kind=points",
                        path.display()
                    )))
                }
            };
            let space = points.space();
            check_header(config, space)?;
            return Ok(Context {
                space,
                source: PointSource::File(path.clone(), points),
                rng,
            });
        }
        let q = config
            .q
            .ok_or_else(|| CliError::Usage("--q is required without --points".into()))?;
        let space = Space::new(FieldSpec::new(q)?, config.d.unwrap_or(2))?;
        let shape = config.shape.as_deref().unwrap_or("full").parse()?;
        Ok(Context {
            space,
            source: PointSource::Shape(shape),
            rng,
        })
    }

    fn points(&mut self) -> Result<PointSet, CliError> {
        match &self.source {
            PointSource::File(_, p) => Ok(p.clone()),
            PointSource::Shape(shape) => generate(self.space, shape, &mut self.rng),
        }
    }

    fn describe_points(&self, params: &mut Map<String, Value>) {
        match &self.source {
            PointSource::File(path, _) => {
                params.insert("points".into(), json!(path.display().to_string()))
            }
            PointSource::Shape(shape) => params.insert("shape".into(), json!(shape.to_string())),
        };
    }
}

fn check_header(config: &RunConfig, space: Space) -> Result<(), CliError> {
    if config.q.is_some_and(|q| q != space.q()) || config.d.is_some_and(|d| d != space.dim()) {
        return Err(CliError::Usage(format!(
            "header mismatch: file has q={} d={}, flags ask for q={} d={}",
            space.q(),
            space.dim(),
            config.q.map_or("-".into(), |q| q.to_string()),
            config.d.map_or("-".into(), |d| d.to_string()),
        )));
    }
    Ok(())
}

enum SphereSource {
    All,
    Random(usize),
    File(SphereFamily),
}

fn sphere_source(spec: Option<&str>, space: Space) -> Result<SphereSource, CliError> {
    match spec {
        None | Some("all") => Ok(SphereSource::All),
        Some(s) if s.starts_with("random:") => s["random:".len()..]
            .parse()
            .map(SphereSource::Random)
            .map_err(|_| CliError::Usage(format!("bad sphere count in {s:?}"))),
        Some(path) => match format::ingest(path)? {
            Ingested::Spheres(f) => {
                if f.space() != space {
                    return Err(CliError::Usage(format!(
                        "{path}: sphere file is over {} but points are over {space}",
                        f.space()
                    )));
                }
                Ok(SphereSource::File(f))
            }
            Ingested::Points(_) => Err(CliError::Usage(format!("{path}: expected kind=spheres"))),
        },
    }
}

/// Executes one command. Errors are usage or input problems (exit code 2).
pub fn run(command: Command, config: &RunConfig) -> Result<Outcome, CliError> {
    let mut params = Map::new();
    let report = match command {
        Command::Incidence => incidence(config, &mut params)?,
        Command::LemmaRaa => lemma_raa(config)?,
        Command::Identities => identities(config, &mut params)?,
        Command::Pinned => pinned(config, &mut params)?,
        Command::Beck => beck(config, &mut params)?,
        Command::Gen => {
            let mut ctx = Context::new(config)?;
            let points = ctx.points()?;
            return Ok(Outcome {
                body: format::write_points(&points),
                verdict: Status::Vacuous,
            });
        }
    };
    let (q, d, results, verdict) = report;
    let report = Report {
        command: command.name(),
        q,
        d,
        seed: config.seed,
        params,
        results,
        verdict,
    };
    Ok(Outcome {
        body: report.render(config.format),
        verdict,
    })
}

type Partial = (u64, usize, Value, Status);

pub fn incidence_json(report: &IncidenceReport) -> Value {
    json!({
        "point_count": report.point_count,
        "sphere_count": report.sphere_count,
        "incidences": report.incidences,
        "main_term": { "num": big(&report.main_term_num), "den": report.main_term_den },
        "scaled_deviation": big(&report.scaled_deviation),
        "error_bound_sq": big(&report.error_bound_sq),
        "theta_display": theta_display(report.theta),
        "status": report.status.as_str(),
    })
}

fn incidence(config: &RunConfig, params: &mut Map<String, Value>) -> Result<Partial, CliError> {
    let mut ctx = Context::new(config)?;
    let space = ctx.space;
    let spheres = sphere_source(config.spheres.as_deref(), space)?;
    let trials = config.trials.unwrap_or(1);
    ctx.describe_points(params);
    params.insert(
        "spheres".into(),
        json!(config.spheres.clone().unwrap_or_else(|| "all".into())),
    );
    params.insert("trials".into(), json!(trials));

    let mut verdict = Status::Vacuous;
    let mut rows = Vec::new();
    for trial in 0..trials {
        let points = ctx.points()?;
        let family = match &spheres {
            SphereSource::All => SphereFamily::all(space, DEFAULT_BUDGET)?,
            SphereSource::Random(n) => random_spheres(space, *n, &mut ctx.rng)?,
            SphereSource::File(f) => f.clone(),
        };
        let report = check_main(&points, &family)?;
        let mut engines = Map::new();
        let mut agree = true;
        for engine in Engine::ALL {
            let count = count_incidences(&points, &family, engine)?;
            agree &= count == report.incidences;
            engines.insert(engine.name().into(), json!(count));
        }
        let mut row = incidence_json(&report);
        row["trial"] = json!(trial);
        row["engines"] = Value::Object(engines);
        row["engines_agree"] = json!(agree);
        rows.push(row);
        verdict = verdict.combine(report.status);
        if !agree {
            verdict = Status::Violated;
        }
    }
    Ok((space.q(), space.dim(), json!({ "trials": rows }), verdict))
}

fn lemma_raa(config: &RunConfig) -> Result<Partial, CliError> {
    let q = config
        .q
        .ok_or_else(|| CliError::Usage("--q is required".into()))?;
    let field = FieldSpec::new(q)?;
    let space = Space::new(field, config.d.unwrap_or(2))?;
    let d = space.dim() as u32;
    let lifted = space.lifted();
    let mut checked = 0u64;
    let mut mismatches = 0u64;
    let mut at_zero = 0;
    let mut max_nonzero = 0;
    let mut histogram = std::collections::BTreeMap::<u64, u64>::new();
    for x in lifted.points(DEFAULT_BUDGET)? {
        let v = LiftedVector::new(field, x.coords())?;
        let brute = paraboloid_difference_count(&v, CountMode::Brute, DEFAULT_BUDGET)?;
        let closed = paraboloid_difference_count(&v, CountMode::Closed, DEFAULT_BUDGET)?;
        checked += 1;
        if brute != closed {
            mismatches += 1;
        }
        if v.is_zero() {
            at_zero = brute;
        } else {
            max_nonzero = max_nonzero.max(brute);
        }
        *histogram.entry(brute).or_default() += 1;
    }
    let expected_zero = q.pow(d);
    let expected_max = q.pow(d - 1);
    let ok = mismatches == 0 && at_zero == expected_zero && max_nonzero == expected_max;
    let histogram: Map<String, Value> = histogram
        .into_iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let results = json!({
        "vectors_checked": checked,
        "mismatches": mismatches,
        "value_at_zero": at_zero,
        "expected_at_zero": expected_zero,
        "max_nonzero": max_nonzero,
        "bound_nonzero": expected_max,
        "histogram": histogram,
    });
    let verdict = if ok { Status::Holds } else { Status::Violated };
    Ok((q, space.dim(), results, verdict))
}

fn identities(config: &RunConfig, params: &mut Map<String, Value>) -> Result<Partial, CliError> {
    let q = config
        .q
        .ok_or_else(|| CliError::Usage("--q is required".into()))?;
    let space = Space::new(FieldSpec::new(q)?, config.d.unwrap_or(2))?;
    let trials = config.trials.unwrap_or(100);
    params.insert("trials".into(), json!(trials));
    let mut rng = seeded_rng(config.seed);
    let cap = space.point_count().min(40) as usize;
    let mut rows = Vec::new();
    let mut failures = 0u64;
    for _ in 0..trials {
        let na = rng.random_range(1..=cap);
        let a = generate(space, &GeneratorShape::Random(na), &mut rng)?;
        let nb = rng.random_range(1..=cap);
        let b = generate(space, &GeneratorShape::Random(nb), &mut rng)?;
        let mass = rep_sum(&a, &b)?.total();
        let lhs = additive_energy(&a, &b, EnergySide::Lhs)?;
        let rhs = additive_energy(&a, &b, EnergySide::Rhs)?;
        let expected = (a.len() * b.len()) as u64;
        if mass != expected || lhs != rhs {
            failures += 1;
        }
        rows.push(json!({
            "a_size": a.len(),
            "b_size": b.len(),
            "mass": mass,
            "expected_mass": expected,
            "energy_lhs": lhs,
            "energy_rhs": rhs,
        }));
    }
    let verdict = match (trials, failures) {
        (0, _) => Status::Vacuous,
        (_, 0) => Status::Holds,
        _ => Status::Violated,
    };
    let results = json!({ "failures": failures, "trials": rows });
    Ok((q, space.dim(), results, verdict))
}

pub fn pinned_json(report: &PinnedReport) -> Value {
    let pins: Vec<Value> = report
        .pin_sizes
        .iter()
        .map(|(p, n)| json!({ "pin": p.coords(), "size": n }))
        .collect();
    json!({
        "kind": match report.kind {
            PinnedKind::Average => "average",
            PinnedKind::Fraction => "fraction",
        },
        "parameter": ratio(report.parameter),
        "point_count": report.point_count,
        "total": report.total,
        "average": report.average.map_or(Value::Null, ratio),
        "qualifying_pins": report.qualifying_pins,
        "hypothesis_met": report.hypothesis_met,
        "conclusion_holds": report.conclusion_holds,
        "status": report.status().as_str(),
        "pin_sizes": pins,
    })
}

fn pinned(config: &RunConfig, params: &mut Map<String, Value>) -> Result<Partial, CliError> {
    let epsilon = parse_unit_ratio("epsilon", &config.epsilon)?;
    let alpha = parse_unit_ratio("alpha", &config.alpha)?;
    let mut ctx = Context::new(config)?;
    ctx.describe_points(params);
    params.insert("epsilon".into(), ratio(epsilon));
    params.insert("alpha".into(), ratio(alpha));
    let points = ctx.points()?;
    let average = check_pinned_average(&points, epsilon)?;
    let fraction = check_pinned_fraction(&points, alpha)?;
    let verdict = average.status().combine(fraction.status());
    let results = json!({
        "average": pinned_json(&average),
        "fraction": pinned_json(&fraction),
    });
    Ok((ctx.space.q(), ctx.space.dim(), results, verdict))
}

pub fn beck_json(report: &BeckReport) -> Value {
    json!({
        "point_count": report.point_count,
        "total_circles": report.total_circles,
        "total_nondegenerate_circles": report.total_nondegenerate_circles,
        "determined_count": report.determined_count,
        "determined_nondegenerate": report.determined_nondegenerate,
        "bound": report.bound,
        "poor_circle_count": report.poor_circle_count,
        "poor_bound_holds": report.poor_bound_holds,
        "rich_count": report.rich_count,
        "rich_collinear_count": report.rich_collinear_count,
        "cross_check_agrees": report.cross_check_agrees,
        "hypothesis_met": report.hypothesis_met,
        "conclusion_holds": report.conclusion_holds,
        "status": report.status().as_str(),
    })
}

fn beck(config: &RunConfig, params: &mut Map<String, Value>) -> Result<Partial, CliError> {
    let mut ctx = Context::new(config)?;
    ctx.describe_points(params);
    let points = ctx.points()?;
    let report = check_beck(&points, DEFAULT_BUDGET)?;
    Ok((
        ctx.space.q(),
        ctx.space.dim(),
        beck_json(&report),
        report.status(),
    ))
}
