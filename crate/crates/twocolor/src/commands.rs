//! The subcommands. Each returns a JSON report for stdout plus a verdict;
//! artifacts go to the output directory.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::json::{
    point_from, point_json, rect_json, ConfigJson, FormatError, GpCertificateJson, MtCertificateJson, Report,
    ToastJson, GP_KIND, MT_KIND,
};
use crate::render;
use crate::spec::{BuildGpSpec, BuildMtSpec, Format, LimitsSpec, MarkersSpec, StrategySpec, ToastSpec, VerifySpec};
use twocolor_core::forcing_gp::{
    build_generic_gp_chain, detect_line_period, lattice_meets, verify_grid_periodicity, GpCertificate, GpCondition,
    GpRequirement,
};
use twocolor_core::forcing_mt::{build_generic_chain, Certificate, Limits, MtCondition, Schedule, ShiftStrategy};
use twocolor_core::markers::{
    build_shifted_stack, check_partition_props, check_segment_center_cover, copy_centers, segment_threshold,
    RectPartition,
};
use twocolor_core::toast::{check_fx_strict_growth, check_toast, concentric_squares, fx_profile, Toast};
use twocolor_core::witness::window_two_coloring_report;
use twocolor_core::{find_occurrences, Config, Error as CoreError, Point, PointSet, Rect};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("failure: {0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidSpec(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Failed(_) => 4,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::ResourceLimit { .. } | CoreError::TooManySteps { .. } | CoreError::Overflow => {
                CliError::Resource(e.to_string())
            }
            _ => CliError::InvalidSpec(e.to_string()),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Core(e) => e.into(),
            other => CliError::InvalidSpec(other.to_string()),
        }
    }
}

/// Exit code for a completed command with the given verdict.
pub fn verdict_code(pass: bool) -> i32 {
    if pass {
        0
    } else {
        4
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub spec: PathBuf,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub max_side: Option<i64>,
    pub max_steps: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub pass: bool,
    pub report: Report,
    pub files: Vec<PathBuf>,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::InvalidSpec(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::InvalidSpec(format!("{}: {e}", path.display())))
}

fn relative_to(spec: &Path, p: &Path) -> PathBuf {
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        spec.parent().unwrap_or(Path::new(".")).join(p)
    }
}

fn limits(opts: &Options, spec: LimitsSpec) -> Result<Limits, CliError> {
    let d = Limits::default();
    let l = Limits {
        max_side: opts.max_side.or(spec.max_side).unwrap_or(d.max_side),
        max_steps: opts.max_steps.or(spec.max_steps).unwrap_or(d.max_steps),
    };
    if l.max_side < 1 || l.max_steps < 1 {
        return Err(CliError::InvalidSpec("limits must be positive".into()));
    }
    Ok(l)
}

struct Writer {
    dir: Option<PathBuf>,
    files: Vec<PathBuf>,
}

impl Writer {
    fn new(opts: &Options) -> Result<Self, CliError> {
        if let Some(dir) = &opts.out {
            fs::create_dir_all(dir).map_err(|e| CliError::Failed(format!("{}: {e}", dir.display())))?;
        }
        Ok(Writer { dir: opts.out.clone(), files: Vec::new() })
    }

    fn text(&mut self, name: &str, contents: &str) -> Result<(), CliError> {
        if let Some(dir) = &self.dir {
            let path = dir.join(name);
            fs::write(&path, contents).map_err(|e| CliError::Failed(format!("{}: {e}", path.display())))?;
            self.files.push(path);
        }
        Ok(())
    }

    fn json<T: Serialize>(&mut self, name: &str, value: &T) -> Result<(), CliError> {
        let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Failed(e.to_string()))?;
        s.push('\n');
        self.text(name, &s)
    }

    fn config(&mut self, stem: &str, c: &Config, format: Format) -> Result<(), CliError> {
        self.json(&format!("{stem}.json"), &ConfigJson::from(c))?;
        match format {
            Format::Json => Ok(()),
            Format::Pgm => self.text(&format!("{stem}.pgm"), &render::config_pgm(c)),
            Format::Ascii => self.text(&format!("{stem}.txt"), &render::config_ascii(c)),
        }
    }
}

fn mt_failures(cert: &Certificate) -> (Vec<String>, Vec<[i64; 2]>) {
    let fails = cert.replay();
    let positions = fails
        .iter()
        .filter_map(|f| match f {
            twocolor_core::forcing_mt::ReplayFailure::Invalid(v) => v.at.map(point_json),
            _ => None,
        })
        .collect();
    (fails.iter().map(|f| f.to_string()).collect(), positions)
}

fn mt_report(cert: &Certificate, extra: Vec<String>, extra_positions: Vec<[i64; 2]>) -> Report {
    let (mut failures, mut positions) = mt_failures(cert);
    failures.extend(extra);
    positions.extend(extra_positions);
    let c = &cert.condition;
    Report {
        pass: failures.is_empty(),
        failing_positions: positions,
        witness_used: json!({
            "shifts": c.shifts.iter().map(|s| json!({"t": point_json(s.t), "size": s.witness.len()})).collect::<Vec<_>>(),
            "patterns": c.patterns.iter().map(|e| json!({"rect": rect_json(&e.pattern.rect()), "size": e.witness.len()})).collect::<Vec<_>>(),
        }),
        failures,
        details: json!({"kind": MT_KIND, "window": rect_json(&c.rect()), "steps": cert.records.len(), "odd": c.odd}),
    }
}

pub fn build_mt(opts: &Options) -> Result<Outcome, CliError> {
    let spec: BuildMtSpec = read_json(&opts.spec)?;
    let seed = match (&spec.seed, &spec.random) {
        (Some(c), None) => Config::try_from(c)?,
        (None, Some(r)) => r.generate()?,
        _ => return Err(CliError::InvalidSpec("give exactly one of \"seed\" and \"random\"".into())),
    };
    let limits = limits(opts, spec.limits)?;
    let sched = Schedule::new(spec.schedule.iter().map(|&r| r.into()).collect())?;
    let strategy = match spec.strategy {
        StrategySpec::PreferInPlace => ShiftStrategy::PreferInPlace,
        StrategySpec::Tiling => ShiftStrategy::Tiling,
    };
    let start = MtCondition::new(seed, spec.odd);
    let build = build_generic_chain(&start, &sched, &limits, strategy)?;
    let cert = build.certificate;
    let report = mt_report(&cert, Vec::new(), Vec::new());
    if !report.pass {
        return Err(CliError::Failed(format!("built certificate does not replay: {}", report.failures.join("; "))));
    }
    let mut w = Writer::new(opts)?;
    w.config("window", &cert.condition.config, opts.format.or(spec.format).unwrap_or_default())?;
    w.json("certificate.json", &MtCertificateJson::from(&cert))?;
    Ok(Outcome { pass: true, report, files: w.files })
}

/// Everything the emitted grid periodicity window must satisfy.
fn gp_window_failures(cert: &GpCertificate, window: &Config) -> (Vec<String>, Vec<[i64; 2]>) {
    let c = &cert.condition;
    let mut failures = Vec::new();
    let mut positions = Vec::new();
    let Some(u) = c.hole() else {
        return (vec!["final condition has no single hole".into()], positions);
    };
    let (w, h) = (c.width(), c.height());
    if !verify_grid_periodicity(window, w, h, u) {
        failures.push("window is not grid periodic for the final block size".into());
    }
    let witness = PointSet::from_rect(&Rect::from_bounds(-w, w, -h, h).expect("positive sides"));
    for rec in &cert.records {
        match rec.requirement {
            GpRequirement::LineClear(line) => {
                if lattice_meets(u, w, h, line) {
                    failures.push(format!("hole lattice meets {line}"));
                    continue;
                }
                let side = match line {
                    twocolor_core::forcing_gp::Line::Row(_) => w,
                    twocolor_core::forcing_gp::Line::Column(_) => h,
                };
                match detect_line_period(window, line) {
                    Ok(Some(p)) if side % p as i64 == 0 => {}
                    Ok(p) => failures.push(format!("{line}: period {p:?} does not divide {side}")),
                    Err(e) => failures.push(format!("{line}: {e}")),
                }
            }
            GpRequirement::Shift(s) => {
                let rep = window_two_coloring_report(window, s, &witness);
                if !rep.pass || rep.admissible == 0 {
                    failures.push(format!("shift {s} is not 2-colored on the window"));
                    positions.extend(rep.failing.iter().take(16).map(|&p| point_json(p)));
                }
            }
            GpRequirement::Cover(_) => {}
        }
    }
    (failures, positions)
}

fn gp_report(cert: &GpCertificate, window: &Config, extra: Vec<String>) -> Report {
    let mut failures: Vec<String> = cert.replay().iter().map(|f| f.to_string()).collect();
    failures.extend(extra);
    let (more, positions) = if failures.is_empty() { gp_window_failures(cert, window) } else { Default::default() };
    failures.extend(more);
    let c = &cert.condition;
    Report {
        pass: failures.is_empty(),
        failing_positions: positions,
        witness_used: json!({
            "T": rect_json(&Rect::from_bounds(-c.width(), c.width(), -c.height(), c.height()).expect("positive sides")),
            "pairs": cert.records.iter().filter_map(|r| match r.outcome {
                twocolor_core::forcing_gp::GpOutcome::Discriminated { pair, .. } => Some([point_json(pair.0), point_json(pair.1)]),
                _ => None,
            }).collect::<Vec<_>>(),
        }),
        failures,
        details: json!({
            "kind": GP_KIND,
            "n": c.n,
            "block": rect_json(&c.rect()),
            "hole": c.hole().map(point_json),
            "window": rect_json(&window.rect()),
            "steps": cert.records.len(),
        }),
    }
}

pub fn build_gp(opts: &Options) -> Result<Outcome, CliError> {
    let spec: BuildGpSpec = read_json(&opts.spec)?;
    let seed = match (&spec.seed, &spec.random) {
        (Some(c), None) => GpCondition::try_from(c)?,
        (None, Some(r)) => {
            let mut c = r.generate()?;
            c.make_hole(c.rect().hi())?;
            GpCondition::new(spec.n, c)
        }
        _ => return Err(CliError::InvalidSpec("give exactly one of \"seed\" and \"random\"".into())),
    };
    if seed.n != spec.n {
        return Err(CliError::InvalidSpec("seed base differs from \"n\"".into()));
    }
    if spec.copies < 2 {
        return Err(CliError::InvalidSpec("\"copies\" must be at least 2".into()));
    }
    let limits = limits(opts, spec.limits)?;
    let sched: Vec<GpRequirement> = spec.schedule.iter().map(|&r| r.into()).collect();
    let build = build_generic_gp_chain(&seed, &sched, &limits)?;
    let cert = build.certificate;
    let window = cert.condition.periodic_window(spec.copies)?;
    let report = gp_report(&cert, &window, Vec::new());
    if !report.pass {
        return Err(CliError::Failed(format!("built certificate does not verify: {}", report.failures.join("; "))));
    }
    let mut w = Writer::new(opts)?;
    w.config("window", &window, opts.format.or(spec.format).unwrap_or_default())?;
    w.json("certificate.json", &GpCertificateJson::from(&cert))?;
    Ok(Outcome { pass: true, report, files: w.files })
}

fn window_diff(expected: &Config, found: &Config) -> (Vec<String>, Vec<[i64; 2]>) {
    if expected.rect() != found.rect() {
        return (vec![format!("window rect {} differs from {}", found.rect(), expected.rect())], Vec::new());
    }
    let diff: Vec<[i64; 2]> =
        expected.rect().points().filter(|&p| expected.get(p) != found.get(p)).map(point_json).collect();
    if diff.is_empty() {
        (Vec::new(), diff)
    } else {
        (vec![format!("window differs from the certificate at {} cells", diff.len())], diff)
    }
}

pub fn verify(opts: &Options) -> Result<Outcome, CliError> {
    let spec: VerifySpec = read_json(&opts.spec)?;
    let raw: Value = read_json(&relative_to(&opts.spec, &spec.certificate))?;
    let window = match &spec.window {
        Some(p) => Some(Config::try_from(&read_json::<ConfigJson>(&relative_to(&opts.spec, p))?)?),
        None => None,
    };
    let kind = raw.get("kind").and_then(Value::as_str).unwrap_or_default().to_string();
    let parse = |e: serde_json::Error| CliError::InvalidSpec(format!("certificate: {e}"));
    let report = match kind.as_str() {
        MT_KIND => {
            let j: MtCertificateJson = serde_json::from_value(raw).map_err(parse)?;
            let cert = Certificate::try_from(&j)?;
            let (extra, positions) = match &window {
                Some(w) => window_diff(&cert.condition.config, w),
                None => Default::default(),
            };
            mt_report(&cert, extra, positions)
        }
        GP_KIND => {
            let j: GpCertificateJson = serde_json::from_value(raw).map_err(parse)?;
            let cert = GpCertificate::try_from(&j)?;
            let c = &cert.condition;
            let window = match window {
                Some(w) => w,
                None => c.periodic_window(twocolor_core::forcing_gp::WINDOW_COPIES)?,
            };
            let copies = window.rect().width() / c.width().max(1);
            let expected = c.periodic_window(copies.max(1))?;
            let (extra, positions) = window_diff(&expected, &window);
            let mut r = gp_report(&cert, &window, extra);
            r.failing_positions.extend(positions);
            r
        }
        other => return Err(FormatError::Kind(other.into()).into()),
    };
    Ok(Outcome { pass: report.pass, report, files: Vec::new() })
}

pub fn toast(opts: &Options) -> Result<Outcome, CliError> {
    let spec: ToastSpec = read_json(&opts.spec)?;
    let t = match (&spec.toast, &spec.input, spec.concentric) {
        (Some(j), None, None) => Toast::try_from(j)?,
        (None, Some(p), None) => Toast::try_from(&read_json::<ToastJson>(&relative_to(&opts.spec, p))?)?,
        (None, None, Some(k)) => concentric_squares(k),
        _ => return Err(CliError::InvalidSpec("give exactly one of \"toast\", \"input\" and \"concentric\"".into())),
    };
    let probes: Vec<Point> = spec.probes.iter().map(|&p| point_from(p)).collect();
    let checked = check_toast(&t);
    let mut failures: Vec<String> = checked.violations.iter().map(|v| v.to_string()).collect();
    let mut positions = Vec::new();
    let growth = if t.layered {
        let g = check_fx_strict_growth(&t, &probes)?;
        for &(x, n) in &g.failures {
            failures.push(format!("f_x does not grow at {x} between levels {n} and {}", n + 1));
            positions.push(point_json(x));
        }
        json!({"failures": g.failures.len(), "uncovered": g.uncovered.iter().map(|&p| point_json(p)).collect::<Vec<_>>()})
    } else {
        Value::Null
    };
    let report = Report {
        pass: failures.is_empty(),
        failing_positions: positions,
        witness_used: json!({"probes": spec.probes}),
        failures,
        details: json!({
            "layered": t.layered,
            "levels": t.levels.len(),
            "rim_exempt": checked.rim_exempt,
            "profiles": probes.iter().map(|&x| json!({"probe": point_json(x), "f": fx_profile(&t, x)})).collect::<Vec<_>>(),
            "growth": growth,
        }),
    };
    let mut w = Writer::new(opts)?;
    w.json("toast.json", &ToastJson::from(&t))?;
    match opts.format.or(spec.format).unwrap_or_default() {
        Format::Json => {}
        Format::Pgm => w.text("toast.pgm", &render::toast_pgm(&t))?,
        Format::Ascii => w.text("toast.txt", &render::toast_ascii(&t))?,
    }
    Ok(Outcome { pass: report.pass, report, files: w.files })
}

fn cover_json(c: &twocolor_core::markers::SegmentCover) -> Value {
    json!({"pass": c.pass, "segments": c.segments, "counterexample": c.counterexample.as_ref().map(rect_json)})
}

pub fn markers(opts: &Options) -> Result<Outcome, CliError> {
    let spec: MarkersSpec = read_json(&opts.spec)?;
    let a = spec.a;
    if !(0..=64).contains(&a) {
        return Err(CliError::InvalidSpec("\"a\" must lie in 0..=64".into()));
    }
    let m = 2 * a + 1;
    let side = spec.window_side.unwrap_or(5 * m * m);
    let max_side = limits(opts, LimitsSpec::default())?.max_side;
    if side > max_side {
        return Err(CliError::Resource(format!("side {side} exceeds the limit {max_side}")));
    }
    let threshold = segment_threshold(a);
    let seg_len = spec.seg_len.unwrap_or(threshold + 1);
    let seed = match &spec.seed {
        Some(c) => Config::try_from(c)?,
        None => crate::spec::RandomSeed { width: m, height: m, seed: spec.random_seed, origin: [-a, -a] }.generate()?,
    };
    let window = Rect::from_bounds(0, side - 1, 0, side - 1)?;
    let stack = build_shifted_stack(&seed, side - 1)?;
    let centers = copy_centers(a, &window);
    let occ = find_occurrences(&stack, &seed, false);
    let stray: Vec<[i64; 2]> = centers.iter().filter(|c| !occ.contains(c)).map(|&c| point_json(c)).collect();
    let cover = check_segment_center_cover(a, &window, seg_len);
    let short = check_segment_center_cover(a, &window, m);
    let mut failures = Vec::new();
    if !cover.pass {
        failures.push(format!("a segment of length {seg_len} misses every copy center"));
    }
    if !stray.is_empty() {
        failures.push(format!("{} centers carry no copy of the seed", stray.len()));
    }
    let partitions = match &spec.partitions {
        Some(j) => {
            let seq: Vec<RectPartition> = j.try_into()?;
            let probes: Vec<Point> = spec.probes.iter().map(|&p| point_from(p)).collect();
            let rep = check_partition_props(&seq, &probes);
            json!({
                "levels": rep.levels.iter().map(|l| json!({"v": l.v, "w": l.w, "rects": l.rects})).collect::<Vec<_>>(),
                "profiles": rep.profiles.iter().map(|p| json!({"probe": point_json(p.probe), "phi": p.phi, "diverging": p.diverging})).collect::<Vec<_>>(),
                "same_window": rep.same_window,
                "v_increasing": rep.v_increasing,
                "flagged": rep.flagged.iter().map(|&p| point_json(p)).collect::<Vec<_>>(),
            })
        }
        None => Value::Null,
    };
    let mut positions = stray;
    if let Some(r) = cover.counterexample {
        positions.push(point_json(r.lo()));
    }
    let report = Report {
        pass: failures.is_empty(),
        failing_positions: positions,
        witness_used: json!({"centers": centers.len()}),
        failures,
        details: json!({
            "a": a,
            "threshold": threshold,
            "seg_len": seg_len,
            "window": rect_json(&window),
            "cover": cover_json(&cover),
            "short_segment": json!({"seg_len": m, "result": cover_json(&short)}),
            "partitions": partitions,
        }),
    };
    let mut w = Writer::new(opts)?;
    w.config("stack", &stack, opts.format.or(spec.format).unwrap_or_default())?;
    Ok(Outcome { pass: report.pass, report, files: w.files })
}
