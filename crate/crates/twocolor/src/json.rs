//! JSON forms of the core types.
//!
//! Points are `[x, y]`, rectangles `[a, b, c, d]` for `[a, b] × [c, d]`.
//! A configuration lists its rows from low to high `y`, one character per
//! cell from low to high `x`: `0`, `1`, or `.` for a hole. Every conversion
//! round-trips exactly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use twocolor_core::forcing_gp::{GpCertificate, GpCondition, GpOutcome, GpRequirement, GpStepRecord, Line};
use twocolor_core::forcing_mt::{
    Certificate, MtCondition, PatternEntry, Requirement, ShiftEntry, StepOutcome, StepRecord,
};
use twocolor_core::markers::RectPartition;
use twocolor_core::toast::Toast;
use twocolor_core::{Config, Point, PointSet, Rect};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{0}")]
    Core(#[from] twocolor_core::Error),
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} has {found} cells, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("invalid cell {0:?}")]
    Cell(char),
    #[error("holes list does not match the '.' cells")]
    HoleMismatch,
    #[error("hole {0:?} does not match the single hole of the configuration")]
    WrongHole([i64; 2]),
    #[error("unknown certificate kind {0:?}")]
    Kind(String),
    #[error("manifest does not match the certificate: {0}")]
    Manifest(&'static str),
}

pub type PointJson = [i64; 2];
pub type RectJson = [i64; 4];

pub fn point_json(p: Point) -> PointJson {
    [p.x, p.y]
}

pub fn point_from(p: PointJson) -> Point {
    Point::new(p[0], p[1])
}

pub fn rect_json(r: &Rect) -> RectJson {
    [r.lo().x, r.hi().x, r.lo().y, r.hi().y]
}

pub fn rect_from(r: RectJson) -> Result<Rect, FormatError> {
    Ok(Rect::from_bounds(r[0], r[1], r[2], r[3])?)
}

fn points_json(s: &PointSet) -> Vec<PointJson> {
    s.iter().map(|&p| point_json(p)).collect()
}

fn points_from(v: &[PointJson]) -> PointSet {
    v.iter().map(|&p| point_from(p)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigJson {
    pub rect: RectJson,
    pub rows: Vec<String>,
    #[serde(default)]
    pub holes: Vec<PointJson>,
}

impl From<&Config> for ConfigJson {
    fn from(c: &Config) -> Self {
        let r = c.rect();
        let rows = (r.lo().y..=r.hi().y)
            .map(|y| {
                (r.lo().x..=r.hi().x)
                    .map(|x| match c.get(Point::new(x, y)) {
                        Some(true) => '1',
                        Some(false) => '0',
                        None => '.',
                    })
                    .collect()
            })
            .collect();
        ConfigJson { rect: rect_json(&r), rows, holes: c.holes().iter().map(|&p| point_json(p)).collect() }
    }
}

impl TryFrom<&ConfigJson> for Config {
    type Error = FormatError;

    fn try_from(j: &ConfigJson) -> Result<Self, FormatError> {
        let r = rect_from(j.rect)?;
        let (w, h) = (r.width() as usize, r.height() as usize);
        if j.rows.len() != h {
            return Err(FormatError::RowCount { expected: h, found: j.rows.len() });
        }
        let mut c = Config::filled(r, false);
        let mut dots = Vec::new();
        for (row, s) in j.rows.iter().enumerate() {
            let found = s.chars().count();
            if found != w {
                return Err(FormatError::RowLength { row, expected: w, found });
            }
            for (i, ch) in s.chars().enumerate() {
                let p = Point::new(r.lo().x + i as i64, r.lo().y + row as i64);
                match ch {
                    '0' => {}
                    '1' => c.set(p, true)?,
                    '.' => {
                        c.make_hole(p)?;
                        dots.push(point_json(p));
                    }
                    other => return Err(FormatError::Cell(other)),
                }
            }
        }
        let mut listed = j.holes.clone();
        listed.sort();
        dots.sort();
        if listed != dots {
            return Err(FormatError::HoleMismatch);
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftJson {
    pub t: PointJson,
    #[serde(rename = "T")]
    pub witness: Vec<PointJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternJson {
    pub f: ConfigJson,
    #[serde(rename = "F")]
    pub witness: Vec<PointJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MtConditionJson {
    pub p: ConfigJson,
    #[serde(default)]
    pub shifts: Vec<ShiftJson>,
    #[serde(default)]
    pub patterns: Vec<PatternJson>,
    #[serde(default)]
    pub odd: bool,
}

impl From<&MtCondition> for MtConditionJson {
    fn from(c: &MtCondition) -> Self {
        MtConditionJson {
            p: ConfigJson::from(&c.config),
            shifts: c
                .shifts
                .iter()
                .map(|s| ShiftJson { t: point_json(s.t), witness: points_json(&s.witness) })
                .collect(),
            patterns: c
                .patterns
                .iter()
                .map(|e| PatternJson { f: ConfigJson::from(&e.pattern), witness: points_json(&e.witness) })
                .collect(),
            odd: c.odd,
        }
    }
}

impl TryFrom<&MtConditionJson> for MtCondition {
    type Error = FormatError;

    fn try_from(j: &MtConditionJson) -> Result<Self, FormatError> {
        let shifts =
            j.shifts.iter().map(|s| ShiftEntry { t: point_from(s.t), witness: points_from(&s.witness) }).collect();
        let patterns = j
            .patterns
            .iter()
            .map(|e| Ok(PatternEntry { pattern: Config::try_from(&e.f)?, witness: points_from(&e.witness) }))
            .collect::<Result<_, FormatError>>()?;
        Ok(MtCondition { config: Config::try_from(&j.p)?, shifts, patterns, odd: j.odd })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GpConditionJson {
    pub n: i64,
    pub u: PointJson,
    #[serde(flatten)]
    pub config: ConfigJson,
}

impl From<&GpCondition> for GpConditionJson {
    fn from(c: &GpCondition) -> Self {
        let u = c.hole().or_else(|| c.config.holes().iter().next().copied()).unwrap_or(c.rect().lo());
        GpConditionJson { n: c.n, u: point_json(u), config: ConfigJson::from(&c.config) }
    }
}

impl TryFrom<&GpConditionJson> for GpCondition {
    type Error = FormatError;

    fn try_from(j: &GpConditionJson) -> Result<Self, FormatError> {
        let c = GpCondition::new(j.n, Config::try_from(&j.config)?);
        if c.hole() != Some(point_from(j.u)) {
            return Err(FormatError::WrongHole(j.u));
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub class: Vec<PointJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToastJson {
    pub layered: bool,
    pub levels: Vec<Vec<ClassJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<RectJson>,
}

impl From<&Toast> for ToastJson {
    fn from(t: &Toast) -> Self {
        ToastJson {
            layered: t.layered,
            levels: t.levels.iter().map(|l| l.iter().map(|c| ClassJson { class: points_json(c) }).collect()).collect(),
            window: t.window.as_ref().map(rect_json),
        }
    }
}

impl TryFrom<&ToastJson> for Toast {
    type Error = FormatError;

    fn try_from(j: &ToastJson) -> Result<Self, FormatError> {
        Ok(Toast {
            layered: j.layered,
            levels: j.levels.iter().map(|l| l.iter().map(|c| points_from(&c.class)).collect()).collect(),
            window: j.window.map(rect_from).transpose()?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionLevelJson {
    pub rects: Vec<RectJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub levels: Vec<PartitionLevelJson>,
}

impl From<&[RectPartition]> for PartitionJson {
    fn from(seq: &[RectPartition]) -> Self {
        PartitionJson {
            levels: seq
                .iter()
                .map(|p| PartitionLevelJson { rects: p.rects().iter().map(rect_json).collect() })
                .collect(),
        }
    }
}

impl TryFrom<&PartitionJson> for Vec<RectPartition> {
    type Error = FormatError;

    /// Each level partitions the bounding box of its rectangles.
    fn try_from(j: &PartitionJson) -> Result<Self, FormatError> {
        j.levels
            .iter()
            .map(|l| {
                let rects = l.rects.iter().map(|&r| rect_from(r)).collect::<Result<Vec<_>, _>>()?;
                let mut window = *rects.first().ok_or(twocolor_core::Error::InvalidCondition("empty level"))?;
                for r in &rects {
                    window = Rect::new(
                        Point::new(window.lo().x.min(r.lo().x), window.lo().y.min(r.lo().y)),
                        Point::new(window.hi().x.max(r.hi().x), window.hi().y.max(r.hi().y)),
                    )?;
                }
                Ok(RectPartition::new(window, rects)?)
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RequirementJson {
    Cover { g: PointJson },
    Shift { t: PointJson },
    SelfPattern,
    DuplicateOdd,
}

impl From<Requirement> for RequirementJson {
    fn from(r: Requirement) -> Self {
        match r {
            Requirement::Cover(g) => RequirementJson::Cover { g: point_json(g) },
            Requirement::Shift(t) => RequirementJson::Shift { t: point_json(t) },
            Requirement::SelfPattern => RequirementJson::SelfPattern,
            Requirement::DuplicateOdd => RequirementJson::DuplicateOdd,
        }
    }
}

impl From<RequirementJson> for Requirement {
    fn from(r: RequirementJson) -> Self {
        match r {
            RequirementJson::Cover { g } => Requirement::Cover(point_from(g)),
            RequirementJson::Shift { t } => Requirement::Shift(point_from(t)),
            RequirementJson::SelfPattern => Requirement::SelfPattern,
            RequirementJson::DuplicateOdd => Requirement::DuplicateOdd,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum OutcomeJson {
    Unchanged,
    Tiled { rect: RectJson },
    ShiftAdded { index: usize, pair: [PointJson; 2], in_place: bool },
    PatternAdded { index: usize },
    Duplicated { source: RectJson, offset: PointJson },
}

impl From<&StepOutcome> for OutcomeJson {
    fn from(o: &StepOutcome) -> Self {
        match o {
            StepOutcome::Unchanged => OutcomeJson::Unchanged,
            StepOutcome::Tiled { rect } => OutcomeJson::Tiled { rect: rect_json(rect) },
            StepOutcome::ShiftAdded { index, pair, in_place } => OutcomeJson::ShiftAdded {
                index: *index,
                pair: [point_json(pair.0), point_json(pair.1)],
                in_place: *in_place,
            },
            StepOutcome::PatternAdded { index } => OutcomeJson::PatternAdded { index: *index },
            StepOutcome::Duplicated { source, offset } => {
                OutcomeJson::Duplicated { source: rect_json(source), offset: point_json(*offset) }
            }
        }
    }
}

impl TryFrom<&OutcomeJson> for StepOutcome {
    type Error = FormatError;

    fn try_from(o: &OutcomeJson) -> Result<Self, FormatError> {
        Ok(match o {
            OutcomeJson::Unchanged => StepOutcome::Unchanged,
            OutcomeJson::Tiled { rect } => StepOutcome::Tiled { rect: rect_from(*rect)? },
            OutcomeJson::ShiftAdded { index, pair, in_place } => StepOutcome::ShiftAdded {
                index: *index,
                pair: (point_from(pair[0]), point_from(pair[1])),
                in_place: *in_place,
            },
            OutcomeJson::PatternAdded { index } => StepOutcome::PatternAdded { index: *index },
            OutcomeJson::Duplicated { source, offset } => {
                StepOutcome::Duplicated { source: rect_from(*source)?, offset: point_from(*offset) }
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson<R, O> {
    pub requirement: R,
    pub outcome: O,
}

/// What a verifier recomputes, and the shape it should find.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayManifest {
    pub steps: usize,
    pub window: RectJson,
    pub checks: Vec<String>,
}

pub const MT_KIND: &str = "mt";
pub const GP_KIND: &str = "gp";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MtCertificateJson {
    pub kind: String,
    pub condition: MtConditionJson,
    pub steps: Vec<StepJson<RequirementJson, OutcomeJson>>,
    pub manifest: ReplayManifest,
}

const MT_CHECKS: [&str; 4] = [
    "hole-free and odd sides",
    "(a) 2-coloring for every shift witness",
    "(b1)/(b2) minimality for every pattern witness",
    "per-step records",
];

impl From<&Certificate> for MtCertificateJson {
    fn from(c: &Certificate) -> Self {
        MtCertificateJson {
            kind: MT_KIND.into(),
            condition: MtConditionJson::from(&c.condition),
            steps: c
                .records
                .iter()
                .map(|r| StepJson { requirement: r.requirement.into(), outcome: (&r.outcome).into() })
                .collect(),
            manifest: ReplayManifest {
                steps: c.records.len(),
                window: rect_json(&c.condition.rect()),
                checks: MT_CHECKS.iter().map(|s| s.to_string()).collect(),
            },
        }
    }
}

impl TryFrom<&MtCertificateJson> for Certificate {
    type Error = FormatError;

    fn try_from(j: &MtCertificateJson) -> Result<Self, FormatError> {
        if j.kind != MT_KIND {
            return Err(FormatError::Kind(j.kind.clone()));
        }
        let condition = MtCondition::try_from(&j.condition)?;
        if j.manifest.steps != j.steps.len() {
            return Err(FormatError::Manifest("step count"));
        }
        if j.manifest.window != rect_json(&condition.rect()) {
            return Err(FormatError::Manifest("window"));
        }
        let records = j
            .steps
            .iter()
            .map(|s| Ok(StepRecord { requirement: s.requirement.into(), outcome: (&s.outcome).try_into()? }))
            .collect::<Result<_, FormatError>>()?;
        Ok(Certificate { condition, records })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineJson {
    Row(i64),
    Column(i64),
}

impl From<Line> for LineJson {
    fn from(l: Line) -> Self {
        match l {
            Line::Row(y) => LineJson::Row(y),
            Line::Column(x) => LineJson::Column(x),
        }
    }
}

impl From<LineJson> for Line {
    fn from(l: LineJson) -> Self {
        match l {
            LineJson::Row(y) => Line::Row(y),
            LineJson::Column(x) => Line::Column(x),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GpRequirementJson {
    Shift { s: PointJson },
    Cover { g: PointJson },
    LineClear { line: LineJson },
}

impl From<GpRequirement> for GpRequirementJson {
    fn from(r: GpRequirement) -> Self {
        match r {
            GpRequirement::Shift(s) => GpRequirementJson::Shift { s: point_json(s) },
            GpRequirement::Cover(g) => GpRequirementJson::Cover { g: point_json(g) },
            GpRequirement::LineClear(l) => GpRequirementJson::LineClear { line: l.into() },
        }
    }
}

impl From<GpRequirementJson> for GpRequirement {
    fn from(r: GpRequirementJson) -> Self {
        match r {
            GpRequirementJson::Shift { s } => GpRequirement::Shift(point_from(s)),
            GpRequirementJson::Cover { g } => GpRequirement::Cover(point_from(g)),
            GpRequirementJson::LineClear { line } => GpRequirement::LineClear(line.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GpOutcomeJson {
    Unchanged,
    Tiled { rect: RectJson, hole: PointJson },
    Discriminated { pair: [PointJson; 2], rect: RectJson, hole: PointJson },
}

impl From<&GpOutcome> for GpOutcomeJson {
    fn from(o: &GpOutcome) -> Self {
        match o {
            GpOutcome::Unchanged => GpOutcomeJson::Unchanged,
            GpOutcome::Tiled { rect, hole } => GpOutcomeJson::Tiled { rect: rect_json(rect), hole: point_json(*hole) },
            GpOutcome::Discriminated { pair, rect, hole } => GpOutcomeJson::Discriminated {
                pair: [point_json(pair.0), point_json(pair.1)],
                rect: rect_json(rect),
                hole: point_json(*hole),
            },
        }
    }
}

impl TryFrom<&GpOutcomeJson> for GpOutcome {
    type Error = FormatError;

    fn try_from(o: &GpOutcomeJson) -> Result<Self, FormatError> {
        Ok(match o {
            GpOutcomeJson::Unchanged => GpOutcome::Unchanged,
            GpOutcomeJson::Tiled { rect, hole } => {
                GpOutcome::Tiled { rect: rect_from(*rect)?, hole: point_from(*hole) }
            }
            GpOutcomeJson::Discriminated { pair, rect, hole } => GpOutcome::Discriminated {
                pair: (point_from(pair[0]), point_from(pair[1])),
                rect: rect_from(*rect)?,
                hole: point_from(*hole),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GpCertificateJson {
    pub kind: String,
    pub condition: GpConditionJson,
    pub steps: Vec<StepJson<GpRequirementJson, GpOutcomeJson>>,
    pub manifest: ReplayManifest,
}

const GP_CHECKS: [&str; 5] = [
    "single hole on a power-of-n rectangle",
    "witnessed pair for every shift",
    "hole lattice misses every cleared line",
    "grid periodicity of the emitted window",
    "line periods dividing the final sides",
];

impl From<&GpCertificate> for GpCertificateJson {
    fn from(c: &GpCertificate) -> Self {
        GpCertificateJson {
            kind: GP_KIND.into(),
            condition: GpConditionJson::from(&c.condition),
            steps: c
                .records
                .iter()
                .map(|r| StepJson { requirement: r.requirement.into(), outcome: (&r.outcome).into() })
                .collect(),
            manifest: ReplayManifest {
                steps: c.records.len(),
                window: rect_json(&c.condition.rect()),
                checks: GP_CHECKS.iter().map(|s| s.to_string()).collect(),
            },
        }
    }
}

impl TryFrom<&GpCertificateJson> for GpCertificate {
    type Error = FormatError;

    fn try_from(j: &GpCertificateJson) -> Result<Self, FormatError> {
        if j.kind != GP_KIND {
            return Err(FormatError::Kind(j.kind.clone()));
        }
        let condition = GpCondition::try_from(&j.condition)?;
        if j.manifest.steps != j.steps.len() {
            return Err(FormatError::Manifest("step count"));
        }
        if j.manifest.window != rect_json(&condition.rect()) {
            return Err(FormatError::Manifest("window"));
        }
        let records = j
            .steps
            .iter()
            .map(|s| Ok(GpStepRecord { requirement: s.requirement.into(), outcome: (&s.outcome).try_into()? }))
            .collect::<Result<_, FormatError>>()?;
        Ok(GpCertificate { condition, records })
    }
}

/// A verifier verdict.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub pass: bool,
    pub failing_positions: Vec<PointJson>,
    pub witness_used: serde_json::Value,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        let mut c = Config::from_fn(Rect::from_bounds(-1, 2, 3, 5).unwrap(), |p| (p.x + 2 * p.y) % 3 == 0);
        c.make_hole(Point::new(0, 4)).unwrap();
        c
    }

    #[test]
    fn config_layout() {
        let j = ConfigJson::from(&cfg());
        assert_eq!(j.rect, [-1, 2, 3, 5]);
        assert_eq!(j.rows.len(), 3);
        assert_eq!(j.rows[1].chars().nth(1), Some('.'));
        assert_eq!(j.holes, vec![[0, 4]]);
        assert_eq!(Config::try_from(&j).unwrap(), cfg());
    }

    #[test]
    fn config_rejects_bad_input() {
        let mut j = ConfigJson::from(&cfg());
        j.holes.clear();
        assert!(matches!(Config::try_from(&j), Err(FormatError::HoleMismatch)));
        let mut j = ConfigJson::from(&cfg());
        j.rows[0].push('1');
        assert!(matches!(Config::try_from(&j), Err(FormatError::RowLength { .. })));
        let mut j = ConfigJson::from(&cfg());
        j.rows[2] = "01x0".into();
        assert!(matches!(Config::try_from(&j), Err(FormatError::Cell('x'))));
        let mut j = ConfigJson::from(&cfg());
        j.rows.pop();
        assert!(matches!(Config::try_from(&j), Err(FormatError::RowCount { .. })));
    }

    #[test]
    fn field_names() {
        let c = MtCondition {
            config: Config::filled(Rect::from_bounds(0, 0, 0, 0).unwrap(), true),
            shifts: vec![ShiftEntry {
                t: Point::new(1, 0),
                witness: PointSet::from_rect(&Rect::from_bounds(0, 0, 0, 0).unwrap()),
            }],
            patterns: vec![],
            odd: true,
        };
        let v = serde_json::to_value(MtConditionJson::from(&c)).unwrap();
        assert_eq!(v["shifts"][0]["T"], serde_json::json!([[0, 0]]));
        assert_eq!(v["odd"], serde_json::json!(true));
        let line = serde_json::to_value(GpRequirementJson::LineClear { line: LineJson::Row(3) }).unwrap();
        assert_eq!(line, serde_json::json!({"kind": "LineClear", "line": {"row": 3}}));
    }
}
