//! Grid periodicity conditions.
//!
//! A condition over base `n ≥ 2` is a configuration on a rectangle whose
//! sides are powers of `n`, defined everywhere except one hole `u`. A
//! condition `p` extends `q` when `R(p)` is tiled by translates `R(q) + t`,
//! `t ∈ A`, each carrying a copy of `q`, and `u(p) = u(q) + t` for one
//! `t ∈ A`. The remaining old-hole slots `u(q) + t` are free; they default
//! to 0 here.
//!
//! Because every extension is a tiling, the final configuration of a build
//! is constant on each residue class modulo its block size except the class
//! of the hole, and any further extension agrees with its periodic
//! expansion off the hole lattice `u + (wℤ × hℤ)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::config::{tile_blocks, Config, PatternSet};
use crate::error::{Error, Result};
use crate::forcing_mt::Limits;
use crate::lattice::{lattice_points_in, Lattice, Point, Rect};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpCondition {
    pub n: i64,
    pub config: Config,
}

/// `true` iff `x = nᵉ` for some `e ≥ 0`.
pub fn is_power_of(x: i64, n: i64) -> bool {
    if x < 1 || n < 2 {
        return false;
    }
    let mut x = x;
    while x % n == 0 {
        x /= n;
    }
    x == 1
}

/// Smallest power of `n` that is at least `k`.
fn power_at_least(n: i64, k: i64) -> Result<i64> {
    let mut p = 1i64;
    while p < k {
        p = p.checked_mul(n).ok_or(Error::Overflow)?;
    }
    Ok(p)
}

impl GpCondition {
    pub fn new(n: i64, config: Config) -> Self {
        GpCondition { n, config }
    }

    pub fn rect(&self) -> Rect {
        self.config.rect()
    }

    pub fn width(&self) -> i64 {
        self.rect().width()
    }

    pub fn height(&self) -> i64 {
        self.rect().height()
    }

    /// The hole, if there is exactly one.
    pub fn hole(&self) -> Option<Point> {
        let holes = self.config.holes();
        if holes.len() == 1 {
            holes.iter().next().copied()
        } else {
            None
        }
    }

    /// `u + (wℤ × hℤ)`: the positions left undecided by every extension.
    pub fn hole_lattice(&self) -> Option<Lattice> {
        Lattice::new(self.hole()?, self.width(), self.height()).ok()
    }

    /// `copies × copies` translates of `p`, holes included, starting at
    /// `R(p)`.
    pub fn periodic_window(&self, copies: i64) -> Result<Config> {
        tile_blocks(&self.config, (0, copies - 1), (0, copies - 1), |_, _| false)
    }
}

pub fn validate_gp(c: &GpCondition) -> bool {
    c.n >= 2 && is_power_of(c.width(), c.n) && is_power_of(c.height(), c.n) && c.hole().is_some()
}

/// Block ranges of `R(p)` as a tiling by `R(q)`, if it is one.
fn block_ranges(p: &Rect, q: &Rect) -> Option<((i64, i64), (i64, i64))> {
    let (w, h) = (q.width(), q.height());
    let dx = p.lo().x - q.lo().x;
    let dy = p.lo().y - q.lo().y;
    if dx % w != 0 || dy % h != 0 || p.width() % w != 0 || p.height() % h != 0 {
        return None;
    }
    let (i0, j0) = (dx / w, dy / h);
    Some(((i0, i0 + p.width() / w - 1), (j0, j0 + p.height() / h - 1)))
}

/// `c1 ≤ c2`: `R(c1)` is tiled by copies of `c2` and the hole of `c1` sits
/// at a translate of the hole of `c2`.
pub fn is_extension_gp(c1: &GpCondition, c2: &GpCondition) -> bool {
    if c1.n != c2.n {
        return false;
    }
    let (Some(up), Some(uq)) = (c1.hole(), c2.hole()) else {
        return false;
    };
    let (q, p) = (&c2.config, &c1.config);
    let Some(((i0, i1), (j0, j1))) = block_ranges(&p.rect(), &q.rect()) else {
        return false;
    };
    let (w, h) = (c2.width(), c2.height());
    let d = up - uq;
    if d.x % w != 0 || d.y % h != 0 || !p.rect().contains(up) {
        return false;
    }
    for i in i0..=i1 {
        for j in j0..=j1 {
            let t = Point::new(i * w, j * h);
            if !q.defined_points().all(|c| p.get(c + t) == q.get(c)) {
                return false;
            }
        }
    }
    true
}

/// Tile `q` over the block ranges, put the hole at `u(q) + t*` and fill the
/// other old-hole slots from `hole_fills` (absolute positions; 0 if absent).
pub fn extend_tile_gp(
    q: &GpCondition,
    ranges: ((i64, i64), (i64, i64)),
    t_star: Point,
    hole_fills: &BTreeMap<Point, bool>,
) -> Result<GpCondition> {
    let u = q.hole().ok_or(Error::InvalidCondition("condition needs exactly one hole"))?;
    let ((i0, i1), (j0, j1)) = ranges;
    let (w, h) = (q.width(), q.height());
    let in_a = t_star.x % w == 0
        && t_star.y % h == 0
        && (i0..=i1).contains(&(t_star.x / w))
        && (j0..=j1).contains(&(t_star.y / h));
    if !in_a {
        return Err(Error::NotInOffsets(t_star));
    }
    let mut p = tile_blocks(&q.config, (i0, i1), (j0, j1), |_, _| false)?;
    for i in i0..=i1 {
        for j in j0..=j1 {
            let t = Point::new(i * w, j * h);
            if t != t_star {
                let slot = u + t;
                p.set(slot, hole_fills.get(&slot).copied().unwrap_or(false))?;
            }
        }
    }
    Ok(GpCondition { n: q.n, config: p })
}

/// A line of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Line {
    Row(i64),
    Column(i64),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(y) => write!(f, "row {y}"),
            Line::Column(x) => write!(f, "column {x}"),
        }
    }
}

/// Whether the lattice `u + (wℤ × hℤ)` meets `line`.
pub fn lattice_meets(u: Point, w: i64, h: i64, line: Line) -> bool {
    match line {
        Line::Row(y) => (y - u.y).rem_euclid(h) == 0,
        Line::Column(x) => (x - u.x).rem_euclid(w) == 0,
    }
}

struct GpPlan {
    ranges: ((i64, i64), (i64, i64)),
    t_star: Point,
    fills: BTreeMap<Point, bool>,
}

impl GpPlan {
    fn sides(&self, q: &GpCondition) -> Result<(i64, i64)> {
        let ((i0, i1), (j0, j1)) = self.ranges;
        let w = (i1 - i0 + 1).checked_mul(q.width()).ok_or(Error::Overflow)?;
        let h = (j1 - j0 + 1).checked_mul(q.height()).ok_or(Error::Overflow)?;
        Ok((w, h))
    }

    fn apply(&self, q: &GpCondition) -> Result<GpCondition> {
        extend_tile_gp(q, self.ranges, self.t_star, &self.fills)
    }
}

/// Block range `∋ 0` covering `target`, with a power-of-`n` count of at
/// least `min_count`, grown toward the target.
fn gp_axis(lo: i64, side: i64, target: i64, n: i64, min_count: i64) -> Result<(i64, i64)> {
    let k = target.checked_sub(lo).ok_or(Error::Overflow)?.div_euclid(side);
    let count = power_at_least(n, (k.abs() + 1).max(min_count))?;
    Ok(if k < 0 { (1 - count, 0) } else { (0, count - 1) })
}

/// The lexicographically greatest offset of `A` outside `exclude`,
/// preferring those whose new hole lattice misses every line in `avoid`.
/// Lines in `must_avoid` are never hit.
fn pick_hole(
    q: &GpCondition,
    ranges: ((i64, i64), (i64, i64)),
    exclude: &[Point],
    must_avoid: &[Line],
    avoid: &[Line],
) -> Result<Option<Point>> {
    let u = q.hole().ok_or(Error::InvalidCondition("condition needs exactly one hole"))?;
    let ((i0, i1), (j0, j1)) = ranges;
    let (w, h) = (q.width(), q.height());
    let (nw, nh) = ((i1 - i0 + 1) * w, (j1 - j0 + 1) * h);
    let misses = |t: Point, lines: &[Line]| lines.iter().all(|&l| !lattice_meets(u + t, nw, nh, l));
    let mut fallback = None;
    for i in (i0..=i1).rev() {
        for j in (j0..=j1).rev() {
            let t = Point::new(i * w, j * h);
            if exclude.contains(&t) || !misses(t, must_avoid) {
                continue;
            }
            if misses(t, avoid) {
                return Ok(Some(t));
            }
            fallback = fallback.or(Some(t));
        }
    }
    Ok(fallback)
}

fn plan_cover_gp(q: &GpCondition, g: Point, avoid: &[Line]) -> Result<Option<GpPlan>> {
    let r = q.rect();
    if r.contains(g) {
        return Ok(None);
    }
    let ranges = (gp_axis(r.lo().x, r.width(), g.x, q.n, 1)?, gp_axis(r.lo().y, r.height(), g.y, q.n, 1)?);
    let t_star = pick_hole(q, ranges, &[], &[], avoid)?.unwrap_or(Point::ZERO);
    Ok(Some(GpPlan { ranges, t_star, fills: BTreeMap::new() }))
}

/// Extend so that `g ∈ R(p)`.
pub fn extend_cover_gp(q: &GpCondition, g: Point) -> Result<GpCondition> {
    match plan_cover_gp(q, g, &[])? {
        Some(plan) => plan.apply(q),
        None => Ok(q.clone()),
    }
}

fn plan_discriminate(q: &GpCondition, s: Point, avoid: &[Line]) -> Result<GpPlan> {
    if s.is_zero() {
        return Err(Error::ZeroShift);
    }
    let u = q.hole().ok_or(Error::InvalidCondition("condition needs exactly one hole"))?;
    let r = q.rect();
    let (w, h) = (q.width(), q.height());
    let target = u.checked_add(s)?;
    // grow the shorter axis so the hole has somewhere to move
    let mut min_x = if w <= h { q.n } else { 1 };
    let mut min_y = if w <= h { 1 } else { q.n };
    loop {
        let ranges = (gp_axis(r.lo().x, w, target.x, q.n, min_x)?, gp_axis(r.lo().y, h, target.y, q.n, min_y)?);
        if let Some(t_star) = pick_hole(q, ranges, &[Point::ZERO, s], &[], avoid)? {
            // value that u(q) + s will take, then the opposite at u(q)
            let rel = target - r.lo();
            let cell = r.lo() + Point::new(rel.x.rem_euclid(w), rel.y.rem_euclid(h));
            let mut fills = BTreeMap::new();
            let v = if cell == u {
                fills.insert(target, false);
                false
            } else {
                q.config.get(cell).ok_or(Error::InvalidCondition("condition needs exactly one hole"))?
            };
            fills.insert(u, !v);
            return Ok(GpPlan { ranges, t_star, fills });
        }
        if min_x <= min_y {
            min_x = min_x.checked_mul(q.n).ok_or(Error::Overflow)?;
        } else {
            min_y = min_y.checked_mul(q.n).ok_or(Error::Overflow)?;
        }
    }
}

/// Extend `q` so that `u(q) + s ∈ R(p)`, `u(q)` is defined, and
/// `p(u(q)) ≠ p(u(q) + s)`. Returns the pair `(u(q), u(q) + s)`.
///
/// At least `n` blocks are added along one axis so that the hole can move
/// off `u(q)`.
pub fn discriminate_shift_gp(q: &GpCondition, s: Point) -> Result<(GpCondition, (Point, Point))> {
    let plan = plan_discriminate(q, s, &[])?;
    let u = q.hole().ok_or(Error::InvalidCondition("condition needs exactly one hole"))?;
    Ok((plan.apply(q)?, (u, u + s)))
}

fn plan_line_clear(q: &GpCondition, line: Line, avoid: &[Line]) -> Result<Option<GpPlan>> {
    let u = q.hole().ok_or(Error::InvalidCondition("condition needs exactly one hole"))?;
    if !lattice_meets(u, q.width(), q.height(), line) {
        return Ok(None);
    }
    let ranges = match line {
        Line::Row(_) => ((0, 0), (0, q.n - 1)),
        Line::Column(_) => ((0, q.n - 1), (0, 0)),
    };
    let t_star = pick_hole(q, ranges, &[], &[line], avoid)?.ok_or(Error::BadLine)?;
    Ok(Some(GpPlan { ranges, t_star, fills: BTreeMap::new() }))
}

/// Extend so that the hole lattice misses `line`: `n` blocks are placed
/// across the line and the hole moves to a block whose lattice avoids it.
pub fn clear_line_gp(q: &GpCondition, line: Line) -> Result<GpCondition> {
    match plan_line_clear(q, line, &[])? {
        Some(plan) => plan.apply(q),
        None => Ok(q.clone()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpRequirement {
    Shift(Point),
    Cover(Point),
    LineClear(Line),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GpOutcome {
    Unchanged,
    Tiled { rect: Rect, hole: Point },
    Discriminated { pair: (Point, Point), rect: Rect, hole: Point },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpStepRecord {
    pub requirement: GpRequirement,
    pub outcome: GpOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpCertificate {
    pub condition: GpCondition,
    pub records: Vec<GpStepRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GpReplayFailure {
    Invalid,
    NotCovered { step: usize, point: Point },
    PairNotSeparated { step: usize, pair: (Point, Point) },
    LineHit { step: usize, line: Line },
    WrongRequirement { step: usize },
}

impl fmt::Display for GpReplayFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GpReplayFailure::Invalid => write!(f, "final condition is invalid"),
            GpReplayFailure::NotCovered { step, point } => write!(f, "step {step}: {point} not covered"),
            GpReplayFailure::PairNotSeparated { step, pair } => {
                write!(f, "step {step}: pair {} / {} not separated", pair.0, pair.1)
            }
            GpReplayFailure::LineHit { step, line } => write!(f, "step {step}: hole lattice meets {line}"),
            GpReplayFailure::WrongRequirement { step } => write!(f, "step {step}: outcome does not fit requirement"),
        }
    }
}

impl GpCertificate {
    /// Check each record against the final condition. Empty means the
    /// certificate holds.
    pub fn replay(&self) -> Vec<GpReplayFailure> {
        let c = &self.condition;
        let p = &c.config;
        let mut out = Vec::new();
        if !validate_gp(c) {
            out.push(GpReplayFailure::Invalid);
            return out;
        }
        let u = c.hole().expect("validated");
        for (step, rec) in self.records.iter().enumerate() {
            match (rec.requirement, &rec.outcome) {
                (GpRequirement::Shift(s), GpOutcome::Discriminated { pair, .. }) => {
                    let separated =
                        pair.1 - pair.0 == s && matches!((p.get(pair.0), p.get(pair.1)), (Some(a), Some(b)) if a != b);
                    if !separated {
                        out.push(GpReplayFailure::PairNotSeparated { step, pair: *pair });
                    }
                }
                (GpRequirement::Cover(g), GpOutcome::Unchanged | GpOutcome::Tiled { .. }) => {
                    if !p.rect().contains(g) {
                        out.push(GpReplayFailure::NotCovered { step, point: g });
                    }
                }
                (GpRequirement::LineClear(line), GpOutcome::Unchanged | GpOutcome::Tiled { .. }) => {
                    if lattice_meets(u, c.width(), c.height(), line) {
                        out.push(GpReplayFailure::LineHit { step, line });
                    }
                }
                _ => out.push(GpReplayFailure::WrongRequirement { step }),
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct GpBuild {
    pub certificate: GpCertificate,
    pub chain: Vec<GpCondition>,
}

pub fn build_generic_gp(seed: &GpCondition, sched: &[GpRequirement], limits: &Limits) -> Result<GpCertificate> {
    Ok(build_generic_gp_chain(seed, sched, limits)?.certificate)
}

/// Meet each requirement in order. New holes avoid every scheduled line
/// when possible.
pub fn build_generic_gp_chain(seed: &GpCondition, sched: &[GpRequirement], limits: &Limits) -> Result<GpBuild> {
    if sched.len() > limits.max_steps {
        return Err(Error::TooManySteps { steps: sched.len(), max_steps: limits.max_steps });
    }
    if !validate_gp(seed) {
        return Err(Error::InvalidCondition("seed fails validation"));
    }
    if sched.iter().any(|r| matches!(r, GpRequirement::Shift(s) if s.is_zero())) {
        return Err(Error::ZeroShift);
    }
    let lines: Vec<Line> = sched
        .iter()
        .filter_map(|r| match r {
            GpRequirement::LineClear(l) => Some(*l),
            _ => None,
        })
        .collect();
    let check = |q: &GpCondition, plan: &GpPlan| -> Result<()> {
        let (w, h) = plan.sides(q).map_err(|_| Error::ResourceLimit { side: i64::MAX, max_side: limits.max_side })?;
        if w.max(h) > limits.max_side {
            return Err(Error::ResourceLimit { side: w.max(h), max_side: limits.max_side });
        }
        Ok(())
    };
    let mut cur = seed.clone();
    let mut chain = alloc::vec![seed.clone()];
    let mut records = Vec::new();
    for &req in sched {
        let plan = match req {
            GpRequirement::Shift(s) => Some(plan_discriminate(&cur, s, &lines)?),
            GpRequirement::Cover(g) => plan_cover_gp(&cur, g, &lines)?,
            GpRequirement::LineClear(l) => plan_line_clear(&cur, l, &lines)?,
        };
        let (next, outcome) = match plan {
            None => (cur.clone(), GpOutcome::Unchanged),
            Some(plan) => {
                check(&cur, &plan)?;
                let next = plan.apply(&cur)?;
                let (rect, hole) = (next.rect(), next.hole().expect("tiling keeps one hole"));
                let outcome = match req {
                    GpRequirement::Shift(s) => {
                        let u = cur.hole().expect("validated");
                        GpOutcome::Discriminated { pair: (u, u + s), rect, hole }
                    }
                    _ => GpOutcome::Tiled { rect, hole },
                };
                (next, outcome)
            }
        };
        records.push(GpStepRecord { requirement: req, outcome });
        chain.push(next.clone());
        cur = next;
    }
    Ok(GpBuild { certificate: GpCertificate { condition: cur, records }, chain })
}

/// The minimal period of `x` restricted to `line` within the window, or
/// `None` for segments shorter than 2.
pub fn detect_line_period(x: &Config, line: Line) -> Result<Option<u64>> {
    let r = x.rect();
    let points: Vec<Point> = match line {
        Line::Row(y) if (r.lo().y..=r.hi().y).contains(&y) => (r.lo().x..=r.hi().x).map(|i| Point::new(i, y)).collect(),
        Line::Column(i) if (r.lo().x..=r.hi().x).contains(&i) => {
            (r.lo().y..=r.hi().y).map(|y| Point::new(i, y)).collect()
        }
        _ => return Err(Error::BadLine),
    };
    let seg: Vec<bool> = points.iter().map(|&g| x.get(g).ok_or(Error::BadLine)).collect::<Result<_>>()?;
    if seg.len() < 2 {
        return Ok(None);
    }
    let period = (1..=seg.len()).find(|&p| (p..seg.len()).all(|i| seg[i] == seg[i - p]));
    Ok(period.map(|p| p as u64))
}

/// Every residue class `k + (wℤ × hℤ)` other than that of `u` is constant
/// on the defined cells of `x`.
pub fn verify_grid_periodicity(x: &Config, w: i64, h: i64, u: Point) -> bool {
    if w < 1 || h < 1 {
        return false;
    }
    let mut seen: BTreeMap<(i64, i64), bool> = BTreeMap::new();
    let hole_class = (u.x.rem_euclid(w), u.y.rem_euclid(h));
    for g in x.defined_points() {
        let class = (g.x.rem_euclid(w), g.y.rem_euclid(h));
        if class == hole_class {
            continue;
        }
        let v = x.get(g).expect("defined");
        if *seen.entry(class).or_insert(v) != v {
            return false;
        }
    }
    true
}

/// Copies of the final condition used as the emitted window.
pub const WINDOW_COPIES: i64 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    /// In-window lattice points where the pattern fits.
    pub points: Vec<Point>,
    /// Points that fail to match.
    pub mismatches: Vec<Point>,
}

impl LatticeReport {
    pub fn pass(&self, min_points: usize) -> bool {
        self.mismatches.is_empty() && self.points.len() >= min_points
    }
}

#[derive(Clone, Debug)]
pub struct LatticeDemo {
    pub certificate: GpCertificate,
    pub window: Config,
    pub lattice: Lattice,
    pub report: LatticeReport,
}

/// Lattice points `g` of `lattice` with `g + R` inside the window.
fn fitting_points(window: &Rect, lattice: &Lattice, r: &Rect) -> Vec<Point> {
    let lo = window.lo() - r.lo();
    let hi = window.hi() - r.hi();
    match Rect::new(lo, hi) {
        Ok(fit) => lattice_points_in(lattice, &fit),
        Err(_) => Vec::new(),
    }
}

/// Plant `f` in a seed condition, build from it, and return the lattice of
/// planted copies `k + (w(q)ℤ × h(q)ℤ)` with a brute-force match of `f` at
/// every in-window lattice point.
pub fn lattice_demo(f: &Config, sched: &[GpRequirement], limits: &Limits, n: i64) -> Result<LatticeDemo> {
    if !f.is_hole_free() {
        return Err(Error::HasHoles);
    }
    if n < 2 {
        return Err(Error::InvalidCondition("base must be at least 2"));
    }
    let fr = f.rect();
    let mut w = power_at_least(n, fr.width())?;
    let h = power_at_least(n, fr.height())?;
    if w == fr.width() && h == fr.height() {
        w = w.checked_mul(n).ok_or(Error::Overflow)?;
    }
    if w.max(h) > limits.max_side {
        return Err(Error::ResourceLimit { side: w.max(h), max_side: limits.max_side });
    }
    let rect = Rect::with_size(Point::ZERO, w, h)?;
    let k = rect.lo() - fr.lo();
    let mut config = Config::from_fn(rect, |g| f.get(g - k).unwrap_or(false));
    config.make_hole(rect.hi())?;
    let seed = GpCondition::new(n, config);
    let certificate = build_generic_gp(&seed, sched, limits)?;
    let window = certificate.condition.periodic_window(WINDOW_COPIES)?;
    let lattice = Lattice::new(k, w, h)?;
    let cyl = PatternSet::cylinder(f.clone())?;
    let points = fitting_points(&window.rect(), &lattice, &fr);
    let mismatches = points.iter().copied().filter(|&g| !cyl.matches(&window, g)).collect();
    Ok(LatticeDemo { certificate, window, lattice, report: LatticeReport { points, mismatches } })
}

#[derive(Clone, Debug)]
pub struct ConstantDemo {
    pub certificate: GpCertificate,
    pub window: Config,
    pub lattice: Lattice,
    pub points: Vec<Point>,
    /// The common value, or `None` if the rule is not constant.
    pub value: Option<u64>,
}

/// Build from `seed` and find a lattice of block translates on which the
/// local `rule` (a function of the `r × r` patch at each point, presented
/// on `[0, r)²`) takes a single value.
pub fn constant_on_lattice_demo(
    seed: &GpCondition,
    rule: impl Fn(&Config) -> u64,
    r: i64,
    sched: &[GpRequirement],
    limits: &Limits,
) -> Result<ConstantDemo> {
    if !validate_gp(seed) {
        return Err(Error::InvalidCondition("seed fails validation"));
    }
    let (w, h) = (seed.width(), seed.height());
    if r < 1 || r > w || r > h {
        return Err(Error::InvalidCondition("rule radius exceeds block size"));
    }
    let u = seed.hole().expect("validated");
    let sr = seed.rect();
    // a patch whose cells all avoid the hole class
    let avoids = |k: Point| {
        let off = |a: i64, b: i64, m: i64| (a - b).rem_euclid(m);
        off(u.x, k.x, w) >= r || off(u.y, k.y, h) >= r
    };
    let k = sr.points().find(|&k| avoids(k)).ok_or(Error::InvalidCondition("no hole-free patch in a block"))?;
    let certificate = build_generic_gp(seed, sched, limits)?;
    let window = certificate.condition.periodic_window(WINDOW_COPIES)?;
    let lattice = Lattice::new(k, w, h)?;
    let patch = Rect::with_size(Point::ZERO, r, r)?;
    let points = fitting_points(&window.rect(), &lattice, &patch);
    let mut value = None;
    let mut constant = true;
    for &g in &points {
        let local = window.restrict(patch.translate(g)?)?.translate(Point::ZERO - g)?;
        let v = rule(&local);
        constant &= *value.get_or_insert(v) == v;
    }
    Ok(ConstantDemo { certificate, window, lattice, points, value: if constant { value } else { None } })
}
