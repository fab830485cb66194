//! Minimal 2-coloring conditions and their odd-sided variant.
//!
//! A condition is a hole-free configuration `p` on a rectangle together with
//! shift witnesses `(tᵢ, Tᵢ)` and pattern witnesses `(f_j, F_j)`:
//!
//! * (a) for every `g ∈ dom(p)` some `τ ∈ Tᵢ` has `g+τ, g+tᵢ+τ ∈ dom(p)`
//!   and `p(g+τ) ≠ p(g+tᵢ+τ)`;
//! * (b1) for every `g ∈ dom(p)` some `σ ∈ F_j` places `f_j` at `g+σ`
//!   inside `p`;
//! * (b2) likewise for the flip of `f_j`.
//!
//! In odd mode both side lengths of `dom(p)` are odd.
//!
//! Every construction below extends a condition by tiling it with copies of
//! itself and its flip. Tilings preserve (a), (b1) and (b2) for the existing
//! witnesses, so only the newly added witness needs an argument.

use alloc::vec::Vec;
use core::fmt;

use crate::config::{tile_blocks, Config};
use crate::error::{Error, Result};
use crate::lattice::{Point, PointSet, Rect};
use crate::witness::{pattern_witness_failures, shift_witness_failures};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftEntry {
    pub t: Point,
    pub witness: PointSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternEntry {
    pub pattern: Config,
    pub witness: PointSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MtCondition {
    pub config: Config,
    pub shifts: Vec<ShiftEntry>,
    pub patterns: Vec<PatternEntry>,
    pub odd: bool,
}

impl MtCondition {
    /// A condition with no witnesses yet.
    pub fn new(config: Config, odd: bool) -> Self {
        MtCondition { config, shifts: Vec::new(), patterns: Vec::new(), odd }
    }

    pub fn rect(&self) -> Rect {
        self.config.rect()
    }

    pub fn has_shift(&self, t: Point) -> bool {
        self.shifts.iter().any(|s| s.t == t)
    }
}

/// The clause a [`Violation`] breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// `p` must be hole-free.
    HoleFree,
    /// Odd mode needs odd side lengths.
    OddSides,
    /// `tᵢ ≠ 0`.
    NonzeroShift,
    /// Pattern `f_j` must be hole-free.
    PatternHoleFree,
    /// (a) 2-coloring property.
    TwoColoring,
    /// (b1) minimality.
    Minimality,
    /// (b2) minimality with flips.
    MinimalityFlipped,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::HoleFree => "hole-free",
            Clause::OddSides => "odd sides",
            Clause::NonzeroShift => "nonzero shift",
            Clause::PatternHoleFree => "hole-free pattern",
            Clause::TwoColoring => "(a) 2-coloring",
            Clause::Minimality => "(b1) minimality",
            Clause::MinimalityFlipped => "(b2) minimality with flips",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub clause: Clause,
    /// Index into `shifts` or `patterns`.
    pub index: Option<usize>,
    /// The position `g` lacking a witness.
    pub at: Option<Point>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.clause)?;
        if let Some(i) = self.index {
            write!(f, " #{i}")?;
        }
        if let Some(g) = self.at {
            write!(f, " at {g}")?;
        }
        Ok(())
    }
}

/// Every violated clause; empty means `c` is a condition.
pub fn validate(c: &MtCondition) -> Vec<Violation> {
    let mut out = Vec::new();
    let v = |clause, index, at| Violation { clause, index, at };
    let p = &c.config;
    if !p.is_hole_free() {
        out.push(v(Clause::HoleFree, None, None));
    }
    if c.odd && (p.rect().width() % 2 == 0 || p.rect().height() % 2 == 0) {
        out.push(v(Clause::OddSides, None, None));
    }
    for (i, s) in c.shifts.iter().enumerate() {
        match shift_witness_failures(p, s.t, &s.witness) {
            Err(_) => out.push(v(Clause::NonzeroShift, Some(i), None)),
            Ok(bad) => out.extend(bad.into_iter().map(|g| v(Clause::TwoColoring, Some(i), Some(g)))),
        }
    }
    for (j, e) in c.patterns.iter().enumerate() {
        if !e.pattern.is_hole_free() {
            out.push(v(Clause::PatternHoleFree, Some(j), None));
            continue;
        }
        for (flipped, clause) in [(false, Clause::Minimality), (true, Clause::MinimalityFlipped)] {
            let bad = pattern_witness_failures(p, &e.pattern, &e.witness, flipped);
            out.extend(bad.into_iter().map(|g| v(clause, Some(j), Some(g))));
        }
    }
    out
}

/// `c1 ≤ c2`: `p₁ ⊇ p₂`, and the shift and pattern lists of `c2` are
/// prefixes of those of `c1` with identical witness sets.
pub fn is_extension(c1: &MtCondition, c2: &MtCondition) -> bool {
    c1.config.extends(&c2.config)
        && c1.shifts.len() >= c2.shifts.len()
        && c1.shifts.iter().zip(&c2.shifts).all(|(a, b)| a == b)
        && c1.patterns.len() >= c2.patterns.len()
        && c1.patterns.iter().zip(&c2.patterns).all(|(a, b)| a == b)
}

/// A planned tiling of a (possibly mirrored) condition, checked for size
/// before any cells are written.
struct Growth {
    mirror: (bool, bool),
    i: (i64, i64),
    j: (i64, i64),
    mask: Mask,
}

#[derive(Clone, Copy)]
enum Mask {
    None,
    Block(i64, i64),
    OddColumns,
}

impl Growth {
    fn identity() -> Self {
        Growth { mirror: (false, false), i: (0, 0), j: (0, 0), mask: Mask::None }
    }

    fn sides(&self, r: &Rect) -> Result<(i64, i64)> {
        let w = (self.i.1 - self.i.0 + 1).checked_mul(r.width()).ok_or(Error::Overflow)?;
        let h = (self.j.1 - self.j.0 + 1).checked_mul(r.height()).ok_or(Error::Overflow)?;
        Ok((w, h))
    }

    fn apply(&self, q: &Config) -> Result<Config> {
        let (fx, fy) = self.mirror;
        let base = q.reflect(fx, fy);
        let mask = self.mask;
        let p = tile_blocks(&base, self.i, self.j, move |i, j| match mask {
            Mask::None => false,
            Mask::Block(bi, bj) => (i, j) == (bi, bj),
            Mask::OddColumns => i.rem_euclid(2) == 1,
        })?;
        Ok(p.reflect(fx, fy))
    }
}

/// Block indices `[i0, i1] ∋ 0` along one axis so that `target` is covered,
/// forcing an odd count in odd mode by growing toward the target.
fn axis_blocks(lo: i64, side: i64, target: i64, odd: bool) -> Result<(i64, i64)> {
    let k = target.checked_sub(lo).ok_or(Error::Overflow)?.div_euclid(side);
    let (mut i0, mut i1) = (k.min(0), k.max(0));
    if odd && (i1 - i0 + 1) % 2 == 0 {
        if k < 0 {
            i0 -= 1;
        } else {
            i1 += 1;
        }
    }
    Ok((i0, i1))
}

fn plan_cover(c: &MtCondition, g: Point) -> Result<Growth> {
    let r = c.rect();
    if r.contains(g) {
        return Ok(Growth::identity());
    }
    Ok(Growth {
        mirror: (false, false),
        i: axis_blocks(r.lo().x, r.width(), g.x, c.odd)?,
        j: axis_blocks(r.lo().y, r.height(), g.y, c.odd)?,
        mask: Mask::None,
    })
}

/// Extend `c` so that `g ∈ dom`, by tiling copies of `p` (no flips).
/// `i₀ = ⌊(g₁ − a)/w⌋` blocks are added toward `g` on each axis.
pub fn extend_cover(c: &MtCondition, g: Point) -> Result<MtCondition> {
    let plan = plan_cover(c, g)?;
    Ok(MtCondition { config: plan.apply(&c.config)?, ..c.clone() })
}

struct ShiftPlan {
    growth: Growth,
    witness: PointSet,
    pivot: Point,
}

fn plan_shift(c: &MtCondition, t: Point) -> Result<ShiftPlan> {
    if t.is_zero() {
        return Err(Error::ZeroShift);
    }
    // Mirror so that t lies in the closed positive quadrant.
    let (fx, fy) = (t.x < 0, t.y < 0);
    let q = c.config.reflect(fx, fy);
    let t = t.reflect(fx, fy);
    let r = q.rect();
    let (a, b, cc, d) = (r.lo().x, r.hi().x, r.lo().y, r.hi().y);
    let (w, h) = (r.width(), r.height());
    // b + t₁ = a + i₀w + i₁ and d + t₂ = c + j₀h + j₁
    let ex = b.checked_add(t.x).ok_or(Error::Overflow)? - a;
    let ey = d.checked_add(t.y).ok_or(Error::Overflow)? - cc;
    let (i0, i1) = (ex / w, ex % w);
    let (j0, j1) = (ey / h, ey % h);
    let odd_up = |k: i64| if c.odd && (k + 1) % 2 == 0 { k + 1 } else { k };
    let (imax, jmax) = (odd_up(i0), odd_up(j0));
    let corner = Point::new(b, d);
    let flip_last = q.get(Point::new(a + i1, cc + j1)) == q.get(corner);
    let growth = Growth {
        mirror: (fx, fy),
        i: (0, imax),
        j: (0, jmax),
        mask: if flip_last { Mask::Block(i0, j0) } else { Mask::None },
    };
    let tw = Rect::from_bounds(-imax * w, b - a, -jmax * h, d - cc)?;
    Ok(ShiftPlan { growth, witness: PointSet::from_rect(&tw).reflect(fx, fy), pivot: corner.reflect(fx, fy) })
}

fn shift_result(c: &MtCondition, t: Point, plan: &ShiftPlan) -> Result<(MtCondition, (Point, Point))> {
    let mut out = MtCondition { config: plan.growth.apply(&c.config)?, ..c.clone() };
    out.shifts.push(ShiftEntry { t, witness: plan.witness.clone() });
    Ok((out, (plan.pivot, plan.pivot + t)))
}

/// Add the shift `t` by tiling `p` toward `(b, d) + t` (after mirroring `t`
/// into the positive quadrant), with only the last tile possibly flipped so
/// that `p(b, d) ≠ p((b, d) + t)`. The new witness set is
/// `[−i₀w, b−a] × [−j₀h, d−c]`.
///
/// Returns `c` unchanged when `t` is already listed.
pub fn extend_shift(c: &MtCondition, t: Point) -> Result<MtCondition> {
    Ok(extend_shift_witnessed(c, t)?.0)
}

/// [`extend_shift`] together with the explicit pair `(g, g + t)` whose values
/// differ, or `None` when `t` was already listed.
pub fn extend_shift_witnessed(c: &MtCondition, t: Point) -> Result<(MtCondition, Option<(Point, Point)>)> {
    if t.is_zero() {
        return Err(Error::ZeroShift);
    }
    if c.has_shift(t) {
        return Ok((c.clone(), None));
    }
    let plan = plan_shift(c, t)?;
    let (out, pair) = shift_result(c, t, &plan)?;
    Ok((out, Some(pair)))
}

/// Add the shift `t` without growing `p`, when `p` already contains a pair
/// `g₀, g₀ + t` with different values. The witness set is `g₀ − dom(p)`,
/// so every `g` reaches the pair through `τ = g₀ − g`.
pub fn extend_shift_in_place(c: &MtCondition, t: Point) -> Option<(MtCondition, (Point, Point))> {
    if t.is_zero() || c.has_shift(t) {
        return None;
    }
    let p = &c.config;
    let g0 = p.defined_points().find(|&g| matches!((p.get(g), p.get(g + t)), (Some(a), Some(b)) if a != b))?;
    let r = p.rect();
    let tw = Rect::new(g0 - r.hi(), g0 - r.lo()).ok()?;
    let mut out = c.clone();
    out.shifts.push(ShiftEntry { t, witness: PointSet::from_rect(&tw) });
    Some((out, (g0, g0 + t)))
}

fn pattern_copies(c: &MtCondition) -> i64 {
    if c.odd {
        3
    } else {
        2
    }
}

fn plan_pattern(c: &MtCondition) -> Growth {
    Growth { mirror: (false, false), i: (0, pattern_copies(c) - 1), j: (0, 0), mask: Mask::OddColumns }
}

/// Record `p` itself as a new pattern: the domain becomes `p` followed by
/// its flip immediately to the right (followed again by `p` in odd mode, to
/// keep the width odd). With `N` copies the witness set is
/// `[−(a + N·w − 1), w − a] × [−d, −c]`, which for `N = 2` is
/// `[a − 2b − 1, b − 2a + 1] × [−d, −c]`.
pub fn extend_pattern(c: &MtCondition) -> Result<MtCondition> {
    let r = c.rect();
    let (a, cc, d, w) = (r.lo().x, r.lo().y, r.hi().y, r.width());
    let n = pattern_copies(c);
    let witness = Rect::from_bounds(-(a + n * w - 1), w - a, -d, -cc)?;
    let mut out = MtCondition { config: plan_pattern(c).apply(&c.config)?, ..c.clone() };
    out.patterns.push(PatternEntry { pattern: c.config.clone(), witness: PointSet::from_rect(&witness) });
    Ok(out)
}

fn plan_duplicate(c: &MtCondition) -> Result<Growth> {
    if !c.odd {
        return Err(Error::NotOddMode);
    }
    // three copies keep the width odd
    Ok(Growth { mirror: (false, false), i: (0, 2), j: (0, 0), mask: Mask::None })
}

/// Place copies of `p` side by side (three, to keep the width odd). The
/// returned offset `(w, 0)` separates two exact copies and has odd norm.
pub fn duplicate_odd(c: &MtCondition) -> Result<(MtCondition, Point)> {
    let plan = plan_duplicate(c)?;
    let out = MtCondition { config: plan.apply(&c.config)?, ..c.clone() };
    Ok((out, Point::new(c.rect().width(), 0)))
}

/// One dense requirement of the generic construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Requirement {
    /// `g ∈ dom(p)`.
    Cover(Point),
    /// `t` appears among the shifts.
    Shift(Point),
    /// The current `p` becomes a pattern.
    SelfPattern,
    /// Two copies of the current `p` at odd distance (odd mode only).
    DuplicateOdd,
}

/// An ordered list of requirements with nonzero shifts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Schedule(Vec<Requirement>);

impl Schedule {
    pub fn new(steps: Vec<Requirement>) -> Result<Self> {
        if steps.iter().any(|s| matches!(s, Requirement::Shift(t) if t.is_zero())) {
            return Err(Error::ZeroShift);
        }
        Ok(Schedule(steps))
    }

    pub fn steps(&self) -> &[Requirement] {
        &self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_side: i64,
    pub max_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_side: 4096, max_steps: 1024 }
    }
}

/// How the builder meets a `Shift` requirement.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ShiftStrategy {
    /// Always tile as in [`extend_shift`].
    Tiling,
    /// Use [`extend_shift_in_place`] when `p` already separates the shift,
    /// and tile otherwise.
    #[default]
    PreferInPlace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    Unchanged,
    Tiled { rect: Rect },
    ShiftAdded { index: usize, pair: (Point, Point), in_place: bool },
    PatternAdded { index: usize },
    Duplicated { source: Rect, offset: Point },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub requirement: Requirement,
    pub outcome: StepOutcome,
}

/// A final condition and what each scheduled step contributed to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub condition: MtCondition,
    pub records: Vec<StepRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReplayFailure {
    Invalid(Violation),
    NotCovered { step: usize, point: Point },
    ShiftMissing { step: usize },
    PairNotSeparated { step: usize, pair: (Point, Point) },
    PatternMissing { step: usize },
    CopyMismatch { step: usize },
    WrongRequirement { step: usize },
}

impl fmt::Display for ReplayFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplayFailure::Invalid(v) => write!(f, "condition violates {v}"),
            ReplayFailure::NotCovered { step, point } => write!(f, "step {step}: {point} not covered"),
            ReplayFailure::ShiftMissing { step } => write!(f, "step {step}: shift not listed"),
            ReplayFailure::PairNotSeparated { step, pair } => {
                write!(f, "step {step}: pair {} / {} not separated", pair.0, pair.1)
            }
            ReplayFailure::PatternMissing { step } => write!(f, "step {step}: pattern not listed"),
            ReplayFailure::CopyMismatch { step } => write!(f, "step {step}: copies differ"),
            ReplayFailure::WrongRequirement { step } => write!(f, "step {step}: outcome does not fit requirement"),
        }
    }
}

impl Certificate {
    /// Re-verify the final condition from scratch and every step record
    /// against it. Empty means the certificate holds.
    pub fn replay(&self) -> Vec<ReplayFailure> {
        let c = &self.condition;
        let p = &c.config;
        let mut out: Vec<ReplayFailure> = validate(c).into_iter().map(ReplayFailure::Invalid).collect();
        for (step, rec) in self.records.iter().enumerate() {
            match (&rec.requirement, &rec.outcome) {
                (Requirement::Cover(g), StepOutcome::Unchanged | StepOutcome::Tiled { .. }) => {
                    if !p.rect().contains(*g) {
                        out.push(ReplayFailure::NotCovered { step, point: *g });
                    }
                }
                (Requirement::Shift(t), StepOutcome::Unchanged) => {
                    if !c.has_shift(*t) {
                        out.push(ReplayFailure::ShiftMissing { step });
                    }
                }
                (Requirement::Shift(t), StepOutcome::ShiftAdded { index, pair, .. }) => {
                    if c.shifts.get(*index).map(|s| s.t) != Some(*t) {
                        out.push(ReplayFailure::ShiftMissing { step });
                    }
                    let separated =
                        pair.1 - pair.0 == *t && matches!((p.get(pair.0), p.get(pair.1)), (Some(a), Some(b)) if a != b);
                    if !separated {
                        out.push(ReplayFailure::PairNotSeparated { step, pair: *pair });
                    }
                }
                (Requirement::SelfPattern, StepOutcome::PatternAdded { index }) => {
                    if *index >= c.patterns.len() {
                        out.push(ReplayFailure::PatternMissing { step });
                    }
                }
                (Requirement::DuplicateOdd, StepOutcome::Duplicated { source, offset }) => {
                    let same = source
                        .translate(*offset)
                        .ok()
                        .and_then(|moved| Some((p.restrict(*source).ok()?, p.restrict(moved).ok()?)))
                        .and_then(|(a, b)| Some(a.translate(*offset).ok()? == b))
                        .unwrap_or(false);
                    if !same || offset.norm() % 2 == 0 {
                        out.push(ReplayFailure::CopyMismatch { step });
                    }
                }
                _ => out.push(ReplayFailure::WrongRequirement { step }),
            }
        }
        out
    }
}

/// A certificate together with every intermediate condition, starting with
/// the start condition.
#[derive(Clone, Debug)]
pub struct Build {
    pub certificate: Certificate,
    pub chain: Vec<MtCondition>,
}

fn check_side(c: &MtCondition, g: &Growth, limits: &Limits) -> Result<()> {
    let (w, h) = g.sides(&c.rect()).map_err(|_| Error::ResourceLimit { side: i64::MAX, max_side: limits.max_side })?;
    let side = w.max(h);
    if side > limits.max_side {
        return Err(Error::ResourceLimit { side, max_side: limits.max_side });
    }
    Ok(())
}

/// Meet every requirement of `sched` in order, starting from `start`.
/// The final configuration is the emitted window of the generic point.
pub fn build_generic(start: &MtCondition, sched: &Schedule, limits: &Limits) -> Result<Certificate> {
    Ok(build_generic_chain(start, sched, limits, ShiftStrategy::default())?.certificate)
}

pub fn build_generic_chain(
    start: &MtCondition,
    sched: &Schedule,
    limits: &Limits,
    strategy: ShiftStrategy,
) -> Result<Build> {
    if sched.steps().len() > limits.max_steps {
        return Err(Error::TooManySteps { steps: sched.steps().len(), max_steps: limits.max_steps });
    }
    if !validate(start).is_empty() {
        return Err(Error::InvalidCondition("start condition fails validation"));
    }
    let side = start.rect().width().max(start.rect().height());
    if side > limits.max_side {
        return Err(Error::ResourceLimit { side, max_side: limits.max_side });
    }
    let mut cur = start.clone();
    let mut chain = alloc::vec![start.clone()];
    let mut records = Vec::new();
    for &req in sched.steps() {
        let (next, outcome) = match req {
            Requirement::Cover(g) => {
                if cur.rect().contains(g) {
                    (cur.clone(), StepOutcome::Unchanged)
                } else {
                    let plan = plan_cover(&cur, g)?;
                    check_side(&cur, &plan, limits)?;
                    let next = MtCondition { config: plan.apply(&cur.config)?, ..cur.clone() };
                    let rect = next.rect();
                    (next, StepOutcome::Tiled { rect })
                }
            }
            Requirement::Shift(t) => {
                if cur.has_shift(t) {
                    (cur.clone(), StepOutcome::Unchanged)
                } else {
                    let in_place = match strategy {
                        ShiftStrategy::PreferInPlace => extend_shift_in_place(&cur, t),
                        ShiftStrategy::Tiling => None,
                    };
                    let (next, pair, in_place) = match in_place {
                        Some((next, pair)) => (next, pair, true),
                        None => {
                            let plan = plan_shift(&cur, t)?;
                            check_side(&cur, &plan.growth, limits)?;
                            let (next, pair) = shift_result(&cur, t, &plan)?;
                            (next, pair, false)
                        }
                    };
                    let index = next.shifts.len() - 1;
                    (next, StepOutcome::ShiftAdded { index, pair, in_place })
                }
            }
            Requirement::SelfPattern => {
                check_side(&cur, &plan_pattern(&cur), limits)?;
                let next = extend_pattern(&cur)?;
                let index = next.patterns.len() - 1;
                (next, StepOutcome::PatternAdded { index })
            }
            Requirement::DuplicateOdd => {
                check_side(&cur, &plan_duplicate(&cur)?, limits)?;
                let source = cur.rect();
                let (next, offset) = duplicate_odd(&cur)?;
                (next, StepOutcome::Duplicated { source, offset })
            }
        };
        records.push(StepRecord { requirement: req, outcome });
        chain.push(next.clone());
        cur = next;
    }
    Ok(Build { certificate: Certificate { condition: cur, records }, chain })
}
