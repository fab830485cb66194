//! Toast structures on a finite window.
//!
//! A toast is a sequence of levels, each a family of pairwise disjoint
//! finite classes, such that
//!
//! * (0) the levels jointly cover everything,
//! * (1) a class meeting a class of a higher level is contained in it,
//! * (2) every class `C` lies in `C′ ∖ ∂C′` for some class `C′` of a higher
//!   level, and for layered toast (2′) of the very next level.
//!
//! On a window the rim cuts classes, so (0) is checked on the core at
//! distance "largest class diameter" from the edge, and classes that fail
//! (2) while touching the rim or sitting on the top level are exempted and
//! counted.

use alloc::vec::Vec;
use core::fmt;

use crate::config::boundary;
use crate::error::{Error, Result};
use crate::lattice::{dist_to_set, Distance, Point, PointSet, Rect};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Toast {
    pub layered: bool,
    pub levels: Vec<Vec<PointSet>>,
    /// Defaults to the bounding box of all classes.
    pub window: Option<Rect>,
}

impl Toast {
    pub fn new(layered: bool, levels: Vec<Vec<PointSet>>) -> Self {
        Toast { layered, levels, window: None }
    }

    pub fn window(&self) -> Option<Rect> {
        if self.window.is_some() {
            return self.window;
        }
        let mut all = PointSet::new();
        for class in self.levels.iter().flatten() {
            all = all.union(class);
        }
        all.bounding_rect()
    }

    /// The class of level `n` containing `x`.
    pub fn class_at(&self, n: usize, x: Point) -> Option<&PointSet> {
        self.levels.get(n)?.iter().find(|c| c.contains(&x))
    }
}

/// Level `k` is the single square `[−k, k]²`, for `k < levels`.
pub fn concentric_squares(levels: usize) -> Toast {
    let levels = (0..levels as i64)
        .map(|k| alloc::vec![PointSet::from_rect(&Rect::from_bounds(-k, k, -k, k).expect("k ≥ 0"))])
        .collect();
    Toast::new(true, levels)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ToastViolation {
    /// Two classes of one level intersect.
    Overlap { level: usize, a: usize, b: usize },
    /// (1): class `inner` meets `outer` on a higher level without lying in it.
    Nesting { inner: (usize, usize), outer: (usize, usize) },
    /// (2) or (2′): no suitable superclass.
    NoSuperclass { level: usize, index: usize },
    /// (0): a core point lies in no class.
    Uncovered(Point),
}

impl fmt::Display for ToastViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToastViolation::Overlap { level, a, b } => write!(f, "level {level}: classes {a} and {b} overlap"),
            ToastViolation::Nesting { inner, outer } => write!(
                f,
                "(1): class {} of level {} meets class {} of level {} without nesting",
                inner.1, inner.0, outer.1, outer.0
            ),
            ToastViolation::NoSuperclass { level, index } => {
                write!(f, "(2): class {index} of level {level} has no superclass avoiding its boundary")
            }
            ToastViolation::Uncovered(p) => write!(f, "(0): {p} is uncovered"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ToastReport {
    pub violations: Vec<ToastViolation>,
    /// Classes excused from (2) at the rim or top level.
    pub rim_exempt: usize,
}

impl ToastReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

fn touches_rim(class: &PointSet, window: &Rect) -> bool {
    class.iter().any(|p| p.x == window.lo().x || p.x == window.hi().x || p.y == window.lo().y || p.y == window.hi().y)
}

fn diameter(class: &PointSet) -> i64 {
    class.bounding_rect().map_or(0, |r| r.width() + r.height() - 2)
}

/// `C ⊆ C′ ∖ ∂C′`.
fn strictly_inside(c: &PointSet, outer: &PointSet, outer_boundary: &PointSet) -> bool {
    c.is_subset(outer) && !c.intersects(outer_boundary)
}

pub fn check_toast(t: &Toast) -> ToastReport {
    let mut report = ToastReport::default();
    let Some(window) = t.window() else {
        return report;
    };
    let bounds: Vec<Vec<PointSet>> = t.levels.iter().map(|l| l.iter().map(boundary).collect()).collect();
    for (n, level) in t.levels.iter().enumerate() {
        for (i, c) in level.iter().enumerate() {
            for (j, d) in level.iter().enumerate().skip(i + 1) {
                if c.intersects(d) {
                    report.violations.push(ToastViolation::Overlap { level: n, a: i, b: j });
                }
            }
            for (m, higher) in t.levels.iter().enumerate().skip(n + 1) {
                for (j, d) in higher.iter().enumerate() {
                    if c.intersects(d) && !c.is_subset(d) {
                        report.violations.push(ToastViolation::Nesting { inner: (n, i), outer: (m, j) });
                    }
                }
            }
            let candidates = if t.layered { n + 1..(n + 2).min(t.levels.len()) } else { n + 1..t.levels.len() };
            let ok = candidates
                .into_iter()
                .any(|m| t.levels[m].iter().zip(&bounds[m]).any(|(d, bd)| strictly_inside(c, d, bd)));
            if !ok {
                if n + 1 == t.levels.len() || touches_rim(c, &window) {
                    report.rim_exempt += 1;
                } else {
                    report.violations.push(ToastViolation::NoSuperclass { level: n, index: i });
                }
            }
        }
    }
    let margin = t.levels.iter().flatten().map(diameter).max().unwrap_or(0);
    if let Some(core) = window.shrink(margin) {
        for p in core.points() {
            if !t.levels.iter().flatten().any(|c| c.contains(&p)) {
                report.violations.push(ToastViolation::Uncovered(p));
            }
        }
    }
    report
}

/// `f_x(n) = dist(x, ∂Tₙ)` when some class of level `n` contains `x`, and
/// 0 otherwise. `∂Tₙ` is the union of the class boundaries.
pub fn fx_profile(t: &Toast, x: Point) -> Vec<u64> {
    t.levels
        .iter()
        .enumerate()
        .map(|(n, level)| {
            if t.class_at(n, x).is_none() {
                return 0;
            }
            let mut bd = PointSet::new();
            for c in level {
                bd = bd.union(&boundary(c));
            }
            match dist_to_set(x, &bd) {
                Distance::Finite(d) => d,
                Distance::Infinite => 0,
            }
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrowthReport {
    /// `(probe, n)` with `f_x(n) ≥ f_x(n+1)`.
    pub failures: Vec<(Point, usize)>,
    /// Probes not covered at any level.
    pub uncovered: Vec<Point>,
}

impl GrowthReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `f_x(n) < f_x(n+1)` for every probe from its first covered level on.
/// Pairs where `x` is uncovered at `n+1` or its level-`n` class touches the
/// window rim are beyond what the window can show and are skipped.
pub fn check_fx_strict_growth(t: &Toast, probes: &[Point]) -> Result<GrowthReport> {
    if !t.layered {
        return Err(Error::NotLayered);
    }
    let mut report = GrowthReport::default();
    let Some(window) = t.window() else {
        report.uncovered = probes.to_vec();
        return Ok(report);
    };
    for &x in probes {
        let Some(n0) = (0..t.levels.len()).find(|&n| t.class_at(n, x).is_some()) else {
            report.uncovered.push(x);
            continue;
        };
        let f = fx_profile(t, x);
        for n in n0..t.levels.len().saturating_sub(1) {
            let checkable =
                t.class_at(n, x).is_some_and(|c| !touches_rim(c, &window)) && t.class_at(n + 1, x).is_some();
            if checkable && f[n] >= f[n + 1] {
                report.failures.push((x, n));
            }
        }
    }
    Ok(report)
}
