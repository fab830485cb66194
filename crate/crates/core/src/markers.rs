//! Rectangular marker partitions and the shifted-stack layout.
//!
//! The shifted stack tiles the plane with copies of a square pattern `p` on
//! `[−a, a]²`, column-block `c` pushed down by `c mod (2a+1)`. Every row then
//! meets a copy center once every `(2a+1)²` columns, so any horizontal
//! segment longer than `2(2a+1)²` passes through one.

use alloc::vec::Vec;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::lattice::{Point, Rect};

/// Rectangles that partition a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectPartition {
    window: Rect,
    rects: Vec<Rect>,
}

impl RectPartition {
    pub fn new(window: Rect, rects: Vec<Rect>) -> Result<Self> {
        let inside = rects.iter().all(|r| window.contains_rect(r));
        let area: usize = rects.iter().map(Rect::area).sum();
        let disjoint = rects.iter().enumerate().all(|(i, a)| rects[i + 1..].iter().all(|b| a.intersect(b).is_none()));
        if rects.is_empty() || !inside || !disjoint || area != window.area() {
            return Err(Error::InvalidCondition("rectangles do not partition the window"));
        }
        Ok(RectPartition { window, rects })
    }

    pub fn window(&self) -> Rect {
        self.window
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    /// Smallest edge length.
    pub fn v(&self) -> i64 {
        self.rects.iter().map(|r| r.width().min(r.height())).min().unwrap_or(0)
    }

    /// Largest edge length.
    pub fn w(&self) -> i64 {
        self.rects.iter().map(|r| r.width().max(r.height())).max().unwrap_or(0)
    }

    /// Distance from `x` to the union of the rectangle boundaries.
    pub fn boundary_distance(&self, x: Point) -> u64 {
        self.rects.iter().map(|r| perimeter_distance(r, x)).min().unwrap_or(0)
    }
}

/// Taxicab distance from `x` to the perimeter cells of `r`.
fn perimeter_distance(r: &Rect, x: Point) -> u64 {
    if r.contains(x) {
        let d = (x.x - r.lo().x).min(r.hi().x - x.x).min(x.y - r.lo().y).min(r.hi().y - x.y);
        d as u64
    } else {
        let dx = (r.lo().x - x.x).max(0).max(x.x - r.hi().x);
        let dy = (r.lo().y - x.y).max(0).max(x.y - r.hi().y);
        (dx + dy) as u64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelStats {
    pub v: i64,
    pub w: i64,
    pub rects: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeProfile {
    pub probe: Point,
    /// `φ_x(n)` for each level.
    pub phi: Vec<u64>,
    /// Nondecreasing and ending above its start.
    pub diverging: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionReport {
    pub levels: Vec<LevelStats>,
    pub profiles: Vec<ProbeProfile>,
    /// All partitions share one window.
    pub same_window: bool,
    /// `v(n)` strictly increases from level to level.
    pub v_increasing: bool,
    /// Probes whose profile does not look divergent.
    pub flagged: Vec<Point>,
}

pub fn check_partition_props(seq: &[RectPartition], probes: &[Point]) -> PartitionReport {
    let levels: Vec<LevelStats> = seq.iter().map(|p| LevelStats { v: p.v(), w: p.w(), rects: p.rects.len() }).collect();
    let profiles: Vec<ProbeProfile> = probes
        .iter()
        .map(|&x| {
            let phi: Vec<u64> = seq.iter().map(|p| p.boundary_distance(x)).collect();
            let monotone = phi.windows(2).all(|w| w[0] <= w[1]);
            let grows = phi.len() < 2 || phi.last() > phi.first();
            ProbeProfile { probe: x, phi, diverging: monotone && grows }
        })
        .collect();
    PartitionReport {
        same_window: seq.windows(2).all(|w| w[0].window == w[1].window),
        v_increasing: levels.windows(2).all(|w| w[0].v < w[1].v),
        flagged: profiles.iter().filter(|p| !p.diverging).map(|p| p.probe).collect(),
        levels,
        profiles,
    }
}

/// `2(2a+1)²`: horizontal segments strictly longer than this meet a copy
/// center.
pub fn segment_threshold(a: i64) -> i64 {
    let m = 2 * a + 1;
    2 * m * m
}

/// Tile `[0, b]²` with copies of `p` (on `[−a, a]²`): with `m = 2a+1`,
/// `r(i, j) = p(i′ − a, j′ − a)` where `i′ = i mod m` and
/// `j′ = (j + (i − i′)/m) mod m`.
pub fn build_shifted_stack(p: &Config, b: i64) -> Result<Config> {
    let r = p.rect();
    let a = r.hi().x;
    if a < 0 || r != Rect::from_bounds(-a, a, -a, a)? {
        return Err(Error::DomainMismatch);
    }
    if !p.is_hole_free() {
        return Err(Error::HasHoles);
    }
    let m = 2 * a + 1;
    if b < m {
        return Err(Error::DomainMismatch);
    }
    Ok(Config::from_fn(Rect::from_bounds(0, b, 0, b)?, |g| {
        let i1 = g.x.rem_euclid(m);
        let c = (g.x - i1) / m;
        let j1 = (g.y + c).rem_euclid(m);
        p.get(Point::new(i1 - a, j1 - a)).expect("inside the seed square")
    }))
}

/// Centers `(cm + a, y)` with `y ≡ a − c (mod m)` of copies lying wholly in
/// `window`, sorted.
pub fn copy_centers(a: i64, window: &Rect) -> Vec<Point> {
    let Some(core) = window.shrink(a) else {
        return Vec::new();
    };
    let m = 2 * a + 1;
    let mut out = Vec::new();
    let c0 = (core.lo().x - a).div_euclid(m);
    let c1 = (core.hi().x - a).div_euclid(m);
    for c in c0..=c1 {
        let x = c * m + a;
        if !(core.lo().x..=core.hi().x).contains(&x) {
            continue;
        }
        let y0 = core.lo().y + (a - c - core.lo().y).rem_euclid(m);
        out.extend((y0..=core.hi().y).step_by(m as usize).map(|y| Point::new(x, y)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentCover {
    pub pass: bool,
    pub segments: usize,
    /// A segment, as a one-row rectangle, meeting no center.
    pub counterexample: Option<Rect>,
}

/// Whether every horizontal segment of `seg_len` cells at distance at
/// least `2a` from the window edge contains a copy center.
pub fn check_segment_center_cover(a: i64, window: &Rect, seg_len: i64) -> SegmentCover {
    let mut report = SegmentCover { pass: true, segments: 0, counterexample: None };
    let Some(inner) = window.shrink(2 * a) else {
        return report;
    };
    if seg_len < 1 || seg_len > inner.width() {
        return report;
    }
    let centers = copy_centers(a, window);
    for y in inner.lo().y..=inner.hi().y {
        let mut xs: Vec<i64> = centers.iter().filter(|c| c.y == y).map(|c| c.x).collect();
        xs.sort_unstable();
        for x0 in inner.lo().x..=inner.hi().x - seg_len + 1 {
            report.segments += 1;
            let x1 = x0 + seg_len - 1;
            let k = xs.partition_point(|&x| x < x0);
            if !matches!(xs.get(k), Some(&x) if x <= x1) && report.counterexample.is_none() {
                report.pass = false;
                report.counterexample = Rect::from_bounds(x0, x1, y, y).ok();
            }
        }
    }
    report
}
