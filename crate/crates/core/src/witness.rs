//! Brute-force verifiers for window-checkable properties.
//!
//! Edge policy: a quantifier over positions `g` only ranges over positions
//! whose probes all stay inside the window. The remaining positions are
//! counted as `rim_excluded` so callers can judge how much was vacuous.

use alloc::vec;
use alloc::vec::Vec;

use crate::config::{Config, PatternSet};
use crate::error::{Error, Result};
use crate::lattice::{Lattice, Point, PointSet, Rect};

/// Outcome of a windowed `∀g ∃τ` scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub pass: bool,
    /// Positions whose probes all stay in the window.
    pub admissible: usize,
    /// Window positions skipped because some probe leaves the window.
    pub rim_excluded: usize,
    /// Admissible positions without a witness.
    pub failing: Vec<Point>,
}

/// Positions of `p` violating the 2-coloring clause for shift `t` and
/// witness set `T`: no `τ ∈ T` with `g+τ, g+t+τ ∈ dom(p)` and
/// `p(g+τ) ≠ p(g+t+τ)`.
pub fn shift_witness_failures(p: &Config, t: Point, witness: &PointSet) -> Result<Vec<Point>> {
    if t.is_zero() {
        return Err(Error::ZeroShift);
    }
    let ok = |g: Point| {
        witness.iter().any(|&tau| match (p.get(g + tau), p.get(g + t + tau)) {
            (Some(a), Some(b)) => a != b,
            _ => false,
        })
    };
    Ok(p.defined_points().filter(|&g| !ok(g)).collect())
}

pub fn check_shift_witness(p: &Config, t: Point, witness: &PointSet) -> Result<bool> {
    Ok(shift_witness_failures(p, t, witness)?.is_empty())
}

/// Positions `g ∈ dom(p)` with no `σ ∈ F` placing `f` (or its flip) at
/// `g + σ` inside `p`.
pub fn pattern_witness_failures(p: &Config, f: &Config, witness: &PointSet, flipped: bool) -> Vec<Point> {
    p.defined_points().filter(|&g| !witness.iter().any(|&s| p.matches_at(f, g + s, flipped))).collect()
}

pub fn check_pattern_witness(p: &Config, f: &Config, witness: &PointSet, flipped: bool) -> bool {
    pattern_witness_failures(p, f, witness, flipped).is_empty()
}

/// Positions `g` of `window` with `g + o ∈ window` for every `o` in `offsets`.
/// The whole window when `offsets` is empty.
fn admissible_region(window: &Rect, offsets: &[(Point, Point)]) -> Option<Rect> {
    let mut lo = window.lo();
    let mut hi = window.hi();
    for &(omin, omax) in offsets {
        lo = Point::new(lo.x.max(window.lo().x - omin.x), lo.y.max(window.lo().y - omin.y));
        hi = Point::new(hi.x.min(window.hi().x - omax.x), hi.y.min(window.hi().y - omax.y));
    }
    Rect::new(lo, hi).ok()
}

fn scan(window: &Rect, region: Option<Rect>, mut ok: impl FnMut(Point) -> bool) -> ScanReport {
    let mut report = ScanReport::default();
    if let Some(region) = region {
        report.admissible = region.area();
        report.failing = region.points().filter(|&g| !ok(g)).collect();
    }
    report.rim_excluded = window.area() - report.admissible;
    report.pass = report.failing.is_empty();
    report
}

/// Windowed 2-coloring scan: every admissible `g` needs `t ∈ T` with
/// `x(g+t) ≠ x(g+s+t)`. Holes never witness.
pub fn window_two_coloring_report(x: &Config, s: Point, witness: &PointSet) -> ScanReport {
    let window = x.rect();
    let offsets: Vec<(Point, Point)> = witness
        .iter()
        .map(|&t| {
            let u = t + s;
            (Point::new(t.x.min(u.x), t.y.min(u.y)), Point::new(t.x.max(u.x), t.y.max(u.y)))
        })
        .collect();
    scan(&window, admissible_region(&window, &offsets), |g| {
        witness.iter().any(|&t| match (x.get(g + t), x.get(g + s + t)) {
            (Some(a), Some(b)) => a != b,
            _ => false,
        })
    })
}

pub fn window_two_coloring_check(x: &Config, s: Point, witness: &PointSet) -> bool {
    window_two_coloring_report(x, s, witness).pass
}

/// B-positions of `x`, indexed over the window; only positions where every
/// pattern fits are considered.
struct PositionMap {
    window: Rect,
    hits: Vec<bool>,
}

impl PositionMap {
    fn new(x: &Config, b: &PatternSet) -> Self {
        let window = x.rect();
        let hits = window.points().map(|g| b.fits(&window, g) && b.matches(x, g)).collect::<Vec<_>>();
        // points() is x-major; store accordingly
        PositionMap { window, hits }
    }

    #[inline]
    fn hit(&self, g: Point) -> bool {
        if !self.window.contains(g) {
            return false;
        }
        let h = self.window.height();
        let i = (g.x - self.window.lo().x) * h + (g.y - self.window.lo().y);
        self.hits[i as usize]
    }

    fn any(&self) -> bool {
        self.hits.iter().any(|&h| h)
    }
}

fn probe_offsets(b: &PatternSet, witness: &PointSet) -> Vec<(Point, Point)> {
    let mut out = Vec::new();
    for &tau in witness {
        for f in b.patterns() {
            out.push((tau + f.rect().lo(), tau + f.rect().hi()));
        }
    }
    out
}

/// Windowed recurrence: every admissible `g` has some `τ ∈ T` with `g + τ`
/// a B-position. Admissible means every `g + τ + dom(f)` stays in the window.
pub fn recurrence_check(x: &Config, b: &PatternSet, witness: &PointSet) -> ScanReport {
    let map = PositionMap::new(x, b);
    recurrence_with_map(x, &map, b, witness)
}

fn recurrence_with_map(x: &Config, map: &PositionMap, b: &PatternSet, witness: &PointSet) -> ScanReport {
    let window = x.rect();
    let region = admissible_region(&window, &probe_offsets(b, witness));
    scan(&window, region, |g| witness.iter().any(|&tau| map.hit(g + tau)))
}

/// `T = {g : ‖g‖ odd, ‖g‖ ≤ radius}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OddSet {
    pub radius: u64,
}

impl OddSet {
    pub fn members(&self) -> PointSet {
        let r = self.radius as i64;
        let mut out = Vec::new();
        for x in -r..=r {
            for y in -r..=r {
                let n = x.unsigned_abs() + y.unsigned_abs();
                if n % 2 == 1 && n <= self.radius {
                    out.push(Point::new(x, y));
                }
            }
        }
        out.into_iter().collect()
    }
}

/// Smallest odd radius `r ≤ max_radius` whose odd ball passes
/// [`recurrence_check`] with at least one admissible position.
pub fn find_odd_recurrence(x: &Config, b: &PatternSet, max_radius: u64) -> Option<OddSet> {
    let map = PositionMap::new(x, b);
    if !map.any() {
        return None;
    }
    (1..=max_radius).step_by(2).map(|radius| OddSet { radius }).find(|odd| {
        let report = recurrence_with_map(x, &map, b, &odd.members());
        report.pass && report.admissible > 0
    })
}

/// Minimum number of in-window lattice points [`find_lattice_in`] demands.
pub const MIN_LATTICE_POINTS: usize = 9;

/// A lattice with spacings at most `max_spacing` all of whose in-window
/// points are B-positions. See [`find_lattice_in_with`].
pub fn find_lattice_in(x: &Config, b: &PatternSet, max_spacing: i64) -> Option<Lattice> {
    find_lattice_in_with(x, b, max_spacing, MIN_LATTICE_POINTS)
}

/// Search order: spacings by ascending `w·h`, then `w`, then `h`; anchors
/// lexicographically inside `lo + [0,w) × [0,h)` of the fit region. The
/// in-window points of a lattice are those where every pattern fits; at
/// least `min_points` of them are required.
pub fn find_lattice_in_with(x: &Config, b: &PatternSet, max_spacing: i64, min_points: usize) -> Option<Lattice> {
    let window = x.rect();
    let region = admissible_region(&window, &probe_offsets(b, &[Point::ZERO].into_iter().collect()))?;
    let map = PositionMap::new(x, b);
    let mut spacings: Vec<(i64, i64)> =
        (1..=max_spacing).flat_map(|w| (1..=max_spacing).map(move |h| (w, h))).collect();
    spacings.sort_by_key(|&(w, h)| (w * h, w, h));
    for (w, h) in spacings {
        if ((region.width() + w - 1) / w) * ((region.height() + h - 1) / h) < min_points as i64 {
            continue;
        }
        for dx in 0..w.min(region.width()) {
            for dy in 0..h.min(region.height()) {
                let anchor = region.lo() + Point::new(dx, dy);
                let Ok(lattice) = Lattice::new(anchor, w, h) else { continue };
                let pts = crate::lattice::lattice_points_in(&lattice, &region);
                if pts.len() >= min_points && pts.iter().all(|&g| map.hit(g)) {
                    return Some(lattice);
                }
            }
        }
    }
    None
}

/// A grid of colors over a rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorGrid {
    rect: Rect,
    colors: Vec<u32>,
}

impl ColorGrid {
    pub fn from_fn(rect: Rect, mut f: impl FnMut(Point) -> u32) -> Self {
        let mut colors = vec![0; rect.area()];
        for p in rect.points() {
            colors[rect.index_of(p)] = f(p);
        }
        ColorGrid { rect, colors }
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn get(&self, p: Point) -> Option<u32> {
        self.rect.contains(p).then(|| self.colors[self.rect.index_of(p)])
    }
}

/// Whether every color is `< k` and 4-adjacent cells differ.
pub fn chromatic_check(c: &ColorGrid, k: u32) -> bool {
    c.rect.points().all(|p| {
        let v = c.colors[c.rect.index_of(p)];
        v < k && [Point::new(1, 0), Point::new(0, 1)].iter().all(|&s| c.get(p + s).is_none_or(|u| u != v))
    })
}

/// 2-D prefix sums over an indicator grid.
struct Prefix {
    w: usize,
    sums: Vec<u32>,
}

impl Prefix {
    fn new(w: usize, h: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut sums = vec![0u32; (w + 1) * (h + 1)];
        for j in 0..h {
            for i in 0..w {
                let here = f(i, j) as u32;
                sums[(j + 1) * (w + 1) + i + 1] =
                    here + sums[j * (w + 1) + i + 1] + sums[(j + 1) * (w + 1) + i] - sums[j * (w + 1) + i];
            }
        }
        Prefix { w, sums }
    }

    /// Sum over `i ∈ [i0, i1)`, `j ∈ [j0, j1)`; zero when empty.
    fn sum(&self, i0: usize, i1: usize, j0: usize, j1: usize) -> u32 {
        if i1 <= i0 || j1 <= j0 {
            return 0;
        }
        let s = |i: usize, j: usize| self.sums[j * (self.w + 1) + i];
        s(i1, j1) + s(i0, j0) - s(i0, j1) - s(i1, j0)
    }
}

/// The rectangle maximizing `(min side, area)` on which `c` is a proper
/// coloring with at most two colors. Ties keep the first in `(x0, y0, x1, y1)`
/// order.
pub fn largest_two_colored_rect(c: &ColorGrid) -> Rect {
    let (w, h) = (c.rect.width() as usize, c.rect.height() as usize);
    let at = |i: usize, j: usize| c.colors[j * w + i];
    let bh = Prefix::new(w, h, |i, j| i + 1 < w && at(i, j) == at(i + 1, j));
    let bv = Prefix::new(w, h, |i, j| j + 1 < h && at(i, j) == at(i, j + 1));
    let h2 = Prefix::new(w, h, |i, j| i + 2 < w && at(i, j) != at(i + 2, j));
    let v2 = Prefix::new(w, h, |i, j| j + 2 < h && at(i, j) != at(i, j + 2));
    let d1 = Prefix::new(w, h, |i, j| i + 1 < w && j + 1 < h && at(i, j) != at(i + 1, j + 1));
    let d2 = Prefix::new(w, h, |i, j| i + 1 < w && j + 1 < h && at(i + 1, j) != at(i, j + 1));
    // Proper and parity-consistent (equal along distance-2 and diagonal steps)
    // is exactly "proper with at most two colors".
    let good = |x0: usize, x1: usize, y0: usize, y1: usize| {
        bh.sum(x0, x1, y0, y1 + 1) == 0
            && bv.sum(x0, x1 + 1, y0, y1) == 0
            && h2.sum(x0, x1.saturating_sub(1), y0, y1 + 1) == 0
            && v2.sum(x0, x1 + 1, y0, y1.saturating_sub(1)) == 0
            && d1.sum(x0, x1, y0, y1) == 0
            && d2.sum(x0, x1, y0, y1) == 0
    };
    let mut best = (0usize, 0usize, (0usize, 0usize, 0usize, 0usize));
    for x0 in 0..w {
        for y0 in 0..h {
            for x1 in x0..w {
                for y1 in y0..h {
                    let (rw, rh) = (x1 - x0 + 1, y1 - y0 + 1);
                    let key = (rw.min(rh), rw * rh);
                    if key > (best.0, best.1) && good(x0, x1, y0, y1) {
                        best = (key.0, key.1, (x0, y0, x1, y1));
                    }
                }
            }
        }
    }
    let (x0, y0, x1, y1) = best.2;
    let lo = c.rect.lo();
    Rect::from_bounds(lo.x + x0 as i64, lo.x + x1 as i64, lo.y + y0 as i64, lo.y + y1 as i64)
        .expect("sub-rectangle of a valid rectangle")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use proptest::prelude::*;

    fn r(a: i64, b: i64, c: i64, d: i64) -> Rect {
        Rect::from_bounds(a, b, c, d).unwrap()
    }
    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }
    fn set(points: &[(i64, i64)]) -> PointSet {
        points.iter().map(|&p| Point::from(p)).collect()
    }
    fn checker(rect: Rect) -> Config {
        Config::from_fn(rect, |p| (p.x + p.y).rem_euclid(2) == 1)
    }
    fn cell(bit: bool) -> Config {
        Config::filled(r(0, 0, 0, 0), bit)
    }

    #[test]
    fn shift_witness_examples() {
        let constant = Config::filled(r(0, 4, 0, 4), true);
        assert!(!check_shift_witness(&constant, pt(1, 0), &PointSet::from_rect(&r(-4, 4, -4, 4))).unwrap());
        let c = checker(r(0, 2, 0, 2));
        assert!(check_shift_witness(&c, pt(1, 0), &set(&[(0, 0), (-1, 0)])).unwrap());
        // without the left step the right column has no witness
        assert_eq!(shift_witness_failures(&c, pt(1, 0), &set(&[(0, 0)])).unwrap(), vec![pt(2, 0), pt(2, 1), pt(2, 2)]);
        assert!(!check_shift_witness(&c, pt(1, 0), &PointSet::new()).unwrap());
        assert_eq!(check_shift_witness(&c, Point::ZERO, &PointSet::new()), Err(Error::ZeroShift));
    }

    #[test]
    fn pattern_witness_examples() {
        let zeros = Config::filled(r(0, 2, 0, 2), false);
        let f = cell(false);
        // every g reaches the cell (0,0) via σ = -g
        let witness: PointSet = r(-2, 0, -2, 0).points().collect();
        assert!(check_pattern_witness(&zeros, &f, &witness, false));
        assert!(!check_pattern_witness(&zeros, &f, &witness, true));
        assert!(!check_pattern_witness(&zeros, &f, &PointSet::new(), false));
        // a single rightward step leaves the window from the right column
        assert_eq!(pattern_witness_failures(&zeros, &f, &set(&[(1, 0)]), false), vec![pt(2, 0), pt(2, 1), pt(2, 2)]);
    }

    #[test]
    fn window_two_coloring_examples() {
        for side in [1, 2, 5, 8] {
            let c = checker(r(0, side - 1, 0, side - 1));
            assert!(window_two_coloring_check(&c, pt(1, 0), &set(&[(0, 0)])));
        }
        let constant = Config::filled(r(0, 5, 0, 5), false);
        assert!(!window_two_coloring_check(&constant, pt(0, 1), &PointSet::from_rect(&r(-1, 1, -1, 1))));
        // probes span 11 columns; the window has 3
        let small = Config::filled(r(0, 2, 0, 2), false);
        let rep = window_two_coloring_report(&small, pt(10, 0), &set(&[(0, 0)]));
        assert!(rep.pass);
        assert_eq!((rep.admissible, rep.rim_excluded), (0, 9));
    }

    #[test]
    fn recurrence_examples() {
        let c = checker(r(0, 7, 0, 7));
        let all = PatternSet::new(vec![cell(false), cell(true)]).unwrap();
        assert!(recurrence_check(&c, &all, &set(&[(0, 0)])).pass);
        let ones = PatternSet::cylinder(cell(true)).unwrap();
        assert!(recurrence_check(&c, &ones, &set(&[(0, 0), (1, 0)])).pass);
        let rep = recurrence_check(&c, &ones, &set(&[(0, 0)]));
        assert!(!rep.pass);
        assert_eq!(rep.failing.len(), 32);
        let empty = recurrence_check(&c, &ones, &PointSet::new());
        assert!(!empty.pass);
        assert_eq!(empty.admissible, 64);
    }

    #[test]
    fn odd_ball_members() {
        let t = OddSet { radius: 1 }.members();
        assert_eq!(t, set(&[(-1, 0), (0, -1), (0, 1), (1, 0)]));
        let t3 = OddSet { radius: 3 }.members();
        assert!(t3.iter().all(|g| g.norm() % 2 == 1 && g.norm() <= 3));
        assert_eq!(t3.len(), 4 + 12);
    }

    #[test]
    fn odd_recurrence_examples() {
        let c = checker(r(0, 9, 0, 9));
        let all = PatternSet::new(vec![cell(false), cell(true)]).unwrap();
        assert_eq!(find_odd_recurrence(&c, &all, 9), Some(OddSet { radius: 1 }));
        let zeros = Config::filled(r(0, 9, 0, 9), false);
        let ones = PatternSet::cylinder(cell(true)).unwrap();
        assert_eq!(find_odd_recurrence(&zeros, &ones, 9), None);
        // an odd step always changes checkerboard color, so a 1-cell never
        // sees another 1 at odd distance
        assert_eq!(find_odd_recurrence(&c, &ones, 9), None);
    }

    #[test]
    fn odd_recurrence_on_sparse_lattices() {
        let ones = PatternSet::cylinder(cell(true)).unwrap();
        // 1s on 3ℤ²; oracle: for interior g, the least odd distance to a 1
        let x = Config::from_fn(r(0, 29, 0, 29), |p| p.x % 3 == 0 && p.y % 3 == 0);
        let interior = r(8, 21, 8, 21);
        let oracle = interior
            .points()
            .map(|g| {
                x.rect()
                    .points()
                    .filter(|&q| x.get(q) == Some(true) && (q - g).norm() % 2 == 1)
                    .map(|q| (q - g).norm())
                    .min()
                    .unwrap()
            })
            .max()
            .unwrap();
        assert_eq!(oracle, 3);
        let found = find_odd_recurrence(&x, &ones, 9).unwrap();
        assert_eq!(found.radius, oracle);
        assert!(found.members().iter().all(|g| g.norm() % 2 == 1));
        // 1s on 4ℤ² sit at even distance from every even g
        let y = Config::from_fn(r(0, 29, 0, 29), |p| p.x % 4 == 0 && p.y % 4 == 0);
        assert_eq!(find_odd_recurrence(&y, &ones, 9), None);
    }

    #[test]
    fn lattice_search_examples() {
        let c = checker(r(0, 9, 0, 9));
        let all = PatternSet::new(vec![cell(false), cell(true)]).unwrap();
        let l = find_lattice_in(&c, &all, 4).unwrap();
        assert_eq!((l.anchor(), l.spacings()), (pt(0, 0), (1, 1)));
        let zeros = PatternSet::cylinder(cell(false)).unwrap();
        let l = find_lattice_in(&c, &zeros, 4).unwrap();
        assert_eq!((l.anchor(), l.spacings()), (pt(0, 0), (2, 2)));
        for g in crate::lattice::lattice_points_in(&l, &c.rect()) {
            assert_eq!(c.get(g), Some(false));
        }
        let nowhere = PatternSet::cylinder(cell(true)).unwrap();
        assert_eq!(find_lattice_in(&Config::filled(r(0, 9, 0, 9), false), &nowhere, 4), None);
    }

    #[test]
    fn chromatic_examples() {
        let board = ColorGrid::from_fn(r(0, 5, 0, 4), |p| ((p.x + p.y) % 2) as u32);
        assert!(chromatic_check(&board, 2));
        assert_eq!(largest_two_colored_rect(&board), board.rect());
        let constant = ColorGrid::from_fn(r(0, 3, 0, 3), |_| 0);
        assert!(!chromatic_check(&constant, 2));
        let stripes = ColorGrid::from_fn(r(0, 5, 0, 0), |p| (p.x % 3) as u32);
        assert!(chromatic_check(&stripes, 3));
        assert!(!chromatic_check(&stripes, 2));
        assert_eq!(largest_two_colored_rect(&stripes).width(), 2);
    }

    fn brute_two_colored(c: &ColorGrid, rect: &Rect) -> bool {
        let mut colors = BTreeSet::new();
        for p in rect.points() {
            let v = c.get(p).unwrap();
            colors.insert(v);
            for s in [pt(1, 0), pt(0, 1)] {
                if rect.contains(p + s) && c.get(p + s) == Some(v) {
                    return false;
                }
            }
        }
        colors.len() <= 2
    }

    proptest! {
        #[test]
        fn largest_rect_matches_brute_force(w in 1i64..6, h in 1i64..6, cells in proptest::collection::vec(0u32..3, 36)) {
            let rect = r(0, w - 1, 0, h - 1);
            let g = ColorGrid::from_fn(rect, |p| cells[(p.y * 6 + p.x) as usize]);
            let best = largest_two_colored_rect(&g);
            prop_assert!(brute_two_colored(&g, &best));
            let key = |q: &Rect| (q.width().min(q.height()), q.area());
            for x0 in 0..w { for x1 in x0..w { for y0 in 0..h { for y1 in y0..h {
                let q = r(x0, x1, y0, y1);
                if brute_two_colored(&g, &q) {
                    prop_assert!(key(&q) <= key(&best));
                }
            }}}}
        }

        #[test]
        fn shift_witness_monotone_in_t(bits in any::<u64>(), extra in proptest::collection::vec((-3i64..3, -3i64..3), 0..6), tx in -2i64..3) {
            let p = Config::from_fn(r(0, 4, 0, 4), |q| (bits >> ((q.x * 5 + q.y) % 64)) & 1 == 1);
            let t = pt(if tx == 0 { 1 } else { tx }, 0);
            let base = set(&[(0, 0), (-1, 0), (1, 1)]);
            let bigger: PointSet = base.iter().copied().chain(extra.into_iter().map(Point::from)).collect();
            if check_shift_witness(&p, t, &base).unwrap() {
                prop_assert!(check_shift_witness(&p, t, &bigger).unwrap());
            }
        }

        #[test]
        fn window_check_passes_on_subwindows(a in 0i64..4, b in 4i64..8, c in 0i64..4, d in 4i64..8) {
            let x = checker(r(0, 9, 0, 9));
            let sub = x.restrict(r(a, b, c, d)).unwrap();
            let t = set(&[(0, 0), (0, 1)]);
            prop_assert!(window_two_coloring_check(&x, pt(1, 0), &t));
            prop_assert!(window_two_coloring_check(&sub, pt(1, 0), &t));
        }

        #[test]
        fn recurrence_monotone(bits in any::<u64>(), extra in proptest::collection::vec((-2i64..3, -2i64..3), 0..5)) {
            let x = Config::from_fn(r(0, 7, 0, 7), |q| (bits >> ((q.x * 8 + q.y) % 64)) & 1 == 1);
            let b = PatternSet::cylinder(cell(true)).unwrap();
            let small = set(&[(0, 0), (1, 0), (0, 1)]);
            let big: PointSet = small.iter().copied().chain(extra.into_iter().map(Point::from)).collect();
            let (rs, rb) = (recurrence_check(&x, &b, &small), recurrence_check(&x, &b, &big));
            // compare on positions admissible for both
            let failing_big: BTreeSet<Point> = rb.failing.iter().copied().collect();
            let failing_small: BTreeSet<Point> = rs.failing.iter().copied().collect();
            prop_assert!(failing_big.iter().all(|g| failing_small.contains(g)));
        }
    }
}
