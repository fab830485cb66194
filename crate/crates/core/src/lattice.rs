//! Integer-lattice geometry on `ℤ²`: points, inclusive rectangles, the
//! taxicab norm, distances to finite sets, and lattices `k + (wℤ × hℤ)`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// A point of `ℤ²`. Ordered lexicographically, first by `x` then by `y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ZERO: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn is_zero(self) -> bool {
        self == Point::ZERO
    }

    /// Taxicab norm `|x| + |y|`.
    pub fn norm(self) -> u64 {
        self.x.unsigned_abs() + self.y.unsigned_abs()
    }

    pub fn checked_add(self, other: Point) -> Result<Point> {
        Ok(Point {
            x: self.x.checked_add(other.x).ok_or(Error::Overflow)?,
            y: self.y.checked_add(other.y).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_sub(self, other: Point) -> Result<Point> {
        Ok(Point {
            x: self.x.checked_sub(other.x).ok_or(Error::Overflow)?,
            y: self.y.checked_sub(other.y).ok_or(Error::Overflow)?,
        })
    }

    /// Mirror the selected axes through the origin.
    pub fn reflect(self, flip_x: bool, flip_y: bool) -> Point {
        Point { x: if flip_x { -self.x } else { self.x }, y: if flip_y { -self.y } else { self.y } }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(x, y)
    }
}

/// Taxicab norm `‖g‖ = Σᵢ|gᵢ|` of a point in any dimension.
pub fn taxicab_norm(coords: &[i64]) -> u64 {
    coords.iter().map(|c| c.unsigned_abs()).sum()
}

/// A distance that may be infinite. `Finite(_)` orders below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// `min_{s ∈ S} ‖g − s‖`, or `Infinite` when `S` is empty.
pub fn dist_to_set<'a, I>(g: Point, set: I) -> Distance
where
    I: IntoIterator<Item = &'a Point>,
{
    set.into_iter()
        .map(|&s| (g.x.abs_diff(s.x)) + (g.y.abs_diff(s.y)))
        .min()
        .map_or(Distance::Infinite, Distance::Finite)
}

/// An inclusive rectangle `[lo.x, hi.x] × [lo.y, hi.y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rect {
    lo: Point,
    hi: Point,
}

impl Rect {
    pub fn new(lo: Point, hi: Point) -> Result<Rect> {
        if lo.x > hi.x || lo.y > hi.y {
            return Err(Error::InvalidRect { lo, hi });
        }
        // keep width() and height() representable
        hi.x.checked_sub(lo.x).and_then(|d| d.checked_add(1)).ok_or(Error::Overflow)?;
        hi.y.checked_sub(lo.y).and_then(|d| d.checked_add(1)).ok_or(Error::Overflow)?;
        Ok(Rect { lo, hi })
    }

    /// `[a, b] × [c, d]`.
    pub fn from_bounds(a: i64, b: i64, c: i64, d: i64) -> Result<Rect> {
        Rect::new(Point::new(a, c), Point::new(b, d))
    }

    /// The `w × h` rectangle with lower-left corner `lo`.
    pub fn with_size(lo: Point, w: i64, h: i64) -> Result<Rect> {
        if w < 1 || h < 1 {
            return Err(Error::InvalidRect { lo, hi: lo });
        }
        let hi = lo.checked_add(Point::new(w - 1, h - 1))?;
        Rect::new(lo, hi)
    }

    pub fn lo(&self) -> Point {
        self.lo
    }

    pub fn hi(&self) -> Point {
        self.hi
    }

    pub fn width(&self) -> i64 {
        self.hi.x - self.lo.x + 1
    }

    pub fn height(&self) -> i64 {
        self.hi.y - self.lo.y + 1
    }

    pub fn area(&self) -> usize {
        (self.width() as usize) * (self.height() as usize)
    }

    pub fn contains(&self, p: Point) -> bool {
        self.lo.x <= p.x && p.x <= self.hi.x && self.lo.y <= p.y && p.y <= self.hi.y
    }

    pub fn contains_rect(&self, other: &Rect) -> bool {
        self.contains(other.lo) && self.contains(other.hi)
    }

    pub fn translate(&self, v: Point) -> Result<Rect> {
        Rect::new(self.lo.checked_add(v)?, self.hi.checked_add(v)?)
    }

    pub fn intersect(&self, other: &Rect) -> Option<Rect> {
        let lo = Point::new(self.lo.x.max(other.lo.x), self.lo.y.max(other.lo.y));
        let hi = Point::new(self.hi.x.min(other.hi.x), self.hi.y.min(other.hi.y));
        Rect::new(lo, hi).ok()
    }

    /// Shrink by `m` on every side; `None` when nothing is left.
    pub fn shrink(&self, m: i64) -> Option<Rect> {
        Rect::new(self.lo + Point::new(m, m), self.hi - Point::new(m, m)).ok()
    }

    /// Image under the axis mirror of [`Point::reflect`].
    pub fn reflect(&self, flip_x: bool, flip_y: bool) -> Rect {
        let a = self.lo.reflect(flip_x, flip_y);
        let b = self.hi.reflect(flip_x, flip_y);
        Rect { lo: Point::new(a.x.min(b.x), a.y.min(b.y)), hi: Point::new(a.x.max(b.x), a.y.max(b.y)) }
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let (lo, hi) = (self.lo, self.hi);
        (lo.x..=hi.x).flat_map(move |x| (lo.y..=hi.y).map(move |y| Point::new(x, y)))
    }

    /// Offset of `p` in row-major order (rows are constant `y`).
    #[inline]
    pub(crate) fn index_of(&self, p: Point) -> usize {
        ((p.y - self.lo.y) as usize) * (self.width() as usize) + (p.x - self.lo.x) as usize
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]x[{}, {}]", self.lo.x, self.hi.x, self.lo.y, self.hi.y)
    }
}

/// A coset `anchor + (wℤ × hℤ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    anchor: Point,
    w: i64,
    h: i64,
}

impl Lattice {
    pub fn new(anchor: Point, w: i64, h: i64) -> Result<Lattice> {
        if w < 1 || h < 1 {
            return Err(Error::InvalidLattice { w, h });
        }
        Ok(Lattice { anchor, w, h })
    }

    pub fn anchor(&self) -> Point {
        self.anchor
    }

    pub fn spacings(&self) -> (i64, i64) {
        (self.w, self.h)
    }

    pub fn contains(&self, g: Point) -> bool {
        (g.x - self.anchor.x).rem_euclid(self.w) == 0 && (g.y - self.anchor.y).rem_euclid(self.h) == 0
    }

    /// The same coset with its anchor moved to the residue in `[lo, lo + (w, h))`.
    pub fn normalized_to(&self, lo: Point) -> Lattice {
        Lattice {
            anchor: Point::new(
                lo.x + (self.anchor.x - lo.x).rem_euclid(self.w),
                lo.y + (self.anchor.y - lo.y).rem_euclid(self.h),
            ),
            ..*self
        }
    }
}

/// Points of `lattice` inside `rect`, sorted lexicographically.
pub fn lattice_points_in(lattice: &Lattice, rect: &Rect) -> Vec<Point> {
    let first = lattice.normalized_to(rect.lo()).anchor();
    let mut out = Vec::new();
    let mut x = first.x;
    while x <= rect.hi().x {
        let mut y = first.y;
        while y <= rect.hi().y {
            out.push(Point::new(x, y));
            y += lattice.h;
        }
        x += lattice.w;
    }
    out
}

/// A finite set of points kept sorted and deduplicated.
///
/// Used for witness sets (`T`, `F`), boundaries and class contents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PointSet(Vec<Point>);

impl PointSet {
    pub fn new() -> Self {
        PointSet(Vec::new())
    }

    pub fn from_rect(rect: &Rect) -> Self {
        PointSet(rect.points().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.0.binary_search(p).is_ok()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Point> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Point] {
        &self.0
    }

    pub fn insert(&mut self, p: Point) -> bool {
        match self.0.binary_search(&p) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, p);
                true
            }
        }
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.0.iter().all(|p| other.contains(p))
    }

    pub fn intersects(&self, other: &PointSet) -> bool {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small.iter().any(|p| large.contains(p))
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        self.iter().chain(other.iter()).copied().collect()
    }

    /// Smallest rectangle containing every point.
    pub fn bounding_rect(&self) -> Option<Rect> {
        let first = *self.0.first()?;
        let (mut lo, mut hi) = (first, first);
        for p in &self.0 {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        Rect::new(lo, hi).ok()
    }

    pub fn reflect(&self, flip_x: bool, flip_y: bool) -> PointSet {
        self.iter().map(|p| p.reflect(flip_x, flip_y)).collect()
    }
}

impl FromIterator<Point> for PointSet {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        let mut v: Vec<Point> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        PointSet(v)
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = core::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
