//! Finite partial `{0,1}` configurations on rectangles.
//!
//! A [`Config`] stores one bit per cell of its rectangle in a dense bit grid
//! plus a side set of holes where the value is undefined. Hole cells keep a
//! zero bit so that equality is structural.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{Point, PointSet, Rect};

const WORD: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Config {
    rect: Rect,
    bits: Vec<u64>,
    holes: BTreeSet<Point>,
}

impl Config {
    /// Every cell of `rect` set to `bit`, no holes.
    pub fn filled(rect: Rect, bit: bool) -> Config {
        let n = rect.area();
        let mut bits = vec![if bit { u64::MAX } else { 0 }; n.div_ceil(WORD)];
        if bit && n % WORD != 0 {
            if let Some(last) = bits.last_mut() {
                *last = (1u64 << (n % WORD)) - 1;
            }
        }
        Config { rect, bits, holes: BTreeSet::new() }
    }

    pub fn from_fn(rect: Rect, mut f: impl FnMut(Point) -> bool) -> Config {
        let mut c = Config::filled(rect, false);
        for p in rect.points() {
            if f(p) {
                c.write(p, true);
            }
        }
        c
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn holes(&self) -> &BTreeSet<Point> {
        &self.holes
    }

    pub fn is_hole_free(&self) -> bool {
        self.holes.is_empty()
    }

    pub fn is_hole(&self, p: Point) -> bool {
        self.holes.contains(&p)
    }

    /// Value at `p`; `None` outside the rectangle or on a hole.
    #[inline]
    pub fn get(&self, p: Point) -> Option<bool> {
        if !self.rect.contains(p) || (!self.holes.is_empty() && self.holes.contains(&p)) {
            return None;
        }
        Some(self.read(p))
    }

    pub fn is_defined(&self, p: Point) -> bool {
        self.get(p).is_some()
    }

    /// Define `p` with `bit`, removing a hole there if present.
    pub fn set(&mut self, p: Point, bit: bool) -> Result<()> {
        if !self.rect.contains(p) {
            return Err(Error::OutOfRect { point: p, rect: self.rect });
        }
        self.holes.remove(&p);
        self.write(p, bit);
        Ok(())
    }

    /// Make `p` undefined.
    pub fn make_hole(&mut self, p: Point) -> Result<()> {
        if !self.rect.contains(p) {
            return Err(Error::OutOfRect { point: p, rect: self.rect });
        }
        self.write(p, false);
        self.holes.insert(p);
        Ok(())
    }

    /// Defined points in lexicographic order.
    pub fn defined_points(&self) -> impl Iterator<Item = Point> + '_ {
        self.rect.points().filter(move |p| !self.holes.contains(p))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The flip `1 − p`: same rectangle and holes, defined bits complemented.
    pub fn flip(&self) -> Config {
        let n = self.rect.area();
        let mut bits: Vec<u64> = self.bits.iter().map(|w| !w).collect();
        if n % WORD != 0 {
            if let Some(last) = bits.last_mut() {
                *last &= (1u64 << (n % WORD)) - 1;
            }
        }
        let mut out = Config { rect: self.rect, bits, holes: self.holes.clone() };
        for &h in &self.holes {
            out.write(h, false);
        }
        out
    }

    /// The part of `self` on `rect`, which must lie inside `self.rect()`.
    pub fn restrict(&self, rect: Rect) -> Result<Config> {
        if !self.rect.contains_rect(&rect) {
            return Err(Error::OutOfRect { point: rect.lo(), rect: self.rect });
        }
        let mut out = Config::from_fn(rect, |p| self.read(p));
        out.holes = self.holes.iter().copied().filter(|h| rect.contains(*h)).collect();
        for &h in &out.holes.clone() {
            out.write(h, false);
        }
        Ok(out)
    }

    /// `v · p`: the same configuration moved by `v`.
    pub fn translate(&self, v: Point) -> Result<Config> {
        let rect = self.rect.translate(v)?;
        let mut out = Config::from_fn(rect, |p| self.read(p - v));
        out.holes = self.holes.iter().map(|&h| h + v).collect();
        Ok(out)
    }

    /// Image under the axis mirror `(x, y) ↦ (±x, ±y)`.
    pub fn reflect(&self, flip_x: bool, flip_y: bool) -> Config {
        let rect = self.rect.reflect(flip_x, flip_y);
        let mut out = Config::from_fn(rect, |p| self.read(p.reflect(flip_x, flip_y)));
        out.holes = self.holes.iter().map(|h| h.reflect(flip_x, flip_y)).collect();
        out
    }

    /// Whether `p(σ + u) = f(u)` (or `1 − f(u)` when `flipped`) for every
    /// `u ∈ dom(f)`, with `σ + dom(f)` inside the defined part of `self`.
    pub fn matches_at(&self, f: &Config, sigma: Point, flipped: bool) -> bool {
        let fr = f.rect;
        let (lo, hi) = (fr.lo() + sigma, fr.hi() + sigma);
        if !self.rect.contains(lo) || !self.rect.contains(hi) {
            return false;
        }
        let check_holes = !self.holes.is_empty();
        for u in f.defined_points() {
            let q = u + sigma;
            if check_holes && self.holes.contains(&q) {
                return false;
            }
            if self.read(q) != (f.read(u) ^ flipped) {
                return false;
            }
        }
        true
    }

    /// `self ⊇ other` as partial functions.
    pub fn extends(&self, other: &Config) -> bool {
        other.defined_points().all(|p| self.get(p) == Some(other.read(p)))
    }

    #[inline]
    pub(crate) fn read(&self, p: Point) -> bool {
        let i = self.rect.index_of(p);
        (self.bits[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    fn write(&mut self, p: Point, bit: bool) {
        let i = self.rect.index_of(p);
        if bit {
            self.bits[i / WORD] |= 1 << (i % WORD);
        } else {
            self.bits[i / WORD] &= !(1 << (i % WORD));
        }
    }
}

/// Tile `nx × ny` copies of the hole-free `q`, block `(i, j)` placed at
/// `anchor + (i·w, j·h)` and flipped when `flip_mask(i, j)` holds.
///
/// With `anchor = lo(q)` this is `p(a + iw + i′, c + jh + j′) = q(a + i′, c + j′)`.
pub fn tile(q: &Config, nx: i64, ny: i64, flip_mask: impl Fn(i64, i64) -> bool, anchor: Point) -> Result<Config> {
    if nx < 1 || ny < 1 {
        return Err(Error::InvalidCount { nx, ny });
    }
    if !q.is_hole_free() {
        return Err(Error::HasHoles);
    }
    let moved = q.translate(anchor.checked_sub(q.rect.lo())?)?;
    tile_blocks(&moved, (0, nx - 1), (0, ny - 1), flip_mask)
}

/// Tile copies of `q` over block indices `i ∈ [i0, i1]`, `j ∈ [j0, j1]`,
/// block `(i, j)` at `lo(q) + (i·w, j·h)`. Holes of `q` are copied into
/// every block.
pub(crate) fn tile_blocks(
    q: &Config,
    (i0, i1): (i64, i64),
    (j0, j1): (i64, i64),
    flip_mask: impl Fn(i64, i64) -> bool,
) -> Result<Config> {
    if i1 < i0 || j1 < j0 {
        return Err(Error::InvalidCount { nx: i1 - i0 + 1, ny: j1 - j0 + 1 });
    }
    let (w, h) = (q.rect.width(), q.rect.height());
    let lo = q.rect.lo();
    let mul = |a: i64, b: i64| a.checked_mul(b).ok_or(Error::Overflow);
    let new_lo = lo.checked_add(Point::new(mul(i0, w)?, mul(j0, h)?))?;
    let new_w = mul(i1 - i0 + 1, w)?;
    let new_h = mul(j1 - j0 + 1, h)?;
    let rect = Rect::with_size(new_lo, new_w, new_h)?;
    let mut out = Config::from_fn(rect, |p| {
        let i = (p.x - lo.x).div_euclid(w);
        let j = (p.y - lo.y).div_euclid(h);
        let src = Point::new(lo.x + (p.x - lo.x).rem_euclid(w), lo.y + (p.y - lo.y).rem_euclid(h));
        q.read(src) ^ flip_mask(i, j)
    });
    for &u in &q.holes {
        for i in i0..=i1 {
            for j in j0..=j1 {
                out.make_hole(u + Point::new(i * w, j * h))?;
            }
        }
    }
    Ok(out)
}

/// All `σ` with `σ + dom(f)` inside the defined part of `p` and
/// `p(σ + u) = f(u)` for every `u` (or `1 − f(u)` when `flipped`).
pub fn find_occurrences(p: &Config, f: &Config, flipped: bool) -> PointSet {
    let (pr, fr) = (p.rect(), f.rect());
    let lo = pr.lo() - fr.lo();
    let hi = pr.hi() - fr.hi();
    let Ok(range) = Rect::new(lo, hi) else {
        return PointSet::new();
    };
    range.points().filter(|&s| p.matches_at(f, s, flipped)).collect()
}

/// `∂A`: points of `A` with at least one of their four neighbours outside `A`.
pub fn boundary(a: &PointSet) -> PointSet {
    const STEPS: [Point; 4] = [Point::new(1, 0), Point::new(-1, 0), Point::new(0, 1), Point::new(0, -1)];
    a.iter().copied().filter(|&x| STEPS.iter().any(|&s| !a.contains(&(x + s)))).collect()
}

/// A finite union of cylinder sets, one per hole-free pattern.
///
/// A position `g` of a configuration `x` is a *B-position* when some pattern
/// `f` satisfies `x(g + u) = f(u)` for all `u ∈ dom(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<Config>,
}

impl PatternSet {
    pub fn new(patterns: Vec<Config>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::EmptyPatternSet);
        }
        if patterns.iter().any(|p| !p.is_hole_free()) {
            return Err(Error::HasHoles);
        }
        Ok(PatternSet { patterns })
    }

    /// The single cylinder `U_f`.
    pub fn cylinder(f: Config) -> Result<Self> {
        PatternSet::new(vec![f])
    }

    pub fn patterns(&self) -> &[Config] {
        &self.patterns
    }

    /// Whether every pattern probe at `g` lies inside `window`.
    pub fn fits(&self, window: &Rect, g: Point) -> bool {
        self.patterns.iter().all(|f| window.contains(f.rect().lo() + g) && window.contains(f.rect().hi() + g))
    }

    pub fn matches(&self, x: &Config, g: Point) -> bool {
        self.patterns.iter().any(|f| x.matches_at(f, g, false))
    }
}
