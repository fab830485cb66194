//! Plain-text PGM (P2) and ASCII renderings. Images put high `y` at the
//! top.

use std::fmt::Write;

use twocolor_core::toast::Toast;
use twocolor_core::{boundary, Config, Point, Rect};

fn pgm(rect: &Rect, maxval: u32, mut value: impl FnMut(Point) -> u32) -> String {
    let mut out = String::new();
    writeln!(out, "P2\n{} {}\n{}", rect.width(), rect.height(), maxval).unwrap();
    for y in (rect.lo().y..=rect.hi().y).rev() {
        let row: Vec<String> = (rect.lo().x..=rect.hi().x).map(|x| value(Point::new(x, y)).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Bits as 0 and 2, holes as gray 1. For grid periodicity windows the holes
/// are exactly the hole lattice, so it stands out against the bits.
pub fn config_pgm(c: &Config) -> String {
    pgm(&c.rect(), 2, |p| match c.get(p) {
        Some(true) => 2,
        Some(false) => 0,
        None => 1,
    })
}

/// `1`, `0` and `.` for holes, top row first.
pub fn config_ascii(c: &Config) -> String {
    let r = c.rect();
    let mut out = String::new();
    for y in (r.lo().y..=r.hi().y).rev() {
        for x in r.lo().x..=r.hi().x {
            out.push(match c.get(Point::new(x, y)) {
                Some(true) => '1',
                Some(false) => '0',
                None => '.',
            });
        }
        out.push('\n');
    }
    out
}

/// The lowest level whose class contains a cell, and whether the cell lies
/// on that class's boundary.
type ToastCell = Option<(usize, bool)>;

fn toast_cells(t: &Toast) -> Option<(Rect, Vec<ToastCell>)> {
    let window = t.window()?;
    let bounds: Vec<Vec<_>> = t.levels.iter().map(|l| l.iter().map(boundary).collect()).collect();
    let cells = window
        .points()
        .map(|p| {
            t.levels.iter().enumerate().find_map(|(n, level)| {
                let k = level.iter().position(|c| c.contains(&p))?;
                Some((n, bounds[n][k].contains(&p)))
            })
        })
        .collect();
    Some((window, cells))
}

/// Class boundaries black, interiors lighter for lower levels, uncovered
/// cells white.
pub fn toast_pgm(t: &Toast) -> String {
    let Some((window, cells)) = toast_cells(t) else {
        return pgm(&Rect::from_bounds(0, 0, 0, 0).unwrap(), 1, |_| 1);
    };
    let levels = t.levels.len() as u32;
    let maxval = levels + 1;
    let h = window.height();
    pgm(&window, maxval, |p| {
        let i = ((p.x - window.lo().x) * h + (p.y - window.lo().y)) as usize;
        match cells[i] {
            None => maxval,
            Some((_, true)) => 0,
            Some((n, false)) => levels - n as u32,
        }
    })
}

/// `#` on class boundaries, the level digit (mod 10) inside, space when
/// uncovered.
pub fn toast_ascii(t: &Toast) -> String {
    let Some((window, cells)) = toast_cells(t) else {
        return String::new();
    };
    let h = window.height();
    let mut out = String::new();
    for y in (window.lo().y..=window.hi().y).rev() {
        for x in window.lo().x..=window.hi().x {
            let i = ((x - window.lo().x) * h + (y - window.lo().y)) as usize;
            out.push(match cells[i] {
                None => ' ',
                Some((_, true)) => '#',
                Some((n, false)) => char::from_digit((n % 10) as u32, 10).unwrap(),
            });
        }
        out.push('\n');
    }
    out
}
