//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints its verdict line; the process exits non-zero if any
//! criterion fails.
//!
//! Run with `cargo test -p twocolor-suite --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

use twocolor::json::*;
use twocolor_core::forcing_gp::{
    build_generic_gp_chain, detect_line_period, is_extension_gp, lattice_demo, verify_grid_periodicity, GpCertificate,
    GpCondition, GpOutcome, GpRequirement, Line, WINDOW_COPIES,
};
use twocolor_core::forcing_mt::{
    build_generic, build_generic_chain, extend_cover, extend_pattern, extend_shift, is_extension, validate,
    Certificate, Limits, MtCondition, PatternEntry, Requirement, Schedule, ShiftEntry, ShiftStrategy, StepOutcome,
};
use twocolor_core::markers::{check_segment_center_cover, segment_threshold, RectPartition};
use twocolor_core::toast::{
    check_fx_strict_growth, check_toast, concentric_squares, fx_profile, Toast, ToastViolation,
};
use twocolor_core::witness::{check_pattern_witness, find_odd_recurrence, window_two_coloring_report};
use twocolor_core::{Config, PatternSet, Point, PointSet, Rect};

type Criterion = (&'static str, fn() -> Verdict, Option<Duration>);

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into() }
    }
}

fn rect(x: i64, y: i64, w: i64, h: i64) -> Rect {
    Rect::with_size(Point::new(x, y), w, h).unwrap()
}

fn random_config(rng: &mut ChaCha8Rng, r: Rect) -> Config {
    Config::from_fn(r, |_| rng.random::<bool>())
}

fn norm(p: Point) -> u64 {
    p.x.unsigned_abs() + p.y.unsigned_abs()
}

fn shifts_up_to(n: i64) -> Vec<Point> {
    let mut out = Vec::new();
    for x in -n..=n {
        for y in -n..=n {
            let p = Point::new(x, y);
            if p != Point::ZERO && norm(p) <= n as u64 {
                out.push(p);
            }
        }
    }
    out
}

// Independent oracles: plain loops over the rectangle, no library matching.

fn cell(x: &Config, g: Point) -> Option<bool> {
    if x.rect().contains(g) && !x.holes().contains(&g) {
        x.get(g)
    } else {
        None
    }
}

fn oracle_match(x: &Config, f: &Config, at: Point, flipped: bool) -> bool {
    f.rect().points().all(|u| match (cell(x, at + u), cell(f, u)) {
        (Some(a), Some(b)) => a == (b ^ flipped),
        _ => false,
    })
}

fn oracle_valid(c: &MtCondition) -> bool {
    let p = &c.config;
    let r = p.rect();
    if !p.holes().is_empty() || (c.odd && (r.width() % 2 == 0 || r.height() % 2 == 0)) {
        return false;
    }
    let shifts_ok = c.shifts.iter().all(|s| {
        s.t != Point::ZERO
            && r.points().all(|g| {
                s.witness.iter().any(|&tau| match (cell(p, g + tau), cell(p, g + s.t + tau)) {
                    (Some(a), Some(b)) => a != b,
                    _ => false,
                })
            })
    });
    let patterns_ok = c.patterns.iter().all(|e| {
        [false, true]
            .iter()
            .all(|&flipped| r.points().all(|g| e.witness.iter().any(|&s| oracle_match(p, &e.pattern, g + s, flipped))))
    });
    shifts_ok && patterns_ok
}

/// A random valid condition on a domain of at most 9×9 with at most three
/// shifts and two patterns. Witness sets send every `g` to one fixed
/// differing pair or occurrence.
fn random_condition(rng: &mut ChaCha8Rng) -> MtCondition {
    loop {
        let odd = rng.random_bool(0.3);
        let side = |rng: &mut ChaCha8Rng| {
            let s = rng.random_range(1..=9i64);
            if odd && s % 2 == 0 {
                s - 1
            } else {
                s
            }
        };
        let (w, h) = (side(rng), side(rng));
        let r = rect(rng.random_range(-4..=4), rng.random_range(-4..=4), w, h);
        let p = random_config(rng, r);
        let mut c = MtCondition::new(p.clone(), odd);
        let towards = |target: Point| -> PointSet { r.points().map(|g| target - g).collect() };

        let want_shifts = rng.random_range(0..=3);
        let candidates = shifts_up_to(3);
        for _ in 0..20 {
            if c.shifts.len() == want_shifts {
                break;
            }
            let t = *candidates.choose(rng).unwrap();
            if c.has_shift(t) {
                continue;
            }
            if let Some(x0) =
                r.points().find(|&x| matches!((cell(&p, x), cell(&p, x + t)), (Some(a), Some(b)) if a != b))
            {
                c.shifts.push(ShiftEntry { t, witness: towards(x0) });
            }
        }

        let want_patterns = rng.random_range(0..=2);
        for _ in 0..20 {
            if c.patterns.len() == want_patterns {
                break;
            }
            let (fw, fh) = (rng.random_range(1..=w.min(2)), rng.random_range(1..=h.min(2)));
            let at = Point::new(
                rng.random_range(r.lo().x..=r.hi().x - fw + 1),
                rng.random_range(r.lo().y..=r.hi().y - fh + 1),
            );
            let f = p.restrict(rect(at.x, at.y, fw, fh)).unwrap().translate(Point::ZERO - at).unwrap();
            let flip_at = r.points().find(|&s| oracle_match(&p, &f, s, true));
            if let Some(b) = flip_at {
                let witness = towards(at).union(&towards(b));
                c.patterns.push(PatternEntry { pattern: f, witness });
            }
        }
        if c.shifts.len() == want_shifts && c.patterns.len() == want_patterns {
            return c;
        }
    }
}

fn criterion_1() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut failures = Vec::new();
    for k in 0..500 {
        let c = random_condition(&mut rng);
        assert!(oracle_valid(&c) && validate(&c).is_empty(), "generator produced an invalid condition");
        let g = Point::new(rng.random_range(-15..=15), rng.random_range(-15..=15));
        let t = loop {
            let t = Point::new(rng.random_range(-4..=4), rng.random_range(-4..=4));
            if t != Point::ZERO {
                break t;
            }
        };
        let results = [
            ("extend_cover", extend_cover(&c, g)),
            ("extend_shift", extend_shift(&c, t)),
            ("extend_pattern", extend_pattern(&c)),
        ];
        for (name, result) in results {
            match result {
                Ok(next) if validate(&next).is_empty() && oracle_valid(&next) && is_extension(&next, &c) => {}
                Ok(_) => failures.push(format!("#{k} {name}: invalid or not an extension")),
                Err(e) => failures.push(format!("#{k} {name}: {e}")),
            }
        }
    }
    Verdict::new(failures.is_empty(), format!("500 conditions, {} failures {:?}", failures.len(), failures.first()))
}

fn criterion_2() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let seed = random_config(&mut rng, rect(0, 0, 3, 3));
    let mut steps: Vec<Requirement> = shifts_up_to(3).into_iter().map(Requirement::Shift).collect();
    let shift_count = steps.len();
    steps.push(Requirement::SelfPattern);
    steps.push(Requirement::SelfPattern);
    steps.push(Requirement::Cover(Point::new(-7, 11)));
    let cert = match build_generic(&MtCondition::new(seed, false), &Schedule::new(steps).unwrap(), &Limits::default()) {
        Ok(c) => c,
        Err(e) => return Verdict::new(false, format!("build failed: {e}")),
    };
    let c = &cert.condition;
    let x = &c.config;
    let mut failures = Vec::new();
    for s in &c.shifts {
        let report = window_two_coloring_report(x, s.t, &s.witness);
        if !report.pass || report.admissible == 0 {
            failures.push(format!("shift {}: {} failing, {} admissible", s.t, report.failing.len(), report.admissible));
        }
    }
    for (j, e) in c.patterns.iter().enumerate() {
        for flipped in [false, true] {
            if !check_pattern_witness(x, &e.pattern, &e.witness, flipped) {
                failures.push(format!("pattern {j} flipped={flipped}"));
            }
        }
    }
    let pass = failures.is_empty() && c.shifts.len() == shift_count && c.patterns.len() == 2;
    Verdict::new(
        pass,
        format!(
            "{} shifts, {} patterns, window {}x{}, failures {:?}",
            c.shifts.len(),
            c.patterns.len(),
            x.rect().width(),
            x.rect().height(),
            failures
        ),
    )
}

fn criterion_3() -> Verdict {
    let mut failures = Vec::new();
    let mut radii = Vec::new();
    for s in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(300 + s);
        let seed = random_config(&mut rng, rect(0, 0, 3, 3));
        let sched = Schedule::new(vec![
            Requirement::DuplicateOdd,
            Requirement::SelfPattern,
            Requirement::Cover(Point::new(80, 40)),
        ])
        .unwrap();
        let cert = match build_generic(&MtCondition::new(seed.clone(), true), &sched, &Limits::default()) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("seed {s}: {e}"));
                continue;
            }
        };
        let x = &cert.condition.config;
        let Some(StepOutcome::Duplicated { source, offset }) = cert.records.first().map(|r| r.outcome.clone()) else {
            failures.push(format!("seed {s}: no duplication recorded"));
            continue;
        };
        let at = source.lo() - seed.rect().lo();
        if norm(offset) % 2 != 1 || !oracle_match(x, &seed, at, false) || !oracle_match(x, &seed, at + offset, false) {
            failures.push(format!("seed {s}: copies at {at} and {} not exact at odd offset", at + offset));
            continue;
        }
        let b = PatternSet::cylinder(seed.clone()).unwrap();
        let max_radius = 2 * x.rect().width().max(x.rect().height()) as u64;
        match find_odd_recurrence(x, &b, max_radius) {
            Some(t) if t.members().iter().all(|&g| norm(g) % 2 == 1) => radii.push(t.radius),
            Some(_) => failures.push(format!("seed {s}: T not inside O")),
            None => failures.push(format!("seed {s}: no odd recurrence set")),
        }
    }
    Verdict::new(failures.is_empty(), format!("10 seeds, radii {radii:?}, failures {failures:?}"))
}

fn criterion_4() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut seed = random_config(&mut rng, rect(0, 0, 2, 2));
    seed.make_hole(Point::new(1, 1)).unwrap();
    let shifts = shifts_up_to(2);
    let lines: Vec<Line> = (0..6).map(Line::Row).chain((0..6).map(Line::Column)).collect();
    let mut sched: Vec<GpRequirement> = shifts.iter().map(|&s| GpRequirement::Shift(s)).collect();
    sched.extend(lines.iter().map(|&l| GpRequirement::LineClear(l)));
    sched.push(GpRequirement::Cover(Point::new(63, 63)));
    let build = match build_generic_gp_chain(&GpCondition::new(2, seed), &sched, &Limits::default()) {
        Ok(b) => b,
        Err(e) => return Verdict::new(false, format!("build failed: {e}")),
    };
    let q = &build.certificate.condition;
    let (w, h) = (q.width(), q.height());
    let u = q.hole().unwrap();
    let x = q.periodic_window(WINDOW_COPIES).unwrap();
    let mut failures = Vec::new();
    if w.min(h) < 64 {
        failures.push(format!("side {w}x{h} below 64"));
    }
    if !verify_grid_periodicity(&x, w, h, u) {
        failures.push("final window not grid periodic".into());
    }
    for (i, m) in build.chain.iter().enumerate() {
        let mx = m.periodic_window(WINDOW_COPIES).unwrap();
        if !verify_grid_periodicity(&mx, m.width(), m.height(), m.hole().unwrap()) {
            failures.push(format!("chain member {i} not grid periodic"));
        }
    }
    for &line in &lines {
        let side = match line {
            Line::Row(_) => w,
            Line::Column(_) => h,
        };
        match detect_line_period(&x, line) {
            Ok(Some(p)) if p.is_power_of_two() && side as u64 % p == 0 => {}
            other => failures.push(format!("{line}: period {other:?} for side {side}")),
        }
    }
    for &s in &shifts {
        let recorded = build.certificate.records.iter().find_map(|r| match (r.requirement, r.outcome.clone()) {
            (GpRequirement::Shift(t), GpOutcome::Discriminated { pair, .. }) if t == s => Some(pair),
            _ => None,
        });
        let differs =
            |(a, b): (Point, Point)| b - a == s && matches!((cell(&x, a), cell(&x, b)), (Some(p), Some(q)) if p != q);
        let ok = match recorded {
            Some(pair) => differs(pair),
            None => x.rect().points().any(|g| differs((g, g + s))),
        };
        if !ok {
            failures.push(format!("shift {s}: no differing pair"));
        }
    }
    Verdict::new(
        failures.is_empty(),
        format!(
            "side {w}x{h}, {} lines, {} shifts, {} chain members, failures {failures:?}",
            lines.len(),
            shifts.len(),
            build.chain.len()
        ),
    )
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let sched = [
        GpRequirement::Shift(Point::new(1, 0)),
        GpRequirement::Shift(Point::new(0, 1)),
        GpRequirement::Shift(Point::new(1, 1)),
        GpRequirement::Cover(Point::new(-5, 9)),
    ];
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for i in 0..20 {
        let r =
            rect(rng.random_range(-2..=2), rng.random_range(-2..=2), rng.random_range(1..=3), rng.random_range(1..=3));
        let f = random_config(&mut rng, r);
        let demo = match lattice_demo(&f, &sched, &Limits::default(), 2) {
            Ok(d) => d,
            Err(e) => {
                failures.push(format!("pattern {i}: {e}"));
                continue;
            }
        };
        let (lw, lh) = demo.lattice.spacings();
        let k = demo.lattice.anchor();
        let win = demo.window.rect();
        let fr = f.rect();
        let fits = |g: Point| win.contains(g + fr.lo()) && win.contains(g + fr.hi());
        let brute: Vec<Point> = win
            .points()
            .map(|g| g - fr.lo())
            .filter(|&g| (g.x - k.x).rem_euclid(lw) == 0 && (g.y - k.y).rem_euclid(lh) == 0 && fits(g))
            .collect();
        let all_match = brute.iter().all(|&g| oracle_match(&demo.window, &f, g, false));
        counts.push(brute.len());
        if brute.len() < 9 || !all_match || !demo.report.pass(9) {
            failures.push(format!("pattern {i}: {} lattice points, all match {all_match}", brute.len()));
        }
    }
    Verdict::new(failures.is_empty(), format!("20 patterns, points per lattice {counts:?}, failures {failures:?}"))
}

fn criterion_6() -> Verdict {
    let mut notes = Vec::new();
    let mut pass = true;
    for a in 0..=2 {
        let side = 5 * (2 * a + 1) * (2 * a + 1);
        let window = rect(0, 0, side, side);
        let long = check_segment_center_cover(a, &window, segment_threshold(a) + 1);
        let short = check_segment_center_cover(a, &window, 2 * a + 1);
        let ok = long.pass && !short.pass && short.counterexample.is_some();
        pass &= ok;
        notes.push(format!(
            "a={a}: len {} {} over {} segments, len {} {}{}",
            segment_threshold(a) + 1,
            if long.pass { "covered" } else { "NOT covered" },
            long.segments,
            2 * a + 1,
            if short.pass { "covered (no counterexample)" } else { "uncovered" },
            short.counterexample.map(|r| format!(" at {r}")).unwrap_or_default(),
        ));
    }
    Verdict::new(pass, notes.join("; "))
}

fn criterion_7() -> Verdict {
    let levels = 10;
    let t = concentric_squares(levels);
    let report = check_toast(&t);
    let growth = check_fx_strict_growth(&t, &[Point::ZERO]).map(|g| g.pass()).unwrap_or(false);
    let f = fx_profile(&t, Point::ZERO);
    let expected: Vec<u64> = (0..levels as u64).collect();

    let mut broken = t.clone();
    broken.levels[5] = broken.levels[4].clone();
    let flagged =
        check_toast(&broken).violations.iter().any(|v| matches!(v, ToastViolation::NoSuperclass { level: 4, .. }));
    let pass = report.pass() && growth && f == expected && flagged;
    Verdict::new(
        pass,
        format!("{levels} levels, axioms {}, growth {growth}, f {f:?}, defect flagged {flagged}", report.pass()),
    )
}

fn bit_exact<T, J>(v: &T, to: impl Fn(&T) -> J, from: impl Fn(&J) -> Option<T>) -> bool
where
    T: PartialEq,
    J: Serialize + DeserializeOwned,
{
    let text = serde_json::to_string(&to(v)).unwrap();
    let back: J = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string(&back).unwrap();
    text == again && from(&back).is_some_and(|b| b == *v)
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = Vec::new();

    let mut configs = Vec::new();
    for _ in 0..1000 {
        let r =
            rect(rng.random_range(-9..=9), rng.random_range(-9..=9), rng.random_range(1..=8), rng.random_range(1..=8));
        let mut c = random_config(&mut rng, r);
        for g in r.points() {
            if rng.random_bool(0.1) {
                c.make_hole(g).unwrap();
            }
        }
        if c.flip().flip() != c {
            failures.push(format!("flip twice differs on {r}"));
        }
        configs.push(c);
    }

    let mut mt_chains = Vec::new();
    for s in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(800 + s);
        let odd = s % 2 == 1;
        let seed = random_config(&mut rng, rect(0, 0, 3, 3));
        let mut steps =
            vec![Requirement::Shift(Point::new(1, 0)), Requirement::SelfPattern, Requirement::Shift(Point::new(1, 2))];
        if odd {
            steps.insert(0, Requirement::DuplicateOdd);
        }
        steps.push(Requirement::Cover(Point::new(-6, 7)));
        let strategy = if s % 3 == 0 { ShiftStrategy::Tiling } else { ShiftStrategy::PreferInPlace };
        match build_generic_chain(
            &MtCondition::new(seed.clone(), odd),
            &Schedule::new(steps).unwrap(),
            &Limits::default(),
            strategy,
        ) {
            Ok(b) => {
                let mut chain = vec![MtCondition::new(seed, odd)];
                chain.extend(b.chain);
                mt_chains.push((chain, b.certificate));
            }
            Err(e) => failures.push(format!("mt chain {s}: {e}")),
        }
    }
    for (chain, _) in &mt_chains {
        for (i, a) in chain.iter().enumerate() {
            if !is_extension(a, a) {
                failures.push(format!("is_extension not reflexive at {i}"));
            }
            for b in &chain[..i] {
                if !is_extension(a, b) {
                    failures.push(format!("is_extension not transitive at {i}"));
                }
            }
        }
    }

    let mut gp_chains = Vec::new();
    for s in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(850 + s);
        let mut seed = random_config(&mut rng, rect(0, 0, 2, 2));
        seed.make_hole(Point::new(1, 1)).unwrap();
        let seed = GpCondition::new(2, seed);
        let sched = [
            GpRequirement::Shift(Point::new(1, 0)),
            GpRequirement::LineClear(Line::Row(1)),
            GpRequirement::Shift(Point::new(-1, 2)),
            GpRequirement::Cover(Point::new(9, -3)),
        ];
        match build_generic_gp_chain(&seed, &sched, &Limits::default()) {
            Ok(b) => {
                let mut chain = vec![seed];
                chain.extend(b.chain);
                gp_chains.push((chain, b.certificate));
            }
            Err(e) => failures.push(format!("gp chain {s}: {e}")),
        }
    }
    for (chain, _) in &gp_chains {
        for (i, a) in chain.iter().enumerate() {
            if !is_extension_gp(a, a) {
                failures.push(format!("is_extension_gp not reflexive at {i}"));
            }
            for b in &chain[..i] {
                if !is_extension_gp(a, b) {
                    failures.push(format!("is_extension_gp not transitive at {i}"));
                }
            }
        }
    }

    let mut roundtrips = 0;
    let mut check = |ok: bool, what: &str| {
        roundtrips += 1;
        if !ok {
            failures.push(format!("{what} round trip"));
        }
    };
    for c in &configs {
        check(bit_exact(c, |v| ConfigJson::from(v), |j| Config::try_from(j).ok()), "config");
    }
    for (chain, cert) in &mt_chains {
        for c in chain {
            check(bit_exact(c, |v| MtConditionJson::from(v), |j| MtCondition::try_from(j).ok()), "mt condition");
        }
        check(bit_exact(cert, |v| MtCertificateJson::from(v), |j| Certificate::try_from(j).ok()), "mt certificate");
        for r in &cert.records {
            let req = r.requirement;
            check(bit_exact(&req, |&q| RequirementJson::from(q), |&j| Some(Requirement::from(j))), "requirement");
            check(bit_exact(&r.outcome, |v| OutcomeJson::from(v), |j| StepOutcome::try_from(j).ok()), "outcome");
        }
    }
    for (chain, cert) in &gp_chains {
        for c in chain {
            check(bit_exact(c, |v| GpConditionJson::from(v), |j| GpCondition::try_from(j).ok()), "gp condition");
        }
        check(bit_exact(cert, |v| GpCertificateJson::from(v), |j| GpCertificate::try_from(j).ok()), "gp certificate");
        for r in &cert.records {
            let req = r.requirement;
            check(
                bit_exact(&req, |&q| GpRequirementJson::from(q), |&j| Some(GpRequirement::from(j))),
                "gp requirement",
            );
            check(bit_exact(&r.outcome, |v| GpOutcomeJson::from(v), |j| GpOutcome::try_from(j).ok()), "gp outcome");
        }
    }
    for levels in [1, 4, 9] {
        let mut t: Toast = concentric_squares(levels);
        check(bit_exact(&t, |v| ToastJson::from(v), |j| Toast::try_from(j).ok()), "toast");
        t.window = Some(rect(-2, -2, 5, 5));
        t.layered = false;
        check(bit_exact(&t, |v| ToastJson::from(v), |j| Toast::try_from(j).ok()), "toast");
    }
    let window = rect(0, 0, 16, 8);
    let seq = vec![
        RectPartition::new(window, vec![window]).unwrap(),
        RectPartition::new(window, vec![rect(0, 0, 8, 8), rect(8, 0, 8, 8)]).unwrap(),
    ];
    check(
        bit_exact(&seq, |s| PartitionJson::from(s.as_slice()), |j| Vec::<RectPartition>::try_from(j).ok()),
        "partition",
    );
    let report = Report {
        pass: false,
        failing_positions: vec![[1, -2]],
        witness_used: serde_json::json!({"T": [[0, 1]]}),
        failures: vec!["(a) 2-coloring #0 at (1, -2)".into()],
        details: serde_json::json!({"n": 3}),
    };
    check(bit_exact(&report, Report::clone, |j| Some(j.clone())), "report");

    Verdict::new(
        failures.is_empty(),
        format!(
            "1000 flips, {} mt and {} gp chains, {roundtrips} round trips, failures {:?}",
            mt_chains.len(),
            gp_chains.len(),
            failures.first()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("density-construction soundness", criterion_1, Some(Duration::from_secs(60))),
        ("generic minimal 2-coloring certificates", criterion_2, Some(Duration::from_secs(120))),
        ("odd recurrence", criterion_3, None),
        ("grid periodicity", criterion_4, Some(Duration::from_secs(120))),
        ("lattice demo", criterion_5, None),
        ("shifted-stack cover", criterion_6, Some(Duration::from_secs(30))),
        ("toast core", criterion_7, None),
        ("algebraic sanity", criterion_8, None),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let v = run();
        let elapsed = start.elapsed();
        let in_time = budget.is_none_or(|b| elapsed <= b);
        let pass = v.pass && in_time;
        failed += usize::from(!pass);
        let budget = budget.map(|b| format!(" / {}s", b.as_secs())).unwrap_or_default();
        println!(
            "acceptance {}: {} [{name}] {:.2}s{budget} :: {}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            v.detail
        );
    }
    println!("acceptance: {} of 8 passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
