//! Constructors and independent oracles shared by the integration tests.
#![allow(dead_code)]

use naxes::axis::{CollinearQuad, LineChart};
use naxes::config::validate;
use naxes::kernel::{join, meet, Field, ProjLine, ProjPoint, Scalar};
use naxes::theorems::ConcurInput;
use naxes::NgonConfig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const Q: Field = Field::Rational;
pub const P10007: Field = Field::Prime(10007);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(rng: &mut impl Rng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

pub fn point(rng: &mut impl Rng, field: Field, bound: i64) -> ProjPoint {
    ProjPoint::affine_ints(field, int(rng, bound), int(rng, bound))
}

/// A nonzero scalar `n/d` other than 1.
pub fn param(rng: &mut impl Rng, field: Field, bound: i64) -> Scalar {
    naxes::genmove::random_param(rng, field, bound)
}

pub fn line(rng: &mut impl Rng, field: Field, bound: i64) -> ProjLine {
    loop {
        let (p, q) = (point(rng, field, bound), point(rng, field, bound));
        if let Ok(l) = join(&p, &q) {
            return l;
        }
    }
}

pub fn on_line(chart: &LineChart, field: Field, t: i64) -> ProjPoint {
    chart.point_at(&field.int(t))
}

/// Chart parameters of four distinct-enough points; `kind` 1 forces `P = Q`,
/// 2 forces `R = S`.
pub fn random_quad(rng: &mut impl Rng, field: Field, kind: u8) -> (LineChart, CollinearQuad) {
    loop {
        let l = line(rng, field, 10);
        let chart = LineChart::new(&l).unwrap();
        let mut t: Vec<i64> = (0..4).map(|_| int(rng, 12)).collect();
        match kind {
            1 => t[1] = t[0],
            2 => t[3] = t[2],
            _ => {}
        }
        let pts: Vec<ProjPoint> = t.iter().map(|&x| on_line(&chart, field, x)).collect();
        if let Ok(q) = CollinearQuad::new(pts[0].clone(), pts[1].clone(), pts[2].clone(), pts[3].clone()) {
            return (chart, q);
        }
    }
}

pub fn off_line(rng: &mut impl Rng, field: Field, l: &ProjLine) -> ProjPoint {
    loop {
        let a = point(rng, field, 10);
        if !a.lies_on(l) {
            return a;
        }
    }
}

/// `C` solved independently from each of the three ratio conditions that
/// define it. Each condition is linear in the homogeneous parameter
/// `(c1:c0)` of `C`; entries are `None` when the condition does not apply.
pub fn bracket_by_formulas(chart: &LineChart, q: &CollinearQuad) -> [Option<ProjPoint>; 3] {
    let [p, qq, r, s] = q.points().map(|x| chart.affine_param(x).unwrap());
    let solve = |a: Scalar, b: Scalar| -> Option<ProjPoint> {
        // a c1 + b c0 = 0
        if a.is_zero() && b.is_zero() {
            return None;
        }
        chart.point(&-b, &a).ok()
    };
    // (c1 - q c0)(r - p) = (q - s)(c1 - r c0)
    let f1 = solve(&(&r - &p) - &(&qq - &s), -(&qq * &(&r - &p)) + &r * &(&qq - &s));
    // (c1 - q c0)(r - p)(s - p) = (r - q)(s - q)(c1 - p c0)
    let f2 = if p != qq {
        let k = &(&r - &p) * &(&s - &p);
        let m = &(&r - &qq) * &(&s - &qq);
        solve(&k - &m, -(&qq * &k) + &p * &m)
    } else {
        None
    };
    // (c1 - s c0)(q - r)(p - r) = (q - s)(p - s)(c1 - r c0)
    let f3 = if r != s {
        let k = &(&qq - &r) * &(&p - &r);
        let m = &(&qq - &s) * &(&p - &s);
        solve(&k - &m, -(&s * &k) + &r * &m)
    } else {
        None
    };
    [f1, f2, f3]
}

/// Hexagon whose main diagonals pass through `m` (a finite point) or, with
/// `parallel`, share the direction `m`.
pub fn hexagon_with_concurrent_diagonals(rng: &mut impl Rng, field: Field, parallel: bool) -> NgonConfig {
    loop {
        let a: Vec<ProjPoint> = (0..3).map(|_| point(rng, field, 10)).collect();
        let mut pts = a.clone();
        if parallel {
            let (dx, dy) = (field.int(int(rng, 5)), field.int(int(rng, 5)));
            if dx.is_zero() && dy.is_zero() {
                continue;
            }
            for p in &a {
                let s = param(rng, field, 6);
                pts.push(p.translate(&(&dx * &s), &(&dy * &s)).unwrap());
            }
        } else {
            let m = point(rng, field, 10);
            if a.contains(&m) {
                continue;
            }
            for p in &a {
                let t = param(rng, field, 6);
                pts.push(p.lerp(&m, &t).unwrap());
            }
        }
        if let Ok(cfg) = validate(pts) {
            return cfg;
        }
    }
}

/// Five points with `A_5` strictly on `<A_1, A_4>` satisfying the remaining
/// assumptions of the degenerate five-axes theorem.
pub fn degenerate_pentagon(rng: &mut impl Rng, field: Field) -> Vec<ProjPoint> {
    loop {
        let mut pts: Vec<ProjPoint> = (0..4).map(|_| point(rng, field, 10)).collect();
        let t = param(rng, field, 8);
        let Ok(a5) = pts[0].lerp(&pts[3], &t) else { continue };
        pts.push(a5);
        if naxes::theorems::check_degenerate_preconditions(&pts).is_ok() {
            return pts;
        }
    }
}

/// An instance of the concurrence lemma whose three lines pass through one
/// point by construction: choose `B, C, D, A, E, G, H`, a point `X` on
/// `<C, V>`, and let `U = <B,X> ∩ AC`, `W = <D,X> ∩ CE`; `F` and `I` are then
/// the partners of `A` and `E` under the involutions fixed by `U` and `W`.
pub fn concurrent_concur_input(rng: &mut impl Rng, field: Field) -> ConcurInput {
    loop {
        if let Some(inp) = try_concurrent(rng, field) {
            return inp;
        }
    }
}

fn try_concurrent(rng: &mut impl Rng, field: Field) -> Option<ConcurInput> {
    let c = point(rng, field, 10);
    let a = point(rng, field, 10);
    let e = point(rng, field, 10);
    if naxes::kernel::collinear(&a, &c, &e) {
        return None;
    }
    let ac = join(&a, &c).ok()?;
    let ce = join(&c, &e).ok()?;
    let g = LineChart::new(&ac).ok()?.point_at(&param(rng, field, 9));
    let h = LineChart::new(&ce).ok()?.point_at(&param(rng, field, 9));
    let gh = join(&g, &h).ok()?;
    let chart = LineChart::new(&gh).ok()?;
    let b = chart.point_at(&param(rng, field, 9));
    let d = chart.point_at(&param(rng, field, 9));
    let v = naxes::axis::bracket_point(&CollinearQuad::new(h.clone(), d.clone(), b.clone(), g.clone()).ok()?).ok()?;
    if v.is_at_infinity() {
        return None;
    }
    let x = c.lerp(&v, &param(rng, field, 9)).ok()?;
    let u = meet(&join(&b, &x).ok()?, &ac).ok()?;
    let w = meet(&join(&d, &x).ok()?, &ce).ok()?;
    let f = naxes::axis::involution_image(&a, &u, &c, &g, &ac).ok()?;
    let i = naxes::axis::involution_image(&e, &w, &c, &h, &ce).ok()?;
    if [&f, &i].iter().any(|p| p.is_at_infinity()) || f == a {
        return None;
    }
    let inp = ConcurInput::new(a, b, c, d, e, f, g, h, i).ok()?;
    inp.sides().ok()?;
    inp.lines().ok()?;
    Some(inp)
}

/// A random instance of the concurrence lemma with no constraint linking the
/// three lines.
pub fn generic_concur_input(rng: &mut impl Rng, field: Field) -> ConcurInput {
    loop {
        let c = point(rng, field, 10);
        let a = point(rng, field, 10);
        let e = point(rng, field, 10);
        if naxes::kernel::collinear(&a, &c, &e) {
            continue;
        }
        let ac = LineChart::new(&join(&a, &c).unwrap()).unwrap();
        let ce = LineChart::new(&join(&c, &e).unwrap()).unwrap();
        let g = ac.point_at(&param(rng, field, 9));
        let f = ac.point_at(&param(rng, field, 9));
        if f == a || [&f, &g].iter().any(|p| **p == a || **p == c) {
            continue;
        }
        let h = ce.point_at(&param(rng, field, 9));
        let i = ce.point_at(&param(rng, field, 9));
        if [&h, &i].iter().any(|p| **p == c || **p == e) {
            continue;
        }
        let Ok(gh) = join(&g, &h) else { continue };
        let gh = LineChart::new(&gh).unwrap();
        let b = gh.point_at(&param(rng, field, 9));
        let d = gh.point_at(&param(rng, field, 9));
        let Ok(inp) = ConcurInput::new(a, b, c, d, e, f, g, h, i) else { continue };
        if inp.sides().is_ok() && inp.lines().is_ok() {
            return inp;
        }
    }
}
