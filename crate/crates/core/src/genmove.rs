//! Random configurations and vertex surgery: merging two consecutive vertices
//! into `l_{i-1} ∩ l_{i+2}`, the inverse split, and the two-vertex move that
//! keeps three consecutive axes in their pencil.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{axis_of_sequence, cyc, derive_points, validate, NgonConfig};
use crate::error::{GeomError, Result, Violation};
use crate::kernel::{fit_projectivity, in_general_position, is_parallel, join, meet, pencil_of, Field, PencilKind, ProjLine, ProjPoint, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleParams {
    pub n: usize,
    pub field: Field,
    pub seed: u64,
    /// Coordinates are drawn from `-bound..=bound`.
    pub bound: i64,
    pub max_retries: usize,
}

impl SampleParams {
    pub fn new(n: usize, field: Field, seed: u64) -> Self {
        SampleParams { n, field, seed, bound: 10, max_retries: 10_000 }
    }

    pub fn with_bound(mut self, bound: i64) -> Self {
        self.bound = bound;
        self
    }

    pub fn with_retries(mut self, max_retries: usize) -> Self {
        self.max_retries = max_retries;
        self
    }

    fn check(&self) -> Result<()> {
        if self.n < 5 {
            return Err(GeomError::InvalidArgument(format!("n must be at least 5, got {}", self.n)));
        }
        if self.bound < 5 {
            return Err(GeomError::InvalidArgument(format!("bound must be at least 5, got {}", self.bound)));
        }
        Ok(())
    }

    /// The same parameters for instance `index` of a batch.
    pub fn instance(&self, index: u64) -> SampleParams {
        SampleParams { seed: instance_seed(self.seed, index), ..self.clone() }
    }
}

/// Seed of instance `index` derived from a batch seed, independent of
/// evaluation order.
pub fn instance_seed(seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1));
    rng.gen()
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_point<R: Rng>(rng: &mut R, field: Field, bound: i64) -> ProjPoint {
    ProjPoint::affine_ints(field, rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

/// A random nonzero parameter `num/den` other than 1.
pub fn random_param<R: Rng>(rng: &mut R, field: Field, bound: i64) -> Scalar {
    loop {
        let num = rng.gen_range(-bound..=bound);
        let den = rng.gen_range(1..=bound);
        if let Ok(t) = field.ratio(num, den) {
            if !t.is_zero() && !t.is_one() {
                return t;
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SampleStats {
    pub attempts: usize,
}

pub fn sample_config(p: &SampleParams) -> Result<NgonConfig> {
    sample_config_with_stats(p).map(|(c, _)| c)
}

/// Rejection sampling on the integer grid.
pub fn sample_config_with_stats(p: &SampleParams) -> Result<(NgonConfig, SampleStats)> {
    p.check()?;
    let mut rng = rng_for(p.seed);
    sample_with_rng(&mut rng, p.n, p.field, p.bound, p.max_retries)
}

fn sample_with_rng<R: Rng>(
    rng: &mut R,
    n: usize,
    field: Field,
    bound: i64,
    max_retries: usize,
) -> Result<(NgonConfig, SampleStats)> {
    for attempt in 1..=max_retries {
        let pts: Vec<ProjPoint> = (0..n).map(|_| random_point(rng, field, bound)).collect();
        if let Ok(cfg) = validate(pts) {
            return Ok((cfg, SampleStats { attempts: attempt }));
        }
    }
    Err(GeomError::BudgetExceeded)
}

/// `A_1, .., A_{at-1}, X, A_{at+2}, ..` with `X = l_{at-1} ∩ l_{at+2}`; for
/// `at = n` the merged point replaces `A_n, A_1` and is placed first.
pub fn reduce(cfg: &NgonConfig, at: i64) -> Result<NgonConfig> {
    let n = cfg.n();
    if n < 6 {
        return Err(GeomError::InvalidArgument(format!("reduce needs at least 6 points, got {n}")));
    }
    let x = merge_point(cfg, at)?;
    let at = cyc(at, n) + 1;
    let pts = cfg.points();
    let out: Vec<ProjPoint> = if at < n {
        pts[..at - 1].iter().cloned().chain(std::iter::once(x)).chain(pts[at + 1..].iter().cloned()).collect()
    } else {
        std::iter::once(x).chain(pts[1..n - 1].iter().cloned()).collect()
    };
    validate(out)
}

/// `l_{at-1} ∩ l_{at+2}`, required to be finite.
pub fn merge_point(cfg: &NgonConfig, at: i64) -> Result<ProjPoint> {
    let x = meet(&cfg.line(at - 1), &cfg.line(at + 2))?;
    if x.is_at_infinity() {
        return Err(GeomError::MergeAtInfinity);
    }
    Ok(x)
}

fn split(cfg: &NgonConfig, at: i64, n1: ProjPoint, n2: ProjPoint) -> Vec<ProjPoint> {
    let at = cyc(at, cfg.n());
    let pts = cfg.points();
    pts[..at].iter().cloned().chain([n1, n2]).chain(pts[at + 1..].iter().cloned()).collect()
}

/// Replaces `X = A_at` by two vertices, `N1 = (1-t1) A_{at-2} + t1 X` at
/// position `at` and `N2 = (1-t2) A_{at+2} + t2 X` at `at + 1`, so that
/// reducing the result at `at` gives back `cfg`.
pub fn expand(cfg: &NgonConfig, at: i64, t1: &Scalar, t2: &Scalar) -> Result<NgonConfig> {
    let x = cfg.point(at);
    let n1 = cfg.point(at - 2).lerp(x, t1)?;
    let n2 = cfg.point(at + 2).lerp(x, t2)?;
    validate(split(cfg, at, n1, n2))
}

fn pencil_center(g: &[ProjLine]) -> Result<ProjPoint> {
    let p = pencil_of(g)?;
    match (p.kind, p.center) {
        (PencilKind::FiniteCenter | PencilKind::InfiniteCenter, Some(m)) => Ok(m),
        _ => Err(GeomError::InvalidArgument("axes do not lie in a pencil with a center".into())),
    }
}

/// Center of the pencil of all axes.
pub fn config_center(cfg: &NgonConfig) -> Result<ProjPoint> {
    pencil_center(cfg.derive()?.axes())
}

fn pentagon_center(pent: Vec<ProjPoint>) -> Option<ProjPoint> {
    let cfg = validate(pent).ok()?;
    let d = derive_points(cfg.points()).ok()?;
    pencil_center(d.axes()).ok()
}

/// A split at `at` that keeps every axis in the pencil of `cfg`.
///
/// `N1` is placed by `t1`. The second vertex is solved for: in the pentagon
/// `A_{at-1}, N1, N2, A_{at+1}, X` the center depends projectively on `N2`,
/// so four sampled positions determine that projectivity, and `N2` is the
/// preimage of the center of `cfg`.
pub fn expand_in_pencil<R: Rng>(cfg: &NgonConfig, at: i64, t1: &Scalar, rng: &mut R, bound: i64) -> Result<NgonConfig> {
    let m = config_center(cfg)?;
    let field = cfg.field();
    let x = cfg.point(at).clone();
    let n1 = cfg.point(at - 2).lerp(&x, t1)?;
    let pent = |n2: &ProjPoint| vec![cfg.point(at - 1).clone(), n1.clone(), n2.clone(), cfg.point(at + 1).clone(), x.clone()];

    let mut src: Vec<ProjPoint> = Vec::with_capacity(4);
    let mut dst: Vec<ProjPoint> = Vec::with_capacity(4);
    let mut tries = 0;
    while src.len() < 4 {
        tries += 1;
        if tries > 200 {
            return Err(GeomError::BudgetExceeded);
        }
        let cand = random_point(rng, field, bound);
        let Some(c) = pentagon_center(pent(&cand)) else { continue };
        let mut s = src.clone();
        s.push(cand.clone());
        let mut d = dst.clone();
        d.push(c.clone());
        if in_general_position(&s) && in_general_position(&d) {
            src.push(cand);
            dst.push(c);
        }
    }
    let src: [ProjPoint; 4] = src.try_into().expect("four samples");
    let dst: [ProjPoint; 4] = dst.try_into().expect("four samples");
    let h = fit_projectivity(&src, &dst)?;
    let n2 = h.inverse()?.map_point(&m)?;
    if n2.is_at_infinity() {
        return Err(GeomError::PointAtInfinity);
    }
    if !n2.lies_on(&join(&x, cfg.point(at + 2))?) {
        return Err(GeomError::Inconsistent(format!("split vertex {n2} is off <X, A_(at+2)>")));
    }
    let out = validate(split(cfg, at, n1, n2))?;
    let g = out.derive()?;
    if let Some(k) = g.axes().iter().position(|l| !m.lies_on(l)) {
        return Err(GeomError::Inconsistent(format!("axis g_{} leaves the pencil after the split", k + 1)));
    }
    Ok(out)
}

/// A valid n-configuration whose axes all lie in one pencil, grown from a
/// random pentagon by pencil-preserving splits.
pub fn sample_pencil_config(p: &SampleParams) -> Result<NgonConfig> {
    if p.n < 6 {
        return Err(GeomError::InvalidArgument(format!("n must be at least 6, got {}", p.n)));
    }
    p.check()?;
    let mut rng = rng_for(p.seed);
    let mut budget = p.max_retries;
    let (mut cfg, st) = sample_with_rng(&mut rng, 5, p.field, p.bound, budget)?;
    budget -= st.attempts.min(budget);
    while cfg.n() < p.n {
        if budget == 0 {
            return Err(GeomError::BudgetExceeded);
        }
        budget -= 1;
        let at = rng.gen_range(1..=cfg.n() as i64);
        let t1 = random_param(&mut rng, p.field, p.bound);
        if let Ok(next) = expand_in_pencil(&cfg, at, &t1, &mut rng, p.bound) {
            cfg = next;
        }
    }
    let d = cfg.derive()?;
    if !pencil_of(&d.axes()[..p.n - 3])?.is_pencil() {
        return Err(GeomError::Inconsistent("generated configuration misses the hypothesis".into()));
    }
    Ok(cfg)
}

/// A move of `A_2, A_3` in a window `A_0..A_6`: `A_3' = (1-t) A_3 + t A_5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveChoice {
    /// Position in a configuration of the window's `A_3`.
    pub index: i64,
    pub t: Scalar,
}

/// Assumptions (i)-(iii) restricted to indices 0..6 of a seven-point window.
pub fn window_violation(w: &[ProjPoint]) -> Option<Violation> {
    if w.len() != 7 {
        return Some(Violation::TooFewPoints { n: w.len(), min: 7 });
    }
    if let Some(i) = w.iter().position(ProjPoint::is_at_infinity) {
        return Some(Violation::InfiniteVertex { index: i });
    }
    for i in 0..7 {
        for j in (i + 1)..7 {
            if w[i] == w[j] {
                return Some(Violation::CoincidentVertices { first: i, second: j });
            }
        }
    }
    let l: Vec<ProjLine> = (1..=5).map(|j| join(&w[j - 1], &w[j + 1]).expect("distinct")).collect();
    let line = |j: i64| &l[(j - 1) as usize];
    for i in 0..=6i64 {
        for j in [i - 2, i, i + 2] {
            if (1..=5).contains(&j) && w[i as usize].lies_on(line(j)) {
                return Some(Violation::VertexOnLine { index: i as usize, line: j as usize });
            }
        }
    }
    for i in 2..=4i64 {
        if line(i - 1) == line(i + 1) {
            return Some(Violation::EqualLines { index: i as usize, prev: (i - 1) as usize, next: (i + 1) as usize });
        }
    }
    for i in 1..=4i64 {
        if is_parallel(line(i), line(i + 1)).expect("finite lines") {
            return Some(Violation::ParallelLines { index: i as usize, next: (i + 1) as usize });
        }
    }
    None
}

fn window_axis(w: &[ProjPoint], i: usize) -> Result<ProjLine> {
    Ok(crate::config::local_axis([&w[i - 2], &w[i - 1], &w[i], &w[i + 1], &w[i + 2]])?.g)
}

/// Moves `A_3` along `l_4` and `A_2` along `l_1` so that `g_4` is unchanged and
/// `g_2, g_3` stay in the pencil of `g_2, g_3, g_4`. Returns the new window.
pub fn move_vertices(window: &[ProjPoint], t: &Scalar) -> Result<Vec<ProjPoint>> {
    if let Some(v) = window_violation(window) {
        return Err(v.into());
    }
    let w = window;
    let g: Vec<ProjLine> = (2..=4).map(|i| window_axis(w, i)).collect::<Result<_>>()?;
    let m = pencil_center(&g).map_err(|_| GeomError::InvalidArgument("axes g_2, g_3, g_4 do not lie in a pencil".into()))?;
    if t.is_zero() {
        return Ok(w.to_vec());
    }
    let l = |j: usize| join(&w[j - 1], &w[j + 1]);
    let l4 = l(4)?;
    let a3n = w[3].lerp(&w[5], t)?;
    let m1 = l(1)?.parallel_through(&w[1])?;
    let forbidden: [(&'static str, Option<ProjPoint>); 8] = [
        ("B_{3,4}", meet(&l(3)?, &l4).ok()),
        ("<A_1,A_2> ∩ l_4", meet(&join(&w[1], &w[2])?, &l4).ok()),
        ("A_5", Some(w[5].clone())),
        ("<A_0,A_1> ∩ l_4", meet(&join(&w[0], &w[1])?, &l4).ok()),
        ("l_1 ∩ l_4", meet(&l(1)?, &l4).ok()),
        ("l_5 ∩ l_4", meet(&l(5)?, &l4).ok()),
        ("<A_1,A_4> ∩ l_4", meet(&join(&w[1], &w[4])?, &l4).ok()),
        ("l_4 ∩ m_1", meet(&l4, &m1).ok()),
    ];
    for (name, p) in forbidden {
        if p.as_ref() == Some(&a3n) {
            return Err(GeomError::ForbiddenPosition(name));
        }
    }
    let p = meet(&join(&w[1], &w[4])?, &join(&w[2], &a3n)?)?;
    let a2n = meet(&l(1)?, &join(&p, &w[3])?)?;
    let mut out = w.to_vec();
    out[2] = a2n;
    out[3] = a3n;
    if let Some(v) = window_violation(&out) {
        return Err(v.into());
    }
    if window_axis(&out, 4)? != g[2] {
        return Err(GeomError::Inconsistent("g_4 changed under the move".into()));
    }
    for i in 2..=3 {
        if !m.lies_on(&window_axis(&out, i)?) {
            return Err(GeomError::Inconsistent(format!("g_{i} left the pencil under the move")));
        }
    }
    Ok(out)
}

/// [`move_vertices`] on the window `A_{k-3}..A_{k+3}` of a configuration with
/// at least seven points; `A_{k-1}` and `A_k` move.
pub fn move_in_config(cfg: &NgonConfig, choice: &MoveChoice) -> Result<NgonConfig> {
    let n = cfg.n();
    if n < 7 {
        return Err(GeomError::InvalidArgument(format!("a move needs at least 7 points, got {n}")));
    }
    let k = choice.index;
    let w: Vec<ProjPoint> = (k - 3..=k + 3).map(|i| cfg.point(i).clone()).collect();
    let moved = move_vertices(&w, &choice.t)?;
    let mut pts = cfg.points().to_vec();
    pts[cyc(k - 1, n)] = moved[2].clone();
    pts[cyc(k, n)] = moved[3].clone();
    let out = validate(pts)?;
    let g1 = axis_of_sequence(cfg.points(), k - 2)?.g;
    let m = pencil_center(&[window_axis(&w, 2)?, window_axis(&w, 3)?, window_axis(&w, 4)?])?;
    if m.lies_on(&g1) && axis_of_sequence(out.points(), k - 2)?.g != g1 {
        return Err(GeomError::Inconsistent("g_1 changed although it lies in the pencil".into()));
    }
    Ok(out)
}

/// Reduction at `at`, preceded by random moves of `A_{at-1}, A_at` when the
/// merge point is infinite or the reduced sequence is invalid. Moves are
/// tried only at that one window. Returns the reduced configuration and the
/// number of moves applied.
pub fn reduce_with_moves<R: Rng>(cfg: &NgonConfig, at: i64, rng: &mut R, bound: i64, max_retries: usize) -> Result<(NgonConfig, usize)> {
    if let Ok(r) = reduce(cfg, at) {
        return Ok((r, 0));
    }
    for attempt in 1..=max_retries {
        let t = random_param(rng, cfg.field(), bound);
        let Ok(moved) = move_in_config(cfg, &MoveChoice { index: at, t }) else { continue };
        if let Ok(r) = reduce(&moved, at) {
            return Ok((r, attempt));
        }
    }
    Err(GeomError::BudgetExceeded)
}
