//! Randomized checks of the geometric constructions against independent
//! oracles: Gaussian elimination for intersections, angle sampling for
//! tangent counts, shifted origins for the cross ratio.

use std::f64::consts::TAU;
use std::sync::LazyLock;

use rayon::prelude::*;
use symplane::rng::Sampler;
use symplane::{
    circle_tangents, collinearity_residual, cross_ratio, intersect_lines, jacobi_triangle_residual,
    project_point_onto_line, simple_ratio, symp, Circle, Line, TangentKind, Vec2,
};

/// Solve `[[m00, m01], [m10, m11]] x = rhs` by elimination with partial pivoting.
fn solve2(m: [[f64; 2]; 2], rhs: [f64; 2]) -> [f64; 2] {
    let (mut m, mut r) = (m, rhs);
    if m[1][0].abs() > m[0][0].abs() {
        m.swap(0, 1);
        r.swap(0, 1);
    }
    let f = m[1][0] / m[0][0];
    let m11 = m[1][1] - f * m[0][1];
    let r1 = r[1] - f * r[0];
    let x1 = r1 / m11;
    let x0 = (r[0] - m[0][1] * x1) / m[0][0];
    [x0, x1]
}

fn random_lines(s: &mut Sampler) -> (Line, Line) {
    loop {
        let u = s.vec2(1.0);
        let v = s.vec2(1.0);
        if u.norm() < 1e-3 || v.norm() < 1e-3 || symp(u, v).abs() < 1e-3 * u.norm() * v.norm() {
            continue;
        }
        return (Line::new(s.vec2(10.0), u).unwrap(), Line::new(s.vec2(10.0), v).unwrap());
    }
}

#[test]
fn intersection_matches_elimination() {
    let mut s = Sampler::new(11);
    for _ in 0..1000 {
        let (l1, l2) = random_lines(&mut s);
        let i = intersect_lines(&l1, &l2).unwrap();
        // A + λu = B + μv  →  λu - μv = B - A
        let (u, v) = (l1.direction, l2.direction);
        let d = l2.point - l1.point;
        let [lambda, mu] = solve2([[u.x, -v.x], [u.y, -v.y]], [d.x, d.y]);
        let oracle = l1.point + u * lambda;
        assert!((i.point - oracle).norm() <= 1e-8, "{:?} vs {:?}", i.point, oracle);
        let scale = 1.0 + l1.point.norm().max(l2.point.norm()) + i.point.norm();
        assert!((l1.at(i.lambda) - i.point).norm() <= 1e-9 * scale);
        assert!((l2.at(i.mu) - i.point).norm() <= 1e-9 * scale);
        assert!((i.mu - mu).abs() <= 1e-8 * (1.0 + mu.abs()));
        // closure a + μv - λu = 0
        let closure = d + v * i.mu - u * i.lambda;
        assert!(closure.norm() <= 1e-9 * scale);
        // multiplied through by ũv it takes the Jacobi form
        let r = jacobi_triangle_residual(u, v, d);
        assert!(r.norm() <= 1e-9 * (1.0 + u.norm() * v.norm() * d.norm()));
        let rebuilt = (d + v * i.mu - u * i.lambda) * symp(u, v);
        assert!(rebuilt.norm() <= 1e-9 * scale);
    }
}

#[test]
fn jacobi_triangle_random() {
    let mut s = Sampler::new(12);
    for _ in 0..1000 {
        let (u, v, a) = (s.vec2(10.0), s.vec2(10.0), s.vec2(10.0));
        let r = jacobi_triangle_residual(u, v, a);
        assert!(r.norm() <= 1e-9 * (1.0 + u.norm() * v.norm() * a.norm()));
    }
}

#[test]
fn projection_is_orthogonal_foot() {
    let mut s = Sampler::new(13);
    for _ in 0..500 {
        let (l, _) = random_lines(&mut s);
        let p = s.vec2(10.0);
        let foot = project_point_onto_line(p, &l).unwrap();
        let scale = 1.0 + p.norm() + l.point.norm();
        assert!(l.distance(foot) <= 1e-9 * scale);
        assert!((p - foot).dot(l.direction).abs() <= 1e-9 * scale * l.direction.norm());
    }
}

#[test]
fn collinearity_cyclic() {
    let mut s = Sampler::new(14);
    for _ in 0..1000 {
        let (a, b, c) = (s.vec2(10.0), s.vec2(10.0), s.vec2(10.0));
        let r = collinearity_residual(a, b, c);
        let scale = 1.0 + a.norm() * b.norm() + b.norm() * c.norm() + c.norm() * a.norm();
        assert!((r - collinearity_residual(b, c, a)).abs() <= 1e-12 * scale);
        assert!((r - collinearity_residual(c, a, b)).abs() <= 1e-12 * scale);
        assert!((r + collinearity_residual(a, c, b)).abs() <= 1e-12 * scale);
    }
}

#[test]
fn simple_ratio_scale_invariant() {
    let mut s = Sampler::new(15);
    let mut checked = 0;
    while checked < 100 {
        let (a, b, c) = (s.vec2(10.0), s.vec2(10.0), s.vec2(10.0));
        if symp(b, c).abs() < 1e-2 {
            continue;
        }
        let base = simple_ratio(a, b, c).unwrap();
        for _ in 0..100 {
            let mu = s.uniform_in(0.1, 10.0);
            let scaled = simple_ratio(a, b * mu, c).unwrap();
            assert!((scaled - base).abs() <= 1e-9 * base.abs().max(1.0));
        }
        checked += 1;
    }
}

#[test]
fn simple_ratio_on_line_is_segment_ratio() {
    let mut s = Sampler::new(16);
    for _ in 0..200 {
        let origin_line = Line::new(s.vec2(10.0), s.vec2(1.0)).unwrap();
        if origin_line.distance(Vec2::ZERO) < 0.5 {
            continue;
        }
        let (ta, tb, tc) = (s.uniform(5.0), s.uniform(5.0), s.uniform(5.0));
        if (tc - tb).abs() < 0.1 {
            continue;
        }
        let (a, b, c) = (origin_line.at(ta), origin_line.at(tb), origin_line.at(tc));
        let r = simple_ratio(a, b, c).unwrap();
        let oracle = (tb - ta) / (tc - tb);
        assert!((r - oracle).abs() <= 1e-8 * (1.0 + oracle.abs()), "{r} vs {oracle}");
    }
}

#[test]
fn cross_ratio_independent_of_origin() {
    let mut s = Sampler::new(17);
    let mut done = 0;
    while done < 100 {
        let line = Line::new(s.vec2(10.0), s.vec2(1.0)).unwrap();
        let ts = [s.uniform(5.0), s.uniform(5.0), s.uniform(5.0), s.uniform(5.0)];
        let pts = ts.map(|t| line.at(t));
        let o1 = s.vec2(20.0);
        let o2 = s.vec2(20.0);
        if line.distance(o1) < 0.5 || line.distance(o2) < 0.5 {
            continue;
        }
        // well separated points keep the ratio well conditioned
        let min_gap = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .map(|(i, j)| (ts[i] - ts[j]).abs())
            .fold(f64::INFINITY, f64::min);
        if min_gap < 0.05 {
            continue;
        }
        let rel = |o: Vec2| pts.map(|p| p - o);
        let [a, b, c, d] = rel(o1);
        let x1 = cross_ratio(a, b, c, d).unwrap();
        let [a, b, c, d] = rel(o2);
        let x2 = cross_ratio(a, b, c, d).unwrap();
        assert!((x1 - x2).abs() <= 1e-8 * x1.abs().max(1.0), "{x1} vs {x2}");
        // and equals the parameter-space cross ratio (AC/BC)/(AD/BD)
        let [ta, tb, tc, td] = ts;
        let oracle = ((tc - ta) / (tc - tb)) / ((td - ta) / (td - tb));
        assert!((x1 - oracle).abs() <= 1e-8 * oracle.abs().max(1.0));
        done += 1;
    }
}

const SAMPLES: usize = 1_000_000;

static UNIT_NORMALS: LazyLock<Vec<(f64, f64)>> = LazyLock::new(|| {
    (0..SAMPLES)
        .map(|i| {
            let th = TAU * i as f64 / SAMPLES as f64;
            (th.cos(), th.sin())
        })
        .collect()
});

/// Count roots of `n(θ)·a - R₁ ∓ R₂` over a full turn of the normal angle by
/// sign changes. A root of the `+` branch is a line tangent to circle 1
/// with circle 2 on the far side (inner); the `-` branch keeps both circles
/// on one side (outer).
fn sampled_counts(c1: &Circle, c2: &Circle) -> (usize, usize) {
    let a = c2.center - c1.center;
    let count = |offset: f64| {
        let f = |&(c, s): &(f64, f64)| c * a.x + s * a.y - offset;
        let normals = &*UNIT_NORMALS;
        let mut changes = 0;
        let mut prev = f(&normals[SAMPLES - 1]);
        for n in normals {
            let cur = f(n);
            if (prev < 0.0) != (cur < 0.0) {
                changes += 1;
            }
            prev = cur;
        }
        changes
    };
    (count(c1.radius - c2.radius), count(c1.radius + c2.radius))
}

fn random_circle_pair(s: &mut Sampler, category: usize) -> (Circle, Circle) {
    let r1 = s.uniform_in(0.1, 3.0);
    let r2 = s.uniform_in(0.1, 3.0);
    let (lo, hi) = match category {
        0 => (r1 + r2, r1 + r2 + 6.0),
        1 => ((r1 - r2).abs(), r1 + r2),
        _ => (0.0, (r1 - r2).abs()),
    };
    let margin = 1e-3 * (hi - lo);
    let d = s.uniform_in(lo + margin, hi - margin).max(1e-3);
    let c1 = Circle::new(s.vec2(10.0), r1).unwrap();
    let c2 = Circle::new(c1.center + Vec2::unit(s.uniform(TAU)) * d, r2).unwrap();
    (c1, c2)
}

#[test]
fn tangent_count_and_tangency_against_sampling() {
    let mut s = Sampler::new(18);
    let pairs: Vec<_> = (0..300).map(|i| random_circle_pair(&mut s, i % 3)).collect();
    pairs.par_iter().for_each(|(c1, c2)| {
        let ts = circle_tangents(c1, c2).unwrap();
        let outer = ts.iter().filter(|t| t.kind == TangentKind::Outer).count();
        let inner = ts.len() - outer;
        assert_eq!((outer, inner), sampled_counts(c1, c2), "{c1:?} {c2:?}");
        let dist = (c2.center - c1.center).norm();
        for t in &ts {
            assert!((t.distance(c1.center) - c1.radius).abs() <= 1e-9 * (1.0 + dist));
            assert!((t.distance(c2.center) - c2.radius).abs() <= 1e-9 * (1.0 + dist));
            assert!((t.direction_e.norm() - 1.0).abs() <= 1e-12);
            assert!(((t.touch2 - c2.center).norm() - c2.radius).abs() <= 1e-9 * (1.0 + dist));
        }
        assert!(matches!(ts.len(), 0 | 2 | 4));
    });
}
