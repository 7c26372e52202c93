//! Benchmark fixtures shared by the criterion targets.

use symplane::rng::Sampler;
use symplane::{Circle, CrankConfig, Line, Vec2};

pub fn quadruples(n: usize, seed: u64) -> Vec<[Vec2; 4]> {
    let mut s = Sampler::new(seed);
    (0..n)
        .map(|_| [s.vec2(10.0), s.vec2(10.0), s.vec2(10.0), s.vec2(10.0)])
        .collect()
}

pub fn line_pairs(n: usize, seed: u64) -> Vec<(Line, Line)> {
    let mut s = Sampler::new(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let l1 = Line::new(s.vec2(10.0), s.vec2(1.0));
        let l2 = Line::new(s.vec2(10.0), s.vec2(1.0));
        if let (Ok(l1), Ok(l2)) = (l1, l2) {
            if l1.direction.symp(l2.direction).abs() > 1e-3 {
                out.push((l1, l2));
            }
        }
    }
    out
}

pub fn circle_pairs(n: usize, seed: u64) -> Vec<(Circle, Circle)> {
    let mut s = Sampler::new(seed);
    (0..n)
        .map(|_| {
            let c1 = Circle { center: s.vec2(5.0), radius: s.uniform_in(0.1, 3.0) };
            let c2 = Circle { center: s.vec2(5.0), radius: s.uniform_in(0.1, 3.0) };
            (c1, c2)
        })
        .collect()
}

pub fn crank() -> CrankConfig {
    CrankConfig::new(1.0, Vec2::new(3.0, 0.5), 2.0).expect("valid crank")
}
