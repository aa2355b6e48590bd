#![allow(dead_code)]

use newton_atlas_core::newton_map::newton_degree;
use newton_atlas_core::{Cx, FactoredRational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` points in the disk of radius `radius`, pairwise at least `sep` apart.
pub fn separated_points(rng: &mut ChaCha8Rng, count: usize, radius: f64, sep: f64) -> Vec<Cx> {
    let mut out: Vec<Cx> = Vec::with_capacity(count);
    while out.len() < count {
        let r = radius * rng.gen::<f64>().sqrt();
        let z = Cx::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU));
        if out.iter().all(|w| (w - z).norm() >= sep) {
            out.push(z);
        }
    }
    out
}

pub fn factored(roots: &[(Cx, u32)], poles: &[(Cx, u32)]) -> FactoredRational {
    FactoredRational::new(roots.to_vec(), poles.to_vec()).unwrap()
}

/// Random function with `m, n <= 3`, multiplicities `<= 3`, points in the
/// disk of radius 2 separated by 0.2, and a Newton map of degree >= 2.
pub fn random_factored(rng: &mut ChaCha8Rng) -> FactoredRational {
    loop {
        let m = rng.gen_range(0..=3usize);
        let n = rng.gen_range(0..=3usize);
        if m + n == 0 {
            continue;
        }
        let pts = separated_points(rng, m + n, 2.0, 0.2);
        let mut mult = || rng.gen_range(1..=3u32);
        let roots: Vec<_> = pts[..m].iter().map(|&z| (z, mult())).collect();
        let poles: Vec<_> = pts[m..].iter().map(|&z| (z, mult())).collect();
        let r = factored(&roots, &poles);
        if newton_degree(&r) >= 2 {
            return r;
        }
    }
}

/// Random function whose Newton map has the given degree.
pub fn random_with_degree(rng: &mut ChaCha8Rng, degree: usize) -> FactoredRational {
    loop {
        let r = random_factored(rng);
        if newton_degree(&r) == degree {
            return r;
        }
    }
}

fn mult(rng: &mut ChaCha8Rng) -> u32 {
    rng.gen_range(1..=3u32)
}

/// Degree-2 instance of one of the five `(m, n)` patterns: `(2,0)`, `(0,2)`,
/// `(1,1)` with `d != e + 1`, and `(1,2)`, `(2,1)` with `d = e + 1`.
pub fn random_quadratic(rng: &mut ChaCha8Rng, pattern: usize) -> FactoredRational {
    let p = separated_points(rng, 3, 2.0, 0.2);
    match pattern % 5 {
        0 => factored(&[(p[0], mult(rng)), (p[1], mult(rng))], &[]),
        1 => factored(&[], &[(p[0], mult(rng)), (p[1], mult(rng))]),
        2 => loop {
            let (d, e) = (rng.gen_range(1..=4u32), rng.gen_range(1..=4u32));
            if d != e + 1 {
                break factored(&[(p[0], d)], &[(p[1], e)]);
            }
        },
        3 => {
            let (e1, e2) = (mult(rng), mult(rng));
            factored(&[(p[0], e1 + e2 + 1)], &[(p[1], e1), (p[2], e2)])
        }
        _ => {
            let (d1, d2) = (mult(rng), mult(rng));
            factored(&[(p[0], d1), (p[1], d2)], &[(p[2], d1 + d2 - 1)])
        }
    }
}

/// Degree-2 instance from one of the four polynomial-conjugate families.
pub fn random_poly_family(rng: &mut ChaCha8Rng, family: usize) -> FactoredRational {
    let p = separated_points(rng, 3, 2.0, 0.2);
    let k = rng.gen_range(1..=4u32);
    match family % 4 {
        0 => factored(&[(p[0], 1), (p[1], k)], &[]),
        1 => factored(&[(p[0], 1)], &[(p[1], k)]),
        2 => factored(&[(p[0], 1), (p[1], k)], &[(p[2], k)]),
        _ => factored(&[(p[0], k)], &[(p[1], k)]),
    }
}

pub const ROWS: [&str; 9] = ["IA", "IB", "IC", "IIA", "IIBi", "IIBii", "IICi", "IICii", "IID"];

/// Table-row instance in normalized coordinates (first point 0, second 1)
/// with the row condition met, or broken by `offset` added to the free
/// parameter. Then moved by a random affine map.
pub fn table_instance(rng: &mut ChaCha8Rng, row: &str, offset: f64) -> FactoredRational {
    loop {
        if let Some(r) = try_table_instance(rng, row, offset) {
            return r;
        }
    }
}

fn rand_cx(rng: &mut ChaCha8Rng) -> Cx {
    Cx::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5))
}

type Factors = Vec<(Cx, u32)>;

fn try_table_instance(rng: &mut ChaCha8Rng, row: &str, offset: f64) -> Option<FactoredRational> {
    let z = Cx::new(0.0, 0.0);
    let one = Cx::new(1.0, 0.0);
    let (roots, poles): (Factors, Factors) = match row {
        "IA" => {
            let (e1, e2, e3) = (mult(rng), mult(rng), mult(rng));
            (vec![(z, e1 + e2 + e3 + 1)], vec![(one, e1), (rand_cx(rng), e2), (rand_cx(rng), e3)])
        }
        "IB" => {
            let (e1, e2) = (mult(rng), mult(rng));
            let g1 = rand_cx(rng);
            let g2 = g1 * e2 as f64 / (g1 * (e1 + e2) as f64 - e1 as f64) + offset;
            (vec![(z, 1), (one, e1 + e2)], vec![(g1, e1), (g2, e2)])
        }
        "IC" => {
            let (d2, d3) = (mult(rng), mult(rng));
            let a = rand_cx(rng);
            let g = a * (d2 + d3) as f64 / (a * d2 as f64 + d3 as f64) + offset;
            (vec![(z, 1), (one, d2), (a, d3)], vec![(g, d2 + d3)])
        }
        "IIA" => {
            let (e1, e2, e3) = (mult(rng), mult(rng), mult(rng));
            (vec![], vec![(z, e1), (one, e2), (rand_cx(rng), e3)])
        }
        "IIBi" => {
            let (e1, e2) = (mult(rng), mult(rng));
            let g = Cx::new(-(e1 as f64) / e2 as f64 + offset, 0.0);
            (vec![(z, e1 + e2)], vec![(one, e1), (g, e2)])
        }
        "IIBii" => {
            let (e1, e2) = (mult(rng), mult(rng));
            let g = Cx::new(-(e2 as f64) / e1 as f64 + offset, 0.0);
            (vec![(z, 1)], vec![(one, e1), (g, e2)])
        }
        "IICi" => {
            let (d1, d2) = (mult(rng), mult(rng));
            let g = Cx::new(d2 as f64 / (d1 + d2) as f64 + offset, 0.0);
            (vec![(z, d1), (one, d2)], vec![(g, d1 + d2)])
        }
        "IICii" => {
            let d2 = mult(rng);
            let e = rng.gen_range(1..=4u32);
            if e == d2 {
                return None;
            }
            let g = Cx::new(e as f64 / d2 as f64 + offset, 0.0);
            (vec![(z, 1), (one, d2)], vec![(g, e)])
        }
        "IID" => {
            let (d2, d3) = (mult(rng), mult(rng));
            let a = Cx::new(-(d3 as f64) / d2 as f64 + offset, 0.0);
            (vec![(z, 1), (one, d2), (a, d3)], vec![])
        }
        _ => panic!("unknown row {row}"),
    };
    let all: Vec<Cx> = roots.iter().chain(&poles).map(|p| p.0).collect();
    for (i, a) in all.iter().enumerate() {
        if all[i + 1..].iter().any(|b| (a - b).norm() < 0.05) {
            return None;
        }
    }
    // R(T^{-1} z) has its points at T(p)
    let scale = Cx::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..std::f64::consts::TAU));
    let shift = rand_cx(rng);
    let move_pts = |l: &[(Cx, u32)]| l.iter().map(|&(p, k)| (scale * p + shift, k)).collect::<Vec<_>>();
    FactoredRational::new(move_pts(&roots), move_pts(&poles)).ok()
}
