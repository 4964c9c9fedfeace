//! Seeded test corpus shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use toric_core::fan::{positively_spans, Fan};
use toric_core::lattice::{primitive, IntVector};
use toric_core::polytope::{normal_fan, LatticePolytope};

pub const POLYGON_SEED: u64 = 20_240_601;
pub const FAN_SEED: u64 = 7_771;
pub const POLYGON_COORD_MAX: i64 = 6;
pub const FAN_COORD_MAX: i64 = 5;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Convex hulls of 3 to 7 random points of `[0, 6]^2`, skipping degenerate
/// draws.
pub fn random_polygons(count: usize, seed: u64) -> Vec<LatticePolytope> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(3..=7);
        let pts: Vec<IntVector> = (0..k)
            .map(|_| {
                IntVector::from([
                    rng.gen_range(0..=POLYGON_COORD_MAX),
                    rng.gen_range(0..=POLYGON_COORD_MAX),
                ])
            })
            .collect();
        if let Ok(p) = LatticePolytope::hull(&pts) {
            out.push(p);
        }
    }
    out
}

/// Complete planar fans on 3 to 7 random primitive rays in `[-5, 5]^2`.
pub fn random_planar_fans(count: usize, seed: u64) -> Vec<Fan> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(3..=7);
        let mut rays: Vec<IntVector> = Vec::new();
        for _ in 0..k {
            let v = IntVector::from([
                rng.gen_range(-FAN_COORD_MAX..=FAN_COORD_MAX),
                rng.gen_range(-FAN_COORD_MAX..=FAN_COORD_MAX),
            ]);
            if let Ok(p) = primitive(&v) {
                if !rays.contains(&p) {
                    rays.push(p);
                }
            }
        }
        if rays.len() < 3 || !positively_spans(&rays, 2) {
            continue;
        }
        if let Ok(f) = Fan::planar(rays) {
            out.push(f);
        }
    }
    out
}

pub fn p1xp1() -> Fan {
    Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
    )
    .unwrap()
}

pub fn p2() -> Fan {
    Fan::from_i64(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[2, 0]]).unwrap()
}

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn read_json(name: &str) -> Value {
    let text = std::fs::read_to_string(data_path(name)).expect("data file");
    serde_json::from_str(&text).expect("valid json")
}

fn int_rows(v: &Value) -> Vec<Vec<i64>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect())
        .collect()
}

pub fn data_fan(name: &str) -> Fan {
    let v = read_json(name);
    let dim = v["dim"].as_u64().unwrap() as usize;
    let rays = int_rows(&v["rays"]).into_iter().map(IntVector::from).collect();
    let cones = int_rows(&v["max_cones"])
        .into_iter()
        .map(|c| c.into_iter().map(|i| i as usize).collect())
        .collect();
    Fan::new(dim, rays, cones)
        .unwrap()
        .assert_complete(v["complete"].as_bool().unwrap_or(false))
}

pub fn data_polytope(name: &str) -> LatticePolytope {
    let v = read_json(name);
    LatticePolytope::new(int_rows(&v["vertices"]).into_iter().map(IntVector::from).collect()).unwrap()
}

/// Named planar fans from the data directory plus P1×P1 and P².
pub fn named_planar_fans() -> Vec<(String, Fan)> {
    let mut out = vec![("P1xP1".to_string(), p1xp1()), ("P2".to_string(), p2())];
    for name in [
        "hirzebruch_s1.json",
        "hirzebruch_s2.json",
        "hirzebruch_s3.json",
        "blowup_p1p1.json",
        "fig1_fan.json",
    ] {
        out.push((name.to_string(), data_fan(name)));
    }
    out
}

/// The 2D fan corpus: named fans, normal fans of random polygons, and random
/// complete planar fans.
pub fn fan_corpus_2d(n_normal: usize, n_random: usize) -> Vec<(String, Fan)> {
    let mut out = named_planar_fans();
    for (i, p) in random_polygons(n_normal, POLYGON_SEED ^ 0x5eed).iter().enumerate() {
        out.push((format!("normal fan #{i}"), normal_fan(p).unwrap()));
    }
    for (i, f) in random_planar_fans(n_random, FAN_SEED).into_iter().enumerate() {
        out.push((format!("random fan #{i}"), f));
    }
    out
}

/// Lattice polytopes of every dimension up to 3 used by the polytope suites.
pub fn polytope_corpus() -> Vec<(String, LatticePolytope)> {
    let mut out = Vec::new();
    for name in ["fig2_left.json", "fig2_right.json", "unit_cube.json"] {
        out.push((name.to_string(), data_polytope(name)));
    }
    for d in 1..=4 {
        out.push((format!("segment 0..{d}"), LatticePolytope::from_i64(&[&[0], &[d]]).unwrap()));
    }
    for (a, b, c) in [(1, 1, 2), (2, 1, 1), (1, 2, 3)] {
        let mut vs = Vec::new();
        for x in [0, a] {
            for y in [0, b] {
                for z in [0, c] {
                    vs.push(IntVector::from([x, y, z]));
                }
            }
        }
        out.push((format!("box {a}x{b}x{c}"), LatticePolytope::new(vs).unwrap()));
    }
    for k in 1..=2 {
        out.push((
            format!("simplex {k}Δ3"),
            LatticePolytope::from_i64(&[&[0, 0, 0], &[k, 0, 0], &[0, k, 0], &[0, 0, k]]).unwrap(),
        ));
    }
    for (i, p) in random_polygons(200, POLYGON_SEED).into_iter().enumerate() {
        out.push((format!("polygon #{i}"), p));
    }
    out
}
