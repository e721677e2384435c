//! Built-in ray systems.

use crate::ks::{KsError, RaySystem};
use crate::linalg::Subspace;
use crate::scalar::QuadComplex;

pub const BUILTIN_NAMES: [&str; 4] = ["peres33", "cabello18", "lisonek21", "dim2-control"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    pub name: &'static str,
    pub radicand: u32,
    pub summary: &'static str,
    pub system: RaySystem<QuadComplex>,
}

pub fn builtin(name: &str) -> Result<Dataset, KsError> {
    match name {
        "peres33" => Ok(peres33()),
        "cabello18" => Ok(cabello18()),
        "lisonek21" => Ok(lisonek21()),
        "dim2-control" => Ok(dim2_control()),
        other => Err(KsError::UnknownDataset(other.to_string())),
    }
}

pub fn all() -> Vec<Dataset> {
    BUILTIN_NAMES.iter().map(|n| builtin(n).expect("builtin name")).collect()
}

fn parse_rays(rows: &[&[&str]], m: u32) -> Vec<Vec<QuadComplex>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|s| QuadComplex::parse(s, m).expect("builtin literal"))
                .collect()
        })
        .collect()
}

fn system(dim: usize, vectors: &[Vec<QuadComplex>], contexts: Vec<Vec<usize>>) -> RaySystem<QuadComplex> {
    RaySystem::from_vectors(dim, vectors, contexts).expect("builtin vectors have the stated dimension")
}

/// Two independent bases of the plane. Trivially colourable.
fn dim2_control() -> Dataset {
    let vectors = parse_rays(&[&["1", "0"], &["0", "1"], &["1", "1"], &["1", "-1"]], 1);
    Dataset {
        name: "dim2-control",
        radicand: 1,
        summary: "d=2 control: two unrelated bases, colourable",
        system: system(2, &vectors, vec![vec![0, 1], vec![2, 3]]),
    }
}

/// Eighteen rays in C^4 with entries in {0, ±1}, nine bases, every ray in
/// exactly two of them. The parity argument (9 bases, each ray counted
/// twice) already rules out a colouring.
fn cabello18() -> Dataset {
    let rows: [[i64; 4]; 18] = [
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [1, 1, 0, 0],
        [1, -1, 0, 0],
        [0, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 0, -1, 0],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
        [0, 0, 1, 1],
        [1, 1, 1, 1],
        [0, 1, 0, -1],
        [1, 0, 0, 1],
        [1, 0, 0, -1],
        [0, 1, -1, 0],
        [1, 1, -1, 1],
        [1, 1, 1, -1],
        [-1, 1, 1, 1],
    ];
    let vectors: Vec<Vec<QuadComplex>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| QuadComplex::integer(x)).collect())
        .collect();
    let contexts = vec![
        vec![0, 1, 2, 3],
        vec![0, 4, 5, 6],
        vec![7, 8, 2, 9],
        vec![7, 10, 6, 11],
        vec![1, 4, 12, 13],
        vec![8, 10, 13, 14],
        vec![15, 16, 3, 9],
        vec![15, 17, 5, 11],
        vec![16, 17, 12, 14],
    ];
    Dataset {
        name: "cabello18",
        radicand: 1,
        summary: "d=4, 18 rays in 9 bases, each ray in two bases",
        system: system(4, &vectors, contexts),
    }
}

/// The 33 rays of R^3 whose components, up to sign and order, are drawn from
/// {0, 1, √2} with the pattern (0,0,1), (0,1,1), (0,1,√2) or (1,1,√2).
/// Contexts are all 16 orthogonal triads among them.
fn peres33() -> Dataset {
    let m = 2;
    let rows: Vec<&[&str]> = vec![
        &["1", "0", "0"],
        &["0", "1", "0"],
        &["0", "0", "1"],
        &["0", "1", "1"],
        &["0", "1", "-1"],
        &["1", "0", "1"],
        &["1", "0", "-1"],
        &["1", "1", "0"],
        &["1", "-1", "0"],
        &["0", "1", "r"],
        &["0", "1", "-r"],
        &["0", "r", "1"],
        &["0", "r", "-1"],
        &["1", "0", "r"],
        &["1", "0", "-r"],
        &["r", "0", "1"],
        &["r", "0", "-1"],
        &["1", "r", "0"],
        &["1", "-r", "0"],
        &["r", "1", "0"],
        &["r", "-1", "0"],
        &["r", "1", "1"],
        &["r", "1", "-1"],
        &["r", "-1", "1"],
        &["r", "-1", "-1"],
        &["1", "r", "1"],
        &["1", "r", "-1"],
        &["1", "-r", "1"],
        &["1", "-r", "-1"],
        &["1", "1", "r"],
        &["1", "1", "-r"],
        &["1", "-1", "r"],
        &["1", "-1", "-r"],
    ];
    let vectors = parse_rays(&rows, m);
    let rays: Vec<Subspace<QuadComplex>> = vectors.iter().map(|v| Subspace::ray(v)).collect();
    let contexts = RaySystem::complete_bases(3, &rays).expect("rays share dimension 3");
    Dataset {
        name: "peres33",
        radicand: m,
        summary: "d=3, 33 rays over Q(√2), all 16 orthogonal triads",
        system: RaySystem::new(3, rays, contexts),
    }
}

/// A 21-ray, 7-basis set in C^6 over Q(√3), with ω = -1/2 + (√3/2)i.
///
/// Rays: the standard basis e_0..e_5, and for each pair a < b a ray v_ab that
/// vanishes at positions a and b and carries cube roots of unity elsewhere.
/// Bases: {e_0, ..., e_5} and, for each position a, {e_a} together with the
/// five v's that vanish at a. Each ray lies in exactly two of the seven bases,
/// so the parity argument forbids a colouring.
fn lisonek21() -> Dataset {
    let m = 3;
    // exponent of ω per position, -1 where the ray vanishes
    const PATTERNS: [[i8; 6]; 15] = [
        [-1, -1, 0, 0, 0, 0],
        [-1, 0, -1, 0, 1, 2],
        [-1, 0, 0, -1, 2, 1],
        [-1, 0, 1, 2, -1, 0],
        [-1, 0, 2, 1, 0, -1],
        [0, -1, -1, 0, 2, 1],
        [0, -1, 0, -1, 1, 2],
        [0, -1, 2, 1, -1, 0],
        [0, -1, 1, 2, 0, -1],
        [0, 0, -1, -1, 0, 0],
        [0, 1, -1, 2, -1, 2],
        [0, 2, -1, 1, 1, -1],
        [0, 2, 1, -1, -1, 1],
        [0, 1, 2, -1, 2, -1],
        [0, 0, 0, 0, -1, -1],
    ];
    let powers = [
        QuadComplex::integer(1),
        QuadComplex::parse("-1/2+1/2*r*i", m).expect("literal"),
        QuadComplex::parse("-1/2-1/2*r*i", m).expect("literal"),
    ];
    let mut vectors: Vec<Vec<QuadComplex>> = (0..6)
        .map(|a| (0..6).map(|k| QuadComplex::integer(i64::from(k == a))).collect())
        .collect();
    for pattern in PATTERNS {
        vectors.push(
            pattern
                .iter()
                .map(|&e| if e < 0 { QuadComplex::integer(0) } else { powers[e as usize].clone() })
                .collect(),
        );
    }
    let mut pairs = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            pairs.push((a, b));
        }
    }
    let mut contexts = vec![(0..6).collect::<Vec<_>>()];
    for a in 0..6 {
        let mut context = vec![a];
        for (k, &(p, q)) in pairs.iter().enumerate() {
            if p == a || q == a {
                context.push(6 + k);
            }
        }
        contexts.push(context);
    }
    Dataset {
        name: "lisonek21",
        radicand: m,
        summary: "d=6, 21 rays over Q(√3) in 7 bases, each ray in two bases",
        system: system(6, &vectors, contexts),
    }
}
