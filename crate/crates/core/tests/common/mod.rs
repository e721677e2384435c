#![allow(dead_code)]

use qlogic::ks::RaySystem;
use qlogic::linalg::Subspace;
use qlogic::sample::{self, Entries};
use qlogic::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use varisat::dimacs::DimacsParser;
use varisat::Solver;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Solves DIMACS text with varisat; the parser also checks the header counts.
pub fn solver_sat(cnf: &str) -> (bool, Option<Vec<u8>>) {
    let formula = DimacsParser::parse(cnf.as_bytes()).expect("well-formed DIMACS");
    let mut solver = Solver::new();
    solver.add_formula(&formula);
    let sat = solver.solve().expect("solver runs");
    let model = solver.model().map(|lits| {
        let mut values = vec![0u8; formula.var_count()];
        for lit in lits {
            if lit.is_positive() {
                values[lit.index()] = 1;
            }
        }
        values
    });
    (sat, model)
}

/// Keeps only the listed contexts and the rays they use, renumbered in order.
pub fn subsystem(rs: &RaySystem<Scalar>, keep: &[usize]) -> RaySystem<Scalar> {
    let mut map = vec![usize::MAX; rs.rays().len()];
    let mut rays = Vec::new();
    let mut contexts = Vec::new();
    for &c in keep {
        let mut ctx = Vec::new();
        for &r in &rs.contexts()[c] {
            if map[r] == usize::MAX {
                map[r] = rays.len();
                rays.push(rs.rays()[r].clone());
            }
            ctx.push(map[r]);
        }
        contexts.push(ctx);
    }
    RaySystem::new(rs.dim(), rays, contexts)
}

/// Random non-empty subset of context indices.
pub fn random_contexts<R: Rng>(rng: &mut R, total: usize) -> Vec<usize> {
    loop {
        let keep: Vec<usize> = (0..total).filter(|_| rng.gen_bool(0.6)).collect();
        if !keep.is_empty() {
            return keep;
        }
    }
}

/// A valid ray system in the plane: random rays paired with their complements.
pub fn random_plane_system<R: Rng>(rng: &mut R) -> RaySystem<Scalar> {
    let mut rays: Vec<Subspace<Scalar>> = Vec::new();
    let mut contexts = Vec::new();
    for _ in 0..rng.gen_range(1..=6) {
        let r = sample::ray(rng, 2, Entries::Gaussian(3));
        if rays.contains(&r) || rays.contains(&r.ortho()) {
            continue;
        }
        rays.push(r.clone());
        rays.push(r.ortho());
        contexts.push(vec![rays.len() - 2, rays.len() - 1]);
    }
    RaySystem::new(2, rays, contexts)
}

/// Random permutation of `0..n`.
pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Exhaustive oracle: is there a 0/1 vector with one 1 per context and no
/// exclusive pair both 1? Only for small ray counts.
pub fn brute_force_sat(rays: usize, contexts: &[Vec<usize>], exclusive: &[(usize, usize)]) -> bool {
    assert!(rays <= 22);
    (0u32..1 << rays).any(|bits| {
        let v = |i: usize| bits >> i & 1;
        contexts.iter().all(|c| c.iter().map(|&r| v(r)).sum::<u32>() == 1)
            && exclusive.iter().all(|&(a, b)| v(a) + v(b) < 2)
    })
}

use qlogic::bub_clifton::{DeterminateStructure, Observable, PureState};

/// A random state and a maximal observable whose eigenbasis has Gaussian
/// entries; the state is spread over a random subset of the eigenbasis.
pub fn random_context<R: Rng>(rng: &mut R, n: usize, entries: Entries) -> (PureState<Scalar>, Observable<Scalar>) {
    let basis = sample::orthogonal_basis(rng, n, entries);
    let values = sample::eigenvalues(rng, n);
    let pairs = basis
        .iter()
        .zip(values)
        .map(|(v, value)| qlogic::bub_clifton::Eigenpair {
            value,
            space: Subspace::ray(v),
        })
        .collect();
    let obs = Observable::new(n, pairs).unwrap();
    let state = sample::state_in_span(rng, &basis, Entries::Rational(3));
    (state, obs)
}

/// A determinate proposition: some atoms joined with a random piece of the remainder.
pub fn member_proposition<R: Rng>(rng: &mut R, ds: &DeterminateStructure<Scalar>) -> Subspace<Scalar> {
    let n = ds.state().dim();
    let mut p = Subspace::zero(n);
    for atom in ds.atoms() {
        if rng.gen_bool(0.5) {
            p = p.join(&atom.ray).unwrap();
        }
    }
    let rem = ds.remainder();
    for _ in 0..rng.gen_range(0..=rem.rank()) {
        let v = rem.project(&sample::vector(rng, n, Entries::Gaussian(2)));
        p = p.join(&Subspace::ray(&v)).unwrap();
    }
    p
}

/// An observable diagonal in the eigenbasis of the context's observable, with
/// eigenvalues drawn from a small set so degenerate ones turn up too.
pub fn frame_observable<R: Rng>(rng: &mut R, obs: &Observable<Scalar>) -> Observable<Scalar> {
    let n = obs.dim();
    let mut groups: Vec<(num_rational::BigRational, Subspace<Scalar>)> = Vec::new();
    for pair in obs.eigenpairs() {
        let value = num_rational::BigRational::from_integer(rng.gen_range(-3i64..=3).into());
        match groups.iter_mut().find(|(v, _)| *v == value) {
            Some((_, space)) => *space = space.join(&pair.space).unwrap(),
            None => groups.push((value, pair.space.clone())),
        }
    }
    let pairs = groups
        .into_iter()
        .map(|(value, space)| qlogic::bub_clifton::Eigenpair { value, space })
        .collect();
    Observable::new(n, pairs).unwrap()
}

/// `|⟨ψ,a⟩|² / (⟨ψ,ψ⟩⟨a,a⟩)` straight from the vectors.
pub fn born_weight(psi: &[Scalar], a: &[Scalar]) -> Scalar {
    use qlogic::linalg::inner;
    use qlogic::Field;
    let overlap = inner(psi, a);
    overlap.norm_sq() / (inner(psi, psi) * inner(a, a))
}
