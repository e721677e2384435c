//! Kochen-Specker ray systems and exhaustive two-valued colouring search.
//!
//! A colouring gives every ray 0 or 1 (one value per ray, whatever context it
//! is viewed in) such that each context, a complete orthogonal basis, holds
//! exactly one 1. An UNSAT verdict is a proof by exhaustion, certified by the
//! node count and a digest of the search tree.

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::linalg::{LinalgError, Subspace};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KsError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid ray system:\n{0}")]
    Invalid(ValidationReport),
    #[error("assignment covers {assigned} of {rays} rays")]
    PartialAssignment { assigned: usize, rays: usize },
    #[error("unknown dataset `{0}`")]
    UnknownDataset(String),
}

/// Which pairs of rays may not both be true.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exclusivity {
    /// Only rays that share a listed context.
    Contexts,
    /// Every orthogonal pair of rays, whether or not the basis completing it
    /// is listed. This is the usual Kochen-Specker colouring rule.
    #[default]
    Orthogonality,
}

impl fmt::Display for Exclusivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exclusivity::Contexts => "contexts",
            Exclusivity::Orthogonality => "orthogonality",
        })
    }
}

/// Rank-1 rays grouped into contexts of size `d`.
#[derive(Clone, PartialEq, Eq)]
pub struct RaySystem<F> {
    dim: usize,
    rays: Vec<Subspace<F>>,
    contexts: Vec<Vec<usize>>,
}

impl<F: fmt::Display> fmt::Debug for RaySystem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RaySystem")
            .field("dim", &self.dim)
            .field("rays", &self.rays.len())
            .field("contexts", &self.contexts)
            .finish()
    }
}

impl<F: Field> RaySystem<F> {
    /// Builds the system without checking its structure; see [`RaySystem::validate`].
    pub fn new(dim: usize, rays: Vec<Subspace<F>>, contexts: Vec<Vec<usize>>) -> Self {
        RaySystem { dim, rays, contexts }
    }

    /// Spans each vector into a ray. Zero vectors yield rank-0 "rays" that
    /// validation reports.
    pub fn from_vectors(dim: usize, vectors: &[Vec<F>], contexts: Vec<Vec<usize>>) -> Result<Self, KsError> {
        let rays = vectors
            .iter()
            .map(|v| Subspace::canonicalize(std::slice::from_ref(v), dim))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RaySystem { dim, rays, contexts })
    }

    /// All `d`-element sets of pairwise orthogonal rays, in lexicographic order.
    pub fn complete_bases(dim: usize, rays: &[Subspace<F>]) -> Result<Vec<Vec<usize>>, KsError> {
        let adjacency = orthogonality_matrix(rays)?;
        let mut out = Vec::new();
        let mut current = Vec::new();
        extend_cliques(&adjacency, dim, 0, &mut current, &mut out);
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Subspace<F>] {
        &self.rays
    }

    pub fn contexts(&self) -> &[Vec<usize>] {
        &self.contexts
    }

    /// The same system with context `index` removed.
    pub fn without_context(&self, index: usize) -> Self {
        let mut contexts = self.contexts.clone();
        contexts.remove(index);
        RaySystem {
            dim: self.dim,
            rays: self.rays.clone(),
            contexts,
        }
    }

    /// Relabels rays by `ray_perm` (old index → new index) and reorders contexts.
    pub fn permuted(&self, ray_perm: &[usize], context_order: &[usize]) -> Self {
        let mut rays = vec![Subspace::zero(self.dim); self.rays.len()];
        for (old, &new) in ray_perm.iter().enumerate() {
            rays[new] = self.rays[old].clone();
        }
        let contexts = context_order
            .iter()
            .map(|&c| self.contexts[c].iter().map(|&r| ray_perm[r]).collect())
            .collect();
        RaySystem {
            dim: self.dim,
            rays,
            contexts,
        }
    }

    /// Structural checks; orthogonality is recomputed from the ray vectors.
    pub fn validate(&self) -> ValidationReport {
        let mut defects = Vec::new();
        let n = self.rays.len();
        for (i, ray) in self.rays.iter().enumerate() {
            if ray.ambient_dim() != self.dim {
                defects.push(Defect::RayDimension {
                    ray: i,
                    found: ray.ambient_dim(),
                });
            } else if ray.rank() != 1 {
                defects.push(Defect::NotARay { ray: i, rank: ray.rank() });
            }
        }
        let mut used = vec![false; n];
        for (c, context) in self.contexts.iter().enumerate() {
            if context.len() != self.dim {
                defects.push(Defect::ContextSize {
                    context: c,
                    size: context.len(),
                    expected: self.dim,
                });
            }
            for (k, &a) in context.iter().enumerate() {
                if a >= n {
                    defects.push(Defect::IndexOutOfRange { context: c, index: a });
                    continue;
                }
                used[a] = true;
                if context[..k].contains(&a) {
                    defects.push(Defect::RepeatedIndex { context: c, index: a });
                }
            }
            for (k, &a) in context.iter().enumerate() {
                for &b in &context[k + 1..] {
                    if a >= n || b >= n || a == b {
                        continue;
                    }
                    let (ra, rb) = (&self.rays[a], &self.rays[b]);
                    if ra.ambient_dim() == rb.ambient_dim() && !ra.is_orthogonal_to(rb).unwrap_or(false) {
                        defects.push(Defect::NotOrthogonal { context: c, a, b });
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.rays[a] == self.rays[b] && self.rays[a].rank() == 1 {
                    defects.push(Defect::DuplicateRay { first: a, second: b });
                }
            }
        }
        for (i, u) in used.iter().enumerate() {
            if !u {
                defects.push(Defect::UnusedRay { ray: i });
            }
        }
        ValidationReport { defects }
    }

    fn require_valid(&self) -> Result<(), KsError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(KsError::Invalid(report))
        }
    }

    /// Pairs `(a, b)`, `a < b`, that may not both be true under `rule`.
    pub fn exclusive_pairs(&self, rule: Exclusivity) -> Result<Vec<(usize, usize)>, KsError> {
        let n = self.rays.len();
        let mut flags = vec![false; n * n];
        for context in &self.contexts {
            for (k, &a) in context.iter().enumerate() {
                for &b in &context[k + 1..] {
                    let (a, b) = (a.min(b), a.max(b));
                    flags[a * n + b] = true;
                }
            }
        }
        if rule == Exclusivity::Orthogonality {
            let adjacency = orthogonality_matrix(&self.rays)?;
            for a in 0..n {
                for b in a + 1..n {
                    flags[a * n + b] |= adjacency[a][b];
                }
            }
        }
        Ok((0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| flags[a * n + b])
            .collect())
    }
}

fn orthogonality_matrix<F: Field>(rays: &[Subspace<F>]) -> Result<Vec<Vec<bool>>, KsError> {
    let n = rays.len();
    let mut adjacency = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let orth = rays[a].is_orthogonal_to(&rays[b])?;
            adjacency[a][b] = orth;
            adjacency[b][a] = orth;
        }
    }
    Ok(adjacency)
}

fn extend_cliques(
    adjacency: &[Vec<bool>],
    size: usize,
    from: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for next in from..adjacency.len() {
        if current.iter().all(|&c| adjacency[c][next]) {
            current.push(next);
            extend_cliques(adjacency, size, next + 1, current, out);
            current.pop();
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Defect {
    RayDimension { ray: usize, found: usize },
    NotARay { ray: usize, rank: usize },
    ContextSize { context: usize, size: usize, expected: usize },
    IndexOutOfRange { context: usize, index: usize },
    RepeatedIndex { context: usize, index: usize },
    NotOrthogonal { context: usize, a: usize, b: usize },
    DuplicateRay { first: usize, second: usize },
    UnusedRay { ray: usize },
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::RayDimension { ray, found } => write!(f, "ray {ray}: dimension {found}"),
            Defect::NotARay { ray, rank } => write!(f, "ray {ray}: rank {rank}, expected 1"),
            Defect::ContextSize { context, size, expected } => {
                write!(f, "context {context}: {size} rays, expected {expected}")
            }
            Defect::IndexOutOfRange { context, index } => {
                write!(f, "context {context}: ray index {index} out of range")
            }
            Defect::RepeatedIndex { context, index } => {
                write!(f, "context {context}: ray {index} listed twice")
            }
            Defect::NotOrthogonal { context, a, b } => {
                write!(f, "context {context}: rays {a} and {b} are not orthogonal")
            }
            Defect::DuplicateRay { first, second } => {
                write!(f, "rays {first} and {second} span the same line")
            }
            Defect::UnusedRay { ray } => write!(f, "ray {ray}: in no context"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub defects: Vec<Defect>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.defects.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.defects {
            writeln!(f, "{}", d)?;
        }
        Ok(())
    }
}

/// Ray index → value; `None` for unassigned rays during search.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment {
    values: Vec<Option<u8>>,
}

impl Assignment {
    pub fn empty(rays: usize) -> Self {
        Assignment {
            values: vec![None; rays],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        Assignment {
            values: bits.iter().map(|&b| Some(u8::from(b != 0))).collect(),
        }
    }

    pub fn get(&self, ray: usize) -> Option<u8> {
        self.values.get(ray).copied().flatten()
    }

    pub fn set(&mut self, ray: usize, value: u8) {
        self.values[ray] = Some(u8::from(value != 0));
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_total(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    /// Indices of rays valued 1.
    pub fn true_rays(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.get(i) == Some(1)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnsatCertificate {
    /// Search nodes explored before exhaustion.
    pub nodes: u64,
    /// SHA-256 over the sequence of branch and conflict events, hex encoded.
    pub tree_hash: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "UPPERCASE")]
pub enum Coloring {
    Sat { assignment: Assignment, nodes: u64 },
    Unsat(UnsatCertificate),
}

impl Coloring {
    pub fn is_sat(&self) -> bool {
        matches!(self, Coloring::Sat { .. })
    }

    pub fn assignment(&self) -> Option<&Assignment> {
        match self {
            Coloring::Sat { assignment, .. } => Some(assignment),
            Coloring::Unsat(_) => None,
        }
    }
}

struct Search<'a> {
    contexts: &'a [Vec<usize>],
    neighbors: Vec<Vec<usize>>,
    values: Vec<Option<bool>>,
    trail: Vec<usize>,
    nodes: u64,
    hasher: Sha256,
}

impl Search<'_> {
    fn record(&mut self, tag: u8, a: usize, b: usize) {
        self.hasher.update([tag]);
        self.hasher.update((a as u32).to_le_bytes());
        self.hasher.update((b as u32).to_le_bytes());
    }

    /// Sets `ray` true and its exclusive neighbours false.
    fn assert_true(&mut self, ray: usize) {
        self.values[ray] = Some(true);
        self.trail.push(ray);
        for k in 0..self.neighbors[ray].len() {
            let other = self.neighbors[ray][k];
            if self.values[other].is_none() {
                self.values[other] = Some(false);
                self.trail.push(other);
            }
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let ray = self.trail.pop().expect("trail above mark");
            self.values[ray] = None;
        }
    }

    /// Most constrained open context: `Ok(None)` when every context holds a 1,
    /// `Err(c)` when context `c` has been emptied.
    fn pick_context(&self) -> Result<Option<(usize, Vec<usize>)>, usize> {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for (c, context) in self.contexts.iter().enumerate() {
            if context.iter().any(|&r| self.values[r] == Some(true)) {
                continue;
            }
            let open: Vec<usize> = context.iter().copied().filter(|&r| self.values[r].is_none()).collect();
            if open.is_empty() {
                return Err(c);
            }
            if best.as_ref().is_none_or(|(_, b)| open.len() < b.len()) {
                best = Some((c, open));
            }
        }
        Ok(best)
    }

    fn run(&mut self) -> bool {
        self.nodes += 1;
        let (context, mut candidates) = match self.pick_context() {
            Ok(None) => {
                self.record(b'S', 0, 0);
                return true;
            }
            Ok(Some(choice)) => choice,
            Err(c) => {
                self.record(b'X', c, 0);
                return false;
            }
        };
        candidates.sort_unstable();
        for ray in candidates {
            self.record(b'B', context, ray);
            let mark = self.trail.len();
            self.assert_true(ray);
            if self.run() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// Exhaustive backtracking over contexts with propagation through exclusive pairs.
///
/// Deterministic: ties go to the lowest context and ray index.
pub fn find_coloring<F: Field>(rs: &RaySystem<F>, rule: Exclusivity) -> Result<Coloring, KsError> {
    rs.require_valid()?;
    let n = rs.rays().len();
    let mut neighbors = vec![Vec::new(); n];
    for (a, b) in rs.exclusive_pairs(rule)? {
        neighbors[a].push(b);
        neighbors[b].push(a);
    }
    let mut search = Search {
        contexts: rs.contexts(),
        neighbors,
        values: vec![None; n],
        trail: Vec::new(),
        nodes: 0,
        hasher: Sha256::new(),
    };
    if search.run() {
        // every ray sits in some context, so any ray still open is forced to 0
        let values = search.values.iter().map(|v| Some(u8::from(*v == Some(true)))).collect();
        Ok(Coloring::Sat {
            assignment: Assignment { values },
            nodes: search.nodes,
        })
    } else {
        let digest = search.hasher.finalize();
        let tree_hash = digest.iter().map(|b| format!("{:02x}", b)).collect();
        Ok(Coloring::Unsat(UnsatCertificate {
            nodes: search.nodes,
            tree_hash,
        }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextSum {
    pub context: usize,
    pub sum: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentReport {
    /// Contexts whose value sum is not 1.
    pub contexts: Vec<ContextSum>,
    /// Exclusive pairs valued 1 together.
    pub exclusive_pairs: Vec<(usize, usize)>,
}

impl AssignmentReport {
    pub fn is_empty(&self) -> bool {
        self.contexts.is_empty() && self.exclusive_pairs.is_empty()
    }
}

/// Checks a total assignment against the sum rule and `rule`'s exclusive pairs.
pub fn check_assignment<F: Field>(
    rs: &RaySystem<F>,
    assignment: &Assignment,
    rule: Exclusivity,
) -> Result<AssignmentReport, KsError> {
    let rays = rs.rays().len();
    let assigned = (0..rays).filter(|&i| assignment.get(i).is_some()).count();
    if assigned != rays || assignment.len() != rays {
        return Err(KsError::PartialAssignment { assigned, rays });
    }
    let value = |r: usize| assignment.get(r).unwrap_or(0) as usize;
    let contexts = rs
        .contexts()
        .iter()
        .enumerate()
        .map(|(context, rays)| ContextSum {
            context,
            sum: rays.iter().map(|&r| value(r)).sum(),
        })
        .filter(|s| s.sum != 1)
        .collect();
    let exclusive_pairs = rs
        .exclusive_pairs(rule)?
        .into_iter()
        .filter(|&(a, b)| value(a) == 1 && value(b) == 1)
        .collect();
    Ok(AssignmentReport {
        contexts,
        exclusive_pairs,
    })
}

/// DIMACS CNF: one variable per ray, per context an at-least-one clause, and an
/// at-most-one clause for each exclusive pair (context pairs first).
pub fn export_cnf<F: Field>(rs: &RaySystem<F>, rule: Exclusivity) -> Result<String, KsError> {
    rs.require_valid()?;
    let mut clauses: Vec<String> = Vec::new();
    for context in rs.contexts() {
        let lits: Vec<String> = context.iter().map(|r| (r + 1).to_string()).collect();
        clauses.push(format!("{} 0", lits.join(" ")));
    }
    let mut covered = std::collections::HashSet::new();
    for context in rs.contexts() {
        for (k, &a) in context.iter().enumerate() {
            for &b in &context[k + 1..] {
                covered.insert((a.min(b), a.max(b)));
                clauses.push(format!("-{} -{} 0", a + 1, b + 1));
            }
        }
    }
    if rule == Exclusivity::Orthogonality {
        for (a, b) in rs.exclusive_pairs(rule)? {
            if !covered.contains(&(a, b)) {
                clauses.push(format!("-{} -{} 0", a + 1, b + 1));
            }
        }
    }
    let mut out = format!("p cnf {} {}\n", rs.rays().len(), clauses.len());
    for clause in clauses {
        out.push_str(&clause);
        out.push('\n');
    }
    Ok(out)
}
