//! Determinate sublattices fixed by a pure state and a preferred observable.
//!
//! Given a state ray `D` and an observable `A` with eigenspaces `A_1..A_m`, the
//! atoms are the non-zero projections `D_Ai = (D ∨ A_i⊥) ∧ A_i`. A proposition
//! `P` is determinate when every atom lies in `P` or in `P⊥`; the determinate
//! propositions form a lattice with exactly one two-valued homomorphism per
//! atom.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use varisat::{ExtendFormula, Lit, Solver};

use crate::event::{Event, EventError, EventFamily, Sublattice, CLOSURE_CAP};
use crate::linalg::{inner, LinalgError, Matrix, Subspace};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BcError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Event(#[from] EventError),
    #[error("state vector is zero")]
    ZeroState,
    #[error("eigenspace {index} is empty")]
    EmptyEigenspace { index: usize },
    #[error("eigenvalue {value} is listed twice")]
    RepeatedEigenvalue { value: BigRational },
    #[error("eigenspaces {a} and {b} are not orthogonal")]
    EigenspacesNotOrthogonal { a: usize, b: usize },
    #[error("eigenspaces span rank {rank}, expected {dim}")]
    IncompleteSpectrum { rank: usize, dim: usize },
    #[error("observable is degenerate; its compatible frame is infinite")]
    NotMaximal,
    #[error("ray {index} has rank {rank}")]
    NotARay { index: usize, rank: usize },
    #[error("ray {index} does not lie in the remainder")]
    NotInRemainder { index: usize },
    #[error("homomorphism {hom} breaks a law on the frame: {detail}")]
    HomLaw { hom: usize, detail: String },
    #[error("homomorphism index {index} out of range for {atoms} atoms")]
    NoSuchHom { index: usize, atoms: usize },
    #[error("sat solver failed: {0}")]
    Solver(String),
}

/// A pure state: a non-zero representative vector and the ray it spans.
#[derive(Clone, PartialEq, Eq)]
pub struct PureState<F> {
    vector: Vec<F>,
    ray: Subspace<F>,
}

impl<F: fmt::Display> fmt::Debug for PureState<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PureState(")?;
        for (k, x) in self.vector.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

impl<F: Field> PureState<F> {
    pub fn new(vector: Vec<F>) -> Result<Self, BcError> {
        let ray = Subspace::canonicalize(std::slice::from_ref(&vector), vector.len())?;
        if ray.is_zero() {
            return Err(BcError::ZeroState);
        }
        Ok(PureState { vector, ray })
    }

    pub fn vector(&self) -> &[F] {
        &self.vector
    }

    pub fn ray(&self) -> &Subspace<F> {
        &self.ray
    }

    pub fn dim(&self) -> usize {
        self.vector.len()
    }

    /// `⟨ψ|proj_S|ψ⟩ / ⟨ψ|ψ⟩`.
    pub fn probability(&self, s: &Subspace<F>) -> Result<F, BcError> {
        if s.ambient_dim() != self.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            }
            .into());
        }
        let p = s.project(&self.vector);
        Ok(inner(&self.vector, &p) / inner(&self.vector, &self.vector))
    }

    /// `|ψ⟩⟨ψ| / ⟨ψ|ψ⟩`.
    pub fn density_matrix(&self) -> Matrix<F> {
        self.ray.projector_matrix()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Eigenpair<F> {
    pub value: BigRational,
    pub space: Subspace<F>,
}

impl<F: fmt::Display> fmt::Debug for Eigenpair<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ↦ {:?}", self.value, self.space)
    }
}

/// A Hermitian operator with rational spectrum, given by its spectral decomposition.
#[derive(Clone, PartialEq, Eq)]
pub struct Observable<F> {
    dim: usize,
    eigenpairs: Vec<Eigenpair<F>>,
}

impl<F: fmt::Display> fmt::Debug for Observable<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.eigenpairs).finish()
    }
}

impl<F: Field> Observable<F> {
    pub fn new(dim: usize, eigenpairs: Vec<Eigenpair<F>>) -> Result<Self, BcError> {
        let mut rank = 0;
        for (a, pair) in eigenpairs.iter().enumerate() {
            if pair.space.ambient_dim() != dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: dim,
                    found: pair.space.ambient_dim(),
                }
                .into());
            }
            if pair.space.is_zero() {
                return Err(BcError::EmptyEigenspace { index: a });
            }
            for (b, other) in eigenpairs[..a].iter().enumerate() {
                if other.value == pair.value {
                    return Err(BcError::RepeatedEigenvalue {
                        value: pair.value.clone(),
                    });
                }
                if !other.space.is_orthogonal_to(&pair.space)? {
                    return Err(BcError::EigenspacesNotOrthogonal { a: b, b: a });
                }
            }
            rank += pair.space.rank();
        }
        if rank != dim {
            return Err(BcError::IncompleteSpectrum { rank, dim });
        }
        Ok(Observable { dim, eigenpairs })
    }

    /// The unit observable: a single eigenspace, the whole space.
    pub fn identity(dim: usize) -> Self {
        Observable {
            dim,
            eigenpairs: vec![Eigenpair {
                value: BigRational::from_integer(1.into()),
                space: Subspace::full(dim),
            }],
        }
    }

    /// Diagonal in the standard basis; equal values share an eigenspace.
    pub fn diagonal(values: &[BigRational]) -> Self {
        let dim = values.len();
        let mut distinct: Vec<BigRational> = Vec::new();
        for v in values {
            if !distinct.contains(v) {
                distinct.push(v.clone());
            }
        }
        let eigenpairs = distinct
            .into_iter()
            .map(|value| {
                let idx: Vec<usize> = (0..dim).filter(|&k| values[k] == value).collect();
                Eigenpair {
                    value,
                    space: Subspace::coordinate(dim, &idx),
                }
            })
            .collect();
        Observable { dim, eigenpairs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eigenpairs(&self) -> &[Eigenpair<F>] {
        &self.eigenpairs
    }

    /// Every eigenspace is a ray.
    pub fn is_maximal(&self) -> bool {
        self.eigenpairs.iter().all(|p| p.space.rank() == 1)
    }

    /// `Σ a_i · proj(A_i)`.
    pub fn matrix(&self) -> Matrix<F> {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for pair in &self.eigenpairs {
            out = out.add(&pair.space.projector_matrix().scale(&F::from_rational(pair.value.clone())));
        }
        out
    }

    /// Index of the eigenspace containing `ray`, if any.
    pub fn eigenspace_of(&self, ray: &Subspace<F>) -> Result<Option<usize>, BcError> {
        for (i, pair) in self.eigenpairs.iter().enumerate() {
            if ray.leq(&pair.space)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

/// An atom `D_Ai` with the index of the eigenspace it came from.
#[derive(Clone, PartialEq, Eq)]
pub struct Atom<F> {
    pub ray: Subspace<F>,
    pub eigenspace: usize,
}

impl<F: fmt::Display> fmt::Debug for Atom<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}: {:?}", self.eigenspace, self.ray)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DeterminateStructure<F> {
    state: PureState<F>,
    observable: Observable<F>,
    atoms: Vec<Atom<F>>,
    remainder: Subspace<F>,
}

impl<F: fmt::Display> fmt::Debug for DeterminateStructure<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DeterminateStructure")
            .field("state", &self.state)
            .field("atoms", &self.atoms)
            .field("remainder", &self.remainder)
            .finish()
    }
}

impl<F: Field> DeterminateStructure<F> {
    /// Assembles a structure from given atoms without checking them; used to
    /// build deliberately defective contexts.
    pub fn from_atoms(state: PureState<F>, observable: Observable<F>, atoms: Vec<Atom<F>>) -> Result<Self, BcError> {
        let mut span = Subspace::zero(state.dim());
        for atom in &atoms {
            span = span.join(&atom.ray)?;
        }
        Ok(DeterminateStructure {
            state,
            observable,
            atoms,
            remainder: span.ortho(),
        })
    }

    pub fn state(&self) -> &PureState<F> {
        &self.state
    }

    pub fn observable(&self) -> &Observable<F> {
        &self.observable
    }

    pub fn atoms(&self) -> &[Atom<F>] {
        &self.atoms
    }

    pub fn atom_rays(&self) -> Vec<Subspace<F>> {
        self.atoms.iter().map(|a| a.ray.clone()).collect()
    }

    pub fn k(&self) -> usize {
        self.atoms.len()
    }

    /// `(∨ D_Ai)⊥`.
    pub fn remainder(&self) -> &Subspace<F> {
        &self.remainder
    }

    /// Eigenspaces orthogonal to the state, which contribute no atom.
    pub fn dropped(&self) -> Vec<usize> {
        (0..self.observable.eigenpairs.len())
            .filter(|i| !self.atoms.iter().any(|a| a.eigenspace == *i))
            .collect()
    }
}

/// Projects the state onto each eigenspace; zero projections are dropped.
pub fn project_state<F: Field>(d: &PureState<F>, a: &Observable<F>) -> Result<DeterminateStructure<F>, BcError> {
    if d.dim() != a.dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: a.dim(),
            found: d.dim(),
        }
        .into());
    }
    let mut atoms = Vec::new();
    for (i, pair) in a.eigenpairs().iter().enumerate() {
        let ray = d.ray().join(&pair.space.ortho())?.meet(&pair.space)?;
        if !ray.is_zero() {
            atoms.push(Atom { ray, eigenspace: i });
        }
    }
    DeterminateStructure::from_atoms(d.clone(), a.clone(), atoms)
}

fn splits<F: Field>(ray: &Subspace<F>, p: &Subspace<F>) -> Result<bool, BcError> {
    Ok(!ray.leq(p)? && !ray.is_orthogonal_to(p)?)
}

/// Every atom lies in `p` or in `p⊥`.
pub fn membership<F: Field>(ds: &DeterminateStructure<F>, p: &Subspace<F>) -> Result<bool, BcError> {
    for atom in &ds.atoms {
        if splits(&atom.ray, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D ≤ P` or `D ≤ P⊥`: the structure for the unit observable.
pub fn standard_sublattice_membership<F: Field>(d: &PureState<F>, p: &Subspace<F>) -> Result<bool, BcError> {
    Ok(!splits(d.ray(), p)?)
}

/// Rank-1 pairwise orthogonal generators whose joins form the frame: the
/// atoms, then rays spanning what the atoms leave out.
fn frame_generators<F: Field>(ds: &DeterminateStructure<F>) -> Vec<(String, Subspace<F>)> {
    let mut gens: Vec<(String, Subspace<F>)> = ds
        .atoms
        .iter()
        .enumerate()
        .map(|(i, a)| (format!("D{}", i + 1), a.ray.clone()))
        .collect();
    if ds.observable.is_maximal() {
        for (j, i) in ds.dropped().into_iter().enumerate() {
            gens.push((format!("N{}", j + 1), ds.observable.eigenpairs[i].space.clone()));
        }
    } else if !ds.remainder.is_zero() {
        gens.push(("R".to_string(), ds.remainder.clone()));
    }
    gens
}

fn cube<F: Field>(dim: usize, gens: &[(String, Subspace<F>)]) -> Result<EventFamily<F>, BcError> {
    let mut events = Vec::with_capacity(1 << gens.len());
    for mask in 0usize..1 << gens.len() {
        let mut span = Subspace::zero(dim);
        let mut names = Vec::new();
        for (j, (name, ray)) in gens.iter().enumerate() {
            if mask >> j & 1 == 1 {
                span = span.join(ray)?;
                names.push(name.as_str());
            }
        }
        let label = if mask == 0 {
            "0".to_string()
        } else if span.is_full() {
            "1".to_string()
        } else {
            names.join("∨")
        };
        events.push(Event::labelled(span, label));
    }
    Ok(EventFamily::new(dim, events)?)
}

/// The Boolean algebra generated by the spectral projectors of a maximal
/// observable: the atoms together with the null eigenrays, `2^n` events.
pub fn boolean_frame<F: Field>(ds: &DeterminateStructure<F>) -> Result<EventFamily<F>, BcError> {
    if !ds.observable.is_maximal() {
        return Err(BcError::NotMaximal);
    }
    cube(ds.state.dim(), &frame_generators(ds))
}

/// The homomorphism that makes atom `true_atom` obtain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoValuedHom {
    pub true_atom: usize,
}

impl TwoValuedHom {
    /// `h(P) = 1` iff the selected atom lies in `P`; meaningful on members.
    pub fn value<F: Field>(&self, ds: &DeterminateStructure<F>, p: &Subspace<F>) -> Result<bool, BcError> {
        let atom = ds.atoms.get(self.true_atom).ok_or(BcError::NoSuchHom {
            index: self.true_atom,
            atoms: ds.k(),
        })?;
        Ok(atom.ray.leq(p)?)
    }
}

/// One homomorphism per atom, each checked against the lattice laws on the
/// frame (the Boolean frame for maximal `A`, else atoms plus remainder).
pub fn enumerate_homs<F: Field>(ds: &DeterminateStructure<F>) -> Result<Vec<TwoValuedHom>, BcError> {
    let gens = frame_generators(ds);
    let frame = Sublattice::generate(&gens.into_iter().map(|(_, s)| s).collect::<Vec<_>>(), CLOSURE_CAP)?;
    let elements = frame.elements();
    let mut homs = Vec::with_capacity(ds.k());
    for i in 0..ds.k() {
        let hom = TwoValuedHom { true_atom: i };
        let h: Vec<bool> = elements
            .iter()
            .map(|e| hom.value(ds, e))
            .collect::<Result<_, _>>()?;
        let fail = |detail: String| BcError::HomLaw { hom: i, detail };
        for a in 0..elements.len() {
            if h[frame.ortho(a)] == h[a] {
                return Err(fail(format!("h(P⊥) = h(P) for element {a}")));
            }
            if (elements[a].is_full() && !h[a]) || (elements[a].is_zero() && h[a]) {
                return Err(fail("bounds not preserved".into()));
            }
            for b in 0..elements.len() {
                if h[frame.meet(a, b)] != (h[a] && h[b]) {
                    return Err(fail(format!("meet of elements {a}, {b}")));
                }
                if h[frame.join(a, b)] != (h[a] || h[b]) {
                    return Err(fail(format!("join of elements {a}, {b}")));
                }
            }
        }
        let mut ones = 0;
        for atom in &ds.atoms {
            ones += usize::from(hom.value(ds, &atom.ray)?);
        }
        if ones != 1 {
            return Err(fail(format!("{ones} atoms valued 1")));
        }
        homs.push(hom);
    }
    Ok(homs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullRayReport<F> {
    /// `⟨ψ|proj_R|ψ⟩/⟨ψ|ψ⟩` per ray.
    pub probabilities: Vec<F>,
}

impl<F: Field> NullRayReport<F> {
    pub fn all_null(&self) -> bool {
        self.probabilities.iter().all(|p| p.is_zero())
    }
}

/// Confirms rays in the remainder carry probability zero under the state.
pub fn null_rays_check<F: Field>(ds: &DeterminateStructure<F>, rays: &[Subspace<F>]) -> Result<NullRayReport<F>, BcError> {
    let mut probabilities = Vec::with_capacity(rays.len());
    for (index, ray) in rays.iter().enumerate() {
        if ray.rank() != 1 {
            return Err(BcError::NotARay { index, rank: ray.rank() });
        }
        if !ray.leq(&ds.remainder)? {
            return Err(BcError::NotInRemainder { index });
        }
        probabilities.push(ds.state.probability(ray)?);
    }
    Ok(NullRayReport { probabilities })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    /// Whether the probe ray was already determinate.
    pub member: bool,
    pub family_size: usize,
    /// Per atom: can its homomorphism be extended to the enlarged family?
    pub extendable: Vec<bool>,
}

impl ProbeReport {
    pub fn breaks(&self) -> bool {
        self.extendable.iter().any(|e| !e)
    }
}

/// Adds `ray` to the generators and asks, for each atom, whether a two-valued
/// homomorphism sending that atom to 1 survives on a finite fragment of the
/// enlarged lattice (generators, their complements, and one round of meets and
/// joins). Satisfiability is decided exactly by a SAT solver over the lattice
/// equations that close inside the fragment.
pub fn maximality_probe<F: Field>(ds: &DeterminateStructure<F>, ray: &Subspace<F>) -> Result<ProbeReport, BcError> {
    let dim = ds.state.dim();
    let member = membership(ds, ray)?;
    let mut family: Vec<Subspace<F>> = Vec::new();
    let push = |family: &mut Vec<Subspace<F>>, s: Subspace<F>| {
        if !family.contains(&s) {
            family.push(s);
        }
    };
    push(&mut family, Subspace::zero(dim));
    push(&mut family, Subspace::full(dim));
    for atom in &ds.atoms {
        push(&mut family, atom.ray.clone());
    }
    push(&mut family, ds.remainder.clone());
    push(&mut family, ray.clone());
    let seeds: Vec<Subspace<F>> = family.clone();
    for s in &seeds {
        push(&mut family, s.ortho());
    }
    let base = family.clone();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i + 1..] {
            push(&mut family, a.meet(b)?);
            push(&mut family, a.join(b)?);
        }
    }
    let round = family.clone();
    for s in &round {
        push(&mut family, s.ortho());
    }

    let index = |s: &Subspace<F>| family.iter().position(|t| t == s);
    let var = |i: usize| Lit::from_index(i, true);
    let mut clauses: Vec<Vec<Lit>> = Vec::new();
    for (a, s) in family.iter().enumerate() {
        if let Some(b) = index(&s.ortho()) {
            clauses.push(vec![var(a), var(b)]);
            clauses.push(vec![!var(a), !var(b)]);
        }
        if s.is_zero() {
            clauses.push(vec![!var(a)]);
        }
        if s.is_full() {
            clauses.push(vec![var(a)]);
        }
        for (b, t) in family.iter().enumerate().skip(a + 1) {
            if let Some(c) = index(&s.meet(t)?) {
                clauses.push(vec![!var(c), var(a)]);
                clauses.push(vec![!var(c), var(b)]);
                clauses.push(vec![var(c), !var(a), !var(b)]);
            }
            if let Some(c) = index(&s.join(t)?) {
                clauses.push(vec![var(c), !var(a)]);
                clauses.push(vec![var(c), !var(b)]);
                clauses.push(vec![!var(c), var(a), var(b)]);
            }
        }
    }
    let atom_vars: Vec<usize> = ds
        .atoms
        .iter()
        .map(|a| index(&a.ray).expect("atoms are seeds"))
        .collect();
    let mut extendable = Vec::with_capacity(ds.k());
    for (i, _) in ds.atoms.iter().enumerate() {
        let mut solver = Solver::new();
        for clause in &clauses {
            solver.add_clause(clause);
        }
        for (j, &v) in atom_vars.iter().enumerate() {
            solver.add_clause(&[if i == j { var(v) } else { !var(v) }]);
        }
        extendable.push(solver.solve().map_err(|e| BcError::Solver(e.to_string()))?);
    }
    Ok(ProbeReport {
        member,
        family_size: family.len(),
        extendable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QuadComplex;

    type S = QuadComplex;

    fn v(xs: &[i64]) -> Vec<S> {
        xs.iter().map(|&x| S::integer(x)).collect()
    }

    fn state(xs: &[i64]) -> PureState<S> {
        PureState::new(v(xs)).unwrap()
    }

    fn ray(xs: &[i64]) -> Subspace<S> {
        Subspace::ray(&v(xs))
    }

    fn diag(n: usize) -> Observable<S> {
        let values: Vec<BigRational> = (0..n).map(|k| BigRational::from_integer((k as i64 + 1).into())).collect();
        Observable::diagonal(&values)
    }

    #[test]
    fn project_state_examples() {
        let ds = project_state(&state(&[1, 1]), &diag(2)).unwrap();
        assert_eq!(ds.atom_rays(), vec![ray(&[1, 0]), ray(&[0, 1])]);
        assert!(ds.remainder().is_zero());

        let ds = project_state(&state(&[1, 0]), &diag(2)).unwrap();
        assert_eq!(ds.atom_rays(), vec![ray(&[1, 0])]);
        assert_eq!(ds.dropped(), vec![1]);

        let ds = project_state(&state(&[1, 1, 1]), &diag(3)).unwrap();
        assert_eq!(ds.k(), 3);
        assert!(ds.remainder().is_zero());
    }

    #[test]
    fn degenerate_projection() {
        let values: Vec<BigRational> = [1, 1, 2].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let a = Observable::<S>::diagonal(&values);
        assert!(!a.is_maximal());
        let ds = project_state(&state(&[1, 2, 3]), &a).unwrap();
        assert_eq!(ds.atom_rays(), vec![ray(&[1, 2, 0]), ray(&[0, 0, 1])]);
        assert_eq!(ds.remainder(), &ray(&[2, -1, 0]));
        assert_eq!(boolean_frame(&ds), Err(BcError::NotMaximal));
        assert_eq!(enumerate_homs(&ds).unwrap().len(), 2);
    }

    #[test]
    fn membership_examples() {
        let ds = project_state(&state(&[1, 1, 1]), &diag(3)).unwrap();
        assert!(membership(&ds, &ray(&[1, 0, 0])).unwrap());
        assert!(!membership(&ds, &ray(&[1, 1, 0])).unwrap());
        assert!(membership(&ds, &Subspace::full(3)).unwrap());

        let d = state(&[1, 0]);
        assert!(standard_sublattice_membership(&state(&[1, 0, 0]), &Subspace::coordinate(3, &[0, 1])).unwrap());
        assert!(standard_sublattice_membership(&d, &ray(&[0, 1])).unwrap());
        assert!(!standard_sublattice_membership(&state(&[1, 1]), &ray(&[1, 0])).unwrap());
    }

    #[test]
    fn frames() {
        let ds = project_state(&state(&[1, 1, 1]), &diag(3)).unwrap();
        let frame = boolean_frame(&ds).unwrap();
        assert_eq!(frame.len(), 8);
        let cube = EventFamily::<S>::coordinate_cube(3);
        assert!(cube.events().iter().all(|e| frame.contains(&e.subspace)));
        assert_eq!(boolean_frame(&project_state(&state(&[1, 1]), &diag(2)).unwrap()).unwrap().len(), 4);
        let eigen = project_state(&state(&[0, 1]), &diag(2)).unwrap();
        assert_eq!(eigen.k(), 1);
        assert_eq!(boolean_frame(&eigen).unwrap().len(), 4);
    }

    #[test]
    fn hom_counts() {
        let ds = project_state(&state(&[1, 1, 1]), &diag(3)).unwrap();
        assert_eq!(enumerate_homs(&ds).unwrap().len(), 3);
        let ds = project_state(&state(&[0, 0, 1]), &diag(3)).unwrap();
        assert_eq!(enumerate_homs(&ds).unwrap(), vec![TwoValuedHom { true_atom: 0 }]);
        let ds = project_state(&state(&[1, 1, 0, 0]), &diag(4)).unwrap();
        assert_eq!(ds.atom_rays(), vec![ray(&[1, 0, 0, 0]), ray(&[0, 1, 0, 0])]);
        assert_eq!(enumerate_homs(&ds).unwrap().len(), 2);
        assert_eq!(boolean_frame(&ds).unwrap().len(), 16);
    }

    #[test]
    fn null_rays() {
        let generic = project_state(&state(&[1, 1, 1]), &diag(3)).unwrap();
        assert!(null_rays_check(&generic, &[]).unwrap().all_null());
        let ds = project_state(&state(&[1, 1, 0, 0]), &diag(4)).unwrap();
        let report = null_rays_check(&ds, &[ray(&[0, 0, 1, 1])]).unwrap();
        assert!(report.all_null());
        assert_eq!(
            null_rays_check(&ds, &[ray(&[1, 1, 0, 0])]),
            Err(BcError::NotInRemainder { index: 0 })
        );
    }

    #[test]
    fn standard_membership_is_not_contained_in_determinate_lattice() {
        let d = state(&[1, 1, 1]);
        let ds = project_state(&d, &diag(3)).unwrap();
        let p = ray(&[1, -1, 0]);
        assert!(standard_sublattice_membership(&d, &p).unwrap());
        assert!(!membership(&ds, &p).unwrap());
    }

    #[test]
    fn probe_separates_members() {
        let ds = project_state(&state(&[1, 1, 1]), &diag(3)).unwrap();
        let outside = maximality_probe(&ds, &ray(&[1, 1, 0])).unwrap();
        assert!(!outside.member);
        assert_eq!(outside.extendable, vec![false, false, true]);
        let inside = maximality_probe(&ds, &ray(&[0, 1, 0])).unwrap();
        assert!(inside.member && !inside.breaks());
    }
}
