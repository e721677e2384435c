//! Quantum event algebras over finite families of subspaces: the axioms
//! [a]–[f], compatibility and the orthomodular law.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{LinalgError, Subspace};
use crate::scalar::Field;

/// Default bound on generated sublattices. A compatible pair generates at
/// most 16 elements and the free orthomodular lattice on two generators has
/// 96, so hitting this bound means something is broken.
pub const CLOSURE_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EventError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("sublattice closure exceeded {cap} elements")]
    ClosureCap { cap: usize },
    #[error("commutation test ({commute}) and Boolean-sublattice test ({boolean}) disagree")]
    OracleDisagreement { commute: bool, boolean: bool },
    #[error("precondition a <= b does not hold")]
    NotBelow,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Event<F> {
    pub subspace: Subspace<F>,
    pub label: Option<String>,
}

impl<F: Field> Event<F> {
    pub fn new(subspace: Subspace<F>) -> Self {
        Event {
            subspace,
            label: None,
        }
    }

    pub fn labelled(subspace: Subspace<F>, label: impl Into<String>) -> Self {
        Event {
            subspace,
            label: Some(label.into()),
        }
    }

    pub fn top(n: usize) -> Self {
        Event::labelled(Subspace::full(n), "1")
    }

    pub fn bottom(n: usize) -> Self {
        Event::labelled(Subspace::zero(n), "0")
    }

    pub fn ortho(&self) -> Self {
        Event {
            subspace: self.subspace.ortho(),
            label: self.label.as_ref().map(|l| format!("{}*", l)),
        }
    }
}

impl<F: fmt::Display> fmt::Debug for Event<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(label) => write!(f, "{}: {:?}", label, self.subspace),
            None => write!(f, "{:?}", self.subspace),
        }
    }
}

/// A finite fragment of the event algebra of `F^n`, deduplicated by subspace.
/// Top and bottom are always present.
#[derive(Clone, PartialEq, Eq)]
pub struct EventFamily<F> {
    dim: usize,
    events: Vec<Event<F>>,
}

impl<F: Field> EventFamily<F> {
    pub fn new(dim: usize, events: Vec<Event<F>>) -> Result<Self, EventError> {
        let mut family = EventFamily {
            dim,
            events: Vec::new(),
        };
        for event in events {
            if event.subspace.ambient_dim() != dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: dim,
                    found: event.subspace.ambient_dim(),
                }
                .into());
            }
            family.insert(event);
        }
        family.insert(Event::bottom(dim));
        family.insert(Event::top(dim));
        Ok(family)
    }

    /// All `2^n` coordinate subspaces of `F^n` (the diagonal projectors).
    pub fn coordinate_cube(n: usize) -> Self {
        let events = (0u32..1 << n)
            .map(|mask| {
                let indices: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                Event::new(Subspace::coordinate(n, &indices))
            })
            .collect();
        EventFamily::new(n, events).expect("coordinate subspaces share the dimension")
    }

    /// Adds `event` unless its subspace is already present; returns its index.
    pub fn insert(&mut self, event: Event<F>) -> usize {
        if let Some(i) = self.index_of(&event.subspace) {
            if self.events[i].label.is_none() {
                self.events[i].label = event.label;
            }
            return i;
        }
        self.events.push(event);
        self.events.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn events(&self) -> &[Event<F>] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn index_of(&self, subspace: &Subspace<F>) -> Option<usize> {
        self.events.iter().position(|e| &e.subspace == subspace)
    }

    pub fn contains(&self, subspace: &Subspace<F>) -> bool {
        self.index_of(subspace).is_some()
    }

    /// Display label of event `i`, `E<i>` when unlabelled.
    pub fn label(&self, i: usize) -> String {
        self.events[i]
            .label
            .clone()
            .unwrap_or_else(|| format!("E{}", i))
    }

    pub fn closed_under_ortho(&self) -> bool {
        self.events.iter().all(|e| self.contains(&e.subspace.ortho()))
    }

    /// Closes the family under orthocomplement and joins of orthogonal pairs.
    pub fn close(&self, cap: usize) -> Result<Self, EventError> {
        let mut out = self.clone();
        let mut processed = 0;
        while processed < out.events.len() {
            let upto = out.events.len();
            for i in processed..upto {
                let ortho = out.events[i].ortho();
                out.insert(ortho);
                for j in 0..upto {
                    let (a, b) = (&out.events[i].subspace, &out.events[j].subspace);
                    if a.is_orthogonal_to(b)? {
                        let joined = a.join(b)?;
                        out.insert(Event::new(joined));
                    }
                }
                if out.events.len() > cap {
                    return Err(EventError::ClosureCap { cap });
                }
            }
            processed = upto;
        }
        Ok(out)
    }
}

impl<F: fmt::Display> fmt::Debug for EventFamily<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EventFamily")
            .field("dim", &self.dim)
            .field("events", &self.events)
            .finish()
    }
}

/// A finite sublattice with its operation tables.
#[derive(Clone)]
pub struct Sublattice<F> {
    elements: Vec<Subspace<F>>,
    meet: Vec<usize>,
    join: Vec<usize>,
    ortho: Vec<usize>,
}

impl<F: fmt::Display> fmt::Debug for Sublattice<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

impl<F: Field> Sublattice<F> {
    /// Closure of `seeds` under meet, join and orthocomplement, bounded by `cap`.
    pub fn generate(seeds: &[Subspace<F>], cap: usize) -> Result<Self, EventError> {
        let Some(first) = seeds.first() else {
            return Err(EventError::ClosureCap { cap: 0 });
        };
        let n = first.ambient_dim();
        let mut elements: Vec<Subspace<F>> = Vec::new();
        let mut index: HashMap<Subspace<F>, usize> = HashMap::new();
        let mut intern = |s: Subspace<F>, elements: &mut Vec<Subspace<F>>| -> usize {
            *index.entry(s.clone()).or_insert_with(|| {
                elements.push(s);
                elements.len() - 1
            })
        };
        for s in seeds {
            if s.ambient_dim() != n {
                return Err(LinalgError::DimensionMismatch {
                    expected: n,
                    found: s.ambient_dim(),
                }
                .into());
            }
            intern(s.clone(), &mut elements);
        }
        let mut meet: HashMap<(usize, usize), usize> = HashMap::new();
        let mut join: HashMap<(usize, usize), usize> = HashMap::new();
        let mut ortho: HashMap<usize, usize> = HashMap::new();
        let mut processed = 0;
        while processed < elements.len() {
            let upto = elements.len();
            for i in 0..upto {
                if i >= processed {
                    let o = elements[i].ortho();
                    let o = intern(o, &mut elements);
                    ortho.insert(i, o);
                }
                for j in processed.max(i)..upto {
                    let m = elements[i].meet(&elements[j])?;
                    let m = intern(m, &mut elements);
                    let jn = elements[i].join(&elements[j])?;
                    let jn = intern(jn, &mut elements);
                    meet.insert((i, j), m);
                    meet.insert((j, i), m);
                    join.insert((i, j), jn);
                    join.insert((j, i), jn);
                }
                if elements.len() > cap {
                    return Err(EventError::ClosureCap { cap });
                }
            }
            processed = upto;
        }
        let size = elements.len();
        let table = |t: &HashMap<(usize, usize), usize>| -> Vec<usize> {
            (0..size * size).map(|k| t[&(k / size, k % size)]).collect()
        };
        Ok(Sublattice {
            meet: table(&meet),
            join: table(&join),
            ortho: (0..size).map(|i| ortho[&i]).collect(),
            elements,
        })
    }

    pub fn elements(&self) -> &[Subspace<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn ortho(&self, a: usize) -> usize {
        self.ortho[a]
    }

    /// First triple `(a, b, c)` with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`, by exhaustive search.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in b + 1..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// An orthocomplemented distributive lattice is a Boolean algebra.
    pub fn is_boolean(&self) -> bool {
        self.distributivity_witness().is_none()
    }
}

/// Compatibility via commuting projectors.
pub fn compatible_by_commutation<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<bool, EventError> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: a.ambient_dim(),
            found: b.ambient_dim(),
        }
        .into());
    }
    let (p, q) = (a.projector_matrix(), b.projector_matrix());
    Ok(p.commutator(&q).is_zero())
}

/// Compatibility via the sublattice generated by `{a, a*, b, b*}` being Boolean.
pub fn compatible_by_closure<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<bool, EventError> {
    let seeds = [a.clone(), a.ortho(), b.clone(), b.ortho()];
    let lattice = Sublattice::generate(&seeds, CLOSURE_CAP)?;
    Ok(lattice.is_boolean())
}

/// Runs both compatibility tests and fails loudly if they ever disagree.
pub fn compatible<F: Field>(a: &Event<F>, b: &Event<F>) -> Result<bool, EventError> {
    let commute = compatible_by_commutation(&a.subspace, &b.subspace)?;
    let boolean = compatible_by_closure(&a.subspace, &b.subspace)?;
    if commute != boolean {
        return Err(EventError::OracleDisagreement { commute, boolean });
    }
    Ok(commute)
}

/// Checks `b = a ∨ (a⊥ ∧ b)` for `a ≤ b`.
pub fn orthomodular_check<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<bool, EventError> {
    if !a.leq(b)? {
        return Err(EventError::NotBelow);
    }
    Ok(a.join(&a.ortho().meet(b)?)? == *b)
}

/// Whether `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
pub fn violates_distributivity<F: Field>(
    a: &Subspace<F>,
    b: &Subspace<F>,
    c: &Subspace<F>,
) -> Result<bool, EventError> {
    let lhs = a.meet(&b.join(c)?)?;
    let rhs = a.meet(b)?.join(&a.meet(c)?)?;
    Ok(lhs != rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Axiom {
    pub fn letter(self) -> char {
        match self {
            Axiom::A => 'a',
            Axiom::B => 'b',
            Axiom::C => 'c',
            Axiom::D => 'd',
            Axiom::E => 'e',
            Axiom::F => 'f',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub events: usize,
    pub closed_under_ortho: bool,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations_of(&self, axiom: Axiom) -> impl Iterator<Item = &AxiomViolation> {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }

    /// One `AXIOM <letter> FAIL: <labels>` line per violation.
    pub fn to_text(&self) -> String {
        self.violations
            .iter()
            .map(|v| format!("AXIOM {} FAIL: {}\n", v.axiom.letter(), v.labels.join(", ")))
            .collect()
    }
}

/// Checks [a]–[f] on every element and pair of `family`.
///
/// Missing orthocomplements are reported under [c] and missing joins of
/// orthogonal pairs under [e]; only the sampled family is inspected.
pub fn check_axioms<F: Field>(family: &EventFamily<F>) -> Result<AxiomReport, EventError> {
    let n = family.dim();
    let top = Subspace::full(n);
    let events = family.events();
    let orthos: Vec<Subspace<F>> = events.iter().map(|e| e.subspace.ortho()).collect();
    let mut violations = Vec::new();
    let mut fail = |axiom, labels: Vec<String>| violations.push(AxiomViolation { axiom, labels });

    for (i, event) in events.iter().enumerate() {
        let l = &event.subspace;
        if !l.leq(&top)? {
            fail(Axiom::A, vec![family.label(i)]);
        }
        if orthos[i].ortho() != *l {
            fail(Axiom::B, vec![family.label(i)]);
        }
        if !family.contains(&orthos[i]) || !l.join(&orthos[i])?.is_full() {
            fail(Axiom::C, vec![family.label(i)]);
        }
    }
    for i in 0..events.len() {
        for j in 0..events.len() {
            if i == j {
                continue;
            }
            let (l, lp) = (&events[i].subspace, &events[j].subspace);
            let labels = || vec![family.label(i), family.label(j)];
            if l.leq(lp)? {
                if !orthos[j].leq(&orthos[i])? {
                    fail(Axiom::D, labels());
                }
                if !compatible(&events[i], &events[j])? {
                    fail(Axiom::F, labels());
                }
            }
            if i < j && l.leq(&orthos[j])? && !family.contains(&l.join(lp)?) {
                fail(Axiom::E, labels());
            }
        }
    }
    Ok(AxiomReport {
        events: events.len(),
        closed_under_ortho: family.closed_under_ortho(),
        violations,
    })
}
