//! JSON input formats and the workspace that ties loaded files together.
//!
//! All numbers are scalar literals (strings such as `"-1/2+1/2*r*i"`, or plain
//! integers). A file that mentions `r` must declare a radicand other than 1.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bub_clifton::{BcError, Eigenpair, Observable, PureState};
use crate::event::{Event, EventError, EventFamily};
use crate::ks::{KsError, RaySystem};
use crate::linalg::{LinalgError, Subspace};
use crate::scalar::{validate_radicand, Field, QuadComplex, ScalarError, ScalarLiteral};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}:{line}:{column}: {message}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {source}")]
    Scalar { path: String, source: ScalarError },
    #[error("{path}: literal `{literal}` uses r but the radicand is 1")]
    RadicalWithoutRadicand { path: String, literal: String },
    #[error("{path}: eigenvalue {index} (`{literal}`) is not rational")]
    IrrationalEigenvalue { path: String, index: usize, literal: String },
    #[error("{path}: {source}")]
    Linalg { path: String, source: LinalgError },
    #[error("{path}: {source}")]
    Bc { path: String, source: BcError },
    #[error("{path}: {source}")]
    Ks { path: String, source: KsError },
    #[error("{path}: {source}")]
    Event { path: String, source: EventError },
    #[error("{what}: radicand {found} differs from the workspace radicand {expected}")]
    RadicandMismatch { what: String, expected: u32, found: u32 },
    #[error("{what}: dimension {found} differs from the workspace dimension {expected}")]
    DimensionMismatch { what: String, expected: usize, found: usize },
    #[error("name `{0}` is already loaded")]
    DuplicateName(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RaySystemFile {
    pub radicand: u64,
    pub dimension: usize,
    pub rays: Vec<Vec<ScalarLiteral>>,
    pub contexts: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenpairFile {
    pub value: ScalarLiteral,
    pub vectors: Vec<Vec<ScalarLiteral>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObservableFile {
    pub radicand: u64,
    pub dimension: usize,
    pub eigenpairs: Vec<EigenpairFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<u64>,
    pub vector: Vec<ScalarLiteral>,
}

/// A proposition is the span of its vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropositionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<u64>,
    pub dimension: usize,
    pub vectors: Vec<Vec<ScalarLiteral>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EventFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub vectors: Vec<Vec<ScalarLiteral>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub radicand: u64,
    pub dimension: usize,
    pub events: Vec<EventFile>,
}

/// Reads and parses a JSON file, keeping line and column on syntax errors.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_json(&text, &path.display().to_string())
}

pub fn parse_json<T: DeserializeOwned>(text: &str, path: &str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Json {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

struct Ctx<'a> {
    path: &'a str,
    radicand: u32,
}

impl Ctx<'_> {
    fn new(path: &str, radicand: u64) -> Result<Ctx<'_>, FormatError> {
        let radicand = validate_radicand(radicand).map_err(|source| FormatError::Scalar {
            path: path.to_string(),
            source,
        })?;
        Ok(Ctx { path, radicand })
    }

    fn scalar(&self, lit: &ScalarLiteral) -> Result<QuadComplex, FormatError> {
        if self.radicand == 1 && lit.uses_radical() {
            return Err(FormatError::RadicalWithoutRadicand {
                path: self.path.to_string(),
                literal: lit.to_string(),
            });
        }
        Ok(lit.to_scalar(self.radicand))
    }

    fn vector(&self, lits: &[ScalarLiteral]) -> Result<Vec<QuadComplex>, FormatError> {
        lits.iter().map(|l| self.scalar(l)).collect()
    }

    fn span(&self, vectors: &[Vec<ScalarLiteral>], dim: usize) -> Result<Subspace<QuadComplex>, FormatError> {
        let vs = vectors.iter().map(|v| self.vector(v)).collect::<Result<Vec<_>, _>>()?;
        Subspace::canonicalize(&vs, dim).map_err(|source| FormatError::Linalg {
            path: self.path.to_string(),
            source,
        })
    }
}

impl RaySystemFile {
    pub fn load(&self, path: &str) -> Result<(u32, RaySystem<QuadComplex>), FormatError> {
        let ctx = Ctx::new(path, self.radicand)?;
        let vectors = self.rays.iter().map(|v| ctx.vector(v)).collect::<Result<Vec<_>, _>>()?;
        let rs = RaySystem::from_vectors(self.dimension, &vectors, self.contexts.clone()).map_err(|source| {
            FormatError::Ks {
                path: path.to_string(),
                source,
            }
        })?;
        Ok((ctx.radicand, rs))
    }

    /// Writes a system back out; each ray as its canonical representative.
    pub fn from_system(radicand: u32, rs: &RaySystem<QuadComplex>) -> Self {
        RaySystemFile {
            radicand: u64::from(radicand),
            dimension: rs.dim(),
            rays: rs
                .rays()
                .iter()
                .map(|r| match r.basis().first() {
                    Some(v) => v.iter().map(ScalarLiteral::from).collect(),
                    None => vec![ScalarLiteral::from(&QuadComplex::integer(0)); rs.dim()],
                })
                .collect(),
            contexts: rs.contexts().to_vec(),
        }
    }
}

impl ObservableFile {
    pub fn load(&self, path: &str) -> Result<(u32, Observable<QuadComplex>), FormatError> {
        let ctx = Ctx::new(path, self.radicand)?;
        let mut pairs = Vec::with_capacity(self.eigenpairs.len());
        for (index, pair) in self.eigenpairs.iter().enumerate() {
            let value = ctx
                .scalar(&pair.value)?
                .to_rational()
                .ok_or_else(|| FormatError::IrrationalEigenvalue {
                    path: path.to_string(),
                    index,
                    literal: pair.value.to_string(),
                })?;
            pairs.push(Eigenpair {
                value,
                space: ctx.span(&pair.vectors, self.dimension)?,
            });
        }
        let observable = Observable::new(self.dimension, pairs).map_err(|source| FormatError::Bc {
            path: path.to_string(),
            source,
        })?;
        Ok((ctx.radicand, observable))
    }
}

impl StateFile {
    /// `radicand` is used when the file does not declare one.
    pub fn load(&self, path: &str, radicand: u32) -> Result<(u32, PureState<QuadComplex>), FormatError> {
        let ctx = Ctx::new(path, self.radicand.unwrap_or(u64::from(radicand)))?;
        let state = PureState::new(ctx.vector(&self.vector)?).map_err(|source| FormatError::Bc {
            path: path.to_string(),
            source,
        })?;
        Ok((ctx.radicand, state))
    }
}

impl PropositionFile {
    pub fn load(&self, path: &str, radicand: u32) -> Result<(u32, Subspace<QuadComplex>), FormatError> {
        let ctx = Ctx::new(path, self.radicand.unwrap_or(u64::from(radicand)))?;
        Ok((ctx.radicand, ctx.span(&self.vectors, self.dimension)?))
    }
}

impl FamilyFile {
    pub fn load(&self, path: &str) -> Result<(u32, EventFamily<QuadComplex>), FormatError> {
        let ctx = Ctx::new(path, self.radicand)?;
        let mut events = Vec::with_capacity(self.events.len());
        for e in &self.events {
            let s = ctx.span(&e.vectors, self.dimension)?;
            events.push(match &e.label {
                Some(label) => Event::labelled(s, label.clone()),
                None => Event::new(s),
            });
        }
        let family = EventFamily::new(self.dimension, events).map_err(|source| FormatError::Event {
            path: path.to_string(),
            source,
        })?;
        Ok((ctx.radicand, family))
    }
}

/// Named entities sharing one radicand and one dimension.
#[derive(Default)]
pub struct Workspace {
    radicand: Option<u32>,
    dimension: Option<usize>,
    states: BTreeMap<String, PureState<QuadComplex>>,
    observables: BTreeMap<String, Observable<QuadComplex>>,
    propositions: BTreeMap<String, Subspace<QuadComplex>>,
    ray_systems: BTreeMap<String, RaySystem<QuadComplex>>,
}

impl fmt::Debug for Workspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Workspace")
            .field("radicand", &self.radicand)
            .field("dimension", &self.dimension)
            .field("states", &self.states.keys().collect::<Vec<_>>())
            .field("observables", &self.observables.keys().collect::<Vec<_>>())
            .field("propositions", &self.propositions.keys().collect::<Vec<_>>())
            .field("ray_systems", &self.ray_systems.keys().collect::<Vec<_>>())
            .finish()
    }
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// The radicand fixed so far, 1 if nothing has been loaded.
    pub fn radicand(&self) -> u32 {
        self.radicand.unwrap_or(1)
    }

    pub fn dimension(&self) -> Option<usize> {
        self.dimension
    }

    fn admit(&mut self, name: &str, radicand: u32, dimension: usize) -> Result<(), FormatError> {
        let taken = self.states.contains_key(name)
            || self.observables.contains_key(name)
            || self.propositions.contains_key(name)
            || self.ray_systems.contains_key(name);
        if taken {
            return Err(FormatError::DuplicateName(name.to_string()));
        }
        match self.radicand {
            Some(expected) if expected != radicand && radicand != 1 && expected != 1 => {
                return Err(FormatError::RadicandMismatch {
                    what: name.to_string(),
                    expected,
                    found: radicand,
                });
            }
            Some(expected) if expected != 1 => {}
            _ => self.radicand = Some(radicand),
        }
        match self.dimension {
            Some(expected) if expected != dimension => Err(FormatError::DimensionMismatch {
                what: name.to_string(),
                expected,
                found: dimension,
            }),
            _ => {
                self.dimension = Some(dimension);
                Ok(())
            }
        }
    }

    pub fn add_state(&mut self, name: &str, radicand: u32, state: PureState<QuadComplex>) -> Result<(), FormatError> {
        self.admit(name, radicand, state.dim())?;
        self.states.insert(name.to_string(), state);
        Ok(())
    }

    pub fn add_observable(
        &mut self,
        name: &str,
        radicand: u32,
        observable: Observable<QuadComplex>,
    ) -> Result<(), FormatError> {
        self.admit(name, radicand, observable.dim())?;
        self.observables.insert(name.to_string(), observable);
        Ok(())
    }

    pub fn add_proposition(
        &mut self,
        name: &str,
        radicand: u32,
        proposition: Subspace<QuadComplex>,
    ) -> Result<(), FormatError> {
        self.admit(name, radicand, proposition.ambient_dim())?;
        self.propositions.insert(name.to_string(), proposition);
        Ok(())
    }

    pub fn add_ray_system(
        &mut self,
        name: &str,
        radicand: u32,
        system: RaySystem<QuadComplex>,
    ) -> Result<(), FormatError> {
        self.admit(name, radicand, system.dim())?;
        self.ray_systems.insert(name.to_string(), system);
        Ok(())
    }

    pub fn state(&self, name: &str) -> Option<&PureState<QuadComplex>> {
        self.states.get(name)
    }

    pub fn observable(&self, name: &str) -> Option<&Observable<QuadComplex>> {
        self.observables.get(name)
    }

    pub fn proposition(&self, name: &str) -> Option<&Subspace<QuadComplex>> {
        self.propositions.get(name)
    }

    pub fn ray_system(&self, name: &str) -> Option<&RaySystem<QuadComplex>> {
        self.ray_systems.get(name)
    }
}
