//! Trivalent and context-relative truth valuation.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bub_clifton::{
    membership, project_state, BcError, DeterminateStructure, Observable, PureState, TwoValuedHom,
};
use crate::linalg::{LinalgError, Matrix, Subspace};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TruthError {
    #[error(transparent)]
    Bc(#[from] BcError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("proposition is not determinate in this context")]
    NotMember,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "TRUE")]
    True,
    #[serde(rename = "FALSE")]
    False,
    #[serde(rename = "INDETERMINATE")]
    Indeterminate,
    #[serde(rename = "UNDECIDABLE-IN-CONTEXT")]
    UndecidableInContext,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "TRUE",
            Verdict::False => "FALSE",
            Verdict::Indeterminate => "INDETERMINATE",
            Verdict::UndecidableInContext => "UNDECIDABLE-IN-CONTEXT",
        })
    }
}

/// TRUE when the state lies in `p`, FALSE when it lies in `p⊥`, otherwise neither.
pub fn global_valuate<F: Field>(d: &PureState<F>, p: &Subspace<F>) -> Result<Verdict, TruthError> {
    if d.ray().leq(p)? {
        Ok(Verdict::True)
    } else if d.ray().is_orthogonal_to(p)? {
        Ok(Verdict::False)
    } else {
        Ok(Verdict::Indeterminate)
    }
}

/// A state together with the observable measured on it.
#[derive(Clone, PartialEq, Eq)]
pub struct MeasurementContext<F> {
    structure: DeterminateStructure<F>,
}

impl<F: fmt::Display> fmt::Debug for MeasurementContext<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.structure.fmt(f)
    }
}

impl<F: Field> MeasurementContext<F> {
    pub fn new(state: PureState<F>, observable: Observable<F>) -> Result<Self, TruthError> {
        Ok(MeasurementContext {
            structure: project_state(&state, &observable)?,
        })
    }

    /// Wraps an arbitrary structure, including hand-built defective ones.
    pub fn from_structure(structure: DeterminateStructure<F>) -> Self {
        MeasurementContext { structure }
    }

    pub fn structure(&self) -> &DeterminateStructure<F> {
        &self.structure
    }

    pub fn state(&self) -> &PureState<F> {
        self.structure.state()
    }

    pub fn observable(&self) -> &Observable<F> {
        self.structure.observable()
    }
}

/// Anything with a density matrix.
pub trait DensityOperator<F: Field> {
    fn density_matrix(&self) -> Matrix<F>;
}

impl<F: Field> DensityOperator<F> for PureState<F> {
    fn density_matrix(&self) -> Matrix<F> {
        PureState::density_matrix(self)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Component<F> {
    pub atom: Subspace<F>,
    pub weight: F,
}

impl<F: fmt::Display> fmt::Debug for Component<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} · {:?}", self.weight, self.atom)
    }
}

/// `D_A = Σ w_i |a_i⟩⟨a_i|` over the atoms of a context.
#[derive(Clone, PartialEq, Eq)]
pub struct ContextualState<F> {
    dim: usize,
    components: Vec<Component<F>>,
}

impl<F: fmt::Display> fmt::Debug for ContextualState<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.components).finish()
    }
}

impl<F: Field> ContextualState<F> {
    pub fn components(&self) -> &[Component<F>] {
        &self.components
    }

    pub fn weights(&self) -> Vec<F> {
        self.components.iter().map(|c| c.weight.clone()).collect()
    }
}

impl<F: Field> DensityOperator<F> for ContextualState<F> {
    fn density_matrix(&self) -> Matrix<F> {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for c in &self.components {
            out = out.add(&c.atom.projector_matrix().scale(&c.weight));
        }
        out
    }
}

/// Weights are `⟨ψ|proj(a_i)|ψ⟩ / ⟨ψ|ψ⟩`, exact.
pub fn contextual_state<F: Field>(ctx: &MeasurementContext<F>) -> Result<ContextualState<F>, TruthError> {
    let state = ctx.state();
    let components = ctx
        .structure
        .atoms()
        .iter()
        .map(|a| {
            Ok(Component {
                atom: a.ray.clone(),
                weight: state.probability(&a.ray)?,
            })
        })
        .collect::<Result<_, BcError>>()?;
    Ok(ContextualState {
        dim: state.dim(),
        components,
    })
}

/// `Σ_i P_i ρ P_i` over the eigenprojectors of the context's observable.
pub fn dephased<F: Field>(ctx: &MeasurementContext<F>) -> Matrix<F> {
    let rho = ctx.state().density_matrix();
    let n = ctx.state().dim();
    let mut out = Matrix::zeros(n, n);
    for pair in ctx.observable().eigenpairs() {
        let p = pair.space.projector_matrix();
        out = out.add(&p.mul(&rho).mul(&p));
    }
    out
}

/// `Tr(ρ·A)`.
pub fn expectation<F: Field>(rho: &impl DensityOperator<F>, a: &Observable<F>) -> Result<F, TruthError> {
    let m = rho.density_matrix();
    if m.rows() != a.dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: a.dim(),
            found: m.rows(),
        }
        .into());
    }
    Ok(m.mul(&a.matrix()).trace())
}

/// Context-relative valuation: undecidable unless `p` is determinate in the
/// context, otherwise whether the atom selected by `hom` lies in `p`.
pub fn pcc_valuate<F: Field>(
    ctx: &MeasurementContext<F>,
    hom: &TwoValuedHom,
    p: &Subspace<F>,
) -> Result<Verdict, TruthError> {
    let ds = &ctx.structure;
    if hom.true_atom >= ds.k() {
        return Err(BcError::NoSuchHom {
            index: hom.true_atom,
            atoms: ds.k(),
        }
        .into());
    }
    if !membership(ds, p)? {
        return Ok(Verdict::UndecidableInContext);
    }
    Ok(if hom.value(ds, p)? { Verdict::True } else { Verdict::False })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum ConditionViolation {
    /// Condition (i): the atom lies in no eigenspace.
    NotEigenvector { atom: usize },
    /// Condition (ii): two atoms are not orthogonal.
    NotExclusive { a: usize, b: usize },
    /// Condition (iii): the atom is orthogonal to the state.
    OrthogonalToState { atom: usize },
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionViolation::NotEigenvector { atom } => write!(f, "(i) atom {atom} is not an eigenvector"),
            ConditionViolation::NotExclusive { a, b } => write!(f, "(ii) atoms {a} and {b} are not orthogonal"),
            ConditionViolation::OrthogonalToState { atom } => {
                write!(f, "(iii) atom {atom} is orthogonal to the state")
            }
        }
    }
}

/// Checks that atoms are eigenvectors, mutually orthogonal, and not orthogonal to the state.
pub fn conditions_check<F: Field>(ctx: &MeasurementContext<F>) -> Result<Vec<ConditionViolation>, TruthError> {
    let atoms = ctx.structure.atoms();
    let mut out = Vec::new();
    for (i, atom) in atoms.iter().enumerate() {
        if ctx.observable().eigenspace_of(&atom.ray)?.is_none() {
            out.push(ConditionViolation::NotEigenvector { atom: i });
        }
    }
    for (i, a) in atoms.iter().enumerate() {
        for (j, b) in atoms.iter().enumerate().skip(i + 1) {
            if !a.ray.is_orthogonal_to(&b.ray)? {
                out.push(ConditionViolation::NotExclusive { a: i, b: j });
            }
        }
    }
    for (i, atom) in atoms.iter().enumerate() {
        if atom.ray.is_orthogonal_to(ctx.state().ray())? {
            out.push(ConditionViolation::OrthogonalToState { atom: i });
        }
    }
    Ok(out)
}

/// For every homomorphism, `p` is valued TRUE exactly when the state of
/// affairs it selects lies in `p`.
pub fn t_schema_check<F: Field>(ctx: &MeasurementContext<F>, p: &Subspace<F>) -> Result<bool, TruthError> {
    if !membership(&ctx.structure, p)? {
        return Err(TruthError::NotMember);
    }
    for (i, atom) in ctx.structure.atoms().iter().enumerate() {
        let asserted = pcc_valuate(ctx, &TwoValuedHom { true_atom: i }, p)? == Verdict::True;
        if asserted != atom.ray.leq(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bub_clifton::{Atom, Eigenpair};
    use crate::scalar::QuadComplex;
    use num_rational::BigRational;

    type S = QuadComplex;

    fn v(xs: &[i64]) -> Vec<S> {
        xs.iter().map(|&x| S::integer(x)).collect()
    }

    fn ray(xs: &[i64]) -> Subspace<S> {
        Subspace::ray(&v(xs))
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn diag(values: &[i64]) -> Observable<S> {
        Observable::diagonal(&values.iter().map(|&x| q(x, 1)).collect::<Vec<_>>())
    }

    fn ctx(state: &[i64], values: &[i64]) -> MeasurementContext<S> {
        MeasurementContext::new(PureState::new(v(state)).unwrap(), diag(values)).unwrap()
    }

    #[test]
    fn global_verdicts() {
        let e1 = PureState::new(v(&[1, 0])).unwrap();
        assert_eq!(global_valuate(&e1, &ray(&[1, 0])).unwrap(), Verdict::True);
        assert_eq!(global_valuate(&e1, &ray(&[0, 1])).unwrap(), Verdict::False);
        let plus = PureState::new(v(&[1, 1])).unwrap();
        assert_eq!(global_valuate(&plus, &ray(&[1, 0])).unwrap(), Verdict::Indeterminate);
    }

    #[test]
    fn weights() {
        let c = ctx(&[1, 1], &[1, -1]);
        let state = contextual_state(&c).unwrap();
        assert_eq!(state.weights(), vec![S::rational(q(1, 2)), S::rational(q(1, 2))]);
        let half = S::rational(q(1, 2));
        assert_eq!(
            state.density_matrix(),
            Matrix::from_rows(vec![vec![half.clone(), S::integer(0)], vec![S::integer(0), half]])
        );
        assert_eq!(state.density_matrix(), dephased(&c));

        let eigen = ctx(&[0, 3], &[1, -1]);
        let state = contextual_state(&eigen).unwrap();
        assert_eq!(state.weights(), vec![S::integer(1)]);
        assert_eq!(state.density_matrix(), eigen.state().density_matrix());

        let third = S::rational(q(1, 3));
        assert_eq!(contextual_state(&ctx(&[1, 1, 1], &[1, 2, 3])).unwrap().weights(), vec![third; 3]);
    }

    #[test]
    fn expectations() {
        let c = ctx(&[1, 1], &[1, -1]);
        let da = contextual_state(&c).unwrap();
        assert_eq!(expectation(c.state(), c.observable()).unwrap(), S::integer(0));
        assert_eq!(expectation(&da, c.observable()).unwrap(), S::integer(0));
        let b = Observable::new(
            2,
            vec![
                Eigenpair { value: q(1, 1), space: ray(&[1, 1]) },
                Eigenpair { value: q(-1, 1), space: ray(&[1, -1]) },
            ],
        )
        .unwrap();
        assert_eq!(expectation(c.state(), &b).unwrap(), S::integer(1));
        assert_eq!(expectation(&da, &b).unwrap(), S::integer(0));
    }

    #[test]
    fn pcc_verdicts() {
        let c = ctx(&[1, 1, 1], &[1, 2, 3]);
        let h = TwoValuedHom { true_atom: 0 };
        assert_eq!(pcc_valuate(&c, &h, &ray(&[1, 0, 0])).unwrap(), Verdict::True);
        assert_eq!(pcc_valuate(&c, &h, &Subspace::coordinate(3, &[1, 2])).unwrap(), Verdict::False);
        assert_eq!(pcc_valuate(&c, &h, &ray(&[1, 1, 0])).unwrap(), Verdict::UndecidableInContext);
        assert!(pcc_valuate(&c, &TwoValuedHom { true_atom: 3 }, &ray(&[1, 0, 0])).is_err());
    }

    #[test]
    fn conditions() {
        let c = ctx(&[1, 1, 1], &[1, 2, 3]);
        assert!(conditions_check(&c).unwrap().is_empty());

        let state = c.state().clone();
        let obs = c.observable().clone();
        let atoms = |rays: &[Subspace<S>]| {
            rays.iter()
                .enumerate()
                .map(|(i, r)| Atom { ray: r.clone(), eigenspace: i })
                .collect::<Vec<_>>()
        };
        let bent = DeterminateStructure::from_atoms(
            state.clone(),
            obs.clone(),
            atoms(&[ray(&[1, 1, 0]), ray(&[0, 0, 1])]),
        )
        .unwrap();
        let report = conditions_check(&MeasurementContext::from_structure(bent)).unwrap();
        assert!(report.contains(&ConditionViolation::NotEigenvector { atom: 0 }));

        let doubled = DeterminateStructure::from_atoms(
            state,
            obs,
            atoms(&[ray(&[1, 0, 0]), ray(&[1, 0, 0]), ray(&[0, 0, 1])]),
        )
        .unwrap();
        let report = conditions_check(&MeasurementContext::from_structure(doubled)).unwrap();
        assert_eq!(report, vec![ConditionViolation::NotExclusive { a: 0, b: 1 }]);
    }

    #[test]
    fn t_schema() {
        let c = ctx(&[1, 1, 1], &[1, 2, 3]);
        assert!(t_schema_check(&c, &ray(&[0, 1, 0])).unwrap());
        let pair = Subspace::coordinate(3, &[0, 1]);
        assert!(t_schema_check(&c, &pair).unwrap());
        let trues = (0..3)
            .filter(|&i| pcc_valuate(&c, &TwoValuedHom { true_atom: i }, &pair).unwrap() == Verdict::True)
            .count();
        assert_eq!(trues, 2);
        assert!(t_schema_check(&c, &Subspace::full(3)).unwrap());
        assert_eq!(t_schema_check(&c, &ray(&[1, 1, 0])), Err(TruthError::NotMember));
    }

    #[test]
    fn verdict_serialization() {
        let json = serde_json::to_string(&Verdict::UndecidableInContext).unwrap();
        assert_eq!(json, "\"UNDECIDABLE-IN-CONTEXT\"");
        assert_eq!(serde_json::from_str::<Verdict>(&json).unwrap(), Verdict::UndecidableInContext);
    }
}
