//! Randomised checks of the orthomodular lattice laws on subspaces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::event::{compatible_by_closure, compatible_by_commutation, orthomodular_check, violates_distributivity, EventError};
use crate::linalg::Subspace;
use crate::sample::{self, Entries};
use crate::scalar::QuadComplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    DeMorgan,
    DoubleOrtho,
    OrderReversal,
    Orthomodular,
    CompatibilityOracles,
}

impl Law {
    pub const ALL: [Law; 5] = [
        Law::DeMorgan,
        Law::DoubleOrtho,
        Law::OrderReversal,
        Law::Orthomodular,
        Law::CompatibilityOracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::DeMorgan => "de-morgan",
            Law::DoubleOrtho => "double-ortho",
            Law::OrderReversal => "order-reversal",
            Law::Orthomodular => "orthomodular",
            Law::CompatibilityOracles => "compatibility-oracles",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawTally {
    pub law: Law,
    pub checked: usize,
    pub failed: usize,
    /// Compatible pairs seen; only tracked for the oracle comparison.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positive: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub seed: u64,
    pub samples: usize,
    pub dims: Vec<usize>,
    pub tallies: Vec<LawTally>,
    /// Three rays of the plane breaking distributivity, as basis vectors.
    pub distributivity_witness: Option<[Vec<String>; 3]>,
}

impl LawReport {
    pub fn passes(&self) -> bool {
        self.tallies.iter().all(|t| t.failed == 0) && self.distributivity_witness.is_some()
    }
}

/// Runs each of `laws` on `samples` random pairs, cycling through `dims`.
pub fn check_laws(seed: u64, samples: usize, dims: &[usize], laws: &[Law]) -> Result<LawReport, EventError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = Entries::Gaussian(2);
    let mut tallies: Vec<LawTally> = laws
        .iter()
        .map(|&law| LawTally {
            law,
            checked: 0,
            failed: 0,
            positive: (law == Law::CompatibilityOracles).then_some(0),
        })
        .collect();
    for k in 0..samples {
        let n = dims[k % dims.len()];
        let s = sample::subspace(&mut rng, n, entries);
        let t = pair_partner(&mut rng, &s, entries)?;
        for tally in tallies.iter_mut() {
            let ok = match tally.law {
                Law::DeMorgan => s.join(&t)?.ortho() == s.ortho().meet(&t.ortho())?,
                Law::DoubleOrtho => s.ortho().ortho() == s,
                Law::OrderReversal => t.ortho().leq(&s.meet(&t)?.ortho())?,
                Law::Orthomodular => orthomodular_check(&s.meet(&t)?, &t)?,
                Law::CompatibilityOracles => {
                    let commute = compatible_by_commutation(&s, &t)?;
                    if commute {
                        *tally.positive.as_mut().expect("oracle tally") += 1;
                    }
                    commute == compatible_by_closure(&s, &t)?
                }
            };
            tally.checked += 1;
            tally.failed += usize::from(!ok);
        }
    }
    Ok(LawReport {
        seed,
        samples,
        dims: dims.to_vec(),
        tallies,
        distributivity_witness: distributivity_witness(&mut rng)?,
    })
}

/// A second subspace that is compatible with `s` about half the time, so both
/// branches of the oracle comparison get exercised.
fn pair_partner<R: Rng>(rng: &mut R, s: &Subspace<QuadComplex>, entries: Entries) -> Result<Subspace<QuadComplex>, EventError> {
    let n = s.ambient_dim();
    if rng.gen_bool(0.5) {
        return Ok(sample::subspace(rng, n, entries));
    }
    let inner = sample::subspace(rng, n, entries);
    let outer = sample::subspace(rng, n, entries);
    Ok(s.meet(&inner)?.join(&s.ortho().meet(&outer)?)?)
}

/// Searches random triples of rays in the plane for a distributivity failure.
fn distributivity_witness<R: Rng>(rng: &mut R) -> Result<Option<[Vec<String>; 3]>, EventError> {
    for _ in 0..1000 {
        let rays: Vec<Subspace<QuadComplex>> = (0..3).map(|_| sample::ray(rng, 2, Entries::Rational(3))).collect();
        if violates_distributivity(&rays[0], &rays[1], &rays[2])? {
            let show = |s: &Subspace<QuadComplex>| s.basis()[0].iter().map(|x| x.to_string()).collect();
            return Ok(Some([show(&rays[0]), show(&rays[1]), show(&rays[2])]));
        }
    }
    Ok(None)
}
