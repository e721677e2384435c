//! End-to-end acceptance checks. Runs without the libtest harness so that each
//! criterion prints one PASS/FAIL line; the process fails if any criterion does.

mod common;

use std::time::{Duration, Instant};

use clap::Parser;
use common::*;
use qlogic::bub_clifton::{enumerate_homs, membership, project_state, standard_sublattice_membership, PureState};
use qlogic::cli::{run, Cli, KsReport, KsVerdict};
use qlogic::datasets::builtin;
use qlogic::event::{compatible_by_closure, compatible_by_commutation};
use qlogic::ks::{check_assignment, export_cnf, find_coloring, Coloring, Exclusivity};
use qlogic::laws::{check_laws, Law};
use qlogic::linalg::inner;
use qlogic::sample::{self, Entries};
use qlogic::truth::{contextual_state, expectation, t_schema_check, MeasurementContext};
use qlogic::Scalar;
use rand::Rng;
use rayon::prelude::*;

const CABELLO_LIMIT: Duration = Duration::from_secs(5);
const PERES_LIMIT: Duration = Duration::from_secs(60);
const LATTICE_LAWS: [Law; 4] = [Law::DeMorgan, Law::DoubleOrtho, Law::OrderReversal, Law::Orthomodular];

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn ks_cli(name: &str) -> (KsReport, Duration) {
    let cli = Cli::try_parse_from(["qlogic", "--json", "ks-verify", "--builtin", name]).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let start = Instant::now();
    run(&cli, &mut out, &mut err);
    let elapsed = start.elapsed();
    (serde_json::from_slice(&out).unwrap(), elapsed)
}

fn ks_non_colourability() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for (name, expected, limit) in [
        ("cabello18", KsVerdict::Unsat, Some(CABELLO_LIMIT)),
        ("peres33", KsVerdict::Unsat, Some(PERES_LIMIT)),
        ("lisonek21", KsVerdict::Unsat, None),
        ("dim2-control", KsVerdict::Sat, None),
    ] {
        let (report, elapsed) = ks_cli(name);
        let in_time = limit.is_none_or(|l| elapsed < l);
        let system = builtin(name).unwrap().system;
        let (solver, _) = solver_sat(&export_cnf(&system, Exclusivity::Orthogonality).unwrap());
        let agrees = solver == (expected == KsVerdict::Sat);
        pass &= report.verdict == expected && in_time && agrees;
        notes.push(format!("{name} {:?} {:.3}s", report.verdict, elapsed.as_secs_f64()));
    }
    outcome(pass, notes.join(", "))
}

fn cabello_criticality() -> Outcome {
    let cab = builtin("cabello18").unwrap().system;
    let mut sat = 0;
    for i in 0..cab.contexts().len() {
        let cut = cab.without_context(i);
        if let Coloring::Sat { assignment, .. } = find_coloring(&cut, Exclusivity::Orthogonality).unwrap() {
            if check_assignment(&cut, &assignment, Exclusivity::Orthogonality).unwrap().is_empty() {
                sat += 1;
            }
        }
    }
    outcome(sat == cab.contexts().len(), format!("{sat}/{} reduced systems colourable with clean witnesses", cab.contexts().len()))
}

fn hom_count() -> Outcome {
    let results: Vec<bool> = (0..200u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng(3000 + i);
            let n = 3 + (i as usize % 2);
            let (d, a) = random_context(&mut rng, n, Entries::Rational(3));
            let k = a
                .eigenpairs()
                .iter()
                .filter(|p| inner(d.vector(), &p.space.basis()[0]) != Scalar::integer(0))
                .count();
            let ds = project_state(&d, &a).unwrap();
            let homs = enumerate_homs(&ds).unwrap();
            homs.len() == k
                && homs.iter().all(|h| {
                    ds.atoms()
                        .iter()
                        .filter(|atom| h.value(&ds, &atom.ray).unwrap())
                        .count()
                        == 1
                })
        })
        .collect();
    let good = results.iter().filter(|&&ok| ok).count();
    outcome(good == 200, format!("{good}/200 contexts with exactly k homs, one true atom each"))
}

fn eigenstate_collapse() -> Outcome {
    let results: Vec<usize> = (0..50u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng(4000 + i);
            let n = 2 + (i as usize % 3);
            let a = sample::maximal_observable(&mut rng, n, Entries::Gaussian(2));
            let pick = rng.gen_range(0..n);
            let d = PureState::new(a.eigenpairs()[pick].space.basis()[0].clone()).unwrap();
            let ds = project_state(&d, &a).unwrap();
            (0..1000)
                .filter(|_| {
                    let p = sample::subspace(&mut rng, n, Entries::Gaussian(1));
                    membership(&ds, &p).unwrap() != standard_sublattice_membership(&d, &p).unwrap()
                })
                .count()
        })
        .collect();
    let disagreements: usize = results.iter().sum();
    outcome(disagreements == 0, format!("50 x 1000 propositions, {disagreements} disagreements"))
}

fn trace_equality() -> Outcome {
    let results: Vec<(bool, bool)> = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng(5000 + i);
            let n = 2 + (i as usize % 3);
            let (d, a) = loop {
                let (d, a) = random_context(&mut rng, n, Entries::Gaussian(2));
                if project_state(&d, &a).unwrap().k() >= 2 {
                    break (d, a);
                }
            };
            let ctx = MeasurementContext::new(d, a).unwrap();
            let rho = contextual_state(&ctx).unwrap();
            let equal = (0..100).all(|_| {
                let b = frame_observable(&mut rng, ctx.observable());
                expectation(ctx.state(), &b).unwrap() == expectation(&rho, &b).unwrap()
            });
            let separated = (0..200).any(|_| {
                let b = sample::maximal_observable(&mut rng, n, Entries::Rational(2));
                expectation(ctx.state(), &b).unwrap() != expectation(&rho, &b).unwrap()
            });
            (equal, separated)
        })
        .collect();
    let equal = results.iter().filter(|r| r.0).count();
    let separated = results.iter().filter(|r| r.1).count();
    outcome(
        equal == 100 && separated == 100,
        format!("frame equality in {equal}/100 contexts, strict inequality found in {separated}/100"),
    )
}

fn lattice_laws() -> Outcome {
    const CHUNKS: u64 = 20;
    const PER_CHUNK: usize = 500;
    let reports: Vec<_> = (0..CHUNKS)
        .into_par_iter()
        .map(|c| check_laws(6000 + c, PER_CHUNK, &[2, 3, 4, 5], &LATTICE_LAWS).unwrap())
        .collect();
    let mut notes = Vec::new();
    let mut pass = true;
    for law in LATTICE_LAWS {
        let (checked, failed) = reports
            .iter()
            .flat_map(|r| r.tallies.iter().filter(|t| t.law == law))
            .fold((0, 0), |(c, f), t| (c + t.checked, f + t.failed));
        pass &= checked >= 10_000 && failed == 0;
        notes.push(format!("{} {failed}/{checked}", law.name()));
    }
    let witness = reports.iter().find_map(|r| r.distributivity_witness.clone());
    pass &= witness.is_some();
    match witness {
        Some(w) => notes.push(format!("dim-2 witness {w:?}")),
        None => notes.push("no distributivity witness".into()),
    }
    outcome(pass, notes.join(", "))
}

fn oracle_agreement() -> Outcome {
    let results: Vec<(bool, bool)> = (0..1000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng(7000 + i);
            let n = 2 + (i as usize % 3);
            let a = sample::subspace(&mut rng, n, Entries::Gaussian(2));
            let b = if i % 2 == 0 {
                sample::subspace(&mut rng, n, Entries::Gaussian(2))
            } else {
                let inner_part = sample::subspace(&mut rng, n, Entries::Gaussian(2));
                let outer_part = sample::subspace(&mut rng, n, Entries::Gaussian(2));
                a.meet(&inner_part).unwrap().join(&a.ortho().meet(&outer_part).unwrap()).unwrap()
            };
            let commute = compatible_by_commutation(&a, &b).unwrap();
            (commute == compatible_by_closure(&a, &b).unwrap(), commute)
        })
        .collect();
    let agree = results.iter().filter(|r| r.0).count();
    let compatible = results.iter().filter(|r| r.1).count();
    outcome(
        agree == 1000 && compatible > 0 && compatible < 1000,
        format!("{agree}/1000 agree ({compatible} compatible, {} not)", 1000 - compatible),
    )
}

fn t_schema() -> Outcome {
    let mut checks = 0;
    let mut failures = 0;
    for n in [2usize, 3] {
        for i in 0..20u64 {
            let mut rng = rng(8000 + 100 * n as u64 + i);
            let (d, a) = random_context(&mut rng, n, Entries::Gaussian(2));
            let ctx = MeasurementContext::new(d, a).unwrap();
            let frame = qlogic::bub_clifton::boolean_frame(ctx.structure()).unwrap();
            if frame.len() != 1 << n {
                failures += 1;
            }
            for e in frame.events() {
                checks += ctx.structure().k();
                if !t_schema_check(&ctx, &e.subspace).unwrap() {
                    failures += 1;
                }
            }
        }
    }
    outcome(failures == 0, format!("{checks} proposition-hom pairs over 40 frames, {failures} failures"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("ks non-colourability", ks_non_colourability),
        ("cabello criticality", cabello_criticality),
        ("hom count", hom_count),
        ("eigenstate collapse", eigenstate_collapse),
        ("trace equality", trace_equality),
        ("lattice laws", lattice_laws),
        ("compatibility oracles", oracle_agreement),
        ("t-schema", t_schema),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        println!(
            "criterion {} {name}: {} ({}; {:.2}s)",
            i + 1,
            if result.pass { "PASS" } else { "FAIL" },
            result.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!result.pass);
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
