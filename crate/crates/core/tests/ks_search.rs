mod common;

use common::*;
use qlogic::datasets::{self, builtin};
use qlogic::ks::{check_assignment, export_cnf, find_coloring, Assignment, Coloring, Exclusivity};

const RULES: [Exclusivity; 2] = [Exclusivity::Contexts, Exclusivity::Orthogonality];

#[test]
fn builtin_verdicts_match_external_solver() {
    for ds in datasets::all() {
        for rule in RULES {
            let cnf = export_cnf(&ds.system, rule).unwrap();
            let (solver, model) = solver_sat(&cnf);
            let ours = find_coloring(&ds.system, rule).unwrap();
            assert_eq!(ours.is_sat(), solver, "{} {}", ds.name, rule);
            if let Some(bits) = model {
                let report = check_assignment(&ds.system, &Assignment::from_bits(&bits), rule).unwrap();
                assert!(report.is_empty(), "{} solver model fails our checker", ds.name);
            }
        }
    }
}

#[test]
fn random_subsystems_match_solver_and_brute_force() {
    let mut rng = rng(101);
    let sources = [builtin("cabello18").unwrap(), builtin("peres33").unwrap(), builtin("lisonek21").unwrap()];
    let mut sat_seen = 0;
    let mut unsat_seen = 0;
    for k in 0..100 {
        let src = &sources[k % sources.len()].system;
        let sub = subsystem(src, &random_contexts(&mut rng, src.contexts().len()));
        assert!(sub.validate().is_valid());
        let rule = RULES[k % 2];
        let ours = find_coloring(&sub, rule).unwrap();
        let (solver, _) = solver_sat(&export_cnf(&sub, rule).unwrap());
        assert_eq!(ours.is_sat(), solver, "sample {k}");
        if sub.rays().len() <= 20 {
            let brute = brute_force_sat(sub.rays().len(), sub.contexts(), &sub.exclusive_pairs(rule).unwrap());
            assert_eq!(ours.is_sat(), brute, "sample {k}");
        }
        if let Coloring::Sat { assignment, .. } = &ours {
            assert!(check_assignment(&sub, assignment, rule).unwrap().is_empty());
            sat_seen += 1;
        } else {
            unsat_seen += 1;
        }
    }
    assert!(sat_seen > 0 && unsat_seen > 0, "sat {sat_seen} unsat {unsat_seen}");
}

#[test]
fn plane_systems_are_always_colourable() {
    let mut rng = rng(202);
    for _ in 0..50 {
        let rs = random_plane_system(&mut rng);
        assert!(rs.validate().is_valid(), "{}", rs.validate());
        for rule in RULES {
            let coloring = find_coloring(&rs, rule).unwrap();
            let a = coloring.assignment().expect("plane systems are SAT");
            assert!(check_assignment(&rs, a, rule).unwrap().is_empty());
        }
    }
}

#[test]
fn unsat_is_invariant_under_relabelling() {
    let mut rng = rng(303);
    for name in ["cabello18", "peres33", "lisonek21"] {
        let rs = builtin(name).unwrap().system;
        for _ in 0..10 {
            let rays = permutation(&mut rng, rs.rays().len());
            let order = permutation(&mut rng, rs.contexts().len());
            let shuffled = rs.permuted(&rays, &order);
            assert!(shuffled.validate().is_valid());
            assert!(!find_coloring(&shuffled, Exclusivity::Orthogonality).unwrap().is_sat(), "{name}");
        }
    }
}

#[test]
fn witnesses_and_certificates_are_reproducible() {
    let cab = builtin("cabello18").unwrap().system;
    let a = find_coloring(&cab, Exclusivity::Orthogonality).unwrap();
    let b = find_coloring(&cab, Exclusivity::Orthogonality).unwrap();
    assert_eq!(a, b);
    match a {
        Coloring::Unsat(cert) => {
            assert!(cert.nodes > 0);
            assert_eq!(cert.tree_hash.len(), 64);
        }
        Coloring::Sat { .. } => panic!("cabello18 is not colourable"),
    }
    let cut = cab.without_context(4);
    assert_eq!(
        find_coloring(&cut, Exclusivity::Contexts).unwrap(),
        find_coloring(&cut, Exclusivity::Contexts).unwrap()
    );
}

#[test]
fn cnf_clause_counts() {
    let cab = builtin("cabello18").unwrap().system;
    let cnf = export_cnf(&cab, Exclusivity::Contexts).unwrap();
    let header = cnf.lines().next().unwrap();
    assert_eq!(header, format!("p cnf 18 {}", 9 + 54));
    let alo = cnf.lines().skip(1).filter(|l| !l.starts_with('-')).count();
    assert_eq!(alo, 9);
    let control = builtin("dim2-control").unwrap().system;
    assert_eq!(export_cnf(&control, Exclusivity::Contexts).unwrap().lines().count(), 5);
    // pairs orthogonal across bases but never completed to a listed basis
    let extra = export_cnf(&cab, Exclusivity::Orthogonality).unwrap();
    assert_eq!(extra.lines().next().unwrap(), "p cnf 18 72");
}

#[test]
fn triads_alone_do_not_forbid_colouring_peres() {
    let peres = builtin("peres33").unwrap().system;
    let coloring = find_coloring(&peres, Exclusivity::Contexts).unwrap();
    let a = coloring.assignment().unwrap();
    assert!(check_assignment(&peres, a, Exclusivity::Contexts).unwrap().is_empty());
    assert!(!check_assignment(&peres, a, Exclusivity::Orthogonality).unwrap().is_empty());
}
