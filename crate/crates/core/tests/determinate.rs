mod common;

use common::*;
use num_rational::BigRational;
use qlogic::bub_clifton::{
    boolean_frame, enumerate_homs, maximality_probe, membership, project_state, standard_sublattice_membership,
    DeterminateStructure, Observable, PureState,
};
use qlogic::event::compatible_by_commutation;
use qlogic::ks::{check_assignment, Assignment, Exclusivity, RaySystem};
use qlogic::linalg::Subspace;
use qlogic::sample::{self, Entries};
use qlogic::Scalar;
use rand::Rng;

#[test]
fn de_morgan_partition_of_atoms() {
    let mut rng = rng(1);
    for k in 0..60 {
        let n = 2 + k % 3;
        let (d, a) = random_context(&mut rng, n, Entries::Gaussian(2));
        let ds = project_state(&d, &a).unwrap();
        let mut join = Subspace::zero(n);
        let mut meet = Subspace::full(n);
        for atom in ds.atoms() {
            join = join.join(&atom.ray).unwrap();
            meet = meet.meet(&atom.ray.ortho()).unwrap();
        }
        assert_eq!(join.ortho(), meet);
        assert_eq!(ds.remainder(), &meet);
        assert!(join.join(ds.remainder()).unwrap().is_full());
    }
}

#[test]
fn membership_is_the_intersection_of_single_atom_lattices() {
    let mut rng = rng(2);
    for k in 0..80 {
        let n = 3 + k % 2;
        let (d, a) = random_context(&mut rng, n, Entries::Rational(2));
        let ds = project_state(&d, &a).unwrap();
        for _ in 0..10 {
            let p = if rng.gen_bool(0.5) { member_proposition(&mut rng, &ds) } else { sample::subspace(&mut rng, n, Entries::Rational(2)) };
            let each = ds.atoms().iter().all(|atom| {
                let single = PureState::new(atom.ray.basis()[0].clone()).unwrap();
                standard_sublattice_membership(&single, &p).unwrap()
            });
            assert_eq!(membership(&ds, &p).unwrap(), each);
        }
    }
}

#[test]
fn standard_members_compatible_with_atoms_are_determinate() {
    let mut rng = rng(3);
    let mut premise = 0;
    for k in 0..1000 {
        let n = 3 + k % 2;
        let (d, a) = random_context(&mut rng, n, Entries::Rational(2));
        let ds = project_state(&d, &a).unwrap();
        let p = if k % 2 == 0 {
            member_proposition(&mut rng, &ds)
        } else {
            sample::subspace(&mut rng, n, Entries::Rational(1))
        };
        let compatible = ds
            .atoms()
            .iter()
            .all(|atom| compatible_by_commutation(&atom.ray, &p).unwrap());
        if standard_sublattice_membership(&d, &p).unwrap() && compatible {
            premise += 1;
            assert!(membership(&ds, &p).unwrap());
        }
    }
    assert!(premise > 100, "only {premise} samples met the premise");
}

#[test]
fn standard_members_outside_the_compatible_fragment_can_fail() {
    let d = PureState::new(vec![Scalar::integer(1); 3]).unwrap();
    let a = Observable::diagonal(&[1, 2, 3].map(|x| BigRational::from_integer(x.into())));
    let ds = project_state(&d, &a).unwrap();
    let p = Subspace::ray(&[Scalar::integer(1), Scalar::integer(-1), Scalar::integer(0)]);
    assert!(standard_sublattice_membership(&d, &p).unwrap());
    assert!(!membership(&ds, &p).unwrap());
}

#[test]
fn eigenstates_collapse_onto_the_standard_lattice() {
    let mut rng = rng(4);
    for k in 0..20 {
        let n = 2 + k % 3;
        let a = sample::maximal_observable(&mut rng, n, Entries::Gaussian(2));
        let pick = rng.gen_range(0..n);
        let d = PureState::new(a.eigenpairs()[pick].space.basis()[0].clone()).unwrap();
        let ds = project_state(&d, &a).unwrap();
        assert_eq!(ds.k(), 1);
        for _ in 0..50 {
            let p = sample::subspace(&mut rng, n, Entries::Gaussian(1));
            assert_eq!(membership(&ds, &p).unwrap(), standard_sublattice_membership(&d, &p).unwrap());
        }
    }
}

#[test]
fn homs_obey_the_sum_rule_on_every_frame_context() {
    let mut rng = rng(5);
    for k in 0..40 {
        let n = 3 + k % 2;
        let (d, a) = random_context(&mut rng, n, Entries::Rational(2));
        let ds = project_state(&d, &a).unwrap();
        let frame = boolean_frame(&ds).unwrap();
        assert_eq!(frame.len(), 1 << n);
        let gens: Vec<Subspace<Scalar>> = frame.events().iter().filter(|e| e.subspace.rank() == 1).map(|e| e.subspace.clone()).collect();
        assert_eq!(gens.len(), n);
        let rs = RaySystem::new(n, gens.clone(), vec![(0..n).collect()]);
        assert!(rs.validate().is_valid());
        let homs = enumerate_homs(&ds).unwrap();
        assert_eq!(homs.len(), ds.k());
        for h in &homs {
            let bits: Vec<u8> = gens.iter().map(|g| u8::from(h.value(&ds, g).unwrap())).collect();
            let report = check_assignment(&rs, &Assignment::from_bits(&bits), Exclusivity::Orthogonality).unwrap();
            assert!(report.is_empty());
            // coarser contexts: a block of generators and the rest
            let block = rng.gen_range(1..(1u32 << n) - 1);
            let (mut inside, mut outside) = (Subspace::zero(n), Subspace::zero(n));
            for (j, g) in gens.iter().enumerate() {
                if block >> j & 1 == 1 {
                    inside = inside.join(g).unwrap();
                } else {
                    outside = outside.join(g).unwrap();
                }
            }
            let total = u8::from(h.value(&ds, &inside).unwrap()) + u8::from(h.value(&ds, &outside).unwrap());
            assert_eq!(total, 1);
        }
    }
}

fn non_member_ray<R: Rng>(rng: &mut R, ds: &DeterminateStructure<Scalar>) -> Subspace<Scalar> {
    loop {
        let r = sample::ray(rng, ds.state().dim(), Entries::Rational(2));
        if !membership(ds, &r).unwrap() {
            return r;
        }
    }
}

#[test]
fn maximality_probe_breaks_on_non_members() {
    let mut rng = rng(6);
    for k in 0..100 {
        let n = 3;
        let (d, a) = random_context(&mut rng, n, Entries::Rational(2));
        let ds = project_state(&d, &a).unwrap();
        let r = non_member_ray(&mut rng, &ds);
        let report = maximality_probe(&ds, &r).unwrap();
        assert!(!report.member);
        assert!(report.breaks(), "sample {k}: {report:?}");
        for (i, atom) in ds.atoms().iter().enumerate() {
            let split = !atom.ray.leq(&r).unwrap() && !atom.ray.is_orthogonal_to(&r).unwrap();
            assert_eq!(report.extendable[i], !split, "sample {k} atom {i}");
        }
        if k % 10 == 0 {
            let member = ds.atoms()[0].ray.clone();
            assert!(!maximality_probe(&ds, &member).unwrap().breaks());
        }
    }
}
