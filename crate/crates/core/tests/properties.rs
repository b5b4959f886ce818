//! Randomized structural laws, shrunk to minimal counterexamples on failure.

use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ternlie_core::classify::classify;
use ternlie_core::free::{omega_commutator, FreePoly};
use ternlie_core::group::{ga15_rows, generate};
use ternlie_core::tensor::{transform_2d_closed_form, StructureTensor};
use ternlie_core::{rat, sqrt_in_field, EisMatrix, EisScalar};

fn scalars() -> impl Strategy<Value = EisScalar> {
    ((-6i64..=6, 1i64..=4), (-6i64..=6, 1i64..=4))
        .prop_map(|((an, ad), (bn, bd))| EisScalar::new(rat(an, ad), rat(bn, bd)))
}

fn small_matrix() -> impl Strategy<Value = EisMatrix> {
    proptest::collection::vec(-3i64..=3, 4).prop_map(|cells| {
        EisMatrix::from_fn(2, 2, |i, j| EisScalar::from_int(cells[2 * i + j]))
    })
}

fn regular_matrix() -> impl Strategy<Value = EisMatrix> {
    small_matrix().prop_filter("needs a unit determinant group element", |a| {
        !a.det().unwrap().is_zero()
    })
}

fn components() -> impl Strategy<Value = [EisScalar; 4]> {
    [scalars(), scalars(), scalars(), scalars()]
}

proptest! {
    #[test]
    fn reflection_is_a_ring_automorphism(x in scalars(), y in scalars()) {
        prop_assert_eq!(x.reflect().reflect(), x.clone());
        prop_assert_eq!((&x + &y).reflect(), &x.reflect() + &y.reflect());
        prop_assert_eq!((&x * &y).reflect(), &x.reflect() * &y.reflect());
    }

    #[test]
    fn norm_is_multiplicative_and_definite(x in scalars(), y in scalars()) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.norm() == rat(0, 1), x.is_zero());
        // the norm is the product with the reflected partner
        let paired = &x * &x.reflect();
        prop_assert_eq!(paired, EisScalar::from_rational(x.norm()));
    }

    #[test]
    fn nonzero_scalars_invert(x in scalars()) {
        prop_assume!(!x.is_zero());
        let inv = x.inv().unwrap();
        prop_assert_eq!(&x * &inv, EisScalar::from_int(1));
    }

    #[test]
    fn squares_always_have_reported_roots(x in scalars()) {
        let square = &x * &x;
        let root = sqrt_in_field(&square);
        prop_assert!(root.is_some(), "square {} lost its root", square);
        let r = root.unwrap();
        prop_assert_eq!(&r * &r, square);
    }

    #[test]
    fn reported_roots_square_back(x in scalars()) {
        if let Some(r) = sqrt_in_field(&x) {
            prop_assert_eq!(&r * &r, x);
        }
    }

    #[test]
    fn matrix_inverse_cancels(a in regular_matrix()) {
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.matmul(&inv), EisMatrix::identity(2));
        prop_assert_eq!(inv.matmul(&a), EisMatrix::identity(2));
    }

    #[test]
    fn solver_reproduces_known_solutions(a in regular_matrix(), x0 in -3i64..=3, x1 in -3i64..=3) {
        let x = vec![EisScalar::from_int(x0), EisScalar::from_int(x1)];
        let b = a.matvec(&x);
        let solved = a.solver().solve_vec(&b).unwrap().expect("regular system");
        prop_assert_eq!(solved, x);
    }

    #[test]
    fn sampled_tensors_satisfy_both_axioms_in_dim_two(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = StructureTensor::random_omega_symmetric(2, &mut rng);
        prop_assert!(c.check_omega_symmetry().passed());
        prop_assert!(c.check_ga15_identity().passed());
    }

    #[test]
    fn sampled_tensors_satisfy_the_symmetry_in_dim_three(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = StructureTensor::random_omega_symmetric(3, &mut rng);
        prop_assert!(c.check_omega_symmetry().passed());
    }

    #[test]
    fn closed_form_transform_matches_generic_basis_change(
        v in components(),
        a in regular_matrix(),
    ) {
        let c = StructureTensor::from_independent_2d(
            v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(),
        );
        let fast = transform_2d_closed_form(&v, &a).unwrap();
        let slow = c.change_basis(&a).unwrap().independent_2d().unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn class_labels_survive_any_regular_basis_change(seed in any::<u64>(), a in regular_matrix()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = StructureTensor::random_omega_symmetric(2, &mut rng);
        let before = classify(&c).unwrap().label;
        let after = classify(&c.change_basis(&a).unwrap()).unwrap().label;
        prop_assert_eq!(before, after);
    }

    #[test]
    fn subgroup_orders_divide_twenty(i in 0usize..20, j in 0usize..20) {
        let rows = ga15_rows();
        let sub = generate(&[rows[i].clone(), rows[j].clone()]);
        prop_assert_eq!(20 % sub.len(), 0);
    }

    #[test]
    fn commutator_is_linear_in_the_first_slot(lambda in scalars()) {
        let a = FreePoly::gen(1);
        let b = FreePoly::gen(2);
        let c = FreePoly::gen(3);
        let d = FreePoly::gen(4);
        let mixed = a.add(&b.scale(&lambda));
        let lhs = omega_commutator(&mixed, &c, &d).unwrap();
        let rhs = omega_commutator(&a, &c, &d)
            .unwrap()
            .add(&omega_commutator(&b, &c, &d).unwrap().scale(&lambda));
        prop_assert_eq!(lhs, rhs);
    }
}
