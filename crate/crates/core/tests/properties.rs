use std::sync::Arc;

use proptest::prelude::*;

use rootcircle::cli::ModelSpec;
use rootcircle::{BStringRep, LieType, NamedModel, Parabolic, Root, RootSystem, SplittingType};

fn splitting() -> impl Strategy<Value = SplittingType> {
    prop::collection::btree_map(-10i64..=10, 1u64..=5, 0..6).prop_map(SplittingType::from_pairs)
}

fn lie_type() -> impl Strategy<Value = LieType> {
    prop::sample::select(vec!["A1", "A3", "A5", "B2", "B4", "C3", "D4", "D5", "E6", "F4", "G2"])
        .prop_map(|s| s.parse::<LieType>().unwrap())
}

/// A type with a nonempty crossed set drawn as a bitmask.
fn parabolic() -> impl Strategy<Value = Parabolic> {
    (lie_type(), any::<u32>()).prop_map(|(lt, bits)| {
        let r = lt.rank();
        let mask = (bits % ((1 << r) - 1)) + 1;
        let crossed = (0..r).filter(|i| mask & (1 << i) != 0).map(|i| i + 1);
        Parabolic::new(Arc::new(RootSystem::build(lt)), crossed).unwrap()
    })
}

proptest! {
    #[test]
    fn dual_is_an_involution(a in splitting()) {
        prop_assert_eq!(a.dual().dual(), a);
    }

    #[test]
    fn tensor_is_commutative_and_distributes(a in splitting(), b in splitting(), c in splitting()) {
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        prop_assert_eq!(a.tensor(&b.direct_sum(&c)), a.tensor(&b).direct_sum(&a.tensor(&c)));
    }

    #[test]
    fn wedge2_of_sum(a in splitting(), b in splitting()) {
        let lhs = a.direct_sum(&b).wedge2();
        let rhs = a.wedge2().direct_sum(&a.tensor(&b)).direct_sum(&b.wedge2());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn h0_counts_nonnegative_degrees(a in splitting()) {
        let expected: u64 = a.iter_desc().filter(|(d, _)| *d >= 0).map(|(d, m)| (d as u64 + 1) * m).sum();
        prop_assert_eq!(a.h0(), expected);
    }

    #[test]
    fn grading_is_additive(p in parabolic(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let roots: Vec<Root> = p.root_system().roots().collect();
        let (x, y) = (i.get(&roots), j.get(&roots));
        prop_assert_eq!(p.degree(&x.add_scaled(y, 1)), p.degree(x) + p.degree(y));
        prop_assert_eq!(p.degree(&x.negate()), -p.degree(x));
    }

    #[test]
    fn pairing_is_linear_in_first_slot(lt in lie_type(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let rs = RootSystem::build(lt);
        let roots: Vec<Root> = rs.roots().collect();
        let (x, y, a) = (i.get(&roots), j.get(&roots), k.get(&roots));
        let sum = x.add_scaled(y, 1);
        // β + γ need not be a root, so compare through the bilinear form.
        let lhs = 2 * rs.inner(sum.coefficients(), a.coefficients());
        let aa = rs.inner(a.coefficients(), a.coefficients());
        prop_assert_eq!(lhs, (rs.pairing(x, a).unwrap() + rs.pairing(y, a).unwrap()) * aa);
        prop_assert_eq!(rs.pairing(a, a).unwrap(), 2);
    }

    #[test]
    fn omitted_roots_are_half_the_graded_ones(p in parabolic()) {
        let graded = p.root_system().roots().filter(|r| p.degree(r) != 0).count();
        prop_assert_eq!(2 * p.tangent_dimension(), graded);
    }

    #[test]
    fn subspace_and_quotient_partition_weights(k in -15i64..=15, m in 1usize..=12, cut in 0usize..12) {
        let rep = BStringRep::new(k, m).unwrap();
        let cut = cut % m;
        let mut joined = if cut == 0 { vec![] } else { rep.invariant_subspace(cut).unwrap().weights() };
        joined.extend(rep.quotient(cut).unwrap().weights());
        prop_assert_eq!(joined, rep.weights());
    }

    #[test]
    fn triviality_means_trivial_bundle(k in -20i64..=20, m in 1usize..=20) {
        let rep = BStringRep::new(k, m).unwrap();
        prop_assert_eq!(rep.is_equivariantly_trivial(), rep.to_splitting() == SplittingType::line(0, m as u64));
    }

    #[test]
    fn sections_exist_iff_degree_nonnegative(k in -20i64..=20, m in 1usize..=20) {
        let rep = BStringRep::new(k, m).unwrap();
        let d = m as i64 - 1 - k;
        prop_assert_eq!(rep.to_splitting().h0() == 0, d < 0);
    }

    #[test]
    fn model_spec_round_trips(lt in lie_type(), bits in any::<u32>()) {
        let r = lt.rank();
        let crossed: Vec<usize> = (0..r).filter(|i| bits & (1 << i) != 0).map(|i| i + 1).collect();
        let spec = ModelSpec::Crossed { lie_type: lt, crossed };
        let parsed: ModelSpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(parsed, spec);
    }

    #[test]
    fn named_model_round_trips(n in 2usize..=9, k in 1usize..=8) {
        for model in [
            NamedModel::Projective(n),
            NamedModel::Quadric(n + 1),
            NamedModel::Spinor(n + 1),
            NamedModel::Lagrangian(n),
            NamedModel::Grassmannian { k: k.min(n - 1), n }.normalized(),
        ] {
            let parsed: NamedModel = model.to_string().parse().unwrap();
            prop_assert_eq!(parsed, model);
        }
    }
}
