use proptest::prelude::*;

use hecke_green::characters::CharTable;
use hecke_green::green::solve;
use hecke_green::partitions::{bipartitions, partitions_of, BiPartition, Partition};
use hecke_green::residual::{is_residual, MParam};
use hecke_green::springer::{join, phi, psi, split, UnipotentLabel};
use hecke_green::symbols::{a_m, similar};

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn bipartition(max: usize) -> impl Strategy<Value = BiPartition> {
    (0..=max).prop_flat_map(|n| {
        let all = bipartitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn param() -> impl Strategy<Value = MParam> {
    (-16i64..=16).prop_map(MParam::from_twice)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn split_then_join(lam in partition(12), m in param()) {
        prop_assume!(is_residual(&lam, m));
        let s = split(&lam, m).unwrap();
        prop_assert_eq!(s.result.weight(), lam.weight());
        prop_assert_eq!(join(&s.result, m).unwrap(), lam);
    }

    #[test]
    fn psi_lands_in_labels_and_inverts(a in bipartition(9), m in param()) {
        let l = psi(&a, m).unwrap();
        prop_assert!(UnipotentLabel::new(l.parts.clone(), m).is_ok());
        let class = phi(&l).unwrap();
        prop_assert!(class.contains(&a));
        prop_assert!(class.iter().all(|b| similar(b, &a, m) && a_m(b, m) == a_m(&a, m)));
    }

    #[test]
    fn swap_reverses_the_parameter(a in bipartition(9), m in param()) {
        prop_assert_eq!(a_m(&a, m), a_m(&a.swap(), m.neg()));
        prop_assert_eq!(psi(&a, m).unwrap().parts, psi(&a.swap(), m.neg()).unwrap().parts);
    }

    #[test]
    fn characters_twist_by_sign(n in 1usize..=5, i in 0usize..200) {
        let t = CharTable::new(n);
        let a = &t.irreps[i % t.irreps.len()];
        let row = t.row(a).unwrap();
        let tw = t.row(&a.tensor_sign()).unwrap();
        let eps = t.sign_row();
        for j in 0..eps.len() {
            prop_assert_eq!(tw[j], row[j] * eps[j]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn green_solutions_are_exact(n in 0usize..=3, t in -6i64..=6, seed in 0u64..1000) {
        let sol = solve(n, MParam::from_twice(t), seed).unwrap();
        prop_assert!(sol.residual().unwrap().is_zero());
        prop_assert!(sol.check_invariants().is_ok());
    }
}
