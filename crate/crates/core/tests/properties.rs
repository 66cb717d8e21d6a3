mod common;

use proptest::prelude::*;

use rmi_core::generate::{generate, GeneratorConfig, Mix};
use rmi_core::instance::{emit_instance, parse_instance, Instance};
use rmi_core::refgraph::{self, GraphVariant};
use rmi_core::session::{self, SolveOptions};
use rmi_core::zoo::MatroidKind;
use rmi_core::{
    Matroid, MatroidPair, MatroidSpec, OracleKind, RestrictedOracle, ShapeOracle, SolverKind,
    SubsetMask, SumQueryCapability,
};

fn mix() -> impl Strategy<Value = Mix> {
    prop_oneof![Just(Mix::Mixed), Just(Mix::PartitionM1), Just(Mix::SplitM1)]
}

fn instance(max_n: usize) -> impl Strategy<Value = Instance> {
    (any::<u64>(), 1..=max_n, mix())
        .prop_map(|(seed, n, mix)| generate(&GeneratorConfig::new(seed, n, mix)))
}

/// Rank is bounded by size, monotone and submodular, exhaustively.
fn assert_rank_axioms(m: &MatroidSpec) {
    let n = m.ground_size();
    let full = SubsetMask::full(n);
    let rank: Vec<usize> = full.subsets().map(|x| m.rank(x)).collect();
    let r = |x: SubsetMask| rank[x.bits() as usize];
    for x in full.subsets() {
        assert!(r(x) <= x.len(), "{m}: r({x}) > |{x}|");
        assert_eq!(
            r(x) == x.len(),
            m.is_independent(x),
            "{m}: rank and independence disagree at {x}"
        );
        for e in (full - x).iter() {
            assert!(
                r(x) <= r(x.with(e)) && r(x.with(e)) <= r(x) + 1,
                "{m}: unit increase fails at {x} + {e}"
            );
        }
        for y in full.subsets() {
            assert!(
                r(x | y) + r(x & y) <= r(x) + r(y),
                "{m}: submodularity fails at {x}, {y}"
            );
        }
    }
}

#[test]
fn zoo_rank_axioms() {
    for n in 4..=6 {
        for (_, m) in common::zoo(n) {
            assert_rank_axioms(&m);
        }
    }
}

#[test]
fn zoo_bases_exchange() {
    for n in 4..=6 {
        for (name, m) in common::zoo(n) {
            let full = SubsetMask::full(n);
            let r = m.rank(full);
            let bases: Vec<_> = full
                .subsets()
                .filter(|&b| b.len() == r && m.is_independent(b))
                .collect();
            for &a in &bases {
                for &b in &bases {
                    for x in (a - b).iter() {
                        assert!(
                            (b - a)
                                .iter()
                                .any(|y| m.is_independent(a.without(x).with(y))),
                            "{name}: exchange fails for {a}, {b}, {x}"
                        );
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generated_rank_axioms(inst in instance(6)) {
        assert_rank_axioms(&inst.m1);
        assert_rank_axioms(&inst.m2);
    }

    #[test]
    fn split_rank_formula_matches_greedy(seed in any::<u64>(), n in 1usize..=9) {
        let inst = generate(&GeneratorConfig::new(seed, n, Mix::SplitM1));
        let MatroidKind::Split(rep) = inst.m1.kind() else {
            panic!("split mix must produce a split first matroid");
        };
        prop_assert!(rep.validate(n).is_ok());
        for z in SubsetMask::full(n).subsets() {
            prop_assert_eq!(rep.rank_formula(z), inst.m1.rank(z), "at {}", z);
        }
    }

    #[test]
    fn closure_is_idempotent_and_extensive(inst in instance(7), bits in any::<u64>()) {
        let n = inst.n();
        let x = SubsetMask::from_bits(bits) & SubsetMask::full(n);
        for m in [&inst.m1, &inst.m2] {
            let cl = m.closure(x);
            prop_assert!(x.is_subset(cl));
            prop_assert_eq!(m.closure(cl), cl);
            prop_assert_eq!(m.rank(cl), m.rank(x));
        }
    }

    #[test]
    fn fundamental_circuits_are_exchanges(inst in instance(7), bits in any::<u64>()) {
        let n = inst.n();
        let m = &inst.m1;
        let mut i = SubsetMask::EMPTY;
        for e in (SubsetMask::from_bits(bits) & SubsetMask::full(n)).iter() {
            if m.is_independent(i.with(e)) {
                i = i.with(e);
            }
        }
        for x in (SubsetMask::full(n) - i).iter() {
            match m.fundamental_circuit(i, x) {
                Ok(c) => {
                    prop_assert!(!c.is_empty());
                    for y in i.iter() {
                        prop_assert_eq!(c.contains(y), m.is_independent(i.without(y).with(x)));
                    }
                }
                Err(_) => prop_assert!(m.is_independent(i.with(x))),
            }
        }
    }

    #[test]
    fn min_plus_max_is_sum(inst in instance(8)) {
        let pair = inst.pair();
        for x in SubsetMask::full(inst.n()).subsets() {
            prop_assert_eq!(pair.rank_min(x) + pair.rank_max(x), pair.rank_sum(x));
            prop_assert_eq!(pair.is_common_independent(x), pair.rank_min(x) == x.len());
        }
    }

    #[test]
    fn instance_round_trip(inst in instance(12)) {
        let text = emit_instance(&inst);
        let parsed = parse_instance(&text).unwrap();
        prop_assert_eq!(&parsed, &inst);
        prop_assert_eq!(emit_instance(&parsed), text);
    }

    #[test]
    fn generation_is_deterministic(seed in any::<u64>(), n in 1usize..=20, mix in mix()) {
        let config = GeneratorConfig::new(seed, n, mix);
        prop_assert_eq!(emit_instance(&generate(&config)), emit_instance(&generate(&config)));
    }

    #[test]
    fn solves_are_deterministic(inst in instance(8)) {
        let options = SolveOptions { weighted: true, audit: false };
        for solver in session::compatible_solvers(&inst, true) {
            let a = session::solve_instance(&inst, solver, options).unwrap();
            let b = session::solve_instance(&inst, solver, options).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn restricted_solvers_match_full_access(inst in instance(9)) {
        let options = SolveOptions { weighted: true, audit: false };
        let full = session::solve_instance(&inst, SolverKind::Full, options).unwrap();
        let weights: Vec<i64> = full.per_size.iter().map(|s| s.weight).collect();
        for solver in session::compatible_solvers(&inst, true) {
            let report = session::solve_instance(&inst, solver, options).unwrap();
            let found: Vec<i64> = report.per_size.iter().map(|s| s.weight).collect();
            prop_assert_eq!(&found, &weights, "{}", solver);
        }
    }

    #[test]
    fn pruning_keeps_the_cheapest_cost(inst in instance(8)) {
        let pair = inst.pair();
        let (chain, _) = refgraph::solve_full(&pair, &inst.weights).unwrap();
        for &i in &chain {
            let full = refgraph::build_exchange_graph(&pair, i, GraphVariant::Full).unwrap();
            let pruned = refgraph::build_exchange_graph(&pair, i, GraphVariant::Pruned).unwrap();
            let a = refgraph::shortest_cheapest_path(&full, &inst.weights, full.sources(), full.sinks()).unwrap();
            let b = refgraph::shortest_cheapest_path(&pruned, &inst.weights, pruned.sources(), pruned.sinks()).unwrap();
            prop_assert_eq!(a.as_ref().map(|p| (p.cost, p.len())), b.as_ref().map(|p| (p.cost, p.len())));
            if let Some(p) = b {
                let j = i ^ p.vertex_set();
                prop_assert!(pair.is_common_independent(j) && j.len() == i.len() + 1);
            }
        }
    }
}

/// Shape answers through `CI` and `Max` equal those through `Sum`, for every
/// common independent base and outside element.
fn assert_shape_agreement(pair: MatroidPair<'_>) {
    let n = pair.n();
    let mut sum = ShapeOracle::new(RestrictedOracle::new(pair, OracleKind::Sum)).unwrap();
    let mut ci_max = ShapeOracle::new(RestrictedOracle::new(pair, OracleKind::CiPlusMax)).unwrap();
    let full = SubsetMask::full(n);
    for set in full.subsets() {
        assert_eq!(sum.shape_d(set), ci_max.shape_d(set), "shape d at {set}");
        if !pair.is_common_independent(set) {
            continue;
        }
        for x in (full - set).iter() {
            assert_eq!(
                sum.shape_a(set, x),
                ci_max.shape_a(set, x),
                "shape a at {set} + {x}"
            );
            assert_eq!(
                sum.shape_b(set, x),
                ci_max.shape_b(set, x),
                "shape b at {set} + {x}"
            );
            assert_eq!(
                sum.shape_c(set, x),
                ci_max.shape_c(set, x),
                "shape c at {set} + {x}"
            );
            assert_eq!(
                sum.expands(set, x),
                ci_max.expands(set, x),
                "expands at {set} + {x}"
            );
        }
    }
    let q = ci_max.oracle().counts();
    assert_eq!((q.sum, q.min), (0, 0));
    let q = sum.oracle().counts();
    assert_eq!((q.ci, q.max, q.min), (0, 0, 0));
}

#[test]
fn ci_max_shapes_agree_on_the_zoo() {
    for n in 4..=6 {
        let z = common::zoo(n);
        for (_, a) in &z {
            for (_, b) in &z {
                assert_shape_agreement(MatroidPair::new(a, b).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ci_max_shapes_agree_on_generated(inst in instance(6)) {
        assert_shape_agreement(inst.pair());
    }
}
