use frustum::cliques::{count_k_cliques, enumerate_k_cliques};
use frustum::metrics::{increment_series, trajectory};
use frustum::params::validate_params;
use frustum::{generate, generate_logged, FrustumGraph, GenerateError, ModelParams, SequenceSpec, VertexId};
use num_bigint::BigInt;
use proptest::prelude::*;

use SequenceSpec::{Constant, Table};

fn frus(n: u64, f: SequenceSpec, g: SequenceSpec, t: u32) -> FrustumGraph {
    generate(&ModelParams::new(n, f, g, t)).unwrap()
}

#[test]
fn worked_counts() {
    // derived by hand: K3, three edges each closed into a K4, and so on
    let counts = frus(3, Constant(2), Constant(2), 3).counts_by_time();
    assert_eq!(counts, vec![(3, 3), (9, 18), (45, 108), (261, 648)]);
    let counts = frus(2, Constant(2), Constant(1), 3).counts_by_time();
    assert_eq!(counts, vec![(2, 1), (3, 3), (6, 9), (15, 27)]);
    let counts = frus(2, Constant(2), Constant(2), 3).counts_by_time();
    assert_eq!(counts, vec![(2, 1), (4, 6), (16, 36), (88, 216)]);
}

#[test]
fn factorial_cone() {
    let g = frus(1, Constant(1), SequenceSpec::identity(), 6);
    let mut fact = 1u64;
    for (t, (n, _)) in g.counts_by_time().into_iter().enumerate() {
        fact *= t as u64 + 1;
        assert_eq!(n, fact);
    }
    assert_eq!(g.edge_count(), 17203);
}

#[test]
fn snapshots_are_prefixes() {
    let p = ModelParams::new(2, Table(vec![1, 2, 2]), Table(vec![1, 1, 2]), 3);
    let full = generate(&p).unwrap();
    for s in 0..=3 {
        assert_eq!(full.snapshot_at(s).unwrap(), generate(&p.with_horizon(s)).unwrap());
    }
    assert!(full.snapshot_at(4).is_err());
}

#[test]
fn new_vertices_only_see_their_cap() {
    let g = frus(3, Constant(2), Constant(2), 3);
    for t in 1..=3 {
        let snap = g.snapshot_at(t).unwrap();
        for cap in g.caps().iter().filter(|c| c.time == t) {
            let mut closed: Vec<VertexId> = cap.parent_clique.iter().chain(&cap.new_vertices).copied().collect();
            closed.sort_unstable();
            for &v in &cap.new_vertices {
                let mut nbrs = snap.neighbors(v).to_vec();
                nbrs.push(v);
                nbrs.sort_unstable();
                assert_eq!(nbrs, closed, "vertex {v} of cap {}", cap.cap_id);
            }
        }
    }
}

#[test]
fn same_result_on_any_thread_count() {
    let p = ModelParams::cone(SequenceSpec::identity(), 5);
    let reference = generate(&p).unwrap();
    for threads in [1, 2, 5] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let g = pool.install(|| generate(&p).unwrap());
        assert_eq!(g, reference);
        assert_eq!(pool.install(|| enumerate_k_cliques(&g, 2)), enumerate_k_cliques(&reference, 2));
    }
}

#[test]
fn tight_clique_condition_grows_a_clique() {
    // f_t = f_{t-1} + g_{t-1}: only the newest cap is large enough to extend
    let run = generate_logged(&ModelParams::new(1, Table(vec![1, 2, 3]), Constant(1), 3)).unwrap();
    assert!(run.warnings().is_empty());
    assert_eq!(run.graph.counts_by_time(), vec![(1, 0), (2, 1), (3, 3), (4, 6)]);
    assert!(run.graph.edges().eq(FrustumGraph::complete(4).edges()));
}

#[test]
fn budget_refusal_keeps_nothing() {
    let p = ModelParams::new(3, Constant(2), Constant(2), 4).with_budget(1000);
    assert!(matches!(
        generate(&p),
        Err(GenerateError::BudgetExceeded { t: 4, projected_order, .. }) if projected_order == 261 + 2 * 648
    ));
}

fn valid_params() -> impl Strategy<Value = ModelParams> {
    (1u64..=4, 1u32..=3, prop::collection::vec((0u64..=1, 0u64..=1), 3), 1u64..=2)
        .prop_map(|(n, horizon, bumps, g1)| {
            let mut f = vec![1u64.min(n) + bumps[0].0 * (n - 1).min(1)];
            let mut g = vec![g1];
            for t in 1..3 {
                g.push(g[t - 1] + bumps[t].1);
                let cap = f[t - 1] + g[t - 1];
                f.push((f[t - 1] + bumps[t].0).min(cap));
            }
            ModelParams::new(n, Table(f), Table(g), horizon).with_budget(20_000)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn increments_follow_cap_sizes(p in valid_params()) {
        prop_assert!(validate_params(&p).is_ok(), "{p:?}");
        let run = match generate_logged(&p) {
            Ok(run) => run,
            Err(e) if e.is_resource_limit() => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let traj = trajectory(&run.graph);
        for (inc, step) in increment_series(&traj).unwrap().iter().zip(&run.steps) {
            let snap = run.graph.snapshot_at(step.t - 1).unwrap();
            let cliques = count_k_cliques(&snap, step.f as usize);
            prop_assert_eq!(u128::from(inc.delta_n), u128::from(step.g) * cliques);
            if inc.delta_n > 0 {
                let two = BigInt::from(2);
                let expected = frustum::Rational::new(BigInt::from(step.g) + two.clone() * step.f - 1, two);
                prop_assert_eq!(&inc.ratio, &expected);
            }
        }
        for meta in run.graph.vertices() {
            prop_assert_eq!(meta.id as usize, run.graph.vertices().iter().position(|m| m.id == meta.id).unwrap());
        }
    }

    #[test]
    fn generation_is_deterministic(p in valid_params()) {
        let a = generate(&p);
        let b = generate(&p);
        prop_assert_eq!(a, b);
    }
}
