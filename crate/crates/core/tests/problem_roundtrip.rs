use amfd::problems::{
    build_gcp, build_mcp, build_misp, build_qap, build_tsp, decode_gcp, decode_mcp, decode_misp, decode_qap,
    decode_tsp, encode_assignment, encode_tour, QapInstance, TspInstance, WeightedGraph,
};
use amfd::{QuboModel, SpinVector};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_states(n: usize) -> impl Iterator<Item = SpinVector> {
    (0..1u64 << n).map(move |mask| SpinVector::from_mask(n, mask))
}

fn ground_states(m: &QuboModel) -> (f64, Vec<SpinVector>) {
    let states: Vec<(f64, SpinVector)> = all_states(m.n_spin()).map(|s| (m.energy(&s).unwrap(), s)).collect();
    let best = states.iter().map(|(e, _)| *e).fold(f64::INFINITY, f64::min);
    let tol = 1e-9 * best.abs().max(1.0);
    (best, states.into_iter().filter(|(e, _)| *e <= best + tol).map(|(_, s)| s).collect())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> WeightedGraph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    WeightedGraph::unweighted(n, pairs).unwrap()
}

fn int_matrix(rng: &mut ChaCha8Rng, n: usize, max: u32, symmetric: bool) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && (!symmetric || j > i) {
                let v = rng.random_range(0..=max) as f64;
                m[i][j] = v;
                if symmetric {
                    m[j][i] = v;
                }
            }
        }
    }
    m
}

fn sq(v: f64) -> f64 {
    v * v
}

#[test]
fn triangle_cut_minimum() {
    let g = WeightedGraph::unweighted(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    let (m, _) = build_mcp(&g).unwrap();
    let (best, states) = ground_states(&m);
    assert_eq!(best, -2.0);
    assert_eq!(states.len(), 6);
    for s in &states {
        assert_eq!(decode_mcp(&g, s).unwrap().objective, 2.0);
    }
}

#[test]
fn path_independent_set_minimum() {
    let g = WeightedGraph::unweighted(3, [(0, 1), (1, 2)]).unwrap();
    let (m, _) = build_misp(&g, 2.0).unwrap();
    let (best, states) = ground_states(&m);
    assert_eq!(best, -2.0);
    assert_eq!(states, vec![SpinVector::new(vec![1, 0, 1]).unwrap()]);
    assert!(decode_misp(&g, &states[0]).unwrap().feasible);
}

#[test]
fn three_city_tour_minimum() {
    let inst = TspInstance::new(vec![vec![0.0, 1.0, 2.0], vec![1.0, 0.0, 3.0], vec![2.0, 3.0, 0.0]]).unwrap();
    let (m, enc) = build_tsp(&inst).unwrap();
    let (best, states) = ground_states(&m);
    assert!((best - 6.0).abs() < 1e-12);
    for s in &states {
        let d = decode_tsp(&inst, s, &enc).unwrap();
        assert!(d.feasible);
        assert_eq!(d.objective, 6.0);
    }
}

#[test]
fn two_facility_assignment_minimum() {
    let inst =
        QapInstance::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![vec![0.0, 3.0], vec![3.0, 0.0]]).unwrap();
    let (m, enc) = build_qap(&inst).unwrap();
    let (best, states) = ground_states(&m);
    assert_eq!(best, 6.0);
    // With A = 3 a lone cell, or two cells sharing a row or column, also pays 6.
    let feasible: Vec<_> = states.iter().map(|s| decode_qap(&inst, s, &enc).unwrap()).filter(|d| d.feasible).collect();
    assert_eq!(feasible.len(), 2);
    assert!(feasible.iter().all(|d| d.objective == 6.0));
    assert_eq!(states.len(), 2 + 4 + 4);
    let doubled = amfd::problems::build_qap_with_penalty(&inst, 6.0).unwrap().0;
    let (best, states) = ground_states(&doubled);
    assert_eq!((best, states.len()), (6.0, 2));
}

#[test]
fn single_edge_coloring_minimum() {
    let g = WeightedGraph::unweighted(2, [(0, 1)]).unwrap();
    let (m, enc) = build_gcp(&g, Some(2)).unwrap();
    let (best, states) = ground_states(&m);
    assert_eq!(best, 2.0);
    for s in &states {
        let d = decode_gcp(&g, s, &enc).unwrap();
        assert!(d.feasible);
        assert_eq!(d.objective, 2.0);
    }
}

#[test]
fn mcp_energy_is_negative_cut_everywhere() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let n = rng.random_range(2..=10);
        let pairs: Vec<_> = random_graph(&mut rng, n, 0.5)
            .edges()
            .iter()
            .map(|e| (e.u, e.v, rng.random_range(-3..=3) as f64))
            .collect();
        let g = WeightedGraph::new(n, pairs).unwrap();
        let (m, _) = build_mcp(&g).unwrap();
        for s in all_states(n) {
            assert_eq!(m.energy(&s).unwrap(), -decode_mcp(&g, &s).unwrap().objective);
        }
    }
}

#[test]
fn misp_energy_is_size_plus_conflicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let n = rng.random_range(2..=10);
        let g = random_graph(&mut rng, n, 0.4);
        let (m, _) = build_misp(&g, 2.0).unwrap();
        for s in all_states(n) {
            let conflicts = g.edges().iter().filter(|e| s[e.u] == 1 && s[e.v] == 1).count();
            let d = decode_misp(&g, &s).unwrap();
            assert_eq!(m.energy(&s).unwrap(), -d.objective + 2.0 * conflicts as f64);
            assert_eq!(d.feasible, conflicts == 0);
        }
    }
}

#[test]
fn misp_minimizers_are_independent_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let n = rng.random_range(1..=8);
        let density = rng.random_range(0.1..0.9);
        let g = random_graph(&mut rng, n, density);
        let (m, _) = build_misp(&g, 2.0).unwrap();
        let (best, states) = ground_states(&m);
        let alpha =
            all_states(n).filter(|s| decode_misp(&g, s).unwrap().feasible).map(|s| s.count_ones()).max().unwrap();
        assert_eq!(best, -(alpha as f64));
        assert!(states.iter().all(|s| decode_misp(&g, s).unwrap().feasible));
    }
}

#[test]
fn tsp_energy_is_length_plus_penalties() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10 {
        let sym = rng.random_bool(0.5);
        let d = int_matrix(&mut rng, 4, 9, sym);
        let inst = TspInstance::new(d.clone()).unwrap();
        let (m, enc) = build_tsp(&inst).unwrap();
        let a = inst.penalty_weight();
        let free = 3;
        for s in all_states(9) {
            let x = |i: usize, k: usize| s[i * free + k] as f64;
            let mut e = 0.0;
            for k in 0..free - 1 {
                for i in 0..free {
                    for j in 0..free {
                        if i != j {
                            e += d[i][j] * x(i, k) * x(j, k + 1);
                        }
                    }
                }
            }
            for i in 0..free {
                e += d[3][i] * x(i, 0) + d[i][3] * x(i, free - 1);
            }
            for k in 0..free {
                e += a * sq(1.0 - (0..free).map(|i| x(i, k)).sum::<f64>());
            }
            for i in 0..free {
                e += a * sq(1.0 - (0..free).map(|k| x(i, k)).sum::<f64>());
            }
            assert!((m.energy(&s).unwrap() - e).abs() < 1e-9);
            let dec = decode_tsp(&inst, &s, &enc).unwrap();
            if dec.feasible {
                assert!((m.energy(&s).unwrap() - dec.objective).abs() < 1e-9);
            }
        }
        let best = permutations(3)
            .iter()
            .map(|p| decode_tsp(&inst, &encode_tour(&inst, p).unwrap(), &enc).unwrap().objective)
            .fold(f64::INFINITY, f64::min);
        let (qubo_best, states) = ground_states(&m);
        assert!((qubo_best - best).abs() < 1e-9);
        assert!(states.iter().all(|s| decode_tsp(&inst, s, &enc).unwrap().feasible));
    }
}

#[test]
fn qap_energy_on_permutations_is_cost() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let n = rng.random_range(2..=6);
        let (sf, sd) = (rng.random_bool(0.5), rng.random_bool(0.5));
        let f = int_matrix(&mut rng, n, 9, sf);
        let d = int_matrix(&mut rng, n, 9, sd);
        let inst = QapInstance::from_rows(f, d).unwrap();
        let (m, enc) = build_qap(&inst).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        for _ in 0..10 {
            perm.shuffle(&mut rng);
            let s = encode_assignment(&inst, &perm).unwrap();
            let dec = decode_qap(&inst, &s, &enc).unwrap();
            assert!(dec.feasible);
            assert_eq!(dec.objective, inst.cost(&perm));
            let penalty = m.energy(&s).unwrap() - dec.objective;
            assert!(penalty.abs() <= 1e-9 * dec.objective.abs().max(1.0), "penalty residue {penalty}");
        }
    }
}

#[test]
fn tsp_energy_on_permutations_is_length() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..20 {
        let n = rng.random_range(3..=9);
        let sym = rng.random_bool(0.5);
        let inst = TspInstance::new(int_matrix(&mut rng, n, 100, sym)).unwrap();
        let (m, enc) = build_tsp(&inst).unwrap();
        let mut order: Vec<usize> = (0..n - 1).collect();
        for _ in 0..10 {
            order.shuffle(&mut rng);
            let s = encode_tour(&inst, &order).unwrap();
            let dec = decode_tsp(&inst, &s, &enc).unwrap();
            let penalty = m.energy(&s).unwrap() - dec.objective;
            assert!(penalty.abs() <= 1e-9 * dec.objective.max(1.0), "penalty residue {penalty}");
        }
    }
}

#[test]
fn gcp_energy_matches_expanded_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let nv = rng.random_range(1..=3);
        let nc = rng.random_range(1..=3);
        let g = random_graph(&mut rng, nv, 0.6);
        let (m, enc) = build_gcp(&g, Some(nc)).unwrap();
        let n = m.n_spin();
        for s in all_states(n) {
            let x = |i: usize, k: usize| s[i * nc + k] as f64;
            let y = |k: usize| s[nv * nc + k] as f64;
            let mut e = 0.0;
            for k in 0..nc {
                e += y(k) + 2.0 * (1.0 - y(k)) * (0..nv).map(|i| x(i, k)).sum::<f64>();
                for ed in g.edges() {
                    e += 2.0 * x(ed.u, k) * x(ed.v, k);
                }
            }
            for i in 0..nv {
                e += 2.0 * sq(1.0 - (0..nc).map(|k| x(i, k)).sum::<f64>());
            }
            assert_eq!(m.energy(&s).unwrap(), e);
            let dec = decode_gcp(&g, &s, &enc).unwrap();
            if dec.feasible && (0..nc).all(|k| y(k) == 1.0 || (0..nv).all(|i| x(i, k) == 0.0)) {
                let raised = (0..nc).filter(|&k| y(k) == 1.0).count() as f64;
                assert_eq!(e, raised);
            }
        }
    }
}

proptest! {
    #[test]
    fn tour_encoding_round_trips(n in 3usize..12, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = TspInstance::new(int_matrix(&mut rng, n, 50, true)).unwrap();
        let mut order: Vec<usize> = (0..n - 1).collect();
        order.shuffle(&mut rng);
        let s = encode_tour(&inst, &order).unwrap();
        let dec = decode_tsp(&inst, &s, &inst.encoding()).unwrap();
        let mut expected = vec![n - 1];
        expected.extend(order);
        prop_assert_eq!(dec.witness, amfd::problems::Witness::Tour(Some(expected.clone())));
        prop_assert_eq!(dec.objective, inst.tour_length(&expected));
    }
}
