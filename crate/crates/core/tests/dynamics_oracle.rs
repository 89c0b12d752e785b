mod common;

use common::*;
use pgst_core::dynamics::{path_propagator, path_propagator_entry};
use pgst_core::{
    classify_corners, corner_fidelity, find_time_reaching, scan_fidelity, CornerPair, Hamiltonian,
    PathFactor, ProductGraph,
};
use std::f64::consts::PI;

const TIMES: [f64; 5] = [0.0, 0.37, 1.9, 7.25, 31.0];

fn small_products() -> Vec<Vec<usize>> {
    vec![
        vec![2],
        vec![5],
        vec![2, 3],
        vec![3, 4],
        vec![4, 4],
        vec![2, 2, 2],
        vec![2, 3, 4],
        vec![8, 8],
        vec![2, 2, 2, 2, 2, 2],
    ]
}

#[test]
fn corner_fidelity_matches_dense_exponential() {
    for sizes in small_products() {
        for h in [Hamiltonian::Adjacency, Hamiltonian::Laplacian] {
            let g = ProductGraph::new(&sizes, h).unwrap();
            let m = product_matrix(&g);
            for &t in &TIMES {
                let u = dense_propagator(&m, t);
                for pair in corner_pairs(g.k()).into_iter().take(12) {
                    let (a, b) = pair.coords(&g);
                    let want = u[(vertex_index(&g, &b), vertex_index(&g, &a))].norm();
                    let got = corner_fidelity::<f64>(&g, &pair, t).unwrap();
                    assert!((got - want).abs() < 1e-9, "{g} {pair} t={t}: {got} vs {want}");
                    assert_eq!(got, corner_fidelity::<f64>(&g, &pair.reversed(), t).unwrap());
                }
            }
        }
    }
}

#[test]
fn assembled_propagator_is_unitary() {
    for sizes in small_products() {
        for h in [Hamiltonian::Adjacency, Hamiltonian::Laplacian] {
            let g = ProductGraph::new(&sizes, h).unwrap();
            for &t in &TIMES {
                let factors: Vec<_> = g
                    .factors()
                    .iter()
                    .map(|f| path_propagator::<f64>(f, t, h))
                    .collect();
                let nv = g.vertex_count() as usize;
                let coords = |mut i: usize| {
                    let mut c = vec![0; g.k()];
                    for (slot, f) in c.iter_mut().zip(g.factors()).rev() {
                        *slot = i % f.n();
                        i /= f.n();
                    }
                    c
                };
                for a in 0..nv {
                    let ca = coords(a);
                    let total: f64 = (0..nv)
                        .map(|b| {
                            let cb = coords(b);
                            factors
                                .iter()
                                .enumerate()
                                .map(|(i, u)| u[cb[i]][ca[i]])
                                .fold(num_complex::Complex::new(1.0, 0.0), |x, y| x * y)
                                .norm_sqr()
                        })
                        .sum();
                    assert!((total - 1.0).abs() < 1e-10, "{g} t={t}");
                }
            }
        }
    }
}

#[test]
fn propagator_examples() {
    let z = path_propagator_entry::<f64>(&PathFactor::new(3).unwrap(), 1, 3, PI / 2f64.sqrt(), Hamiltonian::Adjacency);
    assert!((z.norm() - 1.0).abs() < 1e-10);
    let m = path_matrix(3, Hamiltonian::Adjacency);
    let u = dense_propagator(&m, PI / 2f64.sqrt());
    assert!((u[(2, 0)].norm() - 1.0).abs() < 1e-10);
    for n in 2..6 {
        let z = path_propagator_entry::<f64>(&PathFactor::new(n).unwrap(), 2, 2, 0.0, Hamiltonian::Laplacian);
        assert!((z.re - 1.0).abs() < 1e-14 && z.im == 0.0);
    }
}

#[test]
fn fidelity_example_on_six_vertices() {
    let g = ProductGraph::adjacency(&[2, 3]).unwrap();
    let pair = CornerPair::new(vec![false, false], vec![true, true]).unwrap();
    let t = PI / 2f64.sqrt();
    let v = corner_fidelity::<f64>(&g, &pair, t).unwrap();
    let u = dense_propagator(&product_matrix(&g), t);
    assert!((v - u[(5, 0)].norm()).abs() < 1e-9);
    assert!((v - t.sin().abs()).abs() < 1e-12);
    assert!((v - 0.7956).abs() < 1e-4);
}

#[test]
fn scans() {
    let g = ProductGraph::adjacency(&[2]).unwrap();
    let p = CornerPair::adjacent(1, 0).unwrap();
    let tr = scan_fidelity::<f64>(&g, &p, 2.0 * PI, 20_000).unwrap();
    assert!((tr.best_t - PI / 2.0).abs() < 1e-6);

    let g = ProductGraph::adjacency(&[3, 2]).unwrap();
    let p = CornerPair::adjacent(2, 0).unwrap();
    assert!(find_time_reaching::<f64>(&g, &p, 0.9, 500.0).unwrap().is_some());

    let g = ProductGraph::adjacency(&[4, 4]).unwrap();
    let p = CornerPair::adjacent(2, 0).unwrap();
    assert!(find_time_reaching::<f64>(&g, &p, 0.999, 100.0).unwrap().is_none());
}

#[test]
fn best_value_grows_with_horizon_on_pgst_products() {
    for sizes in [vec![3usize, 2], vec![3, 5]] {
        let g = ProductGraph::adjacency(&sizes).unwrap();
        assert!(classify_corners(&g).unwrap().all_corners());
        let p = CornerPair::adjacent(2, 0).unwrap();
        let mut last = 0.0;
        for t_max in [10.0, 50.0, 100.0, 200.0] {
            let tr = scan_fidelity::<f64>(&g, &p, t_max, (t_max * 1000.0) as usize + 1).unwrap();
            assert!(tr.best_value >= last - 1e-12, "{sizes:?} t_max={t_max}");
            last = tr.best_value;
        }
    }
}

#[test]
fn single_precision_walk() {
    let g = ProductGraph::adjacency(&[2, 3]).unwrap();
    let p = CornerPair::adjacent(2, 1).unwrap();
    for &t in &TIMES {
        let a = corner_fidelity::<f32>(&g, &p, t as f32).unwrap() as f64;
        let b = corner_fidelity::<f64>(&g, &p, t).unwrap();
        assert!((a - b).abs() < 1e-4);
    }
}
