mod common;

use common::integer_coordinates;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use pgst_core::decide::RelationLattice;
use pgst_core::lattice::integer_kernel_i64;
use pgst_core::{decide_pgst, spectrum_table, strong_cospectrality, CornerPair, ProductGraph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn dot(row: &[i64], v: &[i64]) -> i64 {
    row.iter().zip(v).map(|(a, b)| a * b).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn kernel_is_saturated(entries in prop::collection::vec(-5i64..=5, 18)) {
        let m: Vec<Vec<i64>> = entries.chunks(6).map(|c| c.to_vec()).collect();
        let basis = integer_kernel_i64(&m);
        for v in &basis {
            let v64: Vec<i64> = v.iter().map(|x| i64::try_from(x).unwrap()).collect();
            prop_assert!(m.iter().all(|r| dot(r, &v64) == 0));
        }
        // brute force over [-10, 10]^6: enumerate five coordinates, solve for one
        let solve_col = (0..6).rev().find(|&c| m.iter().any(|r| r[c] != 0));
        let Some(sc) = solve_col else {
            prop_assert_eq!(basis.len(), 6);
            return Ok(());
        };
        let free: Vec<usize> = (0..6).filter(|&c| c != sc).collect();
        let mut v = [0i64; 6];
        let mut found = 0usize;
        for code in 0..21i64.pow(5) {
            let mut c = code;
            for &f in &free {
                v[f] = c % 21 - 10;
                c /= 21;
            }
            let pivot_row = m.iter().find(|r| r[sc] != 0).unwrap();
            v[sc] = 0;
            let rest = dot(pivot_row, &v);
            if rest % pivot_row[sc] != 0 {
                continue;
            }
            v[sc] = -rest / pivot_row[sc];
            if v[sc].abs() > 10 || m.iter().any(|r| dot(r, &v) != 0) {
                continue;
            }
            found += 1;
            let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            prop_assert!(integer_coordinates(&basis, &big).is_some(), "{:?} not in span", v);
        }
        prop_assert!(found >= 1);
    }
}

#[test]
fn parity_is_even_on_pgst_lattices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for sizes in [vec![2usize, 3], vec![3, 4], vec![16, 9], vec![7, 16], vec![3, 2, 16]] {
        let g = ProductGraph::adjacency(&sizes).unwrap();
        let pair = CornerPair::adjacent(g.k(), 0).unwrap();
        assert!(decide_pgst(&g, &pair).unwrap().is_pgst(), "{g}");
        let t = spectrum_table(&g).unwrap();
        let lat = RelationLattice::build(&t);
        let rep = strong_cospectrality(&g, &pair).unwrap();
        let minus: Vec<bool> = rep.sign_map.iter().map(|(_, s)| *s < 0).collect();
        for _ in 0..1000 {
            let mut combo = vec![BigInt::zero(); lat.coordinates.len()];
            for b in &lat.basis {
                let c = BigInt::from(rng.gen_range(-5i64..=5));
                for (x, y) in combo.iter_mut().zip(b) {
                    *x += &c * y;
                }
            }
            let parity: BigInt = combo
                .iter()
                .zip(&minus)
                .filter(|(_, &m)| m)
                .map(|(x, _)| x)
                .sum();
            assert!(parity.is_even());
        }
    }
}
