use spcrystal::verify::{bounded_matrices, closed_ssot};
use spcrystal::*;

/// Dimension of the irreducible representation of the symplectic group of rank `m`,
/// by the product formula over positive roots.
fn weyl_dimension(lambda: &Partition, m: usize) -> u128 {
    let l: Vec<i128> = (1..=m).map(|i| lambda.get(i - 1) as i128 + (m - i + 1) as i128).collect();
    let rho: Vec<i128> = (1..=m).map(|i| (m - i + 1) as i128).collect();
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..m {
        num *= l[i];
        den *= rho[i];
        for j in i + 1..m {
            num *= (l[i] - l[j]) * (l[i] + l[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
    }
    assert_eq!(num % den, 0);
    (num / den) as u128
}

#[test]
fn king_tableaux_count_by_dimension_formula() {
    for m in 1..=3 {
        for lambda in Partition::up_to_size(6, m) {
            let n = enumerate_king(&lambda, m).unwrap().len() as u128;
            assert_eq!(n, weyl_dimension(&lambda, m), "{lambda} m {m}");
        }
    }
}

#[test]
fn psi_round_trip_in_rank_four() {
    let (m, g) = (4, 2);
    for mu in Partition::in_rectangle(m, g) {
        let target = mu.rect_complement(m, g).unwrap();
        for t in enumerate_king(&mu, m).unwrap() {
            let s = psi(&t, g).unwrap();
            assert_eq!(s.outside(), &target);
            assert_eq!(s.crystal_weight(m, g).unwrap(), t.weight());
            assert_eq!(psi_inverse(&s, m, g).unwrap(), t);
        }
    }
}

#[test]
fn phi_is_a_bijection_onto_bounded_matrices() {
    for (m, g) in [(3, 2), (4, 1), (2, 3)] {
        let tableaux = closed_ssot(m, g);
        let mut images: Vec<SymEvenMatrix> = tableaux.iter().map(|t| phi(t, m).unwrap()).collect();
        for (t, mat) in tableaux.iter().zip(&images) {
            assert!(mat.c_index() <= 2 * g);
            let wt: Vec<u32> = t.weight(m).unwrap().iter().map(|&x| x as u32).collect();
            assert_eq!(mat.row_sums(), wt);
            assert_eq!(&phi_inverse(mat).unwrap(), t);
        }
        images.sort();
        images.dedup();
        let mut all = bounded_matrices(m, g);
        all.sort();
        assert_eq!(images, all, "m {m} g {g}");
    }
}

#[test]
fn matrix_side_weight_is_box_minus_row_sums() {
    let t: Ssot = "(1 1)(2 2b)(1b)(1b)".parse().unwrap();
    let mat = phi(&t, 4).unwrap();
    assert_eq!(mat.crystal_weight(2), t.crystal_weight(4, 2).unwrap());
}

#[test]
fn non_closed_tableaux_are_rejected() {
    let t: Ssot = "(1 1b)(1 1 1b)(2 1 2b)(2 1)".parse().unwrap();
    assert!(matches!(phi(&t, 4), Err(Error::InvalidSsot(_))));
}
