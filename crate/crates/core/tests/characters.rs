use std::collections::BTreeMap;

use spcrystal::character::recompose_sp;
use spcrystal::*;

/// Number of semistandard tableaux of shape `mu` with entries at most `n`.
fn hook_content(mu: &Partition, n: i64) -> i64 {
    let conj = mu.conjugate();
    let (mut num, mut den) = (1i128, 1i128);
    for (r, &len) in mu.parts().iter().enumerate() {
        for c in 0..len {
            num *= (n + c as i64 - r as i64) as i128;
            den *= (len - c - 1 + conj.get(c) - r - 1 + 1) as i128;
        }
    }
    (num / den) as i64
}

#[test]
fn schur_dimension_by_hook_content() {
    for m in 1..=3 {
        for mu in Partition::up_to_size(5, 2 * m) {
            assert_eq!(schur_eval(&mu, m).dimension(), hook_content(&mu, 2 * m as i64), "{mu} m {m}");
        }
    }
}

#[test]
fn tall_shapes_vanish() {
    assert!(schur_eval(&Partition::new(vec![1, 1, 1]).unwrap(), 1).is_zero());
}

#[test]
fn vector_representation_squared() {
    let one = Partition::new(vec![1]).unwrap();
    let v = weyl_character(&one, 2).unwrap();
    let dec = decompose_sp(&(&v * &v)).unwrap();
    let want: BTreeMap<Partition, i64> = [vec![], vec![1, 1], vec![2]]
        .into_iter()
        .map(|p| (Partition::new(p).unwrap(), 1))
        .collect();
    assert_eq!(dec, want);
}

#[test]
fn characters_are_symmetric_and_recompose() {
    for m in 1..=3 {
        for lambda in Partition::up_to_size(4, m) {
            let chi = weyl_character(&lambda, m).unwrap();
            assert!(chi.is_symmetric());
            let dec = decompose_sp(&chi).unwrap();
            assert_eq!(dec.len(), 1);
            assert_eq!(dec.get(&lambda), Some(&1));
            assert_eq!(recompose_sp(&dec, m).unwrap(), chi);
        }
    }
}

#[test]
fn asymmetric_input_is_rejected() {
    let w = WeightVector(vec![1, 0]);
    let f = LaurentCharacter::monomial(w, 1);
    assert!(matches!(decompose_sp(&f), Err(Error::NotSymmetric(_))));
}

#[test]
fn text_form_lists_sorted_terms() {
    let chi = weyl_character(&Partition::new(vec![1]).unwrap(), 1).unwrap();
    assert_eq!(chi.to_string(), "1 : [-1]\n1 : [1]\n");
}

#[test]
fn product_rule_in_a_single_row_case() {
    let lambda = Partition::new(vec![2, 1]).unwrap();
    let mu = Partition::new(vec![2]).unwrap();
    let rep = conjecture_verify(&lambda, &mu, 3).unwrap();
    assert!(rep.passes());
    assert!(rep.rows.iter().all(|r| r.agrees()));
}
