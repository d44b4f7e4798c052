use spcrystal::crystal::stembridge_check;
use spcrystal::*;

fn dominant(mu: &Partition, m: usize) -> WeightVector {
    WeightVector::from_partition(mu, m).unwrap()
}

#[test]
fn king_and_tableau_crystals_have_the_same_graph_shape() {
    let (m, g) = (3, 2);
    let idx: Vec<usize> = (0..m).collect();
    for mu in Partition::in_rectangle(m, g) {
        let kc = KingCrystal { m, g };
        let sc = SsotCrystal { m, g };
        let kg = CrystalGraph::build(&kc, enumerate_king(&mu, m).unwrap(), &idx).unwrap();
        let sg = CrystalGraph::build(&sc, sc.highest_weight_set(&mu).unwrap(), &idx).unwrap();
        assert_eq!(kg.len(), sg.len(), "{mu}");
        assert_eq!(kg.edges().len(), sg.edges().len(), "{mu}");
        assert_eq!(kg.decompose(), sg.decompose(), "{mu}");
        assert_eq!(kg.character(), sg.character(), "{mu}");
    }
}

#[test]
fn matrix_crystal_is_the_rectangle() {
    for (m, g) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
        let c = MatrixCrystal { m, g };
        let idx: Vec<usize> = (0..m).collect();
        let graph = CrystalGraph::build(&c, c.ambient(), &idx).unwrap();
        assert!(graph.is_connected());
        let rect = Partition::new(vec![g; m]).unwrap();
        let want = [(dominant(&rect, m), 1)].into_iter().collect();
        assert_eq!(graph.decompose(), want, "m {m} g {g}");
    }
}

#[test]
fn operators_on_a_single_tableau() {
    let c = SsotCrystal { m: 4, g: 3 };
    let t: Ssot = "(1 1b)(1 1 1b)(2 1 2b)(2 1)".parse().unwrap();
    for i in 0..4 {
        let eps = c.epsilon(&t, i).unwrap();
        let phi = c.phi(&t, i).unwrap();
        let w = c.weight(&t).unwrap();
        assert_eq!(phi as i64 - eps as i64, w.pair_coroot(i), "index {i}");
        if let Some(up) = c.raise(&t, i).unwrap() {
            assert_eq!(c.lower(&up, i).unwrap().as_ref(), Some(&t));
            assert_eq!(c.epsilon(&up, i).unwrap() + 1, eps);
        } else {
            assert_eq!(eps, 0);
        }
    }
}

#[test]
fn rank_three_box_three_has_no_stembridge_violations() {
    let c = SsotCrystal { m: 3, g: 3 };
    let graph = CrystalGraph::build(&c, c.ambient(), &[1, 2]).unwrap();
    let report = stembridge_check(&graph);
    assert!(report.is_ok(), "{}", report.violations[0]);
    assert!(report.checked > 0);
}

#[test]
fn skew_crystal_refuses_index_zero() {
    let c = SkewSsotCrystal { m: 2, g: 2 };
    let t: Ssot = "[1](1)()".parse().unwrap();
    assert!(matches!(c.apply(&t, 0, Direction::Raise), Err(Error::BadIndex { .. })));
}

#[test]
fn highest_vertices_carry_their_shape() {
    let (m, g) = (3, 2);
    let c = SsotCrystal { m, g };
    for mu in Partition::in_rectangle(m, g) {
        let graph = CrystalGraph::build(&c, c.highest_weight_set(&mu).unwrap(), &[0, 1, 2]).unwrap();
        let top = graph.highest();
        assert_eq!(top.len(), 1);
        assert_eq!(graph.weight(top[0]).to_partition(), Some(mu));
    }
}
