mod common;

#[test]
fn oracles_match_enumeration() {
    common::run_trials(500, common::oracle_trial).unwrap();
}

#[test]
fn naive_enumerators_on_known_graphs() {
    use pancyc::Graph;
    let p = Graph::petersen();
    assert_eq!(common::naive_alpha(&p), 4);
    assert_eq!(common::naive_kappa(&p), 3);
    let lens: Vec<usize> = (3..=9).filter(|&l| common::naive_has_cycle(&p, l)).collect();
    assert_eq!(lens, vec![5, 6, 8, 9]);
    assert_eq!(common::naive_kappa(&Graph::complete(5)), 4);
    assert_eq!(common::naive_kappa(&Graph::empty(3)), 0);
}
