use diagram_ops::hurwitz::{
    self, generating_function_with, hurwitz_bracket, hurwitz_chain, hurwitz_padded, hurwitz_split,
    oracle_tuple_count, oracle_tuple_count_with, simple_hurwitz, BetaIndex, BranchSpec,
};
use diagram_ops::partition::partitions_of;
use diagram_ops::psym::PPoly;
use diagram_ops::rational::{int, ratio};
use diagram_ops::w_ops::DiffOpSpec;
use diagram_ops::{Execution, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn chain_matches_enumeration_for_all_small_tuples() {
    for n in 1..=4 {
        let classes = partitions_of(n).unwrap();
        for a in &classes {
            for b in &classes {
                for c in &classes {
                    let t = vec![a.clone(), b.clone(), c.clone()];
                    assert_eq!(
                        hurwitz_chain(&t).unwrap(),
                        oracle_tuple_count(&t, n).unwrap(),
                        "{t:?}"
                    );
                    for d in &classes {
                        let t4 = vec![a.clone(), b.clone(), c.clone(), d.clone()];
                        let chain = hurwitz_chain(&t4).unwrap();
                        assert_eq!(chain, oracle_tuple_count(&t4, n).unwrap(), "{t4:?}");
                        for r in 1..4 {
                            assert_eq!(hurwitz_split(&t4, r).unwrap(), chain, "{t4:?} at {r}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn chain_matches_enumeration_in_s5_and_s6() {
    let cases: &[&[&str]] = &[
        &["[2,1,1,1]", "[2,1,1,1]", "[3,1,1]", "[3,2]"],
        &["[5]", "[5]", "[5]", "[5]"],
        &["[2,2,1]", "[3,1,1]", "[4,1]", "[2,1,1,1]", "[3,2]"],
        &["[3,3]", "[2,2,2]", "[6]"],
        &["[4,2]", "[2,2,1,1]", "[3,1,1,1]", "[5,1]"],
    ];
    for case in cases {
        let t: Vec<Partition> = case.iter().map(|s| p(s)).collect();
        let n = t[0].degree();
        assert_eq!(
            hurwitz_chain(&t).unwrap(),
            oracle_tuple_count(&t, n).unwrap(),
            "{t:?}"
        );
    }
}

#[test]
fn short_brackets_match_enumeration() {
    for n in 1..=5 {
        for a in partitions_of(n).unwrap() {
            let one = std::slice::from_ref(&a);
            assert_eq!(
                hurwitz_bracket(one).unwrap(),
                oracle_tuple_count(one, n).unwrap()
            );
            for b in partitions_of(n).unwrap() {
                let t = [a.clone(), b.clone()];
                assert_eq!(
                    hurwitz_bracket(&t).unwrap(),
                    oracle_tuple_count(&t, n).unwrap()
                );
            }
        }
    }
}

#[test]
fn oracle_strategies_agree() {
    let t: Vec<Partition> = ["[2,1,1,1]", "[3,1,1]", "[2,2,1]", "[4,1]"]
        .iter()
        .map(|s| p(s))
        .collect();
    assert_eq!(
        oracle_tuple_count_with(&t, 5, Execution::Sequential).unwrap(),
        oracle_tuple_count_with(&t, 5, Execution::Parallel).unwrap()
    );
}

#[test]
fn series_coefficients_are_padded_brackets() {
    let dirs = vec![p("[1]"), p("[2]"), p("[2,1]"), p("[3]")];
    let z = hurwitz::generating_function(&dirs, 5, 3).unwrap();
    for (idx, poly) in z.components() {
        for (mono, c) in poly.iter() {
            let spec = z.branch_spec(idx, &mono.0);
            assert_eq!(
                hurwitz_padded(&spec).unwrap(),
                *c,
                "{:?} on {}",
                idx.0,
                mono
            );
        }
    }
    // zero entries are zero brackets too
    for idx in hurwitz::beta_indices(dirs.len(), 2) {
        for d in partitions_of(4).unwrap() {
            let spec = z.branch_spec(&idx, &d);
            assert_eq!(hurwitz_padded(&spec).unwrap(), z.coefficient(&idx, &d));
        }
    }
}

#[test]
fn padded_brackets_match_enumeration() {
    // <(D_i, n_i) | D> with each D_i padded to |D| is a plain tuple count
    let cases = [
        (p("[2,1,1]"), vec![(p("[2]"), 2), (p("[3]"), 1)]),
        (p("[3,1]"), vec![(p("[2,1]"), 1), (p("[1]"), 2)]),
        (p("[4,1]"), vec![(p("[3]"), 1), (p("[2]"), 1)]),
    ];
    for (last, branches) in cases {
        let spec = BranchSpec::new(last.clone(), branches.clone()).unwrap();
        let n = last.degree();
        let mut classes = Vec::new();
        let mut scale = int(1);
        for (d, m) in &branches {
            let k = n - d.degree();
            for _ in 0..*m {
                classes.push(d.pad(k));
                scale *= diagram_ops::rational::big(d.rho_coefficient(k));
            }
        }
        classes.push(last);
        assert_eq!(
            hurwitz_padded(&spec).unwrap(),
            scale * oracle_tuple_count(&classes, n).unwrap()
        );
    }
}

#[test]
fn series_strategies_agree() {
    let dirs = vec![p("[2]"), p("[3]")];
    let a = generating_function_with(&dirs, 6, 3, Execution::Sequential).unwrap();
    let b = generating_function_with(&dirs, 6, 3, Execution::Parallel).unwrap();
    assert_eq!(a, b);
}

#[test]
fn series_satisfies_its_equations() {
    let dirs = vec![
        p("[1]"),
        p("[2]"),
        p("[1,1]"),
        p("[3]"),
        p("[2,1]"),
        p("[1,1,1]"),
    ];
    let z = hurwitz::generating_function(&dirs, 5, 2).unwrap();
    for d in &dirs {
        assert_eq!(
            hurwitz::pde_residual(d, &z).unwrap(),
            int(0),
            "spectral W({d})"
        );
        let spec = DiffOpSpec::for_diagram(d).unwrap();
        let residual = hurwitz::pde_residual_by(d, &z, |f: &PPoly| Ok(spec.apply(f))).unwrap();
        assert_eq!(residual, int(0), "explicit W({d})");
    }
}

#[test]
fn simple_numbers_match_enumeration() {
    for n in 2..=5 {
        let two = p("[2]").pad(n - 2);
        for m in 0..=3 {
            if n == 5 && m == 3 {
                continue;
            }
            for (d, c) in simple_hurwitz(n, m).unwrap() {
                let mut classes = vec![two.clone(); m as usize];
                classes.push(d.clone());
                assert_eq!(
                    c,
                    oracle_tuple_count(&classes, n).unwrap(),
                    "n={n} m={m} {d}"
                );
            }
        }
    }
}

#[test]
fn simple_numbers_in_degree_three() {
    let h = simple_hurwitz(3, 2).unwrap();
    let rows: Vec<(String, String)> = h
        .iter()
        .map(|(d, c)| (d.to_string(), diagram_ops::rational::format(c)))
        .collect();
    assert_eq!(
        rows,
        vec![
            ("[3]".to_string(), "1".to_string()),
            ("[2,1]".to_string(), "0".to_string()),
            ("[1,1,1]".to_string(), "1/2".to_string()),
        ]
    );
    assert_eq!(simple_hurwitz(3, 4).unwrap()[&p("[1,1,1]")], ratio(9, 2));
}

#[test]
fn coefficient_lookup() {
    let z = hurwitz::generating_function(&[p("[2]")], 3, 2).unwrap();
    assert_eq!(z.coefficient(&BetaIndex(vec![2]), &p("[3]")), int(1));
    assert_eq!(z.coefficient(&BetaIndex(vec![1]), &p("[2]")), ratio(1, 2));
}
