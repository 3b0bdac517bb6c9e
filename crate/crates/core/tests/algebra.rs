use std::collections::BTreeMap;

use diagram_ops::characters::{self, CharacterTable};
use diagram_ops::class_algebra;
use diagram_ops::partition::{partitions_in_range, partitions_of};
use diagram_ops::perm::conjugacy_classes;
use diagram_ops::rational::{self, int, ratio};
use diagram_ops::{DiagramSum, Execution, Partition, Rational};
use num_bigint::BigInt;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn kappa_inverts_automorphism_count() {
    for d in partitions_in_range(0, 12).unwrap() {
        assert_eq!(d.kappa() * rational::big(d.aut_order()), int(1), "{d}");
    }
}

#[test]
fn class_sizes_sum_to_group_order() {
    for n in 0..=12 {
        let total: BigInt = partitions_of(n)
            .unwrap()
            .iter()
            .map(Partition::class_size)
            .sum();
        assert_eq!(total, rational::factorial(n), "n = {n}");
    }
}

#[test]
fn class_sizes_match_enumeration() {
    for n in 1..=6 {
        for (d, members) in conjugacy_classes(n).unwrap() {
            assert_eq!(d.class_size(), BigInt::from(members.len()), "{d}");
        }
    }
}

#[test]
fn padding_composes() {
    for d in partitions_in_range(0, 6).unwrap() {
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(d.pad(a).pad(b), d.pad(a + b));
                let twice = d.rho(a).rho(b);
                assert_eq!(twice.len(), 1);
                // rho_b(rho_a(D)) = C(a+b, a) rho_{a+b}(D)
                let binom = rational::big(rational::factorial(a + b))
                    / rational::big(rational::factorial(a) * rational::factorial(b));
                assert_eq!(twice, d.rho(a + b).scale(&binom), "{d} {a} {b}");
            }
        }
    }
}

#[test]
fn tables_are_orthogonal() {
    for n in 0..=8 {
        let t = CharacterTable::compute(n).unwrap();
        t.verify_orthogonality().unwrap();
    }
}

#[test]
fn conjugate_shape_twists_by_sign() {
    for n in 1..=8 {
        for r in partitions_of(n).unwrap() {
            for d in partitions_of(n).unwrap() {
                assert_eq!(
                    characters::character(&r.conjugate(), &d).unwrap(),
                    d.sign() * characters::character(&r, &d).unwrap(),
                    "{r} on {d}"
                );
            }
        }
    }
}

#[test]
fn dimensions_agree() {
    for r in partitions_in_range(0, 10).unwrap() {
        let by_table = characters::dimension(&r).unwrap();
        assert_eq!(by_table, characters::dimension_by_hooks(&r), "{r}");
        assert_eq!(
            characters::d_r(&r).unwrap(),
            characters::d_r_product(&r),
            "{r}"
        );
    }
}

#[test]
fn parallel_table_matches_sequential() {
    for n in [6, 9] {
        assert_eq!(
            CharacterTable::compute_with(n, Execution::Sequential).unwrap(),
            CharacterTable::compute_with(n, Execution::Parallel).unwrap()
        );
    }
}

#[test]
fn phi_under_padding() {
    // phi_R([D,1]) = phi_R(D) (|R| - |D|) / (m_1(D) + 1)
    for r in partitions_in_range(0, 7).unwrap() {
        for d in partitions_in_range(0, r.degree().saturating_sub(1)).unwrap() {
            let k = r.degree() - d.degree();
            let lhs = characters::phi(&r, &d.pad(1)).unwrap();
            let rhs = characters::phi(&r, &d).unwrap() * int(k as i64)
                / int(d.multiplicity(1) as i64 + 1);
            assert_eq!(lhs, rhs, "R = {r}, D = {d}");
        }
    }
}

#[test]
fn phi_of_identity_class_is_binomial() {
    // phi_R([1^j]) = C(|R|, j)
    for r in partitions_in_range(0, 7).unwrap() {
        for j in 0..=r.degree() {
            let n = r.degree();
            let binom =
                rational::factorial(n) / (rational::factorial(j) * rational::factorial(n - j));
            assert_eq!(
                characters::phi(&r, &Partition::ones(j)).unwrap(),
                rational::big(binom)
            );
        }
    }
}

#[test]
fn structure_constants_match_enumeration() {
    for n in 1..=5 {
        let classes = partitions_of(n).unwrap();
        for a in &classes {
            for b in &classes {
                for c in &classes {
                    let fast = class_algebra::structure_constant(a, b, c).unwrap();
                    let slow = class_algebra::oracle_structure_constant(a, b, c).unwrap();
                    assert_eq!(fast, BigInt::from(slow), "C^{c}_({a},{b})");
                }
            }
        }
    }
}

#[test]
fn oracle_strategies_agree() {
    let (a, b, c) = (p("[2,2,1,1]"), p("[3,1,1,1]"), p("[4,2]"));
    assert_eq!(
        class_algebra::oracle_structure_constant_with(&a, &b, &c, Execution::Sequential).unwrap(),
        class_algebra::oracle_structure_constant_with(&a, &b, &c, Execution::Parallel).unwrap()
    );
}

#[test]
fn infinite_products_by_hand() {
    let m = |a: &str, b: &str| {
        class_algebra::mult_infinity(&p(a), &p(b))
            .unwrap()
            .to_string()
    };
    assert_eq!(m("[1]", "[2]"), "2*[2] + 1*[2,1]");
    assert_eq!(m("[2]", "[2]"), "1*[1,1] + 3*[3] + 2*[2,2]");
    assert_eq!(m("[]", "[3]"), "1*[3]");
    assert_eq!(m("[1]", "[1]"), "1*[1] + 2*[1,1]");
}

fn sample_diagrams() -> Vec<Partition> {
    partitions_in_range(0, 3).unwrap()
}

#[test]
fn product_is_commutative_and_associative() {
    let ds = sample_diagrams();
    for a in &ds {
        for b in &ds {
            let ab = class_algebra::mult_infinity(a, b).unwrap();
            assert_eq!(ab, class_algebra::mult_infinity(b, a).unwrap(), "{a} {b}");
        }
    }
    for a in &ds {
        for b in &ds {
            for c in &ds {
                if a.degree() + b.degree() + c.degree() > 7 {
                    continue;
                }
                let ab = class_algebra::mult_infinity(a, b).unwrap();
                let bc = class_algebra::mult_infinity(b, c).unwrap();
                let left = class_algebra::mult_sum(&ab, &DiagramSum::from(c.clone())).unwrap();
                let right = class_algebra::mult_sum(&DiagramSum::from(a.clone()), &bc).unwrap();
                assert_eq!(left, right, "({a} {b}) {c}");
            }
        }
    }
}

#[test]
fn central_characters_are_multiplicative() {
    let ds = sample_diagrams();
    let shapes = partitions_in_range(0, 7).unwrap();
    for a in &ds {
        for b in &ds {
            let ab = class_algebra::mult_infinity(a, b).unwrap();
            for r in &shapes {
                let lhs = class_algebra::evaluate_phi(r, &ab).unwrap();
                let rhs = characters::phi(r, a).unwrap() * characters::phi(r, b).unwrap();
                assert_eq!(lhs, rhs, "R = {r}, {a} * {b}");
            }
        }
    }
}

#[test]
fn same_degree_products_have_degree_n() {
    let a = p("[2,1,1]");
    let b = p("[3,1]");
    let prod = class_algebra::mult_same_degree(&a, &b).unwrap();
    assert_eq!(prod.degrees(), vec![4]);
    let total: Rational = prod
        .iter()
        .map(|(d, c)| c * rational::big(d.class_size()))
        .sum();
    // |C_a| |C_b| group elements are produced in total
    assert_eq!(total, rational::big(a.class_size() * b.class_size()));
}

#[test]
fn diagram_sum_text_round_trip() {
    let text = "1/2*[1] + -3*[2,1] + 1*[4]";
    let s: DiagramSum = text.parse().unwrap();
    assert_eq!(s.to_string(), text);
    let reordered: DiagramSum = "[4] + -3*[2,1] + 1/2*[1]".parse().unwrap();
    assert_eq!(reordered, s);
    assert_eq!(s.coeff(&p("[2,1]")), ratio(-3, 1));
    let mut counts = BTreeMap::new();
    for (d, _) in s.iter() {
        *counts.entry(d.degree()).or_insert(0) += 1;
    }
    assert_eq!(counts.len(), 3);
}
