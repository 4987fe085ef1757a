use nl_core::newell_littlewood::{kt_multiply, nl_pieri};
use nl_core::partition::partitions_up_to;
use nl_core::symfunc::{kt_expansion_to_schur, kt_product_via_schur, schur_product, Term};
use nl_core::{nl_number, nl_product, KtExpansion, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn conjugate(e: &KtExpansion) -> KtExpansion {
    KtExpansion::from_terms(e.iter().map(|(q, c)| (q.conjugate(), c)))
}

#[test]
fn products_commute_with_conjugation() {
    let ps = partitions_up_to(4);
    for mu in &ps {
        for nu in &ps {
            assert_eq!(
                conjugate(&nl_product(mu, nu)),
                nl_product(&mu.conjugate(), &nu.conjugate()),
                "{mu} {nu}"
            );
        }
    }
}

#[test]
fn column_times_hook_contains_three_boxes_in_a_column() {
    // Conjugate of s_[2] s_[2,1], which contains s_[3] once.
    let e = nl_product(&p("1,1"), &p("2,1"));
    assert_eq!(e.coeff(&p("1,1,1")), 1);
    assert_eq!(nl_number(&p("1,1"), &p("2,1"), &p("1,1,1")), 1);
    assert_eq!(nl_product(&p("2"), &p("2,1")).coeff(&p("3")), 1);
}

#[test]
fn formula_and_schur_routes_agree() {
    let ps = partitions_up_to(4);
    for mu in &ps {
        for nu in &ps {
            assert_eq!(nl_product(mu, nu), kt_product_via_schur(mu, nu).unwrap(), "{mu} {nu}");
        }
    }
}

#[test]
fn product_is_a_ring_homomorphism_image() {
    // Converting both sides to Schur functions turns the KT product into the Schur product.
    let ps = partitions_up_to(3);
    for mu in &ps {
        for nu in &ps {
            let lhs = kt_expansion_to_schur(&nl_product(mu, nu));
            let rhs = schur_product(
                &kt_expansion_to_schur(&KtExpansion::basis_element(mu.clone())),
                &kt_expansion_to_schur(&KtExpansion::basis_element(nu.clone())),
            );
            assert_eq!(lhs, rhs, "{mu} {nu}");
        }
    }
}

#[test]
fn kt_multiplication_is_associative() {
    let a = KtExpansion::from_terms([(p("1"), 2), (p("2"), -1)]);
    let b = KtExpansion::from_terms([(p("1,1"), 1)]);
    let c = KtExpansion::from_terms([(Partition::empty(), 3), (p("2,1"), 1)]);
    assert_eq!(
        kt_multiply(&kt_multiply(&a, &b), &c),
        kt_multiply(&a, &kt_multiply(&b, &c))
    );
}

#[test]
fn one_row_rule_over_a_range() {
    for mu in partitions_up_to(5) {
        for k in 0..=3 {
            assert_eq!(nl_pieri(&mu, k), nl_product(&mu, &Partition::row(k)));
        }
    }
}

#[test]
fn terms_round_trip_through_json() {
    let e = nl_product(&p("3"), &p("2,1"));
    let json = serde_json::to_string(&e.terms()).unwrap();
    assert!(json.contains(r#"{"partition":[3,1],"coeff":2}"#));
    let back: Vec<Term> = serde_json::from_str(&json).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), json);
    let rebuilt = KtExpansion::from_terms(back.into_iter().map(|t| (t.partition, t.coeff)));
    assert_eq!(rebuilt, e);
}
