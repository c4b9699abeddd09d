use charnum_core::{
    e_to_m_matrix, m_to_e_matrix, p_to_s, partitions_of, point_class, product,
    product_p_basis_oracle, s_to_p, s_top_number, CobordismClass, CobordismRing, PartitionVector,
    Rational, RationalMatrix,
};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=9).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn class_of_weight(k: usize) -> impl Strategy<Value = CobordismClass> {
    let n = partitions_of(k).len();
    proptest::collection::vec(rational(), n)
        .prop_map(move |v| CobordismClass::new(PartitionVector::from_values(k, v)))
}

fn any_class(max: usize) -> impl Strategy<Value = CobordismClass> {
    (1..=max).prop_flat_map(class_of_weight)
}

fn generator(k: usize) -> CobordismClass {
    CobordismRing::default().generator(k).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_commutative_and_associative(a in 1usize..=4, b in 1usize..=4, c in 1usize..=4) {
        let (x, y, z) = (generator(a), generator(b), generator(c));
        prop_assert_eq!(product(&x, &y), product(&y, &x));
        prop_assert_eq!(
            product(&product(&x, &y), &z),
            product(&x, &product(&y, &z))
        );
    }

    #[test]
    fn product_matches_direct_expansion(a in any_class(4), b in any_class(4)) {
        prop_assert_eq!(product(&a, &b), product_p_basis_oracle(&a, &b));
    }

    #[test]
    fn point_is_the_unit(a in any_class(6)) {
        prop_assert_eq!(product(&point_class(), &a), a.clone());
        prop_assert_eq!(product(&a, &point_class()), a);
    }

    #[test]
    fn s_number_round_trip(a in any_class(8)) {
        prop_assert_eq!(s_to_p(&p_to_s(&a)), a);
    }

    #[test]
    fn top_s_number_vanishes_on_products(a in any_class(4), b in any_class(4)) {
        prop_assert!(s_top_number(&product(&a, &b)).is_zero());
    }

    #[test]
    fn genera_are_multiplicative(a in any_class(4), b in any_class(4)) {
        let ring = CobordismRing::default();
        let (ka, kb) = (a.weight(), b.weight());
        let ab = product(&a, &b);
        for (left, right, both) in [
            (ring.ahat_polynomial(ka), ring.ahat_polynomial(kb), ring.ahat_polynomial(ka + kb)),
            (ring.l_polynomial(ka), ring.l_polynomial(kb), ring.l_polynomial(ka + kb)),
        ] {
            let expected = left.unwrap().evaluate(a.p_numbers()).unwrap()
                * right.unwrap().evaluate(b.p_numbers()).unwrap();
            prop_assert_eq!(both.unwrap().evaluate(ab.p_numbers()).unwrap(), expected);
        }
    }
}

#[test]
fn transition_matrices_are_mutually_inverse() {
    for k in 1..=12 {
        let n = partitions_of(k).len();
        let product = e_to_m_matrix(k)
            .matrix()
            .mul(m_to_e_matrix(k).matrix())
            .unwrap();
        assert_eq!(product, RationalMatrix::identity(n), "k = {k}");
    }
}

#[test]
fn basis_criteria_agree_through_weight_eight() {
    let ring = CobordismRing::default();
    for k in 1..=8 {
        let cert = ring.basis_certificate(k).unwrap();
        assert!(cert.consistent(), "k = {k}");
        assert!(cert.holds(), "k = {k}");
    }
    assert!(ring.verify_basis_sequence(8).unwrap());
}

#[test]
fn kummer_powers_have_ahat_two_to_the_k() {
    let ring = CobordismRing::default();
    let k3 = generator(1);
    let mut power = point_class();
    for k in 1..=10 {
        power = product(&power, &k3);
        let value = ring
            .ahat_polynomial(k)
            .unwrap()
            .evaluate(power.p_numbers())
            .unwrap();
        assert_eq!(
            value,
            Rational::from_integer(BigInt::from(1) << k),
            "k = {k}"
        );
    }
}
