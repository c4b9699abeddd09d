use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` reduced to lowest terms. Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `numerator/denominator`, including a `/1` for
/// integers.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    #[test]
    fn normal_form() {
        let q = ratio(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert!(Rational::zero().denom().is_one());
        assert_eq!(format_rational(&ratio(0, -7)), "0/1");
        assert_eq!(format_rational(&int(-48)), "-48/1");
        assert_eq!(format_rational(&ratio(-7, 4)), "-7/4");
    }

    fn big_rational() -> impl Strategy<Value = Rational> {
        (any::<i128>(), any::<i128>(), 1u64..u64::MAX, any::<u64>()).prop_map(|(a, b, c, d)| {
            let num = BigInt::from(a) * BigInt::from(b);
            let den = BigInt::from(c) * BigInt::from(d) + 1;
            Rational::new(num, den)
        })
    }

    proptest! {
        #[test]
        fn addition_round_trips(x in big_rational(), y in big_rational()) {
            let sum = &x + &y;
            prop_assert_eq!(&sum - &y, x.clone());
            prop_assert!(sum.denom() > &BigInt::zero());
            prop_assert!(num_integer::Integer::gcd(sum.numer(), sum.denom()).is_one() || sum.is_zero());
        }
    }
}
