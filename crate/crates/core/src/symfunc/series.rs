use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// A power series in one variable `z`, truncated after `z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coefficients: Vec<Rational>,
}

impl PowerSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are kept.
    pub fn new(mut coefficients: Vec<Rational>, order: usize) -> Self {
        coefficients.resize(order + 1, Rational::zero());
        PowerSeries { coefficients }
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::new(vec![Rational::one()], order)
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        PowerSeries {
            coefficients: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, j: usize) -> Rational {
        self.coefficients
            .get(j)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        PowerSeries::new(self.coefficients.clone(), order)
    }

    /// The series `t` with `self · t = 1` up to the truncation order.
    pub fn reciprocal(&self) -> Result<PowerSeries> {
        let lead = &self.coefficients[0];
        if lead.is_zero() {
            return Err(Error::NonUnit);
        }
        let inv_lead = lead.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv_lead.clone());
        for j in 1..=n {
            let acc = (1..=j).fold(Rational::zero(), |acc, i| {
                acc + &self.coefficients[i] * &out[j - i]
            });
            out.push(-acc * &inv_lead);
        }
        Ok(PowerSeries { coefficients: out })
    }

    /// `self^n`, truncated to the same order.
    pub fn pow(&self, n: usize) -> PowerSeries {
        (0..n).fold(PowerSeries::one(self.order()), |acc, _| &acc * self)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    /// Product truncated to the smaller of the two orders.
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries::from_fn(order, |j| {
            (0..=j).fold(Rational::zero(), |acc, i| {
                acc + &self.coefficients[i] * &rhs.coefficients[j - i]
            })
        })
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `sinh(w)/w` with `w² = scale · z`, i.e. `Σ (scale·z)^n / (2n+1)!`.
fn sinh_over_w(order: usize, scale: &Rational) -> PowerSeries {
    PowerSeries::from_fn(order, |n| {
        scale.pow(n as i32) / Rational::from_integer(factorial(2 * n + 1))
    })
}

/// `cosh(w)` with `w² = scale · z`.
fn cosh_w(order: usize, scale: &Rational) -> PowerSeries {
    PowerSeries::from_fn(order, |n| {
        scale.pow(n as i32) / Rational::from_integer(factorial(2 * n))
    })
}

/// Characteristic series of the Â-genus, `(√z/2) / sinh(√z/2)`.
///
/// Expanded as the reciprocal of `sinh(w)/w` with `w² = z/4`, so the
/// coefficients start `1, -1/24, 7/5760, ...`.
pub fn ahat_series(order: usize) -> PowerSeries {
    let quarter = Rational::new(1.into(), 4.into());
    sinh_over_w(order, &quarter)
        .reciprocal()
        .expect("sinh(w)/w has constant term 1")
}

/// Characteristic series of the L-genus, `√z / tanh(√z)`: `1, 1/3, -1/45, ...`.
pub fn l_series(order: usize) -> PowerSeries {
    let one = Rational::one();
    let denominator = sinh_over_w(order, &one)
        .reciprocal()
        .expect("sinh(w)/w has constant term 1");
    &cosh_w(order, &one) * &denominator
}
