use num_traits::{One, Zero};

use super::series::PowerSeries;
use super::transition::m_to_e_matrix;
use crate::error::{Error, Result};
use crate::exact::{partitions_of, Partition, PartitionVector, Rational};

/// A rational linear combination of the degree-`k` Pontrjagin monomials
/// `p_λ = p_{λ1} p_{λ2} ...`, one coefficient per partition of `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenusPolynomial {
    coefficients: PartitionVector,
}

impl GenusPolynomial {
    pub fn new(coefficients: PartitionVector) -> Self {
        GenusPolynomial { coefficients }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.weight()
    }

    pub fn coefficients(&self) -> &PartitionVector {
        &self.coefficients
    }

    pub fn coefficient(&self, p: &Partition) -> Rational {
        self.coefficients.get(p)
    }

    /// Pairs the polynomial with a vector of Pontrjagin numbers.
    pub fn evaluate(&self, numbers: &PartitionVector) -> Result<Rational> {
        if numbers.weight() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: numbers.weight(),
            });
        }
        self.coefficients.dot(numbers)
    }

    pub fn scale(&self, factor: &Rational) -> GenusPolynomial {
        GenusPolynomial::new(self.coefficients.scale(factor))
    }
}

/// `Σ_λ g[λ] · v[λ]`.
pub fn evaluate_genus(g: &GenusPolynomial, v: &PartitionVector) -> Result<Rational> {
    g.evaluate(v)
}

/// The degree-`k` polynomial `K_k(p_1, ..., p_k)` of the multiplicative
/// sequence with characteristic series `series`.
///
/// With formal roots `x_1..x_k`, the weight-`k` part of `Π_i Q(x_i)` has
/// coefficient `Π_j q_{μj}` on each monomial `x^μ`, hence on `m_μ`. Those
/// monomial coordinates are rewritten in the elementary basis, where
/// `e_λ = p_λ`.
pub fn msequence_polynomial(series: &PowerSeries, k: usize) -> Result<GenusPolynomial> {
    if series.order() < k {
        return Err(Error::TruncationTooShort {
            order: series.order(),
            degree: k,
        });
    }
    if !series.coefficient(0).is_one() {
        return Err(Error::NotNormalized);
    }
    let table = partitions_of(k);
    let monomial: Vec<Rational> = table
        .iter()
        .map(|mu| {
            mu.parts()
                .iter()
                .fold(Rational::one(), |acc, &j| acc * series.coefficient(j))
        })
        .collect();
    // row vector times matrix: the transpose acts on the monomial coordinates
    let elementary = m_to_e_matrix(k).matrix().vec_mul(&monomial)?;
    Ok(GenusPolynomial::new(PartitionVector::from_values(
        k, elementary,
    )))
}

impl GenusPolynomial {
    /// Whether `self` and `other` agree up to a nonzero scalar.
    pub fn is_proportional_to(&self, other: &GenusPolynomial) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let a = self.coefficients.values();
        let b = other.coefficients.values();
        let Some(i) = a.iter().position(|x| !x.is_zero()) else {
            return b.iter().all(Zero::is_zero);
        };
        if b[i].is_zero() {
            return false;
        }
        let ratio = &b[i] / &a[i];
        a.iter().zip(b).all(|(x, y)| &(x * &ratio) == y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::symfunc::series::{ahat_series, l_series};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    // Elementary symmetric functions of concrete values.
    fn elementary(xs: &[Rational]) -> Vec<Rational> {
        let mut e = vec![Rational::one()];
        for x in xs {
            let mut next = e.clone();
            next.push(Rational::zero());
            for j in 1..next.len() {
                next[j] += x * &e[j - 1];
            }
            e = next;
        }
        e
    }

    // Weight-k part of Π Q(x_i t), read off as the t^k coefficient.
    fn product_weight(series: &PowerSeries, xs: &[Rational], k: usize) -> Rational {
        let mut acc = vec![Rational::zero(); k + 1];
        acc[0] = Rational::one();
        for x in xs {
            let factor: Vec<Rational> = (0..=k)
                .map(|j| series.coefficient(j) * x.pow(j as i32))
                .collect();
            let mut next = vec![Rational::zero(); k + 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, f) in factor.iter().enumerate().take(k + 1 - i) {
                    next[i + j] += a * f;
                }
            }
            acc = next;
        }
        acc[k].clone()
    }

    #[test]
    fn ahat_low_degrees() {
        let s = ahat_series(4);
        let k1 = msequence_polynomial(&s, 1).unwrap();
        assert_eq!(k1.coefficient(&p(&[1])), ratio(-1, 24));
        let k2 = msequence_polynomial(&s, 2).unwrap();
        assert_eq!(k2.coefficient(&p(&[2])), ratio(-4, 5760));
        assert_eq!(k2.coefficient(&p(&[1, 1])), ratio(7, 5760));
    }

    #[test]
    fn l_low_degrees() {
        let s = l_series(4);
        let k1 = msequence_polynomial(&s, 1).unwrap();
        assert_eq!(k1.coefficient(&p(&[1])), ratio(1, 3));
        let k2 = msequence_polynomial(&s, 2).unwrap();
        assert_eq!(k2.coefficient(&p(&[2])), ratio(7, 45));
        assert_eq!(k2.coefficient(&p(&[1, 1])), ratio(-1, 45));
    }

    #[test]
    fn total_pontrjagin_class_gives_top_class() {
        let s = PowerSeries::new(vec![int(1), int(1)], 6);
        for k in 1..=6 {
            let g = msequence_polynomial(&s, k).unwrap();
            for (lambda, coef) in g.coefficients().iter() {
                let expected = if lambda == Partition::single(k) {
                    int(1)
                } else {
                    int(0)
                };
                assert_eq!(*coef, expected, "k = {k}, {lambda}");
            }
        }
    }

    #[test]
    fn agrees_with_numeric_roots() {
        let roots: Vec<Rational> = [2, -3, 5, 1, -7, 4].iter().map(|&x| int(x)).collect();
        for series in [ahat_series(6), l_series(6)] {
            for k in 1..=6 {
                let xs = &roots[..k];
                let g = msequence_polynomial(&series, k).unwrap();
                let e = elementary(xs);
                let numbers = PartitionVector::from_fn(k, |lambda| {
                    lambda
                        .parts()
                        .iter()
                        .fold(Rational::one(), |acc, &j| acc * &e[j])
                });
                assert_eq!(
                    g.evaluate(&numbers).unwrap(),
                    product_weight(&series, xs, k)
                );
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            msequence_polynomial(&ahat_series(2), 3),
            Err(Error::TruncationTooShort {
                order: 2,
                degree: 3
            })
        );
        let bad = PowerSeries::new(vec![int(2), int(1)], 3);
        assert_eq!(msequence_polynomial(&bad, 2), Err(Error::NotNormalized));
        let g = msequence_polynomial(&ahat_series(2), 2).unwrap();
        assert_eq!(
            evaluate_genus(&g, &PartitionVector::zeros(3)),
            Err(Error::DegreeMismatch {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            evaluate_genus(&g, &PartitionVector::zeros(2)).unwrap(),
            int(0)
        );
    }

    #[test]
    fn proportionality() {
        let g = msequence_polynomial(&ahat_series(3), 3).unwrap();
        assert!(g.is_proportional_to(&g.scale(&ratio(-5, 3))));
        assert!(!g.is_proportional_to(&msequence_polynomial(&l_series(3), 3).unwrap()));
        assert!(!g.is_proportional_to(&g.scale(&int(0))));
    }
}
