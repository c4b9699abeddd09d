use num_traits::{One, Zero};

use crate::error::Result;
use crate::exact::{partition_splittings, Partition, PartitionVector, Rational};
use crate::symfunc::{e_to_m_matrix, m_to_e_matrix};

/// `p_1[K3]`.
///
/// K3 has `c_1 = 0` and `c_2 = χ = 24`, and `p_1 = c_1² - 2c_2 = -48`. Its
/// signature `p_1/3 = -16` is the usual cross-check.
pub const KUMMER_P1: i64 = -48;

/// A rational oriented cobordism class of dimension `4k`, recorded by all of
/// its Pontrjagin numbers `p_λ[M]`, `λ ⊢ k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CobordismClass {
    numbers: PartitionVector,
}

impl CobordismClass {
    pub fn new(numbers: PartitionVector) -> Self {
        CobordismClass { numbers }
    }

    pub fn from_entries<I>(weight: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        Ok(CobordismClass::new(PartitionVector::from_entries(
            weight, entries,
        )?))
    }

    /// `k`, a quarter of the real dimension.
    pub fn weight(&self) -> usize {
        self.numbers.weight()
    }

    pub fn p_numbers(&self) -> &PartitionVector {
        &self.numbers
    }

    pub fn p_number(&self, p: &Partition) -> Rational {
        self.numbers.get(p)
    }
}

/// Characteristic numbers in the monomial-symmetric basis of the
/// Pontrjagin roots (Milnor's s-numbers).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SNumberVector {
    numbers: PartitionVector,
}

impl SNumberVector {
    pub fn new(numbers: PartitionVector) -> Self {
        SNumberVector { numbers }
    }

    pub fn weight(&self) -> usize {
        self.numbers.weight()
    }

    pub fn s_numbers(&self) -> &PartitionVector {
        &self.numbers
    }

    pub fn s_number(&self, p: &Partition) -> Rational {
        self.numbers.get(p)
    }
}

/// The unit of the ring: a point, weight 0.
pub fn point_class() -> CobordismClass {
    CobordismClass::new(PartitionVector::from_values(0, vec![Rational::one()]))
}

/// The K3 (Kummer) surface, the quartic in `CP^3`.
pub fn kummer_class() -> CobordismClass {
    CobordismClass::new(PartitionVector::from_values(
        1,
        vec![Rational::from_integer(KUMMER_P1.into())],
    ))
}

/// `s_λ[M] = Σ_μ B[λ][μ] p_μ[M]` with `B` the monomial-to-elementary matrix.
pub fn p_to_s(c: &CobordismClass) -> SNumberVector {
    let k = c.weight();
    let values = m_to_e_matrix(k).apply(c.numbers.values());
    SNumberVector::new(PartitionVector::from_values(k, values))
}

/// Inverse of [`p_to_s`]: `p_λ[M] = Σ_μ A[λ][μ] s_μ[M]`.
pub fn s_to_p(v: &SNumberVector) -> CobordismClass {
    let k = v.weight();
    let values = e_to_m_matrix(k).apply(v.numbers.values());
    CobordismClass::new(PartitionVector::from_values(k, values))
}

/// `s_(k)[M]`, nonzero exactly when `M` can serve as the ring generator in
/// dimension `4k`.
pub fn s_top_number(c: &CobordismClass) -> Rational {
    let k = c.weight();
    let top = if k == 0 {
        Partition::empty()
    } else {
        Partition::single(k)
    };
    p_to_s(c).s_number(&top)
}

/// The class of `A × B`.
///
/// The Pontrjagin roots of a product are the roots of the factors side by
/// side, so `m_λ` splits as `Σ_{μ ⊎ ν = λ} m_μ ⊗ m_ν` and only the bidegree
/// `(|A|, |B|)` pairs nontrivially with `[A] ⊗ [B]`.
pub fn product(a: &CobordismClass, b: &CobordismClass) -> CobordismClass {
    s_to_p(&product_s(&p_to_s(a), &p_to_s(b)))
}

/// [`product`] carried out directly on s-numbers.
pub fn product_s(a: &SNumberVector, b: &SNumberVector) -> SNumberVector {
    let wa = a.weight();
    let s = PartitionVector::from_fn(wa + b.weight(), |lambda| {
        partition_splittings(lambda)
            .into_iter()
            .filter(|(mu, _)| mu.weight() == wa)
            .fold(Rational::zero(), |acc, (mu, nu)| {
                let x = a.s_number(&mu);
                if x.is_zero() {
                    return acc;
                }
                acc + x * b.s_number(&nu)
            })
    });
    SNumberVector::new(s)
}

/// Brute-force product used to cross-check [`product`]: expand each
/// `p_j(A × B) = Σ_{i} p_i(A) ⊗ p_{j-i}(B)`, multiply out, and keep the terms
/// whose `A` side has weight `|A|`.
pub fn product_p_basis_oracle(a: &CobordismClass, b: &CobordismClass) -> CobordismClass {
    let wa = a.weight();
    let numbers = PartitionVector::from_fn(wa + b.weight(), |lambda| {
        let mut left = Vec::with_capacity(lambda.len());
        let mut right = Vec::with_capacity(lambda.len());
        expand_terms(lambda.parts(), wa, &mut left, &mut right, a, b)
    });
    CobordismClass::new(numbers)
}

// Picks, factor by factor, how much of each p_j lands on the A side.
fn expand_terms(
    parts: &[usize],
    budget: usize,
    left: &mut Vec<usize>,
    right: &mut Vec<usize>,
    a: &CobordismClass,
    b: &CobordismClass,
) -> Rational {
    let Some((&first, rest)) = parts.split_first() else {
        if budget != 0 {
            return Rational::zero();
        }
        let mu = Partition::new(left.clone());
        let nu = Partition::new(right.clone());
        return a.p_number(&mu) * b.p_number(&nu);
    };
    let mut sum = Rational::zero();
    for i in 0..=first.min(budget) {
        left.push(i);
        right.push(first - i);
        sum += expand_terms(rest, budget - i, left, right, a, b);
        left.pop();
        right.pop();
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn kummer_numbers() {
        let k3 = kummer_class();
        assert_eq!(k3.weight(), 1);
        assert_eq!(k3.p_number(&p(&[1])), int(-48));
        assert_eq!(s_top_number(&k3), int(-48));
    }

    #[test]
    fn kummer_squared() {
        let k3 = kummer_class();
        let sq = product(&k3, &k3);
        assert_eq!(sq.p_number(&p(&[2])), int(2304));
        assert_eq!(sq.p_number(&p(&[1, 1])), int(4608));
        assert_eq!(sq, product_p_basis_oracle(&k3, &k3));
        assert_eq!(s_top_number(&sq), int(0));
    }

    #[test]
    fn point_is_the_unit() {
        let k3 = kummer_class();
        assert_eq!(product(&k3, &point_class()), k3);
        assert_eq!(product(&point_class(), &k3), k3);
        assert_eq!(product(&point_class(), &point_class()), point_class());
    }
}
