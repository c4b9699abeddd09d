use std::collections::HashMap;

use num_traits::{One, Zero};

use super::class::{
    kummer_class, p_to_s, point_class, product, product_s, s_to_p, s_top_number, CobordismClass,
    SNumberVector,
};
use crate::error::{Error, Result};
use crate::exact::{int, partitions_of, Partition, PartitionVector, Rational, RationalMatrix};
use crate::symfunc::{ahat_series, l_series, msequence_polynomial, GenusPolynomial, PowerSeries};

/// Largest weight `k` (dimension `4k`) handled unless configured otherwise.
pub const DEFAULT_MAX_WEIGHT: usize = 16;

/// The rational oriented cobordism ring up to a weight cap, with the
/// generators `N^1 = K3` and `N^k = HP^k` for `k >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CobordismRing {
    max_weight: usize,
}

impl Default for CobordismRing {
    fn default() -> Self {
        CobordismRing::new(DEFAULT_MAX_WEIGHT)
    }
}

/// Both halves of the basis-sequence test in one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCertificate {
    pub weight: usize,
    /// Determinant of the matrix of Pontrjagin numbers of all products
    /// `N^{λ1} × N^{λ2} × ...`, `λ ⊢ weight`.
    pub determinant: Rational,
    /// `s_(weight)[N^weight]`.
    pub s_top: Rational,
}

impl BasisCertificate {
    pub fn holds(&self) -> bool {
        !self.determinant.is_zero() && !self.s_top.is_zero()
    }

    /// The two criteria are equivalent; disagreement means a bug upstream.
    pub fn consistent(&self) -> bool {
        self.determinant.is_zero() == self.s_top.is_zero()
    }
}

impl CobordismRing {
    pub fn new(max_weight: usize) -> Self {
        CobordismRing { max_weight }
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub(crate) fn check(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.max_weight {
            return Err(Error::OutOfRange {
                weight: k,
                max: self.max_weight,
            });
        }
        Ok(())
    }

    /// `HP^k`, from its total Pontrjagin class `(1+u)^{2k+2} (1+4u)^{-1}`
    /// with `<u^k, [HP^k]> = 1`.
    pub fn quaternionic_class(&self, k: usize) -> Result<CobordismClass> {
        self.check(k)?;
        let total = &PowerSeries::new(vec![int(1), int(1)], k).pow(2 * k + 2)
            * &PowerSeries::new(vec![int(1), int(4)], k).reciprocal()?;
        let numbers = PartitionVector::from_fn(k, |lambda| {
            lambda
                .parts()
                .iter()
                .fold(Rational::one(), |acc, &i| acc * total.coefficient(i))
        });
        Ok(CobordismClass::new(numbers))
    }

    /// `N^1 = K3`, `N^k = HP^k` for `k >= 2`.
    pub fn generator(&self, k: usize) -> Result<CobordismClass> {
        self.check(k)?;
        if k == 1 {
            Ok(kummer_class())
        } else {
            self.quaternionic_class(k)
        }
    }

    /// `N^{λ1} × N^{λ2} × ...`; the empty partition gives a point.
    pub fn basis_class(&self, lambda: &Partition) -> Result<CobordismClass> {
        if lambda.is_empty() {
            return Ok(point_class());
        }
        self.check(lambda.weight())?;
        let mut acc = point_class();
        for &part in lambda.parts() {
            acc = product(&acc, &self.generator(part)?);
        }
        Ok(acc)
    }

    /// All basis classes of weight `k` in canonical partition order.
    pub fn basis_classes(&self, k: usize) -> Result<Vec<CobordismClass>> {
        self.check(k)?;
        let mut generators = HashMap::new();
        for j in 1..=k {
            generators.insert(j, p_to_s(&self.generator(j)?));
        }
        // products stay in s-coordinates; every prefix of a partition is a
        // partition of smaller weight and is built at most once
        let mut memo: HashMap<Vec<usize>, SNumberVector> = HashMap::new();
        memo.insert(Vec::new(), p_to_s(&point_class()));
        let build = |lambda: &Partition| -> CobordismClass {
            let parts = lambda.parts();
            let mut start = parts.len();
            while !memo.contains_key(&parts[..start]) {
                start -= 1;
            }
            let mut acc = memo[&parts[..start]].clone();
            for end in start + 1..=parts.len() {
                acc = product_s(&acc, &generators[&parts[end - 1]]);
                memo.insert(parts[..end].to_vec(), acc.clone());
            }
            s_to_p(&acc)
        };
        Ok(partitions_of(k).iter().map(build).collect())
    }

    /// Rows: basis classes; columns: Pontrjagin monomials; both in canonical
    /// partition order.
    pub fn basis_matrix(&self, k: usize) -> Result<RationalMatrix> {
        let classes = self.basis_classes(k)?;
        Ok(numbers_matrix(k, &classes))
    }

    pub fn basis_certificate(&self, k: usize) -> Result<BasisCertificate> {
        let determinant = self.basis_matrix(k)?.determinant()?;
        let s_top = s_top_number(&self.generator(k)?);
        Ok(BasisCertificate {
            weight: k,
            determinant,
            s_top,
        })
    }

    /// Thom's criterion and nonsingularity of the basis matrix for every
    /// weight up to `k`. True only when both checks pass everywhere.
    pub fn verify_basis_sequence(&self, k: usize) -> Result<bool> {
        self.check(k)?;
        let mut ok = true;
        for j in 1..=k {
            let cert = self.basis_certificate(j)?;
            ok &= cert.holds() && cert.consistent();
        }
        Ok(ok)
    }

    /// The degree-`k` Â polynomial.
    pub fn ahat_polynomial(&self, k: usize) -> Result<GenusPolynomial> {
        self.check(k)?;
        msequence_polynomial(&ahat_series(k), k)
    }

    /// The degree-`k` L polynomial.
    pub fn l_polynomial(&self, k: usize) -> Result<GenusPolynomial> {
        self.check(k)?;
        msequence_polynomial(&l_series(k), k)
    }
}

pub(crate) fn numbers_matrix(k: usize, classes: &[CobordismClass]) -> RationalMatrix {
    let cols = partitions_of(k).len();
    RationalMatrix::from_rows(
        cols,
        classes
            .iter()
            .map(|c| c.p_numbers().values().to_vec())
            .collect(),
    )
}
