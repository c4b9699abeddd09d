use num_traits::Zero;

use super::partition::{partitions_of, Partition};
use super::rational::Rational;
use crate::error::{Error, Result};

/// A dense map from the partitions of one weight to rationals, stored in
/// canonical partition order. Missing entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionVector {
    weight: usize,
    values: Vec<Rational>,
}

impl PartitionVector {
    pub fn zeros(weight: usize) -> Self {
        let len = partitions_of(weight).len();
        PartitionVector {
            weight,
            values: vec![Rational::zero(); len],
        }
    }

    /// Takes values already laid out in canonical order.
    ///
    /// Panics if `values` does not have one entry per partition of `weight`.
    pub fn from_values(weight: usize, values: Vec<Rational>) -> Self {
        assert_eq!(
            values.len(),
            partitions_of(weight).len(),
            "one value per partition of {weight}"
        );
        PartitionVector { weight, values }
    }

    /// Builds a vector from `(partition, value)` pairs; unmentioned
    /// partitions are zero and repeated keys accumulate.
    pub fn from_entries<I>(weight: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let table = partitions_of(weight);
        let mut out = PartitionVector::zeros(weight);
        for (p, q) in entries {
            let idx = table.index_of(&p).ok_or(Error::DegreeMismatch {
                expected: weight,
                found: p.weight(),
            })?;
            out.values[idx] += q;
        }
        Ok(out)
    }

    pub fn from_fn(weight: usize, mut f: impl FnMut(&Partition) -> Rational) -> Self {
        let values = partitions_of(weight).iter().map(&mut f).collect();
        PartitionVector { weight, values }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    /// The entry at `p`; zero when `p` has a different weight.
    pub fn get(&self, p: &Partition) -> Rational {
        partitions_of(self.weight)
            .index_of(p)
            .map(|i| self.values[i].clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn get_index(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// `(partition, value)` pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Partition, &Rational)> + '_ {
        let table = partitions_of(self.weight);
        self.values
            .iter()
            .enumerate()
            .map(move |(i, q)| (table[i].clone(), q))
    }

    /// Sum of products of matching entries.
    pub fn dot(&self, other: &PartitionVector) -> Result<Rational> {
        if self.weight != other.weight {
            return Err(Error::DegreeMismatch {
                expected: self.weight,
                found: other.weight,
            });
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn scale(&self, factor: &Rational) -> PartitionVector {
        PartitionVector {
            weight: self.weight,
            values: self.values.iter().map(|q| q * factor).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    #[test]
    fn lookup_and_dot() {
        let v = PartitionVector::from_entries(
            2,
            [(Partition::single(2), int(7)), (Partition::ones(2), int(4))],
        )
        .unwrap();
        assert_eq!(v.values(), &[int(7), int(4)]);
        assert_eq!(v.get(&Partition::ones(2)), int(4));
        assert_eq!(v.get(&Partition::single(3)), int(0));
        assert_eq!(v.dot(&v).unwrap(), int(65));
        assert!(v.dot(&PartitionVector::zeros(3)).is_err());
        assert!(PartitionVector::from_entries(2, [(Partition::single(1), int(1))]).is_err());
    }
}
