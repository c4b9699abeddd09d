use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{partitions_of, Partition, Rational, RationalMatrix};

/// Change of basis between elementary (`e_λ`) and monomial (`m_μ`)
/// symmetric functions of one degree, rows and columns in canonical
/// partition order.
///
/// For `e_to_m`, row `λ` holds the monomial coordinates of `e_λ`; for
/// `m_to_e`, row `μ` holds the elementary coordinates of `m_μ`. All entries
/// are integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    degree: usize,
    matrix: RationalMatrix,
    integers: Vec<Vec<BigInt>>,
}

impl TransitionMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// `matrix · v`, computed over the integers after clearing the common
    /// denominator of `v`.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(
            v.len(),
            self.integers.len(),
            "vector length must match degree {}",
            self.degree
        );
        let den = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        self.integers
            .iter()
            .map(|row| {
                let mut acc = BigInt::zero();
                for (a, x) in row.iter().zip(&ints) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                Rational::new(acc, den.clone())
            })
            .collect()
    }

    /// Entry in row `row`, column `col`; zero for partitions of another degree.
    pub fn get(&self, row: &Partition, col: &Partition) -> Rational {
        let table = partitions_of(self.degree);
        match (table.index_of(row), table.index_of(col)) {
            (Some(r), Some(c)) => self.matrix.get(r, c).clone(),
            _ => Rational::zero(),
        }
    }
}

impl TransitionMatrix {
    fn from_integral(degree: usize, matrix: RationalMatrix) -> Self {
        let integers = matrix
            .row_vectors()
            .map(|row| {
                row.iter()
                    .map(|q| {
                        assert!(q.is_integer(), "transition matrices are integral");
                        q.to_integer()
                    })
                    .collect()
            })
            .collect();
        TransitionMatrix {
            degree,
            matrix,
            integers,
        }
    }
}

struct TransitionPair {
    e_to_m: Arc<TransitionMatrix>,
    m_to_e: Arc<TransitionMatrix>,
}

type PairCache = RwLock<HashMap<usize, Arc<TransitionPair>>>;

fn pair(k: usize) -> Arc<TransitionPair> {
    static CACHE: OnceLock<PairCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(found) = cache.read().unwrap().get(&k) {
        return Arc::clone(found);
    }
    let e_to_m = build_e_to_m(k);
    let m_to_e = e_to_m
        .inverse()
        .expect("e-to-m transition matrices are unitriangular up to ordering");
    let built = Arc::new(TransitionPair {
        e_to_m: Arc::new(TransitionMatrix::from_integral(k, e_to_m)),
        m_to_e: Arc::new(TransitionMatrix::from_integral(k, m_to_e)),
    });
    Arc::clone(cache.write().unwrap().entry(k).or_insert(built))
}

/// `e_λ = Σ_μ A[λ][μ] m_μ` at degree `k`.
///
/// The coefficient of the monomial `x^μ` in `e_{λ1} e_{λ2} ...` counts the
/// ways of picking a `λi`-subset of the variables for every factor so that
/// variable `j` is picked `μj` times, i.e. 0/1 matrices with row sums `λ`
/// and column sums `μ`. `k` variables suffice at degree `k`.
pub fn e_to_m_matrix(k: usize) -> Arc<TransitionMatrix> {
    Arc::clone(&pair(k).e_to_m)
}

/// Exact inverse of [`e_to_m_matrix`]: `m_μ = Σ_λ B[μ][λ] e_λ`.
pub fn m_to_e_matrix(k: usize) -> Arc<TransitionMatrix> {
    Arc::clone(&pair(k).m_to_e)
}

fn build_e_to_m(k: usize) -> RationalMatrix {
    let table = partitions_of(k);
    let mut counter = ZeroOneCounter::default();
    let mut out = RationalMatrix::zeros(table.len(), table.len());
    for (r, lambda) in table.iter().enumerate() {
        for (c, mu) in table.iter().enumerate() {
            let n = counter.count(lambda.parts(), mu.parts().to_vec());
            if !n.is_zero() {
                out.set(r, c, Rational::from_integer(n));
            }
        }
    }
    out
}

/// Counts 0/1 matrices with prescribed row and column sums, memoized on the
/// remaining rows and the sorted residual column sums.
#[derive(Default)]
struct ZeroOneCounter {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl ZeroOneCounter {
    fn count(&mut self, rows: &[usize], mut cols: Vec<usize>) -> BigInt {
        cols.retain(|&c| c > 0);
        cols.sort_unstable_by(|a, b| b.cmp(a));
        let Some((&first, rest)) = rows.split_first() else {
            return if cols.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        if first > cols.len() || rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
            return BigInt::zero();
        }
        let key = (rows.to_vec(), cols.clone());
        if let Some(found) = self.memo.get(&key) {
            return found.clone();
        }

        // columns with equal residual are interchangeable
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &c in &cols {
            match groups.last_mut() {
                Some((value, n)) if *value == c => *n += 1,
                _ => groups.push((c, 1)),
            }
        }
        let mut total = BigInt::zero();
        let mut taken = vec![0usize; groups.len()];
        self.distribute(rest, &groups, &mut taken, 0, first, &mut total);
        self.memo.insert(key, total.clone());
        total
    }

    fn distribute(
        &mut self,
        rest: &[usize],
        groups: &[(usize, usize)],
        taken: &mut Vec<usize>,
        g: usize,
        remaining: usize,
        total: &mut BigInt,
    ) {
        if g == groups.len() {
            if remaining > 0 {
                return;
            }
            let mut weight = BigInt::one();
            let mut next = Vec::new();
            for (&(value, n), &a) in groups.iter().zip(taken.iter()) {
                weight *= binomial(n, a);
                next.extend(std::iter::repeat_n(value, n - a));
                next.extend(std::iter::repeat_n(value - 1, a));
            }
            let sub = self.count(rest, next);
            *total += weight * sub;
            return;
        }
        let available = groups[g].1.min(remaining);
        for a in 0..=available {
            taken[g] = a;
            self.distribute(rest, groups, taken, g + 1, remaining - a, total);
        }
        taken[g] = 0;
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}
