use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;
use std::sync::{Arc, OnceLock, RwLock};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Partitions index both Pontrjagin monomials `p_λ = p_{λ1} p_{λ2} ...` and
/// the product manifolds `N^{λ1} × N^{λ2} × ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts given in any order. Zero parts are
    /// dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The partition `(k)`.
    pub fn single(k: usize) -> Self {
        Partition::new(vec![k])
    }

    /// The partition `(1, 1, ..., 1)` of weight `k`.
    pub fn ones(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Distinct part values with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((value, count)) if *value == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// All partitions of one weight in canonical (reverse-lexicographic) order,
/// together with the inverse index.
#[derive(Debug)]
pub struct PartitionTable {
    weight: usize,
    list: Vec<Partition>,
    index: HashMap<Partition, usize>,
}

impl PartitionTable {
    fn build(weight: usize) -> Self {
        let mut list = Vec::new();
        let mut current = Vec::new();
        push_partitions(weight, weight, &mut current, &mut list);
        let index = list
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        PartitionTable {
            weight,
            list,
            index,
        }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }
}

impl Deref for PartitionTable {
    type Target = [Partition];

    fn deref(&self) -> &[Partition] {
        &self.list
    }
}

// Largest first part first; within a first part, recurse on the remainder.
fn push_partitions(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        push_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

type TableCache = RwLock<HashMap<usize, Arc<PartitionTable>>>;

fn table_cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Every partition of `k` exactly once, in reverse-lexicographic order:
/// `(k)` first and `(1, ..., 1)` last. Tables are memoized per weight.
pub fn partitions_of(k: usize) -> Arc<PartitionTable> {
    if let Some(table) = table_cache().read().unwrap().get(&k) {
        return Arc::clone(table);
    }
    let table = Arc::new(PartitionTable::build(k));
    let mut cache = table_cache().write().unwrap();
    Arc::clone(cache.entry(k).or_insert(table))
}

/// Position of `p` within `partitions_of(p.weight())`.
pub fn partition_index(p: &Partition) -> usize {
    partitions_of(p.weight())
        .index_of(p)
        .expect("every partition appears in the table of its weight")
}

/// All ordered pairs `(μ, ν)` whose multiset union is `p`, each exactly once.
///
/// The first pair is `(p, ())` and the last is `((), p)`.
pub fn partition_splittings(p: &Partition) -> Vec<(Partition, Partition)> {
    let mults = p.multiplicities();
    // left[i] = how many copies of the i-th distinct part go to the left side
    let mut left: Vec<usize> = mults.iter().map(|&(_, m)| m).collect();
    let mut out = Vec::new();
    loop {
        let mut mu = Vec::new();
        let mut nu = Vec::new();
        for (&(value, m), &l) in mults.iter().zip(&left) {
            mu.extend(std::iter::repeat_n(value, l));
            nu.extend(std::iter::repeat_n(value, m - l));
        }
        out.push((Partition { parts: mu }, Partition { parts: nu }));

        // decrement the odometer from the last digit
        let mut i = left.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if left[i] > 0 {
                left[i] -= 1;
                for (j, slot) in left.iter_mut().enumerate().skip(i + 1) {
                    *slot = mults[j].1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    // Brute force: every weakly decreasing tuple of positive integers summing to k.
    fn brute_force(k: usize) -> Vec<Vec<usize>> {
        fn go(k: usize, max: usize, prefix: Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == 0 {
                out.push(prefix);
                return;
            }
            for part in 1..=max.min(k) {
                let mut next = prefix.clone();
                next.push(part);
                go(k - part, part, next, out);
            }
        }
        let mut out = Vec::new();
        go(k, k, Vec::new(), &mut out);
        out
    }

    // Euler's pentagonal number recurrence.
    fn partition_counts(n: usize) -> Vec<u64> {
        let mut counts = vec![0i64; n + 1];
        counts[0] = 1;
        for m in 1..=n as i64 {
            let mut total = 0i64;
            for j in 1.. {
                let g1 = j * (3 * j - 1) / 2;
                if g1 > m {
                    break;
                }
                let sign = if j % 2 == 1 { 1 } else { -1 };
                total += sign * counts[(m - g1) as usize];
                let g2 = j * (3 * j + 1) / 2;
                if g2 <= m {
                    total += sign * counts[(m - g2) as usize];
                }
            }
            counts[m as usize] = total;
        }
        counts.into_iter().map(|c| c as u64).collect()
    }

    #[test]
    fn small_weights() {
        assert_eq!(partitions_of(0).to_vec(), vec![Partition::empty()]);
        assert_eq!(partitions_of(1).to_vec(), vec![p(&[1])]);
        assert_eq!(partitions_of(2).to_vec(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            partitions_of(4).to_vec(),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn weight_six_matches_brute_force() {
        let table = partitions_of(6);
        assert_eq!(table.len(), 11);
        let expected: HashSet<Vec<usize>> = brute_force(6).into_iter().collect();
        let got: HashSet<Vec<usize>> = table.iter().map(|q| q.parts().to_vec()).collect();
        assert_eq!(got, expected);
        // reverse-lexicographic
        for pair in table.windows(2) {
            assert!(pair[0].parts() > pair[1].parts());
        }
        assert_eq!(table.first(), Some(&p(&[6])));
        assert_eq!(table.last(), Some(&Partition::ones(6)));
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let counts = partition_counts(20);
        for (k, &count) in counts.iter().enumerate() {
            assert_eq!(partitions_of(k).len() as u64, count, "k = {k}");
        }
        assert_eq!(partitions_of(16).len(), 231);
    }

    #[test]
    fn indices() {
        assert_eq!(partition_index(&p(&[2])), 0);
        assert_eq!(partition_index(&p(&[1, 1])), 1);
        assert_eq!(partition_index(&Partition::empty()), 0);
        // [6],[5,1],[4,2],[4,1,1],[3,3],[3,2,1],...
        assert_eq!(partition_index(&p(&[3, 2, 1])), 5);
        let expected = brute_force(6)
            .into_iter()
            .filter(|v| v.as_slice() > [3, 2, 1].as_slice())
            .count();
        assert_eq!(partition_index(&p(&[3, 2, 1])), expected);
        for k in 0..10 {
            for (i, q) in partitions_of(k).iter().enumerate() {
                assert_eq!(partition_index(q), i);
            }
        }
    }

    #[test]
    fn splittings_of_small_partitions() {
        assert_eq!(
            partition_splittings(&p(&[1])),
            vec![(p(&[1]), Partition::empty()), (Partition::empty(), p(&[1]))]
        );
        assert_eq!(
            partition_splittings(&p(&[1, 1])),
            vec![
                (p(&[1, 1]), Partition::empty()),
                (p(&[1]), p(&[1])),
                (Partition::empty(), p(&[1, 1])),
            ]
        );
        let two_one = partition_splittings(&p(&[2, 1]));
        assert_eq!(two_one.len(), 4);
        let set: HashSet<_> = two_one.into_iter().collect();
        for pair in [
            (p(&[2, 1]), p(&[])),
            (p(&[2]), p(&[1])),
            (p(&[1]), p(&[2])),
            (p(&[]), p(&[2, 1])),
        ] {
            assert!(set.contains(&pair));
        }
        assert_eq!(
            partition_splittings(&Partition::empty()),
            vec![(Partition::empty(), Partition::empty())]
        );
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, 1, 1]).to_string(), "[2,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!(p(&[1, 0, 3]).parts(), &[3, 1]);
    }

    proptest! {
        #[test]
        fn splitting_count_is_product_of_multiplicities(k in 0usize..14, pick in any::<prop::sample::Index>()) {
            let table = partitions_of(k);
            let q = &table[pick.index(table.len())];
            let splits = partition_splittings(q);
            let expected: usize = q.multiplicities().iter().map(|&(_, m)| m + 1).product();
            prop_assert_eq!(splits.len(), expected);
            let distinct: HashSet<_> = splits.iter().cloned().collect();
            prop_assert_eq!(distinct.len(), splits.len());
            for (mu, nu) in &splits {
                prop_assert_eq!(&mu.union(nu), q);
            }
        }
    }
}
