//! Exhaustive set-partition enumeration over restricted-growth strings and
//! the brute-force oracle for the largest-singleton statistic.
//!
//! The oracle computes A(n, k) straight from the definition -- sum the
//! weights of all partitions of {1, ..., n+1} whose largest singleton is
//! {k+1} -- and is the independent reference every formula-based route is
//! checked against.

use crate::combinatorics::WeightFamily;
use crate::error::{Error, Result};
use crate::ring::Poly;

/// Default cap on the enumeration size; Bell(12) is ~4.2M partitions.
pub const DEFAULT_ORACLE_CAP: usize = 12;

/// A set partition of {1, ..., n}, canonically encoded as a
/// restricted-growth string: rgs[0] = 0 and
/// rgs[i] <= 1 + max(rgs[0..i]); rgs[i] is the block index of element i+1,
/// with blocks numbered in order of their smallest element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetPartition {
    rgs: Vec<usize>,
}

impl SetPartition {
    pub fn from_rgs(rgs: Vec<usize>) -> Result<Self> {
        if rgs.is_empty() {
            return Err(Error::Parse("restricted-growth string is empty".into()));
        }
        let mut max = 0usize;
        for (i, &v) in rgs.iter().enumerate() {
            let bound = if i == 0 { 0 } else { max + 1 };
            if v > bound {
                return Err(Error::Parse(format!(
                    "rgs[{i}] = {v} violates the growth bound {bound}"
                )));
            }
            max = max.max(v);
        }
        Ok(SetPartition { rgs })
    }

    /// Number of elements being partitioned.
    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks as sorted element lists (1-based), ordered by smallest element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.num_blocks()];
        for &b in &self.rgs {
            sizes[b] += 1;
        }
        sizes
    }

    /// The largest element that forms a block by itself, if any.
    pub fn largest_singleton(&self) -> Option<usize> {
        let sizes = self.block_sizes();
        self.rgs
            .iter()
            .enumerate()
            .rev()
            .find(|&(_, &b)| sizes[b] == 1)
            .map(|(i, _)| i + 1)
    }
}

impl std::fmt::Display for SetPartition {
    /// `{1,4}{2}{3,5}` style block list.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for block in self.blocks() {
            write!(f, "{{")?;
            for (i, e) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Streaming iterator over all partitions of an n-set in lexicographic
/// restricted-growth order. Iterative successor stepping, bounded memory.
pub struct PartitionIter {
    rgs: Vec<usize>,
    /// maxes[i] = max(rgs[0..=i]), maintained incrementally.
    maxes: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for PartitionIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(SetPartition {
                rgs: self.rgs.clone(),
            });
        }
        let n = self.rgs.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.rgs[i] <= self.maxes[i - 1] {
                self.rgs[i] += 1;
                self.maxes[i] = self.maxes[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[j - 1];
                }
                return Some(SetPartition {
                    rgs: self.rgs.clone(),
                });
            }
        }
        self.done = true;
        None
    }
}

/// Every partition of {1, ..., n}, exactly once. `n` must be positive and
/// within the cap.
pub fn enumerate(n: usize, cap: usize) -> Result<PartitionIter> {
    if n == 0 {
        return Err(Error::Parse(
            "cannot enumerate partitions of 0 elements".into(),
        ));
    }
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    Ok(PartitionIter {
        rgs: vec![0; n],
        maxes: vec![0; n],
        started: false,
        done: false,
    })
}

/// Product of the family weight of each block.
pub fn weight(p: &SetPartition, w: &WeightFamily) -> Result<Poly> {
    let mut acc = Poly::one();
    for size in p.block_sizes() {
        acc = &acc * &w.weight(size)?;
    }
    Ok(acc)
}

/// A(n, k) by definition: total weight of partitions of {1, ..., n+1}
/// whose largest singleton is {k+1}. Requires k <= n and n+1 within the cap.
pub fn oracle_a(n: usize, k: usize, w: &WeightFamily, cap: usize) -> Result<Poly> {
    if k > n {
        return Err(Error::TriangleDomain { n, k });
    }
    let mut acc = Poly::zero();
    for p in enumerate(n + 1, cap)? {
        if p.largest_singleton() == Some(k + 1) {
            acc = &acc + &weight(&p, w)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{complete_bell, WeightFamily};
    use crate::ring::{rat, Poly};

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate(1, 12).unwrap().count(), 1);
        assert_eq!(enumerate(3, 12).unwrap().count(), 5);
        assert_eq!(enumerate(6, 12).unwrap().count(), 203);
    }

    #[test]
    fn enumerate_respects_cap() {
        assert!(matches!(
            enumerate(13, 12),
            Err(Error::OracleCap { n: 13, cap: 12 })
        ));
        assert!(enumerate(0, 12).is_err());
    }

    #[test]
    fn counts_match_complete_bell() {
        for n in 1..=10 {
            let count = enumerate(n, 12).unwrap().count();
            let bell = complete_bell(n, &WeightFamily::ones(n), false)
                .unwrap()
                .as_rational()
                .unwrap();
            assert_eq!(rat(count as i64), bell, "n={n}");
        }
    }

    #[test]
    fn streams_full_count_at_default_cap() {
        let count = enumerate(12, DEFAULT_ORACLE_CAP).unwrap().count();
        assert_eq!(count, 4_213_597);
    }

    #[test]
    fn no_duplicates_small() {
        let mut seen = std::collections::HashSet::new();
        for p in enumerate(6, 12).unwrap() {
            assert!(seen.insert(p.rgs().to_vec()));
        }
        assert_eq!(seen.len(), 203);
    }

    #[test]
    fn weight_examples() {
        let p = SetPartition::from_rgs(vec![0, 1, 1]).unwrap(); // {1}{2,3}
        assert_eq!(
            weight(&p, &WeightFamily::symbolic()).unwrap(),
            &Poly::t(1) * &Poly::t(2)
        );
        let whole = SetPartition::from_rgs(vec![0, 0, 0]).unwrap(); // {1,2,3}
        assert_eq!(
            weight(&whole, &WeightFamily::Forest).unwrap(),
            Poly::from_int(9)
        );
        let two = SetPartition::from_rgs(vec![0, 1]).unwrap(); // {1}{2}
        assert_eq!(
            weight(&two, &WeightFamily::Involution).unwrap(),
            Poly::one()
        );
    }

    #[test]
    fn largest_singleton_examples() {
        let p = SetPartition::from_rgs(vec![0, 1, 1]).unwrap(); // {1}{2,3}
        assert_eq!(p.largest_singleton(), Some(1));
        let whole = SetPartition::from_rgs(vec![0, 0, 0]).unwrap();
        assert_eq!(whole.largest_singleton(), None);
        let all = SetPartition::from_rgs(vec![0, 1, 2]).unwrap();
        assert_eq!(all.largest_singleton(), Some(3));
    }

    #[test]
    fn display_blocks() {
        let p = SetPartition::from_rgs(vec![0, 1, 0, 1, 2]).unwrap();
        assert_eq!(p.to_string(), "{1,3}{2,4}{5}");
    }

    #[test]
    fn rgs_validation() {
        assert!(SetPartition::from_rgs(vec![1]).is_err());
        assert!(SetPartition::from_rgs(vec![0, 2]).is_err());
        assert!(SetPartition::from_rgs(vec![0, 1, 2]).is_ok());
    }

    #[test]
    fn oracle_examples() {
        let sym = WeightFamily::symbolic();
        assert_eq!(oracle_a(2, 0, &sym, 12).unwrap(), &Poly::t(1) * &Poly::t(2));
        assert!(oracle_a(1, 0, &sym, 12).unwrap().is_zero());
        assert_eq!(
            oracle_a(2, 2, &WeightFamily::Permutation, 12).unwrap(),
            Poly::from_int(2)
        );
        assert!(matches!(
            oracle_a(2, 3, &sym, 12),
            Err(Error::TriangleDomain { n: 2, k: 3 })
        ));
    }

    #[test]
    fn exhaustive_split_by_largest_singleton() {
        // Partitions of an (n+1)-set either have no singleton at all or a
        // unique largest one, so the no-singleton weight plus all A(n, k)
        // must add up to the complete Bell polynomial.
        let sym = WeightFamily::symbolic();
        for n in 0..=8 {
            let mut acc = complete_bell(n + 1, &sym, true).unwrap();
            for k in 0..=n {
                acc = &acc + &oracle_a(n, k, &sym, 12).unwrap();
            }
            assert_eq!(acc, complete_bell(n + 1, &sym, false).unwrap(), "n={n}");
        }
    }

    #[test]
    fn oracle_boundary_columns() {
        let sym = WeightFamily::symbolic();
        for n in 0..=8 {
            let full = complete_bell(n, &sym, false).unwrap();
            let no_singletons = complete_bell(n, &sym, true).unwrap();
            assert_eq!(
                oracle_a(n, n, &sym, 12).unwrap(),
                &Poly::t(1) * &full,
                "diagonal n={n}"
            );
            assert_eq!(
                oracle_a(n, 0, &sym, 12).unwrap(),
                &Poly::t(1) * &no_singletons,
                "column 0 n={n}"
            );
        }
    }
}
