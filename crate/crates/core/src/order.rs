//! Partial orders on a finite carrier.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reflexive, antisymmetric, transitive relation on `0..n`, stored as a
/// row-major boolean matrix: `leq(a, b)` means `a ≤ b`.
///
/// Every constructor validates the three poset axioms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartialOrder {
    n: usize,
    rel: Vec<bool>,
}

impl PartialOrder {
    pub fn discrete(n: usize) -> Self {
        let mut rel = vec![false; n * n];
        for a in 0..n {
            rel[a * n + a] = true;
        }
        PartialOrder { n, rel }
    }

    /// Validates a full relation matrix.
    pub fn from_matrix(n: usize, rel: Vec<bool>) -> Result<Self> {
        if rel.len() != n * n {
            return Err(Error::structural("order matrix has the wrong size"));
        }
        let order = PartialOrder { n, rel };
        order.validate()?;
        Ok(order)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let rel = (0..n * n).map(|i| f(i / n, i % n)).collect();
        Self::from_matrix(n, rel)
    }

    /// Reflexive-transitive closure of `pairs`; fails if the closure is not
    /// antisymmetric.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rel = vec![false; n * n];
        for a in 0..n {
            rel[a * n + a] = true;
        }
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::structural(format!("order pair ({a}, {b}) out of range")));
            }
            rel[a * n + b] = true;
        }
        transitive_closure(n, &mut rel);
        Self::from_matrix(n, rel)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for a in 0..n {
            if !self.leq(a, a) {
                return Err(Error::structural(format!("order is not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(Error::structural(format!(
                        "order is not antisymmetric: {a} ≤ {b} and {b} ≤ {a}"
                    )));
                }
                if !self.leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.leq(b, c) && !self.leq(a, c) {
                        return Err(Error::structural(format!(
                            "order is not transitive: {a} ≤ {b} ≤ {c} but {a} ≰ {c}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.rel[a * self.n + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn matrix(&self) -> &[bool] {
        &self.rel
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.leq(a, b) == (a == b)))
    }

    /// Strict pairs `a < b` in lexicographic order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n * n).map(|i| (i / n, i % n)).filter(|&(a, b)| self.lt(a, b)).collect()
    }

    /// Covering pairs `a ⋖ b`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .into_iter()
            .filter(|&(a, b)| !(0..self.n).any(|c| self.lt(a, c) && self.lt(c, b)))
            .collect()
    }

    /// Relation containment: every pair of `self` is a pair of `other`.
    pub fn is_subset_of(&self, other: &PartialOrder) -> bool {
        self.n == other.n && self.rel.iter().zip(&other.rel).all(|(&x, &y)| !x || y)
    }

    /// First pair of `self` missing from `other`.
    pub fn first_pair_missing_from(&self, other: &PartialOrder) -> Option<(usize, usize)> {
        let n = self.n;
        (0..n * n).find(|&i| self.rel[i] && !other.rel[i]).map(|i| (i / n, i % n))
    }

    /// The order with one pair removed, if that is still a partial order.
    pub fn without(&self, a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::structural("cannot remove a reflexive pair"));
        }
        let mut rel = self.rel.clone();
        rel[a * self.n + b] = false;
        Self::from_matrix(self.n, rel)
    }

    /// Image under a bijection `perm` (old index → new index).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut rel = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                rel[perm[a] * n + perm[b]] = self.leq(a, b);
            }
        }
        PartialOrder { n, rel }
    }

    /// Relational composite `self ∘ other`: `a (self∘other) c` iff some `b`
    /// has `a self b` and `b other c`. The result need not be an order, so
    /// it is returned as a raw matrix.
    pub fn compose(&self, other: &PartialOrder) -> Vec<bool> {
        let n = self.n;
        let mut out = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                if self.leq(a, b) {
                    for c in 0..n {
                        if other.leq(b, c) {
                            out[a * n + c] = true;
                        }
                    }
                }
            }
        }
        out
    }
}

/// Warshall closure on a row-major boolean matrix.
pub(crate) fn transitive_closure(n: usize, rel: &mut [bool]) {
    for k in 0..n {
        for a in 0..n {
            if rel[a * n + k] {
                for b in 0..n {
                    if rel[k * n + b] {
                        rel[a * n + b] = true;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pairs_are_closed() {
        let p = PartialOrder::from_pairs(3, [(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.strict_pairs(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn antisymmetry_after_closure_is_an_error() {
        assert!(PartialOrder::from_pairs(2, [(0, 1), (1, 0)]).is_err());
        assert!(PartialOrder::from_pairs(3, [(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn removal_keeps_or_rejects() {
        let p = PartialOrder::from_pairs(3, [(0, 1), (1, 2)]).unwrap();
        // removing a non-cover breaks transitivity
        assert!(p.without(0, 2).is_err());
        let q = p.without(0, 1).unwrap();
        assert!(!q.leq(0, 1) && q.leq(0, 2));
        assert!(matches!(p.without(1, 1), Err(Error::Structural(_))));
        let chain2 = PartialOrder::from_pairs(2, [(0, 1)]).unwrap();
        assert!(chain2.without(0, 1).unwrap().is_discrete());
    }

    proptest! {
        #[test]
        fn closure_of_random_pairs_is_an_order_or_cyclic(
            pairs in proptest::collection::vec((0usize..5, 0usize..5), 0..8)
        ) {
            match PartialOrder::from_pairs(5, pairs.clone()) {
                Ok(p) => {
                    for (a, b) in pairs {
                        prop_assert!(p.leq(a, b));
                    }
                    // relabelling is an order isomorphism
                    let perm = [4, 2, 0, 1, 3];
                    let q = p.relabel(&perm);
                    prop_assert!(PartialOrder::from_matrix(5, q.matrix().to_vec()).is_ok());
                    prop_assert_eq!(p.strict_pairs().len(), q.strict_pairs().len());
                    // an order rebuilt from its covers is itself
                    let back = PartialOrder::from_pairs(5, p.covers()).unwrap();
                    prop_assert_eq!(back, p);
                }
                Err(_) => {
                    // some cycle among the pairs
                    let mut rel = vec![false; 25];
                    for (a, b) in &pairs { rel[a * 5 + b] = true; }
                    transitive_closure(5, &mut rel);
                    prop_assert!((0..5).any(|a| (0..5).any(|b| a != b && rel[a * 5 + b] && rel[b * 5 + a])));
                }
            }
        }
    }
}
