use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::polyring::{Monomial, MonomialOrder};

/// How the next critical pair is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelectionStrategy {
    /// Smallest lcm of leading monomials first, ties broken by `(i, j)`.
    #[default]
    Normal,
    /// Pairs in the order they were created.
    Fifo,
}

#[derive(Clone, Debug)]
pub(crate) struct CriticalPair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
    seq: u64,
}

/// Pending critical pairs `(i, j)` with `i < j`, indices into the basis
/// under construction. A pair leaves the queue exactly once.
#[derive(Debug)]
pub(crate) struct PairQueue {
    strategy: SelectionStrategy,
    pending: Vec<CriticalPair>,
    keys: HashSet<(usize, usize)>,
    next_seq: u64,
}

impl PairQueue {
    pub fn new(strategy: SelectionStrategy) -> Self {
        PairQueue {
            strategy,
            pending: Vec::new(),
            keys: HashSet::new(),
            next_seq: 0,
        }
    }

    pub fn push(&mut self, i: usize, j: usize, lcm: Monomial) {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        if self.keys.insert((i, j)) {
            self.pending.push(CriticalPair {
                i,
                j,
                lcm,
                seq: self.next_seq,
            });
            self.next_seq += 1;
        }
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.keys.contains(&key)
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.pending.len()
    }

    pub fn pop(&mut self, order: MonomialOrder) -> Option<CriticalPair> {
        let idx = match self.strategy {
            SelectionStrategy::Fifo => self
                .pending
                .iter()
                .enumerate()
                .min_by_key(|(_, p)| p.seq)
                .map(|(k, _)| k)?,
            SelectionStrategy::Normal => self
                .pending
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    order
                        .cmp_same_ring(&a.lcm, &b.lcm)
                        .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
                })
                .map(|(k, _)| k)?,
        };
        let pair = self.pending.swap_remove(idx);
        self.keys.remove(&(pair.i, pair.j));
        Some(pair)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn normal_strategy_takes_smallest_lcm() {
        let mut q = PairQueue::new(SelectionStrategy::Normal);
        q.push(0, 1, m(&[2, 1]));
        q.push(0, 2, m(&[1, 0]));
        q.push(1, 2, m(&[1, 0]));
        q.push(2, 0, m(&[9, 9]));
        assert_eq!(q.len(), 3);
        let order = MonomialOrder::Grevlex;
        let got: Vec<_> = std::iter::from_fn(|| q.pop(order).map(|p| (p.i, p.j))).collect();
        assert_eq!(got, vec![(0, 2), (1, 2), (0, 1)]);
    }

    #[test]
    fn fifo_keeps_creation_order() {
        let mut q = PairQueue::new(SelectionStrategy::Fifo);
        q.push(1, 2, m(&[5]));
        q.push(0, 1, m(&[1]));
        q.push(0, 2, m(&[3]));
        assert!(q.contains(2, 1));
        let got: Vec<_> =
            std::iter::from_fn(|| q.pop(MonomialOrder::Lex).map(|p| (p.i, p.j))).collect();
        assert_eq!(got, vec![(1, 2), (0, 1), (0, 2)]);
        assert!(!q.contains(1, 2));
    }
}
