//! Enumeration of the circular orders of a vertex set, up to rotation and
//! reflection.
//!
//! Rotations are quotiented out by pinning the smallest vertex to the first
//! slot; reflections by keeping only orders whose second entry is smaller than
//! their last. That leaves `(n-1)!/2` distinct orders for `n >= 3` and exactly
//! one for smaller `n`. Work splits into contiguous ranges of the underlying
//! `(n-1)!` permutation indices, so chunks can be scanned independently.

use crate::graph::{Graph, VertexId};

use super::DrawingError;

#[derive(Clone, Debug)]
pub struct OrderEnumerator {
    first: Option<VertexId>,
    rest: Vec<VertexId>,
}

impl OrderEnumerator {
    pub fn new(g: &Graph, cap: usize) -> Result<Self, DrawingError> {
        let n = g.vertex_count();
        if n > cap {
            return Err(DrawingError::TooLarge { found: n, cap });
        }
        let mut vs: Vec<VertexId> = g.vertices().collect();
        vs.sort_unstable();
        let mut it = vs.into_iter();
        let first = it.next();
        Ok(OrderEnumerator {
            first,
            rest: it.collect(),
        })
    }

    /// Number of circular orders up to rotation and reflection.
    pub fn count(&self) -> u64 {
        let n = self.rest.len() + usize::from(self.first.is_some());
        if n < 3 {
            1
        } else {
            factorial(n as u64 - 1) / 2
        }
    }

    /// Size of the underlying permutation index space; every order produced
    /// by [`order_at`](Self::order_at) has an index below this.
    pub fn slot_count(&self) -> u64 {
        factorial(self.rest.len() as u64)
    }

    /// The order at permutation index `idx`, or `None` when the permutation
    /// there is the reflection of an earlier one.
    pub fn order_at(&self, idx: u64) -> Option<Vec<VertexId>> {
        let rest = unrank_permutation(&self.rest, idx)?;
        if rest.len() >= 2 && rest[0] > rest[rest.len() - 1] {
            return None;
        }
        let mut order = Vec::with_capacity(rest.len() + 1);
        order.extend(self.first);
        order.extend(rest);
        Some(order)
    }

    /// All canonical orders with permutation index in `start..end`.
    pub fn orders_in_range(&self, start: u64, end: u64) -> Vec<Vec<VertexId>> {
        (start..end.min(self.slot_count()))
            .filter_map(|i| self.order_at(i))
            .collect()
    }

    pub fn all_orders(&self) -> Vec<Vec<VertexId>> {
        self.orders_in_range(0, self.slot_count())
    }

    /// At most `parts` contiguous index ranges covering the whole slot space.
    pub fn chunks(&self, parts: usize) -> Vec<(u64, u64)> {
        let total = self.slot_count();
        let parts = (parts.max(1) as u64).min(total.max(1));
        let base = total / parts;
        let extra = total % parts;
        let mut ranges = Vec::with_capacity(parts as usize);
        let mut at = 0;
        for i in 0..parts {
            let len = base + u64::from(i < extra);
            ranges.push((at, at + len));
            at += len;
        }
        ranges
    }
}

fn factorial(n: u64) -> u64 {
    (2..=n).product::<u64>().max(1)
}

/// The `idx`-th permutation of `items` in lexicographic order.
fn unrank_permutation(items: &[VertexId], mut idx: u64) -> Option<Vec<VertexId>> {
    if idx >= factorial(items.len() as u64) {
        return None;
    }
    let mut pool = items.to_vec();
    let mut out = Vec::with_capacity(pool.len());
    for k in (1..=pool.len() as u64).rev() {
        let block = factorial(k - 1);
        let pick = (idx / block) as usize;
        idx %= block;
        out.push(pool.remove(pick));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn enumerator(n: usize) -> OrderEnumerator {
        OrderEnumerator::new(&generate::complete(n), 10).unwrap()
    }

    #[test]
    fn counts_match_the_closed_form() {
        assert_eq!(enumerator(1).count(), 1);
        assert_eq!(enumerator(2).count(), 1);
        assert_eq!(enumerator(3).count(), 1);
        assert_eq!(enumerator(5).count(), 12);
        assert_eq!(enumerator(8).count(), 2520);
    }

    #[test]
    fn produced_orders_match_count() {
        for n in 1..=6 {
            let en = enumerator(n);
            let orders = en.all_orders();
            assert_eq!(orders.len() as u64, en.count(), "n = {n}");
            // all distinct, all starting at the smallest vertex
            let set: std::collections::BTreeSet<_> = orders.iter().collect();
            assert_eq!(set.len(), orders.len());
            assert!(orders.iter().all(|o| o[0] == 0));
        }
    }

    #[test]
    fn chunks_cover_everything_once() {
        let en = enumerator(6);
        let mut all = Vec::new();
        for (s, e) in en.chunks(7) {
            all.extend(en.orders_in_range(s, e));
        }
        assert_eq!(all, en.all_orders());
    }

    #[test]
    fn cap_is_enforced() {
        let err = OrderEnumerator::new(&generate::complete(11), 10).unwrap_err();
        assert_eq!(err, DrawingError::TooLarge { found: 11, cap: 10 });
    }

    #[test]
    fn reflections_are_skipped() {
        // n = 4: permutations of [1,2,3]; canonical ones keep first < last
        let en = enumerator(4);
        let orders = en.all_orders();
        assert_eq!(
            orders,
            vec![vec![0, 1, 2, 3], vec![0, 1, 3, 2], vec![0, 2, 1, 3]]
        );
    }
}
