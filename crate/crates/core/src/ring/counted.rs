use std::ops::Add;
use std::sync::atomic::{AtomicU32, AtomicU64, Ordering::Relaxed};
use std::sync::Arc;

use serde::Serialize;

use super::{Ring, RingDescriptor};
use crate::error::RingError;

/// Operation counts and the length of the longest dependency chain.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OpStats {
    pub adds: u64,
    pub subs: u64,
    pub muls: u64,
    pub inverses: u64,
    /// Stage count: inputs and constants sit at depth 0, every operation sits
    /// one above its deepest operand.
    pub depth: u32,
}

impl OpStats {
    pub fn total(&self) -> u64 {
        self.adds + self.subs + self.muls + self.inverses
    }

    /// Combines counts of independent branches; depths run side by side.
    pub fn merge(self, other: OpStats) -> OpStats {
        OpStats {
            adds: self.adds + other.adds,
            subs: self.subs + other.subs,
            muls: self.muls + other.muls,
            inverses: self.inverses + other.inverses,
            depth: self.depth.max(other.depth),
        }
    }
}

impl Add for OpStats {
    type Output = OpStats;

    fn add(self, rhs: OpStats) -> OpStats {
        self.merge(rhs)
    }
}

#[derive(Debug, Default)]
struct Counters {
    adds: AtomicU64,
    subs: AtomicU64,
    muls: AtomicU64,
    inverses: AtomicU64,
    depth: AtomicU32,
}

/// A value together with its depth in the dependency DAG.
#[derive(Clone, Debug)]
pub struct Tracked<E> {
    pub value: E,
    pub depth: u32,
}

impl<E: PartialEq> PartialEq for Tracked<E> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

/// Instrumented view of a ring: same results, plus shared counters.
///
/// Clones share counters, so a computation may hand copies to worker threads.
#[derive(Clone, Debug)]
pub struct Counted<R> {
    inner: R,
    counters: Arc<Counters>,
    trap_inverse: bool,
}

impl<R: Ring> Counted<R> {
    pub fn new(inner: R) -> Self {
        Counted { inner, counters: Arc::default(), trap_inverse: false }
    }

    /// Makes every call to [`Ring::inverse`] fail with
    /// [`RingError::InverseTrapped`].
    pub fn trapping_inverse(mut self) -> Self {
        self.trap_inverse = true;
        self
    }

    pub fn inner(&self) -> &R {
        &self.inner
    }

    pub fn lift(&self, value: R::Elem) -> Tracked<R::Elem> {
        Tracked { value, depth: 0 }
    }

    pub fn stats(&self) -> OpStats {
        let c = &self.counters;
        OpStats {
            adds: c.adds.load(Relaxed),
            subs: c.subs.load(Relaxed),
            muls: c.muls.load(Relaxed),
            inverses: c.inverses.load(Relaxed),
            depth: c.depth.load(Relaxed),
        }
    }

    fn record(&self, counter: &AtomicU64, a: &Tracked<R::Elem>, b: &Tracked<R::Elem>) -> u32 {
        counter.fetch_add(1, Relaxed);
        let depth = a.depth.max(b.depth) + 1;
        self.counters.depth.fetch_max(depth, Relaxed);
        depth
    }
}

impl<R: Ring> Ring for Counted<R> {
    type Elem = Tracked<R::Elem>;

    fn descriptor(&self) -> RingDescriptor {
        self.inner.descriptor()
    }

    fn zero(&self) -> Self::Elem {
        self.lift(self.inner.zero())
    }

    fn one(&self) -> Self::Elem {
        self.lift(self.inner.one())
    }

    fn from_i64(&self, value: i64) -> Self::Elem {
        self.lift(self.inner.from_i64(value))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let depth = self.record(&self.counters.adds, a, b);
        Tracked { value: self.inner.add(&a.value, &b.value), depth }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let depth = self.record(&self.counters.subs, a, b);
        Tracked { value: self.inner.sub(&a.value, &b.value), depth }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let depth = self.record(&self.counters.muls, a, b);
        Tracked { value: self.inner.mul(&a.value, &b.value), depth }
    }

    /// Free: fused into a later subtraction in the stage model.
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Tracked { value: self.inner.neg(&a.value), depth: a.depth }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.inner.is_zero(&a.value)
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        self.inner.contains(&a.value)
    }

    fn characteristic(&self) -> u64 {
        self.inner.characteristic()
    }

    fn is_field(&self) -> bool {
        self.inner.is_field()
    }

    fn inverse(&self, a: &Self::Elem) -> Result<Self::Elem, RingError> {
        if self.trap_inverse {
            return Err(RingError::InverseTrapped);
        }
        self.counters.inverses.fetch_add(1, Relaxed);
        let depth = a.depth + 1;
        self.counters.depth.fetch_max(depth, Relaxed);
        Ok(Tracked { value: self.inner.inverse(&a.value)?, depth })
    }

    fn format(&self, a: &Self::Elem) -> String {
        self.inner.format(&a.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, Zmod};

    #[test]
    fn single_sum() {
        let r = Counted::new(Integers);
        let s = r.add(&r.from_i64(2), &r.from_i64(3));
        assert_eq!(s.value, 5.into());
        assert_eq!(s.depth, 1);
        assert_eq!(r.stats(), OpStats { adds: 1, depth: 1, ..OpStats::default() });
    }

    #[test]
    fn negation_is_free() {
        let r = Counted::new(Integers);
        let x = r.neg(&r.from_i64(4));
        let y = r.sub(&r.one(), &x);
        assert_eq!(y.value, 5.into());
        assert_eq!(r.stats(), OpStats { subs: 1, depth: 1, ..OpStats::default() });
    }

    #[test]
    fn depth_is_operand_order_independent() {
        let r = Counted::new(Zmod::new(7).unwrap());
        let xs: Vec<_> = (1..=5).map(|v| r.from_i64(v)).collect();
        // ((x0*x1) + x2) * (x3 + x4), evaluated in two different orders.
        let left = r.mul(&r.add(&r.mul(&xs[0], &xs[1]), &xs[2]), &r.add(&xs[3], &xs[4]));
        let right = r.mul(&r.add(&xs[4], &xs[3]), &r.add(&xs[2], &r.mul(&xs[1], &xs[0])));
        assert_eq!(left, right);
        assert_eq!(left.depth, right.depth);
        assert_eq!(left.depth, 3);
    }

    #[test]
    fn trap() {
        let r = Counted::new(Zmod::new(5).unwrap()).trapping_inverse();
        assert_eq!(r.inverse(&r.from_i64(2)), Err(RingError::InverseTrapped));
        let plain = Counted::new(Zmod::new(5).unwrap());
        assert_eq!(plain.inverse(&plain.from_i64(2)).unwrap().value, 3);
        assert_eq!(plain.stats().inverses, 1);
    }

    #[test]
    fn merge_is_associative_and_commutative() {
        let a = OpStats { adds: 1, subs: 2, muls: 3, inverses: 0, depth: 4 };
        let b = OpStats { adds: 5, subs: 0, muls: 1, inverses: 1, depth: 2 };
        let c = OpStats { adds: 0, subs: 7, muls: 0, inverses: 0, depth: 9 };
        assert_eq!(a + b, b + a);
        assert_eq!((a + b) + c, a + (b + c));
    }
}
