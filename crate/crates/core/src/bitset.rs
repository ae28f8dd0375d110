//! Fixed-width vertex sets for the branch-and-bound search.
//!
//! The search is generic over [`VertexSet`] so that graphs with at most 64 or
//! 128 vertices run on a single machine word without heap traffic.

pub(crate) trait VertexSet: Clone + PartialEq {
    fn with_capacity(n: usize) -> Self;
    fn insert(&mut self, i: usize);
    fn remove(&mut self, i: usize);
    fn contains(&self, i: usize) -> bool;
    fn count(&self) -> usize;
    fn is_empty(&self) -> bool;
    fn and(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn or_assign(&mut self, other: &Self);
    fn and_count(&self, other: &Self) -> usize;
    /// Members in increasing order.
    fn members(&self) -> Vec<usize>;

    fn first(&self) -> Option<usize> {
        self.members().first().copied()
    }
}

macro_rules! word_set {
    ($t:ty) => {
        impl VertexSet for $t {
            fn with_capacity(n: usize) -> Self {
                debug_assert!(n <= <$t>::BITS as usize);
                0
            }
            fn insert(&mut self, i: usize) {
                *self |= 1 << i;
            }
            fn remove(&mut self, i: usize) {
                *self &= !(1 << i);
            }
            fn contains(&self, i: usize) -> bool {
                *self >> i & 1 == 1
            }
            fn count(&self) -> usize {
                self.count_ones() as usize
            }
            fn is_empty(&self) -> bool {
                *self == 0
            }
            fn and(&self, other: &Self) -> Self {
                self & other
            }
            fn and_not(&self, other: &Self) -> Self {
                self & !other
            }
            fn or_assign(&mut self, other: &Self) {
                *self |= other;
            }
            fn and_count(&self, other: &Self) -> usize {
                (self & other).count_ones() as usize
            }
            fn members(&self) -> Vec<usize> {
                let mut out = Vec::with_capacity(self.count());
                let mut w = *self;
                while w != 0 {
                    out.push(w.trailing_zeros() as usize);
                    w &= w - 1;
                }
                out
            }
            fn first(&self) -> Option<usize> {
                (*self != 0).then(|| self.trailing_zeros() as usize)
            }
        }
    };
}

word_set!(u64);
word_set!(u128);

/// Arbitrary-width set backed by 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Words(Vec<u64>);

impl VertexSet for Words {
    fn with_capacity(n: usize) -> Self {
        Words(vec![0; n.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn and(&self, other: &Self) -> Self {
        Words(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn and_not(&self, other: &Self) -> Self {
        Words(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }
    fn or_assign(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
    fn and_count(&self, other: &Self) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
    fn members(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (k, &word) in self.0.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                out.push(k * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exercise<S: VertexSet + std::fmt::Debug>(n: usize) {
        let mut a = S::with_capacity(n);
        let mut b = S::with_capacity(n);
        for i in (0..n).step_by(3) {
            a.insert(i);
        }
        for i in (0..n).step_by(2) {
            b.insert(i);
        }
        assert_eq!(a.and(&b).members(), (0..n).step_by(6).collect::<Vec<_>>());
        assert_eq!(a.and_count(&b), (0..n).step_by(6).count());
        assert_eq!(a.first(), Some(0));
        a.remove(0);
        assert_eq!(a.first(), Some(3));
        assert!(!a.contains(0) && a.contains(3) && !a.contains(4));
        let diff = b.and_not(&a);
        assert!(diff
            .members()
            .iter()
            .all(|&i| i % 2 == 0 && (i % 3 != 0 || i == 0)));
        let mut c = S::with_capacity(n);
        assert!(c.is_empty());
        c.or_assign(&a);
        assert_eq!(c, a);
    }

    #[test]
    fn all_widths_agree() {
        exercise::<u64>(64);
        exercise::<u128>(128);
        exercise::<Words>(200);
    }
}
