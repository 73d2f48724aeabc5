//! Fixed-capacity bit-set over a garden's sand enumeration.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SandSet {
    words: Box<[u64]>,
    capacity: usize,
}

impl SandSet {
    pub fn new(capacity: usize) -> SandSet {
        SandSet { words: vec![0; capacity.div_ceil(64)].into_boxed_slice(), capacity }
    }

    pub fn full(capacity: usize) -> SandSet {
        let mut s = SandSet::new(capacity);
        for i in 0..capacity {
            s.insert(i);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.capacity);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.capacity);
        let word = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &SandSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.capacity).filter(|&i| self.contains(i))
    }
}

impl fmt::Debug for SandSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_count() {
        let mut s = SandSet::new(130);
        assert!(s.is_empty());
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(129));
        assert_eq!(s.len(), 2);
        assert!(s.contains(129) && !s.contains(64));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 129]);
        assert!(s.is_subset(&SandSet::full(130)));
        assert_eq!(SandSet::full(130).len(), 130);
        assert_eq!(SandSet::new(0).len(), 0);
    }
}
