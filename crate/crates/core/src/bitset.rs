//! Fixed-capacity bitset over group element indices.
//!
//! The incremental feasibility tables and the torsion/avoidance machinery
//! all operate on dense sets of element indices in `0..n` with `n` up to
//! about a million, so a flat `Vec<u64>` of blocks beats hashing by a wide
//! margin and keeps iteration order ascending for free.

/// Dense set of `u64` indices below a fixed capacity.
#[derive(Clone, PartialEq, Eq)]
pub struct ElemSet {
    blocks: Vec<u64>,
    capacity: u64,
    len: u64,
}

impl ElemSet {
    /// Creates an empty set that can hold indices in `0..capacity`.
    pub fn new(capacity: u64) -> Self {
        let nblocks = capacity.div_ceil(64) as usize;
        ElemSet {
            blocks: vec![0; nblocks],
            capacity,
            len: 0,
        }
    }

    /// Builds a set from an iterator of indices.
    pub fn from_indices<I: IntoIterator<Item = u64>>(capacity: u64, iter: I) -> Self {
        let mut s = ElemSet::new(capacity);
        for i in iter {
            s.insert(i);
        }
        s
    }

    /// Number of indices the set can hold.
    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    /// Number of indices currently present.
    pub fn len(&self) -> u64 {
        self.len
    }

    /// Whether the set is empty.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Tests membership. Indices at or beyond the capacity are never members.
    #[inline]
    pub fn contains(&self, idx: u64) -> bool {
        debug_assert!(idx < self.capacity);
        let (b, m) = (idx / 64, 1u64 << (idx % 64));
        (self.blocks[b as usize] & m) != 0
    }

    /// Inserts an index, returning `true` if it was newly added.
    #[inline]
    pub fn insert(&mut self, idx: u64) -> bool {
        debug_assert!(idx < self.capacity);
        let (b, m) = (idx / 64, 1u64 << (idx % 64));
        let block = &mut self.blocks[b as usize];
        let fresh = (*block & m) == 0;
        *block |= m;
        self.len += fresh as u64;
        fresh
    }

    /// Removes an index, returning `true` if it was present.
    #[inline]
    pub fn remove(&mut self, idx: u64) -> bool {
        debug_assert!(idx < self.capacity);
        let (b, m) = (idx / 64, 1u64 << (idx % 64));
        let block = &mut self.blocks[b as usize];
        let present = (*block & m) != 0;
        *block &= !m;
        self.len -= present as u64;
        present
    }

    /// Removes every index.
    pub fn clear(&mut self) {
        self.blocks.iter_mut().for_each(|b| *b = 0);
        self.len = 0;
    }

    /// In-place union with another set of the same capacity.
    pub fn union_with(&mut self, other: &ElemSet) {
        assert_eq!(self.capacity, other.capacity, "capacity mismatch");
        let mut len = 0;
        for (a, &b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
            len += a.count_ones() as u64;
        }
        self.len = len;
    }

    /// Whether the two sets share any index.
    pub fn intersects(&self, other: &ElemSet) -> bool {
        assert_eq!(self.capacity, other.capacity, "capacity mismatch");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .any(|(a, b)| a & b != 0)
    }

    /// Iterates the stored indices in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            blocks: &self.blocks,
            block_idx: 0,
            current: self.blocks.first().copied().unwrap_or(0),
        }
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the indices of an [`ElemSet`].
pub struct Iter<'a> {
    blocks: &'a [u64],
    block_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        while self.current == 0 {
            self.block_idx += 1;
            if self.block_idx >= self.blocks.len() {
                return None;
            }
            self.current = self.blocks[self.block_idx];
        }
        let bit = self.current.trailing_zeros() as u64;
        self.current &= self.current - 1;
        Some(self.block_idx as u64 * 64 + bit)
    }
}

impl<'a> IntoIterator for &'a ElemSet {
    type Item = u64;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
