//! Fixed-capacity vertex sets.
//!
//! Every graph in this crate lives on at most [`MAX_VERTICES`] vertices, so a
//! set of vertices fits in four machine words and all set algebra is branch-free.

/// Hard capacity for every graph handled by this crate.
pub const MAX_VERTICES: usize = 256;

const WORDS: usize = MAX_VERTICES / 64;

/// A subset of `{0, .., MAX_VERTICES-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    w: [u64; WORDS],
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { w: [0; WORDS] };

    /// Set `{v}`.
    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    /// Set `{0, .., n-1}`.
    pub fn all_below(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        let mut s = Self::EMPTY;
        for i in 0..n / 64 {
            s.w[i] = !0;
        }
        if n % 64 != 0 {
            s.w[n / 64] = (1u64 << (n % 64)) - 1;
        }
        s
    }

    pub fn from_slice(vs: &[usize]) -> Self {
        let mut s = Self::EMPTY;
        for &v in vs {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.w[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.w[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.w[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.w.iter().map(|x| x.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.w == [0; WORDS]
    }

    #[inline]
    pub fn union(&self, o: &VertexSet) -> VertexSet {
        let mut r = *self;
        for i in 0..WORDS {
            r.w[i] |= o.w[i];
        }
        r
    }

    #[inline]
    pub fn intersection(&self, o: &VertexSet) -> VertexSet {
        let mut r = *self;
        for i in 0..WORDS {
            r.w[i] &= o.w[i];
        }
        r
    }

    #[inline]
    pub fn difference(&self, o: &VertexSet) -> VertexSet {
        let mut r = *self;
        for i in 0..WORDS {
            r.w[i] &= !o.w[i];
        }
        r
    }

    #[inline]
    pub fn is_subset_of(&self, o: &VertexSet) -> bool {
        (0..WORDS).all(|i| self.w[i] & !o.w[i] == 0)
    }

    #[inline]
    pub fn is_disjoint_from(&self, o: &VertexSet) -> bool {
        (0..WORDS).all(|i| self.w[i] & o.w[i] == 0)
    }

    #[inline]
    pub fn intersects(&self, o: &VertexSet) -> bool {
        !self.is_disjoint_from(o)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        for i in 0..WORDS {
            if self.w[i] != 0 {
                return Some(i * 64 + self.w[i].trailing_zeros() as usize);
            }
        }
        None
    }

    /// Smallest element strictly above `v`, if any.
    pub fn next_above(&self, v: usize) -> Option<usize> {
        let mut i = v / 64;
        let mut word = self.w[i] & !((1u64 << (v % 64)) | ((1u64 << (v % 64)) - 1));
        loop {
            if word != 0 {
                return Some(i * 64 + word.trailing_zeros() as usize);
            }
            i += 1;
            if i == WORDS {
                return None;
            }
            word = self.w[i];
        }
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> VertexIter {
        VertexIter { set: *self, next: self.first() }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Raw words, used as a cheap dedup fingerprint for labelled graphs.
    pub fn words(&self) -> [u64; WORDS] {
        self.w
    }
}

pub struct VertexIter {
    set: VertexSet,
    next: Option<usize>,
}

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let cur = self.next?;
        self.next = self.set.next_above(cur);
        Some(cur)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(it: T) -> Self {
        let mut s = Self::EMPTY;
        for v in it {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    /// Lexicographic on the ascending element sequence, so among sets of
    /// equal size `{0,3} < {1,2}`. This is the order dominating-set
    /// enumeration streams in.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut s = VertexSet::EMPTY;
        assert!(s.is_empty());
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(255);
        assert_eq!(s.len(), 4);
        assert!(s.contains(63) && s.contains(64));
        s.remove(63);
        assert!(!s.contains(63));
        assert_eq!(s.to_vec(), vec![0, 64, 255]);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_slice(&[1, 2, 3]);
        let b = VertexSet::from_slice(&[3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert!(VertexSet::from_slice(&[1, 3]).is_subset_of(&a));
        assert!(!a.is_disjoint_from(&b));
        assert!(a.is_disjoint_from(&VertexSet::from_slice(&[5, 200])));
    }

    #[test]
    fn all_below_boundaries() {
        assert_eq!(VertexSet::all_below(0).len(), 0);
        assert_eq!(VertexSet::all_below(64).len(), 64);
        assert_eq!(VertexSet::all_below(65).len(), 65);
        assert_eq!(VertexSet::all_below(256).len(), 256);
    }

    #[test]
    fn iteration_is_ascending() {
        let s = VertexSet::from_slice(&[200, 5, 64, 63, 0]);
        assert_eq!(s.to_vec(), vec![0, 5, 63, 64, 200]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.next_above(64), Some(200));
        assert_eq!(s.next_above(200), None);
    }

    #[test]
    fn order_is_element_lexicographic() {
        // {0,3} precedes {1,2} even though 0b1001 > 0b0110 as an integer.
        let a = VertexSet::from_slice(&[0, 3]);
        let b = VertexSet::from_slice(&[1, 2]);
        assert!(a < b);
        assert!(VertexSet::EMPTY < a);
    }
}
