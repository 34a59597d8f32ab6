//! Fixed-width vertex bitsets used in the solver inner loops.
//!
//! Graphs with at most 128 vertices use a bare `u128`; larger graphs fall
//! back to a boxed word slice. Both implement [`Bits`], so the forcing
//! closure and the connected-subset enumerator are written once.

pub(crate) trait Bits: Clone + Eq + std::fmt::Debug + Send + Sync {
    fn empty(n: usize) -> Self;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn union_with(&mut self, other: &Self);
    fn difference_with(&mut self, other: &Self);
    fn intersect_with(&mut self, other: &Self);
    fn count(&self) -> usize;
    fn is_empty(&self) -> bool;
    fn first(&self) -> Option<usize>;
    /// Single element of a set with exactly one element after removing `mask`.
    fn single_outside(&self, mask: &Self) -> Option<Self>;
    fn for_each(&self, f: impl FnMut(usize));

    fn to_vec(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.count());
        self.for_each(|v| out.push(v));
        out
    }

    fn from_slice(n: usize, vs: &[usize]) -> Self {
        let mut s = Self::empty(n);
        for &v in vs {
            s.insert(v);
        }
        s
    }

    fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }
}

impl Bits for u128 {
    #[inline]
    fn empty(_n: usize) -> Self {
        0
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1u128 << v;
    }
    #[inline]
    fn remove(&mut self, v: usize) {
        *self &= !(1u128 << v);
    }
    #[inline]
    fn union_with(&mut self, other: &Self) {
        *self |= *other;
    }
    #[inline]
    fn difference_with(&mut self, other: &Self) {
        *self &= !*other;
    }
    #[inline]
    fn intersect_with(&mut self, other: &Self) {
        *self &= *other;
    }
    #[inline]
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    #[inline]
    fn single_outside(&self, mask: &Self) -> Option<Self> {
        let rest = *self & !*mask;
        (rest != 0 && rest & (rest - 1) == 0).then_some(rest)
    }
    #[inline]
    fn for_each(&self, mut f: impl FnMut(usize)) {
        let mut x = *self;
        while x != 0 {
            f(x.trailing_zeros() as usize);
            x &= x - 1;
        }
    }
}

/// Word-slice bitset for graphs above 128 vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct WideBits(Box<[u64]>);

impl Bits for WideBits {
    fn empty(n: usize) -> Self {
        WideBits(vec![0; n.div_ceil(64).max(1)].into_boxed_slice())
    }
    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }
    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }
    fn union_with(&mut self, other: &Self) {
        self.0.iter_mut().zip(other.0.iter()).for_each(|(a, b)| *a |= b);
    }
    fn difference_with(&mut self, other: &Self) {
        self.0.iter_mut().zip(other.0.iter()).for_each(|(a, b)| *a &= !b);
    }
    fn intersect_with(&mut self, other: &Self) {
        self.0.iter_mut().zip(other.0.iter()).for_each(|(a, b)| *a &= b);
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn single_outside(&self, mask: &Self) -> Option<Self> {
        let mut found: Option<(usize, u64)> = None;
        for (i, (a, b)) in self.0.iter().zip(mask.0.iter()).enumerate() {
            let w = a & !b;
            if w == 0 {
                continue;
            }
            if found.is_some() || w & (w - 1) != 0 {
                return None;
            }
            found = Some((i, w));
        }
        found.map(|(i, w)| {
            let mut out = vec![0; self.0.len()].into_boxed_slice();
            out[i] = w;
            WideBits(out)
        })
    }
    fn for_each(&self, mut f: impl FnMut(usize)) {
        for (i, &w) in self.0.iter().enumerate() {
            let mut x = w;
            while x != 0 {
                f(i * 64 + x.trailing_zeros() as usize);
                x &= x - 1;
            }
        }
    }
}
