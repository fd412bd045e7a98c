//! Bitmask algebra over messages and servers.
//!
//! A [`MsgSet`] is a subset of `[n]` stored as a `u16` mask (message `i` is
//! bit `i - 1`). A server is identified with the nonempty [`MsgSet`] it has
//! access to. Families of message sets are bitsets indexed by mask, so a
//! family over `[n]` occupies `2^n` bits.

use std::fmt;

use smallvec::SmallVec;

/// Largest supported message count.
pub const MAX_MESSAGES: usize = 16;

/// A subset of the messages `1..=n`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MsgSet(u16);

impl MsgSet {
    pub const EMPTY: MsgSet = MsgSet(0);

    pub const fn from_mask(mask: u16) -> Self {
        MsgSet(mask)
    }

    pub const fn mask(self) -> u16 {
        self.0
    }

    /// `[n]`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_MESSAGES);
        MsgSet(((1u32 << n) - 1) as u16)
    }

    /// `{i}` for a 1-based message index.
    pub fn singleton(i: usize) -> Self {
        assert!((1..=MAX_MESSAGES).contains(&i), "message index {i} out of range");
        MsgSet(1 << (i - 1))
    }

    pub fn of(items: &[usize]) -> Self {
        items.iter().copied().collect()
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_MESSAGES).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn with(self, i: usize) -> Self {
        self | MsgSet::singleton(i)
    }

    pub fn without(self, i: usize) -> Self {
        self - MsgSet::singleton(i)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: MsgSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: MsgSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Members in increasing order, 1-based.
    pub fn iter(self) -> impl Iterator<Item = usize> + Clone {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b + 1)
        })
    }

    /// All subsets (including `∅` and `self`) in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = MsgSet> {
        let full = self.0;
        let mut next = Some(0u16);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(MsgSet(cur))
        })
    }

    /// Nonempty subsets in increasing mask order.
    pub fn nonempty_subsets(self) -> impl Iterator<Item = MsgSet> {
        self.subsets().skip(1)
    }

    /// Largest member, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 16 - self.0.leading_zeros() as usize)
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }
}

impl FromIterator<usize> for MsgSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(MsgSet::EMPTY, |s, i| s.with(i))
    }
}

impl std::ops::BitOr for MsgSet {
    type Output = MsgSet;
    fn bitor(self, rhs: MsgSet) -> MsgSet {
        MsgSet(self.0 | rhs.0)
    }
}

impl std::ops::BitOrAssign for MsgSet {
    fn bitor_assign(&mut self, rhs: MsgSet) {
        self.0 |= rhs.0;
    }
}

impl std::ops::BitAnd for MsgSet {
    type Output = MsgSet;
    fn bitand(self, rhs: MsgSet) -> MsgSet {
        MsgSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for MsgSet {
    type Output = MsgSet;
    fn sub(self, rhs: MsgSet) -> MsgSet {
        MsgSet(self.0 & !rhs.0)
    }
}

impl fmt::Display for MsgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for MsgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Bits {
    n: u8,
    words: SmallVec<[u64; 2]>,
}

impl Bits {
    fn empty(n: usize) -> Self {
        assert!(n <= MAX_MESSAGES, "at most {MAX_MESSAGES} messages are supported");
        let nbits = 1usize << n;
        Bits { n: n as u8, words: SmallVec::from_elem(0, nbits.div_ceil(64)) }
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        let nbits = 1usize << n;
        for (w, word) in b.words.iter_mut().enumerate() {
            let lo = w * 64;
            let hi = (lo + 64).min(nbits);
            *word = if hi - lo == 64 { u64::MAX } else { (1u64 << (hi - lo)) - 1 };
        }
        b
    }

    fn get(&self, m: u16) -> bool {
        let m = m as usize;
        m >> self.n == 0 && self.words[m / 64] >> (m % 64) & 1 == 1
    }

    fn set(&mut self, m: u16, v: bool) {
        let m = m as usize;
        assert!(m >> self.n == 0, "set {m:#b} outside [{}]", self.n);
        if v {
            self.words[m / 64] |= 1 << (m % 64);
        } else {
            self.words[m / 64] &= !(1 << (m % 64));
        }
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn zip(&self, other: &Bits, f: impl Fn(u64, u64) -> u64) -> Bits {
        assert_eq!(self.n, other.n, "families over different message counts");
        Bits {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    fn is_subset(&self, other: &Bits) -> bool {
        assert_eq!(self.n, other.n, "families over different message counts");
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    fn iter(&self) -> impl Iterator<Item = MsgSet> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(MsgSet((w * 64 + b) as u16))
            })
        })
    }

    /// Closure under taking subsets (sum over supersets, boolean zeta transform).
    fn down_closure(&self) -> Bits {
        let mut out = self.clone();
        let size = 1usize << self.n;
        for b in 0..self.n as usize {
            let bit = 1usize << b;
            for m in 0..size {
                if m & bit != 0 && out.get(m as u16) {
                    out.set((m ^ bit) as u16, true);
                }
            }
        }
        out
    }

    /// Closure under taking supersets within `[n]`.
    fn up_closure(&self) -> Bits {
        let mut out = self.clone();
        let size = 1usize << self.n;
        for b in 0..self.n as usize {
            let bit = 1usize << b;
            for m in 0..size {
                if m & bit == 0 && out.get(m as u16) {
                    out.set((m | bit) as u16, true);
                }
            }
        }
        out
    }
}

macro_rules! family_common {
    ($ty:ident) => {
        impl $ty {
            /// Message count of the ground set `[n]`.
            pub fn n(&self) -> usize {
                self.0.n as usize
            }

            pub fn contains(&self, s: MsgSet) -> bool {
                self.0.get(s.mask())
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            /// Members in increasing mask order.
            pub fn iter(&self) -> impl Iterator<Item = MsgSet> + '_ {
                self.0.iter()
            }

            pub fn to_vec(&self) -> Vec<MsgSet> {
                self.iter().collect()
            }

            pub fn union(&self, other: &$ty) -> $ty {
                $ty(self.0.zip(&other.0, |a, b| a | b))
            }

            pub fn intersection(&self, other: &$ty) -> $ty {
                $ty(self.0.zip(&other.0, |a, b| a & b))
            }

            pub fn difference(&self, other: &$ty) -> $ty {
                $ty(self.0.zip(&other.0, |a, b| a & !b))
            }

            pub fn is_subset(&self, other: &$ty) -> bool {
                self.0.is_subset(&other.0)
            }

            pub fn is_disjoint(&self, other: &$ty) -> bool {
                self.intersection(other).is_empty()
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("{")?;
                for (k, s) in self.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str("}")
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    };
}

/// A collection of servers, i.e. nonempty subsets of `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ServerSet(Bits);

/// A collection of message sets, possibly containing `∅`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MsgFamily(Bits);

family_common!(ServerSet);
family_common!(MsgFamily);

impl ServerSet {
    pub fn empty(n: usize) -> Self {
        ServerSet(Bits::empty(n))
    }

    /// Every nonempty subset of `[n]`.
    pub fn all(n: usize) -> Self {
        let mut b = Bits::full(n);
        b.set(0, false);
        ServerSet(b)
    }

    /// Builds a server set, dropping `∅` if supplied.
    pub fn from_servers(n: usize, servers: impl IntoIterator<Item = MsgSet>) -> Self {
        let mut s = ServerSet::empty(n);
        for j in servers {
            s.insert(j);
        }
        s
    }

    /// Adds `j`; the empty server is ignored.
    pub fn insert(&mut self, j: MsgSet) {
        if !j.is_empty() {
            assert!(j.is_subset(MsgSet::full(self.n())), "server {j} outside [{}]", self.n());
            self.0.set(j.mask(), true);
        }
    }

    pub fn remove(&mut self, j: MsgSet) {
        if self.contains(j) {
            self.0.set(j.mask(), false);
        }
    }

    /// Servers in `self` satisfying `pred`.
    pub fn filter(&self, pred: impl Fn(MsgSet) -> bool) -> ServerSet {
        ServerSet::from_servers(self.n(), self.iter().filter(|&j| pred(j)))
    }

    /// Union of the message sets of all servers.
    pub fn messages(&self) -> MsgSet {
        self.iter().fold(MsgSet::EMPTY, |acc, j| acc | j)
    }

    /// `Γ*(P) = ⋃_{J ∈ P} 2^J`; contains `∅` unless `P` is empty.
    pub fn subset_completion(&self) -> MsgFamily {
        MsgFamily(self.0.down_closure())
    }

    /// The same servers viewed as a message family.
    pub fn as_family(&self) -> MsgFamily {
        MsgFamily(self.0.clone())
    }
}

impl MsgFamily {
    pub fn empty(n: usize) -> Self {
        MsgFamily(Bits::empty(n))
    }

    /// `2^S` over ground `[n]`.
    pub fn power_set(n: usize, s: MsgSet) -> Self {
        MsgFamily::from_sets(n, s.subsets())
    }

    pub fn from_sets(n: usize, sets: impl IntoIterator<Item = MsgSet>) -> Self {
        let mut f = MsgFamily::empty(n);
        for s in sets {
            f.insert(s);
        }
        f
    }

    pub fn insert(&mut self, s: MsgSet) {
        assert!(s.is_subset(MsgSet::full(self.n())), "set {s} outside [{}]", self.n());
        self.0.set(s.mask(), true);
    }

    pub fn remove(&mut self, s: MsgSet) {
        if self.contains(s) {
            self.0.set(s.mask(), false);
        }
    }

    /// `Γ^*(M) = ⋃_{K ∈ M} {J : K ⊆ J}` with the empty server dropped.
    pub fn superset_completion(&self) -> ServerSet {
        let mut b = self.0.up_closure();
        b.set(0, false);
        ServerSet(b)
    }

    /// Closure under subsets.
    pub fn down_closure(&self) -> MsgFamily {
        MsgFamily(self.0.down_closure())
    }

    /// The nonempty members viewed as servers.
    pub fn servers(&self) -> ServerSet {
        let mut b = self.0.clone();
        b.set(0, false);
        ServerSet(b)
    }
}

/// `T_K`: servers `J` with `J ∩ K ≠ ∅`.
pub fn touch(n: usize, k: MsgSet) -> ServerSet {
    ServerSet::all(n).filter(|j| j.intersects(k))
}

/// `T_{K,L}`: servers touching both `K` and `L`.
pub fn touch_both(n: usize, k: MsgSet, l: MsgSet) -> ServerSet {
    ServerSet::all(n).filter(|j| j.intersects(k) && j.intersects(l))
}

/// `T_{K,¬L}`: servers touching `K` but not `L`.
pub fn touch_first_not_second(n: usize, k: MsgSet, l: MsgSet) -> ServerSet {
    ServerSet::all(n).filter(|j| j.intersects(k) && !j.intersects(l))
}

/// `T_¬K`: servers not touching `K`.
pub fn not_touch(n: usize, k: MsgSet) -> ServerSet {
    ServerSet::all(n).filter(|j| !j.intersects(k))
}

/// `Γ*(P)`.
pub fn subset_completion(p: &ServerSet) -> MsgFamily {
    p.subset_completion()
}

/// `Γ^*(M)`.
pub fn superset_completion(m: &MsgFamily) -> ServerSet {
    m.superset_completion()
}
