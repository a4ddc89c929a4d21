//! Canonical indexing of the pairs `1 <= j < k <= n`.
//!
//! Pairs are ordered lexicographically: `(1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n)`.
//! Every per-pair table in the crate (edge kinds, region signs, serialized
//! forms, enumeration order) is keyed to this order.

/// Number of pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the 1-based pair `(j, k)`, `j < k <= n`, in canonical order.
pub fn pair_index(n: usize, j: usize, k: usize) -> usize {
    debug_assert!(1 <= j && j < k && k <= n, "bad pair ({j},{k}) for n={n}");
    (j - 1) * (2 * n - j) / 2 + (k - j - 1)
}

/// All pairs in canonical order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> + Clone {
    (1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (j, k)))
}

/// A total map from canonical pairs to values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMap<V> {
    n: usize,
    values: Vec<V>,
}

impl<V> PairMap<V> {
    /// Builds a map from values listed in canonical pair order.
    pub fn from_values(n: usize, values: Vec<V>) -> Option<Self> {
        (values.len() == pair_count(n)).then_some(Self { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> V) -> Self {
        Self {
            n,
            values: pairs(n).map(|(j, k)| f(j, k)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, j: usize, k: usize) -> &V {
        &self.values[pair_index(self.n, j, k)]
    }

    pub fn set(&mut self, j: usize, k: usize, value: V) {
        let idx = pair_index(self.n, j, k);
        self.values[idx] = value;
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    /// `((j, k), value)` in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &V)> {
        pairs(self.n).zip(self.values.iter())
    }

    pub fn map<W>(&self, mut f: impl FnMut(&V) -> W) -> PairMap<W> {
        PairMap {
            n: self.n,
            values: self.values.iter().map(&mut f).collect(),
        }
    }
}

/// Odometer over all assignments of `alphabet` to `len` slots, slot 0 most
/// significant, in lexicographic order of alphabet positions.
#[derive(Debug, Clone)]
pub(crate) struct Odometer {
    digits: Vec<usize>,
    radix: usize,
    done: bool,
}

impl Odometer {
    pub(crate) fn new(len: usize, radix: usize) -> Self {
        Self {
            digits: vec![0; len],
            radix,
            done: radix == 0 && len > 0,
        }
    }

    /// Starts with the leading digits fixed to `prefix`; iteration stops once
    /// the prefix would change.
    pub(crate) fn with_prefix(len: usize, radix: usize, prefix: &[usize]) -> PrefixOdometer {
        let mut inner = Self::new(len, radix);
        inner.digits[..prefix.len()].copy_from_slice(prefix);
        PrefixOdometer {
            inner,
            fixed: prefix.len(),
        }
    }

    fn advance(&mut self, fixed: usize) {
        for slot in (fixed..self.digits.len()).rev() {
            self.digits[slot] += 1;
            if self.digits[slot] < self.radix {
                return;
            }
            self.digits[slot] = 0;
        }
        self.done = true;
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.digits.clone();
        self.advance(0);
        Some(out)
    }
}

#[derive(Debug, Clone)]
pub(crate) struct PrefixOdometer {
    inner: Odometer,
    fixed: usize,
}

impl Iterator for PrefixOdometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.inner.done {
            return None;
        }
        let out = self.inner.digits.clone();
        self.inner.advance(self.fixed);
        Some(out)
    }
}
