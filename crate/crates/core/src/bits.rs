//! GF(2) incidence vectors over a fixed edge index space, plus a small
//! elimination engine used for rank checks and coordinate solving.

use std::cmp::Ordering;

/// Bit vector of fixed length, one bit per canonical edge index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeBits {
    len: usize,
    words: Vec<u64>,
}

impl EdgeBits {
    pub fn zeros(len: usize) -> Self {
        EdgeBits {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn test(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &EdgeBits) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn lowest_set(&self) -> Option<usize> {
        for (i, w) in self.words.iter().enumerate() {
            if *w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, w)| {
            let mut w = *w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Orders supports as ascending index sequences, shorter prefix wins ties.
    /// Between vectors of equal weight this is a strict total order on
    /// distinct supports.
    pub fn support_cmp(&self, other: &EdgeBits) -> Ordering {
        let mut a = self.iter_ones();
        let mut b = other.iter_ones();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl std::fmt::Debug for EdgeBits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}

/// Row-echelon accumulator over GF(2). Rows are kept reduced by their lowest
/// set bit; rank is the number of stored rows.
#[derive(Clone)]
pub struct Gf2Basis {
    rows: Vec<EdgeBits>,
}

impl Gf2Basis {
    pub fn new() -> Self {
        Gf2Basis { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` by the stored rows and returns the residual.
    pub fn reduce(&self, v: &EdgeBits) -> EdgeBits {
        let mut r = v.clone();
        for row in &self.rows {
            let pivot = row.lowest_set().expect("stored rows are nonzero");
            if r.test(pivot) {
                r.xor_assign(row);
            }
        }
        r
    }

    /// Inserts `v` if it is independent of the stored rows. Returns whether
    /// the rank grew.
    pub fn insert(&mut self, v: &EdgeBits) -> bool {
        let r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let pivot = r.lowest_set().expect("nonzero residual");
        let at = self
            .rows
            .partition_point(|row| row.lowest_set().unwrap() < pivot);
        self.rows.insert(at, r);
        true
    }

    pub fn contains(&self, v: &EdgeBits) -> bool {
        self.reduce(v).is_zero()
    }
}

impl Default for Gf2Basis {
    fn default() -> Self {
        Self::new()
    }
}

/// Like [`Gf2Basis`] but remembers how each reduced row was formed from the
/// inserted generators, so membership queries can report coordinates.
pub struct Gf2Decomposer {
    rows: Vec<(EdgeBits, Vec<usize>)>,
    generators: usize,
}

impl Gf2Decomposer {
    pub fn new() -> Self {
        Gf2Decomposer {
            rows: Vec::new(),
            generators: 0,
        }
    }

    /// Inserts the next generator. Returns whether it was independent.
    pub fn insert(&mut self, v: &EdgeBits) -> bool {
        let idx = self.generators;
        self.generators += 1;
        let mut r = v.clone();
        let mut combo = vec![idx];
        for (row, row_combo) in &self.rows {
            let pivot = row.lowest_set().expect("stored rows are nonzero");
            if r.test(pivot) {
                r.xor_assign(row);
                combo = xor_sets(&combo, row_combo);
            }
        }
        if r.is_zero() {
            return false;
        }
        self.rows.push((r, combo));
        self.rows.sort_by_key(|(row, _)| row.lowest_set().unwrap());
        true
    }

    /// Expresses `v` as a XOR of generators, returning their insertion
    /// indices sorted ascending, or `None` if `v` is outside the span.
    pub fn solve(&self, v: &EdgeBits) -> Option<Vec<usize>> {
        let mut r = v.clone();
        let mut combo = Vec::new();
        for (row, row_combo) in &self.rows {
            let pivot = row.lowest_set().expect("stored rows are nonzero");
            if r.test(pivot) {
                r.xor_assign(row);
                combo = xor_sets(&combo, row_combo);
            }
        }
        if r.is_zero() {
            Some(combo)
        } else {
            None
        }
    }
}

impl Default for Gf2Decomposer {
    fn default() -> Self {
        Self::new()
    }
}

fn xor_sets(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(len: usize, ones: &[usize]) -> EdgeBits {
        let mut b = EdgeBits::zeros(len);
        for &i in ones {
            b.set(i);
        }
        b
    }

    #[test]
    fn xor_and_popcount() {
        let mut a = bits(70, &[0, 3, 69]);
        let b = bits(70, &[3, 5]);
        a.xor_assign(&b);
        assert_eq!(a.iter_ones().collect::<Vec<_>>(), vec![0, 5, 69]);
        assert_eq!(a.count_ones(), 3);
        assert_eq!(a.lowest_set(), Some(0));
    }

    #[test]
    fn support_order_prefers_lower_indices() {
        let a = bits(10, &[0, 5]);
        let b = bits(10, &[0, 6]);
        let c = bits(10, &[1, 2]);
        assert_eq!(a.support_cmp(&b), Ordering::Less);
        assert_eq!(a.support_cmp(&c), Ordering::Less);
        assert_eq!(c.support_cmp(&c), Ordering::Equal);
    }

    #[test]
    fn rank_of_dependent_set() {
        let mut basis = Gf2Basis::new();
        let a = bits(8, &[0, 1]);
        let b = bits(8, &[1, 2]);
        let mut c = a.clone();
        c.xor_assign(&b);
        assert!(basis.insert(&a));
        assert!(basis.insert(&b));
        assert!(!basis.insert(&c));
        assert_eq!(basis.rank(), 2);
        assert!(basis.contains(&c));
        assert!(!basis.contains(&bits(8, &[7])));
    }

    #[test]
    fn decomposer_reports_exact_combination() {
        let mut d = Gf2Decomposer::new();
        let a = bits(8, &[0, 1]);
        let b = bits(8, &[1, 2]);
        let c = bits(8, &[2, 3]);
        assert!(d.insert(&a));
        assert!(d.insert(&b));
        assert!(d.insert(&c));
        let mut target = a.clone();
        target.xor_assign(&c);
        assert_eq!(d.solve(&target), Some(vec![0, 2]));
        let mut all = target.clone();
        all.xor_assign(&b);
        assert_eq!(d.solve(&all), Some(vec![0, 1, 2]));
        assert_eq!(d.solve(&bits(8, &[7])), None);
    }
}
