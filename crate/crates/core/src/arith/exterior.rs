use alloc::vec::Vec;

/// Basis element `e_{k1} ^ ... ^ e_{kq}` of an exterior power, stored as a
/// strictly increasing index tuple (0-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtIndex(Vec<usize>);

impl ExtIndex {
    pub fn new(mut idx: Vec<usize>) -> Option<ExtIndex> {
        let before = idx.len();
        idx.sort_unstable();
        idx.dedup();
        (idx.len() == before).then_some(ExtIndex(idx))
    }

    pub fn empty() -> ExtIndex {
        ExtIndex(Vec::new())
    }

    pub fn single(i: usize) -> ExtIndex {
        ExtIndex(alloc::vec![i])
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `a ^ b` as `(sign, merged)`; sign 0 (and `None`) when the tuples overlap.
/// The sign is the parity of the shuffle merging the two tuples.
pub fn wedge(a: &ExtIndex, b: &ExtIndex) -> (i32, Option<ExtIndex>) {
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.0.len() || j < b.0.len() {
        if j == b.0.len() || (i < a.0.len() && a.0[i] < b.0[j]) {
            merged.push(a.0[i]);
            i += 1;
        } else if i < a.0.len() && a.0[i] == b.0[j] {
            return (0, None);
        } else {
            // b[j] jumps over the remaining elements of a
            inversions += a.0.len() - i;
            merged.push(b.0[j]);
            j += 1;
        }
    }
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    (sign, Some(ExtIndex(merged)))
}

/// All `q`-subsets of `{0..n-1}` in lexicographic order.
pub fn subsets(n: usize, q: usize) -> Vec<ExtIndex> {
    let mut out = Vec::new();
    if q > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..q).collect();
    loop {
        out.push(ExtIndex(cur.clone()));
        // advance
        let mut i = q;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - q + i {
                cur[i] += 1;
                for k in i + 1..q {
                    cur[k] = cur[k - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}
