//! Finite partial orders given by an explicit `<=` matrix.

/// A partial order on `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    len: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Builds the order from a `<=` predicate. The predicate is trusted to be
    /// reflexive, antisymmetric and transitive.
    pub fn from_fn(len: usize, mut leq: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = vec![false; len * len];
        for i in 0..len {
            for j in 0..len {
                m[i * len + j] = i == j || leq(i, j);
            }
        }
        Poset { len, leq: m }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Pairs `(i, j)` with `i < j` and nothing strictly between, sorted.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len {
            for j in 0..self.len {
                if self.lt(i, j) && !(0..self.len).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_total(&self) -> bool {
        (0..self.len).all(|i| (0..i).all(|j| self.comparable(i, j)))
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len)
            .filter(|&k| self.leq(k, i) && self.leq(k, j))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&k| lower.iter().all(|&l| self.leq(l, k)))
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len)
            .filter(|&k| self.leq(i, k) && self.leq(j, k))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&k| upper.iter().all(|&l| self.leq(k, l)))
    }

    pub fn is_lattice(&self) -> bool {
        (0..self.len)
            .all(|i| (0..self.len).all(|j| self.meet(i, j).is_some() && self.join(i, j).is_some()))
    }

    fn tables(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.len;
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = self.meet(i, j)?;
                join[i * n + j] = self.join(i, j)?;
            }
        }
        Some((meet, join))
    }

    /// A diamond sublattice `[bottom, a, b, c, top]`: three pairwise
    /// incomparable elements sharing one meet and one join.
    pub fn find_m3(&self) -> Option<[usize; 5]> {
        let n = self.len;
        let (meet, join) = self.tables()?;
        for a in 0..n {
            for b in a + 1..n {
                if self.comparable(a, b) {
                    continue;
                }
                let (lo, hi) = (meet[a * n + b], join[a * n + b]);
                for c in b + 1..n {
                    if !self.comparable(a, c)
                        && !self.comparable(b, c)
                        && meet[a * n + c] == lo
                        && meet[b * n + c] == lo
                        && join[a * n + c] == hi
                        && join[b * n + c] == hi
                    {
                        return Some([lo, a, b, c, hi]);
                    }
                }
            }
        }
        None
    }

    /// A pentagon sublattice `[bottom, a, b, c, top]` with `a < b` and `c`
    /// incomparable to both, where `c /\ a = c /\ b` and `c \/ a = c \/ b`.
    pub fn find_n5(&self) -> Option<[usize; 5]> {
        let n = self.len;
        let (meet, join) = self.tables()?;
        for a in 0..n {
            for b in 0..n {
                if !self.lt(a, b) {
                    continue;
                }
                for c in 0..n {
                    if !self.comparable(a, c)
                        && !self.comparable(b, c)
                        && meet[c * n + a] == meet[c * n + b]
                        && join[c * n + a] == join[c * n + b]
                    {
                        return Some([meet[c * n + a], a, b, c, join[c * n + a]]);
                    }
                }
            }
        }
        None
    }

    /// Checks `x /\ (y \/ z) = (x /\ y) \/ (x /\ z)` for all triples.
    /// False when the order is not a lattice.
    pub fn is_distributive(&self) -> bool {
        let n = self.len;
        let Some((meet, join)) = self.tables() else {
            return false;
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = meet[x * n + join[y * n + z]];
                    let rhs = join[meet[x * n + y] * n + meet[x * n + z]];
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// True iff `edges` on `len` nodes form a single directed path through all
/// of them. One node with no edges counts as a path.
pub fn is_path(len: usize, edges: &[(usize, usize)]) -> bool {
    if len == 0 || edges.len() != len - 1 {
        return false;
    }
    let mut succ = vec![None; len];
    let mut indeg = vec![0; len];
    for &(i, j) in edges {
        if succ[i].replace(j).is_some() {
            return false;
        }
        indeg[j] += 1;
    }
    if indeg.iter().any(|&d| d > 1) {
        return false;
    }
    let Some(mut at) = (0..len).find(|&i| indeg[i] == 0) else {
        return false;
    };
    let mut seen = 1;
    while let Some(next) = succ[at] {
        at = next;
        seen += 1;
    }
    seen == len
}
