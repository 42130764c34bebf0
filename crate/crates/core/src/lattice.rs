//! The full subgroup lattice of `ZM(m,n,r)`.
//!
//! Subgroups are indexed by triples `(m1, n1, s)` with `m1 | m`, `n1 | n`,
//! `s < m1` and `m1 | s (r^n - 1)/(r^n1 - 1)`. The triple `(m1, n1, s)` names
//! `H = <a^m1, b^n1 a^s>`, a subgroup of order `mn / (m1 n1)`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{GroupElement, ZmTriple};
use crate::numtheory::{divisors, geometric_sum_mod};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupTriple {
    pub m1: u64,
    pub n1: u64,
    pub s: u64,
}

impl SubgroupTriple {
    pub const fn new(m1: u64, n1: u64, s: u64) -> Self {
        SubgroupTriple { m1, n1, s }
    }

    /// `|H| = mn / (m1 n1)`.
    pub fn subgroup_order(&self, t: &ZmTriple) -> u64 {
        t.order() / (self.m1 * self.n1)
    }

    /// Whether this triple indexes a subgroup of `t`.
    pub fn is_valid_for(&self, t: &ZmTriple) -> bool {
        let SubgroupTriple { m1, n1, s } = *self;
        if m1 == 0 || n1 == 0 || !t.m().is_multiple_of(m1) || !t.n().is_multiple_of(n1) || s >= m1 {
            return false;
        }
        let quotient = geometric_sum_mod(t.r(), n1, t.n() / n1, m1).expect("m1 >= 1");
        (s as u128 * quotient as u128).is_multiple_of(m1 as u128)
    }

    /// The generator `b^n1 a^s`.
    pub fn generator(&self, t: &ZmTriple) -> GroupElement {
        t.element(self.n1, self.s)
    }

    pub(crate) fn check(&self, t: &ZmTriple) -> Result<()> {
        if self.is_valid_for(t) {
            Ok(())
        } else {
            Err(Error::NotInL {
                triple: *self,
                m: t.m(),
                n: t.n(),
                r: t.r(),
            })
        }
    }

    /// The output ordering: subgroup order ascending, then `(m1, n1, s)`.
    pub fn cmp_in(&self, other: &Self, t: &ZmTriple) -> Ordering {
        self.subgroup_order(t)
            .cmp(&other.subgroup_order(t))
            .then_with(|| self.cmp(other))
    }
}

impl fmt::Display for SubgroupTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m1, self.n1, self.s)
    }
}

/// All subgroup triples of `t`, smallest subgroups first.
pub fn enumerate_subgroups(t: &ZmTriple) -> Vec<SubgroupTriple> {
    let mut out = Vec::new();
    for m1 in divisors(t.m()).expect("m >= 1") {
        for n1 in divisors(t.n()).expect("n >= 1") {
            let q = geometric_sum_mod(t.r(), n1, t.n() / n1, m1).expect("m1 >= 1");
            out.extend(
                (0..m1)
                    .filter(|&s| (s as u128 * q as u128).is_multiple_of(m1 as u128))
                    .map(|s| SubgroupTriple { m1, n1, s }),
            );
        }
    }
    out.sort_by(|a, b| a.cmp_in(b, t));
    out
}

/// An explicit subgroup: its elements, sorted by `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MaterializedSubgroup {
    group: ZmTriple,
    index: SubgroupTriple,
    elements: Vec<GroupElement>,
}

impl MaterializedSubgroup {
    pub fn group(&self) -> &ZmTriple {
        &self.group
    }

    pub fn index(&self) -> SubgroupTriple {
        self.index
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn into_elements(self) -> Vec<GroupElement> {
        self.elements
    }
}

/// Lists `H = union over 1 <= k <= n/n1 of (b^n1 a^s)^k <a^m1>`.
pub fn materialize(t: &ZmTriple, st: SubgroupTriple) -> Result<MaterializedSubgroup> {
    st.check(t)?;
    let gen = st.generator(t);
    let cosets = t.n() / st.n1;
    let kernel = t.m() / st.m1;
    let mut elements = Vec::with_capacity((cosets * kernel) as usize);
    for k in 1..=cosets {
        let head = t.pow(gen, k as i64);
        for j in 0..kernel {
            elements.push(t.mul(head, t.element(0, j * st.m1)));
        }
    }
    elements.sort_unstable();
    elements.dedup();
    let expected = st.subgroup_order(t);
    if elements.len() as u64 != expected {
        return Err(Error::CardinalityMismatch {
            triple: st,
            found: elements.len(),
            expected,
        });
    }
    Ok(MaterializedSubgroup {
        group: *t,
        index: st,
        elements,
    })
}

/// Materializes every subgroup, in [`enumerate_subgroups`] order.
pub fn materialize_all(t: &ZmTriple) -> Result<Vec<MaterializedSubgroup>> {
    enumerate_subgroups(t)
        .into_iter()
        .map(|st| materialize(t, st))
        .collect()
}

/// `b ⊆ a`, by a merge scan of the sorted element lists.
pub fn includes(a: &MaterializedSubgroup, b: &MaterializedSubgroup) -> Result<bool> {
    if a.group != b.group {
        return Err(Error::MixedGroups);
    }
    if b.elements.len() > a.elements.len() {
        return Ok(false);
    }
    let mut big = a.elements.iter().peekable();
    for g in &b.elements {
        loop {
            match big.next() {
                Some(h) if h < g => continue,
                Some(h) if h == g => break,
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// The inclusion order on `subs`: `i <= j` iff `subs[i] ⊆ subs[j]`.
pub fn inclusion_poset(subs: &[MaterializedSubgroup]) -> Result<Poset> {
    if let Some(first) = subs.first() {
        if subs.iter().any(|s| s.group != first.group) {
            return Err(Error::MixedGroups);
        }
    }
    Ok(Poset::from_fn(subs.len(), |i, j| {
        includes(&subs[j], &subs[i]).expect("same group")
    }))
}

/// Covering pairs `(i, j)` with `subs[i]` a maximal proper subgroup of
/// `subs[j]` within the family.
pub fn hasse_edges(subs: &[MaterializedSubgroup]) -> Result<Vec<(usize, usize)>> {
    Ok(inclusion_poset(subs)?.covering_pairs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zm(m: i64, n: i64, r: i64) -> ZmTriple {
        ZmTriple::new(m, n, r).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let f21 = zm(7, 3, 2);
        let l = enumerate_subgroups(&f21);
        assert_eq!(l.len(), 10);
        assert_eq!(l.iter().filter(|st| st.m1 == 1).count(), 2);
        assert_eq!(l.iter().filter(|st| st.m1 == 7).count(), 8);
        assert_eq!(l.first(), Some(&SubgroupTriple::new(7, 3, 0)));
        assert_eq!(l.last(), Some(&SubgroupTriple::new(1, 1, 0)));

        assert_eq!(enumerate_subgroups(&zm(5, 4, 2)).len(), 14);
        for q in [2, 3, 5, 7, 11] {
            assert_eq!(enumerate_subgroups(&zm(1, q, 0)).len(), 2);
        }
    }

    #[test]
    fn ordering_is_by_order_then_lexicographic() {
        let t = zm(15, 4, 2);
        let l = enumerate_subgroups(&t);
        for w in l.windows(2) {
            let key = |st: &SubgroupTriple| (st.subgroup_order(&t), *st);
            assert!(key(&w[0]) < key(&w[1]));
        }
    }

    #[test]
    fn derived_subgroup_and_trivial() {
        let t = zm(7, 3, 2);
        let derived = materialize(&t, SubgroupTriple::new(1, 3, 0)).unwrap();
        let expected: Vec<_> = (0..7).map(|y| t.element(0, y)).collect();
        assert_eq!(derived.elements(), expected.as_slice());

        let trivial = materialize(&t, SubgroupTriple::new(7, 3, 0)).unwrap();
        assert_eq!(trivial.elements(), &[GroupElement::IDENTITY]);

        let b = materialize(&t, SubgroupTriple::new(7, 1, 0)).unwrap();
        assert_eq!(
            b.elements(),
            &[
                GroupElement::new(0, 0),
                GroupElement::new(1, 0),
                GroupElement::new(2, 0)
            ]
        );
    }

    #[test]
    fn materialize_rejects_triples_outside_l() {
        let t = zm(7, 3, 2);
        // n1 = n leaves a one-term sum, so s must vanish mod m1
        let err = materialize(&t, SubgroupTriple::new(7, 3, 1)).unwrap_err();
        assert!(matches!(err, Error::NotInL { .. }));
        assert!(materialize(&t, SubgroupTriple::new(2, 1, 0)).is_err());
        assert!(materialize(&t, SubgroupTriple::new(7, 1, 7)).is_err());
    }

    #[test]
    fn inclusion_examples() {
        let t = zm(7, 3, 2);
        let subs = materialize_all(&t).unwrap();
        let whole = subs.last().unwrap();
        let trivial = &subs[0];
        for h in &subs {
            assert!(includes(whole, h).unwrap());
            assert_eq!(includes(trivial, h).unwrap(), h.order() == 1);
        }
        let a = materialize(&t, SubgroupTriple::new(1, 3, 0)).unwrap();
        let b = materialize(&t, SubgroupTriple::new(7, 1, 0)).unwrap();
        assert!(!includes(&a, &b).unwrap());

        let other = materialize(&zm(5, 4, 2), SubgroupTriple::new(1, 1, 0)).unwrap();
        assert_eq!(includes(&other, trivial), Err(Error::MixedGroups));
        assert_eq!(hasse_edges(&[other, a]), Err(Error::MixedGroups));
    }

    #[test]
    fn hasse_examples() {
        let t = zm(1, 4, 0);
        let subs = materialize_all(&t).unwrap();
        assert_eq!(subs.len(), 3);
        assert_eq!(hasse_edges(&subs).unwrap(), vec![(0, 1), (1, 2)]);
        assert!(hasse_edges(&subs[..1]).unwrap().is_empty());

        // F21: trivial below ⟨a⟩ and the seven ⟨b⟩-conjugates, each of those below G.
        let t = zm(7, 3, 2);
        let edges = hasse_edges(&materialize_all(&t).unwrap()).unwrap();
        assert_eq!(edges.len(), 16);
    }
}
