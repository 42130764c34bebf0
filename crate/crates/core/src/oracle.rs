//! Brute-force ground truth for ZM groups.
//!
//! Nothing here uses the triple parametrization of subgroups: subgroups are
//! found by closing generating sets under multiplication, and normality is
//! tested by conjugating elements. Intended for verification only.

use std::collections::{BTreeSet, HashSet};

use petgraph::algo::toposort;
use petgraph::algo::tred::{dag_to_toposorted_adjacency_list, dag_transitive_reduction_closure};
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::visit::IntoNeighbors;

use crate::error::{Error, Result};
use crate::group::{GroupElement, ZmTriple};

pub const DEFAULT_BOUND: u64 = 500;

/// Subgroup as a sorted element list.
pub type ElementSet = Vec<GroupElement>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    bound: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            bound: DEFAULT_BOUND,
        }
    }
}

impl Oracle {
    /// An oracle refusing groups of order above `bound`.
    pub fn with_bound(bound: u64) -> Self {
        Oracle { bound }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn check(&self, t: &ZmTriple) -> Result<()> {
        if t.order() > self.bound {
            return Err(Error::OracleBound {
                order: t.order(),
                bound: self.bound,
            });
        }
        Ok(())
    }

    pub fn all_elements(&self, t: &ZmTriple) -> Result<ElementSet> {
        self.check(t)?;
        Ok(t.elements().collect())
    }

    /// Smallest subgroup containing `gens`, by worklist saturation.
    pub fn closure(&self, t: &ZmTriple, gens: &[GroupElement]) -> Result<ElementSet> {
        self.check(t)?;
        let mut seen = vec![false; t.order() as usize];
        let mut out = vec![GroupElement::IDENTITY];
        seen[0] = true;
        let mut work = vec![GroupElement::IDENTITY];
        while let Some(g) = work.pop() {
            for &h in gens {
                let gh = t.mul(g, h);
                let i = t.index_of(gh);
                if !seen[i] {
                    seen[i] = true;
                    out.push(gh);
                    work.push(gh);
                }
            }
        }
        // right multiplication by generators reaches the whole subgroup in a
        // finite group; inverses come for free as powers
        assert_eq!(t.order() % out.len() as u64, 0, "Lagrange violated in {t}");
        out.sort_unstable();
        Ok(out)
    }

    /// Every subgroup of `t`, as the set of all `<g, h>`.
    ///
    /// `<g, h>` only depends on `<g>` and `<h>`, so one generator per cyclic
    /// subgroup is enough.
    pub fn all_subgroups(&self, t: &ZmTriple) -> Result<BTreeSet<ElementSet>> {
        let mut cyclic = BTreeSet::new();
        let mut reps = Vec::new();
        for g in self.all_elements(t)? {
            if cyclic.insert(self.closure(t, &[g])?) {
                reps.push(g);
            }
        }
        let mut out = cyclic;
        for (i, &g) in reps.iter().enumerate() {
            for &h in &reps[i + 1..] {
                out.insert(self.closure(t, &[g, h])?);
            }
        }
        Ok(out)
    }

    /// Stable under conjugation by the generators `a` and `b`.
    pub fn is_normal(&self, t: &ZmTriple, sub: &[GroupElement]) -> bool {
        self.stable_under(t, sub, &[t.a(), t.b()])
    }

    /// Stable under conjugation by every group element.
    pub fn is_normal_exhaustive(&self, t: &ZmTriple, sub: &[GroupElement]) -> bool {
        let all: Vec<_> = t.elements().collect();
        self.stable_under(t, sub, &all)
    }

    fn stable_under(&self, t: &ZmTriple, sub: &[GroupElement], conj: &[GroupElement]) -> bool {
        let members: HashSet<_> = sub.iter().copied().collect();
        conj.iter()
            .all(|&h| sub.iter().all(|&g| members.contains(&t.conjugate(g, h))))
    }

    pub fn normal_subgroups(&self, t: &ZmTriple) -> Result<Vec<ElementSet>> {
        Ok(self
            .all_subgroups(t)?
            .into_iter()
            .filter(|s| self.is_normal(t, s))
            .collect())
    }
}

/// Covering pairs of the strict-inclusion order on `sets`, via a DAG
/// transitive reduction.
pub fn transitive_reduction(sets: &[ElementSet]) -> Vec<(usize, usize)> {
    let hashed: Vec<HashSet<GroupElement>> =
        sets.iter().map(|s| s.iter().copied().collect()).collect();
    let mut g = DiGraph::<(), ()>::new();
    let nodes: Vec<NodeIndex> = (0..sets.len()).map(|_| g.add_node(())).collect();
    for i in 0..sets.len() {
        for j in 0..sets.len() {
            if hashed[i].len() < hashed[j].len() && hashed[i].is_subset(&hashed[j]) {
                g.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    let order = toposort(&g, None).expect("strict inclusion is acyclic");
    let (list, revmap) = dag_to_toposorted_adjacency_list::<_, u32>(&g, &order);
    let (reduced, _) = dag_transitive_reduction_closure(&list);
    let mut out = Vec::new();
    for (i, &ri) in revmap.iter().enumerate() {
        for rj in reduced.neighbors(ri) {
            out.push((i, order[rj as usize].index()));
        }
    }
    out.sort_unstable();
    out
}
