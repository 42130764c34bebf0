//! JSON and DOT renderings of a subgroup lattice.

use std::fmt::Write as _;

use serde::Serialize;
use zmlat_core::lattice::{enumerate_subgroups, hasse_edges, materialize_all};
use zmlat_core::normal::{count_eq2, count_eq3, enumerate_normal, is_normal_criterion};
use zmlat_core::{NormalLatticeReport, Oracle, Result, SubgroupTriple, ZmTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum LatticeKind {
    /// Every subgroup.
    Full,
    /// Normal subgroups only.
    Normal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupRow {
    pub m1: u64,
    pub n1: u64,
    pub s: u64,
    pub order: u64,
    pub normal: bool,
}

/// Field order here is the key order of the emitted JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeDocument {
    pub m: u64,
    pub n: u64,
    pub r: u64,
    pub d: u64,
    pub order: u64,
    pub subgroups: Vec<SubgroupRow>,
    pub normal_count_eq1: u64,
    pub normal_count_eq2: Option<u64>,
    pub normal_count_eq3: Option<u64>,
    pub is_chain: bool,
    pub hasse: Vec<[usize; 2]>,
}

impl LatticeDocument {
    /// The full lattice needs every subgroup materialized, so it is refused
    /// for groups above `bound`. The normal lattice has no such limit.
    pub fn build(t: &ZmTriple, kind: LatticeKind, bound: &Oracle) -> Result<Self> {
        let report = NormalLatticeReport::new(t);
        let (triples, hasse) = match kind {
            LatticeKind::Normal => (report.normal_triples.clone(), report.hasse.clone()),
            LatticeKind::Full => {
                bound.check(t)?;
                let subs = materialize_all(t)?;
                let edges = hasse_edges(&subs)?;
                (subs.iter().map(|s| s.index()).collect(), edges)
            }
        };
        let subgroups = triples
            .iter()
            .map(|&st| row(t, st))
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticeDocument {
            m: t.m(),
            n: t.n(),
            r: t.r(),
            d: t.d(),
            order: t.order(),
            subgroups,
            normal_count_eq1: report.count_eq1,
            normal_count_eq2: report.count_eq2,
            normal_count_eq3: report.count_eq3,
            is_chain: report.is_chain,
            hasse: hasse.into_iter().map(|(i, j)| [i, j]).collect(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Hasse diagram as a DOT digraph, edges pointing from subgroup to
    /// covering supergroup. Normal subgroups get a double border.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"ZM({},{},{})\" {{", self.m, self.n, self.r).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        for (i, s) in self.subgroups.iter().enumerate() {
            let mark = if s.normal { ", peripheries=2" } else { "" };
            writeln!(
                out,
                "  s{i} [label=\"({},{},{}) |H|={}\"{mark}];",
                s.m1, s.n1, s.s, s.order
            )
            .unwrap();
        }
        for [i, j] in &self.hasse {
            writeln!(out, "  s{i} -> s{j};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn row(t: &ZmTriple, st: SubgroupTriple) -> Result<SubgroupRow> {
    Ok(SubgroupRow {
        m1: st.m1,
        n1: st.n1,
        s: st.s,
        order: st.subgroup_order(t),
        normal: is_normal_criterion(t, st)?,
    })
}

/// Plain-text listing of subgroup triples.
pub fn table(t: &ZmTriple, kind: LatticeKind) -> Result<String> {
    let triples = match kind {
        LatticeKind::Full => enumerate_subgroups(t),
        LatticeKind::Normal => enumerate_normal(t),
    };
    let mut out = String::new();
    writeln!(out, "{t}  order={}  d={}", t.order(), t.d()).unwrap();
    writeln!(
        out,
        "{:>8} {:>8} {:>8} {:>10}  normal",
        "m1", "n1", "s", "order"
    )
    .unwrap();
    for st in triples {
        let r = row(t, st)?;
        let flag = if r.normal { "yes" } else { "no" };
        writeln!(
            out,
            "{:>8} {:>8} {:>8} {:>10}  {flag}",
            r.m1, r.n1, r.s, r.order
        )
        .unwrap();
    }
    if kind == LatticeKind::Normal {
        let show = |c: Option<u64>| c.map_or_else(|| "-".to_string(), |c| c.to_string());
        let report = NormalLatticeReport::new(t);
        writeln!(
            out,
            "eq1={} eq2={} eq3={} chain={}",
            report.count_eq1,
            show(count_eq2(t).ok()),
            show(count_eq3(t).ok()),
            report.is_chain
        )
        .unwrap();
    }
    Ok(out)
}
