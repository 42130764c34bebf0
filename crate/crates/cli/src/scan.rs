//! Exhaustive verification sweep over all valid triples up to a given order.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};

use rayon::prelude::*;
use serde::Serialize;
use zmlat_core::lattice::{
    self, enumerate_subgroups, inclusion_poset, materialize, materialize_all,
};
use zmlat_core::normal::{
    conjugation_condition_holds, count_eq1, count_eq2, count_eq3, enumerate_normal,
    is_normal_criterion, normal_chain, normal_poset,
};
use zmlat_core::numtheory::{divisors, is_prime};
use zmlat_core::oracle::transitive_reduction;
use zmlat_core::poset::is_path;
use zmlat_core::{valid_triples, Oracle, SubgroupTriple, ZmTriple};

/// Groups up to this order also get the per-conjugator condition check.
const CONJUGATION_CONDITION_ORDER: u64 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckFamily {
    /// Counts, chains, and agreement with the brute-force oracle.
    All,
    /// Closed-form counts against the enumerated normal family.
    Counts,
    /// The chain criterion against the actual inclusion order.
    Chains,
}

/// One CSV line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub m: u64,
    pub n: u64,
    pub r: u64,
    pub d: u64,
    pub order: u64,
    pub n_subgroups: usize,
    pub n_normal: usize,
    pub eq2_applicable: bool,
    pub eq3_applicable: bool,
    pub is_chain: bool,
    pub checks_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub triple: ZmTriple,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct ScanOutcome {
    pub rows: Vec<ScanRow>,
    pub failures: Vec<Failure>,
}

impl ScanOutcome {
    pub fn write_csv<W: Write>(&self, w: W) -> csv::Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        for row in &self.rows {
            wtr.serialize(row)?;
        }
        wtr.flush()?;
        Ok(())
    }
}

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_counts(t: &ZmTriple, normals: &[SubgroupTriple]) -> Check {
    let eq1 = count_eq1(t);
    ensure(eq1 as usize == normals.len(), || {
        format!("eq1 = {eq1} but {} normal triples", normals.len())
    })?;
    if let Ok(eq2) = count_eq2(t) {
        ensure(eq2 == eq1, || format!("eq2 = {eq2} != eq1 = {eq1}"))?;
    }
    if let Ok(eq3) = count_eq3(t) {
        ensure(eq3 == eq1, || format!("eq3 = {eq3} != eq1 = {eq1}"))?;
    }
    let orders: BTreeSet<_> = normals.iter().map(|st| st.subgroup_order(t)).collect();
    ensure(orders.len() == normals.len(), || {
        "two normal subgroups share an order".into()
    })?;
    let poset = normal_poset(normals);
    if let Some(w) = poset.find_m3() {
        return Err(format!("normal lattice contains M3 at {w:?}"));
    }
    if let Some(w) = poset.find_n5() {
        return Err(format!("normal lattice contains N5 at {w:?}"));
    }
    for n1 in divisors(t.n()).expect("n >= 1") {
        let st = SubgroupTriple::new(1, n1, 0);
        ensure(normals.contains(&st), || {
            format!("{st} missing from the normal family")
        })?;
    }
    Ok(())
}

fn check_chains(t: &ZmTriple, normals: &[SubgroupTriple]) -> Check {
    let subs = normals
        .iter()
        .map(|&st| materialize(t, st))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let poset = inclusion_poset(&subs).map_err(|e| e.to_string())?;
    let total = poset.is_total();
    let chain = normal_chain(t);
    ensure(chain.is_some() == total, || {
        format!(
            "chain criterion says {} but inclusion order total = {total}",
            chain.is_some()
        )
    })?;
    if let Some(chain) = chain {
        ensure(chain == normals, || {
            format!("constructed chain {chain:?} differs from {normals:?}")
        })?;
    }
    ensure(
        is_path(subs.len(), &poset.covering_pairs()) == total,
        || "Hasse diagram shape disagrees with totality".into(),
    )
}

fn check_oracle(t: &ZmTriple, oracle: &Oracle, normals: &[SubgroupTriple]) -> Check {
    let brute = oracle.all_subgroups(t).map_err(|e| e.to_string())?;
    let subs = materialize_all(t).map_err(|e| e.to_string())?;
    let from_l: BTreeSet<_> = subs.iter().map(|s| s.elements().to_vec()).collect();
    ensure(from_l.len() == subs.len(), || {
        "two triples give the same subgroup".into()
    })?;
    ensure(from_l == brute, || {
        format!(
            "{} subgroups from triples, {} by brute force",
            from_l.len(),
            brute.len()
        )
    })?;

    let mut brute_normal = 0;
    for s in &subs {
        let by_formula = is_normal_criterion(t, s.index()).map_err(|e| e.to_string())?;
        let by_conjugation = oracle.is_normal(t, s.elements());
        ensure(by_formula == by_conjugation, || {
            format!(
                "{}: criterion {by_formula}, conjugation {by_conjugation}",
                s.index()
            )
        })?;
        brute_normal += by_conjugation as usize;
        if t.order() <= CONJUGATION_CONDITION_ORDER {
            let cond = t
                .elements()
                .all(|g| conjugation_condition_holds(t, s.index(), g));
            ensure(cond == by_formula, || {
                format!("{}: per-conjugator condition gives {cond}", s.index())
            })?;
        }
    }
    ensure(brute_normal == normals.len(), || {
        format!(
            "{brute_normal} normal by conjugation, {} by formula",
            normals.len()
        )
    })?;

    let sets: Vec<_> = subs.iter().map(|s| s.elements().to_vec()).collect();
    let edges = lattice::hasse_edges(&subs).map_err(|e| e.to_string())?;
    ensure(edges == transitive_reduction(&sets), || {
        "Hasse edges differ from the reduction".into()
    })
}

/// Runs `family` on a single triple.
pub fn check_triple(
    t: &ZmTriple,
    family: CheckFamily,
    oracle: &Oracle,
) -> (ScanRow, Option<String>) {
    let result = panic::catch_unwind(AssertUnwindSafe(|| {
        let normals = enumerate_normal(t);
        let n_subgroups = enumerate_subgroups(t).len();
        let verdict = match family {
            CheckFamily::Counts => check_counts(t, &normals),
            CheckFamily::Chains => check_chains(t, &normals),
            CheckFamily::All => check_counts(t, &normals)
                .and_then(|_| check_chains(t, &normals))
                .and_then(|_| check_oracle(t, oracle, &normals)),
        };
        (n_subgroups, normals.len(), verdict)
    }));
    let (n_subgroups, n_normal, verdict) = match result {
        Ok(r) => r,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            (0, 0, Err(format!("panicked: {msg}")))
        }
    };
    let row = ScanRow {
        m: t.m(),
        n: t.n(),
        r: t.r(),
        d: t.d(),
        order: t.order(),
        n_subgroups,
        n_normal,
        eq2_applicable: is_prime(t.m()),
        eq3_applicable: is_prime(t.n()),
        is_chain: normal_chain(t).is_some(),
        checks_passed: verdict.is_ok(),
    };
    (row, verdict.err())
}

/// Checks every valid triple with `mn <= max_order`. Triples are processed
/// in parallel; rows come back in `(m, n, r)` order.
pub fn scan(max_order: u64, family: CheckFamily, oracle: &Oracle) -> ScanOutcome {
    let triples = valid_triples(max_order);
    let results: Vec<_> = triples
        .par_iter()
        .map(|t| check_triple(t, family, oracle))
        .collect();
    let mut out = ScanOutcome::default();
    for (t, (row, failure)) in triples.into_iter().zip(results) {
        if let Some(reason) = failure {
            out.failures.push(Failure { triple: t, reason });
        }
        out.rows.push(row);
    }
    out
}
