//! Normal subgroups of `ZM(m,n,r)`.
//!
//! `H(m1,n1,s)` is normal exactly when `s = 0` and `m1 | gcd(m, r^n1 - 1)`.
//! Consequently there is at most one normal subgroup of each order, and
//! `|N| = sum over n1 | n of tau(gcd(m, r^n1 - 1))`.

use crate::error::{Error, Result};
use crate::group::{GroupElement, ZmTriple};
use crate::lattice::SubgroupTriple;
use crate::numtheory::{divisors, gcd_minus_one, is_prime, is_prime_power, mul_mod, tau};
use crate::poset::{is_path, Poset};

/// `gcd(m, r^n1 - 1)`, with `gcd(m, 0) = m`.
pub fn normal_kernel_gcd(t: &ZmTriple, n1: u64) -> u64 {
    gcd_minus_one(t.m(), t.r_pow(n1))
}

pub fn is_normal_criterion(t: &ZmTriple, st: SubgroupTriple) -> Result<bool> {
    st.check(t)?;
    Ok(st.s == 0 && normal_kernel_gcd(t, st.n1).is_multiple_of(st.m1))
}

/// All normal subgroup triples, smallest subgroup first.
pub fn enumerate_normal(t: &ZmTriple) -> Vec<SubgroupTriple> {
    let mut out = Vec::new();
    for n1 in divisors(t.n()).expect("n >= 1") {
        let g = normal_kernel_gcd(t, n1);
        for m1 in divisors(g).expect("gcd(m, _) >= 1") {
            let st = SubgroupTriple::new(m1, n1, 0);
            assert!(
                st.is_valid_for(t),
                "{st} is normal but not a subgroup of {t}"
            );
            out.push(st);
        }
    }
    out.sort_by(|a, b| a.cmp_in(b, t));
    out
}

/// `sum over n1 | n of tau(gcd(m, r^n1 - 1))`.
pub fn count_eq1(t: &ZmTriple) -> u64 {
    divisors(t.n())
        .expect("n >= 1")
        .into_iter()
        .map(|n1| tau(normal_kernel_gcd(t, n1)).expect("gcd >= 1"))
        .sum()
}

/// `tau(n) + tau(n/d)`, valid for prime `m`.
pub fn count_eq2(t: &ZmTriple) -> Result<u64> {
    if !is_prime(t.m()) {
        return Err(Error::NotPrime {
            what: "m",
            value: t.m(),
        });
    }
    assert_eq!(t.n() % t.d(), 0, "order of r must divide n");
    Ok(tau(t.n())? + tau(t.n() / t.d())?)
}

/// `tau(m) + 1`, valid for prime `n`.
pub fn count_eq3(t: &ZmTriple) -> Result<u64> {
    if !is_prime(t.n()) {
        return Err(Error::NotPrime {
            what: "n",
            value: t.n(),
        });
    }
    Ok(tau(t.m())? + 1)
}

/// Normal subgroups of the dihedral group of order `2m`, `m` odd: `tau(m) + 1`.
///
/// This is the group `ZM(m, 2, m - 1)`.
pub fn dihedral_normal_count(m: u64) -> Result<u64> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::NotOddDihedral(m));
    }
    Ok(tau(m)? + 1)
}

/// When the normal subgroups form a chain, returns it from the trivial
/// subgroup up to the whole group.
///
/// The normal lattice is a chain iff `m = 1` and `n` is a prime power, or
/// `m` and `n` are prime powers and `gcd(m, r^k - 1) = 1` for `1 <= k < n`.
/// The trivial group counts as a chain of length 0.
pub fn normal_chain(t: &ZmTriple) -> Option<Vec<SubgroupTriple>> {
    let (m, n) = (t.m(), t.n());
    if n == 1 {
        return Some(vec![SubgroupTriple::new(1, 1, 0)]);
    }
    let q = is_prime_power(n).expect("n >= 1")?;
    let top: Vec<_> = (0..=q.e)
        .rev()
        .map(|i| SubgroupTriple::new(1, q.p.pow(i), 0))
        .collect();
    if m == 1 {
        return Some(top);
    }
    let p = is_prime_power(m).expect("m >= 1")?;
    let mut rk = 1;
    for _ in 1..n {
        rk = mul_mod(rk, t.r(), m);
        if gcd_minus_one(m, rk) != 1 {
            return None;
        }
    }
    let mut chain: Vec<_> = (1..=p.e)
        .rev()
        .map(|i| SubgroupTriple::new(p.p.pow(i), n, 0))
        .collect();
    chain.extend(top);
    Some(chain)
}

pub fn is_chain(t: &ZmTriple) -> bool {
    normal_chain(t).is_some()
}

/// `m1 | s (r^x - 1) - y (r^n1 - 1)`, the condition for `conj` to fix
/// `H(m1,n1,s)` under conjugation.
pub fn conjugation_condition_holds(t: &ZmTriple, st: SubgroupTriple, conj: GroupElement) -> bool {
    let m1 = st.m1;
    let reduce = |v: u64| v % m1;
    let rx1 = (reduce(t.r_pow(conj.x)) + m1 - 1) % m1;
    let rn1 = (reduce(t.r_pow(st.n1)) + m1 - 1) % m1;
    let lhs = mul_mod(st.s, rx1, m1);
    let rhs = mul_mod(reduce(conj.y), rn1, m1);
    lhs == rhs
}

/// `H(m1,n1,0) ⊆ H(m2,n2,0)` iff `m2 | m1` and `n2 | n1`.
///
/// Only meaningful for normal subgroup triples.
pub fn normal_includes(big: SubgroupTriple, small: SubgroupTriple) -> bool {
    small.m1.is_multiple_of(big.m1) && small.n1.is_multiple_of(big.n1)
}

/// Everything known about the normal subgroup lattice of one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalLatticeReport {
    pub group: ZmTriple,
    pub normal_triples: Vec<SubgroupTriple>,
    pub count_eq1: u64,
    pub count_eq2: Option<u64>,
    pub count_eq3: Option<u64>,
    pub is_chain: bool,
    pub chain: Option<Vec<SubgroupTriple>>,
    /// Covering pairs, as indices into `normal_triples`.
    pub hasse: Vec<(usize, usize)>,
}

impl NormalLatticeReport {
    pub fn new(t: &ZmTriple) -> Self {
        let normal_triples = enumerate_normal(t);
        let count_eq1 = count_eq1(t);
        let count_eq2 = count_eq2(t).ok();
        let count_eq3 = count_eq3(t).ok();
        for c in [count_eq2, count_eq3].into_iter().flatten() {
            assert_eq!(c, count_eq1, "specialized count disagrees for {t}");
        }
        let chain = normal_chain(t);
        let poset = normal_poset(&normal_triples);
        NormalLatticeReport {
            group: *t,
            count_eq1,
            count_eq2,
            count_eq3,
            is_chain: chain.is_some(),
            chain,
            hasse: poset.covering_pairs(),
            normal_triples,
        }
    }

    pub fn hasse_is_path(&self) -> bool {
        is_path(self.normal_triples.len(), &self.hasse)
    }

    /// Subgroup orders in listing order.
    pub fn orders(&self) -> Vec<u64> {
        self.normal_triples
            .iter()
            .map(|st| st.subgroup_order(&self.group))
            .collect()
    }
}

/// Inclusion order on normal subgroup triples via [`normal_includes`].
pub fn normal_poset(normal: &[SubgroupTriple]) -> Poset {
    Poset::from_fn(normal.len(), |i, j| normal_includes(normal[j], normal[i]))
}
