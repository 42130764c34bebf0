//! Zassenhaus metacyclic groups `ZM(m,n,r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>`
//! and their arithmetic in the normal form `b^x a^y`.

use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::{gcd, gcd_minus_one, geometric_sum_mod, mul_mod, mult_order, pow_mod};

/// Largest supported group order `m * n`.
pub const MAX_ORDER: u64 = 1 << 31;

/// A validated parameter triple `(m, n, r)`.
///
/// `r` is stored reduced into `[0, m)`, so `m = 1` always carries `r = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZmTriple {
    m: u64,
    n: u64,
    r: u64,
    d: u64,
}

/// The element `b^x a^y` with `0 <= x < n` and `0 <= y < m`.
///
/// The derived ordering is lexicographic on `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub x: u64,
    pub y: u64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { x: 0, y: 0 };

    pub const fn new(x: u64, y: u64) -> Self {
        GroupElement { x, y }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b^{} a^{}", self.x, self.y)
    }
}

impl ZmTriple {
    /// Checks `gcd(m,n) = gcd(m,r-1) = 1` and `r^n = 1 (mod m)`.
    ///
    /// Conditions are tested in that order and the first failure is reported.
    pub fn new(m: i64, n: i64, r: i64) -> Result<Self> {
        if m <= 0 || n <= 0 {
            return Err(Error::NonPositive { m, n });
        }
        let (m, n) = (m as u64, n as u64);
        let order = m as u128 * n as u128;
        if order > MAX_ORDER as u128 {
            return Err(Error::OrderTooLarge {
                order,
                bound: MAX_ORDER,
            });
        }
        let r = r.rem_euclid(m as i64) as u64;

        let g = gcd(m, n);
        if g != 1 {
            return Err(Error::GcdMN { m, n, gcd: g });
        }
        let g = gcd_minus_one(m, r);
        if g != 1 {
            return Err(Error::GcdMR { m, r, gcd: g });
        }
        let residue = pow_mod(r, n, m)?;
        if residue != 1 % m {
            return Err(Error::PowerCondition { m, n, r, residue });
        }
        let d = mult_order(r, m)?;
        debug_assert_eq!(n % d, 0);
        Ok(ZmTriple { m, n, r, d })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// Multiplicative order of `r` modulo `m`.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// `|ZM(m,n,r)| = mn`.
    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    pub fn is_cyclic(&self) -> bool {
        self.m == 1
    }

    /// `r^e mod m`.
    pub fn r_pow(&self, e: u64) -> u64 {
        pow_mod(self.r, e % self.n, self.m).expect("m >= 1")
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        g.x < self.n && g.y < self.m
    }

    pub fn element(&self, x: u64, y: u64) -> GroupElement {
        GroupElement {
            x: x % self.n,
            y: y % self.m,
        }
    }

    /// The generator `a = b^0 a^1`.
    pub fn a(&self) -> GroupElement {
        self.element(0, 1)
    }

    /// The generator `b = b^1 a^0`.
    pub fn b(&self) -> GroupElement {
        self.element(1, 0)
    }

    /// Position of `g` in the `(x, y)`-lexicographic listing of all elements.
    pub fn index_of(&self, g: GroupElement) -> usize {
        (g.x * self.m + g.y) as usize
    }

    /// `b^x1 a^y1 * b^x2 a^y2 = b^(x1+x2) a^(r^x2 y1 + y2)`.
    pub fn mul(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        debug_assert!(self.contains(g) && self.contains(h));
        let twist = mul_mod(self.r_pow(h.x), g.y, self.m);
        GroupElement {
            x: (g.x + h.x) % self.n,
            y: (twist + h.y) % self.m,
        }
    }

    /// `(b^x a^y)^-1 = b^-x a^(-r^-x y)`, with `r^-x = r^(n-x)`.
    pub fn inv(&self, g: GroupElement) -> GroupElement {
        debug_assert!(self.contains(g));
        let x = (self.n - g.x) % self.n;
        let y = mul_mod(self.r_pow(x), g.y, self.m);
        GroupElement {
            x,
            y: (self.m - y) % self.m,
        }
    }

    /// `(b^x a^y)^k = b^(kx) a^(y (1 + r^x + ... + r^((k-1)x)))`.
    ///
    /// Negative `k` goes through [`ZmTriple::inv`].
    pub fn pow(&self, g: GroupElement, k: i64) -> GroupElement {
        if k < 0 {
            return self.pow_unsigned(self.inv(g), k.unsigned_abs());
        }
        self.pow_unsigned(g, k as u64)
    }

    fn pow_unsigned(&self, g: GroupElement, k: u64) -> GroupElement {
        debug_assert!(self.contains(g));
        // every element order divides mn
        let k = k % self.order();
        let sum = geometric_sum_mod(self.r, g.x, k, self.m).expect("m >= 1");
        GroupElement {
            x: mul_mod(k, g.x, self.n),
            y: mul_mod(g.y, sum, self.m),
        }
    }

    /// `h^-1 g h`.
    pub fn conjugate(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// Closed form of `conjugate(b^n1 a^s, b^x a^y) = b^n1 a^t` with
    /// `t = -r^n1 y + r^x s + y`.
    pub fn conjugation_exponent(&self, n1: u64, s: u64, conj: GroupElement) -> u64 {
        let m = self.m;
        let neg = mul_mod(self.r_pow(n1), conj.y, m);
        let pos = mul_mod(self.r_pow(conj.x), s % m, m);
        (pos + conj.y + m - neg) % m
    }

    /// Every element in `(x, y)`-lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.n).flat_map(move |x| (0..self.m).map(move |y| GroupElement { x, y }))
    }
}

/// Every valid triple with `mn <= max_order`, sorted by `(m, n, r)`, each
/// canonical `r` exactly once.
pub fn valid_triples(max_order: u64) -> Vec<ZmTriple> {
    let mut out = Vec::new();
    for m in 1..=max_order.min(MAX_ORDER) {
        for n in (1..=max_order / m).filter(|&n| gcd(m, n) == 1) {
            out.extend((0..m).filter_map(|r| ZmTriple::new(m as i64, n as i64, r as i64).ok()));
        }
    }
    out
}

impl fmt::Display for ZmTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZM({},{},{})", self.m, self.n, self.r)
    }
}
