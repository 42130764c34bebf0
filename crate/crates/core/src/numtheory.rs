//! Integer and modular arithmetic on machine words.
//!
//! Inputs are `u64`; every modular product is taken through `u128`, so the
//! functions are exact for any modulus that fits in a `u64`.

use crate::error::{Error, Result};

/// `n = p^e` with `p` prime and `e >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
}

impl PrimePower {
    pub fn value(self) -> u64 {
        self.p.pow(self.e)
    }
}

/// Greatest common divisor with `gcd(a, 0) = a`.
pub const fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

/// `mul_mod` for operands already reduced modulo `modulus`.
#[inline]
fn mul_reduced(a: u64, b: u64, modulus: u64) -> u64 {
    if modulus <= 1 << 32 {
        a * b % modulus
    } else {
        mul_mod(a, b, modulus)
    }
}

/// All divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Number of divisors of `n`.
pub fn tau(n: u64) -> Result<u64> {
    Ok(factorize(n)?.iter().map(|pp| pp.e as u64 + 1).product())
}

/// Prime factorization by trial division, primes ascending. Empty for `n = 1`.
pub fn factorize(n: u64) -> Result<Vec<PrimePower>> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut rest = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            out.push(PrimePower { p, e });
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push(PrimePower { p: rest, e: 1 });
    }
    Ok(out)
}

pub fn is_prime(n: u64) -> bool {
    matches!(is_prime_power(n), Ok(Some(PrimePower { e: 1, .. })))
}

/// `Some((p, e))` when `n = p^e` for a prime `p`; `None` for `n = 1` and for
/// integers with two or more distinct prime factors.
pub fn is_prime_power(n: u64) -> Result<Option<PrimePower>> {
    let f = factorize(n)?;
    Ok(match f.as_slice() {
        [pp] => Some(*pp),
        _ => None,
    })
}

/// Euler's totient.
pub fn totient(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .iter()
        .fold(n, |acc, pp| acc / pp.p * (pp.p - 1)))
}

/// `base^exp mod modulus`, in `[0, modulus)`.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut acc = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_reduced(acc, b, modulus);
        }
        b = mul_reduced(b, b, modulus);
        exp >>= 1;
    }
    Ok(acc)
}

/// Least `d >= 1` with `r^d = 1 (mod m)`; 1 when `m = 1`.
///
/// The order divides `phi(m)`, so only divisors of the totient are tried.
pub fn mult_order(r: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if m == 1 {
        return Ok(1);
    }
    if gcd(r % m, m) != 1 {
        return Err(Error::NotCoprime {
            value: r,
            modulus: m,
        });
    }
    for d in divisors(totient(m)?)? {
        if pow_mod(r, d, m)? == 1 {
            return Ok(d);
        }
    }
    unreachable!("r^phi(m) = 1 for r coprime to m")
}

/// `sum_{j=0}^{k-1} r^(j*x) mod modulus`.
///
/// This is the integer `(r^(kx) - 1) / (r^x - 1)` reduced mod `modulus`,
/// evaluated term by term: `r^x - 1` is usually not invertible here.
pub fn geometric_sum_mod(r: u64, x: u64, k: u64, modulus: u64) -> Result<u64> {
    let step = pow_mod(r, x, modulus)?;
    let mut term = 1 % modulus;
    let mut sum = 0u64;
    for _ in 0..k {
        sum = (sum + term) % modulus;
        term = mul_reduced(term, step, modulus);
    }
    Ok(sum)
}

/// `gcd(m, a - 1)` for a residue `a` modulo `m`, with `gcd(m, 0) = m`.
pub(crate) fn gcd_minus_one(m: u64, a: u64) -> u64 {
    gcd(m, (a % m + m - 1) % m)
}
