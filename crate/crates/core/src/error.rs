use thiserror::Error;

use crate::lattice::SubgroupTriple;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be positive, got 0")]
    ZeroArgument,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{value} and modulus {modulus} are not coprime")]
    NotCoprime { value: u64, modulus: u64 },

    #[error("m and n must be positive (m = {m}, n = {n})")]
    NonPositive { m: i64, n: i64 },
    #[error("gcd(m,n) != 1: gcd({m},{n}) = {gcd}")]
    GcdMN { m: u64, n: u64, gcd: u64 },
    #[error("gcd(m,r-1) != 1: gcd({m},{r}-1) = {gcd}")]
    GcdMR { m: u64, r: u64, gcd: u64 },
    #[error("r^n != 1 (mod m): {r}^{n} = {residue} (mod {m})")]
    PowerCondition {
        m: u64,
        n: u64,
        r: u64,
        residue: u64,
    },
    #[error("group order m*n = {order} exceeds the supported bound {bound}")]
    OrderTooLarge { order: u128, bound: u64 },

    #[error("{triple} is not a subgroup index of ZM({m},{n},{r})")]
    NotInL {
        triple: SubgroupTriple,
        m: u64,
        n: u64,
        r: u64,
    },
    #[error("materialized {triple} has {found} elements, expected {expected}")]
    CardinalityMismatch {
        triple: SubgroupTriple,
        found: usize,
        expected: u64,
    },
    #[error("subgroups belong to different groups")]
    MixedGroups,

    #[error("{what} requires a prime, got {value}")]
    NotPrime { what: &'static str, value: u64 },
    #[error("dihedral count needs odd m >= 3, got {0}")]
    NotOddDihedral(u64),

    #[error("group order {order} exceeds the oracle bound {bound}")]
    OracleBound { order: u64, bound: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
