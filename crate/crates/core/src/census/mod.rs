//! Exact counts of polynomials of degree `d` over `F_q`: all of them (`N_d`),
//! the indecomposable ones (`I_d`) and the decomposable ones (`D_d`).
//!
//! Counts come from three independent sources: closed forms, the induction
//! formula (for `n >= 2` only), and a full scan of the coefficient space.

mod bounds;
mod enumerate;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;
use serde_json::json;

use crate::algebra::primes::{divisors, prime_factors, prime_power};
use crate::error::{Error, Result};

pub use bounds::{
    b, bd_lemma_at, bd_lemma_check, bounds_check_n2, count_uni, item1_sides, trend_table,
    BdLemmaItems, BdLemmaReport, BoundsCheck, TrendRow, UniCount,
};
pub use enumerate::{enumerate_census, enumerate_range, partition_ranges, Tally};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Closed,
    Recursion,
    Enumeration,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Recursion => "recursion",
            Method::Enumeration => "enumeration",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub q: u64,
    pub n: u32,
    pub d: u32,
    pub total: BigUint,
    pub indecomposable: BigUint,
    pub decomposable: BigUint,
    pub method: Method,
}

impl CensusReport {
    pub(crate) fn from_total(
        q: u64,
        n: u32,
        d: u32,
        total: BigUint,
        decomposable: BigUint,
        method: Method,
    ) -> Self {
        let indecomposable = &total - &decomposable;
        CensusReport {
            q,
            n,
            d,
            total,
            indecomposable,
            decomposable,
            method,
        }
    }

    /// Whether two reports carry the same counts, whatever their methods.
    pub fn same_counts(&self, other: &CensusReport) -> bool {
        (self.q, self.n, self.d) == (other.q, other.n, other.d)
            && self.total == other.total
            && self.decomposable == other.decomposable
            && self.indecomposable == other.indecomposable
    }

    /// One JSON object; big integers are decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "q": self.q,
            "n": self.n,
            "d": self.d,
            "N": self.total.to_string(),
            "I": self.indecomposable.to_string(),
            "D": self.decomposable.to_string(),
            "method": self.method.as_str(),
        })
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} n={} d={} N={} I={} D={} [{}]",
            self.q,
            self.n,
            self.d,
            self.total,
            self.indecomposable,
            self.decomposable,
            self.method.as_str()
        )
    }
}

/// A variable count of at least two. The induction formula needs a
/// partition of the decomposable polynomials by inner degree, which fails in
/// one variable, so the recursive count only accepts this type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiVars(u32);

impl MultiVars {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::VariableCount {
                expected: "at least 2".into(),
                found: n as usize,
            });
        }
        Ok(MultiVars(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

pub(crate) fn check_field_size(q: u64) -> Result<()> {
    prime_power(q).map(|_| ()).ok_or(Error::NotPrimePower(q))
}

pub(crate) fn check_degree(d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    Ok(())
}

fn pow(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(u32::try_from(e).expect("exponent fits in u32"))
}

fn monomial_count(n: u32, d: u32) -> u64 {
    binomial(n as u64 + d as u64, n as u64)
}

/// `N_d = q^C(n+d, n) - q^C(n+d-1, n)`: polynomials in `n` variables of exact
/// total degree `d`.
pub fn count_total(q: u64, n: u32, d: u32) -> Result<BigUint> {
    check_field_size(q)?;
    check_degree(d)?;
    if n == 0 {
        return Err(Error::VariableCount {
            expected: "at least 1".into(),
            found: 0,
        });
    }
    Ok(pow(q, monomial_count(n, d)) - pow(q, monomial_count(n, d - 1)))
}

/// `I_e` for every divisor `e` of `d` by the induction formula, seeded with
/// `I_1 = N_1`.
fn indecomposable_table(q: u64, n: MultiVars, d: u32) -> Result<BTreeMap<u32, BigUint>> {
    let mut table = BTreeMap::new();
    for e in divisors(d as u64) {
        let e = e as u32;
        let mut i_e = count_total(q, n.get(), e)?;
        for e2 in divisors(e as u64) {
            let e2 = e2 as u32;
            if e2 < e {
                i_e -= pow(q, (e / e2 - 1) as u64) * &table[&e2];
            }
        }
        table.insert(e, i_e);
    }
    Ok(table)
}

/// Counts by the induction formula `I_d = N_d - sum q^(d/e - 1) I_e` over
/// proper divisors `e` of `d`.
pub fn count_recursive(q: u64, n: MultiVars, d: u32) -> Result<CensusReport> {
    let table = indecomposable_table(q, n, d)?;
    let total = count_total(q, n.get(), d)?;
    let decomposable = &total - &table[&d];
    Ok(CensusReport::from_total(
        q,
        n.get(),
        d,
        total,
        decomposable,
        Method::Recursion,
    ))
}

/// `D_d` in closed form when `d` is a prime, the square of a prime, or a
/// product of two distinct primes; `None` otherwise.
pub fn count_closed_small(q: u64, n: MultiVars, d: u32) -> Result<Option<BigUint>> {
    check_field_size(q)?;
    check_degree(d)?;
    let nv = n.get();
    let units = pow(q, nv as u64) - 1u32;
    let f = prime_factors(d as u64);
    let d64 = d as u64;
    let out = match f.as_slice() {
        [_] => Some(pow(q, d64) * units),
        [p, p2] if p == p2 => Some(
            pow(q, p - 1) * count_total(q, nv, *p as u32)?
                + (pow(q, d64) - pow(q, 2 * p - 1)) * units,
        ),
        [p, p2] => Some(
            pow(q, p - 1) * count_total(q, nv, *p2 as u32)?
                + pow(q, p2 - 1) * count_total(q, nv, *p as u32)?
                + (pow(q, d64) - BigUint::from(2u32) * pow(q, p + p2 - 1)) * units,
        ),
        _ => None,
    };
    Ok(out)
}

/// A closed-form report where [`count_closed_small`] applies.
pub fn closed_report(q: u64, n: MultiVars, d: u32) -> Result<Option<CensusReport>> {
    let total = count_total(q, n.get(), d)?;
    Ok(count_closed_small(q, n, d)?
        .map(|dd| CensusReport::from_total(q, n.get(), d, total, dd, Method::Closed)))
}

pub(crate) fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub(crate) fn rpow(q: u64, e: i64) -> BigRational {
    let base = BigRational::from_integer(BigInt::from(q));
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        BigRational::one() / num_traits::pow(base, (-e) as usize)
    }
}
