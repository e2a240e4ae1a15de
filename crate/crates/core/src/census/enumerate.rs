//! Full scan of the polynomials of exact degree `d`, split into disjoint
//! index ranges whose tallies merge by addition.

use std::ops::{Add, Range};

use num_bigint::BigUint;

use super::{check_degree, CensusReport, Method};
use crate::algebra::{FiniteField, Fq, MPoly, MPolyRing, Monomial};
use crate::decomp::{is_indecomposable_multi, is_indecomposable_uni};
use crate::error::{Error, Result};
use crate::guard;
use crate::irred::monomials_up_to;
use crate::parallel::{map_collect, Execution};

/// Work units handed to a single worker never exceed this many polynomials.
const BLOCK: u64 = 2048;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub total: u64,
    pub decomposable: u64,
}

impl Add for Tally {
    type Output = Tally;
    fn add(self, o: Tally) -> Tally {
        Tally {
            total: self.total + o.total,
            decomposable: self.decomposable + o.decomposable,
        }
    }
}

/// The scan space: polynomial number `i` has lower-degree coefficients given
/// by the base-`q` digits of `i mod q^L` and a top-degree part given by the
/// digits of `i / q^L + 1`, which is never zero.
struct Space {
    ring: MPolyRing<FiniteField>,
    low: Vec<Monomial>,
    top: Vec<Monomial>,
    q: u64,
    low_size: u64,
    size: u64,
}

impl Space {
    fn new(q: u64, n: u32, d: u32) -> Result<Space> {
        check_degree(d)?;
        if n == 0 {
            return Err(Error::VariableCount {
                expected: "at least 1".into(),
                found: 0,
            });
        }
        let field = FiniteField::with_size(q)?;
        let names: Vec<String> = match n {
            1 => vec!["x".into()],
            2 => vec!["x".into(), "y".into()],
            _ => (1..=n).map(|i| format!("x{i}")).collect(),
        };
        let ring = MPolyRing::new(field, names);
        let (top, low): (Vec<Monomial>, Vec<Monomial>) = monomials_up_to(n as usize, d)
            .into_iter()
            .partition(|m| m.degree() == d);
        let limit = guard::limit();
        let exceeded = |candidates: u128| Error::GuardExceeded {
            candidates,
            guard: limit,
        };
        let low_size = (q as u128)
            .checked_pow(low.len() as u32)
            .ok_or(exceeded(u128::MAX))?;
        let top_size = (q as u128)
            .checked_pow(top.len() as u32)
            .ok_or(exceeded(u128::MAX))?
            - 1;
        let size = low_size.checked_mul(top_size).ok_or(exceeded(u128::MAX))?;
        if size > limit {
            return Err(exceeded(size));
        }
        Ok(Space {
            ring,
            low,
            top,
            q,
            low_size: low_size as u64,
            size: size as u64,
        })
    }

    fn poly(&self, i: u64) -> MPoly<Fq> {
        let mut terms = Vec::with_capacity(self.low.len() + self.top.len());
        let mut push = |monos: &[Monomial], mut code: u64| {
            for m in monos {
                let c = (code % self.q) as u32;
                code /= self.q;
                if c != 0 {
                    terms.push((m.clone(), Fq::from_code(c)));
                }
            }
        };
        push(&self.low, i % self.low_size);
        push(&self.top, i / self.low_size + 1);
        self.ring.from_terms(terms)
    }

    fn tally(&self, range: Range<u64>) -> Result<Tally> {
        let mut t = Tally::default();
        for i in range {
            let f = self.poly(i);
            let indecomposable = if self.ring.nvars() == 1 {
                is_indecomposable_uni(&self.ring, &f)?
            } else {
                is_indecomposable_multi(&self.ring, &f)?
            };
            t.total += 1;
            t.decomposable += u64::from(!indecomposable);
        }
        Ok(t)
    }
}

/// Splits `0..total` into `parts` contiguous ranges of near-equal length.
pub fn partition_ranges(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = parts.max(1) as u64;
    (0..parts)
        .map(|k| (total * k / parts)..(total * (k + 1) / parts))
        .filter(|r| !r.is_empty())
        .collect()
}

/// Tally over one index range of the scan space. Ranges past the end are
/// clipped.
pub fn enumerate_range(q: u64, n: u32, d: u32, range: Range<u64>) -> Result<Tally> {
    let space = Space::new(q, n, d)?;
    let end = range.end.min(space.size);
    space.tally(range.start.min(end)..end)
}

/// Classifies every polynomial of exact degree `d` in `n` variables over
/// `F_q`, using the multivariate rule for `n >= 2` and the one-variable rule
/// (inner degree at least two) for `n = 1`. The scan space is cut into
/// `partitions` ranges; the result does not depend on that number or on
/// `exec`.
pub fn enumerate_census(
    q: u64,
    n: u32,
    d: u32,
    partitions: usize,
    exec: Execution,
) -> Result<CensusReport> {
    let space = Space::new(q, n, d)?;
    let blocks: Vec<Range<u64>> = partition_ranges(space.size, partitions)
        .into_iter()
        .flat_map(|r| {
            let pieces = (r.end - r.start).div_ceil(BLOCK) as usize;
            partition_ranges(r.end - r.start, pieces)
                .into_iter()
                .map(move |s| (r.start + s.start)..(r.start + s.end))
        })
        .collect();
    let tallies = map_collect(&blocks, exec, |r| space.tally(r.clone()));
    let mut sum = Tally::default();
    for t in tallies {
        sum = sum + t?;
    }
    Ok(CensusReport::from_total(
        q,
        n,
        d,
        BigUint::from(sum.total),
        BigUint::from(sum.decomposable),
        Method::Enumeration,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::count_total;

    #[test]
    fn partitions_cover_exactly() {
        for (total, parts) in [(10, 3), (7, 7), (5, 9), (0, 4), (100, 1)] {
            let r = partition_ranges(total, parts);
            let mut next = 0;
            for x in &r {
                assert_eq!(x.start, next);
                next = x.end;
            }
            assert_eq!(next, total);
        }
    }

    #[test]
    fn small_scans() {
        let r = enumerate_census(2, 2, 2, 4, Execution::Parallel).unwrap();
        assert_eq!(r.total, count_total(2, 2, 2).unwrap());
        assert_eq!(r.decomposable, 12u32.into());
        let r = enumerate_census(3, 1, 4, 1, Execution::Sequential).unwrap();
        assert_eq!((r.total, r.decomposable), (162u32.into(), 54u32.into()));
        let r = enumerate_census(2, 1, 9, 3, Execution::Parallel).unwrap();
        assert_eq!((r.total, r.decomposable), (512u32.into(), 32u32.into()));
    }

    #[test]
    fn ranges_merge_to_the_full_scan() {
        let full = enumerate_census(3, 2, 2, 1, Execution::Sequential).unwrap();
        let n = full.total.to_string().parse::<u64>().unwrap();
        let sum = partition_ranges(n, 5)
            .into_iter()
            .map(|r| enumerate_range(3, 2, 2, r).unwrap())
            .fold(Tally::default(), |a, b| a + b);
        assert_eq!(BigUint::from(sum.decomposable), full.decomposable);
        assert_eq!(BigUint::from(sum.total), full.total);
    }

    #[test]
    fn guard_is_enforced() {
        assert!(matches!(
            enumerate_census(5, 2, 6, 1, Execution::Sequential),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
