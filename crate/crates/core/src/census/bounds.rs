//! Asymptotic statements checked in exact arithmetic: the two-variable ratio
//! bound, the one-variable counts and bounds, the integer inequalities on
//! `b(d) = (d+1)(d+2)/2`, and the trend of `D_d / N_d`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::json;

use super::{check_degree, check_field_size, count_recursive, count_total, ratio, rpow, MultiVars};
use crate::algebra::primes::{divisors, gcd, prime_factors};
use crate::error::{Error, Result};

/// `b(d) = (d+1)(d+2)/2`, the number of monomials of degree at most `d` in
/// two variables.
pub fn b(d: u64) -> u64 {
    (d + 1) * (d + 2) / 2
}

fn int(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn big(x: &BigRational) -> String {
    x.to_string()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundsCheck {
    pub q: u64,
    pub d: u32,
    pub ell: u64,
    pub alpha: BigRational,
    pub beta: BigRational,
    /// `D_d / N_d` from the induction formula.
    pub ratio: BigRational,
    pub holds: bool,
}

impl BoundsCheck {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "q": self.q,
            "d": self.d,
            "ell": self.ell,
            "alpha": big(&self.alpha),
            "beta": big(&self.beta),
            "ratio": big(&self.ratio),
            "holds": self.holds,
        })
    }
}

/// `|D_d/N_d - alpha| <= alpha * beta` in two variables, for `d` with at
/// least three prime factors counted with multiplicity. Here
/// `alpha = q^(l - 1 + b(d/l) - b(d))` and `beta = d / q^(d/l)` with `l` the
/// least prime factor of `d`.
pub fn bounds_check_n2(q: u64, d: u32) -> Result<BoundsCheck> {
    check_field_size(q)?;
    let factors = prime_factors(d as u64);
    if factors.len() < 3 {
        return Err(Error::InvalidDegreeSplit(format!(
            "d = {d} has {} prime factors, at least 3 are needed",
            factors.len()
        )));
    }
    let d64 = d as u64;
    let ell = factors[0];
    let alpha = rpow(q, (ell - 1 + b(d64 / ell)) as i64 - b(d64) as i64);
    let beta = int(d64) / rpow(q, (d64 / ell) as i64);
    let report = count_recursive(q, MultiVars::new(2)?, d)?;
    let r = ratio(&report.decomposable, &report.total);
    let holds = (&r - &alpha).abs() <= &alpha * &beta;
    Ok(BoundsCheck {
        q,
        d,
        ell,
        alpha,
        beta,
        ratio: r,
        holds,
    })
}

/// One-variable counts for `gcd(q, d) = 1`. `exact` is set when `d` is 1, a
/// prime, or the square of a prime; `lower` and `upper` bound `D_d` whenever
/// they are available in exact arithmetic; `alpha` is the leading term of
/// `D_d / N_d` for `d` with at least three prime factors.
#[derive(Clone, Debug, PartialEq)]
pub struct UniCount {
    pub q: u64,
    pub d: u32,
    pub total: BigUint,
    pub exact: Option<BigUint>,
    pub lower: Option<BigRational>,
    pub upper: Option<BigRational>,
    pub alpha: Option<BigRational>,
}

impl UniCount {
    /// Whether `value` is compatible with every available bound.
    pub fn admits(&self, value: &BigUint) -> bool {
        let v = BigRational::from_integer(BigInt::from(value.clone()));
        self.exact.as_ref().is_none_or(|e| e == value)
            && self.lower.as_ref().is_none_or(|l| *l <= v)
            && self.upper.as_ref().is_none_or(|u| v <= *u)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "q": self.q,
            "d": self.d,
            "N": self.total.to_string(),
            "D": self.exact.as_ref().map(|x| x.to_string()),
            "D_lower": self.lower.as_ref().map(big),
            "D_upper": self.upper.as_ref().map(big),
            "alpha": self.alpha.as_ref().map(big),
        })
    }
}

pub fn count_uni(q: u64, d: u32) -> Result<UniCount> {
    check_field_size(q)?;
    check_degree(d)?;
    let d64 = d as u64;
    if gcd(q, d64) != 1 {
        return Err(Error::Unsupported(format!(
            "one-variable counts need gcd(q, d) = 1, got q = {q}, d = {d}"
        )));
    }
    let total = count_total(q, 1, d)?;
    let mut out = UniCount {
        q,
        d,
        total,
        exact: None,
        lower: None,
        upper: None,
        alpha: None,
    };
    let factors = prime_factors(d64);
    let exact = |x: BigUint, out: &mut UniCount| {
        let r = BigRational::from_integer(BigInt::from(x.clone()));
        out.lower = Some(r.clone());
        out.upper = Some(r);
        out.exact = Some(x);
    };
    let qm1 = int(q - 1);
    match factors.as_slice() {
        [] | [_] => exact(BigUint::zero(), &mut out),
        [p, p2] if p == p2 => exact(
            BigUint::from(q - 1) * BigUint::from(q).pow((2 * p - 1) as u32),
            &mut out,
        ),
        [p, p2] => {
            let main = int(2) * &qm1 * rpow(q, (p + p2 - 1) as i64);
            out.lower = Some(&main - rpow(q, 5));
            out.upper = Some(main);
        }
        _ => {
            let ell = factors[0];
            let ell2 = divisors(d64)[2];
            let head = &qm1 * rpow(q, (ell + d64 / ell - 1) as i64);
            out.alpha = Some(int(2) / rpow(q, (d64 - ell - d64 / ell + 1) as i64));
            let spread = (ell + d64 / ell) as i64 - (ell2 + d64 / ell2) as i64;
            out.upper = Some(&head * (int(2) + int(d64 - 2) / rpow(q, spread)));
            if d64.is_multiple_of(ell * ell) {
                let e = (d64 / ell) as i64 - (d64 / (ell * ell)) as i64 - ell as i64 + 1;
                out.lower = Some(int(2) * &head * (int(1) - int(2 * d64 / ell) / rpow(q, e)));
            }
        }
    }
    Ok(out)
}

/// The three inequalities of the `b(d)` lemma at one degree, with item (1)
/// taken over the divisors `lambda` with `l' <= lambda < d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BdLemmaItems {
    pub d: u64,
    pub ell: u64,
    pub ell_prime: u64,
    pub ell_second: u64,
    pub item1: bool,
    pub item2: bool,
    pub item3: bool,
    /// Item (1) at `lambda = d`, kept apart from the main check.
    pub item1_at_d: bool,
}

/// Both sides of item (1), `b(d/l') + l'` and `b(d/lambda) + lambda`.
pub fn item1_sides(d: u64, lambda: u64) -> Option<(u64, u64)> {
    let ell_prime = *divisors(d).get(2)?;
    d.is_multiple_of(lambda)
        .then(|| (b(d / ell_prime) + ell_prime, b(d / lambda) + lambda))
}

/// `None` unless `d` has at least three prime factors.
pub fn bd_lemma_at(d: u64) -> Option<BdLemmaItems> {
    if prime_factors(d).len() < 3 {
        return None;
    }
    let divs = divisors(d);
    let (ell, ell_prime) = (divs[1], divs[2]);
    let ell_second = divisors(d / ell)[1];
    let lhs1 = b(d / ell_prime) + ell_prime;
    let item1 = divs
        .iter()
        .filter(|&&l| l >= ell_prime && l < d)
        .all(|&l| lhs1 >= b(d / l) + l);
    let item2 = b(d / ell) + ell >= b(d / ell_prime) + ell_prime + d / ell;
    let item3 = b(d / ell) + 1 >= b(d / (ell * ell_second)) + ell_second + d / ell;
    Some(BdLemmaItems {
        d,
        ell,
        ell_prime,
        ell_second,
        item1,
        item2,
        item3,
        item1_at_d: lhs1 >= b(1) + d,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BdLemmaReport {
    pub d_max: u64,
    pub degrees_checked: usize,
    /// Degrees where item (1), (2) or (3) fails.
    pub failures: Vec<u64>,
    /// Degrees where only the boundary case `lambda = d` of item (1) fails.
    pub boundary_failures: Vec<u64>,
}

impl BdLemmaReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "d_max": self.d_max,
            "degrees_checked": self.degrees_checked,
            "holds": self.holds(),
            "failures": self.failures,
            "boundary_failures": self.boundary_failures,
        })
    }
}

/// Checks the lemma for every `d <= d_max` with at least three prime factors.
pub fn bd_lemma_check(d_max: u64) -> Result<BdLemmaReport> {
    if d_max < 8 {
        return Err(Error::InvalidDegreeSplit(format!(
            "d_max = {d_max} is below 8"
        )));
    }
    let mut report = BdLemmaReport {
        d_max,
        degrees_checked: 0,
        failures: Vec::new(),
        boundary_failures: Vec::new(),
    };
    for items in (8..=d_max).filter_map(bd_lemma_at) {
        report.degrees_checked += 1;
        if !(items.item1 && items.item2 && items.item3) {
            report.failures.push(items.d);
        }
        if !items.item1_at_d {
            report.boundary_failures.push(items.d);
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrendRow {
    pub d: u32,
    /// `1 - I_d / N_d`.
    pub defect: BigRational,
    /// `d q^d N_(d/2) / N_d`, with `d/2` rounded down.
    pub bound: BigRational,
}

/// The two-variable defect `1 - I_d/N_d` from the induction formula for
/// `2 <= d <= d_max`, next to the bound it must stay under.
pub fn trend_table(q: u64, d_max: u32) -> Result<Vec<TrendRow>> {
    let two = MultiVars::new(2)?;
    (2..=d_max)
        .map(|d| {
            let r = count_recursive(q, two, d)?;
            let half = count_total(q, 2, d / 2)?;
            Ok(TrendRow {
                d,
                defect: ratio(&r.decomposable, &r.total),
                bound: int(d as u64) * rpow(q, d as i64) * ratio(&half, &r.total),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_bound_examples() {
        let c = bounds_check_n2(2, 8).unwrap();
        assert_eq!(c.alpha, rpow(2, -29));
        assert_eq!(c.beta, BigRational::new(1.into(), 2.into()));
        assert!(c.holds);
        for d in [12, 16, 18, 20] {
            assert!(bounds_check_n2(2, d).unwrap().holds, "d = {d}");
        }
        assert!(matches!(
            bounds_check_n2(2, 6),
            Err(Error::InvalidDegreeSplit(_))
        ));
    }

    #[test]
    fn one_variable_values() {
        assert_eq!(count_uni(3, 4).unwrap().exact, Some(54u32.into()));
        assert_eq!(count_uni(2, 9).unwrap().exact, Some(32u32.into()));
        assert_eq!(count_uni(5, 3).unwrap().exact, Some(0u32.into()));
        assert!(matches!(count_uni(2, 4), Err(Error::Unsupported(_))));
        let c = count_uni(2, 15).unwrap();
        assert_eq!(c.lower, Some(int(224)));
        assert_eq!(c.upper, Some(int(256)));
        let c = count_uni(3, 10).unwrap();
        assert_eq!(c.lower, Some(int(2916 - 243)));
        assert_eq!(c.upper, Some(int(2916)));
        let c = count_uni(5, 8).unwrap();
        assert!(c.alpha.is_some() && c.lower.is_some() && c.upper.is_some());
        assert!(c.lower.unwrap() <= c.upper.unwrap());
        // 30 = 2 * 3 * 5: 30/4 is not an integer, so no exact lower bound
        assert_eq!(count_uni(7, 30).unwrap().lower, None);
    }

    #[test]
    fn bd_lemma() {
        assert_eq!(item1_sides(8, 4), Some((10, 10)));
        let at8 = bd_lemma_at(8).unwrap();
        assert!(at8.item1 && at8.item2 && at8.item3);
        // lambda = d: b(2) + 4 = 10 < b(1) + 8 = 11
        assert_eq!(item1_sides(8, 8), Some((10, 11)));
        assert!(!at8.item1_at_d);
        assert!(bd_lemma_at(12).is_some() && bd_lemma_at(6).is_none());
        let r = bd_lemma_check(1000).unwrap();
        assert!(r.holds());
        assert!(r.boundary_failures.contains(&8) && r.boundary_failures.contains(&27));
    }

    #[test]
    fn trend_rows() {
        let t = trend_table(2, 20).unwrap();
        assert_eq!(t.len(), 19);
        assert!(t.iter().all(|r| r.defect <= r.bound));
        let pow2: Vec<_> = t.iter().filter(|r| r.d.is_power_of_two()).collect();
        assert!(pow2.windows(2).all(|w| w[1].defect < w[0].defect));
    }
}
