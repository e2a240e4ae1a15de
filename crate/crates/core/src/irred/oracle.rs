//! Reference factorization by exhaustive divisor search. Slow, but with no
//! moving parts; the fast paths are tested against it.

use super::multivariate::make_monic;
use super::Factorization;
use crate::algebra::{Domain, FiniteField, Fq, MPoly, MPolyRing, Monomial, Ring};
use crate::error::{Error, Result};
use crate::guard;

/// All monomials in `n` variables of total degree at most `d`, ascending.
pub(crate) fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == n {
            out.push(Monomial::new(cur));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn candidate_count(q: u128, monos: &[Monomial], t: u32) -> u128 {
    monos
        .iter()
        .enumerate()
        .filter(|(_, m)| m.degree() == t)
        .map(|(i, _)| q.saturating_pow(i as u32))
        .fold(0u128, u128::saturating_add)
}

/// Smallest-degree monic divisor, searching every monic candidate of degree
/// `1..=deg f / 2`.
fn exhaustive_divisor(ring: &MPolyRing<FiniteField>, f: &MPoly<Fq>) -> Result<Option<MPoly<Fq>>> {
    let d = f.degree().unwrap_or(0);
    let q = ring.base().size();
    let n = ring.nvars();
    let total: u128 = (1..=d / 2)
        .map(|t| candidate_count(q as u128, &monomials_up_to(n, t), t))
        .fold(0, u128::saturating_add);
    let limit = guard::limit();
    if total > limit {
        return Err(Error::GuardExceeded {
            candidates: total,
            guard: limit,
        });
    }
    for t in 1..=d / 2 {
        let monos = monomials_up_to(n, t);
        for (lead, m) in monos.iter().enumerate().filter(|(_, m)| m.degree() == t) {
            let count = q.pow(lead as u32);
            for code in 0..count {
                let mut rest = code;
                let mut terms = vec![(m.clone(), ring.base().one())];
                for mono in &monos[..lead] {
                    terms.push((mono.clone(), Fq::from_code((rest % q) as u32)));
                    rest /= q;
                }
                let g = ring.from_terms(terms);
                if ring.div_exact(f, &g).is_some() {
                    return Ok(Some(g));
                }
            }
        }
    }
    Ok(None)
}

/// Irreducibility by exhaustive divisor search.
pub fn exhaustive_is_irreducible(ring: &MPolyRing<FiniteField>, f: &MPoly<Fq>) -> Result<bool> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(exhaustive_divisor(ring, f)?.is_none()),
    }
}

/// Factorization by repeated exhaustive divisor search, in the same
/// normal form as [`factor`](super::factor).
pub fn exhaustive_factor(
    ring: &MPolyRing<FiniteField>,
    f: &MPoly<Fq>,
) -> Result<Factorization<MPoly<Fq>, Fq>> {
    let unit = *f.lc().ok_or(Error::ZeroPolynomial)?;
    let mut rest = make_monic(ring, f);
    let mut found = Vec::new();
    while rest.degree().unwrap_or(0) > 0 {
        match exhaustive_divisor(ring, &rest)? {
            Some(g) => {
                rest = ring.div_exact(&rest, &g).expect("divisor divides");
                found.push(g);
            }
            None => {
                found.push(rest);
                break;
            }
        }
    }
    Ok(Factorization::from_list(found, unit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irred::factor;

    #[test]
    fn monomial_listing() {
        let m = monomials_up_to(2, 2);
        assert_eq!(m.len(), 6);
        assert_eq!(m[0], Monomial::new(&[0, 0]));
        assert_eq!(m[5], Monomial::new(&[2, 0]));
    }

    #[test]
    fn fast_path_matches_oracle_on_all_small_polynomials() {
        // every polynomial of degree <= 3 over F_2 in two variables
        let r = MPolyRing::new(FiniteField::new(2, 1).unwrap(), ["x", "y"]);
        let monos = monomials_up_to(2, 3);
        for code in 1u32..(1 << monos.len()) {
            let f = r.from_terms(
                monos
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| code >> i & 1 == 1)
                    .map(|(_, m)| (m.clone(), Fq::from_code(1))),
            );
            if f.degree() == Some(0) {
                continue;
            }
            assert_eq!(
                factor(&r, &f).unwrap(),
                exhaustive_factor(&r, &f).unwrap(),
                "{}",
                r.display(&f)
            );
        }
    }

    #[test]
    fn fast_path_matches_oracle_over_f4_and_f3() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (p, k) in [(2, 2), (3, 1)] {
            let r = MPolyRing::new(FiniteField::new(p, k).unwrap(), ["x", "y"]);
            let q = r.base().size() as u32;
            let monos = monomials_up_to(2, 4);
            for _ in 0..150 {
                // random products of two low-degree factors, plus random polynomials
                let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng, d: u32| {
                    r.from_terms(
                        monos
                            .iter()
                            .filter(|m| m.degree() <= d)
                            .map(|m| (m.clone(), Fq::from_code(rng.gen_range(0..q)))),
                    )
                };
                let da = rng.gen_range(1..3);
                let a = rand_poly(&mut rng, da);
                let b = rand_poly(&mut rng, 2);
                let f = if rng.gen_bool(0.5) {
                    r.mul(&a, &b)
                } else {
                    rand_poly(&mut rng, 4)
                };
                if f.degree().unwrap_or(0) == 0 {
                    continue;
                }
                assert_eq!(factor(&r, &f).unwrap(), exhaustive_factor(&r, &f).unwrap());
            }
        }
    }
}
