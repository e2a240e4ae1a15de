//! Multivariate factorization over finite fields by Kronecker substitution,
//! and the absolute-irreducibility tests built on it.

use super::univariate::irreducible_list;
use super::Factorization;
use crate::algebra::primes::distinct_prime_factors;
use crate::algebra::{
    Domain, Field, FiniteField, Fq, MPoly, MPolyRing, Monomial, PolyRing, Ring, UPoly,
};
use crate::error::{Error, Result};
use crate::guard;

/// Mixed-radix weights mapping `x_i -> z^{w_i}`; every factor of `f` has
/// `deg_{x_i} < base_i` for all but the last variable, so the map is
/// injective on divisors.
struct Kronecker {
    bases: Vec<u64>,
    weights: Vec<u64>,
}

impl Kronecker {
    fn for_poly(f: &MPoly<Fq>, nvars: usize) -> Self {
        let bases: Vec<u64> = (0..nvars)
            .map(|i| f.degree_in(i).unwrap_or(0) as u64 + 1)
            .collect();
        let mut weights = Vec::with_capacity(nvars);
        let mut w = 1u64;
        for b in &bases {
            weights.push(w);
            w *= b;
        }
        Kronecker { bases, weights }
    }

    fn encode(&self, uring: &PolyRing<FiniteField>, f: &MPoly<Fq>) -> UPoly<Fq> {
        let deg = f.terms().map(|(m, _)| self.exponent(m)).max().unwrap_or(0);
        let mut coeffs = vec![Fq::default(); deg as usize + 1];
        for (m, c) in f.terms() {
            coeffs[self.exponent(m) as usize] = *c;
        }
        uring.from_coeffs(coeffs)
    }

    fn exponent(&self, m: &Monomial) -> u64 {
        m.exps()
            .iter()
            .zip(&self.weights)
            .map(|(&e, w)| e as u64 * w)
            .sum()
    }

    fn decode(&self, ring: &MPolyRing<FiniteField>, g: &UPoly<Fq>) -> MPoly<Fq> {
        let n = self.bases.len();
        ring.from_terms(
            g.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| c.code() != 0)
                .map(|(e, c)| {
                    let mut rest = e as u64;
                    let mut exps = vec![0u32; n];
                    for (i, x) in exps.iter_mut().enumerate() {
                        if i + 1 == n {
                            *x = rest as u32;
                        } else {
                            *x = (rest % self.bases[i]) as u32;
                            rest /= self.bases[i];
                        }
                    }
                    (Monomial::new(&exps), *c)
                }),
        )
    }
}

/// Scales so that the graded-lex leading coefficient is one.
pub(crate) fn make_monic(ring: &MPolyRing<FiniteField>, f: &MPoly<Fq>) -> MPoly<Fq> {
    match f.lc() {
        Some(c) => ring.scale(f, &ring.base().inv(c)),
        None => f.clone(),
    }
}

/// Finds a nonconstant divisor of smallest Kronecker degree, which is then
/// irreducible. `None` when `f` is irreducible.
fn smallest_divisor(ring: &MPolyRing<FiniteField>, f: &MPoly<Fq>) -> Result<Option<MPoly<Fq>>> {
    let kr = Kronecker::for_poly(f, ring.nvars());
    let uring = PolyRing::new(ring.base().clone(), "z");
    let image = kr.encode(&uring, f);
    let total = image.degree().unwrap_or(0);
    let irr = irreducible_list(&uring, &image)?;
    // group equal factors
    let mut groups: Vec<(UPoly<Fq>, usize)> = Vec::new();
    for g in irr {
        match groups.last_mut() {
            Some((h, m)) if *h == g => *m += 1,
            _ => groups.push((g, 1)),
        }
    }
    let limit = guard::limit();
    let mut visited: u128 = 0;
    for target in 1..=total / 2 {
        let mut counts = vec![0usize; groups.len()];
        if let Some(found) = search(
            ring,
            &uring,
            &kr,
            f,
            &groups,
            &mut counts,
            0,
            target,
            &mut visited,
            limit,
        )? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn search(
    ring: &MPolyRing<FiniteField>,
    uring: &PolyRing<FiniteField>,
    kr: &Kronecker,
    f: &MPoly<Fq>,
    groups: &[(UPoly<Fq>, usize)],
    counts: &mut Vec<usize>,
    idx: usize,
    remaining: usize,
    visited: &mut u128,
    limit: u128,
) -> Result<Option<MPoly<Fq>>> {
    if remaining == 0 {
        *visited += 1;
        if *visited > limit {
            return Err(Error::GuardExceeded {
                candidates: *visited,
                guard: limit,
            });
        }
        let prod = groups
            .iter()
            .zip(counts.iter())
            .fold(uring.one(), |acc, ((g, _), &c)| {
                uring.mul(&acc, &uring.pow(g, c as u64))
            });
        let cand = kr.decode(ring, &prod);
        if cand.degree().unwrap_or(0) > 0 && ring.div_exact(f, &cand).is_some() {
            return Ok(Some(make_monic(ring, &cand)));
        }
        return Ok(None);
    }
    if idx == groups.len() {
        return Ok(None);
    }
    let (g, mult) = &groups[idx];
    let dg = g.degree().unwrap_or(0);
    for c in (0..=*mult).filter(|&c| c * dg <= remaining) {
        counts[idx] = c;
        if let Some(found) = search(
            ring,
            uring,
            kr,
            f,
            groups,
            counts,
            idx + 1,
            remaining - c * dg,
            visited,
            limit,
        )? {
            counts[idx] = 0;
            return Ok(Some(found));
        }
    }
    counts[idx] = 0;
    Ok(None)
}

/// Factorization over the coefficient field into irreducibles made monic
/// in graded-lex order, sorted by degree and then terms.
pub fn factor(
    ring: &MPolyRing<FiniteField>,
    f: &MPoly<Fq>,
) -> Result<Factorization<MPoly<Fq>, Fq>> {
    let unit = *f.lc().ok_or(Error::ZeroPolynomial)?;
    let mut rest = make_monic(ring, f);
    let mut found: Vec<MPoly<Fq>> = Vec::new();
    while rest.degree().unwrap_or(0) > 0 {
        match smallest_divisor(ring, &rest)? {
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

fn require_nonconstant(f: &MPoly<Fq>) -> Result<u32> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(d) => Ok(d),
    }
}

/// Irreducibility over the coefficient field.
pub fn is_irreducible(ring: &MPolyRing<FiniteField>, f: &MPoly<Fq>) -> Result<bool> {
    require_nonconstant(f)?;
    Ok(smallest_divisor(ring, &make_monic(ring, f))?.is_none())
}

/// Irreducibility of a polynomial in exactly two variables.
pub fn bivar_irreducible(ring: &MPolyRing<FiniteField>, f: &MPoly<Fq>) -> Result<bool> {
    if ring.nvars() != 2 {
        return Err(Error::VariableCount {
            expected: "2".into(),
            found: ring.nvars(),
        });
    }
    is_irreducible(ring, f)
}

/// Image of `f` in the polynomial ring over `F_{q^e}`.
pub fn extend_scalars(
    ring: &MPolyRing<FiniteField>,
    f: &MPoly<Fq>,
    e: u32,
) -> Result<(MPolyRing<FiniteField>, MPoly<Fq>)> {
    let big = ring.base().extension(e)?;
    let emb = ring.base().embedding_into(&big)?;
    let target = ring.with_base(big);
    let g = ring.map_into(f, &target, |c| emb.apply(*c));
    Ok((target, g))
}

/// Irreducibility over the algebraic closure. An irreducible `F` of degree
/// `d` splits over the closure into `r | d` conjugate factors and over
/// `F_{q^e}` into `gcd(r, e)` of them, so it suffices to test `F_{q^l}` for
/// the primes `l | d`.
pub fn absolutely_irreducible(ring: &MPolyRing<FiniteField>, f: &MPoly<Fq>) -> Result<bool> {
    let d = require_nonconstant(f)?;
    if !is_irreducible(ring, f)? {
        return Ok(false);
    }
    for l in distinct_prime_factors(d as u64) {
        let (big, g) = extend_scalars(ring, f, l as u32)?;
        if !is_irreducible(&big, &g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of conjugate factors of an irreducible `g` over the closure.
fn split_count(ring: &MPolyRing<FiniteField>, g: &MPoly<Fq>) -> Result<usize> {
    let d = g.degree().unwrap_or(0) as u64;
    // r is the product over primes l of the largest l^b dividing both d and r
    let mut r = 1usize;
    for l in distinct_prime_factors(d) {
        let mut power = 1u64;
        while d.is_multiple_of(power * l) {
            let (big, h) = extend_scalars(ring, g, (power * l) as u32)?;
            let count = factor(&big, &h)?.factors.len() as u64;
            if !count.is_multiple_of(power * l) {
                break;
            }
            power *= l;
        }
        r *= power as usize;
    }
    Ok(r)
}

/// The number of distinct irreducible factors over the algebraic closure.
pub fn n_bar_factors(ring: &MPolyRing<FiniteField>, f: &MPoly<Fq>) -> Result<usize> {
    require_nonconstant(f)?;
    factor(ring, f)?
        .factors
        .iter()
        .map(|(g, _)| split_count(ring, g))
        .sum()
}
