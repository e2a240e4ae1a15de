//! Brute-force decomposition over a finite field: try every normalized
//! inner polynomial.

use super::{outer_from_inner, Decomposition};
use crate::algebra::{FiniteField, Fq, MPoly, MPolyRing, PerfectField, Ring};
use crate::error::{Error, Result};
use crate::guard;
use crate::irred::monomials_up_to;

/// Every monic polynomial of degree exactly `k` with zero constant term.
pub fn normalized_inners(ring: &MPolyRing<FiniteField>, k: u32) -> Result<Vec<MPoly<Fq>>> {
    let monos: Vec<_> = monomials_up_to(ring.nvars(), k)
        .into_iter()
        .filter(|m| m.degree() > 0)
        .collect();
    let elems = ring.base().elements().expect("finite");
    let q = elems.len() as u128;
    let total: u128 = monos
        .iter()
        .enumerate()
        .filter(|(_, m)| m.degree() == k)
        .map(|(i, _)| q.saturating_pow(i as u32))
        .fold(0, u128::saturating_add);
    let limit = guard::limit();
    if total > limit {
        return Err(Error::GuardExceeded {
            candidates: total,
            guard: limit,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    for (lead, m) in monos.iter().enumerate().filter(|(_, m)| m.degree() == k) {
        for code in 0..q.pow(lead as u32) {
            let mut rest = code;
            let mut terms = vec![(m.clone(), ring.base().one())];
            for mono in &monos[..lead] {
                terms.push((mono.clone(), elems[(rest % q) as usize]));
                rest /= q;
            }
            out.push(ring.from_terms(terms));
        }
    }
    Ok(out)
}

/// All normalized `u(H)` with `deg u = e` equal to `f`, found by trying every
/// normalized inner polynomial of degree `deg f / e`.
pub fn exhaustive_decompositions(
    ring: &MPolyRing<FiniteField>,
    f: &MPoly<Fq>,
    e: u32,
) -> Result<Vec<Decomposition<Fq>>> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if e < 2 || d % e != 0 {
        return Err(Error::InvalidDegreeSplit(format!(
            "{e} does not divide the degree {d}"
        )));
    }
    Ok(normalized_inners(ring, d / e)?
        .into_iter()
        .filter_map(|h| {
            outer_from_inner(ring, f, &h, e).map(|outer| Decomposition { outer, inner: h })
        })
        .collect())
}
