//! Univariate factorization over finite fields: square-free decomposition,
//! distinct-degree splitting and Cantor-Zassenhaus.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Factorization;
use crate::algebra::{Domain, FiniteField, Fq, PolyRing, Ring, UPoly};
use crate::error::{Error, Result};

const SEED: u64 = 0x5eed_f00d;

/// Complete factorization of a nonzero univariate polynomial into monic
/// irreducibles, sorted by degree and then coefficients.
pub fn uni_factor(
    ring: &PolyRing<FiniteField>,
    f: &UPoly<Fq>,
) -> Result<Factorization<UPoly<Fq>, Fq>> {
    let unit = *f.lc().ok_or(Error::ZeroPolynomial)?;
    let mut factors = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for (g, m) in ring.squarefree_decomposition(f)? {
        for (h, d) in distinct_degree(ring, &g)? {
            for irr in equal_degree(ring, &h, d, &mut rng)? {
                factors.push((irr, m));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(Factorization { unit, factors })
}

/// Monic irreducible factors with multiplicity, flattened: each factor is
/// repeated according to its multiplicity.
pub(crate) fn irreducible_list(
    ring: &PolyRing<FiniteField>,
    f: &UPoly<Fq>,
) -> Result<Vec<UPoly<Fq>>> {
    Ok(uni_factor(ring, f)?
        .factors
        .into_iter()
        .flat_map(|(g, m)| std::iter::repeat_n(g, m as usize))
        .collect())
}

/// Splits a monic square-free polynomial into products of irreducibles of
/// equal degree, returned as `(product, degree)`.
fn distinct_degree(ring: &PolyRing<FiniteField>, f: &UPoly<Fq>) -> Result<Vec<(UPoly<Fq>, usize)>> {
    let q = ring.base().size();
    let x = ring.gen();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = ring.rem(&x, &rest)?;
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = ring.pow_mod(&h, &[q], &rest)?;
        let g = ring.gcd(&ring.sub(&h, &x), &rest)?;
        if g.degree() != Some(0) {
            rest = ring.div_exact(&rest, &g).expect("gcd divides");
            h = ring.rem(&h, &rest)?;
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = rest.degree().filter(|&d| d > 0) {
        out.push((rest, d));
    }
    Ok(out)
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
/// degree `d`.
fn equal_degree(
    ring: &PolyRing<FiniteField>,
    f: &UPoly<Fq>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<UPoly<Fq>>> {
    let n = f.degree().unwrap_or(0);
    if n <= d {
        return Ok(vec![f.clone()]);
    }
    let field = ring.base();
    let q = field.size();
    let exponent: BigUint = (BigUint::from(q).pow(d as u32) - 1u32) >> 1;
    let limbs: Vec<u64> = exponent.to_u64_digits();
    loop {
        let a = ring.from_coeffs(
            (0..n)
                .map(|_| Fq::from_code(rng.gen_range(0..q) as u32))
                .collect(),
        );
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if field.p() == 2 {
            // absolute trace map to F_2
            let steps = field.k() as usize * d;
            let mut t = ring.rem(&a, f)?;
            let mut acc = t.clone();
            for _ in 1..steps {
                t = ring.rem(&ring.mul(&t, &t), f)?;
                acc = ring.add(&acc, &t);
            }
            acc
        } else {
            ring.sub(&ring.pow_mod(&a, &limbs, f)?, &ring.one())
        };
        if b.is_zero() {
            continue;
        }
        let g = ring.gcd(&b, f)?;
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = ring.div_exact(f, &g).expect("gcd divides");
            let mut out = equal_degree(ring, &g, d, rng)?;
            out.extend(equal_degree(ring, &h, d, rng)?);
            return Ok(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(r: &PolyRing<FiniteField>, c: &[i64]) -> UPoly<Fq> {
        r.from_coeffs(c.iter().map(|&x| r.base().from_i64(x)).collect())
    }

    #[test]
    fn small_factorizations() {
        let r5 = PolyRing::new(FiniteField::new(5, 1).unwrap(), "x");
        let fac = uni_factor(&r5, &poly(&r5, &[-1, 0, 1])).unwrap();
        assert_eq!(
            fac.factors,
            vec![(poly(&r5, &[1, 1]), 1), (poly(&r5, &[-1, 1]), 1)]
        );

        let r3 = PolyRing::new(FiniteField::new(3, 1).unwrap(), "x");
        let fac = uni_factor(&r3, &poly(&r3, &[1, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(poly(&r3, &[1, 0, 1]), 1)]);

        let r2 = PolyRing::new(FiniteField::new(2, 1).unwrap(), "x");
        let fac = uni_factor(&r2, &poly(&r2, &[0, 0, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(poly(&r2, &[0, 1]), 3)]);
        assert!(uni_factor(&r2, &r2.zero()).is_err());
    }

    #[test]
    fn splits_x_pow_q_minus_x() {
        for (p, k) in [(2, 3), (3, 2), (5, 1), (2, 4)] {
            let field = FiniteField::new(p, k).unwrap();
            let q = field.size() as usize;
            let r = PolyRing::new(field.clone(), "x");
            let f = r.sub(&r.monomial(field.one(), q), &r.gen());
            let fac = uni_factor(&r, &f).unwrap();
            assert_eq!(fac.factors.len(), q);
            assert!(fac
                .factors
                .iter()
                .all(|(g, m)| g.degree() == Some(1) && *m == 1));
        }
    }

    #[test]
    fn product_reconstructs() {
        let field = FiniteField::new(3, 2).unwrap();
        let r = PolyRing::new(field.clone(), "x");
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let deg = rng.gen_range(1..9);
            let f = r.from_coeffs(
                (0..=deg)
                    .map(|_| Fq::from_code(rng.gen_range(1..9)))
                    .collect(),
            );
            let fac = uni_factor(&r, &f).unwrap();
            let prod = fac
                .factors
                .iter()
                .fold(r.constant(fac.unit), |acc, (g, m)| {
                    r.mul(&acc, &r.pow(g, *m as u64))
                });
            assert_eq!(prod, f);
            for (g, _) in &fac.factors {
                assert_eq!(distinct_degree(&r, g).unwrap().len(), 1);
            }
        }
    }
}
