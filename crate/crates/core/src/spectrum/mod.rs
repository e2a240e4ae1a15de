//! Spectral values of bivariate polynomials: the `lambda` for which
//! `F - lambda` is reducible over the algebraic closure.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use crate::algebra::{
    rational_mod_p, reduce_mod_p, Field, FiniteField, Fq, Integers, MPoly, MPolyRing, Monomial,
    PerfectField, PolyRing, Rationals, Ring, UPoly,
};
use crate::decomp::is_indecomposable_multi;
use crate::error::{Error, Result};
use crate::irred::{absolutely_irreducible, extend_scalars, n_bar_factors};
use crate::parallel::{map_collect, Execution};

/// One Frobenius orbit of spectral values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralOrbit {
    /// Degree of the orbit over the base field, its size.
    pub degree: u32,
    /// Smallest element of the orbit, living in `F_{q^degree}`.
    pub representative: Fq,
    /// Minimal polynomial over the base field, in the variable `lambda`.
    pub min_poly: UPoly<Fq>,
    /// `n(lambda) - 1`, shared by the whole orbit.
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralReport {
    pub field: FiniteField,
    /// Total degree of the input polynomial.
    pub degree: u32,
    pub orbits: Vec<SpectralOrbit>,
    /// Sum of `n(lambda) - 1` over all spectral values.
    pub rho: u64,
    /// `prod (lambda - lambda_i)` over all spectral values, over the base field.
    pub s_poly: UPoly<Fq>,
}

impl SpectralReport {
    /// Number of spectral values in the algebraic closure.
    pub fn count(&self) -> u64 {
        self.orbits.iter().map(|o| o.degree as u64).sum()
    }

    pub fn lambda_ring(&self) -> PolyRing<FiniteField> {
        PolyRing::new(self.field.clone(), "lambda")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let lr = self.lambda_ring();
        let orbits: Vec<_> = self
            .orbits
            .iter()
            .map(|o| {
                let ext = self
                    .field
                    .extension(o.degree)
                    .expect("constructed during the sweep");
                json!({
                    "degree": o.degree,
                    "min_poly": lr.display(&o.min_poly).to_string(),
                    "representative": ext.display(&o.representative).to_string(),
                    "multiplicity": o.multiplicity,
                })
            })
            .collect();
        json!({
            "field": field_name(&self.field),
            "degree": self.degree,
            "orbits": orbits,
            "count": self.count(),
            "rho": self.rho,
            "s_poly": lr.display(&self.s_poly).to_string(),
        })
    }
}

pub(crate) fn field_name(f: &FiniteField) -> String {
    if f.k() == 1 {
        f.p().to_string()
    } else {
        format!("{}^{}", f.p(), f.k())
    }
}

/// Elements of `F_{q^m}` of exact degree `m` over `F_q`, one per Frobenius
/// orbit (the smallest code), with the orbit.
fn orbit_representatives(big: &FiniteField, q: u64, m: u32) -> Vec<(Fq, Vec<Fq>)> {
    let mut out = Vec::new();
    for a in big.elements().expect("finite") {
        let mut orbit = vec![a];
        let mut b = big.pow(&a, q);
        while b != a {
            orbit.push(b);
            b = big.pow(&b, q);
        }
        if orbit.len() == m as usize && orbit.iter().all(|&c| c >= a) {
            out.push((a, orbit));
        }
    }
    out
}

/// Computes the spectrum of an indecomposable `F` in two variables. Every
/// orbit of spectral values has size at most `deg F - 1`, so sweeping
/// `F_{q^m}` for `m < deg F` finds them all.
pub fn spectral_values(ring: &MPolyRing<FiniteField>, f: &MPoly<Fq>) -> Result<SpectralReport> {
    spectral_values_with(ring, f, Execution::default())
}

pub fn spectral_values_with(
    ring: &MPolyRing<FiniteField>,
    f: &MPoly<Fq>,
    exec: Execution,
) -> Result<SpectralReport> {
    if ring.nvars() != 2 {
        return Err(Error::VariableCount {
            expected: "2".into(),
            found: ring.nvars(),
        });
    }
    if !is_indecomposable_multi(ring, f)? {
        return Err(Error::Decomposable);
    }
    let base = ring.base().clone();
    let d = f.degree().expect("nonconstant");
    let q = base.size();
    let lr = PolyRing::new(base.clone(), "lambda");
    let mut orbits = Vec::new();
    for m in 1..=d.saturating_sub(1).max(1) {
        let (big_ring, fl) = extend_scalars(ring, f, m)?;
        let big = big_ring.base().clone();
        let emb = base.embedding_into(&big)?;
        let reps = orbit_representatives(&big, q, m);
        let results = map_collect(&reps, exec, |(lam, _)| -> Result<Option<usize>> {
            let g = big_ring.sub(&fl, &big_ring.constant(*lam));
            if absolutely_irreducible(&big_ring, &g)? {
                Ok(None)
            } else {
                Ok(Some(n_bar_factors(&big_ring, &g)? - 1))
            }
        });
        let br = PolyRing::new(big.clone(), "lambda");
        for ((lam, orbit), res) in reps.iter().zip(results) {
            let Some(multiplicity) = res? else { continue };
            let min_big = orbit.iter().fold(br.one(), |acc, c| {
                br.mul(&acc, &br.from_coeffs(vec![big.neg(c), big.one()]))
            });
            let coeffs = min_big
                .coeffs()
                .iter()
                .map(|c| emb.preimage(*c))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| {
                    Error::Internal("minimal polynomial not defined over the base field".into())
                })?;
            orbits.push(SpectralOrbit {
                degree: m,
                representative: *lam,
                min_poly: lr.from_coeffs(coeffs),
                multiplicity,
            });
        }
    }
    let rho = orbits
        .iter()
        .map(|o| o.degree as u64 * o.multiplicity as u64)
        .sum();
    let s_poly = orbits
        .iter()
        .fold(lr.one(), |acc, o| lr.mul(&acc, &o.min_poly));
    Ok(SpectralReport {
        field: base,
        degree: d,
        orbits,
        rho,
        s_poly,
    })
}

/// Stein's inequality: `rho <= deg F - 1`, and at most `deg F - 1` spectral values.
pub fn stein_check(report: &SpectralReport) -> bool {
    let bound = report.degree.saturating_sub(1) as u64;
    report.rho <= bound && report.count() <= bound
}

/// The unique spectral value of a degree-two polynomial
/// `sum a_ij x^i y^j`:
/// `a00 - (a02 a10^2 + a20 a01^2 - a01 a10 a11) / (4 a02 a20 - a11^2)`.
pub fn quadratic_spectral_value<F: Field>(
    ring: &MPolyRing<F>,
    f: &MPoly<F::Element>,
) -> Result<F::Element> {
    if ring.nvars() != 2 {
        return Err(Error::VariableCount {
            expected: "2".into(),
            found: ring.nvars(),
        });
    }
    if f.degree() != Some(2) {
        return Err(Error::InvalidDegreeSplit(
            "expected a polynomial of degree 2".into(),
        ));
    }
    let k = ring.base();
    if k.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(2));
    }
    let a = |i: u32, j: u32| ring.coeff(f, &Monomial::new(&[i, j]));
    let (a00, a10, a01, a20, a11, a02) = (a(0, 0), a(1, 0), a(0, 1), a(2, 0), a(1, 1), a(0, 2));
    let den = k.sub(
        &k.mul(&k.from_i64(4), &k.mul(&a02, &a20)),
        &k.mul(&a11, &a11),
    );
    if k.is_zero(&den) {
        return Err(Error::DegenerateQuadratic);
    }
    let num = k.sub(
        &k.add(
            &k.mul(&a02, &k.mul(&a10, &a10)),
            &k.mul(&a20, &k.mul(&a01, &a01)),
        ),
        &k.mul(&a01, &k.mul(&a10, &a11)),
    );
    Ok(k.sub(&a00, &k.div(&num, &den)))
}

/// Whether the conic `f = lambda` degenerates over the closure of `Q`, via
/// the determinant of its symmetric 3x3 matrix.
fn conic_degenerate(
    ring: &MPolyRing<Rationals>,
    f: &MPoly<BigRational>,
    lambda: &BigRational,
) -> bool {
    let a = |i: u32, j: u32| ring.coeff(f, &Monomial::new(&[i, j]));
    let half = BigRational::new(1.into(), 2.into());
    let m = vec![
        vec![a(2, 0), &a(1, 1) * &half, &a(1, 0) * &half],
        vec![&a(1, 1) * &half, a(0, 2), &a(0, 1) * &half],
        vec![&a(1, 0) * &half, &a(0, 1) * &half, a(0, 0) - lambda],
    ];
    Rationals.is_zero(&crate::algebra::determinant(&Rationals, m))
}

/// Checks that the spectral value of an integer quadratic reduces modulo
/// `p` to the spectral value of the reduction, and that both are spectral.
pub fn reduction_compatibility(
    ring: &MPolyRing<Integers>,
    f: &MPoly<BigInt>,
    p: u64,
) -> Result<bool> {
    if p == 2 || !crate::algebra::primes::is_prime(p) {
        return Err(Error::BadPrime(p));
    }
    let qr = ring.with_base(Rationals);
    let fq = ring.map_into(f, &qr, |c| BigRational::from_integer(c.clone()));
    let lam_q = quadratic_spectral_value(&qr, &fq)?;
    let fp_ring = ring.with_base(FiniteField::new(p, 1)?);
    let fp = reduce_mod_p(ring, f, &fp_ring).ok_or(Error::BadPrime(p))?;
    if fp.degree() != Some(2) {
        return Err(Error::BadPrime(p));
    }
    let lam_p = match quadratic_spectral_value(&fp_ring, &fp) {
        Err(Error::DegenerateQuadratic) => return Err(Error::BadPrime(p)),
        other => other?,
    };
    let Some(reduced) = rational_mod_p(&lam_q, p) else {
        return Ok(false);
    };
    let spectral_p =
        !absolutely_irreducible(&fp_ring, &fp_ring.sub(&fp, &fp_ring.constant(lam_p)))?;
    let spectral_q = conic_degenerate(&qr, &fq, &lam_q);
    Ok(reduced == lam_p.code() as u64 && spectral_p && spectral_q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64) -> MPolyRing<FiniteField> {
        MPolyRing::new(FiniteField::new(p, 1).unwrap(), ["x", "y"])
    }

    fn poly(r: &MPolyRing<FiniteField>, terms: &[(i64, u32, u32)]) -> MPoly<Fq> {
        r.from_terms(
            terms
                .iter()
                .map(|&(c, a, b)| (Monomial::new(&[a, b]), r.base().from_i64(c))),
        )
    }

    fn zpoly(terms: &[(i64, u32, u32)]) -> (MPolyRing<Integers>, MPoly<BigInt>) {
        let r = MPolyRing::new(Integers, ["x", "y"]);
        let f = r.from_terms(
            terms
                .iter()
                .map(|&(c, a, b)| (Monomial::new(&[a, b]), BigInt::from(c))),
        );
        (r, f)
    }

    #[test]
    fn xy_over_f3() {
        let r = ring(3);
        let rep = spectral_values(&r, &poly(&r, &[(1, 1, 1)])).unwrap();
        assert_eq!(rep.orbits.len(), 1);
        assert_eq!(rep.orbits[0].representative, Fq::from_code(0));
        assert_eq!(rep.orbits[0].multiplicity, 1);
        assert_eq!(rep.rho, 1);
        assert!(stein_check(&rep));
        assert_eq!(rep.lambda_ring().display(&rep.s_poly).to_string(), "lambda");
    }

    #[test]
    fn cusp_over_f5_has_empty_spectrum() {
        let r = ring(5);
        let rep = spectral_values(&r, &poly(&r, &[(1, 0, 2), (1, 3, 0)])).unwrap();
        assert!(rep.orbits.is_empty());
        assert_eq!(rep.rho, 0);
        assert!(stein_check(&rep));
    }

    #[test]
    fn decomposable_input_is_rejected() {
        let r = ring(3);
        let f = poly(&r, &[(1, 2, 0), (2, 1, 1), (1, 0, 2)]);
        assert_eq!(spectral_values(&r, &f), Err(Error::Decomposable));
    }

    #[test]
    fn quadratic_values() {
        let r = ring(5);
        assert_eq!(
            quadratic_spectral_value(&r, &poly(&r, &[(1, 2, 0), (1, 0, 2)])).unwrap(),
            Fq::from_code(0)
        );
        let f = poly(&r, &[(1, 2, 0), (1, 0, 2), (1, 0, 0)]);
        assert_eq!(quadratic_spectral_value(&r, &f).unwrap(), Fq::from_code(1));
        let q = MPolyRing::new(Rationals, ["x", "y"]);
        let f = q.from_terms([
            (Monomial::new(&[2, 0]), Rationals.one()),
            (Monomial::new(&[1, 1]), Rationals.one()),
        ]);
        assert_eq!(quadratic_spectral_value(&q, &f).unwrap(), Rationals.zero());
        let r2 = ring(2);
        assert!(quadratic_spectral_value(&r2, &poly(&r2, &[(1, 1, 1)])).is_err());
        let g = poly(&r, &[(1, 2, 0), (2, 1, 1), (1, 0, 2), (1, 1, 0)]);
        assert_eq!(
            quadratic_spectral_value(&r, &g),
            Err(Error::DegenerateQuadratic)
        );
    }

    #[test]
    fn reduction_examples() {
        let (r, f) = zpoly(&[(1, 2, 0), (1, 0, 2), (3, 0, 0)]);
        assert!(reduction_compatibility(&r, &f, 7).unwrap());
        let (r, f) = zpoly(&[(1, 2, 0), (1, 0, 2)]);
        assert!(reduction_compatibility(&r, &f, 5).unwrap());
        // 4 a02 a20 - a11^2 = 4*3*1 - 0 = 12 vanishes mod 3
        let (r, f) = zpoly(&[(1, 2, 0), (3, 0, 2), (1, 0, 1)]);
        assert_eq!(reduction_compatibility(&r, &f, 3), Err(Error::BadPrime(3)));
    }
}
