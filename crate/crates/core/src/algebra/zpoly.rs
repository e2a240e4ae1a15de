//! Helpers for `Z[lambda][x]` and for reduction modulo a prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::finite_field::{FiniteField, Fq};
use super::integers::{rational_mod_p, Integers, Rationals};
use super::mpoly::{MPoly, MPolyRing};
use super::ring::{Domain, Ring};
use super::upoly::{PolyRing, UPoly};
use crate::error::{Error, Result};

/// Polynomials in `x` with coefficients in `Z[lambda]`.
pub type ZLambdaX = PolyRing<PolyRing<Integers>>;

/// Non-negative gcd of the coefficients.
pub(crate) fn integer_content(f: &UPoly<BigInt>) -> BigInt {
    f.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Integer polynomial proportional to `f` with coprime coefficients and a
/// positive leading coefficient.
pub(crate) fn primitive_integral(f: &UPoly<BigRational>) -> UPoly<BigInt> {
    let zr = PolyRing::new(Integers, "");
    let den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let g = zr.from_coeffs(ints);
    let mut c = integer_content(&g);
    if c.is_zero() {
        return g;
    }
    if g.lc().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    zr.from_coeffs(g.coeffs().iter().map(|a| a / &c).collect())
}

/// Gcd in `Z[lambda]`, normalized to a positive leading coefficient.
pub(crate) fn zl_gcd(a: &UPoly<BigInt>, b: &UPoly<BigInt>) -> UPoly<BigInt> {
    let qr = PolyRing::new(Rationals, "");
    let zr = PolyRing::new(Integers, "");
    if a.is_zero() && b.is_zero() {
        return zr.zero();
    }
    let to_q = |f: &UPoly<BigInt>| zr.map_into(f, &qr, |c| BigRational::from_integer(c.clone()));
    let g = qr.gcd(&to_q(a), &to_q(b)).expect("not both zero");
    let cont = integer_content(a).gcd(&integer_content(b));
    zr.scale(&primitive_integral(&g), &cont)
}

/// Splits `f` into its content in `Z[lambda]` and its primitive part. The sign
/// is fixed so that the leading integer coefficient of the leading
/// coefficient of the primitive part is positive.
pub fn content_primitive(
    ring: &ZLambdaX,
    f: &UPoly<UPoly<BigInt>>,
) -> Result<(UPoly<BigInt>, UPoly<UPoly<BigInt>>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lr = ring.base();
    let mut content = f.coeffs().iter().fold(lr.zero(), |g, c| zl_gcd(&g, c));
    let lead_sign_negative = f.lc().and_then(|c| c.lc()).is_some_and(|c| c.is_negative());
    if lead_sign_negative {
        content = lr.neg(&content);
    }
    let prim = ring.from_coeffs(
        f.coeffs()
            .iter()
            .map(|c| lr.div_exact(c, &content).expect("content divides"))
            .collect(),
    );
    Ok((content, prim))
}

/// Coefficient rings that reduce modulo a prime.
pub trait ReduceModP: Ring {
    /// Residue in `0..p`, `None` when the element has `p` in its denominator.
    fn residue(&self, a: &Self::Element, p: u64) -> Option<u64>;
}

impl ReduceModP for Integers {
    fn residue(&self, a: &BigInt, p: u64) -> Option<u64> {
        u64::try_from(a.mod_floor(&BigInt::from(p))).ok()
    }
}

impl ReduceModP for Rationals {
    fn residue(&self, a: &BigRational, p: u64) -> Option<u64> {
        rational_mod_p(a, p)
    }
}

/// Image of `f` under the reduction map into `F_q[x_1..x_n]`, `q` a power of
/// `p`. `None` if some coefficient is not `p`-integral.
pub fn reduce_mod_p<R: ReduceModP>(
    src: &MPolyRing<R>,
    f: &MPoly<R::Element>,
    target: &MPolyRing<FiniteField>,
) -> Option<MPoly<Fq>> {
    let p = target.base().p();
    let terms = f
        .terms()
        .map(|(m, c)| Some((m.clone(), Fq::from_code(src.base().residue(c, p)? as u32))))
        .collect::<Option<Vec<_>>>()?;
    Some(target.from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zl(c: &[i64]) -> UPoly<BigInt> {
        PolyRing::new(Integers, "lambda").from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn ring() -> ZLambdaX {
        PolyRing::new(PolyRing::new(Integers, "lambda"), "x")
    }

    #[test]
    fn integer_content_split() {
        // -4(x^3 - lambda) -> -4, x^3 - lambda
        let r = ring();
        let f = r.from_coeffs(vec![zl(&[0, 4]), zl(&[]), zl(&[]), zl(&[-4])]);
        let (c, p) = content_primitive(&r, &f).unwrap();
        assert_eq!(c, zl(&[-4]));
        assert_eq!(
            p,
            r.from_coeffs(vec![zl(&[0, -1]), zl(&[]), zl(&[]), zl(&[1])])
        );
    }

    #[test]
    fn polynomial_content_split() {
        // 2 lambda x + 4 lambda -> 2 lambda, x + 2
        let r = ring();
        let f = r.from_coeffs(vec![zl(&[0, 4]), zl(&[0, 2])]);
        let (c, p) = content_primitive(&r, &f).unwrap();
        assert_eq!(c, zl(&[0, 2]));
        assert_eq!(p, r.from_coeffs(vec![zl(&[2]), zl(&[1])]));
        let monic = r.from_coeffs(vec![zl(&[0, -1]), zl(&[1])]);
        assert_eq!(content_primitive(&r, &monic).unwrap().0, zl(&[1]));
        assert!(content_primitive(&r, &r.zero()).is_err());
    }

    #[test]
    fn reduction_is_a_ring_morphism() {
        let zr = MPolyRing::new(Integers, ["x", "y"]);
        let f7 = FiniteField::new(7, 1).unwrap();
        let fr = zr.with_base(f7);
        let x = zr.gen(0);
        let y = zr.gen(1);
        let f = zr.add(
            &zr.scale(&zr.mul(&x, &y), &BigInt::from(10)),
            &zr.from_i64(-3),
        );
        let g = zr.sub(&zr.pow(&y, 2), &zr.scale(&x, &BigInt::from(15)));
        let lhs = reduce_mod_p(&zr, &zr.mul(&f, &g), &fr).unwrap();
        let rhs = fr.mul(
            &reduce_mod_p(&zr, &f, &fr).unwrap(),
            &reduce_mod_p(&zr, &g, &fr).unwrap(),
        );
        assert_eq!(lhs, rhs);
    }
}
