//! The discriminant chain of a polynomial `F in Z[x, y]` monic in `y`, and
//! the primes `p` for which it certifies that `F mod p` stays
//! indecomposable over the closure of `F_p`.
//!
//! The chain is `Delta(x, lambda) = disc_y(F - lambda)`, its square-free part
//! `Delta_red` made primitive over `Z[lambda]`, `Delta(lambda) = disc_x(Delta_red)`
//! and `Delta_0(lambda)`, the leading `x`-coefficient of `Delta(x, lambda)`.
//! The gcd is taken in `Q(lambda)[x]` before any reduction: reducing first can
//! change it, as `gcd(lambda, lambda + p)` shows.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::algebra::primes::primes_up_to;
use crate::algebra::{
    content_primitive, reduce_mod_p, Domain, FiniteField, Integers, MPoly, MPolyRing, Monomial,
    PolyRing, RatFn, RationalFunctions, Rationals, Ring, UPoly, ZLambdaX,
};
use crate::decomp::is_indecomposable_multi;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionChain {
    pub ring: MPolyRing<Integers>,
    pub f: MPoly<BigInt>,
    pub deg_y: u32,
    /// `disc_y(F - lambda)` in `Z[lambda][x]`.
    pub delta_xlambda: UPoly<UPoly<BigInt>>,
    /// Square-free primitive part of `delta_xlambda`.
    pub delta_red: UPoly<UPoly<BigInt>>,
    /// `disc_x(delta_red)`.
    pub delta_lambda: UPoly<BigInt>,
    /// Leading `x`-coefficient of `delta_xlambda`.
    pub delta0: UPoly<BigInt>,
}

fn zlx() -> ZLambdaX {
    PolyRing::new(PolyRing::new(Integers, "lambda"), "x")
}

/// Converts a polynomial in `(x, lambda)` of a three-variable ring to `Z[lambda][x]`.
fn to_zlx(r3: &MPolyRing<Integers>, f: &MPoly<BigInt>) -> UPoly<UPoly<BigInt>> {
    let outer = zlx();
    let lr = outer.base().clone();
    outer.from_coeffs(
        r3.coefficients_in(f, 0)
            .iter()
            .map(|c| r3.to_upoly(c, 1, &lr).expect("only lambda remains"))
            .collect(),
    )
}

/// Prints an element of `Z[lambda][x]` as a polynomial in `x, lambda` in
/// graded-lex order.
pub fn format_zlx(f: &UPoly<UPoly<BigInt>>) -> String {
    let r = MPolyRing::new(Integers, ["x", "lambda"]);
    let p = r.from_terms(f.coeffs().iter().enumerate().flat_map(|(i, c)| {
        c.coeffs()
            .iter()
            .enumerate()
            .map(move |(j, a)| (Monomial::new(&[i as u32, j as u32]), a.clone()))
    }));
    r.display(&p).to_string()
}

fn lcm_poly(
    qr: &PolyRing<Rationals>,
    a: &UPoly<BigRational>,
    b: &UPoly<BigRational>,
) -> UPoly<BigRational> {
    let g = qr.gcd(a, b).expect("nonzero");
    qr.monic(&qr.div_exact(&qr.mul(a, b), &g).expect("gcd divides"))
}

/// Clears denominators of an element of `Q(lambda)[x]`, landing in `Z[lambda][x]`
/// up to a nonzero factor in `Q(lambda)`.
fn clear_denominators(coeffs: &[RatFn<BigRational>]) -> UPoly<UPoly<BigInt>> {
    let qr = PolyRing::new(Rationals, "lambda");
    let common = coeffs
        .iter()
        .fold(qr.one(), |l, c| lcm_poly(&qr, &l, c.den()));
    let polys: Vec<UPoly<BigRational>> = coeffs
        .iter()
        .map(|c| {
            qr.mul(
                c.num(),
                &qr.div_exact(&common, c.den()).expect("lcm divisible"),
            )
        })
        .collect();
    let den = polys
        .iter()
        .flat_map(|p| p.coeffs().iter())
        .fold(BigInt::one(), |l, a| l.lcm(a.denom()));
    let outer = zlx();
    let lr = outer.base().clone();
    outer.from_coeffs(
        polys
            .iter()
            .map(|p| {
                lr.from_coeffs(
                    p.coeffs()
                        .iter()
                        .map(|a| (a * BigRational::from_integer(den.clone())).to_integer())
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Builds the chain. Fails if `F` is not monic in `y`, if the chain
/// degenerates, or if `F` is seen to be decomposable: over `Q`, or modulo the
/// first good prime below 50. Indecomposability over the closure of `Q` is
/// otherwise the caller's responsibility.
pub fn build_chain(ring: &MPolyRing<Integers>, f: &MPoly<BigInt>) -> Result<CriterionChain> {
    if ring.nvars() != 2 {
        return Err(Error::VariableCount {
            expected: "2".into(),
            found: ring.nvars(),
        });
    }
    let deg_y = f.degree_in(1).unwrap_or(0);
    if deg_y == 0 {
        return Err(Error::NotMonicInY);
    }
    let lead_y = &ring.coefficients_in(f, 1)[deg_y as usize];
    if *lead_y != ring.one() {
        return Err(Error::NotMonicInY);
    }
    let qring = ring.with_base(Rationals);
    let fq = ring.map_into(f, &qring, |c| BigRational::from_integer(c.clone()));
    if f.degree().unwrap_or(0) > 1 && !is_indecomposable_multi(&qring, &fq)? {
        return Err(Error::Decomposable);
    }

    // F - lambda in Z[x, lambda, y]
    let r3 = MPolyRing::new(Integers, ["x", "lambda", "y"]);
    let lifted = r3.from_terms(
        f.terms()
            .map(|(m, c)| (Monomial::new(&[m.exps()[0], 0, m.exps()[1]]), c.clone())),
    );
    let shifted = r3.sub(&lifted, &r3.gen(1));
    let disc = r3.discriminant(&shifted, 2)?;
    let delta_xlambda = to_zlx(&r3, &disc);
    if delta_xlambda.is_zero() {
        return Err(Error::DegenerateChain("disc_y(F - lambda) vanishes".into()));
    }
    let outer = zlx();
    let delta0 = delta_xlambda.lc().expect("nonzero").clone();

    // square-free part over Q(lambda)
    let k = RationalFunctions::new(Rationals, "lambda");
    let kx = PolyRing::new(k.clone(), "x");
    let to_k = |g: &UPoly<UPoly<BigInt>>| {
        let qr = k.poly_ring().clone();
        kx.from_coeffs(
            g.coeffs()
                .iter()
                .map(|c| {
                    k.from_poly(
                        qr.from_coeffs(
                            c.coeffs()
                                .iter()
                                .map(|a| BigRational::from_integer(a.clone()))
                                .collect(),
                        ),
                    )
                })
                .collect(),
        )
    };
    let dk = to_k(&delta_xlambda);
    let g = kx.gcd(&dk, &kx.derivative(&dk))?;
    let sqfree = kx.div_exact(&dk, &g).expect("gcd divides");
    let cleared = clear_denominators(sqfree.coeffs());
    let (_, delta_red) = content_primitive(&outer, &cleared)?;

    let delta_lambda = match outer.discriminant(&delta_red) {
        Ok(d) => d,
        Err(Error::ConstantPolynomial) => {
            return Err(Error::DegenerateChain("square-free part has no x".into()));
        }
        Err(e) => return Err(e),
    };
    if delta_lambda.is_zero() {
        return Err(Error::DegenerateChain("Delta(lambda) vanishes".into()));
    }
    let chain = CriterionChain {
        ring: ring.clone(),
        f: f.clone(),
        deg_y,
        delta_xlambda,
        delta_red,
        delta_lambda,
        delta0,
    };
    // if F were indecomposable over the closure of Q, the criterion would make
    // F mod p indecomposable at every good prime; test the first one
    if let Some(p) = good_primes(&chain, SPOT_CHECK_BOUND).first() {
        let target = MPolyRing::new(FiniteField::new(*p, 1)?, ["x", "y"]);
        let fp = reduce_mod_p(ring, f, &target).expect("integer coefficients reduce");
        if fp.degree().unwrap_or(0) > 1 && !is_indecomposable_multi(&target, &fp)? {
            return Err(Error::Decomposable);
        }
    }
    Ok(chain)
}

/// Primes searched for the reduction spot check in [`build_chain`].
const SPOT_CHECK_BOUND: u64 = 50;

impl CriterionChain {
    /// `Delta_0(lambda) * Delta(lambda)`.
    pub fn product(&self) -> UPoly<BigInt> {
        PolyRing::new(Integers, "lambda").mul(&self.delta0, &self.delta_lambda)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let lr = PolyRing::new(Integers, "lambda");
        json!({
            "f": self.ring.display(&self.f).to_string(),
            "deg_y": self.deg_y,
            "delta_xlambda": format_zlx(&self.delta_xlambda),
            "delta_red": format_zlx(&self.delta_red),
            "delta_lambda": lr.display(&self.delta_lambda).to_string(),
            "delta0": lr.display(&self.delta0).to_string(),
        })
    }
}

impl fmt::Display for CriterionChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lr = PolyRing::new(Integers, "lambda");
        writeln!(f, "F               {}", self.ring.display(&self.f))?;
        writeln!(f, "Delta(x,lambda) {}", format_zlx(&self.delta_xlambda))?;
        writeln!(f, "Delta_red       {}", format_zlx(&self.delta_red))?;
        writeln!(f, "Delta(lambda)   {}", lr.display(&self.delta_lambda))?;
        write!(f, "Delta_0         {}", lr.display(&self.delta0))
    }
}

/// `p > deg_y F` and `Delta_0 * Delta(lambda)` does not vanish modulo `p`.
pub fn criterion_holds(chain: &CriterionChain, p: u64) -> bool {
    let pb = BigInt::from(p);
    p > chain.deg_y as u64
        && chain
            .product()
            .coeffs()
            .iter()
            .any(|c| !(c % &pb).is_zero())
}

/// Primes up to `bound`, ascending, for which the criterion holds.
pub fn good_primes(chain: &CriterionChain, bound: u64) -> Vec<u64> {
    primes_up_to(bound)
        .into_iter()
        .filter(|&p| criterion_holds(chain, p))
        .collect()
}
