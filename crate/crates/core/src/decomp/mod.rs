//! Functional decomposition `F = u(H)`.
//!
//! Two notions coexist. For `n >= 2` variables an inner polynomial of degree
//! one counts (so `u(L)` with `L` linear is decomposable); for one variable the
//! inner polynomial must have degree at least two. They live behind separate
//! functions, [`decompose_multi`] and [`decompose_uni`].

mod oracle;

pub use oracle::{exhaustive_decompositions, normalized_inners};

use crate::algebra::{
    Domain, El, Field, FiniteField, MPoly, MPolyRing, Monomial, PerfectField, PolyRing, Ring, UPoly,
};
use crate::error::{Error, Result};
use crate::guard;

/// A decomposition `outer(inner)`. When produced by this module it is
/// normalized: the inner polynomial is monic in graded-lex order and has
/// zero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition<E> {
    pub outer: UPoly<E>,
    pub inner: MPoly<E>,
}

fn outer_ring<F: Ring>(ring: &MPolyRing<F>) -> PolyRing<F> {
    PolyRing::new(ring.base().clone(), "t")
}

/// The composition `u(h)`.
pub fn compose<F: Ring>(ring: &MPolyRing<F>, u: &UPoly<El<F>>, h: &MPoly<El<F>>) -> MPoly<El<F>> {
    ring.compose_uni(u, h)
}

/// Rewrites `u(H)` with `H' = (H - H(0)) / lc(H)` and
/// `u'(t) = u(lc(H) t + H(0))`, so that `u'(H') = u(H)`.
pub fn normalize<F: Field>(
    ring: &MPolyRing<F>,
    u: &UPoly<El<F>>,
    h: &MPoly<El<F>>,
) -> Result<Decomposition<El<F>>> {
    if h.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if u.degree().unwrap_or(0) < 2 {
        return Err(Error::InvalidDegreeSplit(
            "outer degree must be at least 2".into(),
        ));
    }
    let base = ring.base();
    let lc = h.lc().expect("nonconstant").clone();
    let c0 = ring.constant_term(h);
    let inner = ring.scale(&ring.sub(h, &ring.constant(c0.clone())), &base.inv(&lc));
    let ur = outer_ring(ring);
    let outer = ur.compose(u, &ur.from_coeffs(vec![c0, lc]));
    Ok(Decomposition { outer, inner })
}

/// Recovers `u` with `f = u(h)` and `deg u = e` for a monic `h`, by
/// peeling off `u_i h^i` from the top: the coefficient of `f` at
/// `i * lm(h)` is `u_i` once the higher powers are removed.
pub(crate) fn outer_from_inner<F: Ring>(
    ring: &MPolyRing<F>,
    f: &MPoly<El<F>>,
    h: &MPoly<El<F>>,
    e: u32,
) -> Option<UPoly<El<F>>> {
    let lm = h.lm()?.clone();
    let mut powers = vec![ring.one()];
    for i in 1..=e as usize {
        powers.push(ring.mul(&powers[i - 1], h));
    }
    let mut rest = f.clone();
    let mut coeffs = vec![ring.base().zero(); e as usize + 1];
    for i in (0..=e as usize).rev() {
        let c = ring.coeff(&rest, &lm.scale(i as u32));
        if !ring.base().is_zero(&c) {
            rest = ring.sub(&rest, &ring.scale(&powers[i], &c));
            coeffs[i] = c;
        }
    }
    rest.is_zero().then(|| outer_ring(ring).from_coeffs(coeffs))
}

/// The monic `e`-th root of a monic polynomial, computed term by term from
/// the top after stripping `p`-th powers.
pub(crate) fn monic_root<F: PerfectField>(
    ring: &MPolyRing<F>,
    g: &MPoly<El<F>>,
    e: u32,
) -> Option<MPoly<El<F>>> {
    let p = ring.base().characteristic() as u32;
    let mut g = g.clone();
    let mut e = e;
    while p != 0 && e.is_multiple_of(p) {
        g = ring.pth_root(&g)?;
        e /= p;
    }
    if e == 1 {
        return Some(g);
    }
    let lm = g.lm()?;
    if lm.exps().iter().any(|x| x % e != 0) {
        return None;
    }
    let top = Monomial::new(&lm.exps().iter().map(|x| x / e).collect::<Vec<_>>());
    let top_pow = top.scale(e - 1);
    let inv_e = ring.base().inv(&ring.base().from_i64(e as i64));
    let mut root = ring.monomial(ring.base().one(), top.clone());
    let mut last = top;
    loop {
        let diff = ring.sub(&g, &ring.pow(&root, e as u64));
        let Some((m, c)) = diff.leading_term() else {
            return Some(root);
        };
        let next = m.div(&top_pow)?;
        if next >= last {
            return None;
        }
        root = ring.add(
            &root,
            &ring.monomial(ring.base().mul(c, &inv_e), next.clone()),
        );
        last = next;
    }
}

/// All monomials of total degree in `lo..=hi`, ascending.
fn monomials_between(n: usize, lo: u32, hi: u32) -> Vec<Monomial> {
    crate::irred::monomials_up_to(n, hi)
        .into_iter()
        .filter(|m| m.degree() >= lo)
        .collect()
}

/// Core search for a normalized `u(H)` with `deg u = e`, any inner degree.
fn decompose_with_outer_degree<F: PerfectField>(
    ring: &MPolyRing<F>,
    f: &MPoly<El<F>>,
    e: u32,
    prefer_indecomposable: bool,
) -> Result<Option<Decomposition<El<F>>>> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if e < 2 || d % e != 0 {
        return Err(Error::InvalidDegreeSplit(format!(
            "{e} does not divide the degree {d}"
        )));
    }
    let k = d / e;
    let base = ring.base();
    let lc = f.lc().expect("nonzero").clone();
    let fc = ring.scale(f, &base.inv(&lc));
    let top = ring.homogeneous_part(&fc, d);
    let Some(hk) = monic_root(ring, &top, e) else {
        return Ok(None);
    };
    let p = base.characteristic() as u32;
    if p == 0 || !e.is_multiple_of(p) {
        // tame: H_{k-j} = [f/c - R^e]_{d-j} / (e H_k^{e-1})
        let denom = ring.scale(&ring.pow(&hk, e as u64 - 1), &base.from_i64(e as i64));
        let mut h = hk.clone();
        for j in 1..k {
            let diff = ring.homogeneous_part(&ring.sub(&fc, &ring.pow(&h, e as u64)), d - j);
            let Some(part) = ring.div_exact(&diff, &denom) else {
                return Ok(None);
            };
            h = ring.add(&h, &part);
        }
        return Ok(outer_from_inner(ring, f, &h, e).map(|outer| Decomposition { outer, inner: h }));
    }
    // wild: enumerate the lower homogeneous parts of H
    let elems = base
        .elements()
        .ok_or_else(|| Error::Unsupported("wild decomposition over an infinite field".into()))?;
    let lower = monomials_between(ring.nvars(), 1, k - 1);
    let q = elems.len() as u128;
    let total = q.saturating_pow(lower.len() as u32);
    let limit = guard::limit();
    if total > limit {
        return Err(Error::GuardExceeded {
            candidates: total,
            guard: limit,
        });
    }
    let mut first = None;
    for code in 0..total {
        let mut rest = code;
        let mut terms = Vec::with_capacity(lower.len());
        for m in &lower {
            terms.push((m.clone(), elems[(rest % q) as usize].clone()));
            rest /= q;
        }
        let h = ring.add(&hk, &ring.from_terms(terms));
        if let Some(outer) = outer_from_inner(ring, f, &h, e) {
            let dec = Decomposition { outer, inner: h };
            if !prefer_indecomposable || is_indecomposable_multi(ring, &dec.inner)? {
                return Ok(Some(dec));
            }
            first.get_or_insert(dec);
        }
    }
    Ok(first)
}

fn require_multi<R: Ring>(ring: &MPolyRing<R>) -> Result<()> {
    if ring.nvars() < 2 {
        return Err(Error::VariableCount {
            expected: "at least 2".into(),
            found: ring.nvars(),
        });
    }
    Ok(())
}

/// A normalized decomposition `f = u(H)` with `deg u = e`, if one exists.
/// When several exist (possible only in characteristic dividing `e`), one
/// with indecomposable `H` is preferred.
pub fn decompose_multi<F: PerfectField>(
    ring: &MPolyRing<F>,
    f: &MPoly<El<F>>,
    e: u32,
) -> Result<Option<Decomposition<El<F>>>> {
    require_multi(ring)?;
    decompose_with_outer_degree(ring, f, e, true)
}

/// Whether `f` is not of the form `u(H)` with `deg u >= 2`.
pub fn is_indecomposable_multi<F: PerfectField>(
    ring: &MPolyRing<F>,
    f: &MPoly<El<F>>,
) -> Result<bool> {
    require_multi(ring)?;
    let d = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    for e in crate::algebra::primes::divisors(d as u64)
        .into_iter()
        .skip(1)
    {
        if decompose_with_outer_degree(ring, f, e as u32, false)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_uni<R: Ring>(ring: &MPolyRing<R>) -> Result<()> {
    if ring.nvars() != 1 {
        return Err(Error::VariableCount {
            expected: "1".into(),
            found: ring.nvars(),
        });
    }
    Ok(())
}

/// A normalized one-variable decomposition `f = u(v)` with `deg u = r` and
/// `deg v = deg f / r >= 2`.
pub fn decompose_uni<F: PerfectField>(
    ring: &MPolyRing<F>,
    f: &MPoly<El<F>>,
    r: u32,
) -> Result<Option<Decomposition<El<F>>>> {
    require_uni(ring)?;
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if r < 2 || d % r != 0 || d / r < 2 {
        return Err(Error::InvalidDegreeSplit(format!(
            "need r >= 2 and deg/r >= 2 with r | deg, got r = {r}, deg = {d}"
        )));
    }
    decompose_with_outer_degree(ring, f, r, false)
}

/// One-variable indecomposability: no `u(v)` with both degrees at least two.
pub fn is_indecomposable_uni<F: PerfectField>(
    ring: &MPolyRing<F>,
    f: &MPoly<El<F>>,
) -> Result<bool> {
    require_uni(ring)?;
    let d = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    for r in crate::algebra::primes::divisors(d as u64) {
        let r = r as u32;
        if r >= 2 && d / r >= 2 && decompose_uni(ring, f, r)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `G` with `G^p = f` when all exponents are divisible by the characteristic.
pub fn is_pth_power(
    ring: &MPolyRing<FiniteField>,
    f: &MPoly<El<FiniteField>>,
) -> Option<MPoly<El<FiniteField>>> {
    if f.is_zero() {
        return None;
    }
    ring.pth_root(f)
}

/// The Dickson polynomial `D_m(x, a)`: `D_0 = 2`, `D_1 = x`,
/// `D_{m+1} = x D_m - a D_{m-1}`.
pub fn dickson<R: Ring>(ring: &PolyRing<R>, m: u32, a: &El<R>) -> UPoly<El<R>> {
    let x = ring.gen();
    let ca = ring.constant(a.clone());
    let mut prev = ring.from_i64(2);
    if m == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..m {
        let next = ring.sub(&ring.mul(&x, &cur), &ring.mul(&ca, &prev));
        prev = cur;
        cur = next;
    }
    cur
}
