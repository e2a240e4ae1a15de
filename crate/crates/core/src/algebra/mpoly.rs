//! Sparse multivariate polynomials in graded-lex order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::ring::{Domain, El, PerfectField, Ring};
use super::upoly::{fmt_terms, PolyRing, UPoly};
use crate::error::{Error, Result};

/// An exponent vector. Ordered by total degree first, then lexicographically
/// with `x1 > x2 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    /// The monomial `x_i^e` in `nvars` variables.
    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = e;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<SmallVec<_>>>()
            .map(Monomial)
    }

    pub fn scale(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    fn fmt_with(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| {
                if *e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly<E> {
    terms: BTreeMap<Monomial, E>,
}

impl<E> MPoly<E> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &E)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &E)> {
        self.terms.iter().next_back()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn lc(&self) -> Option<&E> {
        self.terms.values().next_back()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }
}

/// The polynomial ring `R[x_1, ..., x_n]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MPolyRing<R> {
    base: R,
    vars: Vec<String>,
}

impl<R: Ring> MPolyRing<R> {
    pub fn new<S: Into<String>>(base: R, vars: impl IntoIterator<Item = S>) -> Self {
        MPolyRing {
            base,
            vars: vars.into_iter().map(Into::into).collect(),
        }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    /// Same variables over another coefficient ring.
    pub fn with_base<S: Ring>(&self, base: S) -> MPolyRing<S> {
        MPolyRing {
            base,
            vars: self.vars.clone(),
        }
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, El<R>)>) -> MPoly<El<R>> {
        let mut map: BTreeMap<Monomial, El<R>> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), self.nvars());
            match map.get_mut(&m) {
                Some(old) => *old = self.base.add(old, &c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        map.retain(|_, c| !self.base.is_zero(c));
        MPoly { terms: map }
    }

    pub fn monomial(&self, c: El<R>, m: Monomial) -> MPoly<El<R>> {
        self.from_terms([(m, c)])
    }

    pub fn constant(&self, c: El<R>) -> MPoly<El<R>> {
        self.monomial(c, Monomial::one(self.nvars()))
    }

    /// The variable `x_i`.
    pub fn gen(&self, i: usize) -> MPoly<El<R>> {
        self.monomial(self.base.one(), Monomial::var(self.nvars(), i, 1))
    }

    pub fn coeff(&self, f: &MPoly<El<R>>, m: &Monomial) -> El<R> {
        f.terms.get(m).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn constant_term(&self, f: &MPoly<El<R>>) -> El<R> {
        self.coeff(f, &Monomial::one(self.nvars()))
    }

    pub fn scale(&self, f: &MPoly<El<R>>, c: &El<R>) -> MPoly<El<R>> {
        self.from_terms(
            f.terms
                .iter()
                .map(|(m, a)| (m.clone(), self.base.mul(a, c))),
        )
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, f: &MPoly<El<R>>, by: &Monomial) -> MPoly<El<R>> {
        MPoly {
            terms: f
                .terms
                .iter()
                .map(|(m, a)| (m.mul(by), a.clone()))
                .collect(),
        }
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, f: &MPoly<El<R>>, d: u32) -> MPoly<El<R>> {
        MPoly {
            terms: f
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of the terms of maximal total degree.
    pub fn leading_form(&self, f: &MPoly<El<R>>) -> Result<MPoly<El<R>>> {
        let d = f.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_part(f, d))
    }

    pub fn eval(&self, f: &MPoly<El<R>>, point: &[El<R>]) -> El<R> {
        let b = &self.base;
        f.terms.iter().fold(b.zero(), |acc, (m, c)| {
            let v =
                m.0.iter()
                    .zip(point)
                    .fold(c.clone(), |t, (&e, x)| b.mul(&t, &b.pow(x, e as u64)));
            b.add(&acc, &v)
        })
    }

    /// Replaces every variable `x_i` by `images[i]`.
    pub fn substitute(&self, f: &MPoly<El<R>>, images: &[MPoly<El<R>>]) -> MPoly<El<R>> {
        let mut cache: Vec<Vec<MPoly<El<R>>>> =
            images.iter().map(|g| vec![self.one(), g.clone()]).collect();
        let mut acc = self.zero();
        for (m, c) in &f.terms {
            let mut t = self.constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                while cache[i].len() <= e as usize {
                    let next = self.mul(cache[i].last().expect("nonempty"), &images[i]);
                    cache[i].push(next);
                }
                t = self.mul(&t, &cache[i][e as usize]);
            }
            acc = self.add(&acc, &t);
        }
        acc
    }

    /// The composition `u(h)`.
    pub fn compose_uni(&self, u: &UPoly<El<R>>, h: &MPoly<El<R>>) -> MPoly<El<R>> {
        u.coeffs().iter().rev().fold(self.zero(), |acc, c| {
            self.add(&self.mul(&acc, h), &self.constant(c.clone()))
        })
    }

    pub fn derivative(&self, f: &MPoly<El<R>>, var: usize) -> MPoly<El<R>> {
        self.from_terms(f.terms.iter().filter(|(m, _)| m.0[var] > 0).map(|(m, c)| {
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            (m2, self.base.mul(c, &self.base.from_i64(m.0[var] as i64)))
        }))
    }

    /// Coefficients of `f` as a polynomial in `x_var`, lowest power first.
    /// The coefficients no longer involve `x_var`.
    pub fn coefficients_in(&self, f: &MPoly<El<R>>, var: usize) -> Vec<MPoly<El<R>>> {
        let n = f.degree_in(var).map_or(0, |d| d as usize + 1);
        let mut out = vec![BTreeMap::new(); n];
        for (m, c) in &f.terms {
            let mut m2 = m.clone();
            let e = std::mem::take(&mut m2.0[var]);
            out[e as usize].insert(m2, c.clone());
        }
        out.into_iter().map(|terms| MPoly { terms }).collect()
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(&self, coeffs: &[MPoly<El<R>>], var: usize) -> MPoly<El<R>> {
        let mut terms = BTreeMap::new();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut m2 = m.clone();
                m2.0[var] += e as u32;
                terms.insert(m2, a.clone());
            }
        }
        MPoly { terms }
    }

    /// Applies a coefficient map into a ring with the same variables.
    pub fn map_into<S: Ring>(
        &self,
        f: &MPoly<El<R>>,
        target: &MPolyRing<S>,
        map: impl Fn(&El<R>) -> El<S>,
    ) -> MPoly<El<S>> {
        target.from_terms(f.terms.iter().map(|(m, c)| (m.clone(), map(c))))
    }

    /// Converts a polynomial in a single variable to a dense one.
    pub fn to_upoly(
        &self,
        f: &MPoly<El<R>>,
        var: usize,
        ring: &PolyRing<R>,
    ) -> Result<UPoly<El<R>>> {
        let mut coeffs = vec![self.base.zero(); f.degree_in(var).map_or(0, |d| d as usize + 1)];
        for (m, c) in &f.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return Err(Error::VariableCount {
                    expected: "1".into(),
                    found: m.0.iter().filter(|&&e| e > 0).count(),
                });
            }
            coeffs[m.0[var] as usize] = c.clone();
        }
        Ok(ring.from_coeffs(coeffs))
    }

    /// Embeds a dense polynomial as a polynomial in `x_var`.
    pub fn from_upoly(&self, f: &UPoly<El<R>>, var: usize) -> MPoly<El<R>> {
        self.from_terms(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::var(self.nvars(), var, e as u32), c.clone())),
        )
    }
}

impl<R: Ring> Ring for MPolyRing<R> {
    type Element = MPoly<El<R>>;

    fn zero(&self) -> Self::Element {
        MPoly {
            terms: BTreeMap::new(),
        }
    }
    fn one(&self) -> Self::Element {
        self.constant(self.base.one())
    }
    fn is_zero(&self, a: &Self::Element) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let mut terms = a.terms.clone();
        for (m, c) in &b.terms {
            match terms.get_mut(m) {
                Some(old) => {
                    let s = self.base.add(old, c);
                    if self.base.is_zero(&s) {
                        terms.remove(m);
                    } else {
                        *old = s;
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        MPoly { terms }
    }
    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Element) -> Self::Element {
        MPoly {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.base.neg(c)))
                .collect(),
        }
    }
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let mut terms: BTreeMap<Monomial, El<R>> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = ma.mul(mb);
                let c = self.base.mul(ca, cb);
                match terms.get_mut(&m) {
                    Some(old) => *old = self.base.add(old, &c),
                    None => {
                        terms.insert(m, c);
                    }
                }
            }
        }
        terms.retain(|_, c| !self.base.is_zero(c));
        MPoly { terms }
    }
    fn from_i64(&self, n: i64) -> Self::Element {
        self.constant(self.base.from_i64(n))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn fmt_element(&self, a: &Self::Element, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = a
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (c, m.fmt_with(&self.vars)));
        fmt_terms(&self.base, terms, f)
    }
    fn is_atomic(&self, a: &Self::Element) -> bool {
        match a.terms.iter().next() {
            None => true,
            Some((m, c)) if a.terms.len() == 1 => {
                if m.degree() == 0 {
                    self.base.is_atomic(c)
                } else {
                    self.base.is_one(c)
                }
            }
            Some(_) => false,
        }
    }
    fn is_negative(&self, a: &Self::Element) -> bool {
        a.lc().is_some_and(|c| self.base.is_negative(c))
    }
}

impl<R: Domain> Domain for MPolyRing<R> {
    /// Exact division by repeatedly cancelling the leading term.
    fn div_exact(&self, a: &Self::Element, b: &Self::Element) -> Option<Self::Element> {
        let (lm_b, lc_b) = b.leading_term()?;
        let mut rem = a.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm_b)?;
            let qc = self.base.div_exact(c, lc_b)?;
            let t = MPoly {
                terms: BTreeMap::from([(qm.clone(), qc.clone())]),
            };
            rem = self.sub(&rem, &self.mul(&t, b));
            quot.insert(qm, qc);
        }
        Some(MPoly { terms: quot })
    }
}

impl<R: Domain> MPolyRing<R> {
    /// Resultant with respect to `x_var`, via the Sylvester matrix over the
    /// ring of the remaining variables.
    pub fn resultant(&self, f: &MPoly<El<R>>, g: &MPoly<El<R>>, var: usize) -> MPoly<El<R>> {
        let ring = PolyRing::new(self.clone(), self.vars[var].clone());
        let fu = ring.from_coeffs(self.coefficients_in(f, var));
        let gu = ring.from_coeffs(self.coefficients_in(g, var));
        ring.resultant(&fu, &gu)
    }

    /// Discriminant with respect to `x_var`, same convention as the
    /// univariate [`PolyRing::discriminant`].
    pub fn discriminant(&self, f: &MPoly<El<R>>, var: usize) -> Result<MPoly<El<R>>> {
        let ring = PolyRing::new(self.clone(), self.vars[var].clone());
        ring.discriminant(&ring.from_coeffs(self.coefficients_in(f, var)))
    }
}

impl<F: PerfectField> MPolyRing<F> {
    /// `G` with `G^p = f` when every exponent is divisible by the
    /// characteristic `p`. Always `None` in characteristic zero unless `f`
    /// is constant.
    pub fn pth_root(&self, f: &MPoly<El<F>>) -> Option<MPoly<El<F>>> {
        let p = self.base.characteristic() as u32;
        if p == 0 {
            return (f.degree().unwrap_or(0) == 0).then(|| f.clone());
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &f.terms {
            if m.0.iter().any(|e| e % p != 0) {
                return None;
            }
            terms.insert(
                Monomial(m.0.iter().map(|e| e / p).collect()),
                self.base.pth_root(c),
            );
        }
        Some(MPoly { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteField, Integers};
    use num_bigint::BigInt;

    fn zring() -> MPolyRing<Integers> {
        MPolyRing::new(Integers, ["x", "y"])
    }

    fn zp(r: &MPolyRing<Integers>, terms: &[(i64, u32, u32)]) -> MPoly<BigInt> {
        r.from_terms(
            terms
                .iter()
                .map(|&(c, a, b)| (Monomial::new(&[a, b]), BigInt::from(c))),
        )
    }

    #[test]
    fn graded_lex_order_and_printing() {
        let r = zring();
        let f = zp(&r, &[(1, 0, 2), (1, 3, 0), (-2, 0, 0), (3, 1, 1)]);
        assert_eq!(r.display(&f).to_string(), "x^3 + 3*x*y + y^2 - 2");
        assert_eq!(f.lm(), Some(&Monomial::new(&[3, 0])));
        assert!(Monomial::new(&[1, 1]) > Monomial::new(&[0, 2]));
        assert!(Monomial::new(&[0, 3]) > Monomial::new(&[2, 0]));
    }

    #[test]
    fn leading_forms() {
        let r = zring();
        let f = zp(&r, &[(1, 0, 2), (1, 3, 0)]);
        assert_eq!(r.leading_form(&f).unwrap(), zp(&r, &[(1, 3, 0)]));
        let h = zp(&r, &[(1, 2, 0), (2, 1, 1), (1, 0, 2)]);
        assert_eq!(r.leading_form(&h).unwrap(), h);
        assert_eq!(r.leading_form(&r.from_i64(5)).unwrap(), r.from_i64(5));
        assert!(r.leading_form(&r.zero()).is_err());
    }

    #[test]
    fn exact_division() {
        let r = zring();
        let a = zp(&r, &[(1, 1, 0), (1, 0, 1)]);
        let b = zp(&r, &[(1, 1, 0), (-2, 0, 1), (3, 0, 0)]);
        let ab = r.mul(&a, &b);
        assert_eq!(r.div_exact(&ab, &a), Some(b.clone()));
        assert_eq!(r.div_exact(&ab, &b), Some(a.clone()));
        assert_eq!(r.div_exact(&r.add(&ab, &r.one()), &a), None);
    }

    #[test]
    fn discriminant_in_y() {
        // disc_y(y^2 + c) = -4c with c = x^3
        let r = zring();
        let f = zp(&r, &[(1, 0, 2), (1, 3, 0)]);
        assert_eq!(r.discriminant(&f, 1).unwrap(), zp(&r, &[(-4, 3, 0)]));
    }

    #[test]
    fn pth_roots() {
        let f3 = FiniteField::new(3, 1).unwrap();
        let r = MPolyRing::new(f3.clone(), ["x", "y"]);
        let x = r.gen(0);
        let y = r.gen(1);
        let f = r.add(&r.pow(&x, 3), &r.pow(&y, 3));
        assert_eq!(r.pth_root(&f), Some(r.add(&x, &y)));
        assert_eq!(r.pth_root(&r.add(&r.mul(&x, &x), &y)), None);
        assert_eq!(r.pth_root(&r.from_i64(2)), Some(r.from_i64(2)));
    }

    #[test]
    fn substitution_and_coefficients() {
        let r = zring();
        let f = zp(&r, &[(1, 2, 1), (3, 0, 1), (1, 1, 0)]);
        let cs = r.coefficients_in(&f, 1);
        assert_eq!(cs.len(), 2);
        assert_eq!(r.from_coefficients_in(&cs, 1), f);
        // x -> x + y, y -> y
        let g = r.substitute(&f, &[r.add(&r.gen(0), &r.gen(1)), r.gen(1)]);
        let back = r.substitute(&g, &[r.sub(&r.gen(0), &r.gen(1)), r.gen(1)]);
        assert_eq!(back, f);
    }
}
