//! Dense univariate polynomials over an arbitrary coefficient ring.

use std::fmt;

use super::linalg::{determinant, sylvester_matrix};
use super::ring::{Domain, El, Field, PerfectField, Ring};
use crate::error::{Error, Result};

/// A dense univariate polynomial, coefficients stored from the constant term
/// upwards. The zero polynomial has no coefficients and the leading
/// coefficient is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPoly<E> {
    coeffs: Vec<E>,
}

impl<E> UPoly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// The polynomial ring `R[var]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<R> {
    base: R,
    var: String,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: impl Into<String>) -> Self {
        PolyRing {
            base,
            var: var.into(),
        }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var_name(&self) -> &str {
        &self.var
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<El<R>>) -> UPoly<El<R>> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(&self, c: El<R>) -> UPoly<El<R>> {
        self.from_coeffs(vec![c])
    }

    /// The polynomial `c * var^deg`.
    pub fn monomial(&self, c: El<R>, deg: usize) -> UPoly<El<R>> {
        let mut coeffs = vec![self.base.zero(); deg];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    /// The generator `var`.
    pub fn gen(&self) -> UPoly<El<R>> {
        self.monomial(self.base.one(), 1)
    }

    /// Coefficient of `var^i`, zero beyond the degree.
    pub fn coeff(&self, f: &UPoly<El<R>>, i: usize) -> El<R> {
        f.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn scale(&self, f: &UPoly<El<R>>, c: &El<R>) -> UPoly<El<R>> {
        self.from_coeffs(f.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    pub fn eval(&self, f: &UPoly<El<R>>, x: &El<R>) -> El<R> {
        f.coeffs.iter().rev().fold(self.base.zero(), |acc, c| {
            self.base.add(&self.base.mul(&acc, x), c)
        })
    }

    /// Composition `f(g)`.
    pub fn compose(&self, f: &UPoly<El<R>>, g: &UPoly<El<R>>) -> UPoly<El<R>> {
        f.coeffs.iter().rev().fold(self.zero(), |acc, c| {
            self.add(&self.mul(&acc, g), &self.constant(c.clone()))
        })
    }

    pub fn derivative(&self, f: &UPoly<El<R>>) -> UPoly<El<R>> {
        self.from_coeffs(
            f.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(&self.base.from_i64(i as i64), c))
                .collect(),
        )
    }

    /// Applies a coefficient map into another polynomial ring.
    pub fn map_into<S: Ring>(
        &self,
        f: &UPoly<El<R>>,
        target: &PolyRing<S>,
        map: impl Fn(&El<R>) -> El<S>,
    ) -> UPoly<El<S>> {
        target.from_coeffs(f.coeffs.iter().map(map).collect())
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Element = UPoly<El<R>>;

    fn zero(&self) -> Self::Element {
        UPoly { coeffs: Vec::new() }
    }
    fn one(&self) -> Self::Element {
        self.constant(self.base.one())
    }
    fn is_zero(&self, a: &Self::Element) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.base.zero();
        self.from_coeffs(
            (0..n)
                .map(|i| {
                    let x = a.coeffs.get(i).unwrap_or(&zero);
                    let y = b.coeffs.get(i).unwrap_or(&zero);
                    self.base.add(x, y)
                })
                .collect(),
        )
    }
    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Element) -> Self::Element {
        UPoly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }
    fn from_i64(&self, n: i64) -> Self::Element {
        self.constant(self.base.from_i64(n))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn fmt_element(&self, a: &Self::Element, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = a
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(i, c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => self.var.clone(),
                    _ => format!("{}^{}", self.var, i),
                };
                (c, mono)
            });
        fmt_terms(&self.base, terms, f)
    }
    fn is_atomic(&self, a: &Self::Element) -> bool {
        match a.coeffs.iter().filter(|c| !self.base.is_zero(c)).count() {
            0 => true,
            1 => {
                let c = a.lc().expect("nonzero");
                if a.degree() == Some(0) {
                    self.base.is_atomic(c)
                } else {
                    self.base.is_one(c)
                }
            }
            _ => false,
        }
    }
    fn is_negative(&self, a: &Self::Element) -> bool {
        a.lc().is_some_and(|c| self.base.is_negative(c))
    }
}

/// Writes a sum of `coefficient * monomial` terms in canonical form; an empty
/// monomial string stands for the constant monomial.
pub(crate) fn fmt_terms<'a, R: Ring + 'a>(
    ring: &R,
    terms: impl Iterator<Item = (&'a El<R>, String)>,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let negative = ring.is_negative(c);
        let magnitude = if negative { ring.neg(c) } else { c.clone() };
        let body = if mono.is_empty() {
            if negative && !ring.is_atomic(&magnitude) {
                format!("({})", ring.display(&magnitude))
            } else {
                ring.display(&magnitude).to_string()
            }
        } else if ring.is_one(&magnitude) {
            mono
        } else if ring.is_atomic(&magnitude) {
            format!("{}*{}", ring.display(&magnitude), mono)
        } else {
            format!("({})*{}", ring.display(&magnitude), mono)
        };
        match (first, negative) {
            (true, true) => write!(f, "-{body}")?,
            (true, false) => write!(f, "{body}")?,
            (false, true) => write!(f, " - {body}")?,
            (false, false) => write!(f, " + {body}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<R: Domain> PolyRing<R> {
    /// Resultant of `f` and `g` as the determinant of the Sylvester matrix,
    /// using the actual degrees of both polynomials.
    pub fn resultant(&self, f: &UPoly<El<R>>, g: &UPoly<El<R>>) -> El<R> {
        let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
            return self.base.zero();
        };
        if m == 0 {
            return self.base.pow(&f.coeffs[0], n as u64);
        }
        if n == 0 {
            return self.base.pow(&g.coeffs[0], m as u64);
        }
        determinant(
            &self.base,
            sylvester_matrix(&self.base, &f.coeffs, &g.coeffs),
        )
    }

    /// Discriminant `(-1)^(d(d-1)/2) Res(f, f') / lc(f)` with `f'` taken of
    /// formal degree `d - 1`. A degree-one polynomial has discriminant 1.
    pub fn discriminant(&self, f: &UPoly<El<R>>) -> Result<El<R>> {
        let d = match f.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::ConstantPolynomial),
        };
        let mut df: Vec<El<R>> = self.derivative(f).coeffs;
        df.resize(d, self.base.zero());
        let res = determinant(&self.base, sylvester_matrix(&self.base, &f.coeffs, &df));
        let res = if (d * (d - 1) / 2) % 2 == 1 {
            self.base.neg(&res)
        } else {
            res
        };
        self.base
            .div_exact(&res, f.lc().expect("nonzero"))
            .ok_or_else(|| {
                Error::Internal("discriminant not divisible by leading coefficient".into())
            })
    }
}

impl<R: Domain> Domain for PolyRing<R> {
    fn div_exact(&self, a: &Self::Element, b: &Self::Element) -> Option<Self::Element> {
        let db = b.degree()?;
        if a.is_zero() {
            return Some(self.zero());
        }
        let da = a.degree()?;
        if da < db {
            return None;
        }
        let lb = b.lc()?;
        let mut rem = a.coeffs.clone();
        let mut quot = vec![self.base.zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = &rem[i + db];
            if self.base.is_zero(c) {
                continue;
            }
            let t = self.base.div_exact(c, lb)?;
            for (j, bj) in b.coeffs.iter().enumerate() {
                rem[i + j] = self.base.sub(&rem[i + j], &self.base.mul(&t, bj));
            }
            quot[i] = t;
        }
        rem.iter()
            .all(|c| self.base.is_zero(c))
            .then(|| self.from_coeffs(quot))
    }
}

impl<F: Field> PolyRing<F> {
    /// Division with remainder: `a = q*b + r`, `deg r < deg b`.
    #[allow(clippy::type_complexity)]
    pub fn divrem(
        &self,
        a: &UPoly<El<F>>,
        b: &UPoly<El<F>>,
    ) -> Result<(UPoly<El<F>>, UPoly<El<F>>)> {
        let db = b.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(da) = a.degree() else {
            return Ok((self.zero(), self.zero()));
        };
        if da < db {
            return Ok((self.zero(), a.clone()));
        }
        let inv = self.base.inv(b.lc().expect("nonzero"));
        let mut rem = a.coeffs.clone();
        let mut quot = vec![self.base.zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = &rem[i + db];
            if self.base.is_zero(c) {
                continue;
            }
            let t = self.base.mul(c, &inv);
            for (j, bj) in b.coeffs.iter().enumerate() {
                rem[i + j] = self.base.sub(&rem[i + j], &self.base.mul(&t, bj));
            }
            quot[i] = t;
        }
        rem.truncate(db);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &UPoly<El<F>>, b: &UPoly<El<F>>) -> Result<UPoly<El<F>>> {
        Ok(self.divrem(a, b)?.1)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self, f: &UPoly<El<F>>) -> UPoly<El<F>> {
        match f.lc() {
            None => f.clone(),
            Some(c) => self.scale(f, &self.base.inv(c)),
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, f: &UPoly<El<F>>, g: &UPoly<El<F>>) -> Result<UPoly<El<F>>> {
        if f.is_zero() && g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b)?;
            a = b;
            b = r;
        }
        Ok(self.monic(&a))
    }

    /// `base^e mod m`, with `e` given as little-endian 64-bit limbs.
    pub fn pow_mod(
        &self,
        base: &UPoly<El<F>>,
        e: &[u64],
        m: &UPoly<El<F>>,
    ) -> Result<UPoly<El<F>>> {
        let mut acc = self.rem(&self.one(), m)?;
        let b = self.rem(base, m)?;
        for limb in e.iter().rev() {
            for bit in (0..64).rev() {
                acc = self.rem(&self.mul(&acc, &acc), m)?;
                if (limb >> bit) & 1 == 1 {
                    acc = self.rem(&self.mul(&acc, &b), m)?;
                }
            }
        }
        Ok(acc)
    }
}

impl<F: PerfectField> PolyRing<F> {
    /// Square-free decomposition: monic pairwise coprime square-free `g_i`
    /// with `f = lc(f) * prod g_i^{m_i}`. Handles characteristic `p` by
    /// extracting `p`-th roots when the derivative vanishes.
    pub fn squarefree_decomposition(&self, f: &UPoly<El<F>>) -> Result<Vec<(UPoly<El<F>>, u32)>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic(f);
        let mut out = Vec::new();
        self.sqf_rec(&f, 1, &mut out)?;
        out.sort_by_key(|(_, m)| *m);
        // merge factors that share a multiplicity
        let mut merged: Vec<(UPoly<El<F>>, u32)> = Vec::new();
        for (g, m) in out {
            match merged.last_mut() {
                Some((h, k)) if *k == m => *h = self.mul(h, &g),
                _ => merged.push((g, m)),
            }
        }
        Ok(merged)
    }

    fn sqf_rec(
        &self,
        f: &UPoly<El<F>>,
        scale: u32,
        out: &mut Vec<(UPoly<El<F>>, u32)>,
    ) -> Result<()> {
        if f.degree().unwrap_or(0) == 0 {
            return Ok(());
        }
        let p = self.base.characteristic();
        let df = self.derivative(f);
        if df.is_zero() {
            // f = g(x^p) = h^p
            let h = self.pth_root_poly(f);
            return self.sqf_rec(&h, scale * p as u32, out);
        }
        let mut c = self.gcd(f, &df)?;
        let mut w = self.div_exact(f, &c).expect("gcd divides");
        let mut i = 1u32;
        while w.degree().unwrap_or(0) > 0 {
            let y = self.gcd(&w, &c)?;
            let z = self.div_exact(&w, &y).expect("gcd divides");
            if z.degree().unwrap_or(0) > 0 {
                out.push((z, i * scale));
            }
            i += 1;
            w = y;
            c = self.div_exact(&c, &w).expect("gcd divides");
        }
        if c.degree().unwrap_or(0) > 0 {
            // remaining part is a p-th power
            let h = self.pth_root_poly(&c);
            self.sqf_rec(&h, scale * p as u32, out)?;
        }
        Ok(())
    }

    fn pth_root_poly(&self, f: &UPoly<El<F>>) -> UPoly<El<F>> {
        let p = self.base.characteristic() as usize;
        self.from_coeffs(
            f.coeffs
                .iter()
                .step_by(p)
                .map(|c| self.base.pth_root(c))
                .collect(),
        )
    }

    /// Product of the distinct monic irreducible factors of `f`.
    pub fn squarefree_part(&self, f: &UPoly<El<F>>) -> Result<UPoly<El<F>>> {
        Ok(self
            .squarefree_decomposition(f)?
            .into_iter()
            .fold(self.one(), |acc, (g, _)| self.mul(&acc, &g)))
    }
}
