//! The rational function field `F(var)` over a field `F`.

use std::fmt;

use super::ring::{Domain, El, Field, Ring};
use super::upoly::{PolyRing, UPoly};

/// A reduced fraction `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn<E> {
    num: UPoly<E>,
    den: UPoly<E>,
}

impl<E> RatFn<E> {
    pub fn num(&self) -> &UPoly<E> {
        &self.num
    }

    pub fn den(&self) -> &UPoly<E> {
        &self.den
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunctions<F> {
    poly: PolyRing<F>,
}

impl<F: Field> RationalFunctions<F> {
    pub fn new(base: F, var: impl Into<String>) -> Self {
        RationalFunctions {
            poly: PolyRing::new(base, var),
        }
    }

    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.poly
    }

    /// The fraction `num / den` in lowest terms. Panics if `den` is zero.
    pub fn fraction(&self, num: UPoly<El<F>>, den: UPoly<El<F>>) -> RatFn<El<F>> {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFn {
                num,
                den: self.poly.one(),
            };
        }
        let g = self.poly.gcd(&num, &den).expect("nonzero");
        let num = self.poly.div_exact(&num, &g).expect("gcd divides");
        let den = self.poly.div_exact(&den, &g).expect("gcd divides");
        let c = self.poly.base().inv(den.lc().expect("nonzero"));
        RatFn {
            num: self.poly.scale(&num, &c),
            den: self.poly.scale(&den, &c),
        }
    }

    pub fn from_poly(&self, f: UPoly<El<F>>) -> RatFn<El<F>> {
        RatFn {
            num: f,
            den: self.poly.one(),
        }
    }
}

impl<F: Field> Ring for RationalFunctions<F> {
    type Element = RatFn<El<F>>;

    fn zero(&self) -> Self::Element {
        self.from_poly(self.poly.zero())
    }
    fn one(&self) -> Self::Element {
        self.from_poly(self.poly.one())
    }
    fn is_zero(&self, a: &Self::Element) -> bool {
        a.num.is_zero()
    }
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let p = &self.poly;
        if a.den == b.den {
            return self.fraction(p.add(&a.num, &b.num), a.den.clone());
        }
        self.fraction(
            p.add(&p.mul(&a.num, &b.den), &p.mul(&b.num, &a.den)),
            p.mul(&a.den, &b.den),
        )
    }
    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Element) -> Self::Element {
        RatFn {
            num: self.poly.neg(&a.num),
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let p = &self.poly;
        self.fraction(p.mul(&a.num, &b.num), p.mul(&a.den, &b.den))
    }
    fn from_i64(&self, n: i64) -> Self::Element {
        self.from_poly(self.poly.from_i64(n))
    }
    fn characteristic(&self) -> u64 {
        self.poly.characteristic()
    }
    fn fmt_element(&self, a: &Self::Element, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_one(&a.den) {
            return self.poly.fmt_element(&a.num, f);
        }
        let num = self.poly.display(&a.num);
        let den = self.poly.display(&a.den);
        match (self.poly.is_atomic(&a.num), self.poly.is_atomic(&a.den)) {
            (true, true) => write!(f, "{num}/{den}"),
            (true, false) => write!(f, "{num}/({den})"),
            (false, true) => write!(f, "({num})/{den}"),
            (false, false) => write!(f, "({num})/({den})"),
        }
    }
    fn is_atomic(&self, a: &Self::Element) -> bool {
        self.poly.is_one(&a.den) && self.poly.is_atomic(&a.num)
    }
    fn is_negative(&self, a: &Self::Element) -> bool {
        self.poly.is_one(&a.den) && self.poly.is_negative(&a.num)
    }
}

impl<F: Field> Domain for RationalFunctions<F> {
    fn div_exact(&self, a: &Self::Element, b: &Self::Element) -> Option<Self::Element> {
        (!self.is_zero(b)).then(|| self.div(a, b))
    }
}

impl<F: Field> Field for RationalFunctions<F> {
    fn inv(&self, a: &Self::Element) -> Self::Element {
        assert!(!self.is_zero(a), "inverse of zero");
        self.fraction(a.den.clone(), a.num.clone())
    }
}
