use std::fmt;
use std::hash::Hash;

/// Shorthand for the element type of a ring.
pub type El<R> = <R as Ring>::Element;

/// A commutative ring with identity.
///
/// Rings are contexts: elements are plain data and every operation goes
/// through the ring value, so the same element type can live in several
/// rings (for instance `F_4` and `F_16` both use [`Fq`](super::Fq)).
pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Element: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn is_zero(&self, a: &Self::Element) -> bool;
    fn is_one(&self, a: &Self::Element) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn neg(&self, a: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    /// Image of an integer under the canonical map `Z -> R`.
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Element;

    /// Characteristic, 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    fn pow(&self, a: &Self::Element, mut e: u64) -> Self::Element {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Writes an element in the canonical text form.
    fn fmt_element(&self, a: &Self::Element, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    /// Whether the printed form of `a` is a single token that needs no
    /// parentheses when used as a coefficient.
    fn is_atomic(&self, _a: &Self::Element) -> bool {
        true
    }

    /// Whether the printed form of `a` starts with a minus sign.
    fn is_negative(&self, _a: &Self::Element) -> bool {
        false
    }

    fn display<'a>(&'a self, a: &'a Self::Element) -> DisplayElement<'a, Self> {
        DisplayElement {
            ring: self,
            elem: a,
        }
    }
}

/// An integral domain with exact division.
pub trait Domain: Ring {
    /// Returns `a / b` when `b` divides `a`, `None` otherwise (including `b = 0`).
    fn div_exact(&self, a: &Self::Element, b: &Self::Element) -> Option<Self::Element>;
}

pub trait Field: Domain {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Element) -> Self::Element;

    fn div(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.mul(a, &self.inv(b))
    }
}

/// Fields in which every element has a `p`-th root (finite fields and fields of
/// characteristic zero), plus optional enumeration of the elements.
pub trait PerfectField: Field {
    /// The unique `p`-th root; the identity in characteristic zero.
    fn pth_root(&self, a: &Self::Element) -> Self::Element;

    /// All elements in a fixed order, or `None` for infinite fields.
    fn elements(&self) -> Option<Vec<Self::Element>>;
}

pub struct DisplayElement<'a, R: Ring> {
    ring: &'a R,
    elem: &'a R::Element,
}

impl<R: Ring> fmt::Display for DisplayElement<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ring.fmt_element(self.elem, f)
    }
}
