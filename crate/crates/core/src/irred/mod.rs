//! Irreducibility and factorization over finite fields and their extensions.

mod multivariate;
mod oracle;
mod univariate;

pub use multivariate::{
    absolutely_irreducible, bivar_irreducible, extend_scalars, factor, is_irreducible,
    n_bar_factors,
};
pub(crate) use oracle::monomials_up_to;
pub use oracle::{exhaustive_factor, exhaustive_is_irreducible};
pub use univariate::uni_factor;

/// A unit times a product of pairwise distinct irreducible factors with
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<P, C> {
    pub unit: C,
    pub factors: Vec<(P, u32)>,
}

impl<E: Ord + Clone> Factorization<crate::algebra::MPoly<E>, E> {
    /// Groups a list of monic irreducible factors (repetitions allowed) and
    /// sorts by degree, then by terms from the leading one down.
    pub(crate) fn from_list(mut list: Vec<crate::algebra::MPoly<E>>, unit: E) -> Self {
        list.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.terms().rev().cmp(b.terms().rev()))
        });
        let mut factors: Vec<(crate::algebra::MPoly<E>, u32)> = Vec::new();
        for g in list {
            match factors.last_mut() {
                Some((h, m)) if *h == g => *m += 1,
                _ => factors.push((g, 1)),
            }
        }
        Factorization { unit, factors }
    }
}
