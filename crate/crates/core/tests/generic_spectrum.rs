//! Sampling check that a random indecomposable cubic over `F_5` usually has
//! an empty spectrum.

use indecomp::algebra::{FiniteField, Fq, MPoly, MPolyRing, Monomial};
use indecomp::decomp::is_indecomposable_multi;
use indecomp::spectrum::spectral_values;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SAMPLES: usize = 400;

fn random_cubic(r: &MPolyRing<FiniteField>, rng: &mut ChaCha8Rng) -> MPoly<Fq> {
    let mut terms = Vec::new();
    for a in 0..=3u32 {
        for b in 0..=3 - a {
            terms.push((Monomial::new(&[a, b]), Fq::from_code(rng.gen_range(0..5))));
        }
    }
    r.from_terms(terms)
}

#[test]
fn most_indecomposable_cubics_have_empty_spectrum() {
    let r = MPolyRing::new(FiniteField::new(5, 1).unwrap(), ["x", "y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut seen, mut empty, mut no_rational) = (0usize, 0usize, 0usize);
    while seen < SAMPLES {
        let f = random_cubic(&r, &mut rng);
        if f.degree() != Some(3) || !is_indecomposable_multi(&r, &f).unwrap() {
            continue;
        }
        let rep = spectral_values(&r, &f).unwrap();
        seen += 1;
        empty += usize::from(rep.orbits.is_empty());
        no_rational += usize::from(rep.orbits.iter().all(|o| o.degree > 1));
    }
    println!("empty spectrum: {empty}/{seen}; no value in F_5: {no_rational}/{seen}");
    assert!(
        empty * 100 >= 95 * seen,
        "only {empty} of {seen} cubics have an empty spectrum"
    );
}
