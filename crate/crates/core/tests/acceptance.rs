//! Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Exits nonzero if any criterion fails.

use std::collections::HashMap;
use std::time::Instant;

use indecomp::algebra::{
    FiniteField, Fq, Integers, MPoly, MPolyRing, Monomial, PolyRing, Ring, UPoly,
};
use indecomp::census::{
    bd_lemma_check, bounds_check_n2, count_closed_small, count_recursive, count_total, count_uni,
    enumerate_census, trend_table, MultiVars,
};
use indecomp::decomp::{
    compose, decompose_multi, decompose_uni, dickson, is_indecomposable_multi,
    is_indecomposable_uni, normalized_inners,
};
use indecomp::irred::{extend_scalars, factor};
use indecomp::parallel::Execution;
use indecomp::redmod::{build_chain, format_zlx, good_primes};
use indecomp::spectrum::{quadratic_spectral_value, spectral_values, stein_check};
use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn e2s(e: indecomp::Error) -> String {
    e.to_string()
}

fn census_n2() -> Outcome {
    let two = MultiVars::new(2).map_err(e2s)?;
    let expected_d = [0u64, 12, 24, 136];
    for d in 1..=4u32 {
        let scan = enumerate_census(2, 2, d, 8, Execution::Parallel).map_err(e2s)?;
        let rec = count_recursive(2, two, d).map_err(e2s)?;
        ensure(scan.same_counts(&rec), || {
            format!("d={d}: scan {scan} vs recursion {rec}")
        })?;
        ensure(scan.decomposable == big(expected_d[d as usize - 1]), || {
            format!("d={d}: D = {}", scan.decomposable)
        })?;
        if d >= 2 {
            let closed = count_closed_small(2, two, d).map_err(e2s)?;
            ensure(closed.as_ref() == Some(&scan.decomposable), || {
                format!("d={d}: closed form {closed:?}")
            })?;
        }
        if d == 1 {
            ensure(scan.indecomposable == big(6), || {
                format!("I_1 = {}", scan.indecomposable)
            })?;
        }
        if d == 2 {
            ensure(scan.total == big(56), || format!("N_2 = {}", scan.total))?;
        }
    }
    Ok("D = 0, 12, 24, 136 for d = 1..4 by scan, recursion and closed form".into())
}

fn census_n1() -> Outcome {
    for (q, d, want) in [(3u64, 4u32, 54u64), (2, 9, 32)] {
        let scan = enumerate_census(q, 1, d, 8, Execution::Parallel).map_err(e2s)?;
        let closed = count_uni(q, d).map_err(e2s)?.exact;
        ensure(scan.decomposable == big(want), || {
            format!("(q,d)=({q},{d}): scan D = {}", scan.decomposable)
        })?;
        ensure(closed == Some(big(want)), || {
            format!("(q,d)=({q},{d}): closed {closed:?}")
        })?;
    }
    Ok("D(3,4) = 54 and D(2,9) = 32 by scan and closed form".into())
}

fn sandwich() -> Outcome {
    let mut seen = Vec::new();
    for (q, d) in [(2u64, 15u32), (3, 10)] {
        let c = count_uni(q, d).map_err(e2s)?;
        let scan = enumerate_census(q, 1, d, 16, Execution::Parallel).map_err(e2s)?;
        let (lo, hi) = (c.lower.clone().unwrap(), c.upper.clone().unwrap());
        ensure(c.admits(&scan.decomposable), || {
            format!(
                "(q,d)=({q},{d}): D = {} outside [{lo}, {hi}]",
                scan.decomposable
            )
        })?;
        seen.push(format!("{lo} <= {} <= {hi}", scan.decomposable));
    }
    Ok(format!("enumerated: {}", seen.join("; ")))
}

fn bounds_n2() -> Outcome {
    for d in [8u32, 12, 16, 18, 20] {
        let c = bounds_check_n2(2, d).map_err(e2s)?;
        ensure(c.holds, || {
            format!("d={d}: ratio {} alpha {} beta {}", c.ratio, c.alpha, c.beta)
        })?;
    }
    Ok("|D/N - alpha| <= alpha*beta for d = 8, 12, 16, 18, 20".into())
}

fn bd_lemma() -> Outcome {
    let r = bd_lemma_check(10_000).map_err(e2s)?;
    ensure(r.holds(), || format!("failures at {:?}", r.failures))?;
    Ok(format!(
        "{} degrees checked; item (1) at lambda = d fails separately at {} degrees",
        r.degrees_checked,
        r.boundary_failures.len()
    ))
}

fn poly(r: &MPolyRing<FiniteField>, terms: &[(i64, u32, u32)]) -> MPoly<Fq> {
    r.from_terms(
        terms
            .iter()
            .map(|&(c, a, b)| (Monomial::new(&[a, b]), r.base().from_i64(c))),
    )
}

fn random_poly(r: &MPolyRing<FiniteField>, d: u32, rng: &mut ChaCha8Rng) -> MPoly<Fq> {
    let q = r.base().size() as u32;
    let mut terms = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            terms.push((Monomial::new(&[a, b]), Fq::from_code(rng.gen_range(0..q))));
        }
    }
    r.from_terms(terms)
}

/// Reducible over the closure, decided by factoring over `F_{q^j}` for every
/// `j <= deg`: an absolutely irreducible factor of a degree-`d` polynomial
/// is defined over an extension of degree at most `d`.
fn reducible_somewhere(r: &MPolyRing<FiniteField>, f: &MPoly<Fq>) -> Result<bool, String> {
    let d = f.degree().unwrap_or(0);
    for j in 1..=d {
        let (rj, fj) = extend_scalars(r, f, j).map_err(e2s)?;
        let fac = factor(&rj, &fj).map_err(e2s)?;
        if fac.factors.iter().map(|(_, m)| *m).sum::<u32>() > 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

fn spectrum_stein() -> Outcome {
    let f3 = MPolyRing::new(FiniteField::new(3, 1).unwrap(), ["x", "y"]);
    let rep = spectral_values(&f3, &poly(&f3, &[(1, 1, 1)])).map_err(e2s)?;
    ensure(
        rep.orbits.len() == 1
            && rep.orbits[0].degree == 1
            && rep.orbits[0].representative == Fq::from_code(0),
        || format!("xy: {:?}", rep.orbits),
    )?;
    ensure(
        rep.rho == 1 && rep.rho == rep.degree as u64 - 1 && stein_check(&rep),
        || format!("xy: rho {}", rep.rho),
    )?;
    let f5 = MPolyRing::new(FiniteField::new(5, 1).unwrap(), ["x", "y"]);
    let rep = spectral_values(&f5, &poly(&f5, &[(1, 0, 2), (1, 3, 0)])).map_err(e2s)?;
    ensure(rep.orbits.is_empty(), || {
        format!("y^2 + x^3: {:?}", rep.orbits)
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    let mut nonempty = 0;
    for p in [2u64, 3] {
        let r = MPolyRing::new(FiniteField::new(p, 1).unwrap(), ["x", "y"]);
        let mut count = 0;
        while count < 100 {
            let d = rng.gen_range(2..=4);
            let f = random_poly(&r, d, &mut rng);
            if f.degree() != Some(d) || !is_indecomposable_multi(&r, &f).map_err(e2s)? {
                continue;
            }
            let rep = spectral_values(&r, &f).map_err(e2s)?;
            ensure(stein_check(&rep), || {
                format!("Stein fails for {}", r.display(&f))
            })?;
            // rational spectral values against the factoring oracle
            for c in 0..p as u32 {
                let lam = Fq::from_code(c);
                let g = r.sub(&f, &r.constant(lam));
                let listed = rep
                    .orbits
                    .iter()
                    .any(|o| o.degree == 1 && o.representative == lam);
                ensure(listed == reducible_somewhere(&r, &g)?, || {
                    format!("F = {}, lambda = {c}: report {listed}", r.display(&f))
                })?;
            }
            nonempty += usize::from(!rep.orbits.is_empty());
            count += 1;
            checked += 1;
        }
    }
    Ok(format!(
        "xy and y^2 + x^3 as expected; {checked} random F pass ({nonempty} with nonempty spectrum)"
    ))
}

fn quadratic() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut done = 0;
    for p in [5u64, 7] {
        let r = MPolyRing::new(FiniteField::new(p, 1).unwrap(), ["x", "y"]);
        let mut count = 0;
        while count < 100 {
            let f = random_poly(&r, 2, &mut rng);
            let Ok(lam) = quadratic_spectral_value(&r, &f) else {
                continue;
            };
            let g = r.sub(&f, &r.constant(lam));
            let (r2, g2) = extend_scalars(&r, &g, 2).map_err(e2s)?;
            let fac = factor(&r2, &g2).map_err(e2s)?;
            ensure(
                fac.factors.iter().map(|(_, m)| *m).sum::<u32>() == 2,
                || {
                    format!(
                        "F = {} over F_{p}: F - {} irreducible over F_{p}^2",
                        r.display(&f),
                        lam.code()
                    )
                },
            )?;
            count += 1;
            done += 1;
        }
    }
    Ok(format!(
        "{done} random quadratics: F - lambda* splits into two lines"
    ))
}

fn modp() -> Outcome {
    let zr = MPolyRing::new(Integers, ["x", "y"]);
    let f = zr.from_terms([
        (Monomial::new(&[0, 2]), BigInt::from(1)),
        (Monomial::new(&[3, 0]), BigInt::from(1)),
    ]);
    let chain = build_chain(&zr, &f).map_err(e2s)?;
    let lr = PolyRing::new(Integers, "lambda");
    ensure(format_zlx(&chain.delta_red) == "x^3 - lambda", || {
        format_zlx(&chain.delta_red)
    })?;
    ensure(
        chain.delta_lambda == lr.from_coeffs(vec![0.into(), 0.into(), (-27).into()]),
        || lr.display(&chain.delta_lambda).to_string(),
    )?;
    ensure(chain.delta0 == lr.from_i64(-4), || {
        lr.display(&chain.delta0).to_string()
    })?;
    let primes = good_primes(&chain, 13);
    ensure(primes == vec![5, 7, 11, 13], || format!("{primes:?}"))?;
    for &p in &primes {
        let r = MPolyRing::new(FiniteField::new(p, 1).unwrap(), ["x", "y"]);
        let fp = poly(&r, &[(1, 0, 2), (1, 3, 0)]);
        ensure(is_indecomposable_multi(&r, &fp).map_err(e2s)?, || {
            format!("decomposable mod {p}")
        })?;
    }
    Ok("chain x^3 - lambda, -27*lambda^2, -4; good primes [5, 7, 11, 13], all indecomposable mod p".into())
}

/// Every `u` of degree exactly `e` over the field.
fn outers(field: &FiniteField, e: u32) -> Vec<UPoly<Fq>> {
    let ur = PolyRing::new(field.clone(), "t");
    let q = field.size();
    let mut out = Vec::new();
    for lead in 1..q {
        for code in 0..q.pow(e) {
            let mut c = code;
            let mut coeffs: Vec<Fq> = (0..e)
                .map(|_| {
                    let x = Fq::from_code((c % q) as u32);
                    c /= q;
                    x
                })
                .collect();
            coeffs.push(Fq::from_code(lead as u32));
            out.push(ur.from_coeffs(coeffs));
        }
    }
    out
}

/// All compositions `u(H)` of degree `d` with `H` normalized and
/// indecomposable; fails on any polynomial reached by two different pairs.
fn unique_pairs(r: &MPolyRing<FiniteField>, d: u32) -> Result<usize, String> {
    let uni = r.nvars() == 1;
    let mut seen: HashMap<MPoly<Fq>, (UPoly<Fq>, MPoly<Fq>)> = HashMap::new();
    for e in (2..=d).filter(|e| d.is_multiple_of(*e)) {
        let k = d / e;
        if uni && k < 2 {
            continue;
        }
        for h in normalized_inners(r, k).map_err(e2s)? {
            let indec = if uni {
                is_indecomposable_uni(r, &h)
            } else {
                is_indecomposable_multi(r, &h)
            }
            .map_err(e2s)?;
            if !indec {
                continue;
            }
            for u in outers(r.base(), e) {
                let f = compose(r, &u, &h);
                if let Some((u0, h0)) = seen.get(&f) {
                    if (u0, h0) != (&u, &h) {
                        return Err(format!(
                            "{} has two normalized decompositions",
                            r.display(&f)
                        ));
                    }
                }
                let dec = if uni {
                    decompose_uni(r, &f, e)
                } else {
                    decompose_multi(r, &f, e)
                }
                .map_err(e2s)?;
                let dec = dec.ok_or_else(|| format!("fast path misses {}", r.display(&f)))?;
                if (dec.outer.clone(), dec.inner.clone()) != (u.clone(), h.clone()) {
                    return Err(format!("fast path disagrees on {}", r.display(&f)));
                }
                seen.insert(f, (u, h.clone()));
            }
        }
    }
    Ok(seen.len())
}

fn uniqueness() -> Outcome {
    let f2 = MPolyRing::new(FiniteField::new(2, 1).unwrap(), ["x", "y"]);
    let mut counts = Vec::new();
    for d in 1..=4 {
        let n = unique_pairs(&f2, d)?;
        let scan = enumerate_census(2, 2, d, 4, Execution::Parallel).map_err(e2s)?;
        ensure(big(n as u64) == scan.decomposable, || {
            format!("d={d}: {n} pairs vs D = {}", scan.decomposable)
        })?;
        counts.push(n);
    }
    let f3 = MPolyRing::new(FiniteField::new(3, 1).unwrap(), ["x"]);
    let n = unique_pairs(&f3, 4)?;
    ensure(n == 54, || format!("q=3 n=1 d=4: {n} pairs"))?;
    Ok(format!(
        "pairs are unique; q=2 n=2 counts {counts:?} equal D; q=3 n=1 d=4 gives 54"
    ))
}

fn witnesses() -> Outcome {
    let field = FiniteField::new(5, 1).unwrap();
    let r = MPolyRing::new(field.clone(), ["x"]);
    let ur = PolyRing::new(field.clone(), "x");
    let as_m = |u: &UPoly<Fq>| r.from_upoly(u, 0);
    let x6 = r.pow(&r.gen(0), 6);
    let mut cases = vec![("x^6".to_string(), x6)];
    for a in 1..5 {
        cases.push((
            format!("D_6(x,{a})"),
            as_m(&dickson(&ur, 6, &field.from_i64(a))),
        ));
    }
    for (name, f) in &cases {
        let two = decompose_uni(&r, f, 2)
            .map_err(e2s)?
            .ok_or_else(|| format!("{name}: no 2-outer"))?;
        let three = decompose_uni(&r, f, 3)
            .map_err(e2s)?
            .ok_or_else(|| format!("{name}: no 3-outer"))?;
        for dec in [&two, &three] {
            ensure(compose(&r, &dec.outer, &dec.inner) == *f, || {
                format!("{name}: composition mismatch")
            })?;
        }
        ensure(
            two.inner.degree() == Some(3) && three.inner.degree() == Some(2),
            || format!("{name}: degrees"),
        )?;
    }
    let mut identities = 0;
    let f7 = FiniteField::new(7, 1).unwrap();
    let ur7 = PolyRing::new(f7.clone(), "x");
    for m in 1..=4u32 {
        for n in 1..=4 {
            for a in 1..7i64 {
                let a_f = f7.from_i64(a);
                let outer = dickson(&ur7, m, &f7.pow(&a_f, n as u64));
                let lhs = ur7.compose(&outer, &dickson(&ur7, n, &a_f));
                ensure(lhs == dickson(&ur7, m * n, &a_f), || {
                    format!("F_7: m={m} n={n} a={a}")
                })?;
                identities += 1;
            }
        }
    }
    let zr = PolyRing::new(Integers, "x");
    for m in 1..=12u32 {
        for n in 1..=12 / m {
            for a in 1..5i64 {
                let a_f = field.from_i64(a);
                let inner = dickson(&ur, n, &a_f);
                let outer = dickson(&ur, m, &field.pow(&a_f, n as u64));
                ensure(
                    ur.compose(&outer, &inner) == dickson(&ur, m * n, &a_f),
                    || format!("F_5: m={m} n={n} a={a}"),
                )?;
                let a_z = BigInt::from(a);
                let inner = dickson(&zr, n, &a_z);
                let outer = dickson(&zr, m, &Integers.pow(&a_z, n as u64));
                ensure(
                    zr.compose(&outer, &inner) == dickson(&zr, m * n, &a_z),
                    || format!("Z: m={m} n={n} a={a}"),
                )?;
                identities += 2;
            }
        }
    }
    Ok(format!(
        "x^6 and D_6(x,a) decompose both ways; {identities} Dickson identities hold"
    ))
}

fn trend() -> Outcome {
    let rows = trend_table(2, 20).map_err(e2s)?;
    for r in &rows {
        ensure(r.defect <= r.bound, || {
            format!("d={}: {} > {}", r.d, r.defect, r.bound)
        })?;
    }
    let pow2: Vec<_> = rows.iter().filter(|r| r.d.is_power_of_two()).collect();
    ensure(pow2.windows(2).all(|w| w[1].defect < w[0].defect), || {
        "not decreasing over powers of 2".into()
    })?;
    let n20 = count_total(2, 2, 20).map_err(e2s)?;
    Ok(format!("1 - I/N strictly decreasing over d = 2, 4, 8, 16 and bounded for d <= 20 (N_20 has {} digits)", n20.to_string().len()))
}

fn cross_extension() -> Outcome {
    let f2 = FiniteField::new(2, 1).unwrap();
    let r = MPolyRing::new(f2.clone(), ["x", "y"]);
    let exts: Vec<_> = [2u32, 3]
        .iter()
        .map(|&k| {
            let big = FiniteField::new(2, k).unwrap();
            let emb = f2.embedding_into(&big).unwrap();
            (r.with_base(big), emb)
        })
        .collect();
    let mut total = 0;
    for d in 1..=3u32 {
        let monos: Vec<Monomial> = (0..=d)
            .flat_map(|a| (0..=d - a).map(move |b| Monomial::new(&[a, b])))
            .collect();
        for code in 1u64..(1 << monos.len()) {
            let f = r.from_terms(
                monos
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| code >> i & 1 == 1)
                    .map(|(_, m)| (m.clone(), Fq::from_code(1))),
            );
            if f.degree() != Some(d) {
                continue;
            }
            let base = is_indecomposable_multi(&r, &f).map_err(e2s)?;
            for (rk, emb) in &exts {
                let g = r.map_into(&f, rk, |c| emb.apply(*c));
                let ext = is_indecomposable_multi(rk, &g).map_err(e2s)?;
                ensure(ext == base, || {
                    format!("{} differs over F_{}", r.display(&f), rk.base().size())
                })?;
            }
            total += 1;
        }
    }
    ensure(total == 6 + 56 + 960, || format!("{total} polynomials"))?;
    Ok(format!("{total} polynomials agree over F_2, F_4, F_8"))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        ("census exactness, n = 2", census_n2),
        ("census exactness, n = 1", census_n1),
        ("pp' sandwich, n = 1", sandwich),
        ("ratio bounds, n = 2", bounds_n2),
        ("b(d) lemma to 10000", bd_lemma),
        ("spectrum and Stein", spectrum_stein),
        ("quadratic spectral value", quadratic),
        ("mod-p criterion", modp),
        ("normalization uniqueness", uniqueness),
        ("multiple-decomposition witnesses", witnesses),
        ("asymptotic trend", trend),
        ("cross-extension equivalence", cross_extension),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
