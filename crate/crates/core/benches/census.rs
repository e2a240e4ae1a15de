use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use indecomp::algebra::{FiniteField, Fq, MPolyRing, Monomial};
use indecomp::census::enumerate_census;
use indecomp::parallel::Execution;
use indecomp::spectrum::spectral_values_with;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_census");
    group.sample_size(10);
    for (q, n, d) in [(2u64, 2u32, 4u32), (3, 1, 8), (2, 1, 12)] {
        for (name, exec) in MODES {
            group.bench_with_input(
                BenchmarkId::new(name, format!("q{q}_n{n}_d{d}")),
                &exec,
                |b, &exec| b.iter(|| enumerate_census(q, n, d, 16, exec).unwrap()),
            );
        }
    }
    group.finish();
}

fn spectrum_sweep(c: &mut Criterion) {
    let r = MPolyRing::new(FiniteField::new(3, 1).unwrap(), ["x", "y"]);
    // x^4 + y^3 + x*y: the sweep runs over F_3, F_9 and F_27
    let f = r.from_terms([
        (Monomial::new(&[4, 0]), Fq::from_code(1)),
        (Monomial::new(&[0, 3]), Fq::from_code(1)),
        (Monomial::new(&[1, 1]), Fq::from_code(1)),
    ]);
    let mut group = c.benchmark_group("spectral_values");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| spectral_values_with(&r, &f, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, spectrum_sweep);
criterion_main!(benches);
