use affwhit::engine::Truncation;
use affwhit::seqspace::window_rank_check;
use affwhit::scalar::{int, ratio};
use affwhit::{AffineGenerator, BiSequence, FinBasis};
use affwhit_bench::{sl2_spec, sl3_borel_spec};
use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

fn act_monomial(c: &mut Criterion) {
    let spec = sl2_spec();
    let basis = spec.basis_enumeration(&Truncation::new(3, 2, 0));
    let a1 = spec.datum().parse_root("a1").unwrap();
    let g = AffineGenerator::Loop { x: FinBasis::Root(a1), exp: 1 };
    // fresh spec per batch so the straightening cache starts cold
    c.bench_function("act_monomial/sl2 cold D=3", |b| {
        b.iter_batched(
            sl2_spec,
            |s| {
                for m in &basis {
                    s.act_monomial(g, m);
                }
            },
            BatchSize::SmallInput,
        )
    });
    c.bench_function("act_monomial/sl2 warm D=3", |b| {
        b.iter(|| {
            for m in &basis {
                spec.act_monomial(g, m);
            }
        })
    });
}

fn solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("whittaker_solve");
    group.sample_size(10);
    group.bench_function("sl2 (2,2,3)", |b| b.iter_batched(sl2_spec, |s| s.whittaker_solve(&Truncation::new(2, 2, 3)), BatchSize::SmallInput));
    group.bench_function("sl2 (3,2,4)", |b| b.iter_batched(sl2_spec, |s| s.whittaker_solve(&Truncation::new(3, 2, 4)), BatchSize::SmallInput));
    group.bench_function("sl3-borel (2,1,3)", |b| {
        b.iter_batched(sl3_borel_spec, |s| s.whittaker_solve(&Truncation::new(2, 1, 3)), BatchSize::SmallInput)
    });
    group.finish();
}

fn window_rank(c: &mut Criterion) {
    let family: Vec<BiSequence> =
        [int(2), int(3), ratio(5, 2)].into_iter().map(|j| BiSequence::geometric(j).unwrap()).collect();
    c.bench_function("window_rank_check S=6 W=20 weighted", |b| b.iter(|| window_rank_check(&family, 6, 20, true).unwrap()));
}

criterion_group!(benches, act_monomial, solve, window_rank);
criterion_main!(benches);
