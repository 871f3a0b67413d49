use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use promise_hull::instances::gen_random_promise;
use promise_hull::{
    monotone_chain_upper, pareto_rand, rng_from_seed, upper_hull_det, upper_hull_rand, PredicateCounters, Schedule,
};

const SIZES: [usize; 2] = [1 << 16, 1 << 18];

// Thread pool against the sequential fallback on the same inputs.
fn sequential_vs_parallel(c: &mut Criterion) {
    let mut group = c.benchmark_group("det");
    group.sample_size(10);
    for n in SIZES {
        let inst = gen_random_promise(n, 0.1, 1).unwrap();
        group.throughput(Throughput::Elements(n as u64));
        for (label, sched) in [("sequential", Schedule::sequential()), ("parallel", Schedule::default())] {
            group.bench_with_input(BenchmarkId::new(label, n), &inst.seq, |b, p| {
                b.iter(|| upper_hull_det(p, &sched, &mut PredicateCounters::new()).unwrap())
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("rand");
    group.sample_size(10);
    for n in SIZES {
        let inst = gen_random_promise(n, 0.1, 2).unwrap();
        group.throughput(Throughput::Elements(n as u64));
        for (label, sched) in [("sequential", Schedule::sequential()), ("parallel", Schedule::default())] {
            group.bench_with_input(BenchmarkId::new(label, n), &inst.seq, |b, p| {
                b.iter(|| upper_hull_rand(p, &sched, &mut rng_from_seed(5), &mut PredicateCounters::new()).unwrap())
            });
        }
    }
    group.finish();
}

fn against_sorting(c: &mut Criterion) {
    let mut group = c.benchmark_group("upper_hull");
    group.sample_size(10);
    let sched = Schedule::sequential();
    for n in SIZES {
        let inst = gen_random_promise(n, 0.1, 3).unwrap();
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("monotone", n), &inst.seq, |b, p| {
            b.iter(|| monotone_chain_upper(p, &mut PredicateCounters::new()).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("det", n), &inst.seq, |b, p| {
            b.iter(|| upper_hull_det(p, &sched, &mut PredicateCounters::new()).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("pareto_rand", n), &inst.seq, |b, p| {
            b.iter(|| pareto_rand(p, &sched, &mut rng_from_seed(5), &mut PredicateCounters::new()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sequential_vs_parallel, against_sorting);
criterion_main!(benches);
