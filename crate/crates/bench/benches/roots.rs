//! Benchmarks for exact root isolation, root merging across a family,
//! and the univariate component-counting oracle built on them.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use signbounds::{
    count_univariate, isolate_roots, merge_roots, Int, Rat, SparsePolynomial,
};

/// X - c as a one-variable polynomial.
fn shifted_var(c: i64) -> SparsePolynomial {
    let x = SparsePolynomial::var(1, 0).unwrap();
    &x - &SparsePolynomial::constant(1, Rat::from(Int::from(c)))
}

/// X^2 - c, irreducible for non-square positive c.
fn quadratic(c: i64) -> SparsePolynomial {
    let x = SparsePolynomial::var(1, 0).unwrap();
    &(&x * &x) - &SparsePolynomial::constant(1, Rat::from(Int::from(c)))
}

/// Degree 12 with four rational and eight irrational roots.
fn degree_12_mixed() -> SparsePolynomial {
    let mut p = SparsePolynomial::constant(1, Rat::from(Int::from(1)));
    for c in 1..=4 {
        p = &p * &shifted_var(c);
    }
    for c in [2, 3, 5, 7] {
        p = &p * &quadratic(c);
    }
    p
}

fn bench_isolate(c: &mut Criterion) {
    let p = degree_12_mixed();
    c.bench_function("isolate_roots degree 12 mixed", |b| {
        b.iter(|| isolate_roots(black_box(&p)).unwrap())
    });
}

fn bench_merge(c: &mut Criterion) {
    let family = vec![
        &(&shifted_var(1) * &shifted_var(2)) * &quadratic(2),
        &shifted_var(2) * &quadratic(3),
        quadratic(4),
    ];
    c.bench_function("merge_roots 3 polynomials", |b| {
        b.iter(|| merge_roots(black_box(&family)).unwrap())
    });
}

fn bench_count_univariate(c: &mut Criterion) {
    let family =
        vec![&quadratic(2) * &quadratic(3), shifted_var(0), &shifted_var(-1) * &shifted_var(1)];
    let variety = &shifted_var(-2) * &(&shifted_var(0) * &shifted_var(2));
    c.bench_function("count_univariate 3 polynomials on a cubic variety", |b| {
        b.iter(|| count_univariate(black_box(&family), Some(&variety)).unwrap())
    });
}

criterion_group!(benches, bench_isolate, bench_merge, bench_count_univariate);
criterion_main!(benches);
