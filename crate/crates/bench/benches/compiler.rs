use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use fqc::fermion::parse_operator;
use fqc::oracle::{expm_antihermitian, matrix_of_circuit, matrix_of_fermion, matrix_of_pauli_sum};
use fqc::pauli::{jw_map, sum_multiply};
use fqc::synth::compile_generator_evolution;
use fqc_bench::{
    double_excitation_generator, double_excitation_image, double_excitation_operator,
    long_range_hop,
};
use num_complex::Complex64;

fn bench_jw_map(c: &mut Criterion) {
    let mut group = c.benchmark_group("jw_map");
    let single = parse_operator("1^ 0", 4).unwrap();
    group.bench_function("single_excitation_n4", |b| {
        b.iter(|| jw_map(black_box(&single), 4).unwrap())
    });
    let double = double_excitation_operator();
    group.bench_function("double_excitation_n4", |b| {
        b.iter(|| jw_map(black_box(&double), 4).unwrap())
    });
    let hop = long_range_hop(10);
    group.bench_function("long_range_hop_n10", |b| {
        b.iter(|| jw_map(black_box(&hop), 10).unwrap())
    });
    group.finish();
}

fn bench_pauli_algebra(c: &mut Criterion) {
    let image = double_excitation_image();
    c.bench_function("sum_multiply_8x8_terms", |b| {
        b.iter(|| sum_multiply(black_box(&image), black_box(&image)).unwrap())
    });
}

fn bench_synthesis(c: &mut Criterion) {
    let image = double_excitation_image();
    c.bench_function("compile_double_generator", |b| {
        b.iter(|| compile_generator_evolution(black_box(&image), 0.3).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    let generator = double_excitation_generator();
    group.bench_function("matrix_of_fermion_n4", |b| {
        b.iter(|| matrix_of_fermion(black_box(&generator), 4).unwrap())
    });
    let image = double_excitation_image();
    group.bench_function("matrix_of_pauli_sum_n4", |b| {
        b.iter(|| matrix_of_pauli_sum(black_box(&image)).unwrap())
    });
    let circuit = compile_generator_evolution(&image, 0.3).unwrap();
    group.bench_function("matrix_of_circuit_120_gates_n4", |b| {
        b.iter(|| matrix_of_circuit(black_box(&circuit)).unwrap())
    });
    let m4 = matrix_of_fermion(&generator, 4)
        .unwrap()
        .scale(Complex64::new(0.3, 0.0));
    group.bench_function("expm_n4", |b| {
        b.iter(|| expm_antihermitian(black_box(&m4)).unwrap())
    });
    let hop6 = long_range_hop(6);
    let m6 = matrix_of_fermion(&hop6, 6)
        .unwrap()
        .scale(Complex64::new(0.3, 0.0));
    group.bench_function("expm_n6", |b| {
        b.iter(|| expm_antihermitian(black_box(&m6)).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_jw_map,
    bench_pauli_algebra,
    bench_synthesis,
    bench_oracle
);
criterion_main!(benches);
