use criterion::{black_box, criterion_group, criterion_main, Criterion};
use kgraph_core::builders::{omega, torus2};
use kgraph_core::categorical::{cat_homology, CatHomologyOptions};
use kgraph_core::chain_maps::verify_chain_map_identities;
use kgraph_core::cubical::cubical_homology;
use kgraph_core::linalg::{snf, SparseIntMatrix};
use kgraph_core::{Coefficients, Degree};

fn pseudo_random_matrix(n: usize) -> SparseIntMatrix {
    let mut m = SparseIntMatrix::new(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = ((i * 7 + j * 13 + i * j) % 11) as i64 - 5;
            if (i + 2 * j) % 3 != 0 {
                m.add_to(i, j, v);
            }
        }
    }
    m
}

fn bench_snf(c: &mut Criterion) {
    for n in [10, 25, 40] {
        let m = pseudo_random_matrix(n);
        c.bench_function(&format!("snf {n}x{n}"), |b| b.iter(|| snf(black_box(&m))));
    }
}

fn bench_cubical(c: &mut Criterion) {
    let g = omega(&Degree::from_coords(vec![2, 2]));
    c.bench_function("cubical H1 omega(2,2)", |b| {
        b.iter(|| cubical_homology(black_box(&g), 1, Coefficients::Z, false).unwrap())
    });
    let g = omega(&Degree::from_coords(vec![1, 1, 1]));
    c.bench_function("cubical H2 omega(1,1,1) mod 6", |b| {
        b.iter(|| cubical_homology(black_box(&g), 2, Coefficients::Zmod { modulus: 6 }, false).unwrap())
    });
}

fn bench_categorical(c: &mut Criterion) {
    let g = omega(&Degree::from_coords(vec![1, 1]));
    let opts = CatHomologyOptions::new(Degree::from_coords(vec![1, 1]));
    c.bench_function("categorical H1 omega(1,1)", |b| {
        b.iter(|| cat_homology(black_box(&g), 1, Coefficients::Z, &opts).unwrap())
    });
}

fn bench_verify(c: &mut Criterion) {
    let g = torus2();
    let bound = Degree::from_coords(vec![2, 2]);
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("torus2 bound 2,2", |b| b.iter(|| verify_chain_map_identities(black_box(&g), &bound)));
    group.finish();
}

criterion_group!(benches, bench_snf, bench_cubical, bench_categorical, bench_verify);
criterion_main!(benches);
