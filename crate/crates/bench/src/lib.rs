//! Criterion benchmarks for kgraph-core live under `benches/`.
