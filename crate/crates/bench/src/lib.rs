//! Criterion benchmarks for `frieze-core`; see `benches/`.
