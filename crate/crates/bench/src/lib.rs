//! Criterion benchmarks for punctile; see `benches/`.
