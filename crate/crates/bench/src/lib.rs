//! Criterion benchmarks for the `doublespend` crate; see `benches/`.
