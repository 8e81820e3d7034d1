//! Criterion benchmarks for the exact engine; see `benches/exact.rs`.
