//! Criterion benchmarks for the triad search live under `benches/`.
