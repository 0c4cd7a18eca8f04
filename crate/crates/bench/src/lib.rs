//! Criterion benchmarks for pinchlab; see `benches/`.
