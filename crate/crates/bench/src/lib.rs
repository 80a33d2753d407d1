//! Criterion benchmarks for `finsemi`; see `benches/`.
