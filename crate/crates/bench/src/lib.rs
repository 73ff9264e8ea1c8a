//! Criterion benchmarks for `torus-core`; see `benches/invariants.rs`.
