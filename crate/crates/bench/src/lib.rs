//! Benchmark-only crate; see benches/recognition.rs.
