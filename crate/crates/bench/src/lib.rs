//! Shared setup for the criterion benchmarks; no library surface of its own.
