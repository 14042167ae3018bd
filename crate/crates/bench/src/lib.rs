//! Empty by design; this package only carries the benchmark targets.
