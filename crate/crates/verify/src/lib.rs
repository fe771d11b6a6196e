//! Holds the `acceptance` test target. Run it with
//! `cargo test -p rankpath-verify --test acceptance -- --nocapture`.
