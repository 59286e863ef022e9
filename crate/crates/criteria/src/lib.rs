//! Host crate for the acceptance report; see tests/acceptance.rs.
