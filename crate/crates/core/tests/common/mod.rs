#![allow(dead_code)]

use std::path::PathBuf;

use monores::io::{parse_ideal, resolution_from_json};
use monores::{FreeResolution, MonomialIdeal};

pub const FIXTURES: [&str; 7] = [
    "example_A",
    "example_B",
    "example_C",
    "msquared",
    "example_J",
    "nonprimary",
    "koszul",
];

/// The six fixtures other than the Koszul complex.
pub const DISPLAYED: [&str; 6] = [
    "example_A",
    "example_B",
    "example_C",
    "msquared",
    "example_J",
    "nonprimary",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture_ideal(name: &str) -> MonomialIdeal {
    let text = std::fs::read_to_string(fixture_path(&format!("{name}.ideal"))).unwrap();
    parse_ideal(&text, true).unwrap()
}

pub fn fixture_resolution(name: &str) -> FreeResolution {
    let text = std::fs::read_to_string(fixture_path(&format!("{name}.json"))).unwrap();
    resolution_from_json(&text).unwrap()
}

pub fn resolve_fixture(name: &str) -> FreeResolution {
    monores::resolve(&fixture_ideal(name)).unwrap()
}
