//! Files shipped with the crate: P₃ and θ, small standard quandles, the
//! diagrams used in tests, and a sample family movie.

use crate::error::{Error, Result};

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        /// `(file name, contents)` of every bundled asset.
        pub const ASSETS: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../assets/", $name)))),*
        ];
    };
}

bundle!(
    "broken.json",
    "figure_eight.json",
    "hopf.json",
    "hopf_r2.json",
    "movie_k0_m2.json",
    "p3.json",
    "r3.json",
    "r3_id.json",
    "r3_left.json",
    "r3_right.json",
    "t2_id.json",
    "theta.json",
    "trefoil.json",
    "trefoil_r1.json",
    "unknot.json",
    "zero.json",
);

/// Looks up an asset by file name, with or without the `.json` suffix.
pub fn bundled(name: &str) -> Option<&'static str> {
    let name = name.strip_prefix("assets/").unwrap_or(name);
    ASSETS
        .iter()
        .find(|(file, _)| *file == name || file.strip_suffix(".json") == Some(name))
        .map(|(_, text)| *text)
}

pub fn require(name: &str) -> Result<&'static str> {
    bundled(name).ok_or_else(|| Error::Malformed(format!("no bundled asset named {name}")))
}
