//! File formats, renderings and the command-line front end for
//! [`twocolor_core`].
//!
//! * [`json`]: JSON forms of configurations, conditions, certificates,
//!   toast, partitions and verifier reports.
//! * [`render`]: PGM and ASCII images.
//! * [`spec`]: the per-command run specifications.
//! * [`commands`]: `build-mt`, `build-gp`, `verify`, `toast`, `markers`.

pub mod commands;
pub mod json;
pub mod render;
pub mod spec;

pub use twocolor_core as core;
