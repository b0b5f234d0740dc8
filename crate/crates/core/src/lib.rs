//! Word problem, geodesics and growth in the braid groups `B_n`.

pub mod census;
pub mod cli;
pub mod conway;
pub mod garside;
pub mod generator;
pub mod geodesy;
pub mod perm;
pub mod render;
pub mod samples;
pub mod winding;
pub mod word;
