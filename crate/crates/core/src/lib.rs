pub mod analysis;
pub mod config;
pub mod error;
pub mod filters;
pub mod group;
pub mod group_image;
pub mod hull;
pub mod ideal;
pub mod numerical;
pub mod operator;
pub mod semigroup;
pub mod table;
pub mod word;

/// Seed used whenever sampling is not seeded explicitly.
pub const DEFAULT_SEED: u64 = 20_240_917;
