//! Planar embedding, triangulation and the level-and-cycle planar separator.

mod embed;
mod lt;
mod rotation;

use thiserror::Error;

pub use embed::{is_planar, planar_embed};
pub use lt::{
    bfs_levels, fundamental_cycle_separator, lt_separator, lt_separator_with, CycleInfo,
    CycleSeparator, LevelInfo, Levels, LtOptions, LtSeparator,
};
pub use rotation::RotationSystem;

pub(crate) use lt::separate_balanced;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PlanarError {
    #[error("graph is not planar")]
    NotPlanar,
    #[error("triangulation needs at least 3 vertices")]
    TooSmall,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("total vertex weight is zero")]
    ZeroTotalWeight,
    #[error("embedding failed validation")]
    InvalidEmbedding,
}
