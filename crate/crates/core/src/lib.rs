//! Balanced vertex separators for connected planar graphs with few more
//! edges than vertices.

pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pipeline;
pub mod planar;
pub mod tree;
