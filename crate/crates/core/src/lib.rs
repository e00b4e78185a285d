//! 4-cycle-free `p`-fold covers of Cartesian powers of `p`-cycles, built as
//! Cayley graphs of the extraspecial `p`-groups, together with the tools to
//! certify them: covering-map verification, short-cycle searches, gain
//! graphs, twisted adjacency spectra and interlacing degree bounds.

pub mod certify;
pub mod convolution;
pub mod cover;
pub mod error;
pub mod gain;
pub mod graph;
pub mod groups;
pub mod modular;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, VertexCodec};
pub use groups::GroupSign;
pub use modular::{Prime, ZpScalar, ZpVector};
