//! Text formats: graph6, edge lists and JSON witness certificates.

pub mod certificate;
pub mod edgelist;
pub mod graph6;

pub use certificate::{CertificateColoring, CertificateError, WitnessCertificate};
pub use edgelist::{format_edgelist, parse_edgelist, EdgeListError};
pub use graph6::{format_graph6, parse_graph6, Graph6Error};
