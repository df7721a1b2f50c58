//! Census of the signed Petersen graphs: tables, verification and file I/O.

pub mod census;
pub mod error;
pub mod expected;
pub mod io;
pub mod products;
pub mod tables;
pub mod verify;

pub use census::{run_census, CensusReport, ClassCensus, ClassInvariants};
pub use error::{CensusError, Result};
pub use io::{load_signed_graph, parse_mask, parse_signed_graph};
pub use tables::{emit_table, Format, TableArtifact, TableId};
pub use verify::{verify_all, VerifyReport};
