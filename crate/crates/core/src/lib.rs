//! Tournament transitivity of graphs: exact search, closed forms, and
//! polynomial algorithms for trees and bipartite chain graphs.

pub mod bcg;
pub mod closed_forms;
pub mod corpus;
pub mod error;
pub mod family;
pub mod gadget;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod report;
pub mod tree;

pub use error::{Error, Result};
pub use family::GraphFamily;
pub use graph::Graph;
pub use partition::OrderedPartition;
pub use report::{Method, SolveReport};
