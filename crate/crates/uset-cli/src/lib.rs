//! Scenario file formats, the worked-example regression corpus, and report
//! emission behind the `uset` binary.

pub mod corpus;
pub mod report;
pub mod scenario;
