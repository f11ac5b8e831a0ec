pub mod cli;
pub mod cyclo;
pub mod error;
pub mod exactnum;
pub mod qstirling;
pub mod report;
pub mod seqlib;
pub mod zeta;

pub use error::{Error, Result};
