//! Independent reference computations for `picard-core`, and the acceptance
//! checks built on them.

pub mod criteria;
pub mod oracle;
