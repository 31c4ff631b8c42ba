//! Instance backends: the two computed examples and the table loader.

pub mod duoidal;
pub mod span_cospan;
pub mod table;
