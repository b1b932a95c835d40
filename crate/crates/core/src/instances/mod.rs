//! Concrete bases: finite tables, rational intervals, and the point ideals
//! over them.

pub mod con;
pub mod document;
pub mod finite;
pub mod ideal;
pub mod interval;
