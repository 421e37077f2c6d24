pub mod bisect;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod geom;
pub mod io;
pub mod position;
pub mod svg;
