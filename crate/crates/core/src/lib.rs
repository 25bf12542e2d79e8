pub mod commands;
pub mod coxeter;
pub mod decomp;
pub mod fixtures;
pub mod frgraph;
pub mod graph;
pub mod io;
pub mod simplicial;
pub mod subword;
