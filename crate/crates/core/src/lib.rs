//! Binomial edge ideals of closed graphs: Rees algebra relations, the
//! linear strand of powers, and a Koszul-homology Betti oracle that checks
//! the strand formula.

pub mod algebra;
pub mod cli;
pub mod graph;
pub mod ideal;
pub mod oracle;
pub mod rees;
pub mod strand;
