//! Exact verification of complex product, hypercomplex and HKT structures on
//! Lie algebras, and of their connections and holonomy.

pub mod catalog;
pub mod connections;
pub mod hkt;
pub mod holonomy;
pub mod liealg;
pub mod scalars;
pub mod sl3proof;
pub mod structures;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/structures.md")]
    mod structures {}
    #[doc = include_str!("../../../book/src/holonomy.md")]
    mod holonomy {}
    #[doc = include_str!("../../../book/src/hkt.md")]
    mod hkt {}
    #[doc = include_str!("../../../book/src/sl3proof.md")]
    mod sl3proof {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
