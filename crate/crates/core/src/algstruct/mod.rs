//! Finite-dimensional algebras, coalgebras and bimodules as structure
//! constants, with exact axiom checkers.

mod algebra;
mod bimodule;
mod builders;
mod coalgebra;
mod report;

pub use algebra::{check_algebra, check_algebra_map, Algebra};
pub use bimodule::{check_bimodule, check_bimodule_map, Bimodule};
pub use builders::{
    augmentation, check_bialgebra, cyclic_group_bialgebra, dualize_algebra, dualize_coalgebra,
    group_algebra, grouplike_coalgebra, matrix_algebra, matrix_coalgebra,
};
pub use coalgebra::{check_coalgebra, check_coalgebra_map, Coalgebra};
pub use report::{CheckReport, Failure};
