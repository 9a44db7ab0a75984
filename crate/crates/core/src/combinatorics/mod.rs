//! Tableau combinatorics and the γ-coefficients built on it.

mod gamma;
mod partition;
mod perm;
mod tableau;

pub use gamma::{
    addable_below, beta_symbol, chain_to, gamma_product, gamma_recursive, gamma_row_closed, gamma_step,
    removable_below, row_shape, w_lambda, w_lambda_factorization, BetaSymbol,
};
pub use partition::{multipartitions, Multipartition, Node, Partition};
pub use perm::{s_ij, w_ab, Perm};
pub use tableau::{is_standard_restrictions, is_standard_rows, residue_set, std_tableaux, StdTableau};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombError {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("a multipartition needs at least one component")]
    NoComponents,
    #[error("node ({0},{1}) lies outside the diagram")]
    NodeOutside(usize, usize),
    #[error("multipartitions of different size or number of components")]
    SizeMismatch,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("{what} {value} out of range (bound {bound})")]
    OutOfRange { what: &'static str, value: usize, bound: usize },
    #[error("not a standard tableau")]
    NotStandard,
}
