//! Combinatorial group theory: free words, presentations, normal forms in
//! free products of cyclic groups, coset enumeration, low-index subgroups,
//! Reidemeister–Schreier rewriting, abelianization and Stallings foldings.

use core::fmt;

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{snf, AbelianGroup, IntegerMatrix};

mod coset;
mod free_product;
mod free_word;
mod low_index;
mod presentation;
mod reidemeister;
mod stallings;

pub use coset::{todd_coxeter, CosetTable, DEFAULT_MAX_COSETS};
pub use free_product::{equal_in_free_product, free_product_normal_form, NormalForm};
pub use free_word::{column_of, generator_of, letter, letter_of_column, FreeWord, Letter};
pub use low_index::low_index_subgroups;
pub use presentation::Presentation;
pub use reidemeister::{prune_presentation, reidemeister_schreier, schreier_presentation};
pub use stallings::{f2_witness_check, f2_witness_search, StallingsGraph};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupError {
    Parse(String),
    /// More than this many cosets were needed at once. Not a proof that
    /// the index is infinite.
    CosetLimit(usize),
    InconsistentTable,
    /// The low-index search visited more than this many nodes.
    SearchLimit(usize),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::Parse(m) => write!(f, "parse error: {}", m),
            GroupError::CosetLimit(n) => write!(f, "coset limit of {} exceeded (index may still be finite)", n),
            GroupError::InconsistentTable => f.write_str("inconsistent coset table"),
            GroupError::SearchLimit(n) => write!(f, "search limit of {} nodes exceeded", n),
        }
    }
}

impl core::error::Error for GroupError {}

/// Relation matrix of a presentation: one row of exponent sums per relator.
pub fn relation_matrix(p: &Presentation) -> IntegerMatrix {
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums(p.ngens())).collect();
    IntegerMatrix::from_rows(p.ngens(), &rows)
}

/// Abelianization via the Smith normal form of the relation matrix.
pub fn abelianization(p: &Presentation) -> AbelianGroup {
    snf(&relation_matrix(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ab(s: &str) -> AbelianGroup {
        abelianization(&s.parse().unwrap())
    }

    #[test]
    fn abelianizations() {
        let g = ab("gens: x, y; rels: x^3, y^4");
        assert_eq!(g.free_rank, 0);
        assert_eq!(g.order(), Some(BigInt::from(12)));
        let g = ab("gens: a, b; rels:");
        assert_eq!(g.free_rank, 2);
        assert!(g.torsion.is_empty());
        let g = ab("gens: x, y; rels: x^3, y^4, (x*y)^2");
        assert_eq!(g.free_rank, 0);
        assert_eq!(g.torsion, alloc::vec![BigInt::from(2)]);
    }
}
