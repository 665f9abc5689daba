//! Cell counts of the presentation complex of a finite-index kernel.

use super::CertifyError;

/// Cells of the complex covering the presentation 2-complex of
/// ⟨x, y | x³, y⁴, w²⟩ with deck group of order n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellData {
    pub image_order: i64,
    pub c0: i64,
    pub c1: i64,
    /// n(1/4 + 1/3 + 1/2)
    pub c2: i64,
    pub euler: i64,
    /// Cells from y⁴ counted as n/4.
    pub square_cells: i64,
    /// Cells from y⁴ counted as n/2, the order of the image of y being 2.
    pub square_cells_alt: i64,
    pub gate: bool,
    pub gate_alt: bool,
}

pub fn cell_data(image_order: i64) -> Result<CellData, CertifyError> {
    let n = image_order;
    if n <= 0 || n % 12 != 0 {
        return Err(CertifyError::Divisibility(n));
    }
    let (c0, c1, c2) = (n, 2 * n, n / 4 + n / 3 + n / 2);
    let euler = c0 - c1 + c2;
    let (sq, sq_alt) = (n / 4, n / 2);
    Ok(CellData {
        image_order: n,
        c0,
        c1,
        c2,
        euler,
        square_cells: sq,
        square_cells_alt: sq_alt,
        gate: sq > euler,
        gate_alt: sq_alt > euler,
    })
}
