#pragma once

#include <vector>

#include "shiftcalc/matrix.hpp"

namespace shiftcalc {

/// 2x2 block [[alpha, -beta], [beta, alpha]] representing alpha + i*beta.
RealMatrix rotation_block(double alpha, double beta);

/// Block lower-bidiagonal cell: `base` repeated p times on the diagonal with
/// identity blocks immediately below. For a k x k base the result is pk x pk.
/// Note the identity blocks sit BELOW the diagonal; the transpose convention
/// is equally common elsewhere, but spectra and exponential norms are
/// unaffected by the choice.
RealMatrix jordan_cell(const RealMatrix& base, int p);

/// One cell of a real Jordan layout: either a real eigenvalue with a cell of
/// `size` scalar blocks, or a complex pair re +- i*im (im != 0) with `size`
/// rotation blocks.
struct JordanCellSpec {
    bool complex_pair = false;
    double re = 0.0;
    double im = 0.0; // must be nonzero when complex_pair
    int size = 1;    // p: number of diagonal blocks in the cell
};

/// Ordered list of cells; total dimension is the sum of real cell sizes plus
/// twice the sum of complex cell sizes.
struct JordanBlueprint {
    std::vector<JordanCellSpec> cells;

    int dimension() const;
    void validate() const; // throws std::invalid_argument
};

/// Block-diagonal matrix assembled from the blueprint's cells in order.
RealMatrix assemble_real_jordan(const JordanBlueprint& bp);

/// Closed-form exponential of jordan_cell(base, p) * t: block lower
/// triangular with t^j / j! * e^{base t} on the j-th subdiagonal. Scalar and
/// rotation-form bases use analytic exponentials; other bases fall back to
/// mat_exp for the diagonal block.
RealMatrix jordan_cell_exp(const RealMatrix& base, int p, double t);

/// Exponential of the blueprint matrix times t, assembled cell by cell from
/// jordan_cell_exp.
RealMatrix blueprint_exp(const JordanBlueprint& bp, double t);

} // namespace shiftcalc
