#include "shiftcalc/jordan.hpp"

#include <cmath>
#include <stdexcept>

#include "shiftcalc/expm.hpp"

namespace shiftcalc {

RealMatrix rotation_block(double alpha, double beta) {
    RealMatrix m(2);
    m(0, 0) = alpha;
    m(0, 1) = -beta;
    m(1, 0) = beta;
    m(1, 1) = alpha;
    return m;
}

RealMatrix jordan_cell(const RealMatrix& base, int p) {
    if (p < 1) throw std::invalid_argument("jordan_cell: p must be >= 1");
    const int k = base.dim();
    RealMatrix m(p * k);
    for (int b = 0; b < p; ++b) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m(b * k + i, b * k + j) = base(i, j);
        if (b > 0)
            for (int i = 0; i < k; ++i) m(b * k + i, (b - 1) * k + i) = 1.0;
    }
    return m;
}

int JordanBlueprint::dimension() const {
    int n = 0;
    for (const auto& c : cells) n += c.complex_pair ? 2 * c.size : c.size;
    return n;
}

void JordanBlueprint::validate() const {
    if (cells.empty()) throw std::invalid_argument("JordanBlueprint: no cells");
    for (const auto& c : cells) {
        if (c.size < 1) throw std::invalid_argument("JordanBlueprint: cell size must be >= 1");
        if (c.complex_pair && c.im == 0.0)
            throw std::invalid_argument("JordanBlueprint: complex cell with zero imaginary part");
        if (!std::isfinite(c.re) || !std::isfinite(c.im))
            throw std::invalid_argument("JordanBlueprint: non-finite eigenvalue");
    }
}

namespace {

RealMatrix cell_base(const JordanCellSpec& c) {
    if (c.complex_pair) return rotation_block(c.re, c.im);
    RealMatrix m(1);
    m(0, 0) = c.re;
    return m;
}

void place_block(RealMatrix& dst, const RealMatrix& blk, int offset) {
    for (int i = 0; i < blk.dim(); ++i)
        for (int j = 0; j < blk.dim(); ++j) dst(offset + i, offset + j) = blk(i, j);
}

// e^{base t} for a scalar or a rotation-form 2x2 block, analytically;
// general bases go through mat_exp.
RealMatrix base_exp(const RealMatrix& base, double t) {
    const int k = base.dim();
    if (k == 1) {
        RealMatrix e(1);
        e(0, 0) = std::exp(base(0, 0) * t);
        return e;
    }
    if (k == 2 && base(0, 0) == base(1, 1) && base(0, 1) == -base(1, 0)) {
        const double a = base(0, 0);
        const double b = base(1, 0);
        const double ea = std::exp(a * t);
        RealMatrix e(2);
        e(0, 0) = ea * std::cos(b * t);
        e(0, 1) = -ea * std::sin(b * t);
        e(1, 0) = ea * std::sin(b * t);
        e(1, 1) = ea * std::cos(b * t);
        return e;
    }
    return mat_exp(base * t);
}

} // namespace

RealMatrix assemble_real_jordan(const JordanBlueprint& bp) {
    bp.validate();
    RealMatrix m(bp.dimension());
    int offset = 0;
    for (const auto& c : bp.cells) {
        RealMatrix cell = jordan_cell(cell_base(c), c.size);
        place_block(m, cell, offset);
        offset += cell.dim();
    }
    return m;
}

RealMatrix jordan_cell_exp(const RealMatrix& base, int p, double t) {
    if (p < 1) throw std::invalid_argument("jordan_cell_exp: p must be >= 1");
    const int k = base.dim();
    const RealMatrix e = base_exp(base, t);
    RealMatrix m(p * k);
    double coeff = 1.0; // t^d / d!
    for (int d = 0; d < p; ++d) {
        if (d > 0) coeff *= t / d;
        for (int b = d; b < p; ++b)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m(b * k + i, (b - d) * k + j) = coeff * e(i, j);
    }
    return m;
}

RealMatrix blueprint_exp(const JordanBlueprint& bp, double t) {
    bp.validate();
    RealMatrix m(bp.dimension());
    int offset = 0;
    for (const auto& c : bp.cells) {
        RealMatrix blk = jordan_cell_exp(cell_base(c), c.size, t);
        place_block(m, blk, offset);
        offset += blk.dim();
    }
    return m;
}

} // namespace shiftcalc
