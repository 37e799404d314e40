#include "shiftcalc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "shiftcalc/errors.hpp"

namespace shiftcalc {

double norm_inf(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double norm2(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec scaled(const Vec& a, double s) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RealMatrix::RealMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
    if (n <= 0) throw std::invalid_argument("RealMatrix: dimension must be positive");
}

RealMatrix::RealMatrix(int n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
    if (n <= 0) throw std::invalid_argument("RealMatrix: dimension must be positive");
    if (a_.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("RealMatrix: entry count does not match dimension");
    if (!all_finite())
        throw std::invalid_argument("RealMatrix: non-finite entry");
}

RealMatrix RealMatrix::identity(int n) {
    RealMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool RealMatrix::all_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](double x) { return std::isfinite(x); });
}

double RealMatrix::norm_inf() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += std::abs((*this)(i, j));
        m = std::max(m, s);
    }
    return m;
}

double RealMatrix::norm_one() const {
    double m = 0.0;
    for (int j = 0; j < n_; ++j) {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += std::abs((*this)(i, j));
        m = std::max(m, s);
    }
    return m;
}

double RealMatrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
}

RealMatrix& RealMatrix::operator+=(const RealMatrix& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("RealMatrix: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

RealMatrix& RealMatrix::operator-=(const RealMatrix& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("RealMatrix: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

RealMatrix& RealMatrix::operator*=(double s) {
    for (double& x : a_) x *= s;
    return *this;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("RealMatrix: dimension mismatch");
    const int n = a.n_;
    RealMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Vec operator*(const RealMatrix& a, const Vec& x) {
    if (x.size() != static_cast<size_t>(a.n_))
        throw std::invalid_argument("RealMatrix: vector dimension mismatch");
    Vec y(a.n_, 0.0);
    for (int i = 0; i < a.n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < a.n_; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

namespace {

// In-place LU with partial pivoting; returns pivot sign, fills perm.
// Throws numeric_failure when a pivot vanishes.
double lu_decompose(RealMatrix& m, std::vector<int>& perm) {
    const int n = m.dim();
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (std::abs(m(i, k)) > best) { best = std::abs(m(i, k)); piv = i; }
        }
        if (best == 0.0) throw numeric_failure("lu_decompose: singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            std::swap(perm[k], perm[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            m(i, k) /= m(k, k);
            const double f = m(i, k);
            for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return sign;
}

} // namespace

double determinant(const RealMatrix& a) {
    RealMatrix m = a;
    std::vector<int> perm;
    double sign;
    try {
        sign = lu_decompose(m, perm);
    } catch (const numeric_failure&) {
        return 0.0;
    }
    double d = sign;
    for (int i = 0; i < m.dim(); ++i) d *= m(i, i);
    return d;
}

RealMatrix lu_solve(const RealMatrix& a, const RealMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("lu_solve: dimension mismatch");
    const int n = a.dim();
    RealMatrix lu = a;
    std::vector<int> perm;
    lu_decompose(lu, perm);

    RealMatrix x(n);
    Vec col(n), y(n);
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) col[i] = b(perm[i], c);
        // forward substitution
        for (int i = 0; i < n; ++i) {
            double s = col[i];
            for (int j = 0; j < i; ++j) s -= lu(i, j) * y[j];
            y[i] = s;
        }
        // back substitution
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            for (int j = i + 1; j < n; ++j) s -= lu(i, j) * x(j, c);
            x(i, c) = s / lu(i, i);
        }
    }
    return x;
}

RealMatrix parse_matrix_text(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<double> row;
        double v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) {
            std::string tok;
            ls.clear();
            ls >> tok;
            throw std::invalid_argument("matrix text: bad token '" + tok + "' on line " +
                                        std::to_string(lineno));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix text: no rows");
    const size_t n = rows.size();
    std::vector<double> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw std::invalid_argument("matrix text: matrix must be square; got row of length " +
                                        std::to_string(row.size()) + " in an " +
                                        std::to_string(n) + "-row matrix");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return RealMatrix(static_cast<int>(n), std::move(entries));
}

RealMatrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open matrix file: " + path);
    return parse_matrix_text(f);
}

void write_matrix_text(std::ostream& out, const RealMatrix& m) {
    out.precision(17);
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

} // namespace shiftcalc
