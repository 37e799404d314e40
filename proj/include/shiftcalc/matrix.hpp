#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace shiftcalc {

using Vec = std::vector<double>;

double norm_inf(const Vec& v);
double norm2(const Vec& v);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double s);
double dot(const Vec& a, const Vec& b);

/// Dense square real matrix, row-major. All entries are required to be
/// finite; constructors throw std::invalid_argument otherwise.
class RealMatrix {
public:
    RealMatrix() = default;
    explicit RealMatrix(int n);                       // zero matrix
    RealMatrix(int n, std::vector<double> entries);   // row-major, size n*n

    static RealMatrix identity(int n);

    int dim() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const { return a_; }

    bool all_finite() const;
    double norm_inf() const;   // max row sum of |a_ij|
    double norm_one() const;   // max column sum
    double trace() const;

    RealMatrix& operator+=(const RealMatrix& rhs);
    RealMatrix& operator-=(const RealMatrix& rhs);
    RealMatrix& operator*=(double s);

    friend RealMatrix operator+(RealMatrix a, const RealMatrix& b) { return a += b; }
    friend RealMatrix operator-(RealMatrix a, const RealMatrix& b) { return a -= b; }
    friend RealMatrix operator*(RealMatrix a, double s) { return a *= s; }
    friend RealMatrix operator*(double s, RealMatrix a) { return a *= s; }

    friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
    friend Vec operator*(const RealMatrix& a, const Vec& x);

    friend bool operator==(const RealMatrix& a, const RealMatrix& b) = default;

private:
    int n_ = 0;
    std::vector<double> a_;
};

/// max |a_ij − b_ij|
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

/// Determinant via LU with partial pivoting.
double determinant(const RealMatrix& a);

/// Solve A X = B for X (B square, same dimension). Throws numeric_failure on
/// a vanishing pivot.
RealMatrix lu_solve(const RealMatrix& a, const RealMatrix& b);

/// Matrix text format: one row per line, whitespace-separated decimal
/// entries; blank lines and lines starting with '#' are ignored.
RealMatrix parse_matrix_text(std::istream& in);
RealMatrix read_matrix_file(const std::string& path);
void write_matrix_text(std::ostream& out, const RealMatrix& m);

} // namespace shiftcalc
