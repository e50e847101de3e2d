#pragma once

#include <vector>

#include "pforge/subst.hpp"

namespace pforge {

// Dense matrix with RatFunc entries, row-major. Desk scale (<= 16x16 here),
// so density beats cleverness.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);
    static Matrix identity(int n);
    static Matrix from_rows(std::vector<std::vector<RatFunc>> rows);
    static Matrix diagonal(const std::vector<RatFunc>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    RatFunc& at(int i, int j);
    const RatFunc& at(int i, int j) const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const RatFunc& c) const;
    Matrix transposed() const;

    Matrix block(int i0, int j0, int r, int c) const;
    void set_block(int i0, int j0, const Matrix& m);
    static Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c,
                           const Matrix& d);
    // delete one row and one column
    Matrix minor_matrix(int row, int col) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Matrix promoted(int p) const;
    int field_p() const;

private:
    int rows_, cols_;
    std::vector<RatFunc> e_;
    static void require_same_shape(const Matrix& a, const Matrix& b);
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix substitute(const Matrix& m, const Substitution& s);

std::vector<RatFunc> row_times_matrix(const std::vector<RatFunc>& v,
                                      const Matrix& m);
std::vector<RatFunc> matrix_times_col(const Matrix& m,
                                      const std::vector<RatFunc>& v);

// Exact determinant: clears row denominators, runs Bareiss fraction-free
// elimination over polynomials, divides the cleared factor back out.
RatFunc det_fraction_free(const Matrix& a);

// Exact inverse by Gauss-Jordan over the rational function field; throws
// MathError on singular input.
Matrix mat_inverse(const Matrix& a);

// Polynomial in one variable with RatFunc coefficients (degree-indexed,
// low to high). Carries char_poly results.
struct UnivarPoly {
    Variable var;
    std::vector<RatFunc> coeffs;

    int degree() const;
    const RatFunc& coeff(size_t k) const;
    RatFunc to_ratfunc() const;
    // evaluate at a square matrix (var -> m); used by Cayley-Hamilton checks
    Matrix eval_at(const Matrix& m) const;
    bool operator==(const UnivarPoly& o) const;
};

// det(x*I - a); rejects a variable that already occurs in the entries.
UnivarPoly char_poly(const Matrix& a, Variable x);

}  // namespace pforge
