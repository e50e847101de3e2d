#include "pforge/matrix.hpp"

namespace pforge {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw MathError("negative matrix dimension");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols),
              RatFunc());
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
    return m;
}

Matrix Matrix::from_rows(std::vector<std::vector<RatFunc>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw MathError("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

Matrix Matrix::diagonal(const std::vector<RatFunc>& d) {
    int n = static_cast<int>(d.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = d[i];
    return m;
}

RatFunc& Matrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw MathError("matrix index out of range");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

const RatFunc& Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw MathError("matrix index out of range");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

void Matrix::require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw MathError("matrix dimension mismatch");
}

Matrix Matrix::operator-() const {
    Matrix r(*this);
    for (auto& x : r.e_) x = -x;
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix::require_same_shape(a, b);
    Matrix r(a);
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix::require_same_shape(a, b);
    Matrix r(a);
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw MathError("matrix dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            RatFuncSum acc;
            for (int k = 0; k < a.cols_; ++k)
                acc.add_product(a.at(i, k), b.at(k, j));
            r.at(i, j) = acc.value();
        }
    return r;
}

Matrix Matrix::scaled(const RatFunc& c) const {
    Matrix r(*this);
    for (auto& x : r.e_) x = x * c;
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::block(int i0, int j0, int r, int c) const {
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
}

void Matrix::set_block(int i0, int j0, const Matrix& m) {
    for (int i = 0; i < m.rows_; ++i)
        for (int j = 0; j < m.cols_; ++j) at(i0 + i, j0 + j) = m.at(i, j);
}

Matrix Matrix::block2x2(const Matrix& a, const Matrix& b, const Matrix& c,
                        const Matrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
        b.cols() != d.cols())
        throw MathError("incompatible blocks");
    Matrix m(a.rows() + c.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    m.set_block(a.rows(), 0, c);
    m.set_block(a.rows(), a.cols(), d);
    return m;
}

Matrix Matrix::minor_matrix(int row, int col) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (int i = 0, ii = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (int j = 0, jj = 0; j < cols_; ++j) {
            if (j == col) continue;
            m.at(ii, jj++) = at(i, j);
        }
        ++ii;
    }
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::promoted(int p) const {
    Matrix r(*this);
    for (auto& x : r.e_) x = x.promoted(p);
    return r;
}

int Matrix::field_p() const {
    for (const auto& x : e_)
        if (x.field_p() != 0) return x.field_p();
    return 0;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) =
                        a.at(i, j) * b.at(k, l);
    return r;
}

Matrix substitute(const Matrix& m, const Substitution& s) {
    Matrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = substitute(m.at(i, j), s);
    return r;
}

std::vector<RatFunc> row_times_matrix(const std::vector<RatFunc>& v,
                                      const Matrix& m) {
    if (static_cast<int>(v.size()) != m.rows())
        throw MathError("vector/matrix dimension mismatch");
    std::vector<RatFunc> r(static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) {
        RatFuncSum acc;
        for (int i = 0; i < m.rows(); ++i)
            acc.add_product(v[static_cast<size_t>(i)], m.at(i, j));
        r[static_cast<size_t>(j)] = acc.value();
    }
    return r;
}

std::vector<RatFunc> matrix_times_col(const Matrix& m,
                                      const std::vector<RatFunc>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw MathError("vector/matrix dimension mismatch");
    std::vector<RatFunc> r(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        RatFuncSum acc;
        for (int j = 0; j < m.cols(); ++j)
            acc.add_product(m.at(i, j), v[static_cast<size_t>(j)]);
        r[static_cast<size_t>(i)] = acc.value();
    }
    return r;
}

RatFunc det_fraction_free(const Matrix& a) {
    if (!a.is_square()) throw MathError("determinant of non-square matrix");
    int n = a.rows();
    if (n == 0) return RatFunc(1);
    int field = a.field_p();
    Poly one(1);
    if (field) one = one.promoted(field);

    // clear denominators row by row
    std::vector<std::vector<Poly>> m(static_cast<size_t>(n));
    Poly cleared = one;
    for (int i = 0; i < n; ++i) {
        Poly d = one;
        for (int j = 0; j < n; ++j) d = poly_lcm(d, a.at(i, j).den());
        auto& row = m[static_cast<size_t>(i)];
        row.resize(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            const RatFunc& x = a.at(i, j);
            row[static_cast<size_t>(j)] = x.num() * d.exact_div(x.den());
        }
        cleared = cleared * d;
    }

    // Bareiss: every division below is exact over the polynomial ring
    Poly prev = one;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return RatFunc();
        if (piv != k) {
            std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(k)]);
            sign = -sign;
        }
        const Poly& pk = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly t = pk * m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                         m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                             m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    t.is_zero() ? t : t.exact_div(prev);
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = Poly();
        }
        prev = pk;
    }
    Poly det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    if (sign < 0) det = -det;
    return RatFunc(std::move(det), std::move(cleared));
}

Matrix mat_inverse(const Matrix& a) {
    if (!a.is_square()) throw MathError("inverse of non-square matrix");
    int n = a.rows();
    Matrix w(a);
    Matrix inv = Matrix::identity(n);
    if (int p = a.field_p(); p != 0) inv = inv.promoted(p);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!w.at(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw MathError("singular matrix");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(k, j));
                std::swap(inv.at(piv, j), inv.at(k, j));
            }
        RatFunc s = w.at(k, k).inverse();
        for (int j = 0; j < n; ++j) {
            w.at(k, j) = w.at(k, j) * s;
            inv.at(k, j) = inv.at(k, j) * s;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || w.at(i, k).is_zero()) continue;
            RatFunc f = w.at(i, k);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = w.at(i, j) - f * w.at(k, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(k, j);
            }
        }
    }
    return inv;
}

int UnivarPoly::degree() const {
    for (size_t k = coeffs.size(); k > 0; --k)
        if (!coeffs[k - 1].is_zero()) return static_cast<int>(k - 1);
    return -1;
}

const RatFunc& UnivarPoly::coeff(size_t k) const {
    static const RatFunc zero;
    return k < coeffs.size() ? coeffs[k] : zero;
}

RatFunc UnivarPoly::to_ratfunc() const {
    RatFunc acc;
    RatFunc x = RatFunc::variable(var);
    for (size_t k = 0; k < coeffs.size(); ++k)
        acc += coeffs[k] * x.pow(static_cast<long>(k));
    return acc;
}

Matrix UnivarPoly::eval_at(const Matrix& m) const {
    if (!m.is_square()) throw MathError("evaluation needs a square matrix");
    Matrix acc(m.rows(), m.cols());
    Matrix p = Matrix::identity(m.rows());
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) acc = acc + p.scaled(coeffs[k]);
        if (k + 1 < coeffs.size()) p = p * m;
    }
    return acc;
}

bool UnivarPoly::operator==(const UnivarPoly& o) const {
    if (var != o.var) return false;
    size_t n = std::max(coeffs.size(), o.coeffs.size());
    for (size_t k = 0; k < n; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

UnivarPoly char_poly(const Matrix& a, Variable x) {
    if (!a.is_square())
        throw MathError("characteristic polynomial of non-square matrix");
    std::set<Variable> vs;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a.at(i, j).collect_vars(vs);
    if (vs.count(x))
        throw MathError("characteristic variable collides with an entry variable");
    int n = a.rows();
    Matrix b = -a;
    RatFunc xv = RatFunc::variable(x);
    for (int i = 0; i < n; ++i) b.at(i, i) += xv;
    RatFunc d = det_fraction_free(b);
    if (d.den().degree_in(x) != 0)
        throw MathError("characteristic polynomial has an x-dependent denominator");
    UnivarPoly out;
    out.var = x;
    out.coeffs.resize(static_cast<size_t>(n) + 1);
    for (uint32_t k = 0; k <= static_cast<uint32_t>(n); ++k)
        out.coeffs[k] = RatFunc(d.num().coeff_of(x, k), d.den());
    return out;
}

}  // namespace pforge
