#include "brieskorn/matrix.hpp"

#include "brieskorn/errors.hpp"

namespace brieskorn {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

bool QMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && sgn((*this)(i, j)) != 0) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Rational> QMatrix::column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& v = a(i, k);
            if (sgn(v) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += v * b(k, j);
        }
    return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
    QMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
    QMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix c = a;
    for (auto& v : c.data_) v *= s;
    return c;
}

std::vector<Rational> operator*(const QMatrix& a, std::span<const Rational> v) {
    if (a.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Rational> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
    return out;
}

Echelon row_echelon(QMatrix m) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (sgn(m(row, j)) != 0) m(i, j) -= f * m(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const QMatrix& m) { return row_echelon(m).pivots.size(); }

Rational determinant(const QMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    QMatrix a = m;
    std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && sgn(a(p, col)) == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(a(i, col)) == 0) continue;
            Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = row_echelon(std::move(aug));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
    Echelon e = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const QMatrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) throw DimensionError("right-hand side has wrong length");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = row_echelon(std::move(aug));
    std::vector<Rational> y(m.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] == m.cols()) return std::nullopt;
        y[e.pivots[k]] = e.reduced(k, m.cols());
    }
    return y;
}

// ---------------------------------------------------------------- PMatrix

PMatrix PMatrix::identity(std::size_t n, std::size_t r) {
    PMatrix m(n, n, r);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(r, 1);
    return m;
}

PMatrix PMatrix::from(const QMatrix& q, std::size_t r) {
    PMatrix m(q.rows(), q.cols(), r);
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = Poly::constant(r, q(i, j));
    return m;
}

bool PMatrix::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

bool PMatrix::is_constant() const {
    for (const auto& p : data_)
        if (!p.is_constant()) return false;
    return true;
}

int PMatrix::degree() const {
    int d = -1;
    for (const auto& p : data_) d = std::max(d, p.total_degree());
    return d;
}

QMatrix PMatrix::constant_part() const {
    QMatrix q(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) q(i, j) = (*this)(i, j).constant_term();
    return q;
}

QMatrix PMatrix::evaluate(std::span<const Rational> point) const {
    QMatrix q(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) q(i, j) = (*this)(i, j).evaluate(point);
    return q;
}

PMatrix PMatrix::derivative(std::size_t j) const {
    PMatrix d = *this;
    for (auto& p : d.data_) p = p.derivative(j);
    return d;
}

PMatrix PMatrix::transpose() const {
    PMatrix t(cols_, rows_, r_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

PMatrix operator*(const PMatrix& a, const PMatrix& b) {
    if (a.cols_ != b.rows_ || a.r_ != b.r_) throw DimensionError("matrix product shape mismatch");
    PMatrix c(a.rows_, b.cols_, a.r_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Poly& v = a(i, k);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += v * b(k, j);
        }
    return c;
}

PMatrix operator+(const PMatrix& a, const PMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.r_ != b.r_)
        throw DimensionError("matrix sum shape mismatch");
    PMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
}

PMatrix operator-(const PMatrix& a, const PMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.r_ != b.r_)
        throw DimensionError("matrix difference shape mismatch");
    PMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
}

PMatrix operator*(const Rational& s, const PMatrix& a) {
    PMatrix c = a;
    for (auto& p : c.data_) p *= s;
    return c;
}

std::vector<std::vector<std::string>> PMatrix::to_strings(const std::vector<std::string>& x_names) const {
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).to_string(x_names);
    return out;
}

PMatrix commutator(const PMatrix& a, const PMatrix& b) { return a * b - b * a; }

}  // namespace brieskorn
