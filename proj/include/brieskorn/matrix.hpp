#pragma once

#include "brieskorn/poly.hpp"
#include "brieskorn/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace brieskorn {

/// Dense matrix over Q, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_diagonal() const;
    QMatrix transpose() const;
    std::vector<Rational> column(std::size_t j) const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& c, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

std::vector<Rational> operator*(const QMatrix& a, std::span<const Rational> v);

/// Reduced row echelon form; `pivots[k]` is the pivot column of row k.
struct Echelon {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon row_echelon(QMatrix m);
std::size_t rank(const QMatrix& m);
Rational determinant(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);
/// Basis of {v : m v = 0}.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);
/// Some solution of m y = b, or nullopt.
std::optional<std::vector<Rational>> solve(const QMatrix& m, std::span<const Rational> b);

/// Dense matrix over Q[x_1..x_r].
class PMatrix {
public:
    PMatrix() = default;
    PMatrix(std::size_t rows, std::size_t cols, std::size_t r)
        : rows_(rows), cols_(cols), r_(r), data_(rows * cols, Poly(r)) {}

    static PMatrix identity(std::size_t n, std::size_t r);
    static PMatrix from(const QMatrix& m, std::size_t r);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t params() const { return r_; }
    Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_constant() const;
    /// Maximal total x-degree of an entry; -1 for the zero matrix.
    int degree() const;
    QMatrix constant_part() const;
    QMatrix evaluate(std::span<const Rational> point) const;
    PMatrix derivative(std::size_t j) const;
    PMatrix transpose() const;

    friend PMatrix operator*(const PMatrix& a, const PMatrix& b);
    friend PMatrix operator+(const PMatrix& a, const PMatrix& b);
    friend PMatrix operator-(const PMatrix& a, const PMatrix& b);
    friend PMatrix operator*(const Rational& c, const PMatrix& a);
    friend bool operator==(const PMatrix& a, const PMatrix& b) = default;

    std::vector<std::vector<std::string>> to_strings(const std::vector<std::string>& x_names) const;

private:
    std::size_t rows_ = 0, cols_ = 0, r_ = 0;
    std::vector<Poly> data_;
};

/// [a, b] = ab - ba
PMatrix commutator(const PMatrix& a, const PMatrix& b);

}  // namespace brieskorn
