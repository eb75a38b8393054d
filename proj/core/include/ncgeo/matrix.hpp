#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace ncgeo {

// Dense matrix over the rationals. All elimination is exact; row order and
// pivot choices are deterministic so downstream bases are reproducible.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    bool operator==(const Matrix& o) const = default;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rational& c) const;

    bool is_zero() const;
    Matrix transpose() const;

    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    std::vector<Rational> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Rational>& r);

    // In-place Gauss-Jordan to reduced row echelon form; returns rank.
    std::size_t rref(std::vector<std::size_t>* pivot_cols = nullptr);

    std::size_t rank() const;
    Rational det() const;
    std::optional<Matrix> inverse() const;

    // Columns form the canonical RREF nullspace basis of {x : Ax = 0},
    // free columns in ascending order.
    Matrix nullspace() const;

    // One solution of Ax = b, or nullopt when inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    // Canonical basis of the row span: RREF with zero rows dropped.
    Matrix row_space() const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Row spans compared as subspaces.
bool same_row_space(const Matrix& a, const Matrix& b);

}  // namespace ncgeo
