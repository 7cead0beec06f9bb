#pragma once

#include "filtadm/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace filtadm {

using Vec = std::vector<Rat>;

Vec unit_vector(std::size_t n, std::size_t i);

// Dense row-major matrix acting on column vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec apply(std::span<const Rat> v) const;
    Vec column(std::size_t j) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rat& s) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> a_;
};

Rat determinant(Matrix m);

// Coefficients of det(x*I - m), lowest degree first.
std::vector<Rat> characteristic_polynomial(const Matrix& m);

// Reduced row echelon form in place (zero rows dropped); returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t ncols);

// Basis of {x : r . x = 0 for every row r}.
std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols);

// A subspace of Q^n, stored as its canonical reduced echelon basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : n_(ambient) {}

    static Subspace span(std::size_t ambient, std::vector<Vec> vectors);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Rat> v) const;
    bool contains(const Subspace& other) const;

    // Coordinates of a member vector with respect to basis().
    Vec coordinates(std::span<const Rat> v) const;

    Subspace image(const Matrix& m) const;

    bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    // Total order: by dimension, then entrywise.
    bool operator<(const Subspace& o) const;

private:
    std::size_t n_ = 0;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
std::size_t intersection_dim(const Subspace& a, const Subspace& b);

// Smallest subspace containing s and stable under every operator.
Subspace stable_closure(const Subspace& s, std::span<const Matrix> ops);
// Largest subspace of s stable under every operator.
Subspace stable_interior(const Subspace& s, std::span<const Matrix> ops);
bool is_stable(const Subspace& s, std::span<const Matrix> ops);

// Matrix of op restricted to an op-stable subspace, in the basis of s.
Matrix restrict_to(const Matrix& op, const Subspace& s);

}  // namespace filtadm
