#pragma once

#include <jantzen/rational.hpp>

#include <vector>

namespace jantzen {

// Dense matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return entries_[r * cols_ + c]; }
    const Rational& at(int r, int c) const { return entries_[r * cols_ + c]; }

    static QMatrix identity(int n);
    QMatrix operator*(const QMatrix& rhs) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    QMatrix transpose() const;
    QMatrix power(int k) const;  // square matrices only
    bool is_zero() const;
    bool operator==(const QMatrix& rhs) const = default;

    // In-place Gauss-Jordan to reduced row echelon form; returns the rank.
    int rref();

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

// Subspace of Q^n, canonicalized as the RREF of a spanning set. Equality of
// subspaces is equality of canonical bases.
class Subspace {
public:
    explicit Subspace(int ambient_dim);  // zero subspace
    static Subspace span(int ambient_dim, const std::vector<std::vector<Rational>>& vectors);
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<Rational>>& basis() const { return basis_; }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& rhs) const = default;

private:
    int ambient_;
    std::vector<std::vector<Rational>> basis_;  // RREF rows, no zero rows
};

Subspace kernel(const QMatrix& m);
Subspace image(const QMatrix& m);  // column space, subspace of Q^rows

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

// Image of a subspace under a linear map.
Subspace apply(const QMatrix& m, const Subspace& u);

}  // namespace jantzen
