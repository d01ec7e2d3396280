#include <jantzen/linalg.hpp>

#include <stdexcept>

namespace jantzen {

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix dimension mismatch");
    QMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return out;
}

std::vector<Rational> QMatrix::operator*(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Rational> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out[i] += at(i, j) * v[j];
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

QMatrix QMatrix::power(int k) const {
    if (rows_ != cols_)
        throw std::invalid_argument("power of a non-square matrix");
    QMatrix acc = identity(rows_);
    for (int i = 0; i < k; ++i)
        acc = acc * *this;
    return acc;
}

bool QMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0)
            return false;
    return true;
}

int QMatrix::rref() {
    int lead = 0;
    for (int r = 0; r < rows_ && lead < cols_; ++r) {
        int pivot = -1;
        while (lead < cols_) {
            for (int i = r; i < rows_; ++i)
                if (at(i, lead) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot >= 0)
                break;
            ++lead;
        }
        if (pivot < 0)
            return r;
        if (pivot != r)
            for (int j = 0; j < cols_; ++j)
                std::swap(at(pivot, j), at(r, j));
        Rational inv = at(r, lead);
        for (int j = lead; j < cols_; ++j)
            at(r, j) /= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, lead) == 0)
                continue;
            Rational factor = at(i, lead);
            for (int j = lead; j < cols_; ++j)
                at(i, j) -= factor * at(r, j);
        }
        ++lead;
    }
    int rank = 0;
    for (int r = 0; r < rows_; ++r) {
        bool nonzero = false;
        for (int j = 0; j < cols_; ++j)
            if (at(r, j) != 0) {
                nonzero = true;
                break;
            }
        if (nonzero)
            ++rank;
    }
    return rank;
}

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim) {
    if (ambient_dim < 0)
        throw std::invalid_argument("negative ambient dimension");
}

Subspace Subspace::span(int ambient_dim,
                        const std::vector<std::vector<Rational>>& vectors) {
    QMatrix m(static_cast<int>(vectors.size()), ambient_dim);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != ambient_dim)
            throw std::invalid_argument("vector/ambient dimension mismatch");
        for (int j = 0; j < ambient_dim; ++j)
            m.at(static_cast<int>(i), j) = vectors[i][j];
    }
    int rank = m.rref();
    Subspace out(ambient_dim);
    for (int r = 0; r < rank; ++r) {
        std::vector<Rational> row(ambient_dim);
        for (int j = 0; j < ambient_dim; ++j)
            row[j] = m.at(r, j);
        out.basis_.push_back(std::move(row));
    }
    return out;
}

Subspace Subspace::full(int ambient_dim) {
    std::vector<std::vector<Rational>> rows(ambient_dim,
                                            std::vector<Rational>(ambient_dim));
    for (int i = 0; i < ambient_dim; ++i)
        rows[i][i] = 1;
    return span(ambient_dim, rows);
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("vector/ambient dimension mismatch");
    // Reduce v against the RREF basis.
    std::vector<Rational> r = v;
    for (const auto& row : basis_) {
        int lead = 0;
        while (lead < ambient_ && row[lead] == 0)
            ++lead;
        if (lead == ambient_)
            continue;
        if (r[lead] != 0) {
            Rational factor = r[lead];
            for (int j = 0; j < ambient_; ++j)
                r[j] -= factor * row[j];
        }
    }
    for (const auto& x : r)
        if (x != 0)
            return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.basis_)
        if (!contains(row))
            return false;
    return true;
}

Subspace kernel(const QMatrix& m) {
    QMatrix r = m;
    int rank = r.rref();
    int n = m.cols();
    // Identify pivot columns.
    std::vector<int> pivot_col(rank);
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < rank; ++i) {
        int j = 0;
        while (j < n && r.at(i, j) == 0)
            ++j;
        pivot_col[i] = j;
        is_pivot[j] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j])
            continue;
        std::vector<Rational> v(n);
        v[j] = 1;
        for (int i = 0; i < rank; ++i)
            v[pivot_col[i]] = -r.at(i, j);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

Subspace image(const QMatrix& m) {
    std::vector<std::vector<Rational>> cols;
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<Rational> v(m.rows());
        for (int i = 0; i < m.rows(); ++i)
            v[i] = m.at(i, j);
        cols.push_back(std::move(v));
    }
    return Subspace::span(m.rows(), cols);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("ambient dimension mismatch");
    std::vector<std::vector<Rational>> rows = u.basis();
    rows.insert(rows.end(), v.basis().begin(), v.basis().end());
    return Subspace::span(u.ambient_dim(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("ambient dimension mismatch");
    int n = u.ambient_dim();
    int p = u.dim(), q = v.dim();
    // Columns are the basis vectors of U and -V; kernel vectors (a, b)
    // satisfy sum a_i u_i = sum b_j v_j, which spans the intersection.
    QMatrix m(n, p + q);
    for (int j = 0; j < p; ++j)
        for (int i = 0; i < n; ++i)
            m.at(i, j) = u.basis()[j][i];
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < n; ++i)
            m.at(i, p + j) = -v.basis()[j][i];
    Subspace ker = kernel(m);
    std::vector<std::vector<Rational>> vectors;
    for (const auto& ab : ker.basis()) {
        std::vector<Rational> w(n);
        for (int j = 0; j < p; ++j)
            for (int i = 0; i < n; ++i)
                w[i] += ab[j] * u.basis()[j][i];
        vectors.push_back(std::move(w));
    }
    return Subspace::span(n, vectors);
}

Subspace apply(const QMatrix& m, const Subspace& u) {
    if (m.cols() != u.ambient_dim())
        throw std::invalid_argument("map/subspace dimension mismatch");
    std::vector<std::vector<Rational>> images;
    for (const auto& b : u.basis())
        images.push_back(m * b);
    return Subspace::span(m.rows(), images);
}

}  // namespace jantzen
