#include "filtadm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace filtadm {

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Matrix::apply(std::span<const Rat> v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (a_[i * cols_ + j] != 0 && v[j] != 0) acc += a_[i * cols_ + j] * v[j];
        out[i] = acc;
    }
    return out;
}

Vec Matrix::column(std::size_t j) const {
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix product: size mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) out(i, j) += x * o(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

Matrix Matrix::scaled(const Rat& s) const {
    Matrix out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

Rat determinant(Matrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

std::vector<Rat> characteristic_polynomial(const Matrix& m) {
    // Faddeev-LeVerrier; exact over Q.
    const std::size_t n = m.rows();
    std::vector<Rat> coeff(n + 1);
    coeff[n] = 1;
    Matrix acc(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc + Matrix::identity(n).scaled(coeff[n - k + 1]);
        Matrix am = m * acc;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        coeff[n - k] = -tr / Rat(static_cast<long>(k));
    }
    return coeff;
}

std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        Rat inv = 1 / rows[r][col];
        for (std::size_t j = col; j < ncols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols) {
    std::vector<Vec> work = rows;
    auto pivots = rref(work, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec x(ncols);
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -work[i][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

Subspace Subspace::span(std::size_t ambient, std::vector<Vec> vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors)
        if (v.size() != ambient) throw std::invalid_argument("Subspace::span: size mismatch");
    s.pivots_ = rref(vectors, ambient);
    s.rows_ = std::move(vectors);
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector(ambient, i));
    return span(ambient, std::move(vs));
}

bool Subspace::contains(std::span<const Rat> v) const {
    Vec rest(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rat f = rest[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (rows_[i][j] != 0) rest[j] -= f * rows_[i][j];
    }
    return std::all_of(rest.begin(), rest.end(), [](const Rat& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec& v) { return contains(v); });
}

Vec Subspace::coordinates(std::span<const Rat> v) const {
    Vec c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Subspace Subspace::image(const Matrix& m) const {
    std::vector<Vec> imgs;
    for (const auto& v : rows_) imgs.push_back(m.apply(v));
    return span(m.rows(), std::move(imgs));
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (rows_[i][j] != o.rows_[i][j]) return rows_[i][j] < o.rows_[i][j];
    return false;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    std::vector<Vec> vs = a.basis();
    vs.insert(vs.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), std::move(vs));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    // Solve x.A = y.B via the nullspace of the coordinate equations.
    const std::size_t n = a.ambient();
    const std::size_t da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return Subspace(n);
    std::vector<Vec> eqs(n, Vec(da + db));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < da; ++i) eqs[k][i] = a.basis()[i][k];
        for (std::size_t j = 0; j < db; ++j) eqs[k][da + j] = -b.basis()[j][k];
    }
    std::vector<Vec> out;
    for (const auto& z : nullspace(eqs, da + db)) {
        Vec v(n);
        for (std::size_t i = 0; i < da; ++i)
            if (z[i] != 0)
                for (std::size_t k = 0; k < n; ++k) v[k] += z[i] * a.basis()[i][k];
        out.push_back(std::move(v));
    }
    return Subspace::span(n, std::move(out));
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() - (a + b).dim();
}

Subspace stable_closure(const Subspace& s, std::span<const Matrix> ops) {
    Subspace cur = s;
    while (true) {
        std::vector<Vec> vs = cur.basis();
        for (const auto& op : ops)
            for (const auto& v : cur.basis()) vs.push_back(op.apply(v));
        Subspace next = Subspace::span(s.ambient(), std::move(vs));
        if (next.dim() == cur.dim()) return next;
        cur = std::move(next);
    }
}

Subspace stable_interior(const Subspace& s, std::span<const Matrix> ops) {
    Subspace cur = s;
    const std::size_t n = s.ambient();
    while (cur.dim() > 0) {
        auto annihilator = nullspace(cur.basis(), n);
        if (annihilator.empty()) return cur;
        const std::size_t m = cur.dim();
        std::vector<Vec> constraints;
        for (const auto& op : ops) {
            std::vector<Vec> imgs;
            for (const auto& v : cur.basis()) imgs.push_back(op.apply(v));
            for (const auto& w : annihilator) {
                Vec row(m);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t k = 0; k < n; ++k)
                        if (w[k] != 0) row[i] += w[k] * imgs[i][k];
                constraints.push_back(std::move(row));
            }
        }
        auto coeffs = nullspace(constraints, m);
        if (coeffs.size() == m) return cur;
        std::vector<Vec> vs;
        for (const auto& x : coeffs) {
            Vec v(n);
            for (std::size_t i = 0; i < m; ++i)
                if (x[i] != 0)
                    for (std::size_t k = 0; k < n; ++k) v[k] += x[i] * cur.basis()[i][k];
            vs.push_back(std::move(v));
        }
        cur = Subspace::span(n, std::move(vs));
    }
    return cur;
}

bool is_stable(const Subspace& s, std::span<const Matrix> ops) {
    for (const auto& op : ops)
        for (const auto& v : s.basis())
            if (!s.contains(op.apply(v))) return false;
    return true;
}

Matrix restrict_to(const Matrix& op, const Subspace& s) {
    const std::size_t m = s.dim();
    Matrix out(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        Vec img = op.apply(s.basis()[j]);
        if (!s.contains(img)) throw std::invalid_argument("restrict_to: subspace is not stable");
        Vec c = s.coordinates(img);
        for (std::size_t i = 0; i < m; ++i) out(i, j) = c[i];
    }
    return out;
}

}  // namespace filtadm
