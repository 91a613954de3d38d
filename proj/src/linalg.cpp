#include "brane/linalg.hpp"

namespace brane {

SparseVec axpy(const Q& a, const SparseVec& x, const SparseVec& y) {
    if (a == 0) return y;
    SparseVec r;
    r.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            r.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            r.push_back(y[j]);
            ++j;
        } else {
            Q v = y[j].second + a * x[i].second;
            if (v != 0) r.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return r;
}

SparseVec scale(const Q& a, const SparseVec& x) {
    if (a == 0) return {};
    SparseVec r = x;
    for (auto& [i, v] : r) v *= a;
    return r;
}

Q entry(const SparseVec& v, int idx) {
    for (const auto& [i, x] : v) {
        if (i == idx) return x;
        if (i > idx) break;
    }
    return 0;
}

SparseVec Echelon::reduce(SparseVec v) const {
    // Rows are fully reduced: subtracting one only touches non-pivot columns besides its own pivot,
    // so one pass over the pivot columns present in the input is enough.
    SparseVec out = v;
    for (const auto& [idx, val] : v) {
        auto it = rows_.find(idx);
        if (it == rows_.end()) continue;
        Q c = entry(out, idx);
        if (c != 0) out = axpy(-c, it->second, out);
    }
    return out;
}

bool Echelon::add(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const int p = v.front().first;
    v = scale(1 / v.front().second, v);
    for (auto& [piv, row] : rows_) {
        Q c = entry(row, p);
        if (c != 0) row = axpy(-c, v, row);
    }
    rows_.emplace(p, std::move(v));
    return true;
}

KernelImage kernel_image(const std::vector<SparseVec>& columns) {
    struct Row {
        SparseVec v;
        SparseVec comb;
    };
    std::map<int, Row> piv;
    KernelImage out;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        SparseVec v = columns[j];
        SparseVec comb{{static_cast<int>(j), Q(1)}};
        bool independent = false;
        while (!v.empty()) {
            const int p = v.front().first;
            auto it = piv.find(p);
            if (it == piv.end()) {
                piv.emplace(p, Row{std::move(v), std::move(comb)});
                independent = true;
                break;
            }
            Q f = v.front().second / it->second.v.front().second;
            v = axpy(-f, it->second.v, v);
            comb = axpy(-f, it->second.comb, comb);
        }
        if (!independent) out.kernel.push_back(std::move(comb));
    }
    out.rank = static_cast<int>(piv.size());
    return out;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shapes do not compose");
    Matrix r(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Q& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.c_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<Q> Matrix::apply(const std::vector<Q>& v) const {
    if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("vector length does not match matrix");
    std::vector<Q> r(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

std::optional<Matrix> Matrix::inverse() const {
    if (r_ != c_) return std::nullopt;
    const int n = r_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) return std::nullopt;
        if (p != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(p, j), a(col, j));
                std::swap(inv(p, j), inv(col, j));
            }
        Q f = 1 / a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) *= f;
            inv(col, j) *= f;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Q g = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= g * a(col, j);
                inv(i, j) -= g * inv(col, j);
            }
        }
    }
    return inv;
}

int Matrix::rank() const {
    Echelon e;
    for (int i = 0; i < r_; ++i) {
        SparseVec row;
        for (int j = 0; j < c_; ++j)
            if ((*this)(i, j) != 0) row.emplace_back(j, (*this)(i, j));
        e.add(row);
    }
    return e.rank();
}

void LinearSystem::add_equation(const SparseVec& row, const Q& rhs) {
    SparseVec r = row;
    if (rhs != 0) r.emplace_back(n_, rhs);
    if (aug_.add(std::move(r)) && aug_.rows().count(n_)) inconsistent_ = true;
}

std::vector<Q> LinearSystem::particular_solution() const {
    if (inconsistent_) throw std::runtime_error("linear system is inconsistent");
    std::vector<Q> x(n_);
    for (const auto& [p, row] : aug_.rows()) x[p] = entry(row, n_);
    return x;
}

}  // namespace brane
