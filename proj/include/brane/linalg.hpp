#pragma once

#include "brane/gca.hpp"

#include <map>
#include <vector>

namespace brane {

// Sparse rational vector: strictly increasing indices, no zero entries.
using SparseVec = std::vector<std::pair<int, Q>>;

SparseVec axpy(const Q& a, const SparseVec& x, const SparseVec& y);  // y + a*x
SparseVec scale(const Q& a, const SparseVec& x);
Q entry(const SparseVec& v, int idx);

// Reduced row echelon basis of a subspace, kept fully reduced after every insertion.
class Echelon {
  public:
    // Returns true when v was independent of the current rows.
    bool add(SparseVec v);
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseVec>& rows() const { return rows_; }

  private:
    std::map<int, SparseVec> rows_;  // pivot column -> row with entry 1 at the pivot
};

struct KernelImage {
    std::vector<SparseVec> kernel;  // in source coordinates
    int rank = 0;
};

// Kernel of the linear map whose j-th column is columns[j], by elimination tracking combinations.
KernelImage kernel_image(const std::vector<SparseVec>& columns);

class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static Matrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Q& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Q& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    std::vector<Q> apply(const std::vector<Q>& v) const;

    // Exact inverse; nullopt when singular or not square.
    std::optional<Matrix> inverse() const;
    int rank() const;

  private:
    int r_ = 0, c_ = 0;
    std::vector<Q> a_;
};

// Solve A x = b for a sparse system given row by row; rows with rhs. Free variables are set to zero.
class LinearSystem {
  public:
    explicit LinearSystem(int unknowns) : n_(unknowns) {}
    int unknowns() const { return n_; }
    void add_equation(const SparseVec& row, const Q& rhs);
    bool consistent() const { return !inconsistent_; }
    std::vector<Q> particular_solution() const;

  private:
    int n_;
    bool inconsistent_ = false;
    Echelon aug_;  // augmented rows; index n_ holds the right-hand side
};

}  // namespace brane
