#pragma once

#include "gkz/numbers.hpp"

#include <optional>

namespace gkz {

// Dense matrix of exact integers, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

    static IntMatrix identity(int n);
    static IntMatrix from_columns(const std::vector<ZVec>& cols, int dim);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    ZVec column(int j) const;
    ZVec row(int i) const;
    std::vector<ZVec> columns() const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    ZVec apply(const ZVec& v) const;   // M * v
    QVec apply(const QVec& v) const;

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntMatrix select_columns(const std::vector<int>& idx) const;
    IntMatrix hstack(const IntMatrix& o) const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

struct SmithForm {
    IntMatrix D;  // diagonal, d_1 | d_2 | ...
    IntMatrix U;  // unimodular, U*M*V = D
    IntMatrix V;
    int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& M);

// Column-style Hermite normal form: H = M*U with U unimodular. Zero columns are
// dropped, pivots are positive, pivot rows strictly increase and entries left of
// a pivot are reduced into [0, pivot).
IntMatrix hermite_column_form(const IntMatrix& M);

int rank_of(const IntMatrix& M);
Int determinant(const IntMatrix& M);  // square only

// Basis of the integer kernel {x : M x = 0}, returned as columns. Saturated.
IntMatrix kernel_lattice(const IntMatrix& M);

// One integer solution of M x = b, if any.
std::optional<ZVec> solve_integer(const IntMatrix& M, const ZVec& b);

// One rational solution of M x = b, if any.
std::optional<QVec> solve_rational(const IntMatrix& M, const QVec& b);

// Express the columns of C in the column basis B (exact, columns of C must lie
// in the rational column span of B and B must have full column rank).
std::optional<std::vector<QVec>> express_in_basis(const IntMatrix& B, const std::vector<ZVec>& C);

// v / gcd(v), sign normalized so the first nonzero entry is positive; zero vector unchanged.
ZVec primitive_vector(ZVec v);

} // namespace gkz
