#include "gkz/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace gkz {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = int(init.size());
    cols_ = rows_ ? int(init.begin()->size()) : 0;
    data_.resize(size_t(rows_) * cols_);
    int i = 0;
    for (const auto& r : init) {
        if (int(r.size()) != cols_) throw std::invalid_argument("ragged matrix initializer");
        int j = 0;
        for (long long x : r) at(i, j++) = x;
        ++i;
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::from_columns(const std::vector<ZVec>& cols, int dim) {
    IntMatrix M(dim, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
        if (int(cols[j].size()) != dim) throw std::invalid_argument("column dimension mismatch");
        for (int i = 0; i < dim; ++i) M.at(i, j) = cols[j][i];
    }
    return M;
}

ZVec IntMatrix::column(int j) const {
    ZVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

ZVec IntMatrix::row(int i) const {
    ZVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<ZVec> IntMatrix::columns() const {
    std::vector<ZVec> cs;
    cs.reserve(cols_);
    for (int j = 0; j < cols_; ++j) cs.push_back(column(j));
    return cs;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix T(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
    return T;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix R(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) R.at(i, j) += at(i, k) * o.at(k, j);
        }
    return R;
}

ZVec IntMatrix::apply(const ZVec& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    ZVec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

QVec IntMatrix::apply(const QVec& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    QVec r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += Rat(at(i, j)) * v[j];
    return r;
}

IntMatrix IntMatrix::select_columns(const std::vector<int>& idx) const {
    IntMatrix M(rows_, int(idx.size()));
    for (int j = 0; j < int(idx.size()); ++j)
        for (int i = 0; i < rows_; ++i) M.at(i, j) = at(i, idx[j]);
    return M;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
    IntMatrix M(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) M.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) M.at(i, cols_ + j) = o.at(i, j);
    }
    return M;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

namespace {

void swap_rows(IntMatrix& M, int a, int b) {
    for (int j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
}
void swap_cols(IntMatrix& M, int a, int b) {
    for (int i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
}
// row[a] += c * row[b]
void add_row(IntMatrix& M, int a, int b, const Int& c) {
    for (int j = 0; j < M.cols(); ++j) M.at(a, j) += c * M.at(b, j);
}
void add_col(IntMatrix& M, int a, int b, const Int& c) {
    for (int i = 0; i < M.rows(); ++i) M.at(i, a) += c * M.at(i, b);
}
void negate_row(IntMatrix& M, int a) {
    for (int j = 0; j < M.cols(); ++j) M.at(a, j) = -M.at(a, j);
}
void negate_col(IntMatrix& M, int a) {
    for (int i = 0; i < M.rows(); ++i) M.at(i, a) = -M.at(i, a);
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
    SmithForm S;
    S.D = M;
    S.U = IntMatrix::identity(M.rows());
    S.V = IntMatrix::identity(M.cols());
    IntMatrix& D = S.D;
    int m = M.rows(), n = M.cols();
    int t = 0;
    while (t < m && t < n) {
        // find pivot with smallest absolute value
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (D.at(i, j) != 0 && (pi < 0 || abs_int(D.at(i, j)) < best)) {
                    pi = i; pj = j; best = abs_int(D.at(i, j));
                }
        if (pi < 0) break;
        if (pi != t) { swap_rows(D, pi, t); swap_rows(S.U, pi, t); }
        if (pj != t) { swap_cols(D, pj, t); swap_cols(S.V, pj, t); }
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = floor_div(D.at(i, t), D.at(t, t));
                add_row(D, i, t, -q); add_row(S.U, i, t, -q);
                if (D.at(i, t) != 0) {
                    swap_rows(D, i, t); swap_rows(S.U, i, t);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = floor_div(D.at(t, j), D.at(t, t));
                add_col(D, j, t, -q); add_col(S.V, j, t, -q);
                if (D.at(t, j) != 0) {
                    swap_cols(D, j, t); swap_cols(S.V, j, t);
                    dirty = true;
                }
            }
        }
        // divisibility: fold any non-multiple into the pivot position
        bool again = false;
        for (int i = t + 1; i < m && !again; ++i)
            for (int j = t + 1; j < n && !again; ++j)
                if (D.at(i, j) % D.at(t, t) != 0) {
                    add_row(D, t, i, 1); add_row(S.U, t, i, 1);
                    again = true;
                }
        if (again) continue;
        if (D.at(t, t) < 0) { negate_row(D, t); negate_row(S.U, t); }
        ++t;
    }
    S.rank = t;
    return S;
}

IntMatrix hermite_column_form(const IntMatrix& M) {
    IntMatrix H = M;
    int m = H.rows(), n = H.cols();
    int c = 0;  // next column to place
    for (int r = 0; r < m && c < n; ++r) {
        // clear row r to the right of column c using column gcd steps
        while (true) {
            int p = -1;
            Int best = 0;
            for (int j = c; j < n; ++j)
                if (H.at(r, j) != 0 && (p < 0 || abs_int(H.at(r, j)) < best)) {
                    p = j; best = abs_int(H.at(r, j));
                }
            if (p < 0) break;  // row r is zero on active columns; move to next row
            if (p != c) swap_cols(H, p, c);
            bool all_clear = true;
            for (int j = c + 1; j < n; ++j) {
                if (H.at(r, j) == 0) continue;
                Int q = floor_div(H.at(r, j), H.at(r, c));
                add_col(H, j, c, -q);
                if (H.at(r, j) != 0) all_clear = false;
            }
            if (all_clear) break;
        }
        if (c < n && H.at(r, c) != 0) {
            if (H.at(r, c) < 0) negate_col(H, c);
            // reduce earlier columns on the pivot row
            for (int j = 0; j < c; ++j) {
                Int q = floor_div(H.at(r, j), H.at(r, c));
                add_col(H, j, c, -q);
            }
            ++c;
        }
    }
    // keep the c pivot columns only; they are ordered by pivot row already
    std::vector<int> keep;
    for (int j = 0; j < c; ++j) keep.push_back(j);
    return H.select_columns(keep);
}

int rank_of(const IntMatrix& M) { return smith_normal_form(M).rank; }

Int determinant(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = M.rows();
    if (n == 0) return 1;
    // fraction-free Bareiss
    IntMatrix A = M;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (A.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            swap_rows(A, p, k);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
        prev = A.at(k, k);
    }
    return sign > 0 ? A.at(n - 1, n - 1) : Int(-A.at(n - 1, n - 1));
}

IntMatrix kernel_lattice(const IntMatrix& M) {
    SmithForm S = smith_normal_form(M);
    std::vector<int> idx;
    for (int j = S.rank; j < M.cols(); ++j) idx.push_back(j);
    return S.V.select_columns(idx);
}

std::optional<ZVec> solve_integer(const IntMatrix& M, const ZVec& b) {
    SmithForm S = smith_normal_form(M);
    ZVec c = S.U.apply(b);
    ZVec y(M.cols(), Int(0));
    for (int i = 0; i < M.rows(); ++i) {
        Int d = (i < std::min(M.rows(), M.cols())) ? S.D.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            if (i < M.cols()) y[i] = c[i] / d;
        }
    }
    return S.V.apply(y);
}

std::optional<QVec> solve_rational(const IntMatrix& M, const QVec& b) {
    // Gaussian elimination on [M | b] over Q
    int m = M.rows(), n = M.cols();
    std::vector<QVec> A(m, QVec(n + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) A[i][j] = Rat(M.at(i, j));
        A[i][n] = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int j = 0; j < n && r < m; ++j) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (A[i][j] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(A[p], A[r]);
        Rat inv = Rat(1) / A[r][j];
        for (int k = j; k <= n; ++k) A[r][k] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || A[i][j] == 0) continue;
            Rat f = A[i][j];
            for (int k = j; k <= n; ++k) A[i][k] -= f * A[r][k];
        }
        pivot_col.push_back(j);
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (A[i][n] != 0) return std::nullopt;
    QVec x(n, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = A[i][n];
    return x;
}

std::optional<std::vector<QVec>> express_in_basis(const IntMatrix& B, const std::vector<ZVec>& C) {
    std::vector<QVec> out;
    out.reserve(C.size());
    for (const ZVec& c : C) {
        auto x = solve_rational(B, to_qvec(c));
        if (!x) return std::nullopt;
        out.push_back(*x);
    }
    return out;
}

ZVec primitive_vector(ZVec v) {
    Int g = 0;
    for (const auto& x : v) g = gcd_int(g, x);
    if (g == 0) return v;
    for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x != 0) {
            if (x < 0) for (auto& y : v) y = -y;
            break;
        }
    }
    return v;
}

} // namespace gkz
