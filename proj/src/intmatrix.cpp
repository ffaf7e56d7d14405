#include "graphzeta/intmatrix.hpp"

#include <stdexcept>

namespace gz {

IntMatrix::IntMatrix(int rows, int cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("IntMatrix: entry count != rows*cols");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

// Smith reduction tracking the row transform and its inverse.  Column
// operations do not touch U.  Pivot choice: nonzero entry of minimal
// absolute value in the remaining submatrix; row/column cleared by
// Euclidean steps; divisibility violations fixed by adding the offending
// row into the pivot row and reducing again.
struct SmithWorker {
    IntMatrix a, u, uinv;
    bool track;

    explicit SmithWorker(const IntMatrix& m, bool with_transform)
        : a(m),
          u(with_transform ? IntMatrix::identity(m.rows()) : IntMatrix()),
          uinv(with_transform ? IntMatrix::identity(m.rows()) : IntMatrix()),
          track(with_transform) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        if (track)
            for (int c = 0; c < u.cols(); ++c) {
                std::swap(u.at(i, c), u.at(j, c));
                std::swap(uinv.at(c, i), uinv.at(c, j));
            }
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    }

    // row i += q * row j ; U tracks the same op, U^-1 the inverse op.
    void add_row(int i, int j, const mpz_class& q) {
        if (q == 0) return;
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) += q * a.at(j, c);
        if (track)
            for (int c = 0; c < u.cols(); ++c) {
                u.at(i, c) += q * u.at(j, c);
                uinv.at(c, j) -= q * uinv.at(c, i);
            }
    }

    void add_col(int i, int j, const mpz_class& q) {
        if (q == 0) return;
        for (int r = 0; r < a.rows(); ++r) a.at(r, i) += q * a.at(r, j);
    }

    void negate_row(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        if (track)
            for (int c = 0; c < u.cols(); ++c) {
                u.at(i, c) = -u.at(i, c);
                uinv.at(c, i) = -uinv.at(c, i);
            }
    }

    bool find_pivot(int k, int& pi, int& pj) const {
        bool found = false;
        mpz_class best;
        for (int i = k; i < a.rows(); ++i)
            for (int j = k; j < a.cols(); ++j) {
                if (a.at(i, j) == 0) continue;
                mpz_class v = abs(a.at(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void reduce() {
        int r = a.rows(), c = a.cols();
        int steps = std::min(r, c);
        for (int k = 0; k < steps; ++k) {
            int pi, pj;
            if (!find_pivot(k, pi, pj)) break;  // remaining block is zero
            swap_rows(k, pi);
            swap_cols(k, pj);

            // Clear row and column k; re-pivot whenever a remainder is
            // smaller than the current pivot.
            while (true) {
                bool dirty = false;
                for (int i = k + 1; i < r; ++i) {
                    if (a.at(i, k) == 0) continue;
                    mpz_class q = a.at(i, k) / a.at(k, k);  // truncated
                    add_row(i, k, -q);
                    if (a.at(i, k) != 0) {
                        swap_rows(k, i);  // remainder is strictly smaller
                        dirty = true;
                    }
                }
                for (int j = k + 1; j < c; ++j) {
                    if (a.at(k, j) == 0) continue;
                    mpz_class q = a.at(k, j) / a.at(k, k);
                    add_col(j, k, -q);
                    if (a.at(k, j) != 0) {
                        swap_cols(k, j);
                        dirty = true;
                    }
                }
                if (!dirty && column_clear(k) && row_clear(k)) break;
            }
            if (a.at(k, k) < 0) negate_row(k);

            // Divisibility: pivot must divide every remaining entry.
            while (true) {
                int bi = -1, bj = -1;
                for (int i = k + 1; i < r && bi < 0; ++i)
                    for (int j = k + 1; j < c; ++j)
                        if (a.at(i, j) % a.at(k, k) != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi < 0) break;
                add_row(k, bi, 1);
                // Row k now has entries beyond the pivot; redo this step.
                --k;
                break;
            }
        }
    }

    bool column_clear(int k) const {
        for (int i = k + 1; i < a.rows(); ++i)
            if (a.at(i, k) != 0) return false;
        return true;
    }

    bool row_clear(int k) const {
        for (int j = k + 1; j < a.cols(); ++j)
            if (a.at(k, j) != 0) return false;
        return true;
    }

    SmithForm form() const {
        SmithForm f;
        int steps = std::min(a.rows(), a.cols());
        f.invariant_factors.reserve(steps);
        for (int k = 0; k < steps; ++k) f.invariant_factors.push_back(a.at(k, k));
        return f;
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithWorker w(m, false);
    w.reduce();
    return w.form();
}

SmithDecomposition smith_decomposition(const IntMatrix& m) {
    SmithWorker w(m, true);
    w.reduce();
    return {w.form(), std::move(w.u), std::move(w.uinv)};
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    int n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;  // exact division (Bareiss)
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::optional<std::vector<mpq_class>> solve_rational(
    const IntMatrix& m, const std::vector<mpz_class>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve_rational: rhs length != rows");
    int rows = m.rows(), cols = m.cols();

    // Gauss-Jordan over Q on [m | b].
    std::vector<std::vector<mpq_class>> a(rows,
                                          std::vector<mpq_class>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
        a[i][cols] = b[i];
    }

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (a[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[row], a[p]);
        mpq_class inv = 1 / a[row][col];
        for (int j = col; j <= cols; ++j) a[row][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            mpq_class f = a[i][col];
            for (int j = col; j <= cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;  // 0 = nonzero

    std::vector<mpq_class> x(cols, 0);
    for (int r = 0; r < row; ++r) x[pivot_col[r]] = a[r][cols];
    return x;
}

}  // namespace gz
