#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace gz {

// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    IntMatrix(int rows, int cols, std::vector<mpz_class> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

// Diagonal of a Smith normal form: d1 | d2 | ... for the nonzero entries,
// then zeros; all entries non-negative.  The cokernel of the source matrix
// is the direct sum of Z/d_i (with Z summands for the zeros).
struct SmithForm {
    std::vector<mpz_class> invariant_factors;
};

// U * A * V = diag(invariant_factors) with U, V unimodular.  Columns of
// row_transform_inv (= U^-1) at the torsion indices represent generators of
// the cokernel's cyclic summands in the original coordinates.
struct SmithDecomposition {
    SmithForm form;
    IntMatrix row_transform;      // U
    IntMatrix row_transform_inv;  // U^-1
};

SmithForm smith_normal_form(const IntMatrix& m);
SmithDecomposition smith_decomposition(const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(const IntMatrix& m);

// One exact rational solution of m x = b, or nullopt when inconsistent.
// Free variables are set to zero.
std::optional<std::vector<mpq_class>> solve_rational(
    const IntMatrix& m, const std::vector<mpz_class>& b);

}  // namespace gz
