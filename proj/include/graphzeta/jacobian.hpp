#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "graphzeta/graph.hpp"
#include "graphzeta/intmatrix.hpp"

namespace gz {

// Finite abelian group as an invariant-factor chain d1 | d2 | ..., each
// factor >= 2.  The empty chain is the trivial group.  Two groups are
// isomorphic iff their chains are equal.
struct AbelianGroupStructure {
    std::vector<mpz_class> invariant_factors;

    // Normalizes an arbitrary list of cyclic orders into a divisibility
    // chain (dropping 1s); e.g. {42, 7} becomes {7, 42}.
    static AbelianGroupStructure from_orders(std::vector<mpz_class> orders);

    mpz_class order() const;
    std::string str() const;  // "Z/7 x Z/42", "trivial" for the empty chain

    bool operator==(const AbelianGroupStructure& o) const {
        return invariant_factors == o.invariant_factors;
    }
};

bool groups_isomorphic(const AbelianGroupStructure& a,
                       const AbelianGroupStructure& b);
bool is_cyclic(const AbelianGroupStructure& s);

// Degree matrix minus adjacency matrix.  Rows and columns sum to zero;
// loops cancel out of both terms and contribute nothing.
IntMatrix laplacian(const Graph& g);

// Torsion part of the Laplacian cokernel: the invariant factors of its
// Smith form with the unit factors and the single zero dropped.
AbelianGroupStructure jacobian_group(const Graph& g);

// Matrix-tree: determinant of the Laplacian with row/column 0 removed.
mpz_class spanning_tree_count(const Graph& g);

// The duality pairing on divisor classes of degree zero, tabulated on an
// explicit generating set.  generators[i] is a divisor whose class has
// order invariant_factors[i]; gram[i][j] = <g_i, g_j> as a rational in
// [0,1) representing a value in Q/Z.
struct PairingForm {
    std::vector<std::vector<mpz_class>> generators;
    std::vector<std::vector<mpq_class>> gram;
};

// <[d1],[d2]> = d1 . x mod 1 where laplacian(g) x = d2, with x chosen to
// have coordinate sum zero.  Both divisors must have degree zero.
mpq_class pairing_value(const Graph& g, const std::vector<mpz_class>& d1,
                        const std::vector<mpz_class>& d2);

PairingForm duality_pairing(const Graph& g);

// Number of group automorphisms preserving the pairing, by backtracking
// over generator images.  Throws when the group order exceeds max_order.
mpz_class pairing_automorphism_count(const AbelianGroupStructure& s,
                                     const PairingForm& p,
                                     unsigned long max_order = 10000);

}  // namespace gz
