#include "graphzeta/jacobian.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gz {

AbelianGroupStructure AbelianGroupStructure::from_orders(
    std::vector<mpz_class> orders) {
    for (const mpz_class& d : orders)
        if (d <= 0)
            throw std::invalid_argument("from_orders: orders must be positive");
    // Repeated gcd/lcm passes sort any list into a divisibility chain.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < orders.size(); ++i)
            for (size_t j = i + 1; j < orders.size(); ++j) {
                mpz_class g = gcd(orders[i], orders[j]);
                if (g == orders[i] || (orders[i] % orders[j] == 0 && false)) {
                }
                if (orders[j] % orders[i] == 0) continue;
                mpz_class l = orders[i] / g * orders[j];
                orders[i] = g;
                orders[j] = l;
                changed = true;
            }
    }
    std::sort(orders.begin(), orders.end());
    AbelianGroupStructure s;
    for (mpz_class& d : orders)
        if (d > 1) s.invariant_factors.push_back(std::move(d));
    return s;
}

mpz_class AbelianGroupStructure::order() const {
    mpz_class n = 1;
    for (const mpz_class& d : invariant_factors) n *= d;
    return n;
}

std::string AbelianGroupStructure::str() const {
    if (invariant_factors.empty()) return "trivial";
    std::ostringstream out;
    for (size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) out << " x ";
        out << "Z/" << invariant_factors[i].get_str();
    }
    return out.str();
}

bool groups_isomorphic(const AbelianGroupStructure& a,
                       const AbelianGroupStructure& b) {
    return a.invariant_factors == b.invariant_factors;
}

bool is_cyclic(const AbelianGroupStructure& s) {
    return s.invariant_factors.size() <= 1;
}

IntMatrix laplacian(const Graph& g) {
    int n = g.vertex_count();
    IntMatrix m(n, n);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        m.at(e.a, e.b) -= 1;
        m.at(e.b, e.a) -= 1;
        m.at(e.a, e.a) += 1;
        m.at(e.b, e.b) += 1;
    }
    return m;
}

AbelianGroupStructure jacobian_group(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("jacobian_group: graph is not connected");
    SmithForm f = smith_normal_form(laplacian(g));
    AbelianGroupStructure s;
    for (const mpz_class& d : f.invariant_factors)
        if (d > 1) s.invariant_factors.push_back(d);
    return s;
}

mpz_class spanning_tree_count(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("spanning_tree_count: graph is not connected");
    IntMatrix l = laplacian(g);
    int n = g.vertex_count();
    IntMatrix r(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) r.at(i - 1, j - 1) = l.at(i, j);
    return determinant(r);
}

namespace {

// Fractional part in [0,1).
mpq_class mod1(const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - fl;
}

}  // namespace

mpq_class pairing_value(const Graph& g, const std::vector<mpz_class>& d1,
                        const std::vector<mpz_class>& d2) {
    int n = g.vertex_count();
    if (static_cast<int>(d1.size()) != n || static_cast<int>(d2.size()) != n)
        throw std::invalid_argument("pairing_value: divisor length mismatch");
    mpz_class deg1 = std::accumulate(d1.begin(), d1.end(), mpz_class(0));
    mpz_class deg2 = std::accumulate(d2.begin(), d2.end(), mpz_class(0));
    if (deg1 != 0 || deg2 != 0)
        throw std::invalid_argument("pairing_value: divisors must have degree 0");

    auto x = solve_rational(laplacian(g), d2);
    if (!x)
        throw std::invalid_argument(
            "pairing_value: divisor not in the Laplacian image over Q "
            "(disconnected graph?)");
    // Shift by the all-ones kernel so coordinates sum to zero; the shift is
    // invisible to the dot product below since deg(d1) = 0.
    mpq_class mean = std::accumulate(x->begin(), x->end(), mpq_class(0)) / n;
    mpq_class dot = 0;
    for (int i = 0; i < n; ++i) dot += mpq_class(d1[i]) * ((*x)[i] - mean);
    return mod1(dot);
}

PairingForm duality_pairing(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("duality_pairing: graph is not connected");
    SmithDecomposition dec = smith_decomposition(laplacian(g));
    int n = g.vertex_count();

    PairingForm p;
    for (int k = 0; k < n; ++k) {
        const mpz_class& d = dec.form.invariant_factors[k];
        if (d <= 1) continue;  // unit factor or the free rank-1 part
        std::vector<mpz_class> gen(n);
        for (int i = 0; i < n; ++i) gen[i] = dec.row_transform_inv.at(i, k);
        p.generators.push_back(std::move(gen));
    }
    size_t r = p.generators.size();
    p.gram.assign(r, std::vector<mpq_class>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j) {
            mpq_class v = pairing_value(g, p.generators[i], p.generators[j]);
            p.gram[i][j] = v;
            p.gram[j][i] = v;
        }
    return p;
}

namespace {

// Element of a product of cyclic groups as a coefficient vector.
using Elem = std::vector<long>;

struct AutSearch {
    std::vector<long> d;                      // invariant factors (fit long)
    std::vector<std::vector<mpq_class>> gram; // pairing on the generators
    std::vector<Elem> elems;                  // all group elements
    std::vector<Elem> images;                 // current partial assignment
    mpz_class count = 0;

    mpq_class pair_elems(const Elem& a, const Elem& b) const {
        mpq_class v = 0;
        size_t k = d.size();
        for (size_t i = 0; i < k; ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < k; ++j) {
                if (b[j] == 0) continue;
                v += mpq_class(a[i]) * mpz_class(b[j]) * gram[i][j];
            }
        }
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        return v - fl;
    }

    // The images must generate the whole group: the quotient of Z^k by the
    // columns of [images | diag(d)] has to be trivial.
    bool surjective() const {
        size_t k = d.size();
        IntMatrix m(static_cast<int>(k), static_cast<int>(2 * k));
        for (size_t j = 0; j < k; ++j) {
            for (size_t i = 0; i < k; ++i)
                m.at(static_cast<int>(i), static_cast<int>(j)) = images[j][i];
            m.at(static_cast<int>(j), static_cast<int>(k + j)) = d[j];
        }
        SmithForm f = smith_normal_form(m);
        for (const mpz_class& v : f.invariant_factors)
            if (v != 1) return false;
        return true;
    }

    void extend(size_t level) {
        size_t k = d.size();
        if (level == k) {
            if (surjective()) ++count;
            return;
        }
        for (const Elem& y : elems) {
            // d[level] * y must vanish, i.e. y lies in the d[level]-torsion.
            bool ok = true;
            for (size_t i = 0; i < k && ok; ++i)
                if ((static_cast<long long>(d[level]) * y[i]) % d[i] != 0) ok = false;
            if (!ok) continue;
            for (size_t i = 0; i <= level && ok; ++i) {
                const Elem& x = (i == level) ? y : images[i];
                if (pair_elems(x, y) != gram[i][level]) ok = false;
            }
            if (!ok) continue;
            images[level] = y;
            extend(level + 1);
        }
    }
};

}  // namespace

mpz_class pairing_automorphism_count(const AbelianGroupStructure& s,
                                     const PairingForm& p,
                                     unsigned long max_order) {
    if (s.order() > max_order)
        throw std::invalid_argument(
            "pairing_automorphism_count: group order exceeds bound " +
            std::to_string(max_order));
    size_t k = s.invariant_factors.size();
    if (k == 0) return 1;
    if (p.gram.size() != k)
        throw std::invalid_argument(
            "pairing_automorphism_count: gram size != number of factors");

    AutSearch as;
    as.d.reserve(k);
    for (const mpz_class& d : s.invariant_factors) as.d.push_back(d.get_si());
    as.gram = p.gram;
    as.images.assign(k, {});

    // Enumerate all group elements.
    Elem cur(k, 0);
    while (true) {
        as.elems.push_back(cur);
        size_t i = 0;
        while (i < k && ++cur[i] == as.d[i]) cur[i++] = 0;
        if (i == k) break;
    }

    as.extend(0);
    return as.count;
}

}  // namespace gz
