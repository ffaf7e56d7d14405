#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace gz {

// Exact bivariate polynomial over the integers.  Terms live in a map keyed
// by the exponent pair (first variable, second variable); zero coefficients
// are never stored.  Two polynomials are equal only if their variable names
// match as well as their terms.
class BiPoly {
public:
    using Exponents = std::pair<int, int>;
    using TermMap = std::map<Exponents, mpz_class>;

    BiPoly() : var1_("x"), var2_("y") {}
    BiPoly(std::string var1, std::string var2)
        : var1_(std::move(var1)), var2_(std::move(var2)) {}

    static BiPoly constant(const std::string& v1, const std::string& v2,
                           const mpz_class& c);
    static BiPoly monomial(const std::string& v1, const std::string& v2,
                           int i, int j, const mpz_class& c = 1);

    const std::string& var1() const { return var1_; }
    const std::string& var2() const { return var2_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    mpz_class coeff(int i, int j) const;
    // Accumulates c onto the (i, j) term, erasing it if the sum is zero.
    void add_term(int i, int j, const mpz_class& c);

    int degree_var1() const;  // -1 for the zero polynomial
    int degree_var2() const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    BiPoly operator*(const mpz_class& c) const;

    bool operator==(const BiPoly& o) const {
        return var1_ == o.var1_ && var2_ == o.var2_ && terms_ == o.terms_;
    }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    mpz_class eval(const mpz_class& a, const mpz_class& b) const;
    // Substitute a for the first variable; result is a polynomial in the
    // second variable only (all first-variable exponents collapse to 0).
    BiPoly eval_var1(const mpz_class& a) const;

    // Canonical text form, terms sorted by exponent pair ascending,
    // e.g. "1 + 6t + 16t^2 + 6t^3u + t^4u^2".
    std::string str() const;

private:
    void require_same_vars(const BiPoly& o) const;

    std::string var1_, var2_;
    TermMap terms_;
};

inline BiPoly operator*(const mpz_class& c, const BiPoly& p) { return p * c; }

}  // namespace gz
