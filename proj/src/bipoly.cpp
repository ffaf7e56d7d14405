#include "graphzeta/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace gz {

BiPoly BiPoly::constant(const std::string& v1, const std::string& v2,
                        const mpz_class& c) {
    BiPoly p(v1, v2);
    p.add_term(0, 0, c);
    return p;
}

BiPoly BiPoly::monomial(const std::string& v1, const std::string& v2, int i,
                        int j, const mpz_class& c) {
    BiPoly p(v1, v2);
    p.add_term(i, j, c);
    return p;
}

mpz_class BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void BiPoly::add_term(int i, int j, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Exponents{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int BiPoly::degree_var1() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int BiPoly::degree_var2() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

void BiPoly::require_same_vars(const BiPoly& o) const {
    if (var1_ != o.var1_ || var2_ != o.var2_)
        throw std::invalid_argument("BiPoly: variable names do not match: (" +
                                    var1_ + "," + var2_ + ") vs (" + o.var1_ +
                                    "," + o.var2_ + ")");
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    r += o;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    require_same_vars(o);
    BiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    require_same_vars(o);
    BiPoly r(var1_, var2_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

BiPoly BiPoly::operator*(const mpz_class& c) const {
    BiPoly r(var1_, var2_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

mpz_class BiPoly::eval(const mpz_class& a, const mpz_class& b) const {
    // Exponents are small; plain powering with a cache is exact and cheap.
    std::map<int, mpz_class> pa, pb;
    auto pw = [](std::map<int, mpz_class>& cache, const mpz_class& base,
                 int e) -> const mpz_class& {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        mpz_class v;
        mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), e);
        return cache.emplace(e, v).first->second;
    };
    mpz_class sum = 0;
    for (const auto& [e, c] : terms_)
        sum += c * pw(pa, a, e.first) * pw(pb, b, e.second);
    return sum;
}

BiPoly BiPoly::eval_var1(const mpz_class& a) const {
    BiPoly r(var1_, var2_);
    for (const auto& [e, c] : terms_) {
        mpz_class v;
        mpz_pow_ui(v.get_mpz_t(), a.get_mpz_t(), e.first);
        r.add_term(0, e.second, c * v);
    }
    return r;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class abs_c = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = e.first > 0 || e.second > 0;
        if (abs_c != 1 || !has_vars) out << abs_c.get_str();
        if (e.first > 0) {
            out << var1_;
            if (e.first > 1) out << "^" << e.first;
        }
        if (e.second > 0) {
            out << var2_;
            if (e.second > 1) out << "^" << e.second;
        }
    }
    return out.str();
}

}  // namespace gz
