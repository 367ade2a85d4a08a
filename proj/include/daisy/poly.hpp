#ifndef DAISY_POLY_HPP
#define DAISY_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "daisy/errors.hpp"

namespace daisy {

// Overflow-checked int64 helpers. Every arithmetic path in this module
// goes through these; on overflow the operation throws instead of wrapping.
inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer addition overflow");
    return r;
}
inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer multiply overflow");
    return r;
}

// Sparse univariate polynomial with non-negative int64 coefficients.
// The map never stores zero coefficients, so equality is structural.
class Poly1 {
  public:
    Poly1() = default;

    static Poly1 from_terms(const std::vector<std::pair<int, int64_t>>& terms) {
        Poly1 p;
        for (auto [e, c] : terms) p.add_term(e, c);
        return p;
    }
    static Poly1 constant(int64_t c) { return from_terms({{0, c}}); }
    static Poly1 x() { return from_terms({{1, 1}}); }

    void add_term(int exp, int64_t coef) {
        if (exp < 0) fail(ErrorCode::InvalidSpec, "negative exponent");
        if (coef == 0) return;
        auto it = c_.find(exp);
        int64_t v = checked_add(it == c_.end() ? 0 : it->second, coef);
        if (v < 0)
            fail(ErrorCode::NegativeCoefficient,
                 "coefficient of x^" + std::to_string(exp) + " became negative");
        if (v == 0)
            c_.erase(exp);
        else
            c_[exp] = v;
    }

    int64_t coef(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? 0 : it->second;
    }
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }  // -1 for the zero poly
    bool is_zero() const { return c_.empty(); }
    const std::map<int, int64_t>& terms() const { return c_; }

    bool operator==(const Poly1&) const = default;

    friend Poly1 operator+(const Poly1& a, const Poly1& b) {
        Poly1 r = a;
        for (auto [e, c] : b.c_) r.add_term(e, c);
        return r;
    }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        Poly1 r;
        for (auto [ea, ca] : a.c_)
            for (auto [eb, cb] : b.c_) r.add_term(ea + eb, checked_mul(ca, cb));
        return r;
    }

    Poly1 scaled(int64_t k) const {
        if (k < 0) fail(ErrorCode::NegativeCoefficient, "scaling by a negative constant");
        Poly1 r;
        for (auto [e, c] : c_) r.add_term(e, checked_mul(c, k));
        return r;
    }

    int64_t eval1(int64_t x) const;

    std::string to_string() const;

  private:
    std::map<int, int64_t> c_;
};

// Sparse bivariate polynomial, same conventions as Poly1. Terms are keyed
// by (x-exponent, y-exponent).
class Poly2 {
  public:
    Poly2() = default;

    static Poly2 from_terms(const std::vector<std::tuple<int, int, int64_t>>& terms) {
        Poly2 p;
        for (auto [ex, ey, c] : terms) p.add_term(ex, ey, c);
        return p;
    }

    void add_term(int ex, int ey, int64_t coef) {
        if (ex < 0 || ey < 0) fail(ErrorCode::InvalidSpec, "negative exponent");
        if (coef == 0) return;
        auto key = std::make_pair(ex, ey);
        auto it = c_.find(key);
        int64_t v = checked_add(it == c_.end() ? 0 : it->second, coef);
        if (v < 0)
            fail(ErrorCode::NegativeCoefficient, "coefficient of x^" + std::to_string(ex) + " y^" +
                                                     std::to_string(ey) + " became negative");
        if (v == 0)
            c_.erase(key);
        else
            c_[key] = v;
    }

    int64_t coef(int ex, int ey) const {
        auto it = c_.find({ex, ey});
        return it == c_.end() ? 0 : it->second;
    }
    bool is_zero() const { return c_.empty(); }
    const std::map<std::pair<int, int>, int64_t>& terms() const { return c_; }

    bool operator==(const Poly2&) const = default;

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        Poly2 r = a;
        for (auto [k, c] : b.c_) r.add_term(k.first, k.second, c);
        return r;
    }

    int64_t eval2(int64_t x, int64_t y) const;

    std::string to_string() const;

  private:
    std::map<std::pair<int, int>, int64_t> c_;
};

// Coefficient-wise comparison; both define partial orders.
bool leq(const Poly1& p, const Poly1& q);
bool leq(const Poly2& p, const Poly2& q);

// p(x) -> p(x + 1)
Poly1 shift1(const Poly1& p);

// p(x) -> p(x + y)
Poly2 subst_sum(const Poly1& p);

// p(x) -> p(x + y - 1). The expansion runs through signed intermediate
// sums; a negative final coefficient throws NegativeCoefficient.
Poly2 subst_shift_sum(const Poly1& p);

// q(x, y) -> q(x, 1) and q(x, y) -> q(0, y) (the latter returned in y's slot
// as a univariate polynomial).
Poly1 spec_y1(const Poly2& q);
Poly1 spec_x0(const Poly2& q);

int64_t binomial(int n, int k);

}  // namespace daisy

#endif
