#include "daisy/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace daisy {

int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // 128-bit intermediates: r * (n-k+i) can pass INT64_MAX briefly even
    // when the final binomial fits.
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<int64_t>::max())
            fail(ErrorCode::Overflow, "binomial coefficient overflow");
    }
    return static_cast<int64_t>(r);
}

namespace {

int64_t checked_pow(int64_t base, int e) {
    int64_t r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

void append_term(std::ostringstream& os, bool& first, int64_t c, const std::string& vars) {
    if (!first) os << " + ";
    first = false;
    if (c != 1 || vars.empty()) os << c;
    os << vars;
}

std::string power_str(const char* v, int e) {
    if (e == 0) return "";
    std::string s = v;
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

}  // namespace

int64_t Poly1::eval1(int64_t x) const {
    int64_t r = 0;
    for (auto [e, c] : c_) r = checked_add(r, checked_mul(c, checked_pow(x, e)));
    return r;
}

std::string Poly1::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        append_term(os, first, it->second, power_str("x", it->first));
    return os.str();
}

int64_t Poly2::eval2(int64_t x, int64_t y) const {
    int64_t r = 0;
    for (auto [k, c] : c_)
        r = checked_add(r, checked_mul(c, checked_mul(checked_pow(x, k.first),
                                                      checked_pow(y, k.second))));
    return r;
}

std::string Poly2::to_string() const {
    if (c_.empty()) return "0";
    // Highest total degree first, then higher x-exponent first.
    std::vector<std::pair<std::pair<int, int>, int64_t>> ts(c_.begin(), c_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : ts)
        append_term(os, first, c, power_str("x", k.first) + power_str("y", k.second));
    return os.str();
}

bool leq(const Poly1& p, const Poly1& q) {
    for (auto [e, c] : p.terms())
        if (c > q.coef(e)) return false;
    return true;
}

bool leq(const Poly2& p, const Poly2& q) {
    for (auto [k, c] : p.terms())
        if (c > q.coef(k.first, k.second)) return false;
    return true;
}

Poly1 shift1(const Poly1& p) {
    Poly1 r;
    for (auto [d, c] : p.terms())
        for (int i = 0; i <= d; ++i) r.add_term(i, checked_mul(c, binomial(d, i)));
    return r;
}

Poly2 subst_sum(const Poly1& p) {
    Poly2 r;
    for (auto [d, c] : p.terms())
        for (int i = 0; i <= d; ++i) r.add_term(i, d - i, checked_mul(c, binomial(d, i)));
    return r;
}

Poly2 subst_shift_sum(const Poly1& p) {
    // (x + y - 1)^d expanded by trinomials; signed sums are accumulated per
    // monomial and only validated at the end.
    std::map<std::pair<int, int>, int64_t> acc;
    for (auto [d, c] : p.terms())
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d - i; ++j) {
                int k = d - i - j;
                int64_t term = checked_mul(c, checked_mul(binomial(d, i), binomial(d - i, j)));
                if (k % 2 == 1) term = -term;
                auto key = std::make_pair(i, j);
                acc[key] = checked_add(acc.count(key) ? acc[key] : 0, term);
            }
    Poly2 r;
    for (auto [k, c] : acc) r.add_term(k.first, k.second, c);
    return r;
}

Poly1 spec_y1(const Poly2& q) {
    Poly1 r;
    for (auto [k, c] : q.terms()) r.add_term(k.first, c);
    return r;
}

Poly1 spec_x0(const Poly2& q) {
    Poly1 r;
    for (auto [k, c] : q.terms())
        if (k.first == 0) r.add_term(k.second, c);
    return r;
}

}  // namespace daisy
