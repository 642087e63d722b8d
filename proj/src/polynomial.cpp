#include "permclass/polynomial.hpp"

#include <stdexcept>
#include <utility>

#include <boost/integer/common_factor_rt.hpp>

namespace permclass {

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(long long constant) {
    if (constant != 0) c_.emplace_back(constant);
}

Poly Poly::x() { return Poly(std::vector<BigInt>{0, 1}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly operator*(const BigInt& s, const Poly& a) {
    std::vector<BigInt> c = a.c_;
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
}

BigInt Poly::content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = boost::integer::gcd(g, v);
    return g < 0 ? BigInt(-g) : g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    std::vector<BigInt> c = c_;
    for (auto& v : c) v /= g;
    return Poly(std::move(c));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigInt v = c_[i];
        const bool neg = v < 0;
        if (neg) v = -v;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0 || v != 1) out += v.str();
        if (i >= 1) out += (i == 0 || v != 1) ? "*x" : "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("exact_div: divisor does not divide dividend");
    std::vector<BigInt> rem = a.coeffs();
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const BigInt& lead = b.leading();
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
        const BigInt& top = rem[k + db];
        if (top % lead != 0) throw std::domain_error("exact_div: divisor does not divide dividend");
        q[k] = top / lead;
        if (q[k] == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q[k] * b.coeffs()[j];
    }
    for (const auto& v : rem)
        if (v != 0) throw std::domain_error("exact_div: divisor does not divide dividend");
    return Poly(std::move(q));
}

Poly pseudo_rem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_rem: division by zero polynomial");
    Poly r = a;
    const BigInt& lead = b.leading();
    const long db = b.degree();
    long steps = a.degree() - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        std::vector<BigInt> shift(static_cast<std::size_t>(r.degree() - db) + 1);
        shift.back() = r.leading();
        r = lead * r - Poly(std::move(shift)) * b;
        --steps;
    }
    for (; steps > 0; --steps) r = lead * r;
    return r;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    Poly p = a.primitive_part();
    Poly q = b.primitive_part();
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.is_zero()) {
        Poly r = pseudo_rem(p, q);
        p = std::move(q);
        q = r.primitive_part();
    }
    return p.primitive_part();
}

Poly determinant(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly(1);
    Poly prev_pivot(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return {};
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev_pivot);
            m[i][k] = Poly();
        }
        prev_pivot = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

GenFun GenFun::normalized(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("GenFun: zero denominator");
    const Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    // Remove any common integer factor, then fix the sign and scale of den(0).
    BigInt common = boost::integer::gcd(num.content(), den.content());
    if (common > 1) {
        num = exact_div(num, Poly(std::vector<BigInt>{common}));
        den = exact_div(den, Poly(std::vector<BigInt>{common}));
    }
    const BigInt d0 = den.coeff(0);
    if (d0 == 0) throw std::domain_error("GenFun: denominator vanishes at 0; not a power series");
    if (d0 != 1 && d0 != -1) throw std::domain_error("GenFun: denominator constant term is not a unit");
    if (d0 == -1) {
        num = -num;
        den = -den;
    }
    return GenFun{std::move(num), std::move(den)};
}

std::vector<BigInt> GenFun::series(std::size_t count) const {
    const BigInt d0 = den.coeff(0);
    if (d0 != 1) throw std::domain_error("GenFun::series: denominator must be normalized (den(0) = 1)");
    std::vector<BigInt> a(count);
    for (std::size_t n = 0; n < count; ++n) {
        BigInt v = num.coeff(n);
        for (std::size_t i = 1; i <= n && i < den.coeffs().size(); ++i) v -= den.coeffs()[i] * a[n - i];
        a[n] = v;
    }
    return a;
}

std::string GenFun::str() const { return "(" + num.str() + ") / (" + den.str() + ")"; }

}  // namespace permclass
