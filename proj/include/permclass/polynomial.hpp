#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permclass {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial over ℤ; coeffs()[i] multiplies x^i and the
/// leading coefficient is never zero (the zero polynomial has no
/// coefficients).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigInt> coeffs);
    Poly(long long constant);

    static Poly x();

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& leading() const { return c_.back(); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const BigInt& s, const Poly& a);
    friend bool operator==(const Poly&, const Poly&) = default;

    /// gcd of the coefficients (0 for the zero polynomial), always >= 0.
    BigInt content() const;
    Poly primitive_part() const;

    std::string str() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// a / b when b divides a in ℤ[x]; throws std::domain_error otherwise.
Poly exact_div(const Poly& a, const Poly& b);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) · a mod b.
Poly pseudo_rem(const Poly& a, const Poly& b);

/// Primitive gcd in ℤ[x] with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

/// Determinant by fraction-free (Bareiss) elimination.
Poly determinant(std::vector<std::vector<Poly>> m);

/// A rational generating function num/den in lowest terms with den(0) = 1.
struct GenFun {
    Poly num;
    Poly den{1};

    /// Reduces by the gcd and scales so the denominator has constant term 1.
    static GenFun normalized(Poly num, Poly den);

    /// First `count` Taylor coefficients at 0.
    std::vector<BigInt> series(std::size_t count) const;

    std::string str() const;

    friend bool operator==(const GenFun&, const GenFun&) = default;
};

}  // namespace permclass
