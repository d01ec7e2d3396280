#pragma once

#include <jantzen/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace jantzen {

// Element of Q[s]/s^n. The truncation order n is carried on every value and
// must agree between operands; we never re-truncate silently.
class TruncPoly {
public:
    explicit TruncPoly(int order);
    TruncPoly(int order, std::vector<Rational> coeffs);

    static TruncPoly constant(int order, const Rational& c);
    static TruncPoly s(int order);

    // s(s-1)...(s-b+1) mod s^n; the empty product (b=0) is 1.
    static TruncPoly falling_factorial(long b, int order);

    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int i) const;

    // Smallest i with nonzero s^i coefficient; nullopt for the zero element.
    std::optional<int> valuation() const;

    TruncPoly operator+(const TruncPoly& rhs) const;
    TruncPoly operator-(const TruncPoly& rhs) const;
    TruncPoly operator*(const TruncPoly& rhs) const;
    TruncPoly operator-() const;
    TruncPoly operator*(const Rational& c) const;

    bool operator==(const TruncPoly& rhs) const = default;
    auto operator<=>(const TruncPoly& rhs) const = default;

    // "c0 + c1*s + c2*s^2", rationals rendered as "p/q".
    std::string str() const;

private:
    void trim();
    void check_order(const TruncPoly& rhs) const;

    int order_;
    std::vector<Rational> coeffs_;  // index i = coefficient of s^i, trimmed
};

}  // namespace jantzen
