#include <jantzen/truncpoly.hpp>

#include <sstream>
#include <stdexcept>

namespace jantzen {

Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

TruncPoly::TruncPoly(int order) : order_(order) {
    if (order < 1)
        throw std::invalid_argument("truncation order must be positive");
}

TruncPoly::TruncPoly(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 1)
        throw std::invalid_argument("truncation order must be positive");
    if (static_cast<int>(coeffs_.size()) > order_)
        coeffs_.resize(order_);
    trim();
}

TruncPoly TruncPoly::constant(int order, const Rational& c) {
    return TruncPoly(order, {c});
}

TruncPoly TruncPoly::s(int order) {
    return TruncPoly(order, {Rational(0), Rational(1)});
}

TruncPoly TruncPoly::falling_factorial(long b, int order) {
    if (b < 0)
        throw std::invalid_argument("falling_factorial: negative argument");
    TruncPoly acc = constant(order, 1);
    for (long j = 0; j < b; ++j)
        acc = acc * (s(order) - constant(order, Rational(j)));
    return acc;
}

Rational TruncPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return Rational(0);
    return coeffs_[i];
}

std::optional<int> TruncPoly::valuation() const {
    for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i)
        if (coeffs_[i] != 0)
            return i;
    return std::nullopt;
}

void TruncPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

void TruncPoly::check_order(const TruncPoly& rhs) const {
    if (order_ != rhs.order_)
        throw std::invalid_argument("mismatched truncation orders " +
                                    std::to_string(order_) + " vs " +
                                    std::to_string(rhs.order_));
}

TruncPoly TruncPoly::operator+(const TruncPoly& rhs) const {
    check_order(rhs);
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
    return TruncPoly(order_, std::move(out));
}

TruncPoly TruncPoly::operator-(const TruncPoly& rhs) const {
    return *this + (-rhs);
}

TruncPoly TruncPoly::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = -coeffs_[i];
    return TruncPoly(order_, std::move(out));
}

TruncPoly TruncPoly::operator*(const TruncPoly& rhs) const {
    check_order(rhs);
    std::vector<Rational> out(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < rhs.coeffs_.size() && i + j < out.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return TruncPoly(order_, std::move(out));
}

TruncPoly TruncPoly::operator*(const Rational& c) const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = coeffs_[i] * c;
    return TruncPoly(order_, std::move(out));
}

std::string TruncPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0) {
            os << to_string(coeffs_[i]);
        } else {
            if (coeffs_[i] != 1)
                os << to_string(coeffs_[i]) << "*";
            os << "s";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace jantzen
