#pragma once

#include <jantzen/truncpoly.hpp>

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace jantzen {

// Exponents of one normal-ordered term x1^x1e x2^x2e d1^d1e d2^d2e.
// x2e may be negative on localized operators; derivative exponents never are.
struct WeylKey {
    long x1e = 0;
    long x2e = 0;
    long d1e = 0;
    long d2e = 0;
    auto operator<=>(const WeylKey&) const = default;
};

// Normal-ordered differential operator on C^2 with coefficients in Q[s]/s^n.
// s is central; undeformed computations use order 1.
class WeylOp {
public:
    explicit WeylOp(int order = 1, bool localized = false);

    static WeylOp zero(int order = 1, bool localized = false);
    static WeylOp one(int order = 1, bool localized = false);
    static WeylOp monomial(WeylKey key, TruncPoly coeff, bool localized = false);
    static WeylOp x1(int order = 1);
    static WeylOp x2(int order = 1, long power = 1);  // negative power => localized
    static WeylOp d1(int order = 1);
    static WeylOp d2(int order = 1);
    static WeylOp s(int order);

    int order() const { return order_; }
    bool localized() const { return localized_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<WeylKey, TruncPoly>& terms() const { return terms_; }

    WeylOp operator+(const WeylOp& rhs) const;
    WeylOp operator-(const WeylOp& rhs) const;
    WeylOp operator-() const;
    WeylOp operator*(const WeylOp& rhs) const;  // normal-ordered product
    WeylOp operator*(const Rational& c) const;

    bool operator==(const WeylOp& rhs) const;

    std::string str() const;

private:
    void insert(const WeylKey& key, const TruncPoly& coeff);

    int order_;
    bool localized_;
    std::map<WeylKey, TruncPoly> terms_;
};

WeylOp commutator(const WeylOp& p, const WeylOp& q);

// L and R embeddings of sec 2.1: e -> -x2 d1, f -> -x1 d2, h -> -x1 d1 + x2 d2,
// right h -> Euler operator x1 d1 + x2 d2.
WeylOp embed_L_e(int order = 1);
WeylOp embed_L_f(int order = 1);
WeylOp embed_L_h(int order = 1);
WeylOp embed_R_h(int order = 1);

// Finite Q-linear combination of words over the alphabet {e, f, h}.
class EnvWord {
public:
    EnvWord() = default;
    static EnvWord unit();               // the empty word
    static EnvWord letter(char c);       // 'e', 'f' or 'h'
    static EnvWord word(const std::string& w);
    static EnvWord casimir();            // h^2 + 2ef + 2fe

    EnvWord operator+(const EnvWord& rhs) const;
    EnvWord operator*(const EnvWord& rhs) const;  // concatenation, bilinear
    EnvWord operator*(const Rational& c) const;

    const std::map<std::string, Rational>& terms() const { return terms_; }

private:
    std::map<std::string, Rational> terms_;
};

// Multiplicative extension of the letter map above.
WeylOp embed_L(const EnvWord& w, int order = 1);

// Element of U(sl2) in the PBW basis f^i h^j e^k.
class PBWElement {
public:
    using Key = std::tuple<long, long, long>;  // (i, j, k)

    PBWElement() = default;

    void add(const Key& key, const Rational& c);
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PBWElement operator+(const PBWElement& rhs) const;
    PBWElement operator*(const Rational& c) const;
    bool operator==(const PBWElement& rhs) const { return terms_ == rhs.terms_; }

    std::string str() const;

private:
    std::map<Key, Rational> terms_;
};

// Rewrites a word into the PBW basis using [e,f]=h, [h,e]=2e, [h,f]=-2f.
PBWElement pbw_normal_order(const EnvWord& w);

// Harish-Chandra projection: keep only the f^0 h^j e^0 terms.
// Result is a polynomial in h as a map degree -> coefficient.
std::map<long, Rational> hc_project(const PBWElement& p);

// Laurent polynomial in x1 (exponent >= 0) and x2 (any exponent), with
// TruncPoly coefficients. The function target for apply().
class LaurentPoly {
public:
    explicit LaurentPoly(int order = 1);
    static LaurentPoly monomial(int order, long e1, long e2,
                                const TruncPoly& coeff);
    static LaurentPoly monomial(int order, long e1, long e2);

    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<long, long>, TruncPoly>& terms() const {
        return terms_;
    }

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    bool operator==(const LaurentPoly& rhs) const;

    std::string str() const;

private:
    void insert(long e1, long e2, const TruncPoly& coeff);
    friend LaurentPoly apply(const WeylOp&, const LaurentPoly&);

    int order_;
    std::map<std::pair<long, long>, TruncPoly> terms_;
};

// Standard differential-operator action.
LaurentPoly apply(const WeylOp& p, const LaurentPoly& f);

// d0 . d1 compositions for the two displayed free resolutions. Both must be
// zero for the complexes to be complexes.
struct ResolutionReport {
    WeylOp undeformed_composition;  // d0(d1(1)) with maps of the plain resolution
    WeylOp deformed_composition;    // same for the s-deformed resolution
    bool ok = false;
};
ResolutionReport check_resolution_complexes(int order = 2);

// embed_L(casimir) vs R_h^2 + 2 R_h, plus the displayed operator.
struct CasimirReport {
    WeylOp l_omega;
    WeylOp rh_expression;
    WeylOp displayed;
    bool ok = false;
};
CasimirReport casimir_identity_check(int order = 1);

// Parses operator expressions: tokens x1, x2, d1, d2, s, integers,
// '+', '-', '*', '^', parentheses. Throws std::invalid_argument on errors.
WeylOp parse_weyl_expr(const std::string& text, int order = 1,
                       bool localized = false);

}  // namespace jantzen
