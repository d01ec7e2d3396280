#include <jantzen/weyl.hpp>

#include <doctest.h>

#include "test_util.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace jantzen;

namespace {

WeylOp random_op(std::mt19937_64& rng, int terms, bool localized = false) {
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<int> x2exp(localized ? -2 : 0, 2);
    WeylOp p(1, localized);
    for (int t = 0; t < terms; ++t) {
        WeylKey key{exp(rng), x2exp(rng), exp(rng), exp(rng)};
        p = p + WeylOp::monomial(
                    key,
                    TruncPoly(1, {testutil::random_rational(rng)}),
                    localized);
    }
    return p;
}

LaurentPoly random_laurent(std::mt19937_64& rng, bool localized) {
    std::uniform_int_distribution<int> e1(0, 3);
    std::uniform_int_distribution<int> e2(localized ? -3 : 0, 3);
    LaurentPoly f(1);
    for (int t = 0; t < 3; ++t)
        f = f + LaurentPoly::monomial(
                    1, e1(rng), e2(rng),
                    TruncPoly(1, {testutil::random_rational(rng)}));
    return f;
}

}  // namespace

TEST_CASE("normal ordering basics") {
    // d1 x1 = x1 d1 + 1
    CHECK(WeylOp::d1() * WeylOp::x1() ==
          WeylOp::x1() * WeylOp::d1() + WeylOp::one());
    // d2 x2^-1 = x2^-1 d2 - x2^-2 on the localized algebra
    WeylOp lhs = WeylOp::d2(1) * WeylOp::x2(1, -1);
    WeylOp rhs = WeylOp::x2(1, -1) * WeylOp::d2(1) -
                 WeylOp::x2(1, -2);
    CHECK(lhs == rhs);
    // (x2 d1)(x1 d2) = x1 x2 d1 d2 + x2 d2
    CHECK(WeylOp::x2() * WeylOp::d1() * WeylOp::x1() * WeylOp::d2() ==
          WeylOp::x1() * WeylOp::x2() * WeylOp::d1() * WeylOp::d2() +
              WeylOp::x2() * WeylOp::d2());
    // d1^2 x1^2 = x1^2 d1^2 + 4 x1 d1 + 2
    WeylOp d1sq = WeylOp::d1() * WeylOp::d1();
    WeylOp x1sq = WeylOp::x1() * WeylOp::x1();
    CHECK(d1sq * x1sq == x1sq * d1sq + WeylOp::x1() * WeylOp::d1() *
                                           Rational(4) +
                             WeylOp::one() * Rational(2));
}

TEST_CASE("product is associative and distributive") {
    auto rng = testutil::make_rng();
    for (int trial = 0; trial < 30; ++trial) {
        bool localized = trial % 2 == 1;
        WeylOp a = random_op(rng, 2, localized);
        WeylOp b = random_op(rng, 2, localized);
        WeylOp c = random_op(rng, 2, localized);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("six commutation relations") {
    WeylOp e = embed_L_e(), f = embed_L_f(), h = embed_L_h(), rh = embed_R_h();
    CHECK(commutator(e, f) == h);
    // [Le,Lh] = 2 x2 d1 = -2 Le
    CHECK(commutator(e, h) == e * Rational(-2));
    CHECK(commutator(f, h) == f * Rational(2));
    CHECK(commutator(e, rh).is_zero());
    CHECK(commutator(f, rh).is_zero());
    CHECK(commutator(h, rh).is_zero());
    // The display behind relation 1: x2 d2 - x1 d1 = Lh.
    CHECK(WeylOp::x2() * WeylOp::d2() - WeylOp::x1() * WeylOp::d1() == h);
}

TEST_CASE("embed_L is multiplicative") {
    auto rng = testutil::make_rng();
    std::uniform_int_distribution<int> len(0, 3);
    std::uniform_int_distribution<int> letter(0, 2);
    const char alphabet[] = "efh";
    for (int trial = 0; trial < 25; ++trial) {
        std::string w1, w2;
        for (int i = len(rng); i > 0; --i)
            w1 += alphabet[letter(rng)];
        for (int i = len(rng); i > 0; --i)
            w2 += alphabet[letter(rng)];
        EnvWord a = EnvWord::word(w1), b = EnvWord::word(w2);
        CHECK(embed_L(a * b) == embed_L(a) * embed_L(b));
    }
}

TEST_CASE("casimir identity") {
    CasimirReport rep = casimir_identity_check();
    CHECK(rep.ok);
    WeylOp rh = embed_R_h();
    CHECK(rep.l_omega == rh * rh + rh * Rational(2));
    // The displayed operator, built literally.
    WeylOp displayed =
        WeylOp::x1() * WeylOp::x1() * WeylOp::d1() * WeylOp::d1() +
        WeylOp::x1() * WeylOp::d1() * Rational(3) +
        WeylOp::x2() * WeylOp::d2() * Rational(3) +
        WeylOp::x2() * WeylOp::x2() * WeylOp::d2() * WeylOp::d2() +
        WeylOp::x1() * WeylOp::x2() * WeylOp::d1() * WeylOp::d2() *
            Rational(2);
    CHECK(rep.l_omega == displayed);
    CHECK(embed_L(EnvWord::casimir()) == displayed);
    // Negative control: without the linear part the identity fails.
    CHECK(!(embed_L(EnvWord::casimir()) == rh * rh));
}

TEST_CASE("pbw rewriting") {
    // ef = fe + h
    PBWElement ef = pbw_normal_order(EnvWord::word("ef"));
    PBWElement expect;
    expect.add({1, 0, 1}, 1);
    expect.add({0, 1, 0}, 1);
    CHECK(ef == expect);
    // Omega = h^2 + 2h + 4fe
    PBWElement omega = pbw_normal_order(EnvWord::casimir());
    PBWElement omega_expect;
    omega_expect.add({0, 2, 0}, 1);
    omega_expect.add({0, 1, 0}, 2);
    omega_expect.add({1, 0, 1}, 4);
    CHECK(omega == omega_expect);
    // h is already ordered.
    PBWElement h;
    h.add({0, 1, 0}, 1);
    CHECK(pbw_normal_order(EnvWord::letter('h')) == h);
}

TEST_CASE("pbw respects the embedding") {
    // Sanity for the rewriting rules: embed_L of a word equals embed_L of its
    // PBW normal form, mapped term by term.
    auto rng = testutil::make_rng();
    std::uniform_int_distribution<int> len(1, 4);
    std::uniform_int_distribution<int> letter(0, 2);
    const char alphabet[] = "efh";
    for (int trial = 0; trial < 25; ++trial) {
        std::string w;
        for (int i = len(rng); i > 0; --i)
            w += alphabet[letter(rng)];
        PBWElement p = pbw_normal_order(EnvWord::word(w));
        WeylOp mapped = WeylOp::zero();
        for (const auto& [key, c] : p.terms()) {
            auto [i, j, k] = key;
            WeylOp term = WeylOp::one();
            for (long t = 0; t < i; ++t)
                term = term * embed_L_f();
            for (long t = 0; t < j; ++t)
                term = term * embed_L_h();
            for (long t = 0; t < k; ++t)
                term = term * embed_L_e();
            mapped = mapped + term * c;
        }
        CHECK(mapped == embed_L(EnvWord::word(w)));
    }
}

TEST_CASE("harish-chandra projection") {
    // pbw(Omega) -> h^2 + 2h
    auto hc = hc_project(pbw_normal_order(EnvWord::casimir()));
    std::map<long, Rational> expect{{2, 1}, {1, 2}};
    CHECK(hc == expect);
    // fe is dropped entirely.
    CHECK(hc_project(pbw_normal_order(EnvWord::word("fe"))).empty());
    // h^2 passes through.
    std::map<long, Rational> h2{{2, 1}};
    CHECK(hc_project(pbw_normal_order(EnvWord::word("hh"))) == h2);
    // Omega^2 is again a polynomial in h: (h^2+2h)^2 by the algebra
    // homomorphism property of the projection on the centre.
    EnvWord omega2 = EnvWord::casimir() * EnvWord::casimir();
    std::map<long, Rational> expect2{{4, 1}, {3, 4}, {2, 4}};
    CHECK(hc_project(pbw_normal_order(omega2)) == expect2);
}

TEST_CASE("action on Laurent polynomials") {
    // Le on x1^m x2^n = -m x1^(m-1) x2^(n+1)
    LaurentPoly f = LaurentPoly::monomial(1, 3, 2);
    LaurentPoly expect = LaurentPoly::monomial(
        1, 2, 3, TruncPoly(1, {Rational(-3)}));
    CHECK(apply(embed_L_e(), f) == expect);
    // Rh on x1^2 x2^-1 = 1 * x1^2 x2^-1
    LaurentPoly g = LaurentPoly::monomial(1, 2, -1);
    CHECK(apply(embed_R_h(), g) == g);
    // Euler operator on x1 x2.
    CHECK(apply(embed_R_h(), LaurentPoly::monomial(1, 1, 1)) ==
          LaurentPoly::monomial(1, 1, 1, TruncPoly(1, {Rational(2)})));
    // Anything on zero.
    CHECK(apply(embed_L_f(), LaurentPoly(1)).is_zero());
}

TEST_CASE("apply is compatible with composition") {
    auto rng = testutil::make_rng();
    for (int trial = 0; trial < 25; ++trial) {
        bool localized = trial % 2 == 1;
        WeylOp p = random_op(rng, 2, localized);
        WeylOp q = random_op(rng, 2, localized);
        LaurentPoly f = random_laurent(rng, localized);
        CHECK(apply(p * q, f) == apply(p, apply(q, f)));
    }
}

TEST_CASE("resolution complexes compose to zero") {
    ResolutionReport rep = check_resolution_complexes();
    CHECK(rep.ok);
    CHECK(rep.undeformed_composition.is_zero());
    CHECK(rep.deformed_composition.is_zero());
    // Negative control: perturbing d1 to 1 -> (x2 d2, d2) breaks the
    // complex, since d1 does not annihilate the extra d2 component.
    WeylOp d0_left = WeylOp::d1(2);                // . d1
    WeylOp bad = d0_left * WeylOp::d2(2);          // composition with d2 leg
    CHECK(!bad.is_zero());
}

TEST_CASE("expression parser round trips") {
    CHECK(parse_weyl_expr("x1*d1 + x2*d2") == embed_R_h());
    CHECK(parse_weyl_expr("-1*x2*d1") == embed_L_e());
    CHECK(parse_weyl_expr("x2^2*d2^2") ==
          WeylOp::x2() * WeylOp::x2() * WeylOp::d2() * WeylOp::d2());
    CHECK(parse_weyl_expr("(x1 + x2)^2") ==
          WeylOp::x1() * WeylOp::x1() +
              WeylOp::x1() * WeylOp::x2() * Rational(2) +
              WeylOp::x2() * WeylOp::x2());
    CHECK(parse_weyl_expr("s*s", 3) == WeylOp::s(3) * WeylOp::s(3));
    CHECK_THROWS_AS(parse_weyl_expr("x3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weyl_expr("x1 +"), std::invalid_argument);
}
