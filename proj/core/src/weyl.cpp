#include <jantzen/weyl.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace jantzen {

namespace {

// c(c-1)...(c-j+1) for arbitrary integer c; empty product is 1.
Integer falling(long c, long j) {
    Integer acc = 1;
    for (long i = 0; i < j; ++i)
        acc *= Integer(c - i);
    return acc;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    Integer acc = 1;
    for (long i = 0; i < k; ++i) {
        acc *= Integer(n - i);
        acc /= Integer(i + 1);
    }
    return acc;
}

}  // namespace

WeylOp::WeylOp(int order, bool localized) : order_(order), localized_(localized) {
    if (order < 1)
        throw std::invalid_argument("truncation order must be positive");
}

WeylOp WeylOp::zero(int order, bool localized) { return WeylOp(order, localized); }

WeylOp WeylOp::one(int order, bool localized) {
    return monomial({0, 0, 0, 0}, TruncPoly::constant(order, 1), localized);
}

WeylOp WeylOp::monomial(WeylKey key, TruncPoly coeff, bool localized) {
    if (key.x1e < 0 || key.d1e < 0 || key.d2e < 0)
        throw std::invalid_argument("negative exponent in Weyl monomial");
    if (key.x2e < 0 && !localized)
        throw std::invalid_argument("negative x2 exponent requires localization");
    WeylOp op(coeff.order(), localized);
    op.insert(key, coeff);
    return op;
}

WeylOp WeylOp::x1(int order) {
    return monomial({1, 0, 0, 0}, TruncPoly::constant(order, 1));
}

WeylOp WeylOp::x2(int order, long power) {
    return monomial({0, power, 0, 0}, TruncPoly::constant(order, 1), power < 0);
}

WeylOp WeylOp::d1(int order) {
    return monomial({0, 0, 1, 0}, TruncPoly::constant(order, 1));
}

WeylOp WeylOp::d2(int order) {
    return monomial({0, 0, 0, 1}, TruncPoly::constant(order, 1));
}

WeylOp WeylOp::s(int order) {
    return monomial({0, 0, 0, 0}, TruncPoly::s(order));
}

void WeylOp::insert(const WeylKey& key, const TruncPoly& coeff) {
    if (coeff.is_zero())
        return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

WeylOp WeylOp::operator+(const WeylOp& rhs) const {
    if (order_ != rhs.order_)
        throw std::invalid_argument("mismatched truncation orders");
    WeylOp out(order_, localized_ || rhs.localized_);
    out.terms_ = terms_;
    for (const auto& [key, coeff] : rhs.terms_)
        out.insert(key, coeff);
    return out;
}

WeylOp WeylOp::operator-() const {
    WeylOp out(order_, localized_);
    for (const auto& [key, coeff] : terms_)
        out.terms_.emplace(key, -coeff);
    return out;
}

WeylOp WeylOp::operator-(const WeylOp& rhs) const { return *this + (-rhs); }

WeylOp WeylOp::operator*(const Rational& c) const {
    WeylOp out(order_, localized_);
    if (c == 0)
        return out;
    for (const auto& [key, coeff] : terms_)
        out.terms_.emplace(key, coeff * c);
    return out;
}

WeylOp WeylOp::operator*(const WeylOp& rhs) const {
    if (order_ != rhs.order_)
        throw std::invalid_argument("mismatched truncation orders");
    WeylOp out(order_, localized_ || rhs.localized_);
    for (const auto& [p, pc] : terms_) {
        for (const auto& [q, qc] : rhs.terms_) {
            TruncPoly base = pc * qc;
            // Normal order d1^p x1^q and d2^p x2^q independently via Leibniz.
            for (long j1 = 0; j1 <= p.d1e; ++j1) {
                Integer c1 = binomial(p.d1e, j1) * falling(q.x1e, j1);
                if (c1 == 0)
                    continue;
                for (long j2 = 0; j2 <= p.d2e; ++j2) {
                    Integer c2 = binomial(p.d2e, j2) * falling(q.x2e, j2);
                    if (c2 == 0)
                        continue;
                    WeylKey key{p.x1e + q.x1e - j1, p.x2e + q.x2e - j2,
                                p.d1e - j1 + q.d1e, p.d2e - j2 + q.d2e};
                    out.insert(key, base * Rational(c1 * c2));
                }
            }
        }
    }
    return out;
}

bool WeylOp::operator==(const WeylOp& rhs) const {
    return order_ == rhs.order_ && terms_ == rhs.terms_;
}

std::string WeylOp::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        std::vector<std::string> parts;
        bool constant_one = (coeff == TruncPoly::constant(order_, 1));
        if (!constant_one) {
            std::string c = coeff.str();
            if (c.find('+') != std::string::npos)
                c = "(" + c + ")";
            parts.push_back(c);
        }
        auto emit = [&parts](const char* sym, long e) {
            if (e == 0)
                return;
            std::string t = sym;
            if (e != 1)
                t += "^" + std::to_string(e);
            parts.push_back(t);
        };
        emit("x1", key.x1e);
        emit("x2", key.x2e);
        emit("d1", key.d1e);
        emit("d2", key.d2e);
        if (parts.empty())
            parts.push_back("1");
        for (size_t i = 0; i < parts.size(); ++i)
            os << (i ? "*" : "") << parts[i];
    }
    return os.str();
}

WeylOp commutator(const WeylOp& p, const WeylOp& q) { return p * q - q * p; }

WeylOp embed_L_e(int order) { return -(WeylOp::x2(order) * WeylOp::d1(order)); }
WeylOp embed_L_f(int order) { return -(WeylOp::x1(order) * WeylOp::d2(order)); }
WeylOp embed_L_h(int order) {
    return WeylOp::x2(order) * WeylOp::d2(order) -
           WeylOp::x1(order) * WeylOp::d1(order);
}
WeylOp embed_R_h(int order) {
    return WeylOp::x1(order) * WeylOp::d1(order) +
           WeylOp::x2(order) * WeylOp::d2(order);
}

EnvWord EnvWord::unit() { return word(""); }

EnvWord EnvWord::letter(char c) { return word(std::string(1, c)); }

EnvWord EnvWord::word(const std::string& w) {
    for (char c : w)
        if (c != 'e' && c != 'f' && c != 'h')
            throw std::invalid_argument("alphabet is {e, f, h}");
    EnvWord out;
    out.terms_[w] = 1;
    return out;
}

EnvWord EnvWord::casimir() {
    return word("hh") + word("ef") * Rational(2) + word("fe") * Rational(2);
}

EnvWord EnvWord::operator+(const EnvWord& rhs) const {
    EnvWord out = *this;
    for (const auto& [w, c] : rhs.terms_) {
        auto it = out.terms_.find(w);
        if (it == out.terms_.end()) {
            out.terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0)
                out.terms_.erase(it);
        }
    }
    return out;
}

EnvWord EnvWord::operator*(const EnvWord& rhs) const {
    EnvWord out;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : rhs.terms_) {
            Rational c = c1 * c2;
            auto it = out.terms_.find(w1 + w2);
            if (it == out.terms_.end())
                out.terms_.emplace(w1 + w2, c);
            else
                it->second += c;
        }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

EnvWord EnvWord::operator*(const Rational& c) const {
    EnvWord out;
    if (c == 0)
        return out;
    for (const auto& [w, c0] : terms_)
        out.terms_.emplace(w, c0 * c);
    return out;
}

WeylOp embed_L(const EnvWord& w, int order) {
    WeylOp out = WeylOp::zero(order);
    for (const auto& [word, c] : w.terms()) {
        WeylOp prod = WeylOp::one(order);
        for (char letter : word) {
            switch (letter) {
                case 'e': prod = prod * embed_L_e(order); break;
                case 'f': prod = prod * embed_L_f(order); break;
                case 'h': prod = prod * embed_L_h(order); break;
            }
        }
        out = out + prod * c;
    }
    return out;
}

void PBWElement::add(const Key& key, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

PBWElement PBWElement::operator+(const PBWElement& rhs) const {
    PBWElement out = *this;
    for (const auto& [key, c] : rhs.terms_)
        out.add(key, c);
    return out;
}

PBWElement PBWElement::operator*(const Rational& c) const {
    PBWElement out;
    for (const auto& [key, c0] : terms_)
        out.add(key, c0 * c);
    return out;
}

std::string PBWElement::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        auto [i, j, k] = key;
        if (!first)
            os << " + ";
        first = false;
        std::vector<std::string> parts;
        if (c != 1 || (i == 0 && j == 0 && k == 0))
            parts.push_back(to_string(c));
        auto emit = [&parts](const char* sym, long e) {
            if (e == 0)
                return;
            std::string t = sym;
            if (e != 1)
                t += "^" + std::to_string(e);
            parts.push_back(t);
        };
        emit("f", i);
        emit("h", j);
        emit("e", k);
        for (size_t n = 0; n < parts.size(); ++n)
            os << (n ? "*" : "") << parts[n];
    }
    return os.str();
}

namespace {

// Right-multiplication of a PBW basis element by a single generator,
// using [e,f]=h, [h,e]=2e, [h,f]=-2f.
PBWElement pbw_mul_letter(const PBWElement::Key& key, char letter) {
    auto [i, j, k] = key;
    PBWElement out;
    switch (letter) {
        case 'e':
            out.add({i, j, k + 1}, 1);
            break;
        case 'h':
            // e^k h = (h - 2k) e^k
            out.add({i, j + 1, k}, 1);
            out.add({i, j, k}, Rational(-2 * k));
            break;
        case 'f': {
            // e^k f = f e^k + k h e^{k-1} - k(k-1) e^{k-1}
            // h^j f = f (h-2)^j
            for (long m = 0; m <= j; ++m) {
                Integer c = binomial(j, m);
                Integer p = 1;
                for (long t = 0; t < j - m; ++t)
                    p *= -2;
                out.add({i + 1, m, k}, Rational(c * p));
            }
            if (k > 0) {
                out.add({i, j + 1, k - 1}, Rational(k));
                out.add({i, j, k - 1}, Rational(-Integer(k) * (k - 1)));
            }
            break;
        }
        default:
            throw std::invalid_argument("alphabet is {e, f, h}");
    }
    return out;
}

}  // namespace

PBWElement pbw_normal_order(const EnvWord& w) {
    PBWElement out;
    for (const auto& [word, c] : w.terms()) {
        PBWElement acc;
        acc.add({0, 0, 0}, 1);
        for (char letter : word) {
            PBWElement next;
            for (const auto& [key, c0] : acc.terms())
                next = next + pbw_mul_letter(key, letter) * c0;
            acc = next;
        }
        out = out + acc * c;
    }
    return out;
}

std::map<long, Rational> hc_project(const PBWElement& p) {
    std::map<long, Rational> out;
    for (const auto& [key, c] : p.terms()) {
        auto [i, j, k] = key;
        if (i == 0 && k == 0)
            out[j] = c;
    }
    return out;
}

LaurentPoly::LaurentPoly(int order) : order_(order) {
    if (order < 1)
        throw std::invalid_argument("truncation order must be positive");
}

LaurentPoly LaurentPoly::monomial(int order, long e1, long e2,
                                  const TruncPoly& coeff) {
    if (e1 < 0)
        throw std::invalid_argument("negative x1 exponent");
    LaurentPoly out(order);
    out.insert(e1, e2, coeff);
    return out;
}

LaurentPoly LaurentPoly::monomial(int order, long e1, long e2) {
    return monomial(order, e1, e2, TruncPoly::constant(order, 1));
}

void LaurentPoly::insert(long e1, long e2, const TruncPoly& coeff) {
    if (coeff.is_zero())
        return;
    auto it = terms_.find({e1, e2});
    if (it == terms_.end()) {
        terms_.emplace(std::make_pair(e1, e2), coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    if (order_ != rhs.order_)
        throw std::invalid_argument("mismatched truncation orders");
    LaurentPoly out = *this;
    for (const auto& [key, coeff] : rhs.terms_)
        out.insert(key.first, key.second, coeff);
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    return order_ == rhs.order_ && terms_ == rhs.terms_;
}

std::string LaurentPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        std::string c = coeff.str();
        if (c.find('+') != std::string::npos)
            c = "(" + c + ")";
        os << c;
        if (key.first != 0)
            os << "*x1" << (key.first != 1 ? "^" + std::to_string(key.first) : "");
        if (key.second != 0)
            os << "*x2" << (key.second != 1 ? "^" + std::to_string(key.second) : "");
    }
    return os.str();
}

LaurentPoly apply(const WeylOp& p, const LaurentPoly& f) {
    if (p.order() != f.order())
        throw std::invalid_argument("mismatched truncation orders");
    LaurentPoly out(f.order());
    for (const auto& [key, pc] : p.terms()) {
        for (const auto& [mono, fc] : f.terms()) {
            Integer c = falling(mono.first, key.d1e) * falling(mono.second, key.d2e);
            if (c == 0)
                continue;
            long e1 = mono.first - key.d1e + key.x1e;
            long e2 = mono.second - key.d2e + key.x2e;
            if (e1 < 0)
                throw std::domain_error("operator produced a negative x1 exponent");
            out.insert(e1, e2, pc * fc * Rational(c));
        }
    }
    return out;
}

ResolutionReport check_resolution_complexes(int order) {
    ResolutionReport report;
    const WeylOp d1op = WeylOp::d1(order);
    const WeylOp x2d2 = WeylOp::x2(order) * WeylOp::d2(order);
    const WeylOp x2d2s = x2d2 - WeylOp::s(order);

    // Plain resolution: d1: 1 -> (x2 d2, d1); d0: (t1, t2) -> d1 t1 - x2 d2 t2.
    report.undeformed_composition = d1op * x2d2 - x2d2 * d1op;
    // Deformed resolution: d1: 1 -> (x2 d2 - s, d1);
    // d0: (t1, t2) -> t1 d1 - t2 (x2 d2 - s).
    report.deformed_composition = x2d2s * d1op - d1op * x2d2s;

    report.ok = report.undeformed_composition.is_zero() &&
                report.deformed_composition.is_zero();
    return report;
}

CasimirReport casimir_identity_check(int order) {
    CasimirReport report;
    report.l_omega = embed_L(EnvWord::casimir(), order);
    WeylOp rh = embed_R_h(order);
    report.rh_expression = rh * rh + rh * Rational(2);
    // x1^2 d1^2 + 3 x1 d1 + 3 x2 d2 + x2^2 d2^2 + 2 x1 x2 d1 d2
    const TruncPoly one = TruncPoly::constant(order, 1);
    const TruncPoly three = TruncPoly::constant(order, 3);
    report.displayed =
        WeylOp::monomial({2, 0, 2, 0}, one) +
        WeylOp::monomial({1, 0, 1, 0}, three) +
        WeylOp::monomial({0, 1, 0, 1}, three) +
        WeylOp::monomial({0, 2, 0, 2}, one) +
        WeylOp::monomial({1, 1, 1, 1}, TruncPoly::constant(order, 2));
    report.ok = report.l_omega == report.rh_expression &&
                report.l_omega == report.displayed;
    return report;
}

namespace {

class ExprParser {
public:
    ExprParser(const std::string& text, int order, bool localized)
        : text_(text), order_(order), localized_(localized) {}

    WeylOp parse() {
        WeylOp result = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            throw std::invalid_argument("trailing input at position " +
                                        std::to_string(pos_));
        return result;
    }

private:
    WeylOp parse_sum() {
        WeylOp acc = parse_product();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + parse_product();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - parse_product();
            } else {
                return acc;
            }
        }
    }

    WeylOp parse_product() {
        WeylOp acc = parse_power();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * parse_power();
            } else {
                return acc;
            }
        }
    }

    WeylOp parse_power() {
        WeylOp base = parse_atom();
        skip_ws();
        if (peek() != '^')
            return base;
        ++pos_;
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        long e = parse_integer();
        if (neg)
            e = -e;
        if (e < 0) {
            // Only x2 supports negative powers, and only when localized.
            WeylOp x2m = base;
            if (!(x2m == WeylOp::x2(order_)))
                throw std::invalid_argument("negative power of a non-x2 atom");
            if (!localized_)
                throw std::invalid_argument("negative x2 power requires --localized");
            return WeylOp::x2(order_, e);
        }
        WeylOp acc = WeylOp::one(order_, localized_);
        for (long i = 0; i < e; ++i)
            acc = acc * base;
        return acc;
    }

    WeylOp parse_atom() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            WeylOp inner = parse_sum();
            skip_ws();
            if (peek() != ')')
                throw std::invalid_argument("expected ')'");
            ++pos_;
            return inner;
        }
        if (peek() == '-') {
            ++pos_;
            return -parse_atom();
        }
        if (std::isdigit(static_cast<unsigned char>(peek())))
            return WeylOp::one(order_, localized_) * Rational(parse_integer());
        if (match("x1")) return promote(WeylOp::x1(order_));
        if (match("x2")) return promote(WeylOp::x2(order_));
        if (match("d1")) return promote(WeylOp::d1(order_));
        if (match("d2")) return promote(WeylOp::d2(order_));
        if (match("s")) return promote(WeylOp::s(order_));
        throw std::invalid_argument("unexpected token at position " +
                                    std::to_string(pos_));
    }

    WeylOp promote(WeylOp op) const {
        return localized_ ? WeylOp::one(order_, true) * op : op;
    }

    long parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw std::invalid_argument("expected integer at position " +
                                        std::to_string(start));
        return std::stol(text_.substr(start, pos_ - start));
    }

    bool match(const std::string& token) {
        if (text_.compare(pos_, token.size(), token) == 0) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int order_;
    bool localized_;
};

}  // namespace

WeylOp parse_weyl_expr(const std::string& text, int order, bool localized) {
    return ExprParser(text, order, localized).parse();
}

}  // namespace jantzen
