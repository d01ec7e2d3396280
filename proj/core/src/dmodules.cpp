#include <jantzen/dmodules.hpp>

#include <jantzen/truncpoly.hpp>

#include <sstream>
#include <stdexcept>

namespace jantzen {

std::string ModuleFamily::str() const {
    switch (tag) {
        case FamilyTag::Plus: return "plus";
        case FamilyTag::Shriek: return "shriek";
        case FamilyTag::DefPlus: return "defplus(" + std::to_string(n) + ")";
        case FamilyTag::DefShriek: return "defshriek(" + std::to_string(n) + ")";
        case FamilyTag::MaxExt: return "maxext";
    }
    return "?";
}

ModuleFamily parse_family(const std::string& name, int n) {
    if (name == "plus") return ModuleFamily::plus();
    if (name == "shriek") return ModuleFamily::shriek();
    if (name == "defplus") return ModuleFamily::def_plus(n);
    if (name == "defshriek") return ModuleFamily::def_shriek(n);
    if (name == "maxext") return ModuleFamily::max_ext();
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::string Monomial::str(const ModuleFamily& family) const {
    bool d2_sector = (family.tag == FamilyTag::Shriek ||
                      family.tag == FamilyTag::DefShriek) && l < 0;
    std::ostringstream os;
    std::vector<std::string> parts;
    if (k != 0)
        parts.push_back("x1" + (k != 1 ? "^" + std::to_string(k) : ""));
    if (l != 0) {
        if (d2_sector)
            parts.push_back("d2" + (l != -1 ? "^" + std::to_string(-l) : ""));
        else
            parts.push_back("x2" + (l != 1 ? "^" + std::to_string(l) : ""));
    }
    if (m != 0)
        parts.push_back("s" + (m != 1 ? "^" + std::to_string(m) : ""));
    if (parts.empty())
        parts.push_back("1");
    for (size_t i = 0; i < parts.size(); ++i)
        os << (i ? " " : "") << parts[i];
    return os.str();
}

bool admissible(const ModuleFamily& family, const Monomial& mono) {
    if (mono.k < 0 || mono.m < 0)
        return false;
    switch (family.tag) {
        case FamilyTag::Plus:
        case FamilyTag::Shriek:
            return mono.m == 0;
        case FamilyTag::DefPlus:
        case FamilyTag::DefShriek:
            return mono.m < family.n;
        case FamilyTag::MaxExt:
            return mono.m == 0 || (mono.m == 1 && mono.l < 0);
    }
    return false;
}

OpName parse_op(const std::string& name) {
    if (name == "Le") return OpName::Le;
    if (name == "Lf") return OpName::Lf;
    if (name == "Lh") return OpName::Lh;
    if (name == "Rh") return OpName::Rh;
    if (name == "Omega") return OpName::Omega;
    if (name == "S") return OpName::S;
    throw std::invalid_argument("unknown operator '" + name + "'");
}

std::string op_name(OpName op) {
    switch (op) {
        case OpName::Le: return "Le";
        case OpName::Lf: return "Lf";
        case OpName::Lh: return "Lh";
        case OpName::Rh: return "Rh";
        case OpName::Omega: return "Omega";
        case OpName::S: return "S";
    }
    return "?";
}

Element::Element(ModuleFamily family) : family_(family) {}

Element Element::monomial(ModuleFamily family, const Monomial& mono,
                          const Rational& c) {
    if (!admissible(family, mono))
        throw std::invalid_argument("monomial not admissible in " + family.str());
    Element out(family);
    out.add(mono, c);
    return out;
}

void Element::add(const Monomial& mono, const Rational& c) {
    if (c == 0)
        return;
    // Ring truncation: s-powers at or beyond the family order vanish.
    if (mono.m >= family_.n)
        return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Element Element::operator+(const Element& rhs) const {
    if (!(family_ == rhs.family_))
        throw std::invalid_argument("family mismatch");
    Element out = *this;
    for (const auto& [mono, c] : rhs.terms_)
        out.add(mono, c);
    return out;
}

Element Element::operator-(const Element& rhs) const {
    return *this + rhs * Rational(-1);
}

Element Element::operator*(const Rational& c) const {
    Element out(family_);
    if (c == 0)
        return out;
    for (const auto& [mono, c0] : terms_)
        out.terms_.emplace(mono, c0 * c);
    return out;
}

bool Element::operator==(const Element& rhs) const {
    return family_ == rhs.family_ && terms_ == rhs.terms_;
}

std::string Element::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << to_string(c) << "*";
        os << "(" << mono.k << "," << mono.l << "," << mono.m << ")";
    }
    return os.str();
}

std::string Element::json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first)
            os << ",";
        first = false;
        os << "[" << numerator(c) << "," << denominator(c) << "," << mono.k
           << "," << mono.l << "," << mono.m << "]";
    }
    os << "]";
    return os.str();
}

namespace {

using Terms = std::vector<std::pair<Monomial, Rational>>;

// Raw monomial action, before ring truncation and the MaxExt normal form.
// The x2-sector (l >= 0 in Shriek-type families, all l in Plus-type families)
// follows the deformed dual Verma formulas; the d2-sector (l < 0 encoding
// x1^k d2^(-l)) follows the deformed Verma formulas.
Terms act_raw(OpName op, const ModuleFamily& family, const Monomial& v) {
    const long k = v.k, l = v.l, m = v.m;
    const bool shriek_type = family.tag == FamilyTag::Shriek ||
                             family.tag == FamilyTag::DefShriek;
    Terms out;
    switch (op) {
        case OpName::Le:
            if (shriek_type && l < 0) {
                // a(b-1-s) x1^(a-1) d2^(b-1), a=k, b=-l
                out.push_back({{k - 1, l + 1, m}, Rational(k) * (-l - 1)});
                out.push_back({{k - 1, l + 1, m + 1}, Rational(-k)});
            } else {
                out.push_back({{k - 1, l + 1, m}, Rational(-k)});
            }
            break;
        case OpName::Lf:
            if (shriek_type && l <= 0) {
                out.push_back({{k + 1, l - 1, m}, Rational(-1)});
            } else {
                out.push_back({{k + 1, l - 1, m}, Rational(-l)});
                out.push_back({{k + 1, l - 1, m + 1}, Rational(-1)});
            }
            break;
        case OpName::Lh:
            out.push_back({{k, l, m}, Rational(l - k)});
            out.push_back({{k, l, m + 1}, Rational(1)});
            break;
        case OpName::Rh:
            out.push_back({{k, l, m}, Rational(k + l)});
            out.push_back({{k, l, m + 1}, Rational(1)});
            break;
        case OpName::S:
            out.push_back({{k, l, m + 1}, Rational(1)});
            break;
        case OpName::Omega:
            throw std::logic_error("Omega is handled by composition");
    }
    std::erase_if(out, [](const auto& t) {
        return t.second == 0 || t.first.k < 0;
    });
    return out;
}

}  // namespace

Element maxext_normal_form(const Element& v) {
    if (v.family().n != 2)
        throw std::invalid_argument("normal form expects an order-2 element");
    Element out(ModuleFamily::max_ext());
    for (const auto& [mono, c] : v.terms()) {
        if (mono.m >= 2)
            throw std::domain_error("monomial with m >= 2 reached the normal form");
        if (mono.m == 1 && mono.l >= 0)
            continue;  // quotient kills C[x1,x2] (x) s
        out.add(mono, c);
    }
    return out;
}

Element act(OpName op, const Element& v) {
    if (op == OpName::Omega) {
        // h^2 + 2ef + 2fe through the embedded operators.
        Element hh = act(OpName::Lh, act(OpName::Lh, v));
        Element ef = act(OpName::Le, act(OpName::Lf, v));
        Element fe = act(OpName::Lf, act(OpName::Le, v));
        return hh + ef * Rational(2) + fe * Rational(2);
    }
    const bool is_maxext = v.family().tag == FamilyTag::MaxExt;
    // MaxExt computes in the ambient order-2 Plus shape, then projects.
    ModuleFamily work = is_maxext ? ModuleFamily::def_plus(2) : v.family();
    Element out(work);
    for (const auto& [mono, c] : v.terms())
        for (const auto& [target, coeff] : act_raw(op, work, mono))
            out.add(target, coeff * c);
    return is_maxext ? maxext_normal_form(out) : out;
}

Element can(const Element& v) {
    if (v.family().tag != FamilyTag::DefShriek)
        throw std::invalid_argument("can expects a DefShriek element");
    const int n = v.family().n;
    Element out(ModuleFamily::def_plus(n));
    for (const auto& [mono, c] : v.terms()) {
        if (mono.l >= 0) {
            out.add(mono, c);
            continue;
        }
        TruncPoly ff = TruncPoly::falling_factorial(-mono.l, n);
        for (int j = 0; j <= ff.degree(); ++j)
            out.add({mono.k, mono.l, mono.m + j}, c * ff.coeff(j));
    }
    return out;
}

Element s1n(const Element& v) { return act(OpName::S, can(v)); }

Element canbar(const Element& v) {
    if (v.family().tag != FamilyTag::Shriek)
        throw std::invalid_argument("canbar expects a Shriek element");
    Element lifted(ModuleFamily::def_shriek(2));
    for (const auto& [mono, c] : v.terms())
        lifted.add(mono, c);
    return maxext_normal_form(can(lifted));
}

std::vector<Monomial> weight_space_basis(const ModuleFamily& family, long slice,
                                         long weight) {
    std::vector<Monomial> out;
    if ((slice - weight) % 2 != 0)
        return out;
    long k = (slice - weight) / 2;
    long l = (slice + weight) / 2;
    if (k < 0)
        return out;
    long m_max = family.tag == FamilyTag::MaxExt ? (l < 0 ? 2 : 1) : family.n;
    for (long m = 0; m < m_max; ++m)
        if (admissible(family, {k, l, m}))
            out.push_back({k, l, m});
    return out;
}

MapName to_map(OpName op) {
    switch (op) {
        case OpName::Le: return MapName::Le;
        case OpName::Lf: return MapName::Lf;
        case OpName::Lh: return MapName::Lh;
        case OpName::Rh: return MapName::Rh;
        case OpName::Omega: return MapName::Omega;
        case OpName::S: return MapName::S;
    }
    throw std::logic_error("unreachable");
}

OpMatrix op_matrix(MapName map, const ModuleFamily& family, long slice,
                   long weight) {
    OpMatrix result;
    result.source_family = family;
    result.target_family = family;
    result.target_weight = weight;
    switch (map) {
        case MapName::Le: result.target_weight = weight + 2; break;
        case MapName::Lf: result.target_weight = weight - 2; break;
        case MapName::Can:
        case MapName::S1n:
            if (family.tag != FamilyTag::DefShriek)
                throw std::invalid_argument("Can/S1n expect DefShriek");
            result.target_family = ModuleFamily::def_plus(family.n);
            break;
        case MapName::Canbar:
            if (family.tag != FamilyTag::Shriek)
                throw std::invalid_argument("Canbar expects Shriek");
            result.target_family = ModuleFamily::max_ext();
            break;
        default: break;
    }
    result.source = weight_space_basis(family, slice, weight);
    result.target =
        weight_space_basis(result.target_family, slice, result.target_weight);
    result.mat = QMatrix(static_cast<int>(result.target.size()),
                         static_cast<int>(result.source.size()));

    std::map<Monomial, int> target_index;
    for (size_t i = 0; i < result.target.size(); ++i)
        target_index[result.target[i]] = static_cast<int>(i);

    for (size_t j = 0; j < result.source.size(); ++j) {
        Element v = Element::monomial(family, result.source[j]);
        Element image(result.target_family);
        switch (map) {
            case MapName::Can: image = can(v); break;
            case MapName::S1n: image = s1n(v); break;
            case MapName::Canbar: image = canbar(v); break;
            default: {
                OpName op = map == MapName::Le   ? OpName::Le
                            : map == MapName::Lf ? OpName::Lf
                            : map == MapName::Lh ? OpName::Lh
                            : map == MapName::Rh ? OpName::Rh
                            : map == MapName::S  ? OpName::S
                                                 : OpName::Omega;
                image = act(op, v);
            }
        }
        for (const auto& [mono, c] : image.terms()) {
            auto it = target_index.find(mono);
            if (it == target_index.end())
                throw std::logic_error("image escaped the target weight space");
            result.mat.at(it->second, static_cast<int>(j)) = c;
        }
    }
    return result;
}

StabilizationReport stabilization_check(long slice, long wmin, long wmax,
                                        const std::vector<int>& orders) {
    StabilizationReport report;
    report.slice = slice;
    report.orders = orders;
    for (long w = wmax; w >= wmin; --w) {
        if ((slice - w) % 2 != 0)
            continue;
        StabilizationReport::Row row;
        row.weight = w;
        for (int n : orders) {
            OpMatrix m = op_matrix(MapName::S1n, ModuleFamily::def_shriek(n),
                                   slice, w);
            QMatrix r = m.mat;
            int rank = r.rref();
            row.coker_dims.push_back(static_cast<int>(m.target.size()) - rank);
        }
        row.stable = true;
        for (int d : row.coker_dims)
            if (d != row.coker_dims.front())
                row.stable = false;
        report.all_stable = report.all_stable && row.stable;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace jantzen
