#pragma once

#include <jantzen/linalg.hpp>
#include <jantzen/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace jantzen {

// The five global-sections module families. n is the s-truncation order:
// 1 for the undeformed families, 2 internally for the maximal extension.
enum class FamilyTag { Plus, Shriek, DefPlus, DefShriek, MaxExt };

struct ModuleFamily {
    FamilyTag tag;
    int n;

    static ModuleFamily plus() { return {FamilyTag::Plus, 1}; }
    static ModuleFamily shriek() { return {FamilyTag::Shriek, 1}; }
    static ModuleFamily def_plus(int n) { return {FamilyTag::DefPlus, n}; }
    static ModuleFamily def_shriek(int n) { return {FamilyTag::DefShriek, n}; }
    static ModuleFamily max_ext() { return {FamilyTag::MaxExt, 2}; }

    bool operator==(const ModuleFamily&) const = default;
    std::string str() const;
};

ModuleFamily parse_family(const std::string& name, int n);

// Basis index x1^k x2^l s^m. In the Shriek-type families l < 0 encodes the
// d2-sector monomial x1^k d2^(-l) s^m. slice = k+l indexes the (dual) Verma,
// weight = l-k is the position within it.
struct Monomial {
    long k = 0;
    long l = 0;
    long m = 0;
    auto operator<=>(const Monomial&) const = default;

    long slice() const { return k + l; }
    long weight() const { return l - k; }
    std::string str(const ModuleFamily& family) const;
};

bool admissible(const ModuleFamily& family, const Monomial& mono);

enum class OpName { Le, Lf, Lh, Rh, Omega, S };
OpName parse_op(const std::string& name);
std::string op_name(OpName op);

// Finite Q-linear combination of admissible monomials of one family.
class Element {
public:
    explicit Element(ModuleFamily family);
    static Element monomial(ModuleFamily family, const Monomial& mono,
                            const Rational& c = 1);

    const ModuleFamily& family() const { return family_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Monomial& mono, const Rational& c);  // drops m >= n silently
    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator*(const Rational& c) const;
    bool operator==(const Element& rhs) const;

    std::string str() const;
    std::string json() const;  // arrays of [num, den, k, l, m]

private:
    ModuleFamily family_;
    std::map<Monomial, Rational> terms_;
};

// Linear extension of the per-family monomial action formulas. Omega acts via
// the expanded word h^2 + 2ef + 2fe, so the displayed diagonal formula stays
// available as an independent check.
Element act(OpName op, const Element& v);

// Canonical map DefShriek(n) -> DefPlus(n): identity on the x2-sector, the
// falling factorial s(s-1)...(s-b+1) on the d2-sector.
Element can(const Element& v);

// act(S, can(v)).
Element s1n(const Element& v);

// Quotient projection onto the maximal extension: kills m=1 monomials with
// l >= 0. Input must be DefPlus(2)-shaped with m <= 1.
Element maxext_normal_form(const Element& v);

// Shriek -> MaxExt: lift to DefShriek(2), apply can, project.
Element canbar(const Element& v);

// All admissible monomials with k = (slice-weight)/2, l = (slice+weight)/2,
// ordered by m. Empty when parity fails or k < 0.
std::vector<Monomial> weight_space_basis(const ModuleFamily& family, long slice,
                                         long weight);

enum class MapName { Le, Lf, Lh, Rh, Omega, S, Can, S1n, Canbar };
MapName to_map(OpName op);

struct OpMatrix {
    QMatrix mat;  // target coords = mat * source coords
    std::vector<Monomial> source;
    std::vector<Monomial> target;
    ModuleFamily source_family;
    ModuleFamily target_family;
    long target_weight = 0;
};

OpMatrix op_matrix(MapName map, const ModuleFamily& family, long slice,
                   long weight);

// coker s1(n) dimensions per weight, for each order; stable iff they agree.
struct StabilizationReport {
    struct Row {
        long weight;
        std::vector<int> coker_dims;  // one per order
        bool stable;
    };
    long slice;
    std::vector<int> orders;
    std::vector<Row> rows;
    bool all_stable = true;
};

StabilizationReport stabilization_check(long slice, long wmin, long wmax,
                                        const std::vector<int>& orders);

}  // namespace jantzen
