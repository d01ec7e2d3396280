#pragma once

#include <jantzen/dmodules.hpp>
#include <jantzen/linalg.hpp>

#include <map>
#include <string>
#include <vector>

namespace jantzen {

// Increasing exhaustive filtration mu^r attached to a nilpotent endomorphism:
// the convolution of the kernel and image filtrations.
struct MonodromyFiltration {
    int ambient_dim = 0;
    std::map<int, Subspace> chain;  // r -> mu^r, supported on [r_min, r_max]
    int r_min = 0;
    int r_max = 0;

    const Subspace& at(int r) const;  // clamps outside the support
    int gr_dim(int r) const;
};

bool is_nilpotent(const QMatrix& m);

// mu^r = sum over p-q=r of ker(M^{p+1}) cap im(M^q). Throws on
// non-nilpotent input.
MonodromyFiltration monodromy(const QMatrix& m);

struct MonodromyVerification {
    bool shift_ok = false;      // M mu^r included in mu^{r-2}
    bool gr_iso_ok = false;     // M^k : gr^k -> gr^{-k} bijective
    std::vector<std::string> failures;
    bool ok() const { return shift_ok && gr_iso_ok; }
};

MonodromyVerification verify_monodromy(const QMatrix& m,
                                       const MonodromyFiltration& f);

enum class JantzenSide { OnKernel, OnCokernel };

// Filtration induced by the monodromy filtration on ker s or coker s.
// Kernel side: J^j = ker M cap im M^j, decreasing to zero. Cokernel side:
// J^j = (ker M^{j+1} + im M) / im M, increasing to the full cokernel; layers
// are represented by the subspaces ker M^{j+1} + im M containing im M, with
// the quotient dimensions stored alongside.
struct JantzenFiltration {
    JantzenSide side;
    int ambient_dim = 0;
    std::vector<Subspace> chain;       // J^0, J^1, ...
    std::vector<int> quotient_dims;    // cokernel side: dim(layer / im M)
};

JantzenFiltration jantzen_on_kernel(const QMatrix& m);
JantzenFiltration jantzen_on_cokernel(const QMatrix& m);

// gr-dimension profile of the S-action on MaxExt per weight space.
struct MonodromyProfile {
    struct Row {
        long weight;
        std::vector<std::pair<int, int>> gr_dims;  // (r, dim gr^r), nonzero only
        bool verified;
    };
    long slice;
    std::vector<Row> rows;
    bool all_verified = true;
};

MonodromyProfile maxext_monodromy_profile(long slice, long wmin, long wmax);

}  // namespace jantzen
