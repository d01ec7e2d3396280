#include <jantzen/filtration.hpp>

#include <sstream>
#include <stdexcept>

namespace jantzen {

const Subspace& MonodromyFiltration::at(int r) const {
    if (chain.empty())
        throw std::logic_error("empty filtration");
    if (r < r_min)
        return chain.at(r_min - 1);  // stored explicit zero
    if (r > r_max)
        return chain.at(r_max);
    return chain.at(r);
}

int MonodromyFiltration::gr_dim(int r) const {
    return at(r).dim() - at(r - 1).dim();
}

bool is_nilpotent(const QMatrix& m) {
    if (m.rows() != m.cols())
        return false;
    return m.power(m.rows()).is_zero();
}

MonodromyFiltration monodromy(const QMatrix& m) {
    if (!is_nilpotent(m))
        throw std::invalid_argument("monodromy filtration needs a nilpotent map");
    const int d = m.rows();
    MonodromyFiltration f;
    f.ambient_dim = d;

    // Kernel and image filtrations, with the boundary conventions
    // K^p = 0 for p < 0 and I^q = full for q <= 0.
    std::vector<Subspace> ker_f, im_f;  // index p: ker M^{p+1}, index q: im M^q
    for (int p = 0; p <= d; ++p)
        ker_f.push_back(kernel(m.power(p + 1)));
    for (int q = 0; q <= d; ++q)
        im_f.push_back(image(m.power(q)));

    for (int r = -d - 1; r <= d; ++r) {
        Subspace mu(d);
        for (int q = 0; q <= d; ++q) {
            int p = r + q;
            if (p < 0)
                continue;
            const Subspace& kp = ker_f[std::min(p, d)];
            mu = sum(mu, q == 0 ? kp : intersect(kp, im_f[std::min(q, d)]));
        }
        f.chain.emplace(r, mu);
    }
    f.r_min = -d;
    f.r_max = d;
    // Tighten the support to where the filtration actually moves.
    while (f.r_min < f.r_max && f.chain.at(f.r_min).dim() == 0)
        ++f.r_min;
    while (f.r_max > f.r_min && f.chain.at(f.r_max - 1).dim() == d)
        --f.r_max;
    return f;
}

MonodromyVerification verify_monodromy(const QMatrix& m,
                                       const MonodromyFiltration& f) {
    MonodromyVerification v;
    v.shift_ok = true;
    v.gr_iso_ok = true;
    const int d = f.ambient_dim;

    if (f.at(f.r_min - 1).dim() != 0 || f.at(f.r_max).dim() != d) {
        v.shift_ok = false;
        v.failures.push_back("filtration is not exhaustive");
    }
    for (int r = f.r_min; r <= f.r_max; ++r) {
        Subspace img = apply(m, f.at(r));
        if (!f.at(r - 2).contains(img)) {
            v.shift_ok = false;
            std::ostringstream os;
            os << "s mu^" << r << " not inside mu^" << r - 2;
            v.failures.push_back(os.str());
        }
        if (!f.at(r - 1).contains(f.at(r - 1)) || f.at(r - 1).dim() > f.at(r).dim()) {
            v.shift_ok = false;
            v.failures.push_back("filtration not increasing");
        }
    }
    for (int k = 1; k <= std::max(f.r_max, -f.r_min); ++k) {
        if (f.gr_dim(k) != f.gr_dim(-k)) {
            v.gr_iso_ok = false;
            std::ostringstream os;
            os << "dim gr^" << k << " != dim gr^" << -k;
            v.failures.push_back(os.str());
            continue;
        }
        // M^k(mu^k) + mu^{-k-1} must exhaust mu^{-k}.
        Subspace pushed = sum(apply(m.power(k), f.at(k)), f.at(-k - 1));
        if (!(pushed == f.at(-k))) {
            v.gr_iso_ok = false;
            std::ostringstream os;
            os << "s^" << k << " does not induce gr^" << k << " ~ gr^" << -k;
            v.failures.push_back(os.str());
        }
    }
    return v;
}

JantzenFiltration jantzen_on_kernel(const QMatrix& m) {
    if (!is_nilpotent(m))
        throw std::invalid_argument("jantzen filtration needs a nilpotent map");
    JantzenFiltration j;
    j.side = JantzenSide::OnKernel;
    j.ambient_dim = m.rows();
    Subspace ker_m = kernel(m);
    for (int i = 0;; ++i) {
        Subspace layer = intersect(ker_m, image(m.power(i)));
        j.chain.push_back(layer);
        if (layer.dim() == 0)
            break;
    }
    return j;
}

JantzenFiltration jantzen_on_cokernel(const QMatrix& m) {
    if (!is_nilpotent(m))
        throw std::invalid_argument("jantzen filtration needs a nilpotent map");
    JantzenFiltration j;
    j.side = JantzenSide::OnCokernel;
    j.ambient_dim = m.rows();
    Subspace im_m = image(m);
    const int full = m.rows();
    for (int i = 0;; ++i) {
        Subspace layer = sum(kernel(m.power(i + 1)), im_m);
        j.chain.push_back(layer);
        j.quotient_dims.push_back(layer.dim() - im_m.dim());
        if (layer.dim() == full)
            break;
    }
    return j;
}

MonodromyProfile maxext_monodromy_profile(long slice, long wmin, long wmax) {
    MonodromyProfile profile;
    profile.slice = slice;
    for (long w = wmax; w >= wmin; --w) {
        if ((slice - w) % 2 != 0)
            continue;
        OpMatrix sm = op_matrix(MapName::S, ModuleFamily::max_ext(), slice, w);
        if (sm.source.empty())
            continue;
        MonodromyFiltration f = monodromy(sm.mat);
        MonodromyProfile::Row row;
        row.weight = w;
        for (int r = f.r_min; r <= f.r_max; ++r)
            if (f.gr_dim(r) != 0)
                row.gr_dims.push_back({r, f.gr_dim(r)});
        row.verified = verify_monodromy(sm.mat, f).ok();
        profile.all_verified = profile.all_verified && row.verified;
        profile.rows.push_back(std::move(row));
    }
    return profile;
}

}  // namespace jantzen
