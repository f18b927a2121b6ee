#pragma once

// Modular data (S, T), axiom validation, quantum dimensions, charge
// conjugation, the Verlinde fusion ring, simple currents and Frobenius-Schur
// indicators.

#include "modinv/expr.hpp"
#include "modinv/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modinv {

// Expression-level source of a data set; kept alongside the evaluated
// matrices so the data can be re-materialized at any precision and
// serialized without loss.
struct DataFile {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> S;  // n x n expression strings
    std::vector<std::string> T;               // n expression strings
    std::vector<std::pair<std::string, std::string>> metadata;
};

struct ModularData {
    std::vector<std::string> labels;
    CplxMat S;               // n x n, unitary symmetric
    std::vector<Cplx> T;     // diagonal phases
    std::optional<DataFile> source;

    std::size_t size() const { return T.size(); }
};

struct AxiomCheck {
    std::string name;
    bool pass = false;
    Real residual;
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    std::vector<std::size_t> conjugation;  // permutation from S^2, if it is one
    Cplx mu;                               // phase in (ST)^3 = mu * S^2
    bool strict_phase = true;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const AxiomCheck* failed() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

// Nonnegative-integer fusion ring: matrices N_l with (N_l)(m,n) = N_{lm}^n.
struct FusionRing {
    std::vector<IntMat> N;

    std::size_t size() const { return N.size(); }
    long long coeff(std::size_t l, std::size_t m, std::size_t n) const { return N[l](m, n); }
};

namespace detail {

inline CplxMat mat_mul_diag(const CplxMat& m, const std::vector<Cplx>& d) {
    CplxMat out = m;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * d[c];
    return out;
}

}  // namespace detail

inline ValidationReport validate(const ModularData& md, const ToleranceConfig& cfg,
                                 bool strict_phase = true) {
    const std::size_t n = md.size();
    if (n == 0) throw ValidationError("empty modular data");
    if (md.S.rows() != n || md.S.cols() != n)
        throw ValidationError("S dimension does not match T length");
    for (const Cplx& z : md.S.data())
        if (isnan(z.re) || isinf(z.re) || isnan(z.im) || isinf(z.im))
            throw ValidationError("non-finite entry in S");

    ValidationReport rep;
    rep.strict_phase = strict_phase;
    const Real ev(cfg.val_eps);
    auto push = [&rep](std::string name, const Real& residual, const Real& tol) {
        rep.checks.push_back({std::move(name), residual <= tol, residual});
    };

    // S unitary
    CplxMat sst(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Cplx acc;
            for (std::size_t k = 0; k < n; ++k) acc = acc + md.S(r, k) * md.S(c, k).conj();
            if (r == c) acc = acc - Cplx(1);
            sst(r, c) = acc;
        }
    push("S-unitary", max_abs(sst), ev);

    // S symmetric
    Real sym(0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            sym = std::max(sym, (md.S(r, c) - md.S(c, r)).abs());
    push("S-symmetry", sym, ev);

    // S_{0,l} real and positive
    Real vac_im(0);
    bool vac_pos = true;
    for (std::size_t c = 0; c < n; ++c) {
        vac_im = std::max(vac_im, Real(abs(md.S(0, c).im)));
        if (md.S(0, c).re <= 0) vac_pos = false;
    }
    rep.checks.push_back({"S-vacuum-row-positive", vac_pos && vac_im <= ev, vac_im});

    // T unitary diagonal
    Real tres(0);
    for (const Cplx& t : md.T) tres = std::max(tres, Real(abs(t.abs() - 1)));
    push("T-unitary", tres, ev);

    // S^2 = C, a permutation with C^2 = 1
    CplxMat s2 = md.S * md.S;
    Real cres(0);
    std::vector<std::size_t> perm(n, n);
    bool is_perm = true;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t hits = 0;
        for (std::size_t c = 0; c < n; ++c) {
            auto v = snap_to_integer(s2(r, c), cfg.val_eps);
            Real dist0 = s2(r, c).abs();
            Real dist1 = (s2(r, c) - Cplx(1)).abs();
            cres = std::max(cres, std::min(dist0, dist1));
            if (v && *v == 1) {
                perm[r] = c;
                ++hits;
            } else if (!v || *v != 0) {
                is_perm = false;
            }
        }
        if (hits != 1) is_perm = false;
    }
    if (is_perm)
        for (std::size_t r = 0; r < n; ++r)
            if (perm[perm[r]] != r) is_perm = false;
    rep.checks.push_back({"S2-conjugation-permutation", is_perm && cres <= ev, cres});
    if (is_perm) rep.conjugation = perm;

    // (ST)^3 = mu * S^2
    CplxMat st = detail::mat_mul_diag(md.S, md.T);
    CplxMat st3 = st * st * st;
    rep.mu = st3(0, 0) / s2(0, 0);
    Real pres(0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            pres = std::max(pres, (st3(r, c) - rep.mu * s2(r, c)).abs());
    pres = std::max(pres, Real(abs(rep.mu.abs() - 1)));
    push("ST-cubed-phase", pres, ev);
    if (strict_phase) push("ST-cubed-strict-mu-1", (rep.mu - Cplx(1)).abs(), ev);

    return rep;
}

inline void require_valid(const ModularData& md, const ToleranceConfig& cfg,
                          bool strict_phase = false) {
    ValidationReport rep = validate(md, cfg, strict_phase);
    if (const AxiomCheck* f = rep.failed())
        throw ValidationError("modular data fails axiom '" + f->name + "'");
}

inline std::vector<Real> quantum_dims(const ModularData& md) {
    std::vector<Real> d;
    d.reserve(md.size());
    for (std::size_t c = 0; c < md.size(); ++c) d.push_back(md.S(0, c).re / md.S(0, 0).re);
    return d;
}

struct GlobalIndex {
    Real omega;
    Real s00_residual;  // | omega * S00^2 - 1 |
};

inline GlobalIndex global_index(const ModularData& md) {
    Real omega(0);
    for (const Real& d : quantum_dims(md)) omega += d * d;
    Real resid = abs(omega * md.S(0, 0).abs2() - 1);
    return {omega, resid};
}

inline std::vector<std::size_t> conjugation(const ModularData& md, const ToleranceConfig& cfg) {
    ValidationReport rep = validate(md, cfg, false);
    if (rep.conjugation.empty())
        throw ValidationError("S^2 is not a 0/1 permutation matrix within tolerance");
    if (rep.conjugation[0] != 0) throw ValidationError("conjugation does not fix the vacuum");
    return rep.conjugation;
}

// Verlinde evaluation N_{lm}^n = sum_s S_{ls} S_{ms} conj(S_{ns}) / S_{0s},
// certified integral by snapping.
inline FusionRing verlinde(const ModularData& md, const ToleranceConfig& cfg) {
    const std::size_t n = md.size();
    FusionRing fr;
    fr.N.reserve(n);
    for (std::size_t l = 0; l < n; ++l) {
        IntMat N(n, n, 0);
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t nu = 0; nu < n; ++nu) {
                Cplx acc;
                for (std::size_t s = 0; s < n; ++s)
                    acc = acc + md.S(l, s) * md.S(m, s) * md.S(nu, s).conj() / md.S(0, s);
                auto v = snap_to_integer(acc, cfg.snap_eps);
                if (!v || *v < 0)
                    throw ComputationError(
                        "Verlinde coefficient fails to snap to a nonnegative integer at (" +
                        std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(nu) +
                        "): not modular data or insufficient precision");
                N(m, nu) = *v;
            }
        fr.N.push_back(std::move(N));
    }
    return fr;
}

inline std::vector<std::size_t> simple_currents(const ModularData& md,
                                                const ToleranceConfig& cfg) {
    std::vector<std::size_t> out;
    std::vector<Real> d = quantum_dims(md);
    for (std::size_t l = 0; l < d.size(); ++l)
        if (abs(d[l] - 1) <= cfg.val_eps) out.push_back(l);
    return out;
}

// Frobenius-Schur indicators via the T-phase double sum
//   nu_l = (1/omega) * sum_{m,n} N_{mn}^l d_m d_n (T_m / T_n)^2.
inline std::vector<int> fs_indicators(const ModularData& md, const FusionRing& fr,
                                      const ToleranceConfig& cfg) {
    const std::size_t n = md.size();
    std::vector<Real> d = quantum_dims(md);
    Real omega = global_index(md).omega;
    std::vector<int> out;
    out.reserve(n);
    for (std::size_t l = 0; l < n; ++l) {
        Cplx acc;
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t nu = 0; nu < n; ++nu) {
                if (fr.N[m](nu, l) == 0) continue;
                Cplx ratio = md.T[m] / md.T[nu];
                acc = acc + Cplx(Real(fr.N[m](nu, l)) * d[m] * d[nu]) * ratio * ratio;
            }
        acc = acc / Cplx(omega);
        auto v = snap_to_integer(acc, cfg.val_eps);
        if (!v || *v < -1 || *v > 1)
            throw ComputationError("FS indicator fails to snap to {-1,0,1} at label " +
                                   std::to_string(l));
        out.push_back(static_cast<int>(*v));
    }
    return out;
}

}  // namespace modinv
