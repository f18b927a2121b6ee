#pragma once

// Commutant of {S, T} over real matrices, and exhaustive enumeration of
// modular invariants by integer search over pivot coordinates.

#include "modinv/catalog.hpp"
#include "modinv/modular_data.hpp"

#include <set>
#include <utility>

namespace modinv {

struct ModularInvariant {
    IntMat Z;
    long long trace = 0;
    bool normalized = false;
    bool symmetric = false;
    bool vacuum_symmetric = false;
    bool permutation = false;
};

inline ModularInvariant classify(IntMat Z) {
    const std::size_t n = Z.rows();
    ModularInvariant inv;
    inv.trace = modinv::trace(Z);
    inv.normalized = Z(0, 0) == 1;
    inv.symmetric = Z == Z.transposed();
    inv.vacuum_symmetric = true;
    for (std::size_t l = 0; l < n; ++l)
        if (Z(0, l) != Z(l, 0)) inv.vacuum_symmetric = false;
    inv.permutation = true;
    for (std::size_t r = 0; r < n && inv.permutation; ++r) {
        long long row = 0, col = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (Z(r, c) != 0 && Z(r, c) != 1) inv.permutation = false;
            row += Z(r, c);
            col += Z(c, r);
        }
        if (row != 1 || col != 1) inv.permutation = false;
    }
    inv.Z = std::move(Z);
    return inv;
}

// Residual max(|ZS - SZ|, |ZT - TZ|); every enumerated invariant keeps this
// below the validation tolerance.
inline Real commutation_residual(const IntMat& Z, const ModularData& md) {
    const std::size_t n = md.size();
    Real res(0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Cplx zs, sz;
            for (std::size_t k = 0; k < n; ++k) {
                zs = zs + Cplx(Real(Z(r, k))) * md.S(k, c);
                sz = sz + md.S(r, k) * Cplx(Real(Z(k, c)));
            }
            res = std::max(res, (zs - sz).abs());
            res = std::max(res, Real((Cplx(Real(Z(r, c))) * (md.T[c] - md.T[r])).abs()));
        }
    return res;
}

// Basis of the real commutant {S,T}'.  ZT = TZ forces Z_{ab} = 0 unless
// T_a = T_b, so only those coordinates are kept as unknowns; the remaining
// constraint ZS = SZ becomes a real linear system over them.
struct CommutantBasis {
    std::vector<std::pair<std::size_t, std::size_t>> coords;  // T-compatible (a,b)
    RealMat basis;                // dim x |coords|, orthonormal rows
    std::vector<std::size_t> pivots;  // indices into coords, |pivots| = dim

    std::size_t dim() const { return basis.rows(); }

    IntMat assemble(std::size_t n, const std::vector<long long>& values) const {
        IntMat Z(n, n, 0);
        for (std::size_t j = 0; j < coords.size(); ++j)
            Z(coords[j].first, coords[j].second) = values[j];
        return Z;
    }

    std::vector<Real> coordinates(const IntMat& Z) const {
        std::vector<Real> c(dim(), Real(0));
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < coords.size(); ++j)
                c[i] += basis(i, j) * Z(coords[j].first, coords[j].second);
        return c;
    }
};

namespace detail {

inline Real abs_det(RealMat a) {
    const std::size_t n = a.rows();
    Real det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(a(r, col)) > abs(a(piv, col))) piv = r;
        if (a(piv, col) == 0) return Real(0);
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            Real f = a(r, col) / a(col, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return abs(det);
}

struct NullspaceResult {
    std::vector<std::pair<std::size_t, std::size_t>> coords;
    RealMat basis;
};

inline NullspaceResult commutant_nullspace(const ModularData& md, const ToleranceConfig& cfg) {
    const std::size_t n = md.size();
    NullspaceResult out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if ((md.T[a] - md.T[b]).abs() <= cfg.val_eps) out.coords.push_back({a, b});
    const std::size_t f = out.coords.size();

    // Gram matrix of the stacked real/imaginary rows of (ZS - SZ)_{ab} = 0.
    RealMat gram(f, f, Real(0));
    std::vector<Cplx> row(f);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t j = 0; j < f; ++j) {
                auto [p, q] = out.coords[j];
                Cplx c;
                if (a == p) c = c + md.S(q, b);
                if (q == b) c = c - md.S(a, p);
                row[j] = c;
            }
            for (std::size_t j = 0; j < f; ++j)
                for (std::size_t k = j; k < f; ++k)
                    gram(j, k) += row[j].re * row[k].re + row[j].im * row[k].im;
        }
    for (std::size_t j = 0; j < f; ++j)
        for (std::size_t k = 0; k < j; ++k) gram(j, k) = gram(k, j);

    SymmetricEigen eig = jacobi_eigen(gram);
    Real sigma_max(0);
    for (const Real& v : eig.values)
        if (v > 0) sigma_max = std::max(sigma_max, Real(sqrt(v)));
    Real thresh = Real(cfg.val_eps) * 1000000 * std::max(sigma_max, Real(1));
    std::size_t dim = 0;
    for (const Real& v : eig.values)
        if (v <= 0 || sqrt(v) < thresh) ++dim;

    out.basis = RealMat(dim, f);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < f; ++j) out.basis(i, j) = eig.vectors(i, j);
    return out;
}

}  // namespace detail

inline CommutantBasis commutant_basis(const ModularData& md, const ToleranceConfig& cfg) {
    detail::NullspaceResult ns = detail::commutant_nullspace(md, cfg);

    // The rank decision must not depend on the working precision: redo the
    // nullity count with doubled precision and require agreement.
    {
        PrecisionGuard guard(2 * cfg.precision_bits);
        ModularData hi = md.source ? materialize(*md.source, cfg) : md;
        std::size_t dim2 = detail::commutant_nullspace(hi, cfg).basis.rows();
        if (dim2 != ns.basis.rows())
            throw ComputationError("commutant rank unstable between precisions (" +
                                   std::to_string(ns.basis.rows()) + " vs " +
                                   std::to_string(dim2) + "); increase precision");
    }

    CommutantBasis cb;
    cb.coords = std::move(ns.coords);
    cb.basis = std::move(ns.basis);
    const std::size_t m = cb.dim(), f = cb.coords.size();

    // Greedy pivot selection maximizing the restricted Gram determinant,
    // with (0,0) forced first so the vacuum constraint lands on a pivot.
    std::size_t vac = f;
    for (std::size_t j = 0; j < f; ++j)
        if (cb.coords[j] == std::make_pair<std::size_t, std::size_t>(0, 0)) vac = j;
    if (vac == f) throw ComputationError("vacuum coordinate (0,0) is not T-compatible");
    cb.pivots.push_back(vac);
    std::vector<bool> used(f, false);
    used[vac] = true;
    while (cb.pivots.size() < m) {
        std::size_t best = f;
        Real best_vol(-1);
        for (std::size_t cnd = 0; cnd < f; ++cnd) {
            if (used[cnd]) continue;
            std::vector<std::size_t> sel = cb.pivots;
            sel.push_back(cnd);
            RealMat g(sel.size(), sel.size(), Real(0));
            for (std::size_t x = 0; x < sel.size(); ++x)
                for (std::size_t y = 0; y < sel.size(); ++y)
                    for (std::size_t i = 0; i < m; ++i)
                        g(x, y) += cb.basis(i, sel[x]) * cb.basis(i, sel[y]);
            Real vol = detail::abs_det(g);
            if (vol > best_vol) {
                best_vol = vol;
                best = cnd;
            }
        }
        if (best == f || best_vol <= 0)
            throw ComputationError("commutant basis has no invertible pivot set");
        cb.pivots.push_back(best);
        used[best] = true;
    }
    return cb;
}

struct EnumerateOptions {
    bool normalized = true;
    long long max_vacuum = 3;  // bound on Z_00 in unnormalized mode
};

inline std::vector<ModularInvariant> enumerate_invariants(const ModularData& md,
                                                          const CommutantBasis& cb,
                                                          const ToleranceConfig& cfg,
                                                          EnumerateOptions opts = {}) {
    const std::size_t n = md.size(), m = cb.dim(), f = cb.coords.size();
    std::vector<Real> d = quantum_dims(md);

    std::vector<long long> bound(f);
    for (std::size_t j = 0; j < f; ++j) {
        auto [p, q] = cb.coords[j];
        bound[j] = Real(floor(d[p] * d[q] + Real(cfg.val_eps))).convert_to<long long>();
        // The bound Z_pq <= d_p d_q assumes Z_00 = 1; a vacuum entry of c
        // scales every entry bound by c.
        if (!opts.normalized) bound[j] *= std::max<long long>(1, opts.max_vacuum);
    }

    // Per-pivot ranges; pivot 0 is the vacuum coordinate (0,0).
    std::vector<long long> lo(m, 0), hi(m);
    for (std::size_t i = 0; i < m; ++i) hi[i] = bound[cb.pivots[i]];
    if (opts.normalized)
        lo[0] = hi[0] = 1;
    else
        hi[0] = std::min(hi[0], opts.max_vacuum);
    double box = 1;
    for (std::size_t i = 0; i < m; ++i) box *= static_cast<double>(hi[i] - lo[i] + 1);
    if (box > 1e9)
        throw ComputationError("pivot box has ~" + std::to_string(box) +
                               " candidates (> 1e9); enumeration aborted");

    // c = (Mp^T)^{-1} t  maps pivot values t to basis coordinates c.
    RealMat mpt(m, m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i) mpt(k, i) = cb.basis(i, cb.pivots[k]);
    RealMat inv(m, m);
    for (std::size_t col = 0; col < m; ++col) {
        std::vector<Real> e(m, Real(0));
        e[col] = 1;
        std::vector<Real> x = solve_linear(mpt, e);
        for (std::size_t r = 0; r < m; ++r) inv(r, col) = x[r];
    }

    std::set<std::vector<long long>> seen;
    std::vector<long long> t(m);
    for (std::size_t i = 0; i < m; ++i) t[i] = lo[i];
    std::vector<ModularInvariant> out;
    for (;;) {
        std::vector<Real> c(m, Real(0));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t k = 0; k < m; ++k) c[r] += inv(r, k) * Real(t[k]);
        std::vector<long long> vals(f);
        bool ok = false, nonzero = false;
        for (std::size_t j = 0; j < f; ++j) {
            Real v(0);
            for (std::size_t i = 0; i < m; ++i) v += cb.basis(i, j) * c[i];
            auto s = snap_to_integer(v, cfg.val_eps);
            ok = s && *s >= 0 && *s <= bound[j];
            if (!ok) break;
            vals[j] = *s;
            if (*s != 0) nonzero = true;
        }
        if (ok && nonzero && seen.insert(vals).second)
            out.push_back(classify(cb.assemble(n, vals)));

        std::size_t i = 0;
        for (; i < m; ++i) {
            if (t[i] < hi[i]) {
                ++t[i];
                break;
            }
            t[i] = lo[i];
        }
        if (i == m) break;
    }

    std::sort(out.begin(), out.end(), [](const ModularInvariant& a, const ModularInvariant& b) {
        if (a.trace != b.trace) return a.trace > b.trace;
        return a.Z.data() < b.Z.data();
    });
    return out;
}

inline std::vector<ModularInvariant> enumerate_invariants(const ModularData& md,
                                                          const ToleranceConfig& cfg,
                                                          EnumerateOptions opts = {}) {
    return enumerate_invariants(md, commutant_basis(md, cfg), cfg, opts);
}

}  // namespace modinv
