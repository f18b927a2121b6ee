#pragma once

// Fusion algebra of modular invariants: products Z_a Z_b^t decomposed over
// the normalized invariants in commutant coordinates.

#include "modinv/invariants.hpp"

namespace modinv {

// Product convention of the fusion table: the second factor is transposed.
inline IntMat fuse(const IntMat& za, const IntMat& zb) {
    if (za.rows() != zb.rows() || za.cols() != zb.cols())
        throw Error("invariant size mismatch in fuse");
    return za * zb.transposed();
}

// Solves P = sum_i c_i Z_i in commutant coordinates; the c_i must snap to
// nonnegative integers or the closure property fails.
inline std::vector<long long> decompose(const IntMat& P,
                                        const std::vector<ModularInvariant>& basis,
                                        const CommutantBasis& cb, const ToleranceConfig& cfg) {
    const std::size_t m = cb.dim(), k = basis.size();
    if (k != m)
        throw ComputationError("invariant list (size " + std::to_string(k) +
                               ") does not span the commutant (dimension " + std::to_string(m) +
                               ")");
    RealMat Y(m, k);
    for (std::size_t b = 0; b < k; ++b) {
        std::vector<Real> col = cb.coordinates(basis[b].Z);
        for (std::size_t r = 0; r < m; ++r) Y(r, b) = col[r];
    }
    std::vector<Real> rhs = cb.coordinates(P);
    std::vector<Real> c = solve_linear(Y, rhs);

    // Residual check: the target must actually lie in the span.
    Real res(0);
    for (std::size_t r = 0; r < m; ++r) {
        Real acc(0);
        for (std::size_t b = 0; b < k; ++b) acc += Y(r, b) * c[b];
        res = std::max(res, Real(abs(acc - rhs[r])));
    }
    if (res > cfg.val_eps)
        throw ComputationError("product does not lie in the span of the invariants");

    std::vector<long long> out(k);
    for (std::size_t b = 0; b < k; ++b) {
        auto v = snap_to_integer(c[b], cfg.val_eps);
        if (!v || *v < 0)
            throw ComputationError(
                "fusion coefficient fails to snap to a nonnegative integer (fusion-algebra "
                "violation at basis index " +
                std::to_string(b) + ")");
        out[b] = *v;
    }
    return out;
}

// table[a][b] = decompose(Z_a Z_b^t) over the same invariant list.
inline std::vector<std::vector<std::vector<long long>>> fusion_table(
    const std::vector<ModularInvariant>& basis, const CommutantBasis& cb,
    const ToleranceConfig& cfg) {
    const std::size_t k = basis.size();
    std::vector<std::vector<std::vector<long long>>> table(k);
    for (std::size_t a = 0; a < k; ++a) {
        table[a].reserve(k);
        for (std::size_t b = 0; b < k; ++b)
            table[a].push_back(decompose(fuse(basis[a].Z, basis[b].Z), basis, cb, cfg));
    }
    return table;
}

}  // namespace modinv
