#include <modinv/invariants.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace modinv;

namespace {

ToleranceConfig cfg;

const ModularData& e6() {
    static ModularData md = [] {
        set_working_precision(cfg.precision_bits);
        return builtin_e6_double(cfg);
    }();
    return md;
}

const CommutantBasis& e6_cb() {
    static CommutantBasis cb = commutant_basis(e6(), cfg);
    return cb;
}

const std::vector<ModularInvariant>& e6_invs() {
    static std::vector<ModularInvariant> v = enumerate_invariants(e6(), e6_cb(), cfg);
    return v;
}

ModularData one_primary() {
    ModularData md;
    md.labels = {"0"};
    md.S = CplxMat(1, 1);
    md.S(0, 0) = Cplx(Real(1));
    md.T = {Cplx(Real(1))};
    return md;
}

}  // namespace

TEST_CASE("E6 commutant has dimension 4") {
    REQUIRE(e6_cb().dim() == 4);
    REQUIRE(e6_cb().coords.size() == 20);  // T-compatible coordinate pairs
    REQUIRE(e6_cb().pivots.size() == 4);
    REQUIRE(e6_cb().coords[e6_cb().pivots[0]] == std::pair<std::size_t, std::size_t>(0, 0));
}

TEST_CASE("SU(2)_16 commutant has dimension 3") {
    ModularData md = builtin_su2(16, cfg);
    REQUIRE(commutant_basis(md, cfg).dim() == 3);
}

TEST_CASE("one-primary commutant is one-dimensional") {
    ModularData md = one_primary();
    CommutantBasis cb = commutant_basis(md, cfg);
    REQUIRE(cb.dim() == 1);
    auto invs = enumerate_invariants(md, cb, cfg);
    REQUIRE(invs.size() == 1);
    REQUIRE(invs[0].Z == IntMat::identity(1));
}

TEST_CASE("E6 enumeration returns exactly the four published invariants") {
    const auto& invs = e6_invs();
    std::vector<IntMat> want = fixtures::e6_invariants();
    REQUIRE(invs.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        INFO("Z" << i + 1);
        REQUIRE(invs[i].Z == want[i]);
    }
    REQUIRE(invs[0].trace == 10);
    REQUIRE(invs[1].trace == 8);
    REQUIRE(invs[2].trace == 6);
    REQUIRE(invs[3].trace == 3);
}

TEST_CASE("every enumerated invariant commutes with S and T") {
    std::vector<std::size_t> conj = conjugation(e6(), cfg);
    for (const auto& inv : e6_invs()) {
        REQUIRE(commutation_residual(inv.Z, e6()) < cfg.val_eps);
        // C in the commutant forces Z_{conj(a),conj(b)} = Z_{a,b}
        for (std::size_t a = 0; a < 10; ++a)
            for (std::size_t b = 0; b < 10; ++b)
                REQUIRE(inv.Z(conj[a], conj[b]) == inv.Z(a, b));
    }
}

TEST_CASE("identity and conjugation invariants are always present") {
    const auto& invs = e6_invs();
    std::vector<std::size_t> conj = conjugation(e6(), cfg);
    IntMat C(10, 10, 0);
    for (std::size_t l = 0; l < 10; ++l) C(l, conj[l]) = 1;
    bool has_id = false, has_c = false;
    for (const auto& inv : invs) {
        if (inv.Z == IntMat::identity(10)) has_id = true;
        if (inv.Z == C) has_c = true;
    }
    REQUIRE(has_id);
    REQUIRE(has_c);
}

TEST_CASE("classification flags") {
    const auto& invs = e6_invs();
    REQUIRE(invs[1].permutation);  // Z2 = charge conjugation
    REQUIRE(invs[1].normalized);
    REQUIRE(invs[3].symmetric);  // Z4
    REQUIRE(invs[3].normalized);
    REQUIRE(invs[3].trace == 3);
    REQUIRE(!invs[2].permutation);

    IntMat twoZ3 = invs[2].Z + invs[2].Z;
    ModularInvariant c = classify(twoZ3);
    REQUIRE(!c.normalized);
    REQUIRE(c.symmetric);
}

TEST_CASE("unnormalized enumeration respects the vacuum bound") {
    EnumerateOptions opts;
    opts.normalized = false;
    opts.max_vacuum = 2;
    auto all = enumerate_invariants(e6(), e6_cb(), cfg, opts);
    REQUIRE(all.size() > 4);  // contains at least the normalized ones and multiples
    std::size_t normalized = 0;
    for (const auto& inv : all) {
        REQUIRE(inv.Z(0, 0) >= 0);
        REQUIRE(inv.Z(0, 0) <= 2);
        if (inv.normalized) ++normalized;
    }
    REQUIRE(normalized >= 4);
}

TEST_CASE("SU(2)_16 enumeration finds the three A-D-E invariants") {
    ModularData md = builtin_su2(16, cfg);
    auto invs = enumerate_invariants(md, cfg);
    REQUIRE(invs.size() == 3);
    REQUIRE(invs[0].Z == fixtures::su2_16_a17());
    REQUIRE(invs[1].Z == fixtures::su2_16_d10());
    REQUIRE(invs[2].Z == fixtures::su2_16_e7());
    REQUIRE(invs[0].trace == 17);
    REQUIRE(invs[1].trace == 10);
    REQUIRE(invs[2].trace == 7);
}

TEST_CASE("basis coordinates reconstruct pivot values") {
    const CommutantBasis& cb = e6_cb();
    for (const auto& inv : e6_invs()) {
        std::vector<Real> c = cb.coordinates(inv.Z);
        // reconstruct each coordinate from the basis and compare
        for (std::size_t j = 0; j < cb.coords.size(); ++j) {
            Real v(0);
            for (std::size_t i = 0; i < cb.dim(); ++i) v += cb.basis(i, j) * c[i];
            auto [p, q] = cb.coords[j];
            REQUIRE(abs(v - Real(inv.Z(p, q))) < 1e-30);
        }
    }
}
