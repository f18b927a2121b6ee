#include <modinv/catalog.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

using namespace modinv;

namespace {
ToleranceConfig cfg;
struct Setup {
    Setup() { set_working_precision(cfg.precision_bits); }
};
Setup setup;

std::string temp_path(const char* name) { return std::string("./") + name; }
}  // namespace

TEST_CASE("E6 builtin carries exact expression sources") {
    DataFile f = e6_double_file();
    REQUIRE(f.labels.size() == 10);
    REQUIRE(eval_expr(f.S[4][5]).abs() < 1e-40);  // S_45 = 0
    REQUIRE((eval_expr(f.T[5]) - root_of_unity(1, 6)).abs() < 1e-40);
    REQUIRE((eval_expr(f.T[9]) - Cplx(Real(0), Real(-1))).abs() < 1e-40);  // -i
    ModularData md = builtin_e6_double(cfg);
    REQUIRE(md.source.has_value());
    REQUIRE(validate(md, cfg, true).all_pass());
}

TEST_CASE("SU(2)_1 is the 2x2 Hadamard-type S") {
    ModularData md = builtin_su2(1, cfg);
    Real r = 1 / sqrt(Real(2));
    REQUIRE(abs(md.S(0, 0).re - r) < 1e-40);
    REQUIRE(abs(md.S(0, 1).re - r) < 1e-40);
    REQUIRE(abs(md.S(1, 1).re + r) < 1e-40);
    REQUIRE(validate(md, cfg, true).all_pass());
}

TEST_CASE("SU(2)_2 quantum dimensions are (1, sqrt 2, 1)") {
    ModularData md = builtin_su2(2, cfg);
    std::vector<Real> d = quantum_dims(md);
    REQUIRE(abs(d[0] - 1) < 1e-40);
    REQUIRE(abs(d[1] - sqrt(Real(2))) < 1e-40);
    REQUIRE(abs(d[2] - 1) < 1e-40);
    REQUIRE(abs(global_index(md).omega - 4) < 1e-40);
}

TEST_CASE("SU(2)_k validates with mu = 1 and identity conjugation for k <= 20") {
    for (unsigned k = 1; k <= 20; ++k) {
        ModularData md = builtin_su2(k, cfg);
        ValidationReport rep = validate(md, cfg, true);
        INFO("k = " << k);
        REQUIRE(rep.all_pass());
        for (std::size_t l = 0; l < md.size(); ++l) REQUIRE(rep.conjugation[l] == l);
    }
    REQUIRE(builtin_su2(16, cfg).size() == 17);
    REQUIRE_THROWS_AS(builtin_su2(0, cfg), Error);
}

TEST_CASE("save/load round trip is exact and doubly stable") {
    ModularData md = builtin_e6_double(cfg);
    std::string p1 = temp_path("rt1.json"), p2 = temp_path("rt2.json");
    save_to(md, p1);
    ModularData back = load(p1, cfg);
    REQUIRE(max_abs(back.S - md.S) < cfg.snap_eps);
    for (std::size_t l = 0; l < 10; ++l) REQUIRE((back.T[l] - md.T[l]).abs() < cfg.snap_eps);
    save_to(back, p2);
    std::ifstream a(p1), b(p2);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    REQUIRE(sa == sb);  // two successive cycles are bit-identical
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("malformed files are rejected with structured errors") {
    DataFile f = e6_double_file();
    f.T.pop_back();
    REQUIRE_THROWS_AS(materialize(f, cfg), ParseError);

    DataFile g = e6_double_file();
    g.S[3].pop_back();
    REQUIRE_THROWS_AS(materialize(g, cfg), ParseError);

    std::string p = temp_path("bad.json");
    {
        std::ofstream out(p);
        out << "{ not json";
    }
    REQUIRE_THROWS_AS(load(p, cfg), ParseError);
    {
        std::ofstream out(p);
        out << "{\"labels\": [\"0\"], \"S\": [[\"1\"]]}";  // missing T
    }
    REQUIRE_THROWS_AS(load(p, cfg), ParseError);
    std::remove(p.c_str());
}

TEST_CASE("vacuum positivity violations fail validation on load") {
    DataFile f = e6_double_file();
    f.S[0][0] = "0";
    f.S[0][0] = "0";
    std::string p = temp_path("vac.json");
    {
        std::ofstream out(p);
        out << to_json(f).dump(2) << "\n";
    }
    REQUIRE_THROWS_AS(load(p, cfg), ValidationError);
    REQUIRE_NOTHROW(load(p, cfg, false));  // validation can be skipped
    std::remove(p.c_str());
}

TEST_CASE("loader rejects unparsable expressions with location") {
    DataFile f = e6_double_file();
    f.S[2][2] = "sqr(2)";
    std::string p = temp_path("expr.json");
    {
        std::ofstream out(p);
        out << to_json(f).dump(2) << "\n";
    }
    REQUIRE_THROWS_AS(load(p, cfg, false), ParseError);
    std::remove(p.c_str());
}
