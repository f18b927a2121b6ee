// Command-line front end: validation, fusion rules, invariant enumeration,
// invariant fusion tables, sector arithmetic and fusion graphs.
//
// Exit codes: 0 success, 1 validation failure, 2 parse/format error,
// 3 computation failure.

#include <modinv/modinv.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace modinv;
using nlohmann::json;

struct RunConfig {
    std::string input;    // path to a data file
    std::string builtin;  // e6-double | su2
    unsigned level = 16;
    unsigned precision = 192;
    double snap_eps = 1e-24;
    double val_eps = 1e-20;
    std::string format = "table";
    bool strict_phase = true;

    ToleranceConfig tolerances() const {
        ToleranceConfig cfg;
        cfg.snap_eps = snap_eps;
        cfg.val_eps = val_eps;
        cfg.precision_bits = precision;
        cfg.check();
        return cfg;
    }
};

ModularData acquire(const RunConfig& rc, const ToleranceConfig& cfg, bool validate_file = true) {
    if (!rc.builtin.empty()) {
        if (rc.builtin == "e6-double") return builtin_e6_double(cfg);
        if (rc.builtin == "su2") return builtin_su2(rc.level, cfg);
        throw ParseError("unknown builtin '" + rc.builtin + "' (expected e6-double or su2)", 0);
    }
    if (rc.input.empty()) throw ParseError("no input: pass a data file or --builtin", 0);
    return load(rc.input, cfg, validate_file);
}

std::string matrix_rows(const IntMat& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += "  ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ' ';
            s += std::to_string(m(r, c));
        }
        s += '\n';
    }
    return s;
}

json matrix_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_csv(const IntMat& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ',';
            s += std::to_string(m(r, c));
        }
        s += '\n';
    }
    return s;
}

// Named linear combination like "2Z3+Z4", or "0".
std::string combo(const std::vector<long long>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += '+';
        if (c[i] != 1) s += std::to_string(c[i]);
        s += "Z" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

std::vector<std::size_t> parse_theta(const std::string& text) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string tok = text.substr(pos, next - pos);
        if (tok.empty()) throw ParseError("empty label in theta list", pos);
        for (char ch : tok)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError("theta labels must be nonnegative integers", pos);
        out.push_back(static_cast<std::size_t>(std::stoull(tok)));
        pos = next + 1;
    }
    if (out.empty()) throw ParseError("empty theta", 0);
    return out;
}

std::size_t parse_invariant_name(const std::string& name, std::size_t count) {
    if (name.size() < 2 || (name[0] != 'Z' && name[0] != 'z'))
        throw ParseError("invariant name must look like Z1, Z2, ... (got '" + name + "')", 0);
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw ParseError("invariant name must look like Z1, Z2, ...", i);
    std::size_t idx = static_cast<std::size_t>(std::stoull(name.substr(1)));
    if (idx < 1 || idx > count)
        throw ParseError("invariant index out of range 1.." + std::to_string(count), 0);
    return idx - 1;
}

SectorWord parse_generator(const std::string& text, std::size_t n) {
    if (text.size() < 2 || (text[0] != '+' && text[0] != '-'))
        throw ParseError("generator must be +label or -label", 0);
    for (std::size_t i = 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("generator label must be a nonnegative integer", i);
    std::size_t l = static_cast<std::size_t>(std::stoull(text.substr(1)));
    if (l >= n) throw ParseError("generator label out of range", 0);
    SectorWord w;
    if (text[0] == '+')
        w.plus.push_back(l);
    else
        w.minus.push_back(l);
    return w;
}

int cmd_validate(const RunConfig& rc) {
    ToleranceConfig cfg = rc.tolerances();
    ModularData md = acquire(rc, cfg, false);
    ValidationReport rep = validate(md, cfg, rc.strict_phase);
    if (rc.format == "json") {
        json j;
        j["checks"] = json::array();
        for (const auto& c : rep.checks)
            j["checks"].push_back(
                {{"name", c.name}, {"pass", c.pass}, {"residual", format_real(c.residual, 30)}});
        j["mu"] = {{"re", format_real(rep.mu.re, 30)}, {"im", format_real(rep.mu.im, 30)}};
        j["conjugation"] = rep.conjugation;
        j["pass"] = rep.all_pass();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks)
            std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name
                      << "  residual=" << format_real(c.residual, 30) << "\n";
        std::cout << "mu = " << format_real(rep.mu.re, 18) << " + " << format_real(rep.mu.im, 18)
                  << "i\n";
        if (!rep.conjugation.empty()) {
            std::cout << "conjugation:";
            for (std::size_t c : rep.conjugation) std::cout << " " << c;
            std::cout << "\n";
        }
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_dims(const RunConfig& rc) {
    ToleranceConfig cfg = rc.tolerances();
    ModularData md = acquire(rc, cfg);
    std::vector<Real> d = quantum_dims(md);
    GlobalIndex gi = global_index(md);
    std::vector<std::size_t> sc = simple_currents(md, cfg);
    if (rc.format == "json") {
        json j;
        j["labels"] = md.labels;
        j["dims"] = json::array();
        for (const Real& x : d) j["dims"].push_back(format_real(x, 12));
        j["global_index"] = format_real(gi.omega, 12);
        j["simple_currents"] = sc;
        std::cout << j.dump(2) << "\n";
    } else if (rc.format == "csv") {
        std::cout << "label,dim\n";
        for (std::size_t l = 0; l < d.size(); ++l)
            std::cout << md.labels[l] << "," << format_real(d[l], 12) << "\n";
    } else {
        for (std::size_t l = 0; l < d.size(); ++l)
            std::cout << md.labels[l] << "  d = " << format_real(d[l], 12) << "\n";
        std::cout << "global index = " << format_real(gi.omega, 12) << "\n";
        std::cout << "simple currents:";
        for (std::size_t l : sc) std::cout << " " << md.labels[l];
        std::cout << "\n";
    }
    return 0;
}

int cmd_fusion(const RunConfig& rc) {
    ToleranceConfig cfg = rc.tolerances();
    ModularData md = acquire(rc, cfg);
    FusionRing fr = verlinde(md, cfg);
    std::vector<int> fs = fs_indicators(md, fr, cfg);
    std::vector<std::size_t> sc = simple_currents(md, cfg);
    if (rc.format == "json") {
        json j;
        j["N"] = json::array();
        for (const IntMat& N : fr.N) j["N"].push_back(matrix_json(N));
        j["fs_indicators"] = fs;
        j["simple_currents"] = sc;
        std::cout << j.dump(2) << "\n";
    } else if (rc.format == "csv") {
        for (std::size_t l = 0; l < fr.size(); ++l)
            std::cout << "N" << l << "\n" << matrix_csv(fr.N[l]);
    } else {
        for (std::size_t l = 0; l < fr.size(); ++l)
            std::cout << "N" << l << " (" << md.labels[l] << "):\n" << matrix_rows(fr.N[l]);
        std::cout << "FS indicators:";
        for (int v : fs) std::cout << " " << v;
        std::cout << "\nsimple currents:";
        for (std::size_t l : sc) std::cout << " " << md.labels[l];
        std::cout << "\n";
    }
    return 0;
}

std::string flags_of(const ModularInvariant& inv) {
    std::string f;
    if (inv.normalized) f += " normalized";
    if (inv.symmetric) f += " symmetric";
    if (inv.vacuum_symmetric) f += " vacuum-symmetric";
    if (inv.permutation) f += " permutation";
    return f.empty() ? " (none)" : f;
}

int cmd_enumerate(const RunConfig& rc, const EnumerateOptions& opts) {
    ToleranceConfig cfg = rc.tolerances();
    ModularData md = acquire(rc, cfg);
    CommutantBasis cb = commutant_basis(md, cfg);
    std::vector<ModularInvariant> invs = enumerate_invariants(md, cb, cfg, opts);
    if (rc.format == "json") {
        json j;
        j["commutant_dimension"] = cb.dim();
        j["invariants"] = json::array();
        for (std::size_t i = 0; i < invs.size(); ++i)
            j["invariants"].push_back({{"name", "Z" + std::to_string(i + 1)},
                                       {"trace", invs[i].trace},
                                       {"normalized", invs[i].normalized},
                                       {"symmetric", invs[i].symmetric},
                                       {"vacuum_symmetric", invs[i].vacuum_symmetric},
                                       {"permutation", invs[i].permutation},
                                       {"Z", matrix_json(invs[i].Z)}});
        std::cout << j.dump(2) << "\n";
    } else if (rc.format == "csv") {
        for (std::size_t i = 0; i < invs.size(); ++i)
            std::cout << "Z" << i + 1 << ",trace," << invs[i].trace << "\n"
                      << matrix_csv(invs[i].Z);
    } else {
        std::cout << "commutant dimension " << cb.dim() << ", " << invs.size()
                  << " invariants\n";
        for (std::size_t i = 0; i < invs.size(); ++i)
            std::cout << "Z" << i + 1 << "  trace " << invs[i].trace << " " << flags_of(invs[i])
                      << "\n"
                      << matrix_rows(invs[i].Z);
    }
    return 0;
}

int cmd_fuse_table(const RunConfig& rc, const EnumerateOptions& opts) {
    ToleranceConfig cfg = rc.tolerances();
    ModularData md = acquire(rc, cfg);
    CommutantBasis cb = commutant_basis(md, cfg);
    std::vector<ModularInvariant> invs = enumerate_invariants(md, cb, cfg, opts);
    auto table = fusion_table(invs, cb, cfg);
    if (rc.format == "json") {
        json j;
        j["names"] = json::array();
        for (std::size_t i = 0; i < invs.size(); ++i)
            j["names"].push_back("Z" + std::to_string(i + 1));
        j["table"] = table;
        std::cout << j.dump(2) << "\n";
    } else if (rc.format == "csv") {
        for (const auto& row : table) {
            for (std::size_t b = 0; b < row.size(); ++b)
                std::cout << (b ? "," : "") << combo(row[b]);
            std::cout << "\n";
        }
    } else {
        std::cout << "cell (a,b) = Za * Zb^t\n     ";
        for (std::size_t b = 0; b < invs.size(); ++b) std::cout << " Z" << b + 1 << "      ";
        std::cout << "\n";
        for (std::size_t a = 0; a < table.size(); ++a) {
            std::cout << "Z" << a + 1 << " | ";
            for (const auto& cell : table[a]) {
                std::string s = combo(cell);
                s.resize(std::max<std::size_t>(s.size(), 8), ' ');
                std::cout << " " << s;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_sectors(const RunConfig& rc, const std::string& theta_text) {
    ToleranceConfig cfg = rc.tolerances();
    ModularData md = acquire(rc, cfg);
    FusionRing fr = verlinde(md, cfg);
    CanonicalObject theta = CanonicalObject::from_labels(parse_theta(theta_text), md.size());
    IntMat G = iota_gram(theta, fr);
    std::vector<BranchingMatrix> facts = gram_factorize(G);
    std::vector<ModularInvariant> invs = enumerate_invariants(md, cfg);
    std::string matched;
    try {
        const ModularInvariant& inv = match_invariant(theta, fr, invs);
        for (std::size_t i = 0; i < invs.size(); ++i)
            if (&invs[i] == &inv) matched = "Z" + std::to_string(i + 1);
    } catch (const ComputationError&) {
        matched = "";
    }
    if (rc.format == "json") {
        json j;
        j["gram"] = matrix_json(G);
        j["factorizations"] = json::array();
        for (const auto& f : facts) j["factorizations"].push_back(matrix_json(f.b));
        j["matched_invariant"] = matched;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "iota Gram matrix:\n" << matrix_rows(G);
        std::cout << facts.size() << " factorization(s)\n";
        for (std::size_t i = 0; i < facts.size(); ++i)
            std::cout << "branching " << i + 1 << " (" << facts[i].sectors() << " sectors):\n"
                      << matrix_rows(facts[i].b);
        std::cout << "matched invariant: " << (matched.empty() ? "(none)" : matched) << "\n";
    }
    return 0;
}

// Resolves theta for a named invariant: explicit --theta wins; otherwise the
// vacuum column is used (correct for type I invariants only).
CanonicalObject resolve_theta(const std::string& theta_text, const ModularInvariant& inv,
                              std::size_t n) {
    if (!theta_text.empty())
        return CanonicalObject::from_labels(parse_theta(theta_text), n);
    if (!inv.symmetric)
        std::cerr << "note: theta inferred from the vacuum column; pass --theta for "
                     "non-type-I invariants\n";
    return theta_from_vacuum(inv.Z);
}

int cmd_full_system(const RunConfig& rc, const std::string& inv_name,
                    const std::string& theta_text) {
    ToleranceConfig cfg = rc.tolerances();
    ModularData md = acquire(rc, cfg);
    FusionRing fr = verlinde(md, cfg);
    std::vector<std::size_t> conj = conjugation(md, cfg);
    std::vector<ModularInvariant> invs = enumerate_invariants(md, cfg);
    const ModularInvariant& inv = invs[parse_invariant_name(inv_name, invs.size())];
    CanonicalObject theta = resolve_theta(theta_text, inv, md.size());
    SystemCounts sc = system_counts(inv.Z, md, cfg);
    FullSystem fs = full_system(inv.Z, theta, fr, conj);
    if (rc.format == "json") {
        json j;
        j["full_count"] = sc.full_count;
        j["omega"] = format_real(sc.omega, 4);
        j["omega_pm"] = format_real(sc.omega_pm, 4);
        j["omega_0"] = format_real(sc.omega_0, 4);
        j["sectors"] = fs.names;
        j["sheets"] = fs.sheets;
        j["factorizations"] = fs.factorization_count;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "full system of " << inv_name << ": Tr(ZZ^t) = " << sc.full_count << "\n";
        std::cout << "omega = " << format_real(sc.omega, 4)
                  << "  omega+- = " << format_real(sc.omega_pm, 4)
                  << "  omega0 = " << format_real(sc.omega_0, 4) << "\n";
        std::cout << fs.sectors() << " irreducible sectors (" << fs.factorization_count
                  << " factorization(s)):\n";
        for (std::size_t t = 0; t < fs.sectors(); ++t)
            std::cout << "  [" << t << "] " << fs.names[t] << "\n";
        std::cout << fs.sheets.size() << " sheet(s):\n";
        for (std::size_t s = 0; s < fs.sheets.size(); ++s) {
            std::cout << "  sheet " << s + 1 << ":";
            for (std::size_t t : fs.sheets[s]) std::cout << " " << fs.names[t];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_graph(const RunConfig& rc, const std::string& inv_name, const std::string& gen_text,
              const std::string& theta_text) {
    ToleranceConfig cfg = rc.tolerances();
    ModularData md = acquire(rc, cfg);
    FusionRing fr = verlinde(md, cfg);
    std::vector<std::size_t> conj = conjugation(md, cfg);
    std::vector<ModularInvariant> invs = enumerate_invariants(md, cfg);
    const ModularInvariant& inv = invs[parse_invariant_name(inv_name, invs.size())];
    CanonicalObject theta = resolve_theta(theta_text, inv, md.size());
    SectorWord g = parse_generator(gen_text, md.size());
    FullSystem fs = full_system(inv.Z, theta, fr, conj);
    IntMat A = fusion_graph_matrix(g, fs, fr, inv.Z, conj, cfg);
    std::string title = inv_name + ", generator " + gen_text;
    if (rc.format == "dot") {
        std::cout << fusion_graph_dot(A, fs.names, title);
    } else if (rc.format == "json") {
        json j;
        j["title"] = title;
        j["sectors"] = fs.names;
        j["adjacency"] = matrix_json(A);
        std::cout << j.dump(2) << "\n";
    } else if (rc.format == "csv") {
        std::cout << matrix_csv(A);
    } else {
        std::cout << title << "\n" << fs.sectors() << " nodes\n";
        for (std::size_t u = 0; u < A.rows(); ++u) {
            std::cout << fs.names[u] << " ->";
            for (std::size_t v = 0; v < A.cols(); ++v)
                if (A(u, v) > 0) {
                    std::cout << " " << fs.names[v];
                    if (A(u, v) > 1) std::cout << "(x" << A(u, v) << ")";
                }
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular invariant toolkit"};
    app.require_subcommand(1);

    RunConfig rc;
    if (const char* env = std::getenv("MODINV_PRECISION")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 64) rc.precision = static_cast<unsigned>(v);
    }

    auto add_common = [&rc](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("file", rc.input, "modular data JSON file");
        cmd->add_option("--builtin", rc.builtin, "builtin data set: e6-double | su2");
        cmd->add_option("--level", rc.level, "SU(2) level for --builtin su2");
        cmd->add_option("--precision", rc.precision, "working precision in bits (>= 64)");
        cmd->add_option("--snap-eps", rc.snap_eps, "integer snapping tolerance");
        cmd->add_option("--val-eps", rc.val_eps, "axiom validation tolerance");
        cmd->add_flag("--strict-phase,!--no-strict-phase", rc.strict_phase,
                      "require (ST)^3 = S^2 with mu = 1");
        if (with_format)
            cmd->add_option("--format", rc.format, "output format: table | json | csv | dot")
                ->check(CLI::IsMember({"table", "json", "csv", "dot"}));
    };

    EnumerateOptions eopts;
    std::string theta_text, inv_name, gen_text;

    CLI::App* c_validate = app.add_subcommand("validate", "check the modular-data axioms");
    add_common(c_validate);
    CLI::App* c_dims = app.add_subcommand("dims", "quantum dimensions and global index");
    add_common(c_dims);
    CLI::App* c_fusion =
        app.add_subcommand("fusion", "Verlinde fusion matrices, FS indicators, simple currents");
    add_common(c_fusion);

    auto add_enum_opts = [&](CLI::App* cmd) {
        cmd->add_flag("--normalized,!--unnormalized", eopts.normalized,
                      "restrict to Z_00 = 1 (default on)");
        cmd->add_option("--max-vacuum", eopts.max_vacuum, "Z_00 bound in unnormalized mode");
    };
    CLI::App* c_enum = app.add_subcommand("enumerate", "enumerate modular invariants");
    add_common(c_enum);
    add_enum_opts(c_enum);
    CLI::App* c_table = app.add_subcommand("fuse-table", "fusion table of the invariants");
    add_common(c_table);
    add_enum_opts(c_table);

    CLI::App* c_sectors = app.add_subcommand("sectors", "branching from a canonical object theta");
    add_common(c_sectors);
    c_sectors->add_option("--theta", theta_text, "comma-separated labels, e.g. 0,2,4")
        ->required();

    CLI::App* c_full = app.add_subcommand("full-system", "full induced sector system");
    add_common(c_full);
    c_full->add_option("--invariant", inv_name, "invariant name, e.g. Z3")->required();
    c_full->add_option("--theta", theta_text, "override theta (default: vacuum column)");

    CLI::App* c_graph = app.add_subcommand("graph", "fusion graph of a generator");
    add_common(c_graph);
    c_graph->add_option("--invariant", inv_name, "invariant name, e.g. Z4")->required();
    c_graph->add_option("--generator", gen_text, "generator, e.g. +5 or -9")->required();
    c_graph->add_option("--theta", theta_text, "override theta (default: vacuum column)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc_cli = app.exit(e);
        return rc_cli == 0 ? 0 : 2;
    }

    try {
        set_working_precision(rc.precision);
        if (c_validate->parsed()) return cmd_validate(rc);
        if (c_dims->parsed()) return cmd_dims(rc);
        if (c_fusion->parsed()) return cmd_fusion(rc);
        if (c_enum->parsed()) return cmd_enumerate(rc, eopts);
        if (c_table->parsed()) return cmd_fuse_table(rc, eopts);
        if (c_sectors->parsed()) return cmd_sectors(rc, theta_text);
        if (c_full->parsed()) return cmd_full_system(rc, inv_name, theta_text);
        if (c_graph->parsed()) return cmd_graph(rc, inv_name, gen_text, theta_text);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
