#pragma once

// Sector arithmetic driven by a dual canonical object theta: iota-Gram
// matrices, nonnegative-integer Gram factorization, type I/II invariant
// construction, word pairings, full-system reconstruction and fusion graphs.

#include "modinv/invariants.hpp"

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace modinv {

// Multiset of labels with multiplicities; the vacuum multiplicity must be 1.
struct CanonicalObject {
    std::vector<long long> mult;  // length n

    static CanonicalObject from_labels(const std::vector<std::size_t>& labels, std::size_t n) {
        CanonicalObject t;
        t.mult.assign(n, 0);
        for (std::size_t l : labels) {
            if (l >= n) throw Error("theta references unknown label " + std::to_string(l));
            ++t.mult[l];
        }
        t.check();
        return t;
    }

    void check() const {
        if (mult.empty() || mult[0] != 1) throw Error("theta must contain the vacuum exactly once");
        for (long long m : mult)
            if (m < 0) throw Error("theta multiplicities must be nonnegative");
    }

    Real dim(const std::vector<Real>& d) const {
        Real s(0);
        for (std::size_t l = 0; l < mult.size(); ++l) s += Real(mult[l]) * d[l];
        return s;
    }
};

// G_{lm} = sum_t theta_t N_{tl}^m = <iota l, iota m> = <alpha_l^pm, alpha_m^pm>.
inline IntMat iota_gram(const CanonicalObject& theta, const FusionRing& fr) {
    const std::size_t n = fr.size();
    if (theta.mult.size() != n) throw Error("theta size does not match the fusion ring");
    IntMat G(n, n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        if (theta.mult[t] == 0) continue;
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t m = 0; m < n; ++m) G(l, m) += theta.mult[t] * fr.N[t](l, m);
    }
    return G;
}

struct BranchingMatrix {
    IntMat b;  // rows: sectors tau; cols: labels
    std::size_t vacuum_row = 0;

    std::size_t sectors() const { return b.rows(); }
};

namespace detail {

// Integer square root (floor).
inline long long isqrt_ll(long long v) {
    if (v < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Backtracking search for all factorizations G = b^t b over nonnegative
// integer rows.  Columns are processed in order of increasing diagonal; rows
// are generated in non-increasing lexicographic order (the cap is threaded
// through the recursion), and the first column with positive residual
// diagonal must be hit by the next row, which kills permutation duplicates.
struct GramFactorizer {
    std::size_t n;
    std::size_t max_rows;
    std::vector<std::vector<long long>> sols_flat;  // each: rows*n, rows desc-lex

    std::vector<std::vector<long long>> candidate_rows(const IntMat& R,
                                                       const std::vector<long long>* cap) {
        std::size_t lam = n;
        for (std::size_t i = 0; i < n; ++i)
            if (R(i, i) > 0) {
                lam = i;
                break;
            }
        std::vector<std::vector<long long>> out;
        std::vector<long long> v(n, 0);
        rec(R, cap, lam, 0, cap != nullptr, v, out);
        return out;
    }

    void rec(const IntMat& R, const std::vector<long long>* cap, std::size_t lam, std::size_t i,
             bool tight, std::vector<long long>& v, std::vector<std::vector<long long>>& out) {
        if (i == n) {
            out.push_back(v);
            return;
        }
        long long hi = isqrt_ll(R(i, i));
        if (tight) hi = std::min(hi, (*cap)[i]);
        long long lo = (i == lam) ? 1 : 0;
        for (long long x = hi; x >= lo; --x) {
            bool ok = true;
            for (std::size_t j = 0; j < i; ++j)
                if (v[j] != 0 && v[j] * x > R(j, i)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            v[i] = x;
            rec(R, cap, lam, i + 1, tight && x == (*cap)[i], v, out);
            v[i] = 0;
        }
    }

    void dfs(IntMat& R, std::vector<std::vector<long long>>& rows,
             const std::vector<long long>* cap) {
        long long diag = 0;
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) diag += R(i, i);
        for (long long x : R.data())
            if (x != 0) any = true;
        if (diag == 0) {
            if (!any) {
                std::vector<std::vector<long long>> sorted = rows;
                std::sort(sorted.begin(), sorted.end(), std::greater<>());
                std::vector<long long> flat;
                for (const auto& r : sorted) flat.insert(flat.end(), r.begin(), r.end());
                sols_flat.push_back(std::move(flat));
            }
            return;
        }
        if (rows.size() >= max_rows) return;
        for (const auto& v : candidate_rows(R, cap)) {
            IntMat R2 = R;
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    R2(a, b) -= v[a] * v[b];
                    if (R2(a, b) < 0) {
                        ok = false;
                        break;
                    }
                }
            if (!ok) continue;
            // A zeroed diagonal with leftover off-diagonal mass can never be
            // repaired by further rows.
            for (std::size_t j = 0; j < n && ok; ++j)
                if (R2(j, j) == 0)
                    for (std::size_t b = 0; b < n; ++b)
                        if (R2(j, b) != 0) {
                            ok = false;
                            break;
                        }
            if (!ok) continue;
            rows.push_back(v);
            dfs(R2, rows, &rows.back());
            rows.pop_back();
        }
    }
};

}  // namespace detail

// All factorizations G = b^t b with nonnegative-integer rows, none zero,
// up to row permutation.  Rows of each result are sorted descending-lex;
// the list of factorizations is itself sorted for determinism.
inline std::vector<BranchingMatrix> gram_factorize(const IntMat& G, std::size_t max_rows = 0) {
    const std::size_t n = G.rows();
    if (G.cols() != n) throw Error("Gram matrix must be square");
    if (!(G == G.transposed())) throw Error("Gram matrix must be symmetric");
    for (long long x : G.data())
        if (x < 0) throw Error("Gram matrix must be nonnegative");

    // Columns sorted by increasing diagonal (stable).
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return G(a, a) < G(b, b); });
    IntMat Gs(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) Gs(a, b) = G(order[a], order[b]);

    long long diag_total = 0;
    for (std::size_t i = 0; i < n; ++i) diag_total += G(i, i);

    detail::GramFactorizer fac;
    fac.n = n;
    fac.max_rows = max_rows ? max_rows : static_cast<std::size_t>(diag_total);
    std::vector<std::vector<long long>> rows;
    IntMat work = Gs;
    fac.dfs(work, rows, nullptr);

    // Undo the column permutation, re-sort rows, dedupe whole factorizations.
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[order[i]] = i;
    std::set<std::vector<std::vector<long long>>> seen;
    for (const auto& flat : fac.sols_flat) {
        const std::size_t r = flat.size() / n;
        std::vector<std::vector<long long>> rs(r, std::vector<long long>(n));
        for (std::size_t t = 0; t < r; ++t)
            for (std::size_t c = 0; c < n; ++c) rs[t][c] = flat[t * n + inv[c]];
        std::sort(rs.begin(), rs.end(), std::greater<>());
        seen.insert(std::move(rs));
    }
    std::vector<BranchingMatrix> out;
    for (const auto& rs : seen) {
        BranchingMatrix bm;
        bm.b = IntMat(rs.size(), n);
        bm.vacuum_row = rs.size();
        for (std::size_t t = 0; t < rs.size(); ++t) {
            for (std::size_t c = 0; c < n; ++c) bm.b(t, c) = rs[t][c];
            if (rs[t][0] > 0) bm.vacuum_row = t;
        }
        out.push_back(std::move(bm));
    }
    return out;
}

// Z_{lm} = sum_tau b_{tau l} b_{tau m}.
inline IntMat type_one_invariant(const BranchingMatrix& bm) {
    return bm.b.transposed() * bm.b;
}

inline std::vector<BranchingMatrix> factor_type_one(const IntMat& Z, std::size_t max_rows = 0) {
    return gram_factorize(Z, max_rows);
}

// Z_{lm} = sum_tau b_{tau l} b_{vartheta(tau) m} for a vacuum-fixing row
// permutation vartheta.
inline IntMat type_two_invariant(const BranchingMatrix& bm,
                                 const std::vector<std::size_t>& vartheta) {
    const std::size_t r = bm.sectors(), n = bm.b.cols();
    if (vartheta.size() != r) throw Error("twist permutation size mismatch");
    std::vector<bool> hit(r, false);
    for (std::size_t t : vartheta) {
        if (t >= r || hit[t]) throw Error("twist is not a permutation");
        hit[t] = true;
    }
    if (bm.vacuum_row < r && vartheta[bm.vacuum_row] != bm.vacuum_row)
        throw Error("twist must fix the vacuum sector");
    IntMat Z(n, n, 0);
    for (std::size_t t = 0; t < r; ++t)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t m = 0; m < n; ++m) Z(l, m) += bm.b(t, l) * bm.b(vartheta[t], m);
    return Z;
}

// Selects the enumerated invariant whose trace equals the sector count of
// the theta factorization, disambiguating by the vacuum column.
inline const ModularInvariant& match_invariant(const CanonicalObject& theta, const FusionRing& fr,
                                               const std::vector<ModularInvariant>& invariants) {
    std::vector<BranchingMatrix> fs = gram_factorize(iota_gram(theta, fr));
    if (fs.empty()) throw ComputationError("theta Gram matrix has no integer factorization");
    const long long rows = static_cast<long long>(fs.front().sectors());
    std::vector<const ModularInvariant*> hits;
    for (const auto& inv : invariants)
        if (inv.trace == rows) hits.push_back(&inv);
    if (hits.size() > 1) {
        std::vector<const ModularInvariant*> refined;
        for (const ModularInvariant* inv : hits) {
            bool ok = true;
            for (std::size_t l = 0; l < theta.mult.size(); ++l)
                if (inv->Z(l, 0) != theta.mult[l]) ok = false;
            if (ok) refined.push_back(inv);
        }
        hits = refined;
    }
    if (hits.empty())
        throw ComputationError("no enumerated invariant matches theta (trace " +
                               std::to_string(rows) + ")");
    if (hits.size() > 1) throw ComputationError("theta matches several invariants ambiguously");
    return *hits.front();
}

// Word in the alpha-induced sectors: a product of positive and negative
// inductions.  The empty word is the identity sector.
struct SectorWord {
    std::vector<std::size_t> plus, minus;

    bool empty() const { return plus.empty() && minus.empty(); }
};

namespace detail {

inline std::vector<long long> word_mult_vector(const std::vector<std::size_t>& direct,
                                               const std::vector<std::size_t>& conjugated,
                                               const FusionRing& fr,
                                               const std::vector<std::size_t>& conj) {
    std::vector<long long> u(fr.size(), 0);
    u[0] = 1;
    for (std::size_t l : direct) u = mat_vec(fr.N[l], u);
    for (std::size_t l : conjugated) u = mat_vec(fr.N[conj[l]], u);
    return u;
}

}  // namespace detail

// <w1, w2> = sum_{xi,eta} u_xi v_eta Z_{xi eta} with u the multiplicity
// vector of w1.plus (x) conj(w2.plus) and v that of w2.minus (x)
// conj(w1.minus).
inline long long word_pair(const SectorWord& w1, const SectorWord& w2, const FusionRing& fr,
                           const IntMat& Z, const std::vector<std::size_t>& conj) {
    std::vector<long long> u = detail::word_mult_vector(w1.plus, w2.plus, fr, conj);
    std::vector<long long> v = detail::word_mult_vector(w2.minus, w1.minus, fr, conj);
    long long acc = 0;
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (u[a] == 0) continue;
        for (std::size_t b = 0; b < v.size(); ++b) acc += u[a] * Z(a, b) * v[b];
    }
    return acc;
}

struct SystemCounts {
    long long full_count = 0;  // Tr(Z Z^t)
    Real omega, omega_pm, omega_0;
};

inline SystemCounts system_counts(const IntMat& Z, const ModularData& md,
                                  const ToleranceConfig& cfg) {
    SystemCounts sc;
    sc.full_count = trace(Z * Z.transposed());
    sc.omega = global_index(md).omega;
    std::vector<Real> d = quantum_dims(md);
    Real vac(0);
    for (std::size_t l = 0; l < md.size(); ++l) vac += Real(Z(l, 0)) * d[l];
    if (vac <= cfg.val_eps) throw ComputationError("invariant has zero vacuum column");
    sc.omega_pm = sc.omega / vac;
    sc.omega_0 = sc.omega_pm * sc.omega_pm / sc.omega;
    return sc;
}

// <alpha_l^+ alpha_m^-, gamma> = <alpha_l^+, alpha_m^+> = iota-Gram entry.
inline long long gamma_pairing(std::size_t l, std::size_t m, const CanonicalObject& theta,
                               const FusionRing& fr) {
    return iota_gram(theta, fr)(l, m);
}

// Full induced system: irreducible decomposition of the n^2 words
// alpha_l^+ alpha_m^-, with sheet partition.
struct FullSystem {
    std::size_t n = 0;                 // label count of the underlying data
    std::vector<SectorWord> words;     // n^2 single-letter words, index l*n+m
    IntMat M;                          // sectors x words multiplicity matrix
    std::vector<std::string> names;    // canonical sector names
    std::vector<std::vector<std::size_t>> sheets;
    std::size_t factorization_count = 0;

    std::size_t sectors() const { return M.rows(); }

    std::vector<std::size_t> sectors_of_word(std::size_t l, std::size_t m) const {
        std::vector<std::size_t> out;
        for (std::size_t t = 0; t < M.rows(); ++t)
            if (M(t, l * n + m) > 0) out.push_back(t);
        return out;
    }
};

namespace detail {

inline std::string word_name(std::size_t l, std::size_t m) {
    if (l == 0 && m == 0) return "id";
    std::string s;
    if (l != 0) s += "a" + std::to_string(l) + "+";
    if (m != 0) s += "a" + std::to_string(m) + "-";
    return s;
}

// Canonical word order for naming: identity, pure plus, pure minus, mixed.
inline std::array<std::size_t, 3> word_rank(std::size_t l, std::size_t m) {
    if (l == 0 && m == 0) return {0, 0, 0};
    if (m == 0) return {1, l, 0};
    if (l == 0) return {2, m, 0};
    return {3, l, m};
}

}  // namespace detail

inline FullSystem full_system(const IntMat& Z, const CanonicalObject& theta, const FusionRing& fr,
                              const std::vector<std::size_t>& conj) {
    const std::size_t n = fr.size();
    const long long full_count = trace(Z * Z.transposed());

    // Consistency between theta and Z: the chiral sector count (rows of the
    // theta factorization) must equal Tr(Z).
    std::vector<BranchingMatrix> chiral = gram_factorize(iota_gram(theta, fr));
    if (chiral.empty()) throw ComputationError("theta Gram matrix has no integer factorization");
    if (static_cast<long long>(chiral.front().sectors()) != trace(Z))
        throw ComputationError("theta is inconsistent with the invariant: chiral count " +
                               std::to_string(chiral.front().sectors()) + " != Tr(Z) = " +
                               std::to_string(trace(Z)));

    FullSystem fs;
    fs.n = n;
    fs.words.reserve(n * n);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
            SectorWord w;
            if (l) w.plus.push_back(l);
            if (m) w.minus.push_back(m);
            fs.words.push_back(std::move(w));
        }

    IntMat W(n * n, n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        for (std::size_t j = i; j < n * n; ++j)
            W(i, j) = W(j, i) = word_pair(fs.words[i], fs.words[j], fr, Z, conj);

    // Identical Gram columns describe the same word up to equivalence;
    // factorize on representatives only.
    std::map<std::vector<long long>, std::vector<std::size_t>> cols;
    for (std::size_t i = 0; i < n * n; ++i) {
        std::vector<long long> key(n * n);
        for (std::size_t j = 0; j < n * n; ++j) key[j] = W(i, j);
        cols[std::move(key)].push_back(i);
    }
    std::vector<std::size_t> reps;
    std::vector<std::size_t> rep_of(n * n);
    for (const auto& [key, idxs] : cols) {
        for (std::size_t i : idxs) rep_of[i] = reps.size();
        reps.push_back(idxs.front());
    }
    IntMat Wr(reps.size(), reps.size());
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b) Wr(a, b) = W(reps[a], reps[b]);

    std::vector<BranchingMatrix> facts =
        gram_factorize(Wr, static_cast<std::size_t>(full_count) + 2);
    if (facts.empty())
        throw ComputationError("word Gram matrix has no integer factorization");
    fs.factorization_count = facts.size();
    const IntMat& Mr = facts.front().b;
    if (static_cast<long long>(Mr.rows()) != full_count)
        throw ComputationError("irreducible count " + std::to_string(Mr.rows()) +
                               " does not equal Tr(ZZ^t) = " + std::to_string(full_count));

    fs.M = IntMat(Mr.rows(), n * n);
    for (std::size_t t = 0; t < Mr.rows(); ++t)
        for (std::size_t i = 0; i < n * n; ++i) fs.M(t, i) = Mr(t, rep_of[i]);

    // Sheets: sweep the minus letter; a sheet collects the sectors first
    // reached at that letter.
    std::vector<bool> assigned(fs.M.rows(), false);
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<std::size_t> sheet;
        for (std::size_t t = 0; t < fs.M.rows(); ++t) {
            if (assigned[t]) continue;
            for (std::size_t l = 0; l < n; ++l)
                if (fs.M(t, l * n + m) > 0) {
                    sheet.push_back(t);
                    assigned[t] = true;
                    break;
                }
        }
        if (!sheet.empty()) fs.sheets.push_back(std::move(sheet));
    }

    // Names: each sector takes the canonically-first word of minimal column
    // norm among the words containing it; shared words get superscripts.
    std::vector<std::size_t> name_word(fs.M.rows());
    for (std::size_t t = 0; t < fs.M.rows(); ++t) {
        std::size_t best = n * n;
        long long best_norm = 0;
        std::array<std::size_t, 3> best_rank{};
        for (std::size_t i = 0; i < n * n; ++i) {
            if (fs.M(t, i) == 0) continue;
            long long norm = 0;
            for (std::size_t s = 0; s < fs.M.rows(); ++s) norm += fs.M(s, i) * fs.M(s, i);
            auto rank = detail::word_rank(i / n, i % n);
            if (best == n * n || norm < best_norm || (norm == best_norm && rank < best_rank)) {
                best = i;
                best_norm = norm;
                best_rank = rank;
            }
        }
        name_word[t] = best;
    }
    std::map<std::size_t, std::vector<std::size_t>> by_word;
    for (std::size_t t = 0; t < fs.M.rows(); ++t) by_word[name_word[t]].push_back(t);
    fs.names.resize(fs.M.rows());
    for (const auto& [w, ts] : by_word) {
        std::string base = detail::word_name(w / n, w % n);
        bool plain = ts.size() == 1 && fs.M(ts.front(), w) == 1;
        if (plain) {
            // plain only when the word is exactly this sector
            long long colsum = 0;
            for (std::size_t s = 0; s < fs.M.rows(); ++s) colsum += fs.M(s, w);
            plain = colsum == 1;
        }
        for (std::size_t k = 0; k < ts.size(); ++k)
            fs.names[ts[k]] = plain ? base : base + "(" + std::to_string(k + 1) + ")";
    }
    return fs;
}

// Sector-level left multiplication by the word g:
//   A = (MM^t)^{-1} M Q M^t (MM^t)^{-1},  Q_{ij} = <g.w_i, w_j>.
inline IntMat fusion_graph_matrix(const SectorWord& g, const FullSystem& fs, const FusionRing& fr,
                                  const IntMat& Z, const std::vector<std::size_t>& conj,
                                  const ToleranceConfig& cfg) {
    const std::size_t n = fr.size(), r = fs.sectors(), w = n * n;
    IntMat Q(w, w);
    for (std::size_t i = 0; i < w; ++i) {
        SectorWord left = g;
        left.plus.insert(left.plus.end(), fs.words[i].plus.begin(), fs.words[i].plus.end());
        left.minus.insert(left.minus.end(), fs.words[i].minus.begin(), fs.words[i].minus.end());
        for (std::size_t j = 0; j < w; ++j) Q(i, j) = word_pair(left, fs.words[j], fr, Z, conj);
    }
    IntMat mmt = fs.M * fs.M.transposed();
    RealMat mmt_inv(r, r);
    {
        RealMat a(r, r);
        for (std::size_t x = 0; x < r; ++x)
            for (std::size_t y = 0; y < r; ++y) a(x, y) = Real(mmt(x, y));
        for (std::size_t col = 0; col < r; ++col) {
            std::vector<Real> e(r, Real(0));
            e[col] = 1;
            std::vector<Real> sol = solve_linear(a, e);
            for (std::size_t x = 0; x < r; ++x) mmt_inv(x, col) = sol[x];
        }
    }
    IntMat mqm = fs.M * Q * fs.M.transposed();
    RealMat mid(r, r);
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) mid(x, y) = Real(mqm(x, y));
    RealMat res = mmt_inv * mid * mmt_inv;
    IntMat A(r, r);
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) {
            auto v = snap_to_integer(res(x, y), cfg.val_eps);
            if (!v || *v < 0)
                throw ComputationError("sector fusion coefficient fails to snap at (" +
                                       std::to_string(x) + "," + std::to_string(y) + ")");
            A(x, y) = *v;
        }
    return A;
}

// DOT rendering: one digraph, multiplicity k as k parallel edges, byte-stable.
inline std::string fusion_graph_dot(const IntMat& A, const std::vector<std::string>& names,
                                    const std::string& title) {
    std::string out = "digraph \"" + title + "\" {\n";
    for (std::size_t t = 0; t < A.rows(); ++t)
        out += "  n" + std::to_string(t) + " [label=\"" + names[t] + "\"];\n";
    for (std::size_t u = 0; u < A.rows(); ++u)
        for (std::size_t v = 0; v < A.cols(); ++v)
            for (long long k = 0; k < A(u, v); ++k)
                out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

// Infers theta from the vacuum column of Z; meaningful for type I
// invariants only (a twisted invariant's theta is not visible there).
inline CanonicalObject theta_from_vacuum(const IntMat& Z) {
    CanonicalObject t;
    t.mult.resize(Z.rows());
    for (std::size_t l = 0; l < Z.rows(); ++l) t.mult[l] = Z(l, 0);
    t.check();
    return t;
}

}  // namespace modinv
