#pragma once

// Frozen regression fixtures: the ten published fusion matrices of the even
// E6 double, the four invariants Z1..Z4, and the SU(2)_16 A-D-E mass
// matrices.

#include <modinv/matrix.hpp>

#include <array>

namespace fixtures {

using modinv::IntMat;

inline IntMat from_rows(const std::array<std::array<long long, 10>, 10>& rows) {
    IntMat m(10, 10);
    for (std::size_t r = 0; r < 10; ++r)
        for (std::size_t c = 0; c < 10; ++c) m(r, c) = rows[r][c];
    return m;
}

// The ten printed Verlinde matrices N0..N9 of the E6 double.
inline std::vector<IntMat> e6_printed_fusion() {
    std::vector<IntMat> N;
    N.push_back(IntMat::identity(10));
    N.push_back(from_rows({{{0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                            {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                            {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
                            {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}}}));
    N.push_back(from_rows({{{0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                            {1, 0, 1, 1, 0, 1, 1, 0, 0, 0},
                            {0, 1, 1, 1, 0, 1, 1, 0, 0, 0},
                            {0, 0, 0, 0, 2, 0, 0, 1, 1, 1},
                            {0, 0, 1, 1, 0, 0, 1, 0, 0, 0},
                            {0, 0, 1, 1, 0, 1, 0, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 0, 1, 1},
                            {0, 0, 0, 0, 1, 0, 0, 1, 0, 1},
                            {0, 0, 0, 0, 1, 0, 0, 1, 1, 0}}}));
    N.push_back(from_rows({{{0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                            {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                            {0, 1, 1, 1, 0, 1, 1, 0, 0, 0},
                            {1, 0, 1, 1, 0, 1, 1, 0, 0, 0},
                            {0, 0, 0, 0, 2, 0, 0, 1, 1, 1},
                            {0, 0, 1, 1, 0, 1, 0, 0, 0, 0},
                            {0, 0, 1, 1, 0, 0, 1, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 1, 0, 1},
                            {0, 0, 0, 0, 1, 0, 0, 0, 1, 1},
                            {0, 0, 0, 0, 1, 0, 0, 1, 1, 0}}}));
    N.push_back(from_rows({{{0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 2, 0, 0, 1, 1, 1},
                            {0, 0, 0, 0, 2, 0, 0, 1, 1, 1},
                            {1, 1, 2, 2, 0, 1, 1, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 1, 1, 1},
                            {0, 0, 0, 0, 1, 0, 0, 1, 1, 1},
                            {0, 0, 1, 1, 0, 1, 1, 0, 0, 0},
                            {0, 0, 1, 1, 0, 1, 1, 0, 0, 0},
                            {0, 0, 1, 1, 0, 1, 1, 0, 0, 0}}}));
    N.push_back(from_rows({{{0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
                            {0, 0, 1, 1, 0, 0, 1, 0, 0, 0},
                            {0, 0, 1, 1, 0, 1, 0, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 1, 1, 1},
                            {1, 0, 0, 1, 0, 1, 0, 0, 0, 0},
                            {0, 1, 1, 0, 0, 0, 1, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 0, 0, 1}}}));
    N.push_back(from_rows({{{0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
                            {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                            {0, 0, 1, 1, 0, 1, 0, 0, 0, 0},
                            {0, 0, 1, 1, 0, 0, 1, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 1, 1, 1},
                            {0, 1, 1, 0, 0, 0, 1, 0, 0, 0},
                            {1, 0, 0, 1, 0, 1, 0, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 1, 0, 0, 0, 0, 1}}}));
    N.push_back(from_rows({{{0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 1, 0, 0, 0, 1, 1},
                            {0, 0, 0, 0, 1, 0, 0, 1, 0, 1},
                            {0, 0, 1, 1, 0, 1, 1, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
                            {0, 1, 1, 0, 0, 1, 0, 0, 0, 0},
                            {1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
                            {0, 0, 1, 1, 0, 0, 0, 0, 0, 0}}}));
    N.push_back(N[7].transposed());
    N.push_back(from_rows({{{0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
                            {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
                            {0, 0, 0, 0, 1, 0, 0, 1, 1, 0},
                            {0, 0, 0, 0, 1, 0, 0, 1, 1, 0},
                            {0, 0, 1, 1, 0, 1, 1, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
                            {0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
                            {0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
                            {0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
                            {1, 1, 0, 0, 0, 1, 1, 0, 0, 0}}}));
    return N;
}

// The four published invariants of the E6 double in canonical order.
inline std::vector<IntMat> e6_invariants() {
    std::vector<IntMat> Z;
    Z.push_back(IntMat::identity(10));
    IntMat z2 = IntMat::identity(10);
    z2(7, 7) = z2(8, 8) = 0;
    z2(7, 8) = z2(8, 7) = 1;
    Z.push_back(z2);
    IntMat z3(10, 10, 0);
    for (auto [a, b] : {std::pair<int, int>{0, 0}, {0, 2}, {1, 1}, {1, 3}, {2, 0}, {2, 2},
                        {3, 1}, {3, 3}})
        z3(a, b) = 1;
    z3(4, 4) = 2;
    Z.push_back(z3);
    IntMat z4(10, 10, 0);
    for (int a : {0, 2, 4})
        for (int b : {0, 2, 4}) z4(a, b) = 1;
    Z.push_back(z4);
    return Z;
}

// SU(2)_16 A-D-E mass matrices (17 labels 0..16).
inline IntMat su2_16_a17() { return IntMat::identity(17); }

inline IntMat su2_16_d10() {
    IntMat b(6, 17, 0);
    b(0, 0) = b(0, 16) = 1;
    b(1, 2) = b(1, 14) = 1;
    b(2, 4) = b(2, 12) = 1;
    b(3, 6) = b(3, 10) = 1;
    b(4, 8) = 1;
    b(5, 8) = 1;
    return b.transposed() * b;
}

inline IntMat su2_16_e7() {
    IntMat z(17, 17, 0);
    auto block = [&z](std::initializer_list<int> xs, std::initializer_list<int> ys) {
        for (int x : xs)
            for (int y : ys) z(x, y) += 1;
    };
    block({0, 16}, {0, 16});
    block({4, 12}, {4, 12});
    block({6, 10}, {6, 10});
    block({8}, {8});
    block({2, 14}, {8});
    block({8}, {2, 14});
    return z;
}

}  // namespace fixtures
