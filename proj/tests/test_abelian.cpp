#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "e2ab/abelian.hpp"
#include "e2ab/abelian_oracle.hpp"

using namespace e2ab;

namespace {

Int laplace_det(const IntMatrix &m, std::vector<size_t> cols, size_t row) {
    if (cols.empty()) return 1;
    Int acc = 0;
    int sign = 1;
    for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<size_t> rest;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        acc += sign * m.at(row, cols[k]) * laplace_det(m, rest, row + 1);
        sign = -sign;
    }
    return acc;
}

Int det(const IntMatrix &m) {
    std::vector<size_t> cols;
    for (size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
    return laplace_det(m, cols, 0);
}

// Structure of (Z/n1 x ... x Z/nk) / <gens> by plain coset enumeration plus
// the order-profile reconstruction; shares no code with the SNF path.
AbelianGroup enumerated_quotient(const std::vector<int64_t> &moduli,
                                 const std::vector<std::vector<int64_t>> &gens) {
    size_t n = 1;
    for (int64_t m : moduli) n *= static_cast<size_t>(m);
    auto index_of = [&](const std::vector<int64_t> &v) {
        size_t idx = 0, stride = 1;
        for (size_t i = 0; i < moduli.size(); ++i) {
            int64_t c = ((v[i] % moduli[i]) + moduli[i]) % moduli[i];
            idx += static_cast<size_t>(c) * stride;
            stride *= static_cast<size_t>(moduli[i]);
        }
        return idx;
    };
    auto element_of = [&](size_t idx) {
        std::vector<int64_t> v(moduli.size());
        for (size_t i = 0; i < moduli.size(); ++i) {
            v[i] = static_cast<int64_t>(idx % static_cast<size_t>(moduli[i]));
            idx /= static_cast<size_t>(moduli[i]);
        }
        return v;
    };
    // subgroup closure
    std::vector<uint8_t> in_h(n, 0);
    in_h[0] = 1;
    std::vector<size_t> work{0};
    while (!work.empty()) {
        size_t cur = work.back();
        work.pop_back();
        for (const auto &g : gens) {
            auto v = element_of(cur);
            for (size_t i = 0; i < moduli.size(); ++i) v[i] += g[i];
            size_t nxt = index_of(v);
            if (!in_h[nxt]) {
                in_h[nxt] = 1;
                work.push_back(nxt);
            }
        }
    }
    // cosets
    std::vector<size_t> coset_id(n, SIZE_MAX), reps;
    for (size_t x = 0; x < n; ++x) {
        if (coset_id[x] != SIZE_MAX) continue;
        size_t id = reps.size();
        reps.push_back(x);
        auto vx = element_of(x);
        for (size_t h = 0; h < n; ++h) {
            if (!in_h[h]) continue;
            auto vh = element_of(h);
            std::vector<int64_t> s(moduli.size());
            for (size_t i = 0; i < moduli.size(); ++i) s[i] = vx[i] + vh[i];
            coset_id[index_of(s)] = id;
        }
    }
    FiniteAbelianOracle g;
    g.n = reps.size();
    g.identity = coset_id[0];
    g.op = [&, reps, coset_id, moduli](size_t x, size_t y) {
        auto vx = element_of(reps[x]), vy = element_of(reps[y]);
        std::vector<int64_t> s(moduli.size());
        for (size_t i = 0; i < moduli.size(); ++i) s[i] = vx[i] + vy[i];
        return coset_id[index_of(s)];
    };
    return abelian_structure_from_orders(g);
}

}  // namespace

TEST_CASE("canonical form and printing") {
    CHECK(AbelianGroup{}.is_trivial());
    CHECK(AbelianGroup{}.to_string() == "0");
    CHECK(AbelianGroup{2, {}}.to_string() == "Z^2");
    CHECK(AbelianGroup{1, {12}}.to_string() == "Z x Z/12");
    CHECK(AbelianGroup::from_moduli({1, 1}) == AbelianGroup{});
    CHECK(AbelianGroup::from_moduli({2, 3}) == AbelianGroup{0, {6}});
    CHECK(AbelianGroup::from_moduli({4, 6}) == AbelianGroup{0, {2, 12}});
    CHECK(AbelianGroup::from_moduli({0, 2}) == AbelianGroup{1, {2}});
    CHECK(AbelianGroup{0, {2, 6}}.torsion_order() == 12);
}

TEST_CASE("smith normal form basics") {
    IntMatrix d23(2, 2);
    d23.at(0, 0) = 2;
    d23.at(1, 1) = 3;
    CHECK(smith_normal_form(d23) == std::vector<Int>{1, 6});

    IntMatrix one(1, 1);
    one.at(0, 0) = 12;
    CHECK(smith_normal_form(one) == std::vector<Int>{12});
}

TEST_CASE("lattice and finite quotients, pinned cases") {
    IntMatrix diag2(0, 2);
    diag2.append_row({2, 0});
    diag2.append_row({0, 2});
    CHECK(lattice_quotient(2, diag2) == AbelianGroup{0, {2, 2}});

    IntMatrix row12(0, 2);
    row12.append_row({12, 0});
    CHECK(lattice_quotient(2, row12) == AbelianGroup{1, {12}});

    CHECK(lattice_quotient(1, IntMatrix(0, 1)) == AbelianGroup{1, {}});

    CHECK(finite_quotient({12}, IntMatrix(0, 1)) == AbelianGroup{0, {12}});
    IntMatrix g11(0, 2);
    g11.append_row({1, 1});
    CHECK(finite_quotient({2, 2}, g11) == AbelianGroup{0, {2}});
    IntMatrix g2(0, 1);
    g2.append_row({2});
    CHECK(finite_quotient({4}, g2) == AbelianGroup{0, {2}});
}

TEST_CASE("SNF: divisibility chain and determinant preservation, randomized") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> entry(-100, 100);
    std::uniform_int_distribution<size_t> dim(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        size_t n = dim(rng);
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        auto s = smith_normal_form(m);
        REQUIRE(s.size() == n);
        Int prod = 1;
        for (size_t i = 0; i + 1 < n; ++i) {
            if (s[i] == 0) CHECK(s[i + 1] == 0);
            else CHECK(s[i + 1] % s[i] == 0);
        }
        for (const auto &v : s) {
            CHECK(v >= 0);
            prod *= v;
        }
        CHECK(prod == abs(det(m)));
    }
}

TEST_CASE("SNF: invariance under permutation and zero rows") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-100, 100);
    for (int trial = 0; trial < 100; ++trial) {
        size_t r = 3, c = 4;
        IntMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        auto base = smith_normal_form(m);

        IntMatrix perm(r, c);  // swap rows 0,2 and columns 1,3
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) {
                size_t pi = i == 0 ? 2 : i == 2 ? 0 : i;
                size_t pj = j == 1 ? 3 : j == 3 ? 1 : j;
                perm.at(pi, pj) = m.at(i, j);
            }
        CHECK(smith_normal_form(perm) == base);

        IntMatrix padded(r + 2, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) padded.at(i, j) = m.at(i, j);
        auto pad = smith_normal_form(padded);
        pad.resize(base.size());  // same min(rows, cols) prefix
        CHECK(pad == base);
    }
}

TEST_CASE("finite_quotient agrees with coset enumeration") {
    std::mt19937_64 rng(11);
    std::vector<std::vector<int64_t>> ambients = {{2, 2}, {4}, {12}, {2, 3, 4}, {8, 9}, {6, 6}, {2, 2, 2, 2}};
    for (const auto &mods : ambients) {
        for (int trial = 0; trial < 20; ++trial) {
            size_t ngens = 1 + rng() % 3;
            std::vector<std::vector<int64_t>> gens;
            IntMatrix gm(0, mods.size());
            for (size_t g = 0; g < ngens; ++g) {
                std::vector<int64_t> v;
                std::vector<Int> row;
                for (int64_t m : mods) {
                    int64_t x = static_cast<int64_t>(rng() % static_cast<uint64_t>(m));
                    v.push_back(x);
                    row.push_back(x);
                }
                gens.push_back(v);
                gm.append_row(row);
            }
            std::vector<Int> mods_int(mods.begin(), mods.end());
            CHECK(finite_quotient(mods_int, gm) == enumerated_quotient(mods, gens));
        }
    }
}

TEST_CASE("SNF column transform tracks the quotient coordinates") {
    // x -> x * V sends generator rows into the diagonal lattice
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) m.at(i, j) = entry(rng);
        IntMatrix v;
        auto s = smith_normal_form(m, v);
        REQUIRE(v.rows() == 3);
        REQUIRE(v.cols() == 3);
        CHECK(abs(det(v)) == 1);
        for (size_t i = 0; i < 3; ++i) {
            // row_i * V must lie in d_j Z per coordinate j
            for (size_t j = 0; j < 3; ++j) {
                Int acc = 0;
                for (size_t k = 0; k < 3; ++k) acc += m.at(i, k) * v.at(k, j);
                if (s[j] != 0) CHECK(acc % s[j] == 0);
            }
        }
    }
}
