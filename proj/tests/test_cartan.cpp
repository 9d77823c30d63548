#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "spoq/cartan.hpp"
#include "spoq/errors.hpp"
#include "spoq/linalg.hpp"

using namespace spoq;

TEST_CASE("cartan matrix small cases") {
    auto cd11 = cartan_data(1, 1);
    CHECK(cd11.a(-2, -2) == 0);
    CHECK(cd11.a(-2, -1) == 2);
    CHECK(cd11.a(-1, -2) == -1);
    CHECK(cd11.a(-1, -1) == 2);

    // n = 1, m = 2: the full matrix equals the n = 1 corner block.
    auto cd12 = cartan_data(1, 2);
    int expect12[3][3] = {{2, -1, 0}, {-1, 0, 2}, {0, -1, 2}};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(cd12.a(a - 3, b - 3) == expect12[a][b]);

    // (2,1), recomputed by hand from alpha_j(H_i).
    auto cd21 = cartan_data(2, 1);
    int expect21[3][3] = {{0, 1, 0}, {-1, 2, -2}, {0, -1, 2}};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(cd21.a(a - 3, b - 3) == expect21[a][b]);

    // n = 1, m = 3: same corner block, generic first row.
    auto cd13 = cartan_data(1, 3);
    CHECK(cd13.a(-4, -4) == 2);
    CHECK(cd13.a(-4, -3) == -1);
    int corner[3][3] = {{2, -1, 0}, {-1, 0, 2}, {0, -1, 2}};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(cd13.a(a - 3, b - 3) == corner[a][b]);

    CHECK_THROWS_AS(cartan_data(1, 0), BadDims);
    CHECK_THROWS_AS(cartan_data(0, 2), BadDims);
}

TEST_CASE("symmetrized cartan matrix is the root pairing") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 2}}) {
        auto cd = cartan_data(n, m);
        for (int i : cd.J) {
            for (int j : cd.J) {
                long da = static_cast<long>(cd.d(i)) * cd.a(i, j);
                CHECK(da == weight_pair(cd.dims, cd.simple_roots.at(i), cd.simple_roots.at(j)));
                CHECK(static_cast<long>(cd.d(i)) * cd.a(i, j) ==
                      static_cast<long>(cd.d(j)) * cd.a(j, i));
            }
        }
        // the odd simple root is the unique isotropic one
        for (int j : cd.J) {
            long sq = weight_pair(cd.dims, cd.simple_roots.at(j), cd.simple_roots.at(j));
            CHECK((sq == 0) == (j == cd.odd_root_index));
        }
    }
}

TEST_CASE("weight pairing values") {
    SuperDims dims{2, 2};
    CHECK(weight_pair(dims, weight_of_index(dims, -1), weight_of_index(dims, -1)) == 1);
    CHECK(weight_pair(dims, weight_of_index(dims, -4), weight_of_index(dims, -4)) == -1);
    CHECK(weight_pair(dims, weight_of_index(dims, -1), weight_of_index(dims, -2)) == 0);
    // folding: eps_{-i} = -eps_i
    CHECK(weight_pair(dims, weight_of_index(dims, 1), weight_of_index(dims, -1)) == -1);
}

TEST_CASE("two rho") {
    // (1,1): -2(eps_{-2}(-2+3)) - 2(-1)eps_{-1} = -2 eps_{-2} + 2 eps_{-1}
    auto w11 = two_rho(1, 1);
    WeightVector expect;
    expect.add(-2, -2);
    expect.add(-1, 2);
    CHECK(w11 == expect);
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}}) {
        auto cd = cartan_data(n, m);
        auto rho2 = two_rho(n, m);
        for (int j : cd.J)
            CHECK(weight_pair(cd.dims, rho2, cd.simple_roots.at(j)) ==
                  weight_pair(cd.dims, cd.simple_roots.at(j), cd.simple_roots.at(j)));
    }
}

TEST_CASE("root system") {
    auto roots11 = root_system(1, 1);
    CHECK(roots11.size() == 6);
    auto roots21 = root_system(2, 1);
    CHECK(roots21.size() == 16); // 2r^2 - 2r + 2n at r = 3, n = 2

    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
        auto cd = cartan_data(n, m);
        auto roots = root_system(n, m);
        std::set<WeightVector> rs;
        for (const auto& rt : roots) rs.insert(rt.w);
        CHECK(rs.size() == roots.size());
        // every simple root is a root
        for (int j : cd.J) CHECK(rs.count(cd.simple_roots.at(j)) == 1);
        // 2 eps_{-1} in, 2 eps_{-r} out (m >= 1)
        WeightVector lng;
        lng.add(-1, 2);
        CHECK(rs.count(lng) == 1);
        WeightVector oddsq;
        oddsq.add(-(n + m), 2);
        CHECK(rs.count(oddsq) == 0);
        // simple roots are linearly independent: the J x J coefficient matrix
        // over the eps basis has full rank
        DenseMat<Rational> mat(cd.J.size(), cd.J.size());
        for (std::size_t a = 0; a < cd.J.size(); ++a)
            for (std::size_t b = 0; b < cd.J.size(); ++b) {
                auto it = cd.simple_roots.at(cd.J[a]).coeff.find(cd.J[b]);
                mat.at(a, b) =
                    it == cd.simple_roots.at(cd.J[a]).coeff.end() ? Rational(0) : Rational(it->second);
            }
        CHECK(row_reduce(mat) == cd.J.size());
    }
}
