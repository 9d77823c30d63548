#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spoq/errors.hpp"
#include "spoq/super_index.hpp"

using namespace spoq;

TEST_CASE("index data at (1,1)") {
    auto data = build_index_data(1, 1);
    CHECK(data.indices == std::vector<int>{-2, -1, 1, 2});
    CHECK(data.sigma(-2) == -1);
    CHECK(data.sigma(-1) == 1);
    CHECK(data.sigma(1) == 1);
    CHECK(data.sigma(2) == -1);
    CHECK(data.tau(-2) == 1);
    CHECK(data.tau(-1) == 1);
    CHECK(data.tau(1) == -1);
    CHECK(data.tau(2) == 1);
}

TEST_CASE("sign factor identities across dims") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 2}}) {
        auto data = build_index_data(n, m);
        int r = n + m;
        CHECK(static_cast<int>(data.indices.size()) == 2 * r);
        int even = 0, odd = 0;
        for (int i : data.indices) (data.eta(i) == 0 ? even : odd)++;
        CHECK(even == 2 * n);
        CHECK(odd == 2 * m);
        for (int i : data.indices) CHECK(data.tau(i) * data.tau(-i) == -data.sigma(i));
        // sigma_{j,j+1} = sigma_{j+1} for -r <= j <= -2
        for (int j = -r; j <= -2; ++j) CHECK(data.sigma2(j, j + 1) == data.sigma(j + 1));
        // ... equivalently sigma_{j,j+1} = sigma_j on the positive side
        for (int j = 1; j <= r - 1; ++j) CHECK(data.sigma2(j, j + 1) == data.sigma(j));
    }
}

TEST_CASE("form matrices at (1,1)") {
    auto data = build_index_data(1, 1);
    auto cq = cq_matrix(data);
    CHECK(cq.at(-1, 1) == LaurentPoly::monomial(-1, Rational(-1)));
    CHECK(cq.at(1, -1) == LaurentPoly::q());
    CHECK(cq.at(-2, 2) == LaurentPoly::q_pow(-2));
    CHECK(cq.at(2, -2) == LaurentPoly::one());
    CHECK(cq.at(1, 1).is_zero());
}

TEST_CASE("form matrix identities") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}}) {
        auto data = build_index_data(n, m);
        auto cq = cq_matrix(data);
        auto c = c_matrix(data);
        auto g = g_matrix(data);
        for (int i : data.indices) {
            // C^q_{i,-i} C^q_{-i,i} = -1 (even i) or q^-2 (odd i)
            auto prod = cq.at(i, -i) * cq.at(-i, i);
            if (data.eta(i) == 0)
                CHECK(prod == LaurentPoly::from_int(-1));
            else
                CHECK(prod == LaurentPoly::q_pow(-2));
            // C^{q=1} = C
            CHECK(cq.at(i, -i).eval(Rational(1)) == c.at(i, -i).eval(Rational(1)));
            // C^2 = -G
            auto csq = c.at(i, -i) * c.at(-i, i);
            CHECK(csq == -g.at(i, i));
            // inverse entries are monomials and actually invert C^q
            auto inv = cq_inverse_entry(data, -i, i);
            CHECK(inv.terms().size() == 1);
            CHECK(cq.at(i, -i) * inv == LaurentPoly::one());
        }
    }
}

TEST_CASE("degenerate and invalid dims") {
    CHECK_THROWS_AS(build_index_data(0, 0), BadDims);
    CHECK_THROWS_AS(build_index_data(-1, 2), BadDims);
    auto data = build_index_data(0, 2); // formula path admits n = 0
    for (int i : data.indices) CHECK(data.eta(i) == 1);
    auto cq = cq_matrix(data);
    CHECK(cq.at(-1, 1) == LaurentPoly::q_pow(-1));
    CHECK(cq.at(1, -1) == LaurentPoly::q_pow(-1));
}
