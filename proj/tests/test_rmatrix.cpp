#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spoq/rmatrix.hpp"

using namespace spoq;

namespace {

void check_report(const Report& r, const char* what) {
    for (const auto& c : r.checks) {
        INFO(what, " / ", c.name, ": ", c.detail);
        CHECK(c.status != Status::Fail);
    }
}

} // namespace

TEST_CASE("rhat entries at (1,1)") {
    auto index = build_index_data(1, 1);
    auto set = r_matrices(index);

    // diagonal square: Rhat(e_2 ox e_2) = -q^-1 e_2 ox e_2
    int dd[] = {2, 2};
    CHECK(set.Rhat.at(dd, dd) == RationalFunc(LaurentPoly::q_pow(-1).scaled(Rational(-1))));
    // exchange with i < j, i != -j: Rhat(e_{-2} ox e_{-1}) has sigma term and tail
    int col[] = {-2, -1}, swp[] = {-1, -2};
    CHECK(set.Rhat.at(swp, col) == RationalFunc::one());
    CHECK(set.Rhat.at(col, col) ==
          RationalFunc(LaurentPoly::q() - LaurentPoly::q_pow(-1)));

    // hand-expanded column on e_{-1} ox e_1
    int c11[] = {-1, 1};
    int r1[] = {1, -1}, r2[] = {-1, 1}, r3[] = {-2, 2};
    CHECK(set.Rhat.at(r1, c11) == RationalFunc(LaurentPoly::q_pow(-1)));
    CHECK(set.Rhat.at(r2, c11) ==
          RationalFunc(LaurentPoly::q() - LaurentPoly::q_pow(-3)));
    CHECK(set.Rhat.at(r3, c11) ==
          RationalFunc(LaurentPoly::one() - LaurentPoly::q_pow(-2)));
}

TEST_CASE("classical limit") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        auto index = build_index_data(n, m);
        auto set = r_matrices(index);
        auto p = twist(index.dims);
        // at q = 1, Rhat = P and R = id
        for (const auto& [rc, v] : set.Rhat.entries)
            CHECK(v.eval(Rational(1)) == p.at_lin(rc.first, rc.second).eval(Rational(1)));
        for (const auto& [rc, v] : p.entries)
            CHECK(v.eval(Rational(1)) == set.Rhat.at_lin(rc.first, rc.second).eval(Rational(1)));
        for (const auto& [rc, v] : set.R.entries)
            CHECK(v.eval(Rational(1)) == Rational(rc.first == rc.second ? 1 : 0));
    }
}

TEST_CASE("nonzero counts") {
    // frozen from the combinatorial count 8r^2 - 3r - [m >= n+1]
    auto nnz = [](int n, int m) {
        return r_matrices(build_index_data(n, m)).Rhat.nnz();
    };
    CHECK(nnz(1, 1) == 26);
    CHECK(nnz(2, 1) == 63);
    CHECK(nnz(1, 2) == 62);
    CHECK(nnz(2, 2) == 116);
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 1}})
        CHECK(nnz(n, m) == rhat_expected_nnz(SuperDims{n, m}));
}

TEST_CASE("laurent entries") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 2}}) {
        auto set = r_matrices(build_index_data(n, m));
        CHECK(set.Rhat.is_laurent());
        CHECK(set.R.is_laurent());
        CHECK(set.Rinv.is_laurent());
        CHECK(set.RhatInv.is_laurent());
        CHECK(set.Kop.is_laurent());
        // P_s denominators divide (q + q^-1)(q + q^{-2d-1})
        LaurentPoly denom = (LaurentPoly::q() + LaurentPoly::q_pow(-1)) *
                            (LaurentPoly::q() + LaurentPoly::q_pow(-2 * (n - m) - 1));
        for (const auto& [rc, v] : set.Ps.entries) {
            auto prod = RationalFunc(denom) * v;
            CHECK(prod.is_laurent());
        }
    }
}

TEST_CASE("commutant with the lifted action") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}}) {
        auto rep = build_vector_rep(n, m);
        auto set = r_matrices(rep);
        check_report(verify_commutant(set, rep), "commutant");
    }
    // perturbed Rhat must fail
    auto rep = build_vector_rep(1, 1);
    auto set = r_matrices(rep);
    int a[] = {1, 1}, b[] = {2, 2};
    set.Rhat.add_entry(a, b, RationalFunc::one());
    CHECK_FALSE(verify_commutant(set, rep).all_pass());
}

TEST_CASE("spectral identities") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        auto rep = build_vector_rep(n, m);
        auto set = r_matrices(rep);
        auto bases = standard_bases(rep);
        check_report(verify_spectral(set, rep, bases), "spectral");
    }
}

TEST_CASE("minimal polynomial") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        auto set = r_matrices(build_index_data(n, m));
        check_report(verify_minpoly(set), "minpoly");
    }
    // d = 0: the quadratic (Rhat - q)(Rhat + q^-1) equals the K term yet is nonzero
    auto set = r_matrices(build_index_data(1, 1));
    auto id = GradedOperator::identity(set.dims, 2);
    auto f_q = op_sub(set.Rhat, op_scale(id, RationalFunc(LaurentPoly::q())));
    auto f_qi = op_add(set.Rhat, op_scale(id, RationalFunc(LaurentPoly::q_pow(-1))));
    auto quad = op_compose(f_q, f_qi);
    CHECK_FALSE(quad.is_zero());
    CHECK(quad.same_entries(op_scale(
        set.Kop, RationalFunc((LaurentPoly::q() - LaurentPoly::q_pow(-1)) *
                              LaurentPoly::q_pow(-1)))));
}

TEST_CASE("braid relation") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}}) {
        auto set = r_matrices(build_index_data(n, m));
        check_report(verify_braid(set), "braid");
    }
    // q = 1 limit: the braid relation reduces to the twist braid identity
    auto p = twist(SuperDims{1, 1});
    auto id1 = GradedOperator::identity(SuperDims{1, 1}, 1);
    auto p12 = op_tensor(p, id1), p23 = op_tensor(id1, p);
    CHECK(op_compose(p12, op_compose(p23, p12))
              .same_entries(op_compose(p23, op_compose(p12, p23))));
}

TEST_CASE("bwm relations") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}}) {
        auto set = r_matrices(build_index_data(n, m));
        check_report(verify_bwm(set), "bwm");
    }
}

TEST_CASE("partial supertranspose identity") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}}) {
        auto rep = build_vector_rep(n, m);
        auto set = r_matrices(rep);
        auto maps = bq_maps(rep);
        check_report(verify_rfrl(set, maps), "rfrl");

        // negative control: the plain transpose in slot 1 breaks the identity
        GradedOperator plain(set.dims, 2);
        plain.degree = 0;
        const auto base = static_cast<LinIdx>(set.dims.dim());
        for (const auto& [rc, v] : set.R.entries) {
            LinIdx i = rc.first / base, r0 = rc.first % base;
            LinIdx j = rc.second / base, s0 = rc.second % base;
            plain.add_entry(j * base + r0, i * base + s0, v);
        }
        auto id1 = GradedOperator::identity(set.dims, 1);
        auto chain = op_compose(op_tensor(maps.f_r_inv, id1),
                                op_compose(plain, op_tensor(maps.f_r, id1)));
        CHECK_FALSE(op_sub(set.Rinv, chain).is_zero());
    }
}

TEST_CASE("inverse is not the bar image") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        auto set = r_matrices(build_index_data(n, m));
        auto rep = verify_asymmetry(set);
        check_report(rep, "asymmetry");
        CHECK(rep.checks.front().status == Status::Pass);
    }
    // the difference vanishes at q = 1
    auto set = r_matrices(build_index_data(1, 1));
    auto diff = op_sub(set.Rinv, op_bar(set.R));
    for (const auto& [rc, v] : diff.entries) CHECK(v.eval(Rational(1)) == 0);
    // witness rows/columns at (1,1) involve the odd pair (+-2, -+2)
    int rw[] = {2, -2}, cl[] = {-1, 1};
    CHECK_FALSE(set.Rinv.at(rw, cl) == op_bar(set.R).at(rw, cl));
    // m = 0 is informational only
    auto set20 = r_matrices(build_index_data(2, 0));
    CHECK(verify_asymmetry(set20).checks.front().status == Status::Skipped);
}

TEST_CASE("degenerate formula path") {
    for (auto [n, m] : {std::pair{2, 0}, {0, 2}}) {
        auto index = build_index_data(n, m);
        auto set = r_matrices(index);
        check_report(verify_minpoly(set), "degenerate minpoly");
        check_report(verify_braid(set), "degenerate braid");
        check_report(verify_bwm(set), "degenerate bwm");
    }
}
