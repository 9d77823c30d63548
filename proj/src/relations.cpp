#include <string>

#include "spoq/vector_rep.hpp"

namespace spoq {
namespace {

std::string gen_name(GenKind kind) {
    switch (kind) {
        case GenKind::E: return "E";
        case GenKind::F: return "F";
        case GenKind::K: return "K";
        case GenKind::Kinv: return "Kinv";
    }
    return "?";
}

std::string pair_tag(GenKind kind, int i, int j) {
    return gen_name(kind) + "," + std::to_string(i) + "," + std::to_string(j);
}

RationalFunc rf_qpow(long e) { return RationalFunc(LaurentPoly::q_pow(e)); }

// X_i^2 X_j - c X_i X_j X_i + X_j X_i^2
GradedOperator quadratic_serre(const GradedOperator& xi, const GradedOperator& xj,
                               const RationalFunc& c) {
    auto xi2 = op_compose(xi, xi);
    auto mid = op_compose(xi, op_compose(xj, xi));
    return op_add(op_sub(op_compose(xi2, xj), op_scale(mid, c)), op_compose(xj, xi2));
}

// X^3 Y - c X^2 Y X + c X Y X^2 - Y X^3
GradedOperator cubic_serre(const GradedOperator& x, const GradedOperator& y,
                           const RationalFunc& c) {
    auto x2 = op_compose(x, x);
    auto x3 = op_compose(x2, x);
    auto t1 = op_compose(x3, y);
    auto t2 = op_scale(op_compose(x2, op_compose(y, x)), c);
    auto t3 = op_scale(op_compose(x, op_compose(y, x2)), c);
    auto t4 = op_compose(y, x3);
    return op_sub(op_add(op_sub(t1, t2), t3), t4);
}

// The nested supplementary expression for m, n >= 2:
// < X_{-n-1}, < X_{-n}, < X_{-n-1}, X_{-n-2} >_q >_{q^-1} >
GradedOperator nested4(const VectorRep& rep, GenKind kind, bool barred) {
    const int n = rep.dims.n;
    auto p_q = barred ? rf_qpow(-1) : rf_qpow(1);
    auto p_qi = barred ? rf_qpow(1) : rf_qpow(-1);
    auto l1 = q_supercommutator(rep.gen(kind, -n - 1), rep.gen(kind, -n - 2), p_q);
    auto l2 = q_supercommutator(rep.gen(kind, -n), l1, p_qi);
    return q_supercommutator(rep.gen(kind, -n - 1), l2, RationalFunc::one());
}

// The seventh-order supplementary expression for n = 1, m >= 3:
// < X_{-2}, < X_{-3}, < X_{-2}, < X_{-1}, < X_{-2}, < X_{-3}, X_{-4} >_q >_q >_{q^-2} >_{q^-1} >_q >
GradedOperator nested7(const VectorRep& rep, GenKind kind, bool barred) {
    long s = barred ? -1 : 1;
    auto l1 = q_supercommutator(rep.gen(kind, -3), rep.gen(kind, -4), rf_qpow(s));
    auto l2 = q_supercommutator(rep.gen(kind, -2), l1, rf_qpow(s));
    auto l3 = q_supercommutator(rep.gen(kind, -1), l2, rf_qpow(-2 * s));
    auto l4 = q_supercommutator(rep.gen(kind, -2), l3, rf_qpow(-s));
    auto l5 = q_supercommutator(rep.gen(kind, -3), l4, rf_qpow(s));
    return q_supercommutator(rep.gen(kind, -2), l5, RationalFunc::one());
}

} // namespace

Report verify_defining_relations(const VectorRep& rep) {
    Report rep_out{rep.dims, "relations", {}};
    auto& checks = rep_out.checks;
    const auto& J = rep.cartan.J;
    const int n = rep.dims.n, m = rep.dims.m;
    const int odd = rep.odd_j;
    auto id = GradedOperator::identity(rep.dims, 1);

    for (int j : J) {
        checks.push_back(residual_check(
            "k_inverse(" + std::to_string(j) + ")", "K K^-1 = K^-1 K = 1",
            op_add(op_sub(op_compose(rep.K.at(j), rep.Kinv.at(j)), id),
                   op_sub(op_compose(rep.Kinv.at(j), rep.K.at(j)), id))));
    }

    for (int i : J)
        for (int j : J) {
            if (i < j)
                checks.push_back(residual_check(
                    "k_commute(" + std::to_string(i) + "," + std::to_string(j) + ")",
                    "K_i K_j = K_j K_i",
                    op_sub(op_compose(rep.K.at(i), rep.K.at(j)),
                           op_compose(rep.K.at(j), rep.K.at(i)))));
            // K_i X_j K_i^-1 = q_i^{+-a_ij} X_j, checked as K_i X_j = q_i^{+-a_ij} X_j K_i
            long aij = rep.cartan.a(i, j);
            long di = rep.cartan.d(i);
            checks.push_back(residual_check(
                "k_conj(" + pair_tag(GenKind::E, i, j) + ")", "K_i E_j K_i^-1 = q_i^{a_ij} E_j",
                op_sub(op_compose(rep.K.at(i), rep.E.at(j)),
                       op_scale(op_compose(rep.E.at(j), rep.K.at(i)), rf_qpow(di * aij)))));
            checks.push_back(residual_check(
                "k_conj(" + pair_tag(GenKind::F, i, j) + ")", "K_i F_j K_i^-1 = q_i^{-a_ij} F_j",
                op_sub(op_compose(rep.K.at(i), rep.F.at(j)),
                       op_scale(op_compose(rep.F.at(j), rep.K.at(i)), rf_qpow(-di * aij)))));
        }

    for (int i : J)
        for (int j : J) {
            auto brak = q_supercommutator(rep.E.at(i), rep.F.at(j), RationalFunc::one());
            if (i != j) {
                checks.push_back(residual_check("ef_pairing(" + std::to_string(i) + "," +
                                                    std::to_string(j) + ")",
                                                "<E_i, F_j> = 0 for i != j", brak));
            } else {
                long di = rep.cartan.d(i);
                auto lhs = op_scale(brak, RationalFunc(LaurentPoly::q_pow(di) -
                                                       LaurentPoly::q_pow(-di)));
                auto rhs = op_sub(rep.K.at(i), rep.Kinv.at(i));
                checks.push_back(residual_check(
                    "ef_pairing(" + std::to_string(i) + "," + std::to_string(j) + ")",
                    "(q_i - q_i^-1) <E_i, F_i> = K_i - K_i^-1", op_sub(lhs, rhs)));
            }
        }

    for (GenKind kind : {GenKind::E, GenKind::F}) {
        // vanishing supercommutators at a_ij = 0
        for (int i : J)
            for (int j : J) {
                if (i == j || rep.cartan.a(i, j) != 0) continue;
                auto brak = q_supercommutator(rep.gen(kind, i), rep.gen(kind, j),
                                              RationalFunc::one());
                std::string nm = (i == odd ? "odd_commute(" : "serre_commute(") +
                                 pair_tag(kind, i, j) + ")";
                checks.push_back(residual_check(nm, "<X_i, X_j> = 0 for a_ij = 0", brak));
            }

        // quadratic Serre relations for even-root rows
        auto two = RationalFunc(q_number(2));
        for (int i : J) {
            if (i == odd || i == -1) continue;
            for (int j : {i - 1, i + 1}) {
                if (j < J.front() || j > -1) continue;
                if (i == -2 && j == -1) continue; // covered by the cubic below
                checks.push_back(residual_check(
                    "serre_quadratic(" + pair_tag(kind, i, j) + ")",
                    "X_i^2 X_j - (q + q^-1) X_i X_j X_i + X_j X_i^2 = 0",
                    quadratic_serre(rep.gen(kind, i), rep.gen(kind, j), two)));
            }
        }

        if (n >= 2) {
            checks.push_back(residual_check(
                "serre_cubic(" + gen_name(kind) + ",-2,-1)",
                "X_{-2}^3 X_{-1} - [3] X_{-2}^2 X_{-1} X_{-2} + [3] X_{-2} X_{-1} X_{-2}^2 - "
                "X_{-1} X_{-2}^3 = 0",
                cubic_serre(rep.gen(kind, -2), rep.gen(kind, -1), RationalFunc(q_number(3)))));
        }

        // X_{-1}^2 X_{-2} - (q^2 + q^-2) X_{-1} X_{-2} X_{-1} + X_{-2} X_{-1}^2 = 0
        auto c12 = RationalFunc(LaurentPoly::q_pow(2) + LaurentPoly::q_pow(-2));
        checks.push_back(residual_check(
            "serre_quadratic_long(" + gen_name(kind) + ",-1,-2)",
            "X_{-1}^2 X_{-2} - (q^2 + q^-2) X_{-1} X_{-2} X_{-1} + X_{-2} X_{-1}^2 = 0",
            quadratic_serre(rep.gen(kind, -1), rep.gen(kind, -2), c12)));

        checks.push_back(residual_check("odd_square(" + gen_name(kind) + ")",
                                        "X_{-n-1}^2 = 0",
                                        op_compose(rep.gen(kind, odd), rep.gen(kind, odd))));

        if (n >= 2 && m >= 2) {
            checks.push_back(residual_check(
                "supplementary_nested4(" + gen_name(kind) + ")",
                "<X_{-n-1}, <X_{-n}, <X_{-n-1}, X_{-n-2}>_q>_{q^-1}> = 0",
                nested4(rep, kind, false)));
        } else {
            checks.push_back(skipped_check("supplementary_nested4(" + gen_name(kind) + ")",
                                           "<X_{-n-1}, <X_{-n}, <X_{-n-1}, X_{-n-2}>_q>_{q^-1}> = 0",
                                           "requires m >= 2 and n >= 2"));
        }

        if (n == 1 && m >= 3) {
            checks.push_back(residual_check(
                "supplementary_order7(" + gen_name(kind) + ")",
                "<X_{-2}, <X_{-3}, <X_{-2}, <X_{-1}, <X_{-2}, <X_{-3}, "
                "X_{-4}>_q>_q>_{q^-2}>_{q^-1}>_q> = 0",
                nested7(rep, kind, false)));
            // Informational: the same expression with q -> q^-1 in every
            // parameter.  No assertion is made; the residual count is recorded.
            auto barred = nested7(rep, kind, true);
            Check info{"supplementary_order7_qbar(" + gen_name(kind) + ")",
                       "q -> q^-1 substituted seventh-order expression (informational)",
                       Status::Pass, static_cast<long>(barred.nnz()),
                       barred.is_zero() ? "vanishes in this representation"
                                        : "nonzero in this representation"};
            checks.push_back(std::move(info));
        } else {
            checks.push_back(skipped_check(
                "supplementary_order7(" + gen_name(kind) + ")",
                "<X_{-2}, <X_{-3}, <X_{-2}, <X_{-1}, <X_{-2}, <X_{-3}, "
                "X_{-4}>_q>_q>_{q^-2}>_{q^-1}>_q> = 0",
                "requires n = 1 and m >= 3"));
        }
    }

    // weight bookkeeping: K_j X K_j^-1 = q^{(alpha_j | lambda)} X for every
    // generator X of weight lambda
    for (int j : J) {
        GradedOperator acc(rep.dims, 1);
        for (GenKind kind : {GenKind::E, GenKind::F}) {
            for (int i : J) {
                long e = weight_pair(rep.dims, rep.cartan.simple_roots.at(j),
                                     rep.gen_weight(kind, i));
                acc = op_add(acc, op_sub(op_compose(rep.K.at(j), rep.gen(kind, i)),
                                         op_scale(op_compose(rep.gen(kind, i), rep.K.at(j)),
                                                  rf_qpow(e))));
            }
        }
        checks.push_back(residual_check("weight_conjugation(" + std::to_string(j) + ")",
                                        "K_j X K_j^-1 = q^{(alpha_j|lambda)} X", acc));
    }

    rep_out.sort_checks();
    return rep_out;
}

} // namespace spoq
