#include <random>

#include "spoq/tensor_module.hpp"

namespace spoq {
namespace {

// Rows of the invariance system b~(X (e_i ox e_k)) = counit(X) b~(e_i ox e_k)
// at a rational specialization, one row per (generator, basis pair).
std::size_t invariant_form_nullity(const VectorRep& rep, const LiftedAction& act,
                                   const Rational& q0) {
    const std::size_t total = space_dim(rep.dims, 2);
    RatSpan span(total);
    for (GenKind kind : {GenKind::E, GenKind::F, GenKind::K}) {
        Rational eps = counit(kind);
        for (int j : rep.cartan.J) {
            auto mat = specialize(act.gen(kind, j), q0);
            for (std::size_t col = 0; col < total; ++col) {
                std::vector<Rational> row(total, Rational(0));
                bool nz = false;
                for (std::size_t ab = 0; ab < total; ++ab) {
                    Rational v = mat.at(ab, col);
                    if (ab == col) v -= eps;
                    if (v != 0) nz = true;
                    row[ab] = v;
                }
                if (nz) span.insert(std::move(row));
            }
        }
    }
    return total - span.dim();
}

} // namespace

Report verify_form_invariance(const VectorRep& rep, const FormMaps& maps, unsigned long seed) {
    Report out{rep.dims, "invariance", {}};
    auto& checks = out.checks;
    auto act = build_lifted_action(rep, 2);
    const auto& index = rep.index;

    // invariance of b~ under every generator, batched per kind
    for (GenKind kind : {GenKind::E, GenKind::F, GenKind::K, GenKind::Kinv}) {
        const char* kn = kind == GenKind::E   ? "E"
                         : kind == GenKind::F ? "F"
                         : kind == GenKind::K ? "K"
                                              : "Kinv";
        long bad = 0;
        RationalFunc eps{LaurentPoly::constant(counit(kind))};
        for (int j : rep.cartan.J) {
            for (int i : index.indices) {
                for (int k : index.indices) {
                    int idx[] = {i, k};
                    auto x = basis_tensor(rep.dims, idx);
                    RationalFunc lhs = btilde(maps.bq, apply(act.gen(kind, j), x));
                    RationalFunc rhs = eps * btilde(maps.bq, x);
                    if (!(lhs == rhs)) ++bad;
                }
            }
        }
        checks.push_back(Check{std::string("btilde_invariance(") + kn + ")",
                               "btilde(X (e_i ox e_k)) = counit(X) btilde(e_i ox e_k)",
                               bad == 0 ? Status::Pass : Status::Fail, bad, ""});
    }

    // scaled form: invariance is homogeneous in b
    {
        FormMatrix scaled = maps.bq;
        for (auto& [rc, v] : scaled.entries) v = v.scaled(Rational(5));
        long bad = 0;
        for (int j : rep.cartan.J)
            for (int i : index.indices)
                for (int k : index.indices) {
                    int idx[] = {i, k};
                    auto x = basis_tensor(rep.dims, idx);
                    if (!btilde(scaled, apply(act.E.at(j), x)).is_zero()) ++bad;
                }
        checks.push_back(Check{"btilde_scaled", "5 b^q is invariant as well (linearity)",
                               bad == 0 ? Status::Pass : Status::Fail, bad, ""});
    }

    // weight-support argument: any pair with i + k != 0 is forced to zero by
    // some K_j equation
    {
        long bad = 0;
        for (int i : index.indices)
            for (int k : index.indices) {
                if (i + k == 0) continue;
                auto w = weight_of_index(rep.dims, i) + weight_of_index(rep.dims, k);
                bool forced = false;
                for (int j : rep.cartan.J)
                    if (weight_pair(rep.dims, rep.cartan.simple_roots.at(j), w) != 0)
                        forced = true;
                if (!forced) ++bad;
            }
        checks.push_back(Check{"support_condition",
                               "K-invariance forces btilde(e_i ox e_k) = 0 unless i + k = 0",
                               bad == 0 ? Status::Pass : Status::Fail, bad, ""});
    }

    // dual-map identities for the even form (no commutation factors):
    //   f_l h_V = (S(h)_V)^st f_l   and   f_r S(h)_V = (h_V)^st f_r
    {
        GradedOperator acc_l(rep.dims, 1), acc_r(rep.dims, 1);
        for (GenKind kind : {GenKind::E, GenKind::F, GenKind::K, GenKind::Kinv}) {
            for (int j : rep.cartan.J) {
                const auto& h = rep.gen(kind, j);
                auto sh = antipode_image(rep, kind, j);
                acc_l = op_add(acc_l, op_sub(op_compose(maps.f_l, h),
                                             op_compose(supertranspose(sh), maps.f_l)));
                acc_r = op_add(acc_r, op_sub(op_compose(maps.f_r, sh),
                                             op_compose(supertranspose(h), maps.f_r)));
            }
        }
        checks.push_back(
            residual_check("dual_map_left", "f_l h = (S(h))^st f_l for all generators", acc_l));
        checks.push_back(residual_check(
            "dual_map_right", "f_r S(h) = h^st f_r for all generators", acc_r));
        checks.push_back(residual_check(
            "dual_maps_invertible", "f_l f_l^-1 = f_r f_r^-1 = id",
            op_add(op_sub(op_compose(maps.f_l, maps.f_l_inv),
                          GradedOperator::identity(rep.dims, 1)),
                   op_sub(op_compose(maps.f_r, maps.f_r_inv),
                          GradedOperator::identity(rep.dims, 1)))));
    }

    // uniqueness of the invariant form up to scale, at exact rational points
    {
        std::mt19937 rng(static_cast<unsigned>(seed));
        std::uniform_int_distribution<int> pick(2, 9);
        Rational extra;
        do {
            int num = pick(rng), den = pick(rng);
            extra = Rational(num, den);
        } while (extra == 1);
        bool ok = true;
        std::string note;
        for (const Rational& q0 : {Rational(2), Rational(3, 2), Rational(5, 3), extra}) {
            auto nullity = invariant_form_nullity(rep, act, q0);
            note += (note.empty() ? "" : ", ") + std::string("nullity ") +
                    std::to_string(nullity) + " at q = " + rat_to_string(q0);
            if (nullity != 1) ok = false;
        }
        checks.push_back(bool_check("uniqueness",
                                    "the space of invariant bilinear forms has dimension 1", ok,
                                    note));
    }

    out.sort_checks();
    return out;
}

} // namespace spoq
