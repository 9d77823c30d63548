#include "spoq/tensor_module.hpp"

#include <stdexcept>

#include "spoq/errors.hpp"

namespace spoq {

const GradedOperator& LiftedAction::gen(GenKind kind, int j) const {
    switch (kind) {
        case GenKind::E: return E.at(j);
        case GenKind::F: return F.at(j);
        case GenKind::K: return K.at(j);
        case GenKind::Kinv: return Kinv.at(j);
    }
    throw UnknownGenerator("unknown generator kind");
}

GradedOperator lift_action(const VectorRep& rep, GenKind kind, int j, int k) {
    if (k != 2 && k != 3) throw ArityMismatch("lifted action is provided for arity 2 and 3");
    const auto& e = rep.gen(GenKind::E, j);
    const auto& f = rep.gen(GenKind::F, j);
    const auto& kk = rep.gen(GenKind::K, j);
    const auto& ki = rep.gen(GenKind::Kinv, j);
    auto id1 = GradedOperator::identity(rep.dims, 1);

    auto lift2 = [&](GenKind kd) -> GradedOperator {
        switch (kd) {
            case GenKind::E: // E ox 1 + K ox-bar E
                return op_add(op_tensor(e, id1), op_tensor(kk, e, true));
            case GenKind::F: // F ox K^-1 + 1 ox-bar F
                return op_add(op_tensor(f, ki), op_tensor(id1, f, true));
            case GenKind::K: return op_tensor(kk, kk);
            case GenKind::Kinv: return op_tensor(ki, ki);
        }
        throw UnknownGenerator("unknown generator kind");
    };

    if (k == 2) return lift2(kind);

    // (Delta ox id) Delta, via the arity-2 lift in the first two slots.
    switch (kind) {
        case GenKind::E: return op_add(op_tensor(lift2(GenKind::E), id1),
                                       op_tensor(lift2(GenKind::K), e, true));
        case GenKind::F: return op_add(op_tensor(lift2(GenKind::F), ki),
                                       op_tensor(GradedOperator::identity(rep.dims, 2), f, true));
        case GenKind::K: return op_tensor(lift2(GenKind::K), kk);
        case GenKind::Kinv: return op_tensor(lift2(GenKind::Kinv), ki);
    }
    throw UnknownGenerator("unknown generator kind");
}

LiftedAction build_lifted_action(const VectorRep& rep, int k) {
    LiftedAction act;
    act.k = k;
    for (int j : rep.cartan.J) {
        act.E.emplace(j, lift_action(rep, GenKind::E, j, k));
        act.F.emplace(j, lift_action(rep, GenKind::F, j, k));
        act.K.emplace(j, lift_action(rep, GenKind::K, j, k));
        act.Kinv.emplace(j, lift_action(rep, GenKind::Kinv, j, k));
    }
    return act;
}

namespace {

TensorVector invariant_element_impl(const IndexData& index) {
    TensorVector a{index.dims, 2, {}};
    for (int i : index.indices) {
        int idx[] = {i, -i};
        a.add(idx, RationalFunc(cq_inverse_entry(index, i, -i)));
    }
    return a;
}

} // namespace

TensorVector invariant_element(const VectorRep& rep) { return invariant_element_impl(rep.index); }

int SubmoduleBases::s_index(const std::string& label) const {
    for (std::size_t k = 0; k < s_labels.size(); ++k)
        if (s_labels[k] == label) return static_cast<int>(k);
    return -1;
}

int SubmoduleBases::a_index(const std::string& label) const {
    for (std::size_t k = 0; k < a_labels.size(); ++k)
        if (a_labels[k] == label) return static_cast<int>(k);
    return -1;
}

SubmoduleBases standard_bases(const VectorRep& rep) {
    SubmoduleBases out;
    const SuperDims& dims = rep.dims;
    const auto& index = rep.index;
    const int r = dims.r();
    auto q = LaurentPoly::q();
    auto qinv = LaurentPoly::q_pow(-1);

    auto pair_label = [](const char* fam, int i, int j) {
        return std::string(fam) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };

    // s_{ij} and a_{ij} for i < j, i != -j; squares split by parity.
    for (int i : index.indices) {
        for (int j : index.indices) {
            if (i > j || i == -j) continue;
            if (i == j) {
                TensorVector sq{dims, 2, {}};
                int idx[] = {i, i};
                sq.add(idx, RationalFunc::one());
                if (index.eta(i) == 0) {
                    out.s_family.push_back(sq);
                    out.s_labels.push_back(pair_label("s", i, i));
                } else {
                    out.a_family.push_back(sq);
                    out.a_labels.push_back(pair_label("a", i, i));
                }
                continue;
            }
            int sij = index.sigma2(i, j);
            int ij[] = {i, j}, ji[] = {j, i};
            TensorVector s{dims, 2, {}};
            s.add(ij, RationalFunc::one());
            s.add(ji, RationalFunc(qinv.scaled(Rational(sij))));
            out.s_family.push_back(std::move(s));
            out.s_labels.push_back(pair_label("s", i, j));
            TensorVector a{dims, 2, {}};
            a.add(ij, RationalFunc::one());
            a.add(ji, RationalFunc(q.scaled(Rational(-sij))));
            out.a_family.push_back(std::move(a));
            out.a_labels.push_back(pair_label("a", i, j));
        }
    }

    // zero-weight members: s_1, then s_j / a_j via the u_j, v_j blocks
    {
        TensorVector s1{dims, 2, {}};
        int m11[] = {-1, 1}, p11[] = {1, -1};
        s1.add(m11, RationalFunc::one());
        s1.add(p11, RationalFunc(LaurentPoly::q_pow(-2)));
        out.s_family.push_back(std::move(s1));
        out.s_labels.push_back("s0(1)");
    }
    for (int j = 2; j <= r; ++j) {
        int sj1 = index.sigma(j - 1), sj = index.sigma(j);
        TensorVector u{dims, 2, {}}, v{dims, 2, {}};
        int top[] = {-j + 1, j - 1}, topr[] = {j - 1, -j + 1};
        int bot[] = {-j, j}, botr[] = {j, -j};
        u.add(top, RationalFunc(LaurentPoly::q_pow(-sj1)));
        u.add(bot, RationalFunc(LaurentPoly::from_int(-sj1 * sj)));
        v.add(topr, RationalFunc(LaurentPoly::from_int(sj1)));
        v.add(botr, RationalFunc(LaurentPoly::q_pow(-sj).scaled(Rational(-sj1))));
        TensorVector s = u + v.scaled(RationalFunc(qinv));
        TensorVector a = u - v.scaled(RationalFunc(q));
        out.u.push_back(std::move(u));
        out.v.push_back(std::move(v));
        out.s_family.push_back(std::move(s));
        out.s_labels.push_back("s0(" + std::to_string(j) + ")");
        out.a_family.push_back(std::move(a));
        out.a_labels.push_back("a0(" + std::to_string(j) + ")");
    }

    // t = e_{-1} ox e_1 - q^2 e_1 ox e_{-1} + (q - q^-1) sum_{i>=2} ((C^q)^{-1})_{i,-i} e_i ox e_{-i}
    {
        TensorVector t{dims, 2, {}};
        int m11[] = {-1, 1}, p11[] = {1, -1};
        t.add(m11, RationalFunc::one());
        t.add(p11, RationalFunc(LaurentPoly::q_pow(2).scaled(Rational(-1))));
        LaurentPoly qmqi = q - qinv;
        for (int i = 2; i <= r; ++i) {
            int idx[] = {i, -i};
            t.add(idx, RationalFunc(qmqi * cq_inverse_entry(index, i, -i)));
        }
        out.t = std::move(t);
    }

    out.invariant = invariant_element(rep);
    return out;
}

std::vector<TensorVector> solve_weight_zero_complement(const VectorRep& rep) {
    const int r = rep.dims.r();
    const auto& index = rep.index;
    std::vector<TensorVector> solutions;
    for (int free = 1; free <= r; ++free) {
        // coefficients g_i of sum_i g_i e_i ox e_{-i}
        std::map<int, RationalFunc> g;
        for (int j = 1; j <= r; ++j)
            g[-j] = (j == free) ? RationalFunc::one() : RationalFunc();
        // g_1 = -q^2 g_{-1}
        g[1] = g[-1] * RationalFunc(LaurentPoly::q_pow(2).scaled(Rational(-1)));
        // three-term recursion upward:
        // sigma_j g_{-j} = q g_{j+1} - q q^{sigma_j} g_j + sigma_{j+1} q^{sigma_{j+1}} g_{-j-1}
        for (int j = -2; j >= -r; --j) {
            auto qq = RationalFunc(LaurentPoly::q());
            RationalFunc rhs = qq * g[j + 1] -
                               RationalFunc(LaurentPoly::q_pow(1 + index.sigma(j))) * g[j] +
                               RationalFunc(LaurentPoly::q_pow(index.sigma(j + 1))
                                                .scaled(Rational(index.sigma(j + 1)))) *
                                   g[-j - 1];
            g[-j] = rhs.is_zero() ? rhs
                                  : rhs * RationalFunc(LaurentPoly::from_int(index.sigma(j)));
        }
        TensorVector sol{rep.dims, 2, {}};
        for (const auto& [i, c] : g) {
            int idx[] = {i, -i};
            sol.add(idx, c);
        }
        solutions.push_back(std::move(sol));
    }
    return solutions;
}

GradedOperator operator_K(const IndexData& index) {
    auto cq = cq_matrix(index);
    auto a = invariant_element_impl(index);
    GradedOperator k{index.dims, 2};
    k.degree = 0;
    for (int j : index.indices) {
        int col[] = {j, -j};
        LinIdx c = encode_tuple(index.dims, col);
        RationalFunc w{cq.at(j, -j)};
        for (const auto& [row, v] : a.coeff) k.add_entry(row, c, v * w);
    }
    return k;
}

GradedOperator operator_K(const VectorRep& rep) { return operator_K(rep.index); }

GradedOperator projector_Ps(const SuperDims& dims, const GradedOperator& rhat) {
    const long dd = 2 * dims.d() + 1;
    auto id = GradedOperator::identity(dims, 2);
    auto f1 = op_add(rhat, op_scale(id, RationalFunc(LaurentPoly::q_pow(-1))));
    auto f2 = op_add(rhat, op_scale(id, RationalFunc(LaurentPoly::q_pow(-dd))));
    LaurentPoly denom = (LaurentPoly::q() + LaurentPoly::q_pow(-1)) *
                        (LaurentPoly::q() + LaurentPoly::q_pow(-dd));
    return op_scale(op_compose(f1, f2), RationalFunc(LaurentPoly::one(), denom));
}

WeightVector TensorSquareBasis::weight_of(LinIdx pos) const {
    auto idx = decode_tuple(dims_, 2, pos);
    return weight_of_index(dims_, idx[0]) + weight_of_index(dims_, idx[1]);
}

TensorSquareBasis::TensorSquareBasis(const VectorRep& rep, const SubmoduleBases& bases)
    : dims_(rep.dims), s_count_(bases.s_family.size()), a_count_(bases.a_family.size()) {
    std::vector<const TensorVector*> members;
    for (const auto& x : bases.s_family) members.push_back(&x);
    for (const auto& x : bases.a_family) members.push_back(&x);
    members.push_back(&bases.t);

    // group basis tensor positions by weight
    const std::size_t total = space_dim(dims_, 2);
    for (std::size_t p = 0; p < total; ++p) {
        auto w = weight_of(static_cast<LinIdx>(p));
        blocks_[w].rows.push_back(static_cast<LinIdx>(p));
    }
    // assign members to their weight block (members are weight-homogeneous)
    for (std::size_t k = 0; k < members.size(); ++k) {
        auto w = weight_of(members[k]->coeff.begin()->first);
        blocks_.at(w).members.push_back(k);
    }
    // factor each block: columns are member coordinates on the block rows
    for (auto& [w, blk] : blocks_) {
        const std::size_t nb = blk.rows.size();
        if (blk.members.size() != nb)
            throw std::logic_error("family members do not fill a weight block");
        DenseMat<RationalFunc> mat(nb, nb);
        for (std::size_t c = 0; c < nb; ++c) {
            const TensorVector& v = *members[blk.members[c]];
            for (std::size_t rr = 0; rr < nb; ++rr) {
                auto it = v.coeff.find(blk.rows[rr]);
                if (it != v.coeff.end()) mat.at(rr, c) = it->second;
            }
        }
        auto inv = invert(mat);
        if (!inv) throw std::logic_error("weight block of the family basis is singular");
        blk.forward = std::move(mat);
        blk.inverse = std::move(*inv);
    }
}

TensorSquareBasis::Coords TensorSquareBasis::decompose(const TensorVector& x) const {
    Coords out;
    out.s.assign(s_count_, RationalFunc());
    out.a.assign(a_count_, RationalFunc());
    // split the support of x into weight blocks and solve each one
    std::map<WeightVector, int> touched;
    for (const auto& [p, v] : x.coeff) touched[weight_of(p)] = 1;
    for (const auto& [w, unused] : touched) {
        (void)unused;
        const Block& blk = blocks_.at(w);
        const std::size_t nb = blk.rows.size();
        std::vector<RationalFunc> rhs(nb);
        for (std::size_t rr = 0; rr < nb; ++rr) {
            auto it = x.coeff.find(blk.rows[rr]);
            if (it != x.coeff.end()) rhs[rr] = it->second;
        }
        for (std::size_t c = 0; c < nb; ++c) {
            RationalFunc acc;
            for (std::size_t rr = 0; rr < nb; ++rr) acc += blk.inverse.at(c, rr) * rhs[rr];
            if (acc.is_zero()) continue;
            std::size_t member = blk.members[c];
            if (member < s_count_)
                out.s[member] = acc;
            else if (member < s_count_ + a_count_)
                out.a[member - s_count_] = acc;
            else
                out.t = acc;
        }
    }
    return out;
}

GradedOperator TensorSquareBasis::symmetric_projector() const {
    // Blockwise: P_s = M diag(s-indicator) M^{-1} where the columns of M hold
    // the member coordinates on the block rows.
    GradedOperator out{dims_, 2};
    out.degree = 0;
    for (const auto& [w, blk] : blocks_) {
        (void)w;
        const std::size_t nb = blk.rows.size();
        for (std::size_t j = 0; j < nb; ++j) {        // ambient column rows[j]
            for (std::size_t rr = 0; rr < nb; ++rr) { // ambient row rows[rr]
                RationalFunc acc;
                for (std::size_t c = 0; c < nb; ++c) {
                    if (blk.members[c] >= s_count_) continue;
                    acc += blk.forward.at(rr, c) * blk.inverse.at(c, j);
                }
                if (!acc.is_zero()) out.add_entry(blk.rows[rr], blk.rows[j], acc);
            }
        }
    }
    return out;
}

} // namespace spoq
