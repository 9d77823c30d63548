#include "spoq/vector_rep.hpp"

#include "spoq/errors.hpp"

namespace spoq {

const GradedOperator& VectorRep::gen(GenKind kind, int j) const {
    const std::map<int, GradedOperator>* table = nullptr;
    switch (kind) {
        case GenKind::E: table = &E; break;
        case GenKind::F: table = &F; break;
        case GenKind::K: table = &K; break;
        case GenKind::Kinv: table = &Kinv; break;
    }
    auto it = table->find(j);
    if (it == table->end()) throw UnknownGenerator("no generator with index " + std::to_string(j));
    return it->second;
}

WeightVector VectorRep::gen_weight(GenKind kind, int j) const {
    switch (kind) {
        case GenKind::E: return cartan.simple_roots.at(j);
        case GenKind::F: return cartan.simple_roots.at(j).scaled(-1);
        default: return {};
    }
}

int VectorRep::gen_parity(GenKind kind, int j) const {
    if (kind == GenKind::K || kind == GenKind::Kinv) return 0;
    return j == odd_j ? 1 : 0;
}

LaurentPoly VectorRep::q_i(int j) const { return LaurentPoly::q_pow(cartan.d(j)); }

VectorRep build_vector_rep(int n, int m) {
    if (n < 1 || m < 1) throw BadDims("vector representation needs n >= 1 and m >= 1");
    VectorRep rep;
    rep.dims = SuperDims{n, m};
    rep.index = build_index_data(n, m);
    rep.cartan = cartan_data(n, m);
    rep.odd_j = -n - 1;
    const SuperDims& dims = rep.dims;

    for (int j : rep.cartan.J) {
        GradedOperator e(dims, 1), f(dims, 1);
        int deg = (j == rep.odd_j) ? 1 : 0;
        e.degree = deg;
        f.degree = deg;
        if (j == -1) {
            int r1[] = {-1}, c1[] = {1};
            e.add_entry(r1, c1, RationalFunc::one());
            f.add_entry(c1, r1, RationalFunc::one());
        } else {
            // E_j = E_{j,j+1} - sigma_j sigma_{j,j+1} E_{-j-1,-j}
            int er1[] = {j}, ec1[] = {j + 1};
            e.add_entry(er1, ec1, RationalFunc::one());
            int se = -sigma(dims, j) * sigma2(dims, j, j + 1);
            int er2[] = {-j - 1}, ec2[] = {-j};
            e.add_entry(er2, ec2, RationalFunc(LaurentPoly::from_int(se)));
            // F_j = E_{j+1,j} - sigma_{j+1} sigma_{j+1,j} E_{-j,-j-1}
            f.add_entry(ec1, er1, RationalFunc::one());
            int sf = -sigma(dims, j + 1) * sigma2(dims, j + 1, j);
            f.add_entry(ec2, er2, RationalFunc(LaurentPoly::from_int(sf)));
        }
        rep.E.emplace(j, std::move(e));
        rep.F.emplace(j, std::move(f));

        GradedOperator k(dims, 1), kinv(dims, 1);
        k.degree = 0;
        kinv.degree = 0;
        for (int i : rep.index.indices) {
            long exp = weight_pair(dims, rep.cartan.simple_roots.at(j), weight_of_index(dims, i));
            int idx[] = {i};
            k.add_entry(idx, idx, RationalFunc(LaurentPoly::q_pow(exp)));
            kinv.add_entry(idx, idx, RationalFunc(LaurentPoly::q_pow(-exp)));
        }
        rep.K.emplace(j, std::move(k));
        rep.Kinv.emplace(j, std::move(kinv));
    }
    return rep;
}

GradedOperator q_supercommutator(const GradedOperator& x, const GradedOperator& y,
                                 const RationalFunc& p) {
    if (!x.degree || !y.degree)
        throw MissingDegree("q-supercommutator needs declared degrees");
    GradedOperator yx = op_compose(y, x);
    RationalFunc c = p;
    if (*x.degree == 1 && *y.degree == 1) c = -c;
    return op_sub(op_compose(x, y), op_scale(yx, c));
}

Rational counit(GenKind kind) {
    return (kind == GenKind::K || kind == GenKind::Kinv) ? Rational(1) : Rational(0);
}

GradedOperator antipode_image(const VectorRep& rep, GenKind kind, int j) {
    switch (kind) {
        case GenKind::K: return rep.gen(GenKind::Kinv, j);
        case GenKind::Kinv: return rep.gen(GenKind::K, j);
        case GenKind::E:
            return op_negate(op_compose(rep.gen(GenKind::Kinv, j), rep.gen(GenKind::E, j)));
        case GenKind::F:
            return op_negate(op_compose(rep.gen(GenKind::F, j), rep.gen(GenKind::K, j)));
    }
    throw UnknownGenerator("unknown generator kind");
}

FormMaps bq_maps(const VectorRep& rep) {
    FormMaps maps;
    maps.bq = cq_matrix(rep.index);
    const SuperDims& dims = rep.dims;
    GradedOperator fl(dims, 1), fr(dims, 1), fli(dims, 1), fri(dims, 1);
    fl.degree = fr.degree = fli.degree = fri.degree = 0;
    for (int j : rep.index.indices) {
        // f_l(e_j) = C^q_{j,-j} e'_{-j};  f_r(e_j) = sigma_{j,-j} C^q_{-j,j} e'_{-j}
        int row[] = {-j}, col[] = {j};
        RationalFunc vl{maps.bq.at(j, -j)};
        RationalFunc vr{maps.bq.at(-j, j).scaled(Rational(rep.index.sigma2(j, -j)))};
        fl.add_entry(row, col, vl);
        fr.add_entry(row, col, vr);
        fli.add_entry(col, row, vl.inverse());
        fri.add_entry(col, row, vr.inverse());
    }
    maps.f_l = std::move(fl);
    maps.f_r = std::move(fr);
    maps.f_l_inv = std::move(fli);
    maps.f_r_inv = std::move(fri);
    return maps;
}

RationalFunc btilde(const FormMatrix& bq, const TensorVector& u) {
    if (u.arity != 2) throw ArityMismatch("btilde is a form on V ox V");
    RationalFunc acc;
    for (const auto& [pos, v] : u.coeff) {
        auto idx = decode_tuple(u.dims, 2, pos);
        acc += v * RationalFunc(bq.at(idx[0], idx[1]));
    }
    return acc;
}

} // namespace spoq
