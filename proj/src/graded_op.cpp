#include "spoq/graded_op.hpp"

#include <unordered_map>

#include "spoq/errors.hpp"

namespace spoq {

LinIdx encode_tuple(const SuperDims& dims, std::span<const int> idx) {
    const unsigned base = static_cast<unsigned>(dims.dim());
    LinIdx lin = 0;
    for (int i : idx) lin = lin * base + static_cast<LinIdx>(pos_of(dims, i));
    return lin;
}

std::vector<int> decode_tuple(const SuperDims& dims, int arity, LinIdx lin) {
    const unsigned base = static_cast<unsigned>(dims.dim());
    std::vector<int> idx(static_cast<std::size_t>(arity));
    for (int t = arity - 1; t >= 0; --t) {
        idx[static_cast<std::size_t>(t)] = index_at(dims, static_cast<int>(lin % base));
        lin /= base;
    }
    return idx;
}

int tuple_parity(const SuperDims& dims, int arity, LinIdx lin) {
    const unsigned base = static_cast<unsigned>(dims.dim());
    int p = 0;
    for (int t = 0; t < arity; ++t) {
        p += eta(dims, index_at(dims, static_cast<int>(lin % base)));
        lin /= base;
    }
    return p % 2;
}

std::size_t space_dim(const SuperDims& dims, int arity) {
    std::size_t d = 1;
    for (int t = 0; t < arity; ++t) d *= static_cast<std::size_t>(dims.dim());
    return d;
}

void TensorVector::add(LinIdx pos, const RationalFunc& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = coeff.emplace(pos, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) coeff.erase(it);
    }
}

void TensorVector::add(std::span<const int> idx, const RationalFunc& v) {
    add(encode_tuple(dims, idx), v);
}

RationalFunc TensorVector::at(std::span<const int> idx) const {
    auto it = coeff.find(encode_tuple(dims, idx));
    return it == coeff.end() ? RationalFunc() : it->second;
}

TensorVector TensorVector::operator+(const TensorVector& o) const {
    TensorVector out = *this;
    for (const auto& [p, v] : o.coeff) out.add(p, v);
    return out;
}

TensorVector TensorVector::operator-(const TensorVector& o) const {
    TensorVector out = *this;
    for (const auto& [p, v] : o.coeff) out.add(p, -v);
    return out;
}

TensorVector TensorVector::scaled(const RationalFunc& c) const {
    TensorVector out{dims, arity, {}};
    if (c.is_zero()) return out;
    for (const auto& [p, v] : coeff) out.coeff.emplace(p, v * c);
    return out;
}

GradedOperator GradedOperator::matrix_unit(const SuperDims& dims, int i, int j) {
    GradedOperator f(dims, 1);
    f.degree = (eta(dims, i) + eta(dims, j)) % 2;
    int row[] = {i}, col[] = {j};
    f.add_entry(row, col, RationalFunc::one());
    return f;
}

GradedOperator GradedOperator::identity(const SuperDims& dims, int k) {
    GradedOperator f(dims, k);
    f.degree = 0;
    const std::size_t d = space_dim(dims, k);
    for (std::size_t p = 0; p < d; ++p)
        f.entries.emplace(std::make_pair(static_cast<LinIdx>(p), static_cast<LinIdx>(p)),
                          RationalFunc::one());
    return f;
}

void GradedOperator::add_entry(LinIdx row, LinIdx col, const RationalFunc& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = entries.emplace(std::make_pair(row, col), v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) entries.erase(it);
    }
}

void GradedOperator::add_entry(std::span<const int> row, std::span<const int> col,
                               const RationalFunc& v) {
    add_entry(encode_tuple(dims, row), encode_tuple(dims, col), v);
}

RationalFunc GradedOperator::at(std::span<const int> row, std::span<const int> col) const {
    return at_lin(encode_tuple(dims, row), encode_tuple(dims, col));
}

RationalFunc GradedOperator::at_lin(LinIdx row, LinIdx col) const {
    auto it = entries.find({row, col});
    return it == entries.end() ? RationalFunc() : it->second;
}

bool GradedOperator::is_laurent() const {
    for (const auto& [rc, v] : entries)
        if (!v.is_laurent()) return false;
    return true;
}

GradedOperator GradedOperator::with_degree(int deg) const {
    GradedOperator f = *this;
    f.degree = deg;
    return f;
}

namespace {

void require_same_shape(const GradedOperator& f, const GradedOperator& g) {
    if (!(f.dims == g.dims) || f.arity != g.arity)
        throw ArityMismatch("operator shapes differ");
}

std::optional<int> sum_degree(const GradedOperator& f, const GradedOperator& g) {
    if (f.degree && g.degree) return (*f.degree + *g.degree) % 2;
    return std::nullopt;
}

} // namespace

GradedOperator op_add(const GradedOperator& f, const GradedOperator& g) {
    require_same_shape(f, g);
    GradedOperator out = f;
    out.degree = (f.degree && g.degree && *f.degree == *g.degree) ? f.degree : std::nullopt;
    for (const auto& [rc, v] : g.entries) out.add_entry(rc.first, rc.second, v);
    return out;
}

GradedOperator op_sub(const GradedOperator& f, const GradedOperator& g) {
    return op_add(f, op_negate(g));
}

GradedOperator op_negate(const GradedOperator& f) {
    GradedOperator out = f;
    for (auto& [rc, v] : out.entries) v = -v;
    return out;
}

GradedOperator op_scale(const GradedOperator& f, const RationalFunc& c) {
    GradedOperator out(f.dims, f.arity);
    out.degree = f.degree;
    if (c.is_zero()) return out;
    for (const auto& [rc, v] : f.entries) out.entries.emplace(rc, v * c);
    return out;
}

GradedOperator op_compose(const GradedOperator& f, const GradedOperator& g) {
    require_same_shape(f, g);
    // Group the entries of f by column so each g-entry meets only matching rows.
    std::unordered_map<LinIdx, std::vector<std::pair<LinIdx, const RationalFunc*>>> f_by_col;
    for (const auto& [rc, v] : f.entries) f_by_col[rc.second].emplace_back(rc.first, &v);
    GradedOperator out(f.dims, f.arity);
    out.degree = sum_degree(f, g);
    for (const auto& [rc, w] : g.entries) {
        auto it = f_by_col.find(rc.first);
        if (it == f_by_col.end()) continue;
        for (const auto& [row, v] : it->second) out.add_entry(row, rc.second, *v * w);
    }
    return out;
}

GradedOperator op_tensor(const GradedOperator& f, const GradedOperator& g, bool graded) {
    if (!(f.dims == g.dims)) throw ArityMismatch("tensor factors over different dims");
    if (graded && !g.degree)
        throw MissingDegree("graded tensor product needs a declared degree on the second factor");
    const auto stride = static_cast<LinIdx>(space_dim(f.dims, g.arity));
    GradedOperator out(f.dims, f.arity + g.arity);
    out.degree = sum_degree(f, g);
    for (const auto& [rcf, v] : f.entries) {
        int sign = 1;
        if (graded && *g.degree == 1 && tuple_parity(f.dims, f.arity, rcf.second) == 1) sign = -1;
        for (const auto& [rcg, w] : g.entries) {
            RationalFunc val = v * w;
            if (sign < 0) val = -val;
            out.add_entry(rcf.first * stride + rcg.first, rcf.second * stride + rcg.second, val);
        }
    }
    return out;
}

GradedOperator twist(const SuperDims& dims) {
    GradedOperator p(dims, 2);
    p.degree = 0;
    for (int pos_i = 0; pos_i < dims.dim(); ++pos_i) {
        for (int pos_j = 0; pos_j < dims.dim(); ++pos_j) {
            int i = index_at(dims, pos_i), j = index_at(dims, pos_j);
            int row[] = {j, i}, col[] = {i, j};
            p.add_entry(row, col, RationalFunc(LaurentPoly::from_int(sigma2(dims, i, j))));
        }
    }
    return p;
}

GradedOperator supertranspose(const GradedOperator& f) {
    if (f.arity != 1) throw ArityMismatch("supertranspose defined for arity-1 operators");
    if (!f.degree) throw MissingDegree("supertranspose needs a declared degree");
    GradedOperator out(f.dims, 1);
    out.degree = f.degree;
    for (const auto& [rc, v] : f.entries) {
        int k = index_at(f.dims, static_cast<int>(rc.first));
        bool flip = (*f.degree == 1) && eta(f.dims, k) == 1;
        out.add_entry(rc.second, rc.first, flip ? -v : v);
    }
    return out;
}

GradedOperator partial_supertranspose(const GradedOperator& f, int slot) {
    if (f.arity != 2) throw ArityMismatch("partial supertranspose defined for arity-2 operators");
    if (slot != 1 && slot != 2) throw std::invalid_argument("slot must be 1 or 2");
    const auto base = static_cast<LinIdx>(f.dims.dim());
    GradedOperator out(f.dims, 2);
    out.degree = f.degree;
    for (const auto& [rc, v] : f.entries) {
        int i = index_at(f.dims, static_cast<int>(rc.first / base));
        int r = index_at(f.dims, static_cast<int>(rc.first % base));
        int j = index_at(f.dims, static_cast<int>(rc.second / base));
        int s = index_at(f.dims, static_cast<int>(rc.second % base));
        int ei = eta(f.dims, i), ej = eta(f.dims, j), er = eta(f.dims, r), es = eta(f.dims, s);
        if (slot == 1) {
            // (E_ij ox E_rs)^{st1} = (-1)^{(ei+ej)(er+es) + ei ej + ei} E_ji ox E_rs
            int sgn = ((ei + ej) * (er + es) + ei * ej + ei) % 2;
            int row[] = {j, r}, col[] = {i, s};
            out.add_entry(row, col, sgn ? -v : v);
        } else {
            // (E_ij ox E_rs)^{st2} = (-1)^{er es + er} E_ij ox E_sr
            int sgn = (er * es + er) % 2;
            int row[] = {i, s}, col[] = {j, r};
            out.add_entry(row, col, sgn ? -v : v);
        }
    }
    return out;
}

TensorVector apply(const GradedOperator& f, const TensorVector& x) {
    if (!(f.dims == x.dims) || f.arity != x.arity)
        throw ArityMismatch("operator applied to a tensor of different shape");
    TensorVector y{x.dims, x.arity, {}};
    for (const auto& [rc, v] : f.entries) {
        auto it = x.coeff.find(rc.second);
        if (it != x.coeff.end()) y.add(rc.first, v * it->second);
    }
    return y;
}

TensorVector basis_tensor(const SuperDims& dims, std::span<const int> idx) {
    TensorVector t{dims, static_cast<int>(idx.size()), {}};
    t.add(idx, RationalFunc::one());
    return t;
}

bool is_homogeneous(const GradedOperator& f, int deg) {
    for (const auto& [rc, v] : f.entries) {
        int dp = (tuple_parity(f.dims, f.arity, rc.first) -
                  tuple_parity(f.dims, f.arity, rc.second) + 2) % 2;
        if (dp != deg % 2) return false;
    }
    return true;
}

std::vector<std::vector<RationalFunc>> to_dense(const GradedOperator& f) {
    const std::size_t d = space_dim(f.dims, f.arity);
    std::vector<std::vector<RationalFunc>> m(d, std::vector<RationalFunc>(d));
    for (const auto& [rc, v] : f.entries) m[rc.first][rc.second] = v;
    return m;
}

GradedOperator op_bar(const GradedOperator& f) {
    GradedOperator out(f.dims, f.arity);
    out.degree = f.degree;
    for (const auto& [rc, v] : f.entries) out.entries.emplace(rc, v.bar());
    return out;
}

} // namespace spoq
