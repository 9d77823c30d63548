#include "spoq/super_index.hpp"

#include <cstdlib>

#include "spoq/errors.hpp"

namespace spoq {

int pos_of(const SuperDims& dims, int i) {
    const int r = dims.r();
    if (i < 0) return i + r;
    return i + r - 1;
}

int index_at(const SuperDims& dims, int pos) {
    const int r = dims.r();
    return pos < r ? pos - r : pos - r + 1;
}

bool valid_index(const SuperDims& dims, int i) {
    return i != 0 && std::abs(i) <= dims.r();
}

int eta(const SuperDims& dims, int i) { return std::abs(i) <= dims.n ? 0 : 1; }

int sigma(const SuperDims& dims, int i) { return eta(dims, i) ? -1 : 1; }

int sigma2(const SuperDims& dims, int i, int j) {
    return (eta(dims, i) & eta(dims, j)) ? -1 : 1;
}

int tau(const SuperDims& dims, int i) { return i < 0 ? 1 : -sigma(dims, i); }

IndexData build_index_data(int n, int m) {
    if (n < 0 || m < 0 || n + m < 1) throw BadDims("need n, m >= 0 and r = n + m >= 1");
    IndexData data;
    data.dims = SuperDims{n, m};
    const int r = n + m;
    data.indices.reserve(2 * static_cast<std::size_t>(r));
    for (int i = -r; i <= r; ++i)
        if (i != 0) data.indices.push_back(i);
    return data;
}

LaurentPoly FormMatrix::at(int i, int k) const {
    auto it = entries.find({i, k});
    return it == entries.end() ? LaurentPoly() : it->second;
}

LaurentPoly cq_entry(const IndexData& data, int i) {
    const int n = data.dims.n;
    // C^q_{i,-i} by index range.
    if (i < 0) {
        if (-i <= n) return LaurentPoly::monomial(i, Rational(-1)); // -q^i
        return LaurentPoly::q_pow(-i - 2 * n - 2);
    }
    if (i <= n) return LaurentPoly::q_pow(i);
    return LaurentPoly::q_pow(2 * n - i);
}

FormMatrix cq_matrix(const IndexData& data) {
    FormMatrix f{FormMatrix::Kind::Cq, data.dims, {}};
    for (int i : data.indices) f.entries[{i, -i}] = cq_entry(data, i);
    return f;
}

FormMatrix c_matrix(const IndexData& data) {
    FormMatrix f{FormMatrix::Kind::C, data.dims, {}};
    // C_{ij} = b(e_i, e_j) = tau_j delta_{i,-j}.
    for (int i : data.indices)
        f.entries[{i, -i}] = LaurentPoly::from_int(data.tau(-i));
    return f;
}

FormMatrix g_matrix(const IndexData& data) {
    FormMatrix f{FormMatrix::Kind::G, data.dims, {}};
    for (int i : data.indices) f.entries[{i, i}] = LaurentPoly::from_int(data.sigma(i));
    return f;
}

LaurentPoly cq_inverse_entry(const IndexData& data, int i, int k) {
    if (k != -i) return LaurentPoly();
    // ((C^q)^{-1})_{i,-i} = 1 / C^q_{-i,i}; the entry is a signed monomial.
    LaurentPoly e = cq_entry(data, -i);
    const auto& [exp, coeff] = *e.terms().begin();
    return LaurentPoly::monomial(-exp, 1 / coeff);
}

} // namespace spoq
