#include "spoq/linalg.hpp"

namespace spoq {

void RatSpan::reduce(std::vector<Rational>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational& c = v[pivots_[k]];
        if (c == 0) continue;
        Rational f = c; // rows are pivot-normalized to 1
        for (std::size_t j = 0; j < ambient_; ++j)
            if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
    }
}

bool RatSpan::insert(std::vector<Rational> v) {
    reduce(v);
    std::size_t piv = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (v[j] != 0) {
            piv = j;
            break;
        }
    }
    if (piv == ambient_) return false;
    Rational lead = v[piv];
    for (auto& x : v) x /= lead;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool RatSpan::contains(std::vector<Rational> v) const {
    reduce(v);
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

DenseMat<Rational> specialize(const GradedOperator& f, const Rational& q0) {
    const std::size_t d = space_dim(f.dims, f.arity);
    DenseMat<Rational> m(d, d);
    for (const auto& [rc, v] : f.entries) m.at(rc.first, rc.second) = v.eval(q0);
    return m;
}

std::vector<Rational> specialize(const TensorVector& x, const Rational& q0) {
    std::vector<Rational> v(space_dim(x.dims, x.arity), Rational(0));
    for (const auto& [p, c] : x.coeff) v[p] = c.eval(q0);
    return v;
}

} // namespace spoq
