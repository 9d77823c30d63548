#include "spoq/cartan.hpp"

#include <stdexcept>

#include "spoq/errors.hpp"

namespace spoq {

void WeightVector::add(int j, int c) {
    if (c == 0) return;
    if (j > 0) {
        j = -j;
        c = -c;
    }
    auto [it, inserted] = coeff.emplace(j, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeff.erase(it);
    }
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
    WeightVector w = *this;
    for (const auto& [j, c] : o.coeff) w.add(j, c);
    return w;
}

WeightVector WeightVector::operator-(const WeightVector& o) const {
    WeightVector w = *this;
    for (const auto& [j, c] : o.coeff) w.add(j, -c);
    return w;
}

WeightVector WeightVector::scaled(int c) const {
    WeightVector w;
    for (const auto& [j, v] : coeff) w.add(j, v * c);
    return w;
}

WeightVector weight_of_index(const SuperDims& dims, int i) {
    (void)dims;
    WeightVector w;
    w.add(i, 1);
    return w;
}

long weight_pair(const SuperDims& dims, const WeightVector& a, const WeightVector& b) {
    long acc = 0;
    for (const auto& [j, c] : a.coeff) {
        auto it = b.coeff.find(j);
        if (it != b.coeff.end()) acc += static_cast<long>(sigma(dims, j)) * c * it->second;
    }
    return acc;
}

int CartanData::a(int i, int j) const {
    auto it = A.find({i, j});
    return it == A.end() ? 0 : it->second;
}

namespace {

// eps_k(H_i) for k, i in J, with H_i = X_{ii} - sigma_i sigma_{i+1} X_{i+1,i+1}
// for i <= -2 and H_{-1} = X_{-1,-1}.
int eps_of_h(const SuperDims& dims, int k, int i) {
    if (i == -1) return k == -1 ? 1 : 0;
    int v = 0;
    if (k == i) v += 1;
    if (k == i + 1) v -= sigma(dims, i) * sigma(dims, i + 1);
    return v;
}

} // namespace

CartanData cartan_data(int n, int m) {
    if (n < 1 || m < 1) throw BadDims("cartan data needs n >= 1 and m >= 1");
    CartanData cd;
    cd.dims = SuperDims{n, m};
    const int r = n + m;
    cd.odd_root_index = -n - 1;
    for (int j = -r; j <= -1; ++j) cd.J.push_back(j);

    for (int j : cd.J) {
        WeightVector alpha;
        if (j <= -2) {
            alpha.add(j, 1);
            alpha.add(j + 1, -1);
        } else {
            alpha.add(-1, 2);
        }
        cd.simple_roots.emplace(j, std::move(alpha));
    }

    // D = diag(-1 x m, 1 x (n-1), 2).
    for (int j : cd.J) {
        if (j == -1)
            cd.D[j] = 2;
        else if (j <= -n - 1)
            cd.D[j] = -1;
        else
            cd.D[j] = 1;
    }

    // a_{ij} = alpha_j(H_i), computed from the generator data.
    for (int i : cd.J) {
        for (int j : cd.J) {
            int v = 0;
            for (const auto& [k, c] : cd.simple_roots.at(j).coeff)
                v += c * eps_of_h(cd.dims, k, i);
            if (v != 0) cd.A[{i, j}] = v;
        }
    }

    // Cross-check against the tridiagonal closed form.
    for (int i : cd.J) {
        for (int j : cd.J) {
            int expected = 0;
            if (i == j)
                expected = (i == cd.odd_root_index) ? 0 : 2;
            else if (j == i - 1)
                expected = -1;
            else if (j == i + 1)
                expected = -sigma(cd.dims, i) * sigma(cd.dims, i + 1) * (j == -1 ? 2 : 1);
            if (expected != cd.a(i, j))
                throw std::logic_error("cartan matrix transcription mismatch");
        }
    }
    return cd;
}

WeightVector two_rho(int n, int m) {
    if (n < 1 || m < 1) throw BadDims("two_rho needs n >= 1 and m >= 1");
    const int r = n + m;
    WeightVector w;
    for (int i = -r; i <= -n - 1; ++i) w.add(i, -2 * (i + 2 * n + 1));
    for (int i = -n; i <= -1; ++i) w.add(i, -2 * i);
    return w;
}

std::vector<Root> root_system(int n, int m) {
    if (n < 1 || m < 1) throw BadDims("root system needs n >= 1 and m >= 1");
    SuperDims dims{n, m};
    IndexData data = build_index_data(n, m);
    std::vector<Root> roots;
    for (int i : data.indices) {
        for (int j : data.indices) {
            if (j == i) continue;
            bool in = (j < -i) || (j == -i && eta(dims, i) == 0);
            if (!in) continue;
            WeightVector w;
            w.add(i, 1);
            w.add(j, -1);
            roots.push_back({std::move(w), (eta(dims, i) + eta(dims, j)) % 2});
        }
    }
    return roots;
}

} // namespace spoq
