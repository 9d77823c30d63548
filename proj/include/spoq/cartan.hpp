#pragma once

#include <map>
#include <vector>

#include "spoq/super_index.hpp"

namespace spoq {

/// Weight as an integer combination of the basis forms eps_j, j in J (the
/// negative indices).  eps_{-i} = -eps_i is folded at construction.
struct WeightVector {
    std::map<int, int> coeff; // key in J = {-r,...,-1}, value nonzero

    void add(int j, int c); // folds positive j to -eps_{-j}
    bool is_zero() const { return coeff.empty(); }
    WeightVector operator+(const WeightVector& o) const;
    WeightVector operator-(const WeightVector& o) const;
    WeightVector scaled(int c) const;
    bool operator==(const WeightVector&) const = default;
    bool operator<(const WeightVector& o) const { return coeff < o.coeff; }
};

/// Weight of the basis vector e_i.
WeightVector weight_of_index(const SuperDims& dims, int i);

/// Bilinear form (eps_i | eps_j) = sigma_i delta_{ij} extended to weights.
long weight_pair(const SuperDims& dims, const WeightVector& a, const WeightVector& b);

struct Root {
    WeightVector w;
    int parity; // 0/1
    bool operator==(const Root&) const = default;
};

/// Cartan matrix, symmetrizer and simple roots in the C-type basis with the
/// single odd simple root at -n-1.
struct CartanData {
    SuperDims dims;
    std::vector<int> J;                    // (-r,...,-1)
    std::map<std::pair<int, int>, int> A;  // Cartan matrix over J x J
    std::map<int, int> D;                  // symmetrizer diag d_j
    std::map<int, WeightVector> simple_roots;
    int odd_root_index = 0;                // -n-1

    int a(int i, int j) const;
    int d(int j) const { return D.at(j); }
};

/// errors: BadDims unless n >= 1 and m >= 1.  The matrix is computed from
/// alpha_j(H_i) and cross-checked against the tridiagonal closed form; a
/// mismatch throws std::logic_error.
CartanData cartan_data(int n, int m);

/// 2rho = (sum of even positive roots) - (sum of odd positive roots).
WeightVector two_rho(int n, int m);

/// Root system: eps_i - eps_j for j != i with j < -i, or j = -i even.
std::vector<Root> root_system(int n, int m);

} // namespace spoq
