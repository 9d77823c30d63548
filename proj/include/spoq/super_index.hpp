#pragma once

#include <map>
#include <vector>

#include "spoq/laurent.hpp"

namespace spoq {

/// Dimension parameters of spo(2n|2m): r = n + m pairs, superdimension
/// parameter d = n - m.  n = 0 or m = 0 are admitted on the explicit-formula
/// path; the representation-theoretic constructions require n, m >= 1.
struct SuperDims {
    int n = 0;
    int m = 0;
    int r() const { return n + m; }
    int d() const { return n - m; }
    int dim() const { return 2 * (n + m); } // dim V
    bool operator==(const SuperDims&) const = default;
};

/// Position 0..2r-1 of a signed index in the order (-r,...,-1,1,...,r).
int pos_of(const SuperDims& dims, int i);
/// Signed index at a given position.
int index_at(const SuperDims& dims, int pos);
bool valid_index(const SuperDims& dims, int i);

/// Parity eta_i: 0 for |i| <= n, 1 otherwise.
int eta(const SuperDims& dims, int i);
/// sigma_i = (-1)^{eta_i}.
int sigma(const SuperDims& dims, int i);
/// sigma_{ij} = (-1)^{eta_i eta_j}.
int sigma2(const SuperDims& dims, int i, int j);
/// tau_j = 1 for j < 0, tau_j = -sigma_j for j > 0.
int tau(const SuperDims& dims, int i);

/// The signed index set with parities and sign factors.
struct IndexData {
    SuperDims dims;
    std::vector<int> indices; // (-r,...,-1,1,...,r)

    int pos(int i) const { return pos_of(dims, i); }
    int at(int p) const { return index_at(dims, p); }
    int eta(int i) const { return spoq::eta(dims, i); }
    int sigma(int i) const { return spoq::sigma(dims, i); }
    int sigma2(int i, int j) const { return spoq::sigma2(dims, i, j); }
    int tau(int i) const { return spoq::tau(dims, i); }
};

/// errors: BadDims if r = 0 or a count is negative.
IndexData build_index_data(int n, int m);

/// Sparse I x I matrix with Laurent entries, keyed by signed indices.
struct FormMatrix {
    enum class Kind { C, G, Cq };
    Kind kind;
    SuperDims dims;
    std::map<std::pair<int, int>, LaurentPoly> entries;

    LaurentPoly at(int i, int k) const;
    bool operator==(const FormMatrix&) const = default;
};

/// The invariant-form matrix C^q (antidiagonal; C^{q=1} = C).
FormMatrix cq_matrix(const IndexData& data);
/// The classical form matrix C with C_{i,-i} = tau_{-i}.
FormMatrix c_matrix(const IndexData& data);
/// G = diag(sigma_i).
FormMatrix g_matrix(const IndexData& data);

/// Entry ((C^q)^{-1})_{i,k}; nonzero only for k = -i, always a monomial.
LaurentPoly cq_inverse_entry(const IndexData& data, int i, int k);
/// C^q_{i,-i} as a monomial.
LaurentPoly cq_entry(const IndexData& data, int i);

} // namespace spoq
