#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "spoq/rational_func.hpp"
#include "spoq/super_index.hpp"

namespace spoq {

using LinIdx = std::uint32_t;

/// Encodes a k-tuple of signed indices into a row-major linear index.
LinIdx encode_tuple(const SuperDims& dims, std::span<const int> idx);
std::vector<int> decode_tuple(const SuperDims& dims, int arity, LinIdx lin);
/// Sum of eta over the tuple, mod 2.
int tuple_parity(const SuperDims& dims, int arity, LinIdx lin);
/// Number of basis tensors of V^{otimes k}.
std::size_t space_dim(const SuperDims& dims, int arity);

/// Sparse vector in V^{otimes k}; no stored zero coefficients.
struct TensorVector {
    SuperDims dims;
    int arity = 1;
    std::map<LinIdx, RationalFunc> coeff;

    void add(LinIdx pos, const RationalFunc& v);
    void add(std::span<const int> idx, const RationalFunc& v);
    RationalFunc at(std::span<const int> idx) const;
    bool is_zero() const { return coeff.empty(); }
    TensorVector operator+(const TensorVector& o) const;
    TensorVector operator-(const TensorVector& o) const;
    TensorVector scaled(const RationalFunc& c) const;
    bool operator==(const TensorVector&) const = default;
};

/// Sparse operator on V^{otimes k} with optional declared Z2-homogeneity.
/// Entries are keyed by (row, col) linear multi-indices.
class GradedOperator {
public:
    SuperDims dims;
    int arity = 1;
    std::optional<int> degree; // declared parity: 0 even, 1 odd
    std::map<std::pair<LinIdx, LinIdx>, RationalFunc> entries;

    GradedOperator() = default;
    GradedOperator(const SuperDims& d, int k) : dims(d), arity(k) {}

    static GradedOperator matrix_unit(const SuperDims& dims, int i, int j);
    static GradedOperator identity(const SuperDims& dims, int k);

    void add_entry(LinIdx row, LinIdx col, const RationalFunc& v);
    void add_entry(std::span<const int> row, std::span<const int> col, const RationalFunc& v);
    RationalFunc at(std::span<const int> row, std::span<const int> col) const;
    RationalFunc at_lin(LinIdx row, LinIdx col) const;

    bool is_zero() const { return entries.empty(); }
    std::size_t nnz() const { return entries.size(); }
    /// True when every entry is a Laurent polynomial (denominator 1).
    bool is_laurent() const;

    bool operator==(const GradedOperator& o) const {
        return dims == o.dims && arity == o.arity && entries == o.entries;
    }
    bool same_entries(const GradedOperator& o) const {
        return dims == o.dims && arity == o.arity && entries == o.entries;
    }

    GradedOperator with_degree(int deg) const;
};

GradedOperator op_add(const GradedOperator& f, const GradedOperator& g);
GradedOperator op_sub(const GradedOperator& f, const GradedOperator& g);
GradedOperator op_negate(const GradedOperator& f);
GradedOperator op_scale(const GradedOperator& f, const RationalFunc& c);

/// Matrix product f o g; degrees add when both are declared.
GradedOperator op_compose(const GradedOperator& f, const GradedOperator& g);

/// Tensor product of operators.  Ungraded: plain entry products.  Graded:
/// (f otimes-bar g) picks up (-1)^{|g| * parity(col of f)}; requires g to
/// carry a declared degree.
GradedOperator op_tensor(const GradedOperator& f, const GradedOperator& g, bool graded = false);

/// Super twist P(x otimes y) = (-1)^{xi eta} y otimes x on V otimes V.
GradedOperator twist(const SuperDims& dims);

/// Supertranspose of a homogeneous arity-1 operator, from the graded dual
/// pairing <f^st(phi), x> = (-1)^{|f||phi|} <phi, f(x)>.  Entrywise:
/// out(l, k) = (-1)^{|f| eta_k} in(k, l).
GradedOperator supertranspose(const GradedOperator& f);

/// Partial supertranspose of an arity-2 operator in one slot.  On matrix
/// units, slot 1 obeys
///   (E_{ij} ox E_{rs})^{st1} = (-1)^{(eta_i+eta_j)(eta_r+eta_s)} E_{ij}^{st} ox E_{rs},
/// and slot 2 obeys (f ox g)^{st2} = f ox g^{st}.
GradedOperator partial_supertranspose(const GradedOperator& f, int slot);

TensorVector apply(const GradedOperator& f, const TensorVector& x);
TensorVector basis_tensor(const SuperDims& dims, std::span<const int> idx);

/// Checks that every entry connects tuples whose parities differ by deg.
bool is_homogeneous(const GradedOperator& f, int deg);

/// Dense fallback for small cross-checks.
std::vector<std::vector<RationalFunc>> to_dense(const GradedOperator& f);

/// Entrywise q -> q^{-1}.
GradedOperator op_bar(const GradedOperator& f);

} // namespace spoq
