#pragma once

#include <map>

#include "spoq/cartan.hpp"
#include "spoq/graded_op.hpp"
#include "spoq/report.hpp"

namespace spoq {

enum class GenKind { E, F, K, Kinv };

struct GenId {
    GenKind kind;
    int j; // index in J
    bool operator<(const GenId& o) const {
        return kind != o.kind ? kind < o.kind : j < o.j;
    }
};

/// The vector representation: generator matrices on V, with the sole odd
/// generator pair at j = -n-1.
struct VectorRep {
    SuperDims dims;
    IndexData index;
    CartanData cartan;
    std::map<int, GradedOperator> E, F, K, Kinv;
    int odd_j = 0; // -n-1

    const GradedOperator& gen(GenKind kind, int j) const;
    /// Weight of a generator as an element of the root lattice (0 for K).
    WeightVector gen_weight(GenKind kind, int j) const;
    int gen_parity(GenKind kind, int j) const;
    LaurentPoly q_i(int j) const; // q^{d_j}
};

/// errors: BadDims unless n >= 1 and m >= 1.
VectorRep build_vector_rep(int n, int m);

/// <X, Y>_p = X Y - p (-1)^{|X||Y|} Y X on declared-homogeneous operators.
GradedOperator q_supercommutator(const GradedOperator& x, const GradedOperator& y,
                                 const RationalFunc& p);

/// Counit values: 1 on K^{+-1}, 0 on E and F.
Rational counit(GenKind kind);

/// Antipode images in the representation: S(E_j) = -K_j^{-1} E_j,
/// S(F_j) = -F_j K_j, S(K_j^{+-1}) = K_j^{-+1}.
GradedOperator antipode_image(const VectorRep& rep, GenKind kind, int j);

/// All defining relations that apply at the given dims, each as a residual
/// check; the two supplementary families carry their dimension preconditions.
Report verify_defining_relations(const VectorRep& rep);

/// The invariant bilinear form data: b^q = C^q and the associated maps
/// f_l(e_j) = sum_i C^q_{j,i} e'_i, f_r(e_j) = sum_i sigma_{j,i} C^q_{i,j} e'_i.
struct FormMaps {
    FormMatrix bq;
    GradedOperator f_l, f_r;
    GradedOperator f_l_inv, f_r_inv;
};

FormMaps bq_maps(const VectorRep& rep);

/// b-tilde^q as a linear form on V ox V.
RationalFunc btilde(const FormMatrix& bq, const TensorVector& u);

/// Invariance of b^q under the lifted action, the dual-map identities for
/// f_l and f_r, and uniqueness of the invariant form up to scale.
Report verify_form_invariance(const VectorRep& rep, const FormMaps& maps,
                              unsigned long seed = 0xC0FFEE);

} // namespace spoq
