#pragma once

#include <string>
#include <vector>

#include "spoq/linalg.hpp"
#include "spoq/vector_rep.hpp"

namespace spoq {

/// Coproduct-lifted generator action on V^{otimes k}, k in {2, 3}:
/// E acts as E ox-bar 1 + K ox-bar E, F as F ox-bar K^-1 + 1 ox-bar F,
/// K as K ox K (extended coassociatively for k = 3).
GradedOperator lift_action(const VectorRep& rep, GenKind kind, int j, int k);

/// All arity-k lifted generators, in a fixed iteration order.
struct LiftedAction {
    int k = 2;
    std::map<int, GradedOperator> E, F, K, Kinv;
    const GradedOperator& gen(GenKind kind, int j) const;
};

LiftedAction build_lifted_action(const VectorRep& rep, int k);

/// The invariant element a = sum ((C^q)^{-1})_{ik} e_i ox e_k.
TensorVector invariant_element(const VectorRep& rep);

/// The basis families of the tensor square: the symmetric-type family s,
/// the skew-type family a (spanning the trace-free part), the weight-zero
/// complement vector t, and the u/v building blocks of the zero-weight part.
struct SubmoduleBases {
    std::vector<TensorVector> s_family, a_family;
    std::vector<std::string> s_labels, a_labels;
    TensorVector t;
    TensorVector invariant; // the element a
    std::vector<TensorVector> u, v; // u_j, v_j for j = 2..r (index j-2)

    int s_index(const std::string& label) const;
    int a_index(const std::string& label) const;
};

/// Labels: "s(i,j)" / "a(i,j)" for the pair tensors (including squares),
/// "s0(1)", "s0(j)" and "a0(j)" for the zero-weight members.
SubmoduleBases standard_bases(const VectorRep& rep);

/// Basis solutions of the zero-weight complement system
///   g_1 + q^2 g_{-1} = 0,
///   q g_{j+1} - q q^{sigma_j} g_j = sigma_j g_{-j} - sigma_{j+1} q^{sigma_{j+1}} g_{-j-1}
/// parameterized by g_{-1},...,g_{-r}; solution 0 is the distinguished one
/// with g_{-1} = 1 (equal to t), solution k sets g_{-k-1} = 1.
std::vector<TensorVector> solve_weight_zero_complement(const VectorRep& rep);

/// K(u) = btilde^q(u) a, the rank-one trace operator.
GradedOperator operator_K(const VectorRep& rep);
/// Same operator built from index data alone (degenerate dims allowed).
GradedOperator operator_K(const IndexData& index);

/// Spectral projector P_s = (Rhat + q^-1)(Rhat + q^{-2d-1}) /
/// ((q + q^-1)(q + q^{-2d-1})).
GradedOperator projector_Ps(const SuperDims& dims, const GradedOperator& rhat);

/// Exact decomposition of V ox V in the family basis, blocked by weight.
class TensorSquareBasis {
public:
    TensorSquareBasis(const VectorRep& rep, const SubmoduleBases& bases);

    struct Coords {
        std::vector<RationalFunc> s, a;
        RationalFunc t;
    };
    Coords decompose(const TensorVector& x) const;

    /// Projector onto span(s_family) along span(a_family + t), column by column.
    GradedOperator symmetric_projector() const;

private:
    const SuperDims dims_;
    std::size_t s_count_, a_count_;
    struct Block {
        std::vector<LinIdx> rows;         // basis tensors of this weight
        std::vector<std::size_t> members; // global member ids (s, then a, then t)
        DenseMat<RationalFunc> forward;   // member coords on the rows
        DenseMat<RationalFunc> inverse;
    };
    std::map<WeightVector, Block> blocks_;
    WeightVector weight_of(LinIdx pos) const;
};

/// Dimension of the commutant of the lifted generator set inside arity-2
/// operators, computed exactly at a rational specialization q = q0.  The
/// `known_commuting` operators (typically id, P_s and K, verified to commute
/// beforehand) provide the lower bound that lets the rank computation stop
/// once the matching upper bound is certified.
std::size_t commutant_dimension(const VectorRep& rep, const LiftedAction& act, const Rational& q0,
                                const std::vector<const GradedOperator*>& known_commuting);

/// Statements about the submodule structure of V ox V: counts, closure,
/// kernel of btilde, the special n = m and (1,1) shapes, endomorphism
/// dimension and constructive irreducibility at rational q.
Report verify_decomposition(const VectorRep& rep, unsigned long seed = 0xC0FFEE);

} // namespace spoq
