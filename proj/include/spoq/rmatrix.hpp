#pragma once

#include "spoq/report.hpp"
#include "spoq/tensor_module.hpp"
#include "spoq/vector_rep.hpp"

namespace spoq {

/// The explicit braid generator and R-matrices on V ox V, with the two
/// derived endomorphisms.  All of Rhat, R, Rinv carry Laurent entries; Ps has
/// denominators dividing (q + q^-1)(q + q^{-2d-1}).
struct RMatrixSet {
    SuperDims dims;
    GradedOperator Rhat;
    GradedOperator R;
    GradedOperator Rinv;
    GradedOperator RhatInv;
    GradedOperator Ps;
    GradedOperator Kop;
};

/// Builds every matrix from the closed formulas; admits n = 0 or m = 0.
RMatrixSet r_matrices(const IndexData& index);
RMatrixSet r_matrices(const VectorRep& rep);

/// Structural nonzero count of Rhat: 8r^2 - 3r, minus one when m >= n + 1
/// (a diagonal coefficient cancels exactly in that case).
std::size_t rhat_expected_nnz(const SuperDims& dims);

/// Rhat commutes with every lifted generator on V ox V.
Report verify_commutant(const RMatrixSet& set, const VectorRep& rep);

/// Spectral identities: Rhat and Rhat^-1 as combinations of P_s, id, K;
/// eigen-action on the families; the K-relations.
Report verify_spectral(const RMatrixSet& set, const VectorRep& rep, const SubmoduleBases& bases);

/// Minimal polynomial (Rhat - q)(Rhat + q^-1)(Rhat + q^{-2d-1}) = 0 with
/// minimality, K as a polynomial in Rhat, and the inverse-formula identities.
Report verify_minpoly(const RMatrixSet& set);

/// (Rhat ox I)(I ox Rhat)(Rhat ox I) = (I ox Rhat)(Rhat ox I)(I ox Rhat).
Report verify_braid(const RMatrixSet& set);

/// (I ox K)(Rhat^{+-1} ox I)(I ox K) = -q^{+-(2d+1)} (I ox K) and the mirror.
Report verify_bwm(const RMatrixSet& set);

/// R^-1 = (f_r^-1 ox I) R^{st1} (f_r ox I) = (I ox f_l^-1) R^{st2} (I ox f_l).
Report verify_rfrl(const RMatrixSet& set, const FormMaps& maps);

/// R_q^-1 differs from R_{q^-1} entrywise (claim for m >= 1).
Report verify_asymmetry(const RMatrixSet& set);

} // namespace spoq
