#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "spoq/cartan.hpp"
#include "spoq/graded_op.hpp"
#include "spoq/report.hpp"
#include "spoq/vector_rep.hpp"

namespace spoq {

using Json = nlohmann::json;

// Laurent polynomials serialize as {"<exponent>": "<coefficient>"} with
// rational coefficients rendered "p" or "p/q"; rational functions as
// {"num": ..., "den": ...}.
Json lp_to_json(const LaurentPoly& p);
LaurentPoly lp_from_json(const Json& j);
Json rf_to_json(const RationalFunc& f);
RationalFunc rf_from_json(const Json& j);

// Sparse operator schema:
// {"arity": k, "n": ..., "m": ..., "entries": [{"row": [...], "col": [...],
//  "val": ...}]} plus "degree" when declared.
Json op_to_json(const GradedOperator& f);
GradedOperator op_from_json(const Json& j);

Json tensor_to_json(const TensorVector& x);
TensorVector tensor_from_json(const Json& j);

Json weight_to_json(const WeightVector& w);
Json index_data_to_json(const IndexData& data);
Json form_matrix_to_json(const FormMatrix& f);
Json cartan_to_json(const CartanData& cd);
Json generators_to_json(const VectorRep& rep);
Json report_to_json(const Report& r, unsigned long seed);

/// The labelled s/a families with t and the invariant element.
Json basis_families_to_json(const struct SubmoduleBases& bases);

/// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string render_json(const Json& j);

// Symbolic CSV: one line per nonzero entry, "row,col,value" with
// space-joined signed indices.
std::string op_to_csv(const GradedOperator& f);
std::string form_matrix_to_csv(const FormMatrix& f);
std::string cartan_to_csv(const CartanData& cd);
std::string generators_to_csv(const VectorRep& rep);

// Exact numeric CSV: the dense specialized matrix at q = q0.
std::string op_to_eval_csv(const GradedOperator& f, const Rational& q0);
std::string form_matrix_to_eval_csv(const FormMatrix& f, const Rational& q0);

// LaTeX: column-action display for operators, array display for forms.
std::string op_to_latex(const GradedOperator& f, const std::string& name);
std::string form_matrix_to_latex(const FormMatrix& f, const std::string& name);
std::string cartan_to_latex(const CartanData& cd);
std::string generators_to_latex(const VectorRep& rep);

} // namespace spoq
