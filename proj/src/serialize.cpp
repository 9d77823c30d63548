#include "spoq/serialize.hpp"

#include <sstream>

#include "spoq/errors.hpp"
#include "spoq/tensor_module.hpp"

namespace spoq {
namespace {

std::string idx_key(int i) { return std::to_string(i); }

Json tuple_to_json(const std::vector<int>& idx) {
    Json arr = Json::array();
    for (int i : idx) arr.push_back(i);
    return arr;
}

std::vector<int> tuple_from_json(const Json& j) {
    std::vector<int> out;
    for (const auto& v : j) out.push_back(v.get<int>());
    return out;
}

std::string tuple_str(const std::vector<int>& idx) {
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += " ";
        s += std::to_string(idx[k]);
    }
    return s;
}

std::string basis_latex(const std::vector<int>& idx) {
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += " \\otimes ";
        s += "e_{" + std::to_string(idx[k]) + "}";
    }
    return s;
}

} // namespace

Json lp_to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[idx_key(static_cast<int>(e))] = rat_to_string(c);
    return j;
}

LaurentPoly lp_from_json(const Json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p.add_term(std::stol(it.key()), rat_from_string(it.value().get<std::string>()));
    return p;
}

Json rf_to_json(const RationalFunc& f) {
    return Json{{"num", lp_to_json(f.num())}, {"den", lp_to_json(f.den())}};
}

RationalFunc rf_from_json(const Json& j) {
    return RationalFunc(lp_from_json(j.at("num")), lp_from_json(j.at("den")));
}

Json op_to_json(const GradedOperator& f) {
    Json j{{"arity", f.arity}, {"n", f.dims.n}, {"m", f.dims.m}};
    if (f.degree) j["degree"] = *f.degree;
    Json entries = Json::array();
    for (const auto& [rc, v] : f.entries) {
        entries.push_back(Json{{"row", tuple_to_json(decode_tuple(f.dims, f.arity, rc.first))},
                               {"col", tuple_to_json(decode_tuple(f.dims, f.arity, rc.second))},
                               {"val", rf_to_json(v)}});
    }
    j["entries"] = std::move(entries);
    return j;
}

GradedOperator op_from_json(const Json& j) {
    SuperDims dims{j.at("n").get<int>(), j.at("m").get<int>()};
    GradedOperator f(dims, j.at("arity").get<int>());
    if (j.contains("degree")) f.degree = j.at("degree").get<int>();
    for (const auto& e : j.at("entries")) {
        auto row = tuple_from_json(e.at("row"));
        auto col = tuple_from_json(e.at("col"));
        f.add_entry(row, col, rf_from_json(e.at("val")));
    }
    return f;
}

Json tensor_to_json(const TensorVector& x) {
    Json j{{"arity", x.arity}, {"n", x.dims.n}, {"m", x.dims.m}};
    Json terms = Json::array();
    for (const auto& [p, v] : x.coeff)
        terms.push_back(Json{{"idx", tuple_to_json(decode_tuple(x.dims, x.arity, p))},
                             {"val", rf_to_json(v)}});
    j["terms"] = std::move(terms);
    return j;
}

TensorVector tensor_from_json(const Json& j) {
    SuperDims dims{j.at("n").get<int>(), j.at("m").get<int>()};
    TensorVector x{dims, j.at("arity").get<int>(), {}};
    for (const auto& t : j.at("terms")) {
        auto idx = tuple_from_json(t.at("idx"));
        x.add(idx, rf_from_json(t.at("val")));
    }
    return x;
}

Json weight_to_json(const WeightVector& w) {
    Json j = Json::object();
    for (const auto& [k, c] : w.coeff) j[idx_key(k)] = c;
    return j;
}

Json index_data_to_json(const IndexData& data) {
    Json j{{"n", data.dims.n}, {"m", data.dims.m}, {"r", data.dims.r()}, {"d", data.dims.d()}};
    Json idx = Json::array(), eta = Json::object(), sig = Json::object(), tau = Json::object();
    for (int i : data.indices) {
        idx.push_back(i);
        eta[idx_key(i)] = data.eta(i);
        sig[idx_key(i)] = data.sigma(i);
        tau[idx_key(i)] = data.tau(i);
    }
    j["indices"] = std::move(idx);
    j["eta"] = std::move(eta);
    j["sigma"] = std::move(sig);
    j["tau"] = std::move(tau);
    return j;
}

Json form_matrix_to_json(const FormMatrix& f) {
    const char* kind = f.kind == FormMatrix::Kind::C ? "C"
                       : f.kind == FormMatrix::Kind::G ? "G"
                                                       : "Cq";
    Json entries = Json::object();
    for (const auto& [rc, v] : f.entries) {
        if (v.is_zero()) continue;
        entries[idx_key(rc.first)][idx_key(rc.second)] = lp_to_json(v);
    }
    return Json{{"kind", kind}, {"n", f.dims.n}, {"m", f.dims.m}, {"entries", entries}};
}

Json cartan_to_json(const CartanData& cd) {
    Json a_rows = Json::array(), d_diag = Json::array(), j_list = Json::array();
    for (int i : cd.J) {
        j_list.push_back(i);
        d_diag.push_back(cd.d(i));
        Json row = Json::array();
        for (int j : cd.J) row.push_back(cd.a(i, j));
        a_rows.push_back(std::move(row));
    }
    Json roots_json = Json::array();
    for (const auto& rt : root_system(cd.dims.n, cd.dims.m))
        roots_json.push_back(Json{{"coeff", weight_to_json(rt.w)}, {"parity", rt.parity}});
    Json simple = Json::object();
    for (const auto& [j, w] : cd.simple_roots) simple[idx_key(j)] = weight_to_json(w);
    return Json{{"n", cd.dims.n},
                {"m", cd.dims.m},
                {"J", j_list},
                {"A", a_rows},
                {"D", d_diag},
                {"odd_root_index", cd.odd_root_index},
                {"simple_roots", simple},
                {"two_rho", weight_to_json(two_rho(cd.dims.n, cd.dims.m))},
                {"roots", roots_json}};
}

Json generators_to_json(const VectorRep& rep) {
    Json e = Json::object(), f = Json::object(), k = Json::object(), ki = Json::object();
    for (int j : rep.cartan.J) {
        e[idx_key(j)] = op_to_json(rep.E.at(j));
        f[idx_key(j)] = op_to_json(rep.F.at(j));
        k[idx_key(j)] = op_to_json(rep.K.at(j));
        ki[idx_key(j)] = op_to_json(rep.Kinv.at(j));
    }
    return Json{{"n", rep.dims.n}, {"m", rep.dims.m},
                {"E", e},          {"F", f},
                {"K", k},          {"Kinv", ki}};
}

Json basis_families_to_json(const SubmoduleBases& bases) {
    Json s = Json::array(), a = Json::array();
    for (std::size_t k = 0; k < bases.s_family.size(); ++k)
        s.push_back(Json{{"label", bases.s_labels[k]}, {"tensor", tensor_to_json(bases.s_family[k])}});
    for (std::size_t k = 0; k < bases.a_family.size(); ++k)
        a.push_back(Json{{"label", bases.a_labels[k]}, {"tensor", tensor_to_json(bases.a_family[k])}});
    return Json{{"s_family", s},
                {"a_family", a},
                {"t", tensor_to_json(bases.t)},
                {"invariant", tensor_to_json(bases.invariant)}};
}

Json report_to_json(const Report& r, unsigned long seed) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name},
                              {"identity", c.identity},
                              {"status", status_name(c.status)},
                              {"residual_nonzero_count", c.residual_nonzero_count},
                              {"detail", c.detail}});
    return Json{{"n", r.dims.n},   {"m", r.dims.m},   {"suite", r.suite},
                {"seed", seed},    {"checks", checks}, {"status", r.all_pass() ? "PASS" : "FAIL"}};
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string op_to_csv(const GradedOperator& f) {
    std::ostringstream out;
    out << "row,col,value\n";
    for (const auto& [rc, v] : f.entries)
        out << tuple_str(decode_tuple(f.dims, f.arity, rc.first)) << ","
            << tuple_str(decode_tuple(f.dims, f.arity, rc.second)) << "," << v.str() << "\n";
    return out.str();
}

std::string form_matrix_to_csv(const FormMatrix& f) {
    std::ostringstream out;
    out << "row,col,value\n";
    for (const auto& [rc, v] : f.entries) {
        if (v.is_zero()) continue;
        out << rc.first << "," << rc.second << "," << v.str() << "\n";
    }
    return out.str();
}

std::string cartan_to_csv(const CartanData& cd) {
    std::ostringstream out;
    for (int i : cd.J) {
        bool first = true;
        for (int j : cd.J) {
            if (!first) out << ",";
            out << cd.a(i, j);
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

std::string generators_to_csv(const VectorRep& rep) {
    std::ostringstream out;
    for (const auto& [label, table] :
         {std::pair<const char*, const std::map<int, GradedOperator>*>{"E", &rep.E},
          {"F", &rep.F},
          {"K", &rep.K},
          {"Kinv", &rep.Kinv}}) {
        for (const auto& [j, op] : *table) {
            out << "# " << label << "(" << j << ")\n";
            out << op_to_csv(op);
        }
    }
    return out.str();
}

std::string op_to_eval_csv(const GradedOperator& f, const Rational& q0) {
    const std::size_t d = space_dim(f.dims, f.arity);
    std::ostringstream out;
    out << "basis";
    for (std::size_t c = 0; c < d; ++c)
        out << "," << tuple_str(decode_tuple(f.dims, f.arity, static_cast<LinIdx>(c)));
    out << "\n";
    for (std::size_t r = 0; r < d; ++r) {
        out << tuple_str(decode_tuple(f.dims, f.arity, static_cast<LinIdx>(r)));
        for (std::size_t c = 0; c < d; ++c)
            out << ","
                << rat_to_string(
                       f.at_lin(static_cast<LinIdx>(r), static_cast<LinIdx>(c)).eval(q0));
        out << "\n";
    }
    return out.str();
}

std::string form_matrix_to_eval_csv(const FormMatrix& f, const Rational& q0) {
    IndexData data = build_index_data(f.dims.n, f.dims.m);
    std::ostringstream out;
    out << "basis";
    for (int i : data.indices) out << "," << i;
    out << "\n";
    for (int i : data.indices) {
        out << i;
        for (int k : data.indices) out << "," << rat_to_string(f.at(i, k).eval(q0));
        out << "\n";
    }
    return out.str();
}

std::string op_to_latex(const GradedOperator& f, const std::string& name) {
    // column-action display: one line per basis tensor with a nonzero image
    std::map<LinIdx, std::vector<std::pair<LinIdx, const RationalFunc*>>> cols;
    for (const auto& [rc, v] : f.entries) cols[rc.second].emplace_back(rc.first, &v);
    std::ostringstream out;
    out << "\\begin{align*}\n";
    for (const auto& [c, terms] : cols) {
        out << name << "(" << basis_latex(decode_tuple(f.dims, f.arity, c)) << ") &= ";
        bool first = true;
        for (const auto& [r, v] : terms) {
            if (!first) out << " + ";
            out << "\\left(" << v->latex() << "\\right) "
                << basis_latex(decode_tuple(f.dims, f.arity, r));
            first = false;
        }
        out << " \\\\\n";
    }
    out << "\\end{align*}\n";
    return out.str();
}

std::string form_matrix_to_latex(const FormMatrix& f, const std::string& name) {
    IndexData data = build_index_data(f.dims.n, f.dims.m);
    std::ostringstream out;
    out << name << " = \\begin{pmatrix}\n";
    for (int i : data.indices) {
        bool first = true;
        for (int k : data.indices) {
            if (!first) out << " & ";
            out << f.at(i, k).latex();
            first = false;
        }
        out << " \\\\\n";
    }
    out << "\\end{pmatrix}\n";
    return out.str();
}

std::string cartan_to_latex(const CartanData& cd) {
    std::ostringstream out;
    out << "A = \\begin{pmatrix}\n";
    for (int i : cd.J) {
        bool first = true;
        for (int j : cd.J) {
            if (!first) out << " & ";
            out << cd.a(i, j);
            first = false;
        }
        out << " \\\\\n";
    }
    out << "\\end{pmatrix}\n";
    return out.str();
}

std::string generators_to_latex(const VectorRep& rep) {
    std::ostringstream out;
    for (int j : rep.cartan.J) {
        out << op_to_latex(rep.E.at(j), "E_{" + std::to_string(j) + "}");
        out << op_to_latex(rep.F.at(j), "F_{" + std::to_string(j) + "}");
        out << op_to_latex(rep.K.at(j), "K_{" + std::to_string(j) + "}");
    }
    return out.str();
}

} // namespace spoq
