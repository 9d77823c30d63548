#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "spoq/errors.hpp"
#include "spoq/rmatrix.hpp"
#include "spoq/serialize.hpp"
#include "spoq/suites.hpp"
#include "spoq/tensor_module.hpp"

namespace {

using namespace spoq;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

struct MatrixRequest {
    int n = 0, m = 0;
    std::string matrix, format = "json", out;
};

const GradedOperator& pick_operator(const RMatrixSet& set, const std::string& name) {
    if (name == "rhat") return set.Rhat;
    if (name == "r") return set.R;
    if (name == "rinv") return set.Rinv;
    if (name == "ps") return set.Ps;
    return set.Kop; // "k"
}

std::string latex_name(const std::string& name) {
    if (name == "rhat") return "\\hat{R}";
    if (name == "r") return "R";
    if (name == "rinv") return "R^{-1}";
    if (name == "ps") return "P_s";
    return "K";
}

int run_compute(const MatrixRequest& req) {
    const bool needs_generators = req.matrix == "generators" || req.matrix == "cartan";
    if (needs_generators && (req.n < 1 || req.m < 1))
        throw BadDims("generator-level data needs n >= 1 and m >= 1");
    std::string content;
    if (req.matrix == "cartan") {
        auto cd = cartan_data(req.n, req.m);
        if (req.format == "json")
            content = render_json(cartan_to_json(cd));
        else if (req.format == "csv")
            content = cartan_to_csv(cd);
        else
            content = cartan_to_latex(cd);
    } else if (req.matrix == "generators") {
        auto rep = build_vector_rep(req.n, req.m);
        if (req.format == "json")
            content = render_json(generators_to_json(rep));
        else if (req.format == "csv")
            content = generators_to_csv(rep);
        else
            content = generators_to_latex(rep);
    } else if (req.matrix == "cq") {
        auto cq = cq_matrix(build_index_data(req.n, req.m));
        if (req.format == "json")
            content = render_json(form_matrix_to_json(cq));
        else if (req.format == "csv")
            content = form_matrix_to_csv(cq);
        else
            content = form_matrix_to_latex(cq, "C^q");
    } else {
        auto set = r_matrices(build_index_data(req.n, req.m));
        const auto& op = pick_operator(set, req.matrix);
        if (req.format == "json")
            content = render_json(op_to_json(op));
        else if (req.format == "csv")
            content = op_to_csv(op);
        else
            content = op_to_latex(op, latex_name(req.matrix));
    }
    write_output(req.out, content);
    return kExitPass;
}

int run_eval(const MatrixRequest& req, const std::string& q_text) {
    Rational q0 = rat_from_string(q_text);
    if (q0 == 0) throw BadDims("q must be nonzero");
    if (q0 == 1 || q0 == -1)
        std::cerr << "warning: |q| = 1 lies in the excluded root-of-unity locus\n";
    std::string content;
    if (req.matrix == "cq") {
        content = form_matrix_to_eval_csv(cq_matrix(build_index_data(req.n, req.m)), q0);
    } else {
        auto set = r_matrices(build_index_data(req.n, req.m));
        content = op_to_eval_csv(pick_operator(set, req.matrix), q0);
    }
    write_output(req.out, content);
    return kExitPass;
}

int run_verify(int n, int m, const std::string& suite, unsigned long seed,
               const std::string& out_path) {
    Report report = (suite == "all") ? run_all_suites(n, m, seed)
                                     : run_suite(suite, n, m, seed);
    write_output(out_path, render_json(report_to_json(report, seed)));
    return report.all_pass() ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification tool for the spo(2n|2m) braid generator"};
    app.require_subcommand(1);

    MatrixRequest req;
    std::string q_text = "1";
    std::string suite = "all";
    unsigned long seed = 0xC0FFEE;

    auto* compute = app.add_subcommand("compute", "write one matrix in a chosen format");
    compute->add_option("--n", req.n, "bosonic pair count")->required();
    compute->add_option("--m", req.m, "fermionic pair count")->required();
    compute->add_option("--matrix", req.matrix, "rhat|r|rinv|ps|k|cq|generators|cartan")
        ->required()
        ->check(CLI::IsMember({"rhat", "r", "rinv", "ps", "k", "cq", "generators", "cartan"}));
    compute->add_option("--format", req.format, "json|csv|latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    compute->add_option("--out", req.out, "output path ('-' for stdout)");

    auto* verify = app.add_subcommand("verify", "run verification suites, report JSON on stdout");
    int vn = 0, vm = 0;
    verify->add_option("--n", vn, "bosonic pair count")->required();
    verify->add_option("--m", vm, "fermionic pair count")->required();
    verify->add_option("--suite", suite,
                       "relations|invariance|decomposition|commutant|spectral|minpoly|braid|"
                       "bwm|rfrl|asymmetry|all");
    verify->add_option("--seed", seed, "seed for the sampled extra specialization");
    std::string verify_out;
    verify->add_option("--out", verify_out, "output path ('-' for stdout)");

    auto* eval = app.add_subcommand("eval", "specialize a matrix at a rational q, as CSV");
    eval->add_option("--n", req.n, "bosonic pair count")->required();
    eval->add_option("--m", req.m, "fermionic pair count")->required();
    eval->add_option("--matrix", req.matrix, "rhat|r|rinv|ps|k|cq")
        ->required()
        ->check(CLI::IsMember({"rhat", "r", "rinv", "ps", "k", "cq"}));
    eval->add_option("--q", q_text, "rational value, e.g. 2 or 3/2")->required();
    eval->add_option("--out", req.out, "output path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(req);
        if (eval->parsed()) return run_eval(req, q_text);
        if (suite != "all") {
            auto names = suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                std::cerr << "unknown suite: " << suite << "\n";
                return kExitUsage;
            }
        }
        return run_verify(vn, vm, suite, seed, verify_out);
    } catch (const BadDims& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ZeroBase& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const DivisionByZero& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
