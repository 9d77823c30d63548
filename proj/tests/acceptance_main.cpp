// Acceptance suite: runs every acceptance criterion end to end and prints one
// PASS/FAIL line per criterion.  All checks are exact; there are no numeric
// tolerances anywhere.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "spoq/rmatrix.hpp"
#include "spoq/serialize.hpp"
#include "spoq/suites.hpp"

using namespace spoq;

namespace {

int g_failures = 0;

struct Criterion {
    int number;
    std::string description;
    double budget_seconds;
    bool (*run)(std::string& note);
};

const std::vector<std::pair<int, int>> kRepDims{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}};
const std::vector<std::pair<int, int>> kRMatrixDims{{1, 1}, {2, 1}, {1, 2}, {2, 2}};
const std::vector<std::pair<int, int>> kDegenerateDims{{2, 0}, {0, 2}};

bool report_clean(const Report& r, std::string& note) {
    if (r.all_pass()) return true;
    for (const auto& c : r.checks)
        if (c.status == Status::Fail) {
            note += " [" + r.suite + "/" + c.name + " FAIL]";
            break;
        }
    return false;
}

bool require_status(const Report& r, const std::string& name, Status want, std::string& note) {
    for (const auto& c : r.checks)
        if (c.name == name) {
            if (c.status == want) return true;
            note += " [" + name + " not " + status_name(want) + "]";
            return false;
        }
    note += " [" + name + " missing]";
    return false;
}

bool criterion_relations(std::string& note) {
    bool ok = true;
    for (auto [n, m] : kRepDims) {
        auto report = verify_defining_relations(build_vector_rep(n, m));
        ok &= report_clean(report, note);
        if (n == 2 && m == 2) {
            ok &= require_status(report, "supplementary_nested4(E)", Status::Pass, note);
            ok &= require_status(report, "supplementary_nested4(F)", Status::Pass, note);
        }
        if (n == 1 && m == 3) {
            ok &= require_status(report, "supplementary_order7(E)", Status::Pass, note);
            ok &= require_status(report, "supplementary_order7(F)", Status::Pass, note);
        }
    }
    return ok;
}

bool criterion_invariance(std::string& note) {
    bool ok = true;
    for (auto [n, m] : kRepDims) {
        auto rep = build_vector_rep(n, m);
        auto report = verify_form_invariance(rep, bq_maps(rep));
        ok &= report_clean(report, note);
        ok &= require_status(report, "uniqueness", Status::Pass, note);
    }
    return ok;
}

bool criterion_decomposition(std::string& note) {
    bool ok = true;
    for (auto [n, m] : kRepDims) {
        auto report = verify_decomposition(build_vector_rep(n, m));
        ok &= report_clean(report, note);
        ok &= require_status(report, "family_counts", Status::Pass, note);
        ok &= require_status(report, "btilde_invariant_value", Status::Pass, note);
        ok &= require_status(report, "commutant_dimension", Status::Pass, note);
        ok &= require_status(report, "invariant_position", Status::Pass, note);
        if (n == 1 && m == 1) {
            ok &= require_status(report, "small_case_a_eq_a2", Status::Pass, note);
            ok &= require_status(report, "small_case_v4_sum", Status::Pass, note);
        }
    }
    return ok;
}

bool criterion_rmatrix(std::string& note) {
    bool ok = true;
    for (auto [n, m] : kRMatrixDims) {
        auto rep = build_vector_rep(n, m);
        auto set = r_matrices(rep);
        ok &= report_clean(verify_commutant(set, rep), note);
        ok &= report_clean(verify_spectral(set, rep, standard_bases(rep)), note);
        ok &= report_clean(verify_minpoly(set), note);
        ok &= report_clean(verify_braid(set), note);
        ok &= report_clean(verify_bwm(set), note);
        ok &= report_clean(verify_rfrl(set, bq_maps(rep)), note);
        ok &= report_clean(verify_asymmetry(set), note);
    }
    return ok;
}

bool criterion_classical_limit(std::string& note) {
    bool ok = true;
    for (auto [n, m] : kRepDims) {
        auto index = build_index_data(n, m);
        auto cq = cq_matrix(index);
        auto c = c_matrix(index);
        auto g = g_matrix(index);
        for (int i : index.indices) {
            // C^{q=1} = C and C^2 = -G
            if (cq.at(i, -i).eval(Rational(1)) != c.at(i, -i).eval(Rational(1))) ok = false;
            if (c.at(i, -i).eval(Rational(1)) * c.at(-i, i).eval(Rational(1)) !=
                -g.at(i, i).eval(Rational(1)))
                ok = false;
        }
        // Rhat at q = 1 is the super twist
        auto set = r_matrices(index);
        auto p = twist(index.dims);
        for (const auto& [rc, v] : set.Rhat.entries)
            if (v.eval(Rational(1)) != p.at_lin(rc.first, rc.second).eval(Rational(1)))
                ok = false;
        for (const auto& [rc, v] : p.entries)
            if (v.eval(Rational(1)) != set.Rhat.at_lin(rc.first, rc.second).eval(Rational(1)))
                ok = false;
        // a specializes to the C^{-1} tensor
        auto rep = build_vector_rep(n, m);
        auto a = invariant_element(rep);
        for (int i : index.indices) {
            int idx[] = {i, -i};
            Rational got = a.at(idx).eval(Rational(1));
            // (C^{-1})_{i,-i} = 1 / C_{-i,i} = 1 / tau_i
            Rational want = Rational(1) / Rational(index.tau(i));
            if (got != want) ok = false;
        }
    }
    if (!ok) note += " [classical limit mismatch]";
    return ok;
}

bool criterion_oracle(std::string& note) {
    bool ok = true;
    for (auto [n, m] : kRepDims) {
        auto rep = build_vector_rep(n, m);
        auto set = r_matrices(rep);
        TensorSquareBasis basis(rep, standard_bases(rep));
        if (!set.Ps.same_entries(basis.symmetric_projector())) {
            ok = false;
            note += " [oracle mismatch at (" + std::to_string(n) + "," + std::to_string(m) + ")]";
        }
    }
    return ok;
}

bool criterion_degenerate(std::string& note) {
    bool ok = true;
    for (auto [n, m] : kDegenerateDims) {
        auto set = r_matrices(build_index_data(n, m));
        ok &= report_clean(verify_braid(set), note);
        ok &= report_clean(verify_minpoly(set), note);
        ok &= report_clean(verify_bwm(set), note);
    }
    return ok;
}

std::string cli_path() {
    const char* env = std::getenv("SPOQ_CLI");
    return env ? env : "./build/tools/spoq";
}

int run_cli(const std::string& args, const std::string& out_file) {
    std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>/dev/null";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool criterion_cli(std::string& note) {
    bool ok = true;
    std::vector<std::pair<int, int>> dims = kRepDims;
    dims.insert(dims.end(), kDegenerateDims.begin(), kDegenerateDims.end());
    for (auto [n, m] : dims) {
        std::string args = "verify --n " + std::to_string(n) + " --m " + std::to_string(m) +
                           " --suite all";
        if (run_cli(args, "/tmp/spoq_acc_a.json") != 0) {
            ok = false;
            note += " [verify exit != 0 at (" + std::to_string(n) + "," + std::to_string(m) + ")]";
            continue;
        }
        if (run_cli(args, "/tmp/spoq_acc_b.json") != 0 ||
            slurp("/tmp/spoq_acc_a.json") != slurp("/tmp/spoq_acc_b.json")) {
            ok = false;
            note += " [report not byte-stable]";
        }
    }
    // lossless JSON round trip through the CLI export
    if (run_cli("compute --n 2 --m 1 --matrix rhat --format json", "/tmp/spoq_acc_rhat.json") !=
        0) {
        ok = false;
        note += " [compute failed]";
    } else {
        auto set = r_matrices(build_index_data(2, 1));
        if (!(op_from_json(Json::parse(slurp("/tmp/spoq_acc_rhat.json"))) == set.Rhat)) {
            ok = false;
            note += " [round trip lossy]";
        }
    }
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "defining relations, exact zero residual", 5.0, criterion_relations},
        {2, "form invariance and uniqueness of b^q", 5.0, criterion_invariance},
        {3, "tensor-square decomposition and endomorphisms", 30.0, criterion_decomposition},
        {4, "braid generator identities", 60.0, criterion_rmatrix},
        {5, "classical limit q = 1", 1.0, criterion_classical_limit},
        {6, "spectral projector equals basis-change oracle", 10.0, criterion_oracle},
        {7, "degenerate formula path (2,0) and (0,2)", 10.0, criterion_degenerate},
        {8, "CLI verify/export contract", 60.0, criterion_cli},
    };

    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note += std::string(" [exception: ") + e.what() + "]";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (!ok) ++g_failures;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
                  << c.description << " (" << ms << " ms)" << note << "\n";
        if (ok && static_cast<double>(ms) > c.budget_seconds * 1000.0)
            std::cout << "       note: exceeded the expected budget of " << c.budget_seconds
                      << " s\n";
    }

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
    return 1;
}
