#include "spoq/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <stdexcept>

#include "spoq/errors.hpp"
#include "spoq/rmatrix.hpp"
#include "spoq/tensor_module.hpp"

namespace spoq {

std::vector<std::string> suite_names() {
    return {"relations", "invariance", "decomposition", "commutant", "spectral",
            "minpoly",   "braid",      "bwm",           "rfrl",      "asymmetry"};
}

namespace {

bool needs_rep(const std::string& suite) {
    return suite == "relations" || suite == "invariance" || suite == "decomposition" ||
           suite == "commutant" || suite == "spectral" || suite == "rfrl";
}

} // namespace

bool suite_available(const std::string& suite, int n, int m) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) return false;
    if (n < 0 || m < 0 || n + m < 1) return false;
    if (needs_rep(suite)) return n >= 1 && m >= 1;
    return true;
}

Report run_suite(const std::string& suite, int n, int m, unsigned long seed) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite: " + suite);
    if (!suite_available(suite, n, m))
        throw BadDims("suite '" + suite + "' is not available at n = " + std::to_string(n) +
                      ", m = " + std::to_string(m));

    if (suite == "relations") return verify_defining_relations(build_vector_rep(n, m));
    if (suite == "invariance") {
        auto rep = build_vector_rep(n, m);
        return verify_form_invariance(rep, bq_maps(rep), seed);
    }
    if (suite == "decomposition") return verify_decomposition(build_vector_rep(n, m), seed);
    if (suite == "commutant") {
        auto rep = build_vector_rep(n, m);
        return verify_commutant(r_matrices(rep), rep);
    }
    if (suite == "spectral") {
        auto rep = build_vector_rep(n, m);
        return verify_spectral(r_matrices(rep), rep, standard_bases(rep));
    }
    if (suite == "rfrl") {
        auto rep = build_vector_rep(n, m);
        return verify_rfrl(r_matrices(rep), bq_maps(rep));
    }
    auto set = r_matrices(build_index_data(n, m));
    if (suite == "minpoly") return verify_minpoly(set);
    if (suite == "braid") return verify_braid(set);
    if (suite == "bwm") return verify_bwm(set);
    return verify_asymmetry(set);
}

unsigned thread_cap() {
    const char* env = std::getenv("SPO_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    return static_cast<unsigned>(v);
}

Report run_all_suites(int n, int m, unsigned long seed) {
    Report out{SuperDims{n, m}, "all", {}};
    std::vector<std::string> todo;
    for (const auto& name : suite_names())
        if (suite_available(name, n, m)) todo.push_back(name);
    if (todo.empty()) throw BadDims("no suite is available at these dims");

    const unsigned workers = std::min<unsigned>(thread_cap(), static_cast<unsigned>(todo.size()));
    std::vector<Report> results(todo.size());
    if (workers <= 1) {
        for (std::size_t k = 0; k < todo.size(); ++k) results[k] = run_suite(todo[k], n, m, seed);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> futs;
        for (unsigned w = 0; w < workers; ++w) {
            futs.push_back(std::async(std::launch::async, [&] {
                for (std::size_t k = next.fetch_add(1); k < todo.size(); k = next.fetch_add(1))
                    results[k] = run_suite(todo[k], n, m, seed);
            }));
        }
        for (auto& f : futs) f.get();
    }
    for (std::size_t k = 0; k < todo.size(); ++k) out.append(results[k], todo[k] + "/");
    out.sort_checks();
    return out;
}

} // namespace spoq
