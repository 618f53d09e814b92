#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsu2/inner.hpp"

namespace qsu2::verify {

// One verification check: the identity string states the relation being
// tested, in formula form.
struct Check {
    std::string suite;
    std::string name;
    std::string identity;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool skipped = false;
    std::string note;
};

struct Options {
    std::vector<QParam> qs;             // empty = per-suite defaults
    std::optional<HalfInt> j_max;
    std::optional<HalfInt> m;
    std::optional<HalfInt> n;
    double tol = 0.0;                   // 0 = per-check default
    QuadratureSpec quad{};
    TruncationPolicy policy{};
    double lq_tol = 1e-11;
    int grid_points = 30;
};

std::vector<std::string> suite_names(); // excludes "all"

// Runs one suite ("all" concatenates every suite) with acceptance-grade
// defaults; throws std::invalid_argument for unknown names.
std::vector<Check> run_suite(const std::string& suite, const Options& opts);

std::vector<Check> ladder_suite(const Options& opts);
std::vector<Check> casimir_suite(const Options& opts);
std::vector<Check> functional_eq_suite(const Options& opts);
std::vector<Check> lemma1_suite(const Options& opts);
std::vector<Check> ortho_suite(const Options& opts);
std::vector<Check> norms_suite(const Options& opts);
std::vector<Check> qbeta_suite(const Options& opts);
std::vector<Check> classical_limit_suite(const Options& opts);

bool all_pass(const std::vector<Check>& checks);

} // namespace qsu2::verify
