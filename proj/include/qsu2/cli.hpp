#pragma once

#include <string>

#include "qsu2/qparam.hpp"

namespace qsu2::cli {

// exit-code contract
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
};

// "lo:hi:n" with n >= 1
GridSpec parse_grid(const std::string& text);

// "real:2.0" or "circle:0.3"
QParam parse_q_spec(const std::string& text, int guard_order = QParam::kDefaultGuardOrder);

// Full command-line entry point; never throws.
int run(int argc, const char* const* argv);

} // namespace qsu2::cli
