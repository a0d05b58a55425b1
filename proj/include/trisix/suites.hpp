#pragma once

// Named verification suites behind `verify --suite ...`, plus the count
// tables behind `count`.  Each suite returns a Report; exit-code policy
// (0 pass / 1 failure / 2 resource) is applied by the CLI layer.

#include <cstdint>

#include "trisix/report.hpp"
#include "trisix/scalar.hpp"

namespace trisix {

struct SuiteOptions {
    int n_lo = -1;  // -1 = suite default
    int n_hi = -1;
    int trials = 20;
    std::uint64_t seed = 20170217;
};

// suite: weights | relations | specializations | theorem-full |
//        corollary-u1 | schur | okada | ipi4 | q3-conjecture | htsasm-ratio
Report run_suite(const std::string& suite, const SuiteOptions& opt);

const std::vector<std::string>& suite_names();

struct CountRow {
    int n;                       // triangle order for dasasm, matrix order otherwise
    Integer count;               // enumerated / transfer-program count
    Integer formula;             // closed form when one exists (else equals count)
    bool has_formula = false;
    bool agree = true;
    Integer plus = 0, minus = 0;  // central-entry split when requested
    bool has_split = false;
};

// Per-n counts for a symmetry class; DASASM rows use the transfer dynamic
// program plus the product formula, other classes filter the full
// enumeration.
std::vector<CountRow> count_table(const std::string& cls, int n_lo, int n_hi, bool split_center);

std::string count_table_text(const std::vector<CountRow>& rows, const std::string& cls);
std::string count_table_csv(const std::vector<CountRow>& rows, const std::string& cls);
std::string count_table_json(const std::vector<CountRow>& rows, const std::string& cls);

}  // namespace trisix
