#pragma once

// Machine-readable verification reports: one item per checked case,
// rendered as JSON ({relation, case, status, witness?}), CSV or text.
// Item order is stable (sorted by case key at assembly time).

#include <string>
#include <vector>

namespace trisix {

enum class CheckStatus { Pass, Fail, ConjectureConfirmed, ConjectureViolated };

const char* status_name(CheckStatus s);

struct CheckItem {
    std::string relation;  // e.g. "YBE-vertical", "spec1", "table2"
    std::string case_key;  // e.g. "a1=in,a2=out,b1=in", "n=3,trial=7"
    CheckStatus status = CheckStatus::Pass;
    std::string witness;   // optional: point or value that failed
};

struct Report {
    std::string suite;
    std::vector<CheckItem> items;

    void add(std::string relation, std::string case_key, bool ok, std::string witness = "");
    void add_conjecture(std::string relation, std::string case_key, bool ok,
                        std::string witness = "");
    void merge(const Report& other);
    // Sorts items by (relation, case) for order-stable output.
    void stabilize();

    size_t failures() const;
    // True when no Fail items exist (conjecture statuses never fail a suite).
    bool all_passed() const { return failures() == 0; }

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
};

}  // namespace trisix
