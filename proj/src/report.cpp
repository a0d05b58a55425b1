#include "trisix/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace trisix {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::ConjectureConfirmed: return "CONJECTURE-CONFIRMED";
        case CheckStatus::ConjectureViolated: return "CONJECTURE-VIOLATED";
    }
    return "?";
}

void Report::add(std::string relation, std::string case_key, bool ok, std::string witness) {
    items.push_back(CheckItem{std::move(relation), std::move(case_key),
                              ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness)});
}

void Report::add_conjecture(std::string relation, std::string case_key, bool ok,
                            std::string witness) {
    items.push_back(CheckItem{std::move(relation), std::move(case_key),
                              ok ? CheckStatus::ConjectureConfirmed : CheckStatus::ConjectureViolated,
                              std::move(witness)});
}

void Report::merge(const Report& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
}

void Report::stabilize() {
    std::stable_sort(items.begin(), items.end(), [](const CheckItem& a, const CheckItem& b) {
        if (a.relation != b.relation) return a.relation < b.relation;
        return a.case_key < b.case_key;
    });
}

size_t Report::failures() const {
    size_t n = 0;
    for (const auto& it : items)
        if (it.status == CheckStatus::Fail) ++n;
    return n;
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["passed"] = all_passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& it : items) {
        nlohmann::json c;
        c["relation"] = it.relation;
        c["case"] = it.case_key;
        c["status"] = status_name(it.status);
        if (!it.witness.empty()) c["witness"] = it.witness;
        j["checks"].push_back(c);
    }
    return j.dump(2);
}

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "suite,relation,case,status,witness\n";
    for (const auto& it : items) {
        os << suite << ',' << it.relation << ',' << '"' << it.case_key << '"' << ','
           << status_name(it.status) << ',' << '"' << it.witness << '"' << '\n';
    }
    return os.str();
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& it : items) {
        os << "[" << status_name(it.status) << "] " << it.relation;
        if (!it.case_key.empty()) os << " :: " << it.case_key;
        if (!it.witness.empty()) os << "  (" << it.witness << ")";
        os << '\n';
    }
    os << suite << ": " << (all_passed() ? "all checks passed" : "FAILURES PRESENT") << " ("
       << items.size() << " checks, " << failures() << " failures)\n";
    return os.str();
}

}  // namespace trisix
