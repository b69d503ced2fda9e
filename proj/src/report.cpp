#include "psl213/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace psl213 {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Reported: return "reported";
    }
    return "?";
}

bool VerificationReport::all_passed() const {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

void VerificationReport::sort_canonical() {
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
}

const CheckResult* VerificationReport::find(const std::string& id) const {
    for (const auto& r : results)
        if (r.check_id == id) return &r;
    return nullptr;
}

namespace {

nlohmann::ordered_json config_json(const RunConfig& c) {
    return nlohmann::ordered_json{{"order", c.order},
                                  {"prime", std::to_string(c.effective_prime())},
                                  {"seed", std::to_string(c.seed)},
                                  {"precision", c.precision},
                                  {"trials", c.trials}};
}

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& c : r.results) {
        nlohmann::ordered_json item{{"check_id", c.check_id},
                                    {"status", to_string(c.status)},
                                    {"detail", c.detail}};
        if (c.verified_order)
            item["verified_order"] = *c.verified_order;
        else
            item["verified_order"] = nullptr;
        item["millis"] = c.millis;
        results.push_back(std::move(item));
    }
    return nlohmann::ordered_json{
        {"schema", "v1"}, {"suite", r.suite}, {"config", config_json(r.config)}, {"results", results}};
}

}  // namespace

std::string report_to_json(const VerificationReport& r) { return report_json(r).dump(2); }

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(report_json(r));
    return nlohmann::ordered_json{{"schema", "v1"}, {"reports", arr}}.dump(2);
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << " (order=" << r.config.order
       << ", prime=" << r.config.effective_prime() << ", seed=" << r.config.seed << ")\n";
    for (const auto& c : r.results) {
        os << "  [" << to_string(c.status) << "] " << c.check_id;
        if (c.verified_order) os << " (through q^" << *c.verified_order << ")";
        if (!c.detail.empty()) os << " - " << c.detail;
        os << "\n";
    }
    return os.str();
}

}  // namespace psl213
