#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psl213/fp.hpp"

namespace psl213 {

enum class CheckStatus { Pass, Fail, Reported };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string check_id;
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
    std::optional<long> verified_order;  // q-order through which a series claim was compared
    long millis = 0;
};

struct RunConfig {
    std::string suite = "all";
    int order = 12;               // q-order of accuracy for series checks
    std::uint64_t prime = 0;      // 0 = the frozen default
    std::uint64_t seed = 20250801;
    int precision = 128;          // mantissa bits for numeric checks
    int trials = 2;               // random points per probabilistic identity
    std::size_t closure_bound = 5000;
    bool json = false;
    std::optional<std::string> cache_path;

    std::uint64_t effective_prime() const { return prime ? prime : kDefaultTestPrime; }
};

struct VerificationReport {
    std::string suite;
    RunConfig config;
    std::vector<CheckResult> results;

    bool all_passed() const;
    void sort_canonical();
    const CheckResult* find(const std::string& id) const;
};

// schema "v1": { schema, suite, config: {...}, results: [...] }
std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);
std::string report_to_text(const VerificationReport& r);

}  // namespace psl213
