#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "psl213/suites.hpp"

using namespace psl213;

namespace {

std::string golden_path(const std::string& name) {
    return std::string(PSL213_GOLDEN_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

RunConfig quick_config() {
    RunConfig cfg;
    cfg.order = 5;  // acceptance floor for series checks
    return cfg;
}

}  // namespace

TEST_CASE("every suite passes at the acceptance floor") {
    RunConfig cfg = quick_config();
    for (const auto& r : run_suites(cfg)) {
        INFO(r.suite);
        CHECK(r.all_passed());
        for (const auto& c : r.results) {
            INFO(c.check_id << ": " << c.detail);
            CHECK(c.status != CheckStatus::Fail);
        }
    }
}

TEST_CASE("coverage: emitted checks equal the frozen manifest and span the identity catalog") {
    RunConfig cfg = quick_config();
    std::vector<VerificationReport> reports = run_suites(cfg);

    std::set<std::string> emitted;
    for (const auto& r : reports)
        for (const auto& c : r.results) {
            auto [it, inserted] = emitted.insert(c.check_id);
            CHECK(inserted);  // check ids unique across the whole run
        }

    std::set<std::string> manifest;
    std::set<std::string> covered;
    for (const ManifestEntry& e : check_manifest()) {
        manifest.insert(e.check_id);
        std::stringstream ss(e.covers);
        std::string label;
        while (std::getline(ss, label, ',')) covered.insert(label);
    }
    CHECK(emitted == manifest);
    for (const char* label : required_identity_labels()) {
        INFO(label);
        CHECK(covered.count(label) == 1);
    }
}

TEST_CASE("reports are deterministic given the config") {
    RunConfig cfg = quick_config();
    cfg.suite = "invariance";
    VerificationReport a = run_invariance_suite(cfg);
    VerificationReport b = run_invariance_suite(cfg);
    for (auto* r : {&a, &b})
        for (auto& c : r->results) c.millis = 0;  // wall-clock field excluded
    CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("json schema shape") {
    RunConfig cfg = quick_config();
    VerificationReport r = run_prop32_suite(cfg);
    nlohmann::json j = nlohmann::json::parse(report_to_json(r));
    CHECK(j.at("schema") == "v1");
    CHECK(j.at("suite") == "prop32");
    CHECK(j.at("config").contains("order"));
    CHECK(j.at("config").contains("prime"));
    CHECK(j.at("config").contains("seed"));
    REQUIRE(j.at("results").is_array());
    for (const auto& item : j.at("results")) {
        CHECK(item.contains("check_id"));
        CHECK(item.contains("status"));
        CHECK(item.contains("detail"));
        CHECK(item.contains("verified_order"));
        CHECK(item.contains("millis"));
    }
}

TEST_CASE("suite selector") {
    CHECK(known_suite("all"));
    CHECK(known_suite("modular"));
    CHECK_FALSE(known_suite("nonsense"));
    RunConfig cfg = quick_config();
    cfg.suite = "group";
    auto reports = run_suites(cfg);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].suite == "group");
    CHECK(reports[0].results.size() == 6);
}

TEST_CASE("closure bound below the group order is reported as a failure") {
    RunConfig cfg = quick_config();
    cfg.closure_bound = 1000;
    VerificationReport r = run_group_suite(cfg);
    const CheckResult* c = r.find("grp-order-1092");
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::Fail);
}

TEST_CASE("mutation sensitivity at suite level") {
    RunConfig cfg = quick_config();
    Monomial m1;  // 3 z3 z5 z6 in the second cubic
    m1.e[2] = 1; m1.e[4] = 1; m1.e[5] = 1;
    Monomial m2;  // -3 z1 z3 z4 in the eighth cubic
    m2.e[0] = 1; m2.e[2] = 1; m2.e[3] = 1;
    Monomial m3;  // z1 z2 z3, the ground cubic
    m3.e[0] = 1; m3.e[1] = 1; m3.e[2] = 1;
    for (const DTableMutation& mut :
         {DTableMutation{2, m1}, DTableMutation{8, m2}, DTableMutation{0, m3}}) {
        VerificationReport r = run_forms_suite(cfg, mut);
        INFO("form index " << mut.form_index);
        CHECK_FALSE(r.all_passed());
    }
    // pristine table passes
    CHECK(run_forms_suite(cfg).all_passed());
}

TEST_CASE("golden catalog exports") {
    CHECK(export_catalog_text("A") == read_file(golden_path("catalog_A.txt")));
    CHECK(export_catalog_text("D") == read_file(golden_path("catalog_D.txt")));
    CHECK(export_catalog_text("phi") == read_file(golden_path("catalog_phi.txt")));
    CHECK(export_catalog_text("icosahedral") == read_file(golden_path("catalog_icosahedral.txt")));
    CHECK_THROWS_AS(export_catalog_text("nope"), std::invalid_argument);
}
