#include "psl213/group13.hpp"

#include <fstream>
#include <sstream>

namespace psl213 {

namespace {

// exponent pairs (a, b) for the entries zeta^a - zeta^b of the symmetric generator
constexpr int kSPairs[6][6][2] = {
    {{12, 1}, {10, 3}, {4, 9}, {5, 8}, {2, 11}, {6, 7}},
    {{10, 3}, {4, 9}, {12, 1}, {2, 11}, {6, 7}, {5, 8}},
    {{4, 9}, {12, 1}, {10, 3}, {6, 7}, {5, 8}, {2, 11}},
    {{5, 8}, {2, 11}, {6, 7}, {1, 12}, {3, 10}, {9, 4}},
    {{2, 11}, {6, 7}, {5, 8}, {3, 10}, {9, 4}, {1, 12}},
    {{6, 7}, {5, 8}, {2, 11}, {9, 4}, {1, 12}, {3, 10}},
};

constexpr int kTExponents[6] = {7, 11, 8, 6, 2, 5};

}  // namespace

CycloMatrix gen_S() {
    CycloMatrix m(6, 13);
    // -1/sqrt(13) = -sqrt(13)/13
    Cyclotomic factor = sqrt13().scaled(rat(-1, 13));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Cyclotomic d = Cyclotomic::zeta(13, kSPairs[i][j][0]) - Cyclotomic::zeta(13, kSPairs[i][j][1]);
            m.at(i, j) = factor * d;
        }
    return m;
}

CycloMatrix gen_T() {
    CycloMatrix m(6, 13);
    for (int i = 0; i < 6; ++i) m.at(i, i) = Cyclotomic::zeta(13, kTExponents[i]);
    return m;
}

CycloMatrix gen_P() {
    CycloMatrix S = gen_S(), T = gen_T();
    return S * T.pow(12) * S;
}

CycloMatrix gen_Q() { return gen_S() * gen_T().pow(3); }

CycloMatrix build_H_word() {
    CycloMatrix P = gen_P(), Q = gen_Q();
    return Q.pow(5) * P.pow(4) * Q.pow(6) * P.pow(8) * Q.pow(5) * P.pow(5) * Q;
}

CycloMatrix h_signed_permutation() {
    CycloMatrix h(6, 13);
    Cyclotomic one = Cyclotomic::one(13);
    h.at(0, 5) = one;
    h.at(1, 3) = one;
    h.at(2, 4) = one;
    h.at(3, 2) = -one;
    h.at(4, 0) = -one;
    h.at(5, 1) = -one;
    return h;
}

bool RelationsResult::projectively_trivial() const {
    auto pm_one = [](const std::optional<Cyclotomic>& c) {
        if (!c || !c->is_rational()) return false;
        Rational v = c->rational_value();
        return v == 1 || v == -1;
    };
    return pm_one(s_squared) && pm_one(t_pow13) && pm_one(st_cubed);
}

bool RelationsResult::strictly_trivial() const {
    auto one = [](const std::optional<Cyclotomic>& c) {
        return c && c->is_rational() && c->rational_value() == 1;
    };
    return one(s_squared) && one(t_pow13) && one(st_cubed);
}

RelationsResult relations_check() {
    CycloMatrix S = gen_S(), T = gen_T();
    CycloMatrix I = CycloMatrix::identity(6, 13);
    RelationsResult r;
    r.s_squared = (S * S).scalar_multiple_of(I);
    r.t_pow13 = T.pow(13).scalar_multiple_of(I);
    r.st_cubed = (S * T).pow(3).scalar_multiple_of(I);
    return r;
}

std::string generator_content_hash() {
    // FNV-1a over the canonical serialization of the exact generators
    std::string data = gen_S().key() + gen_T().key();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

void save_group_cache(const std::filesystem::path& file, const MatrixGroup& g) {
    std::ofstream os(file);
    if (!os) throw std::runtime_error("cannot write group cache: " + file.string());
    os << "psl213-group-cache v1 " << generator_content_hash() << "\n";
    os << g.elements.size() << " " << g.projective_order << " "
       << (g.contains_minus_identity ? 1 : 0) << "\n";
    for (const auto& m : g.elements) {
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) {
                const auto& coeffs = m.at(i, j).coeffs();
                bool first = true;
                for (std::size_t k = 0; k < coeffs.size(); ++k) {
                    if (is_zero(coeffs[k])) continue;
                    if (!first) os << ',';
                    first = false;
                    os << k << ':' << rat_str(coeffs[k]);
                }
                if (first) os << "0:0";
                os << (j + 1 < m.size() ? ' ' : '\n');
            }
    }
}

std::optional<MatrixGroup> load_group_cache(const std::filesystem::path& file) {
    std::ifstream is(file);
    if (!is) return std::nullopt;
    std::string tag, version, hash;
    if (!(is >> tag >> version >> hash)) return std::nullopt;
    if (tag != "psl213-group-cache" || version != "v1" || hash != generator_content_hash())
        return std::nullopt;
    std::size_t count = 0, proj = 0;
    int has_neg = 0;
    if (!(is >> count >> proj >> has_neg)) return std::nullopt;
    MatrixGroup g;
    g.order = count;
    g.projective_order = proj;
    g.contains_minus_identity = has_neg != 0;
    g.elements.reserve(count);
    for (std::size_t e = 0; e < count; ++e) {
        CycloMatrix m(6, 13);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                std::string cell;
                if (!(is >> cell)) return std::nullopt;
                std::vector<std::pair<long, Rational>> terms;
                std::stringstream ss(cell);
                std::string part;
                while (std::getline(ss, part, ',')) {
                    auto colon = part.find(':');
                    if (colon == std::string::npos) return std::nullopt;
                    long k = std::stol(part.substr(0, colon));
                    terms.emplace_back(k, rat_parse(part.substr(colon + 1)));
                }
                m.at(i, j) = Cyclotomic::from_terms(13, terms);
            }
        g.elements.push_back(std::move(m));
    }
    return g;
}

}  // namespace psl213
