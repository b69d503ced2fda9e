#include "psl213/poly.hpp"

#include <cctype>

namespace psl213 {

PolyQ parse_poly(int nvars, std::string_view text) {
    std::vector<PolyQ::Term> terms;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        long sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected +/- between terms");
        }
        first = false;
        skip_ws();
        Integer coef = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::string num;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
            coef = Integer(num);
        }
        Monomial m;
        for (;;) {
            skip_ws();
            if (i >= text.size() || text[i] != 'z') break;
            ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("expected variable index after z");
            int var = text[i++] - '1';
            if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
            int e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string num;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
                if (num.empty()) throw std::invalid_argument("expected exponent digits");
                e = std::stoi(num);
            }
            m.e[var] = static_cast<std::uint8_t>(m.e[var] + e);
        }
        terms.emplace_back(m, rat(sign) * Rational(coef));
        skip_ws();
    }
    return PolyQ::from_terms(nvars, std::move(terms));
}

namespace {
template <class P, class F>
std::string poly_text_impl(const P& p, F&& coeff_text) {
    std::ostringstream os;
    for (const auto& [m, c] : p.terms()) {
        for (int i = 0; i < p.nvars(); ++i) os << static_cast<int>(m.e[i]) << ' ';
        os << ": " << coeff_text(c) << '\n';
    }
    return os.str();
}
}  // namespace

std::string poly_to_text(const PolyQ& p) {
    return poly_text_impl(p, [](const Rational& c) { return rat_str(c); });
}

std::string poly_to_text(const PolyC& p) {
    return poly_text_impl(p, [](const Cyclotomic& c) {
        // exponent:rational pairs of the canonical coordinates
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
            if (is_zero(c.coeffs()[i])) continue;
            if (!first) os << ',';
            first = false;
            os << i << ':' << rat_str(c.coeffs()[i]);
        }
        if (first) os << "0:0";
        return os.str();
    });
}

}  // namespace psl213
