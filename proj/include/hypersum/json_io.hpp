#pragma once

#include <json.hpp>

#include "hypersum/numeric.hpp"
#include "hypersum/zeta_poly.hpp"

namespace hypersum {

/// {"mode":"raw"|"canonical","terms":[...]} with terms in deterministic
/// (weight, lex) order; raw terms carry "zeta_args", canonical terms
/// "pi2_power" + "odd_zetas"; coefficients as "p/q" strings. The empty-args
/// term is the rational constant.
inline nlohmann::json to_json(const ZetaPoly& poly) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, coeff] : poly.terms()) {
        nlohmann::json term;
        if (poly.mode() == ZetaMode::raw) {
            term["zeta_args"] = mono.args;
        } else {
            term["pi2_power"] = mono.pi2_power;
            term["odd_zetas"] = mono.args;
        }
        term["coeff"] = rational_to_string(coeff);
        terms.push_back(std::move(term));
    }
    return nlohmann::json{{"mode", poly.mode() == ZetaMode::raw ? "raw" : "canonical"}, {"terms", std::move(terms)}};
}

inline ZetaPoly zeta_poly_from_json(const nlohmann::json& j) {
    const ZetaMode mode = j.at("mode").get<std::string>() == "canonical" ? ZetaMode::canonical : ZetaMode::raw;
    ZetaPoly poly(mode);
    for (const auto& term : j.at("terms")) {
        const Rational coeff = rational_from_string(term.at("coeff").get<std::string>());
        if (mode == ZetaMode::raw) {
            poly += ZetaPoly::term(ZetaMonomial(0, term.at("zeta_args").get<std::vector<int>>()), coeff);
        } else {
            poly += ZetaPoly::term(ZetaMonomial(term.at("pi2_power").get<int>(),
                                                term.at("odd_zetas").get<std::vector<int>>()),
                                   coeff, ZetaMode::canonical);
        }
    }
    return poly;
}

inline std::string render_json(const ZetaPoly& poly) { return to_json(poly).dump(); }

/// {"spec":..., "symbolic":..., "numeric":..., "bound":..., "passed":...};
/// "bound" is the effective comparison bound max(tolerance, error_estimate).
inline nlohmann::json to_json(const VerificationReport& report) {
    const int digits = report.numeric.digits > 0 ? report.numeric.digits : 15;
    return nlohmann::json{{"spec", report.spec_name},
                          {"symbolic", report.symbolic.str()},
                          {"numeric", report.numeric.str()},
                          {"bound", report.effective_bound().str(digits)},
                          {"passed", report.passed}};
}

}  // namespace hypersum
