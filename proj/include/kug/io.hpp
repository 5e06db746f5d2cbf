#pragma once

// JSON and CSV renderings. Coefficients are always decimal strings so that no
// consumer hits an integer-size limit.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

#include "kug/counting.hpp"
#include "kug/poly.hpp"

namespace kug {

using json = nlohmann::json;

template <class Coeff>
json coeffs_to_json(const std::vector<Coeff>& c) {
    json out = json::array();
    for (const Coeff& x : c) out.push_back(x.get_str());
    return out;
}

inline json to_json(const IntPoly& p) { return coeffs_to_json(p.coeffs()); }

inline IntPoly intpoly_from_json(const json& j) {
    if (!j.is_array()) throw InputError("polynomial JSON must be an array");
    std::vector<mpz_class> c;
    for (const json& e : j) {
        if (!e.is_string()) throw InputError("polynomial coefficients must be decimal strings");
        mpz_class v;
        if (v.set_str(e.get<std::string>(), 10) != 0) throw InputError("bad coefficient '" + e.get<std::string>() + "'");
        c.push_back(v);
    }
    IntPoly p(std::move(c));
    if (p.coeffs().size() != j.size()) throw InputError("polynomial JSON has trailing zero coefficients");
    return p;
}

inline json to_json(const RatFraction& x) {
    return json{{"num", coeffs_to_json(x.num().coeffs())}, {"den", coeffs_to_json(x.den().coeffs())}};
}

inline json to_json(const CountResult& r) {
    json levi = json::array();
    for (int b : r.mu.parts()) levi.push_back(b);
    json per_class = json::object();
    for (const auto& [lambda, term] : r.per_class_terms) per_class[lambda.to_string()] = to_json(term);
    return json{
        {"n", r.n},
        {"levi", levi},
        {"variable", "q"},
        {"coeffs_low_to_high", to_json(r.polynomial)},
        {"qminus1_coeffs", coeffs_to_json(r.qminus1_coeffs)},
        {"qminus1_nonneg", r.qminus1_nonneg},
        {"degree", r.polynomial.degree()},
        {"per_class", per_class},
    };
}

inline std::string csv_header() { return "n,levi,degree,coeffs_low_to_high"; }

// Levi and coefficient lists are ';'-separated inside their fields.
inline std::string to_csv_row(const CountResult& r) {
    std::string levi, coeffs;
    for (std::size_t i = 0; i < r.mu.parts().size(); ++i) levi += (i ? ";" : "") + std::to_string(r.mu.parts()[i]);
    for (std::size_t i = 0; i < r.polynomial.coeffs().size(); ++i)
        coeffs += (i ? ";" : "") + r.polynomial.coeffs()[i].get_str();
    return std::to_string(r.n) + "," + levi + "," + std::to_string(r.polynomial.degree()) + "," + coeffs;
}

} // namespace kug
