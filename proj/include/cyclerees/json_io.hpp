#pragma once

/**
 * @file json_io.hpp
 * @brief JSON serialization of Hilbert series, class records and Groebner bases.
 */

#include "classify.hpp"
#include "groebner.hpp"
#include "monomial_ideal.hpp"
#include "text.hpp"

#include <nlohmann/json.hpp>

namespace cyclerees {

inline nlohmann::json to_json(const hilbert_series& h) {
    return {{"numerator", h.numerator}, {"denom_power", h.denom_power}};
}

inline hilbert_series hilbert_series_from_json(const nlohmann::json& j) {
    return {j.at("numerator").get<std::vector<std::int64_t>>(), j.at("denom_power").get<std::size_t>()};
}

/// Record as JSON; stage timings are included only when `timings` is set.
inline nlohmann::json to_json(const class_record& r, bool timings = false) {
    nlohmann::json j{{"n", r.n}, {"t", r.t}, {"class", to_string(r.cls)}, {"gcd", r.gcd}, {"fiber_dim", r.fiber_dim}};
    if (timings) {
        j["ms"] = r.ms;
    }
    if (r.witness) {
        j["witness"] = *r.witness;
    }
    return j;
}

inline nlohmann::json to_json(const std::vector<polynomial>& polys) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : polys) {
        arr.push_back(to_string(p));
    }
    return arr;
}

inline nlohmann::json to_json(const groebner_basis& gb) {
    nlohmann::json j{{"order", gb.order->descriptor()}, {"basis", to_json(gb.elements)}};
    if (gb.degree_bound) {
        j["degree_bound"] = *gb.degree_bound;
    }
    return j;
}

inline nlohmann::json to_json(const gb_certificate& cert, const order_ptr& order, std::span<const polynomial> G) {
    nlohmann::json j{{"order", order->descriptor()},
                     {"basis", to_json(std::vector<polynomial>(G.begin(), G.end()))},
                     {"is_groebner", cert.is_groebner}};
    if (cert.failing_pair) {
        j["failing_pair"] = {cert.failing_pair->first, cert.failing_pair->second};
        j["remainder"] = to_string(cert.remainder);
    }
    return j;
}

}  // namespace cyclerees
