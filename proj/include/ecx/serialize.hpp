#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <json.hpp>

#include "ecx/curve.hpp"
#include "ecx/ext_field.hpp"
#include "ecx/keyflow.hpp"
#include "ecx/prime_field.hpp"
#include "ecx/rational.hpp"
#include "ecx/stat_lab.hpp"

namespace ecx {

using json = nlohmann::ordered_json;

namespace detail {

inline int64_t to_i64(int128 v, const char* what) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        raise(errc::arithmetic_overflow, std::string(what) + " exceeds 64 bits");
    return int64_t(v);
}

inline uint64_t json_u64(const json& j, const std::string& what) {
    if (!j.is_number_integer() || (j.is_number_integer() && j.get<int64_t>() < 0))
        raise(errc::invalid_parameter, what + " must be a non-negative integer");
    return j.get<uint64_t>();
}

} // namespace detail

// --- fields ---------------------------------------------------------------

inline json field_to_json(const PrimeField& f) { return json{{"p", f.modulus()}}; }

inline json field_to_json(const ExtField& f) {
    return json{{"p", f.p()}, {"n", f.degree()}, {"modulus", f.modulus_coeffs()}};
}

inline bool field_spec_is_extension(const json& j) { return j.contains("n") || j.contains("modulus"); }

inline PrimeField prime_field_from_json(const json& j) {
    if (!j.contains("p")) raise(errc::invalid_parameter, "field spec is missing \"p\"");
    return PrimeField(detail::json_u64(j.at("p"), "p"));
}

inline ExtField ext_field_from_json(const json& j) {
    if (!j.contains("p")) raise(errc::invalid_parameter, "field spec is missing \"p\"");
    uint64_t p = detail::json_u64(j.at("p"), "p");
    if (!j.contains("modulus"))
        raise(errc::invalid_parameter, "extension field spec needs a \"modulus\" array");
    std::vector<uint64_t> mod;
    for (const auto& c : j.at("modulus")) mod.push_back(detail::json_u64(c, "modulus coefficient"));
    if (j.contains("n") && detail::json_u64(j.at("n"), "n") + 1 != mod.size())
        raise(errc::invalid_parameter, "\"n\" disagrees with the modulus degree");
    return ExtField(p, std::move(mod));
}

// --- elements ---------------------------------------------------------------

inline json element_to_json(const Fp& e) { return json(e.value()); }

inline json element_to_json(const Fq& e) { return json(e.coeffs()); }

inline Fp element_from_json(const PrimeField& f, const json& j) {
    return f.element(detail::json_u64(j, "field element"));
}

inline Fq element_from_json(const ExtField& f, const json& j) {
    if (j.is_number_integer()) return f.from_base(detail::json_u64(j, "field element"));
    if (!j.is_array()) raise(errc::invalid_parameter, "extension element must be a coefficient array");
    std::vector<uint64_t> c;
    for (const auto& v : j) c.push_back(detail::json_u64(v, "coefficient"));
    return f.element(std::move(c));
}

// --- points -----------------------------------------------------------------

template <class Field>
json point_to_json(const Point<Field>& P) {
    if (P.is_infinity()) return json("infinity");
    return json{{"x", element_to_json(P.x())}, {"y", element_to_json(P.y())}};
}

template <class Field>
Point<Field> point_from_json(const Curve<Field>& c, const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "infinity") return c.infinity();
        raise(errc::invalid_parameter, "unknown point literal '" + j.get<std::string>() + "'");
    }
    if (j.is_array()) {
        if (j.size() != 2) raise(errc::invalid_parameter, "point array must be [x, y]");
        return c.point(element_from_json(c.field(), j[0]), element_from_json(c.field(), j[1]));
    }
    if (!j.contains("x") || !j.contains("y"))
        raise(errc::invalid_parameter, "point object needs \"x\" and \"y\"");
    return c.point(element_from_json(c.field(), j.at("x")), element_from_json(c.field(), j.at("y")));
}

// --- curves -----------------------------------------------------------------

/* Owns the field referenced by its curve; exactly one of the two branches is
 * populated, decided by the field spec. */
struct LoadedCurve {
    std::unique_ptr<PrimeField> prime_field;
    std::unique_ptr<Curve<PrimeField>> prime_curve;
    std::unique_ptr<ExtField> ext_field;
    std::unique_ptr<Curve<ExtField>> ext_curve;

    bool is_prime() const { return prime_curve != nullptr; }
};

inline LoadedCurve load_curve(const json& spec, bool audit_mode = true) {
    if (!spec.contains("field") || !spec.contains("a") || !spec.contains("b"))
        raise(errc::invalid_parameter, "curve spec needs \"field\", \"a\" and \"b\"");
    LoadedCurve lc;
    const json& fj = spec.at("field");
    if (field_spec_is_extension(fj)) {
        lc.ext_field = std::make_unique<ExtField>(ext_field_from_json(fj));
        lc.ext_curve = std::make_unique<Curve<ExtField>>(*lc.ext_field,
                                                         element_from_json(*lc.ext_field, spec.at("a")),
                                                         element_from_json(*lc.ext_field, spec.at("b")),
                                                         audit_mode);
    } else {
        lc.prime_field = std::make_unique<PrimeField>(prime_field_from_json(fj));
        lc.prime_curve = std::make_unique<Curve<PrimeField>>(
            *lc.prime_field, element_from_json(*lc.prime_field, spec.at("a")),
            element_from_json(*lc.prime_field, spec.at("b")), audit_mode);
    }
    return lc;
}

template <class Field>
json curve_to_json(const Curve<Field>& c) {
    return json{{"field", field_to_json(c.field())},
                {"a", element_to_json(c.a())},
                {"b", element_to_json(c.b())}};
}

// --- statistics -------------------------------------------------------------

inline json rational_to_json(const rational& r) {
    return json{{"num", detail::to_i64(r.num(), "numerator")},
                {"den", detail::to_i64(r.den(), "denominator")},
                {"value", r.to_double()}};
}

/* outcome_base 0 renders outcomes as integers; otherwise as base-p digit
 * vectors of length k. */
inline json distribution_to_json(const ExactDistribution& d, uint64_t outcome_base, int k) {
    json counts = json::array();
    for (const auto& [outcome, c] : d.counts) {
        json o;
        if (outcome_base == 0) {
            o = outcome;
        } else {
            o = json::array();
            uint64_t v = outcome;
            for (int i = 0; i < k; ++i) {
                o.push_back(v % outcome_base);
                v /= outcome_base;
            }
        }
        counts.push_back(json{{"outcome", o}, {"count", c}});
    }
    return json{{"total", d.total}, {"excluded", d.excluded}, {"counts", counts}};
}

inline json audit_report_to_json(const AuditReport& rep) {
    json bounds = json::object();
    for (const auto& [name, value] : rep.bounds) bounds[name] = value;
    json checks = json::object();
    for (const auto& [name, holds] : rep.lemma_checks) checks[name] = holds;
    json observations = json::object();
    for (const auto& [name, holds] : rep.observations) observations[name] = holds;
    return json{{"extractor", rep.extractor},
                {"k", rep.k},
                {"e", rep.e},
                {"field", rep.field_desc},
                {"curve", rep.curve_desc},
                {"generator1", rep.gen1_desc},
                {"generator2", rep.gen2_desc},
                {"r", rep.r},
                {"t", rep.t},
                {"output_space", rep.space},
                {"distribution", distribution_to_json(rep.dist, rep.outcome_base, rep.k)},
                {"delta", rational_to_json(rep.delta)},
                {"collision", rational_to_json(rep.col)},
                {"min_entropy_bits", rep.min_entropy_bits},
                {"excluded_mass", rational_to_json(rep.excluded_mass)},
                {"bounds", bounds},
                {"up_to_constant", rep.up_to_constant},
                {"lemma_checks", checks},
                {"observations", observations},
                {"kmax", rep.kmax},
                {"feasible", rep.feasible},
                {"all_lemmas_hold", rep.all_lemmas_hold}};
}

inline std::string audit_report_to_text(const AuditReport& rep) {
    auto line = [](const std::string& key, const std::string& value) {
        std::string k = key;
        k.resize(std::max<size_t>(30, k.size() + 2), ' ');
        return "  " + k + value + "\n";
    };
    std::string out;
    out += "audit: " + rep.extractor + " (k = " + std::to_string(rep.k) +
           ", e = " + std::to_string(rep.e) + ")\n";
    out += line("curve", rep.curve_desc);
    out += line("generator 1", rep.gen1_desc);
    out += line("generator 2", rep.gen2_desc);
    out += line("pairs", std::to_string(rep.r) + " x " + std::to_string(rep.t));
    out += line("output space", std::to_string(rep.space));
    out += line("total / excluded",
                std::to_string(rep.dist.total) + " / " + std::to_string(rep.dist.excluded));
    out += line("delta", rep.delta.to_string() + " ~ " + std::to_string(rep.delta.to_double()));
    out += line("collision", rep.col.to_string() + " ~ " + std::to_string(rep.col.to_double()));
    out += line("min-entropy (bits)", std::to_string(rep.min_entropy_bits));
    out += line("excluded mass", rep.excluded_mass.to_string());
    for (const auto& [name, value] : rep.bounds) {
        bool flagged = false;
        for (const auto& u : rep.up_to_constant) flagged = flagged || u == name;
        out += line(name, std::to_string(value) + (flagged ? "  (up to unspecified constant)" : ""));
    }
    for (const auto& [name, holds] : rep.lemma_checks)
        out += line(name, holds ? "holds" : "VIOLATED");
    for (const auto& [name, holds] : rep.observations)
        out += line(name, std::string(holds ? "yes" : "no") +
                              "  (informational; statistics are conditioned on non-identity sums)");
    out += line("kmax at e=" + std::to_string(rep.e), std::to_string(rep.kmax));
    out += line("feasible (k <= kmax)", rep.feasible ? "yes" : "no");
    return out;
}

// --- key flow ---------------------------------------------------------------

template <class Field>
json exchange_to_json(const DhExchange<Field>& ex) {
    return json{{"generator", point_to_json(ex.generator)},
                {"order", ex.order},
                {"secret_a", ex.secret_a},
                {"secret_b", ex.secret_b},
                {"public_a", point_to_json(ex.public_a)},
                {"public_b", point_to_json(ex.public_b)},
                {"shared", point_to_json(ex.shared)}};
}

template <class Field>
json transcript_to_json(const DhTranscript<Field>& tr) {
    json j{{"mode", dh_mode_name(tr.mode)}, {"k", tr.k}, {"exchange1", exchange_to_json(tr.exchange1)}};
    if (tr.exchange2) j["exchange2"] = exchange_to_json(*tr.exchange2);
    if constexpr (std::is_same_v<Field, PrimeField>) {
        j["key"] = json{{"value", tr.key.value}, {"bits", tr.key.to_binary_string()}};
    } else {
        j["key"] = tr.key.coeffs;
    }
    return j;
}

} // namespace ecx
