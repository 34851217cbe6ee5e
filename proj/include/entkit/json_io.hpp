#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "entkit/concurrence.hpp"
#include "entkit/entangler.hpp"
#include "entkit/errors.hpp"
#include "entkit/state.hpp"

namespace entkit {

using ordered_json = nlohmann::ordered_json;

// ---- deterministic serialization ----------------------------------------
//
// Emitted JSON is a byte-level contract: fixed key order (insertion order
// of ordered_json), floats at 12 significant digits, negative zero folded
// into zero. nlohmann's own dump() uses shortest-round-trip floats, hence
// the custom writer.

inline std::string fmt_double(double v) {
    if (v == 0.0) v = 0.0; // drop the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace detail {

inline void escape_json_string(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

inline bool flat_array(const ordered_json& j) {
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

inline void dump_value(const ordered_json& j, std::string& out, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                escape_json_string(it.key(), out);
                out += ": ";
                dump_value(it.value(), out, depth + 1);
            }
            out += '\n';
            out += pad;
            out += '}';
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            if (flat_array(j)) {
                out += '[';
                bool first = true;
                for (const auto& e : j) {
                    if (!first) out += ", ";
                    first = false;
                    dump_value(e, out, depth);
                }
                out += ']';
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump_value(e, out, depth + 1);
            }
            out += '\n';
            out += pad;
            out += ']';
            return;
        }
        case ordered_json::value_t::string:
            escape_json_string(j.get_ref<const std::string&>(), out);
            return;
        case ordered_json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case ordered_json::value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            return;
        case ordered_json::value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            return;
        case ordered_json::value_t::number_float:
            out += fmt_double(j.get<double>());
            return;
        default:
            out += "null";
            return;
    }
}

} // namespace detail

inline std::string dump_deterministic(const ordered_json& j) {
    std::string out;
    detail::dump_value(j, out, 0);
    out += '\n';
    return out;
}

// ---- schema helpers ------------------------------------------------------

namespace detail {

inline const nlohmann::json& require_key(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw schema_error(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

inline int require_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer())
        throw schema_error(std::string(what) + " must be an integer");
    return j.get<int>();
}

inline std::vector<cplx> require_pair_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw schema_error(std::string(what) + " must be an array");
    std::vector<cplx> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw schema_error(std::string(what) +
                               " entries must be [re, im] number pairs");
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

inline nlohmann::json parse_or_throw(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string("JSON parse failure: ") + e.what());
    }
}

} // namespace detail

// ---- state ---------------------------------------------------------------

/// Reads {"m": …, "amplitudes": [[re, im], …]}. Length must be exactly 2^m;
/// making the state may still reject an all-zero vector downstream.
inline pure_state parse_state_json(const std::string& text, bool normalize = true) {
    const nlohmann::json j = detail::parse_or_throw(text);
    const int m = detail::require_int(detail::require_key(j, "m"), "m");
    if (m < 1 || m > 24) throw schema_error("m out of range");
    std::vector<cplx> amps =
        detail::require_pair_list(detail::require_key(j, "amplitudes"), "amplitudes");
    if (amps.size() != static_cast<std::size_t>(1) << m)
        throw schema_error("amplitudes length must be 2^m");
    return make_state(m, complex_vector(std::move(amps)), normalize);
}

inline ordered_json state_to_json(const pure_state& s) {
    ordered_json j;
    j["m"] = s.num_qubits();
    ordered_json amps = ordered_json::array();
    for (const cplx& a : s.amplitudes().entries())
        amps.push_back(ordered_json::array({a.real(), a.imag()}));
    j["amplitudes"] = std::move(amps);
    return j;
}

// ---- entangler -----------------------------------------------------------

struct entangler_input {
    int m = 1;
    std::vector<cplx> alphas;
    entangler_branch branch = entangler_branch::diagonal_blocks;
};

///// Reads {"m": …, "alphas": [[re, im], …], "branch": "diag"|"antidiag"}.
/// branch defaults to "diag" when absent.
inline entangler_input parse_entangler_json(const std::string& text) {
    const nlohmann::json j = detail::parse_or_throw(text);
    entangler_input in;
    in.m = detail::require_int(detail::require_key(j, "m"), "m");
    if (in.m < 1 || in.m > 24) throw schema_error("m out of range");
    in.alphas = detail::require_pair_list(detail::require_key(j, "alphas"), "alphas");
    if (in.alphas.size() != static_cast<std::size_t>(1) << in.m)
        throw schema_error("alphas length must be 2^m");
    if (j.contains("branch")) {
        if (!j.at("branch").is_string()) throw schema_error("branch must be a string");
        const std::string b = j.at("branch").get<std::string>();
        if (b == "diag")
            in.branch = entangler_branch::diagonal_blocks;
        else if (b == "antidiag")
            in.branch = entangler_branch::anti_diagonal_blocks;
        else
            throw schema_error("branch must be \"diag\" or \"antidiag\"");
    }
    return in;
}

inline const char* branch_string(entangler_branch b) {
    return b == entangler_branch::diagonal_blocks ? "diag" : "antidiag";
}

// ---- reports ---------------------------------------------------------------

inline const char* normalization_string(normalization_mode mode) {
    return mode == normalization_mode::raw ? "raw" : "canonical";
}

inline const char* enumeration_string(ghz_m1_enumeration mode) {
    return mode == ghz_m1_enumeration::paper ? "paper" : "full";
}

inline ordered_json report_to_json(const concurrence_report& rep) {
    ordered_json j;
    j["state"] = state_to_json(rep.state);
    j["tolerance"] = rep.tolerance;
    j["normalization"] = normalization_string(rep.policy);
    j["ghzm1"] = enumeration_string(rep.enumeration);
    ordered_json classes = ordered_json::array();
    for (const class_report& c : rep.classes) {
        ordered_json cls;
        cls["tag"] = tag_string(c.tag);
        ordered_json terms = ordered_json::array();
        for (const term_entry& t : c.terms) {
            ordered_json te;
            te["idx"] = t.idx;
            te["label"] = t.label;
            te["value"] = t.value;
            terms.push_back(std::move(te));
        }
        cls["terms"] = std::move(terms);
        cls["aggregate"] = c.aggregate;
        cls["nonzero"] = c.nonzero;
        classes.push_back(std::move(cls));
    }
    j["classes"] = std::move(classes);
    j["oracle_separable"] = rep.oracle_separable;
    j["consistent"] = rep.consistent;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

inline ordered_json entangler_summary_json(const entangler_matrix& z) {
    ordered_json j;
    j["m"] = z.m;
    j["branch"] = branch_string(z.branch);
    j["dimension"] = pow2(z.m);
    j["unitary"] = z.unitary;
    ordered_json alphas = ordered_json::array();
    for (const cplx& a : z.alphas)
        alphas.push_back(ordered_json::array({a.real(), a.imag()}));
    j["alphas"] = std::move(alphas);
    return j;
}

} // namespace entkit
