#pragma once

/**
 * @file report.hpp
 * @brief Verification records and their JSON / CSV / text encodings.
 *
 * A case passes iff its serialized lhs and rhs are identical strings; every
 * value type in this library has a canonical text form, so string equality
 * is structural equality.
 */

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace bernhankel {

using ParamValue = std::variant<long, std::string>;
using Params = std::map<std::string, ParamValue>;

enum class Status { pass, fail };

inline const char* to_string(Status s) { return s == Status::pass ? "pass" : "fail"; }

struct CheckCase {
    std::string identity;
    Params params;
    Status status = Status::fail;
    std::string lhs;
    std::string rhs;
    std::int64_t elapsed_ms = 0;
};

/// Builds a case whose status follows from comparing the two serializations.
inline CheckCase make_case(std::string identity, Params params, std::string lhs, std::string rhs) {
    CheckCase c;
    c.identity = std::move(identity);
    c.params = std::move(params);
    c.status = lhs == rhs ? Status::pass : Status::fail;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

inline CheckCase make_bool_case(std::string identity, Params params, bool holds) {
    return make_case(std::move(identity), std::move(params), holds ? "true" : "false", "true");
}

using Fragment = std::vector<CheckCase>;

struct VerificationReport {
    std::string suite;
    std::vector<CheckCase> cases;

    bool all_pass() const {
        return std::all_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.status == Status::pass; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(cases.begin(), cases.end(), [](const CheckCase& c) { return c.status == Status::fail; }));
    }

    /// Orders cases by (identity, params); emission order is then independent of scheduling.
    void sort_cases() {
        std::stable_sort(cases.begin(), cases.end(), [](const CheckCase& a, const CheckCase& b) {
            return std::tie(a.identity, a.params) < std::tie(b.identity, b.params);
        });
    }
};

inline std::string params_to_string(const Params& params) {
    std::string s;
    for (const auto& [key, value] : params) {
        if (!s.empty()) s += ';';
        s += key + '=';
        if (const auto* n = std::get_if<long>(&value)) s += std::to_string(*n);
        else s += std::get<std::string>(value);
    }
    return s;
}

inline nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = true) {
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& c : report.cases) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [key, value] : c.params) {
            if (const auto* n = std::get_if<long>(&value)) params[key] = *n;
            else params[key] = std::get<std::string>(value);
        }
        nlohmann::ordered_json item;
        item["identity"] = c.identity;
        item["params"] = std::move(params);
        item["status"] = to_string(c.status);
        item["lhs"] = c.lhs;
        item["rhs"] = c.rhs;
        if (include_timing) item["elapsed_ms"] = c.elapsed_ms;
        cases.push_back(std::move(item));
    }
    nlohmann::ordered_json out;
    out["suite"] = report.suite;
    out["cases"] = std::move(cases);
    return out;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

}  // namespace detail

inline std::string to_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "identity,params,status,lhs,rhs,elapsed_ms\n";
    for (const auto& c : report.cases) {
        os << detail::csv_field(c.identity) << ',' << detail::csv_field(params_to_string(c.params)) << ','
           << to_string(c.status) << ',' << detail::csv_field(c.lhs) << ',' << detail::csv_field(c.rhs) << ','
           << c.elapsed_ms << '\n';
    }
    return os.str();
}

inline std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "suite " << report.suite << ": " << report.cases.size() << " cases, " << report.failures() << " failed\n";
    for (const auto& c : report.cases) {
        os << (c.status == Status::pass ? "PASS " : "FAIL ") << c.identity << " [" << params_to_string(c.params)
           << "]";
        if (c.status == Status::fail) os << "\n    lhs: " << c.lhs << "\n    rhs: " << c.rhs;
        os << '\n';
    }
    return os.str();
}

}  // namespace bernhankel
