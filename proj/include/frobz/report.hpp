#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobz/genset.hpp"
#include "frobz/group.hpp"
#include "frobz/oracle.hpp"
#include "frobz/pair.hpp"

namespace frobz {

struct AnalysisReport {
    std::vector<std::int64_t> genset;
    std::optional<std::int64_t> frobenius_number; // absent when 1 generates
    std::vector<std::int64_t> frobenius_values;
    std::int64_t sylvester_count = 0; // positive Frobenius values
    std::vector<DeadEndReport> dead_ends;
    std::vector<std::int64_t> maximal_frobenius_values;
    std::map<std::string, bool> agreement_flags;

    bool operator==(const AnalysisReport&) const;
};

bool operator==(const DeadEndReport& lhs, const DeadEndReport& rhs);

// Full report: Frobenius census, BFS dead ends, geodesic-maximal Frobenius
// values, and cross-checks (closed form vs BFS on two-generator sets).
AnalysisReport analyze(const GenSet& set);

nlohmann::json to_json(const AnalysisReport& report);
AnalysisReport analysis_report_from_json(const nlohmann::json& j);
std::string to_text(const AnalysisReport& report);

struct SphereReport {
    std::vector<std::int64_t> genset;
    std::int64_t radius = 0;
    std::vector<std::vector<std::int64_t>> levels; // levels[n] = sphere of radius n
    std::vector<std::int64_t> frobenius_values;    // within the displayed ball

    bool operator==(const SphereReport&) const = default;
};

SphereReport sphere_report(const GenSet& set, std::int64_t radius);

nlohmann::json to_json(const SphereReport& report);
SphereReport sphere_report_from_json(const nlohmann::json& j);
std::string to_text(const SphereReport& report);

// Undirected graph with one node per element of the displayed ball, ranked
// by length; Frobenius values drawn as diamonds.
std::string to_dot(const SphereReport& report);

struct LengthReport {
    std::vector<std::int64_t> genset;
    std::int64_t value = 0;
    std::int64_t length = 0;
    // Aligned with genset: value == sum coefficients[i] * genset[i] and the
    // absolute coefficients sum to length. Filled on request.
    std::optional<std::vector<std::int64_t>> coefficients;
};

LengthReport length_report(const GenSet& set, std::int64_t value, bool witness);
nlohmann::json to_json(const LengthReport& report);
std::string to_text(const LengthReport& report);

struct DeadEndsReport {
    std::vector<std::int64_t> genset;
    std::optional<std::vector<DeadEnd>> closed;    // two-generator sets only
    std::optional<std::vector<DeadEndReport>> bfs;
    std::optional<bool> methods_agree; // set when both methods ran
};

DeadEndsReport dead_ends_report(const GenSet& set, const std::string& method);
nlohmann::json to_json(const DeadEndsReport& report);
std::string to_text(const DeadEndsReport& report);

struct FrobeniusReport {
    std::vector<std::int64_t> genset;
    std::optional<std::int64_t> frobenius_number;
    std::vector<std::int64_t> values;
    std::int64_t sylvester_count = 0;
};

FrobeniusReport frobenius_report(const GenSet& set);
nlohmann::json to_json(const FrobeniusReport& report);
std::string to_text(const FrobeniusReport& report);

nlohmann::json to_json(const ConstructionReport& report, const FiniteGroup& g);
std::string to_text(const ConstructionReport& report, const FiniteGroup& g);

} // namespace frobz
