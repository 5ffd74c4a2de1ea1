#include "frobz/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "frobz/pair.hpp"
#include "frobz/semigroup.hpp"

namespace frobz {

using nlohmann::json;

bool operator==(const DeadEndReport& lhs, const DeadEndReport& rhs) {
    return lhs.value == rhs.value && lhs.length == rhs.length &&
           lhs.strict == rhs.strict && lhs.depth == rhs.depth;
}

bool AnalysisReport::operator==(const AnalysisReport& o) const {
    return genset == o.genset && frobenius_number == o.frobenius_number &&
           frobenius_values == o.frobenius_values &&
           sylvester_count == o.sylvester_count && dead_ends == o.dead_ends &&
           maximal_frobenius_values == o.maximal_frobenius_values &&
           agreement_flags == o.agreement_flags;
}

AnalysisReport analyze(const GenSet& set) {
    AnalysisReport report;
    report.genset = set.gens();
    AperyTable apery(set);
    if (apery.modulus() != 1) {
        report.frobenius_number = apery.frobenius_number();
        report.frobenius_values = frobenius_values(set);
        report.maximal_frobenius_values = maximal_frobenius_values(set);
    }
    report.sylvester_count = static_cast<std::int64_t>(
        std::count_if(report.frobenius_values.begin(),
                      report.frobenius_values.end(),
                      [](std::int64_t v) { return v > 0; }));
    report.dead_ends = find_dead_ends(set);
    std::vector<std::int64_t> bfs_values;
    bfs_values.reserve(report.dead_ends.size());
    for (const DeadEndReport& d : report.dead_ends) bfs_values.push_back(d.value);
    report.agreement_flags["deadends_vs_maximal_frobenius"] =
        bfs_values == report.maximal_frobenius_values;
    if (set.size() == 2) {
        const GenPair pair(set.gens()[0], set.gens()[1]);
        const std::vector<DeadEnd> closed = dead_ends_closed(pair);
        bool agree = closed.size() == report.dead_ends.size();
        for (std::size_t i = 0; agree && i < closed.size(); ++i) {
            agree = closed[i].value == report.dead_ends[i].value &&
                    closed[i].length == report.dead_ends[i].length &&
                    closed[i].strict == report.dead_ends[i].strict;
        }
        report.agreement_flags["closed_vs_bfs"] = agree;
        report.agreement_flags["frobenius_values_closed_vs_apery"] =
            frobenius_values(pair) == report.frobenius_values;
    }
    return report;
}

namespace {

json dead_end_to_json(const DeadEndReport& d) {
    return json{{"value", d.value},
                {"length", d.length},
                {"strict", d.strict},
                {"depth", d.depth}};
}

DeadEndReport dead_end_from_json(const json& j) {
    return {j.at("value").get<std::int64_t>(), j.at("length").get<std::int64_t>(),
            j.at("strict").get<bool>(), j.at("depth").get<std::int64_t>()};
}

std::string join(const std::vector<std::int64_t>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ' ';
        os << values[i];
    }
    return os.str();
}

std::string genset_brace(const std::vector<std::int64_t>& gens) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ", ";
        os << gens[i];
    }
    os << '}';
    return os.str();
}

} // namespace

json to_json(const AnalysisReport& r) {
    json dead = json::array();
    for (const DeadEndReport& d : r.dead_ends) dead.push_back(dead_end_to_json(d));
    return json{
        {"genset", r.genset},
        {"frobenius_number",
         r.frobenius_number ? json(*r.frobenius_number) : json()},
        {"frobenius_values", r.frobenius_values},
        {"sylvester_count", r.sylvester_count},
        {"dead_ends", dead},
        {"maximal_frobenius_values", r.maximal_frobenius_values},
        {"agreement_flags", r.agreement_flags},
    };
}

AnalysisReport analysis_report_from_json(const json& j) {
    AnalysisReport r;
    r.genset = j.at("genset").get<std::vector<std::int64_t>>();
    if (!j.at("frobenius_number").is_null()) {
        r.frobenius_number = j.at("frobenius_number").get<std::int64_t>();
    }
    r.frobenius_values = j.at("frobenius_values").get<std::vector<std::int64_t>>();
    r.sylvester_count = j.at("sylvester_count").get<std::int64_t>();
    for (const json& d : j.at("dead_ends")) {
        r.dead_ends.push_back(dead_end_from_json(d));
    }
    r.maximal_frobenius_values =
        j.at("maximal_frobenius_values").get<std::vector<std::int64_t>>();
    r.agreement_flags = j.at("agreement_flags").get<std::map<std::string, bool>>();
    return r;
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "genset: " << genset_brace(r.genset) << '\n';
    if (r.frobenius_number) {
        os << "frobenius number: " << *r.frobenius_number << '\n';
    } else {
        os << "frobenius number: none (1 is a generator)\n";
    }
    os << "frobenius values (" << r.frobenius_values.size()
       << "): " << join(r.frobenius_values) << '\n';
    os << "positive frobenius values (sylvester count): " << r.sylvester_count
       << '\n';
    os << "dead ends (" << r.dead_ends.size() << "):\n";
    for (const DeadEndReport& d : r.dead_ends) {
        os << "  value " << d.value << "  length " << d.length << "  strict "
           << (d.strict ? "yes" : "no") << "  depth " << d.depth << '\n';
    }
    os << "maximal frobenius values: " << join(r.maximal_frobenius_values)
       << '\n';
    os << "cross-checks:\n";
    for (const auto& [name, ok] : r.agreement_flags) {
        os << "  " << name << ": " << (ok ? "ok" : "MISMATCH") << '\n';
    }
    return os.str();
}

SphereReport sphere_report(const GenSet& set, std::int64_t radius) {
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    SphereReport report;
    report.genset = set.gens();
    report.radius = radius;
    LengthTable table(set, radius * set.max());
    for (std::int64_t n = 0; n <= radius; ++n) {
        report.levels.push_back(sphere(table, n));
    }
    AperyTable apery(set);
    if (apery.modulus() != 1) {
        for (const auto& level : report.levels) {
            for (std::int64_t c : level) {
                if (apery.classify(c) == Classification::Frobenius) {
                    report.frobenius_values.push_back(c);
                }
            }
        }
        std::sort(report.frobenius_values.begin(), report.frobenius_values.end());
    }
    return report;
}

json to_json(const SphereReport& r) {
    return json{
        {"genset", r.genset},
        {"radius", r.radius},
        {"levels", r.levels},
        {"frobenius_values", r.frobenius_values},
    };
}

SphereReport sphere_report_from_json(const json& j) {
    SphereReport r;
    r.genset = j.at("genset").get<std::vector<std::int64_t>>();
    r.radius = j.at("radius").get<std::int64_t>();
    r.levels = j.at("levels").get<std::vector<std::vector<std::int64_t>>>();
    r.frobenius_values =
        j.at("frobenius_values").get<std::vector<std::int64_t>>();
    return r;
}

std::string to_text(const SphereReport& r) {
    std::ostringstream os;
    os << "genset: " << genset_brace(r.genset) << '\n';
    for (std::size_t n = 0; n < r.levels.size(); ++n) {
        os << "level " << n << ": " << join(r.levels[n]) << '\n';
    }
    return os.str();
}

std::string to_dot(const SphereReport& r) {
    std::ostringstream os;
    os << "graph spheres {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle];\n";
    std::set<std::int64_t> shown;
    for (std::size_t n = 0; n < r.levels.size(); ++n) {
        os << "  { rank=same;";
        for (std::int64_t c : r.levels[n]) {
            os << " \"" << c << "\";";
            shown.insert(c);
        }
        os << " }\n";
    }
    for (std::int64_t f : r.frobenius_values) {
        os << "  \"" << f << "\" [shape=diamond];\n";
    }
    for (std::int64_t c : shown) {
        for (std::int64_t s : r.genset) {
            if (shown.count(c + s)) {
                os << "  \"" << c << "\" -- \"" << c + s << "\";\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

LengthReport length_report(const GenSet& set, std::int64_t value, bool witness) {
    LengthReport report;
    report.genset = set.gens();
    report.value = value;
    if (set.size() == 2 && set.max() <= (std::int64_t{1} << 31) / set.min()) {
        const GenPair pair(set.gens()[0], set.gens()[1]);
        const LengthWitness w = word_length_witness(pair, value);
        report.length = w.length;
        if (witness) report.coefficients = std::vector<std::int64_t>{w.y, w.x};
        return report;
    }
    LengthTable table(set, std::abs(value));
    report.length = table.length(value);
    if (witness) {
        // Walk down a geodesic; every point on it has length <= length(value),
        // so a table of radius length*max covers the whole walk.
        LengthTable wide(set, report.length * set.max());
        std::vector<std::int64_t> coeffs(set.size(), 0);
        std::int64_t cur = value;
        for (std::int64_t k = report.length; k > 0; --k) {
            bool stepped = false;
            for (std::size_t i = 0; i < set.size() && !stepped; ++i) {
                const std::int64_t g = set.gens()[i];
                for (std::int64_t s : {g, -g}) {
                    if (wide.covers(cur - s) && wide.length(cur - s) == k - 1) {
                        coeffs[i] += s > 0 ? 1 : -1;
                        cur -= s;
                        stepped = true;
                        break;
                    }
                }
            }
            if (!stepped) throw Error("internal: geodesic walk got stuck");
        }
        report.coefficients = std::move(coeffs);
    }
    return report;
}

json to_json(const LengthReport& r) {
    json j{
        {"genset", r.genset},
        {"value", r.value},
        {"length", r.length},
    };
    j["coefficients"] = r.coefficients ? json(*r.coefficients) : json();
    return j;
}

std::string to_text(const LengthReport& r) {
    std::ostringstream os;
    os << "length(" << r.value << ") = " << r.length << '\n';
    if (r.coefficients) {
        os << r.value << " =";
        bool first = true;
        for (std::size_t i = 0; i < r.coefficients->size(); ++i) {
            const std::int64_t c = (*r.coefficients)[i];
            if (c == 0 && r.coefficients->size() > 1) continue;
            os << (first ? " " : " + ") << c << "*" << r.genset[i];
            first = false;
        }
        if (first) os << " 0";
        os << '\n';
    }
    return os.str();
}

DeadEndsReport dead_ends_report(const GenSet& set, const std::string& method) {
    std::string mode = method;
    if (mode == "auto") mode = set.size() == 2 ? "both" : "bfs";
    if (mode != "closed" && mode != "bfs" && mode != "both") {
        throw std::invalid_argument("unknown dead-end method: " + method);
    }
    if (mode != "bfs" && set.size() != 2) {
        throw std::invalid_argument(
            "closed-form dead ends need exactly two generators");
    }
    DeadEndsReport report;
    report.genset = set.gens();
    if (mode != "bfs") {
        const GenPair pair(set.gens()[0], set.gens()[1]);
        report.closed = dead_ends_closed(pair);
    }
    if (mode != "closed") {
        report.bfs = find_dead_ends(set);
    }
    if (report.closed && report.bfs) {
        bool agree = report.closed->size() == report.bfs->size();
        for (std::size_t i = 0; agree && i < report.closed->size(); ++i) {
            agree = (*report.closed)[i].value == (*report.bfs)[i].value &&
                    (*report.closed)[i].length == (*report.bfs)[i].length &&
                    (*report.closed)[i].strict == (*report.bfs)[i].strict;
        }
        report.methods_agree = agree;
    }
    return report;
}

json to_json(const DeadEndsReport& r) {
    json j{{"genset", r.genset}};
    if (r.closed) {
        json arr = json::array();
        for (const DeadEnd& d : *r.closed) {
            arr.push_back(json{{"value", d.value},
                               {"length", d.length},
                               {"strict", d.strict}});
        }
        j["closed"] = arr;
    }
    if (r.bfs) {
        json arr = json::array();
        for (const DeadEndReport& d : *r.bfs) arr.push_back(dead_end_to_json(d));
        j["bfs"] = arr;
    }
    if (r.methods_agree) j["methods_agree"] = *r.methods_agree;
    return j;
}

std::string to_text(const DeadEndsReport& r) {
    std::ostringstream os;
    os << "genset: " << genset_brace(r.genset) << '\n';
    if (r.closed) {
        os << "closed form (" << r.closed->size() << "):\n";
        for (const DeadEnd& d : *r.closed) {
            os << "  value " << d.value << "  length " << d.length << "  strict "
               << (d.strict ? "yes" : "no") << '\n';
        }
    }
    if (r.bfs) {
        os << "search (" << r.bfs->size() << "):\n";
        for (const DeadEndReport& d : *r.bfs) {
            os << "  value " << d.value << "  length " << d.length << "  strict "
               << (d.strict ? "yes" : "no") << "  depth " << d.depth << '\n';
        }
    }
    if (r.methods_agree) {
        os << "methods agree: " << (*r.methods_agree ? "yes" : "NO") << '\n';
    }
    return os.str();
}

FrobeniusReport frobenius_report(const GenSet& set) {
    FrobeniusReport report;
    report.genset = set.gens();
    AperyTable apery(set);
    if (apery.modulus() != 1) {
        report.frobenius_number = apery.frobenius_number();
        report.values = frobenius_values(set);
    }
    report.sylvester_count = static_cast<std::int64_t>(std::count_if(
        report.values.begin(), report.values.end(),
        [](std::int64_t v) { return v > 0; }));
    return report;
}

json to_json(const FrobeniusReport& r) {
    return json{
        {"genset", r.genset},
        {"frobenius_number",
         r.frobenius_number ? json(*r.frobenius_number) : json()},
        {"frobenius_values", r.values},
        {"sylvester_count", r.sylvester_count},
    };
}

std::string to_text(const FrobeniusReport& r) {
    std::ostringstream os;
    os << "genset: " << genset_brace(r.genset) << '\n';
    if (r.frobenius_number) {
        os << "frobenius number: " << *r.frobenius_number << '\n';
    } else {
        os << "frobenius number: none (1 is a generator)\n";
    }
    os << "frobenius values (" << r.values.size() << "): " << join(r.values)
       << '\n';
    os << "positive frobenius values (sylvester count): " << r.sylvester_count
       << '\n';
    return os.str();
}

json to_json(const ConstructionReport& r, const FiniteGroup& g) {
    json gens = json::array();
    for (int s : r.construction.genset) gens.push_back(g.name_of(s));
    json neighbors = json::array();
    for (const auto& [v, len] : r.neighbor_lengths) {
        neighbors.push_back(json{{"element", g.name_of(v)}, {"length", len}});
    }
    return json{
        {"case", to_string(r.construction.kind)},
        {"witness", g.name_of(r.construction.witness)},
        {"witness_length", r.witness_length},
        {"genset", gens},
        {"genset_size", r.construction.genset.size()},
        {"base_size", r.base_size},
        {"size_bound_ok", r.construction.size_bound_ok},
        {"neighbors", neighbors},
        {"offending_neighbor",
         r.offending_neighbor < 0 ? json() : json(g.name_of(r.offending_neighbor))},
        {"pass", r.pass},
    };
}

std::string to_text(const ConstructionReport& r, const FiniteGroup& g) {
    std::ostringstream os;
    os << "case: " << to_string(r.construction.kind) << '\n';
    os << "witness: " << g.name_of(r.construction.witness) << " (length "
       << r.witness_length << ")\n";
    os << "genset (" << r.construction.genset.size() << "):";
    for (int s : r.construction.genset) os << ' ' << g.name_of(s);
    os << '\n';
    if (r.construction.kind != ConstructionCase::ComplementExponent23) {
        os << "size bound: " << r.construction.genset.size()
           << " <= 4*" << r.base_size << "+2: "
           << (r.construction.size_bound_ok ? "ok" : "VIOLATED") << '\n';
    }
    os << "neighbor lengths:";
    for (const auto& [v, len] : r.neighbor_lengths) {
        os << ' ' << g.name_of(v) << ':' << len;
    }
    os << '\n';
    if (r.offending_neighbor >= 0) {
        os << "offending neighbor: " << g.name_of(r.offending_neighbor) << '\n';
    }
    os << "result: " << (r.pass ? "PASS" : "FAIL") << '\n';
    return os.str();
}

} // namespace frobz
