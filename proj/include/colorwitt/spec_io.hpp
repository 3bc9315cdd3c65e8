#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "colorwitt/grading.hpp"
#include "colorwitt/numtheory.hpp"
#include "colorwitt/rational.hpp"

namespace colorwitt {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kDefaultMaxDegree = 12;

// Spec file schema:
//   {
//     "group": {"moduli": [2,2], "negatives": [[0,1],[1,0]]},   // optional
//     "generators": [{"label": [0,0], "count": 1}, ...],
//     "maxDegree": 12                                           // optional
//   }
// Without a group block, each generator carries "label": "even" | "odd".
GradingSpec parse_spec_json(const nlohmann::json& j);
GradingSpec load_spec_file(const std::string& path);

// Canonical re-serialization of a grading spec (used for digests and tests).
nlohmann::json spec_to_json(const GradingSpec& spec);

// FNV-1a over the canonical dump; 16 hex digits.
std::string spec_digest(const GradingSpec& spec);

struct DimensionRow {
    Multidegree multidegree;
    int total_degree = 0;
    std::optional<GroupElement> group_element;
    Integer dim;
    std::string method;  // "closed-form" | "series" | "oracle"

    friend bool operator==(const DimensionRow& a, const DimensionRow& b) {
        return a.multidegree == b.multidegree && a.total_degree == b.total_degree &&
               a.group_element == b.group_element && a.dim == b.dim && a.method == b.method;
    }
};

struct DimensionTable {
    std::vector<DimensionRow> rows;
    std::string digest;
    int truncation = kDefaultMaxDegree;
    std::optional<long> prime;
    std::string tool_version = kToolVersion;

    void sort_rows();

    nlohmann::json to_json() const;
    static DimensionTable from_json(const nlohmann::json& j);
    std::string to_csv() const;

    friend bool operator==(const DimensionTable& a, const DimensionTable& b) {
        return a.rows == b.rows && a.digest == b.digest && a.truncation == b.truncation &&
               a.prime == b.prime && a.tool_version == b.tool_version;
    }
};

}  // namespace colorwitt
