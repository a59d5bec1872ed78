// Result records: the machine-readable certificate emitted by the CLI.
// Exact rationals are serialized as "num/den" strings, never floats.
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "balis/balanced.hpp"

namespace balis {

struct ResultRecord {
    // query
    std::optional<Rat> alpha;
    std::optional<int> theorem_case;
    std::string algorithm;
    TargetCounts targets;
    // outcome
    bool found = false;
    Island island;
    Certificate certificate;
    double timing_ms = 0;
};

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);
std::string family_name(CertFamily f);

// Re-verifies the island before emission; throws internal_error on mismatch.
nlohmann::json record_to_json(const ColoredPointSet& ps, const ResultRecord& rec);

std::string record_to_text(const ColoredPointSet& ps, const ResultRecord& rec);

}  // namespace balis
