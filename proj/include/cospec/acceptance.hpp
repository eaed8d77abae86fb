#pragma once

#include <string>
#include <vector>

namespace cospec {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceConfig {
    // graph6 file with all graphs of order 9, one per line. If the file does
    // not exist it is generated there first.
    std::string corpus_path = "order9.g6";
    std::string cache_path = "basepair.txt";
    std::uint64_t seed = 20250809;
};

// Runs the full acceptance suite (criteria 1..12) in dependency order.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg);

// "PASS  3  cograph-count ..." lines; returns the number of failures.
int print_acceptance(const std::vector<CriterionResult>& results);

}  // namespace cospec
