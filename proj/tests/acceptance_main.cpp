// Runs every acceptance criterion and prints one pass/fail line per
// criterion. The order-9 corpus and the base-pair cache live next to the
// binary so repeated runs reuse them.

#include <cstdio>

#include "cospec/acceptance.hpp"

int main() {
    cospec::AcceptanceConfig cfg;
    cfg.corpus_path = "acceptance_order9.g6";
    cfg.cache_path = "acceptance_basepair.txt";
    auto results = cospec::run_acceptance(cfg);
    int failures = cospec::print_acceptance(results);
    return failures == 0 ? 0 : 1;
}
