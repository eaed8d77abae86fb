#pragma once

#include <string>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

// All graphs of order n up to isomorphism, as sorted canonical graph6
// strings. Built by vertex augmentation from order n-1 with canonical-label
// dedupe; the count is validated against the Burnside formula at each level.
std::vector<std::string> all_graphs_graph6(int n, int budget = 9);

void write_lines(const std::string& path, const std::vector<std::string>& lines);
std::vector<std::string> read_lines(const std::string& path);

}  // namespace cospec
