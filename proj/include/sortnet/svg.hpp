#pragma once

#include <iosfwd>
#include <string>

#include "sortnet/network.hpp"

namespace sortnet {

// Wiring diagram: n horizontal wires, one crossing per swap, particle labels
// on both edges, wire 1 at the top. Crossings carry class="swap" markers.
void write_wiring_diagram(const SortingNetwork& net, std::ostream& out);
void write_wiring_diagram_file(const SortingNetwork& net, const std::string& path);

}  // namespace sortnet
