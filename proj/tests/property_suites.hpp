// Shared property suites: each one sweeps an invariant over generated inputs
// and reports pass/fail plus a short account of what was covered. The unit
// tests assert on them individually; the acceptance binary runs the whole
// list as one criterion.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qclifford/graph.hpp"

namespace qcl::props {

struct PropResult {
    std::string name;
    bool pass = false;
    std::string detail; // coverage summary, or what failed first
};

// Seeded generators shared by the suites and the unit tests.
ColoredGraph random_graph(std::uint64_t seed, int n, bool mixed_colors, bool unit_labels);
ColoredGraph random_connected_graph(std::uint64_t seed, int n, bool mixed_colors,
                                    bool unit_labels);

PropResult associativity_suite();  // 1000 random triples, spaces of dim <= 10
PropResult cocycle_suite();        // exhaustive monomial triples at dim <= 6
PropResult tau_suite();            // 500 random pairs for each involution
PropResult center_suite();         // center vs brute-force commutant, dim <= 8
PropResult ideal_split_suite();    // split along central involutions, dim <= 8
PropResult invariance_suite();     // 100 basis changes + 50 relabelings per space
PropResult bott_suite();           // periodicity sweep 0 <= p,q <= 12
PropResult beineke_krausz_suite(); // two recognizers on 1000 seeded graphs <= 10
PropResult point_count_suite();    // count formulas vs enumeration, n <= 12
PropResult plane_models_suite();   // model span dim = algebra dim, p in {5,7,13}

std::vector<PropResult> all_suites();

} // namespace qcl::props
