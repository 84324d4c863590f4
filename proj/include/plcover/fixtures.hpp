#ifndef PLCOVER_FIXTURES_HPP
#define PLCOVER_FIXTURES_HPP

#include <string>
#include <vector>

#include "plcover/cover.hpp"

namespace plcover::fixtures {

std::vector<std::string> names();

/// Build a shipped example map by name: power2, rabbit_basilica_mating,
/// rabbit_antirabbit_mating. Throws std::invalid_argument on unknown names.
cover::PLMap build(const std::string& name);

/// A degree-2 formal mating assembled from two hemisphere models glued along
/// an invariant equator N-gon on which the map doubles angles. Each hemisphere
/// is a star: rays from an interior hub to the equator at the given positions,
/// with one marked point dangling in each sector.
struct Hemisphere {
    std::vector<long> rays;               // equator positions mod N, sorted
    std::vector<std::string> sector_mark; // mark in sector [rays[i], rays[i+1])
};

cover::PLMap build_mating(long N, const Hemisphere& north, const Hemisphere& south,
                          const std::vector<std::string>& cut_tokens, const std::string& name);

} // namespace plcover::fixtures

#endif
