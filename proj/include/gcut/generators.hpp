#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "gcut/graph.hpp"

namespace gcut {

enum class Family { path, cycle, complete, total, complete_bipartite, star, petersen, random_regular };

/// Parameters of a named family. Which fields matter depends on the family:
///   path, cycle, complete, total: n
///   star: n = number of leaves (K_{1,n})
///   complete_bipartite: s, t
///   random_regular: n, k, seed
///   petersen: none
struct FamilySpec {
    Family family = Family::path;
    std::size_t n = 0;
    std::size_t s = 0;
    std::size_t t = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
};

/// CLI tags: path|cycle|complete|total|biclique|star|petersen|random-regular.
Family parse_family(std::string_view tag);
std::string_view family_tag(Family f);

/// Throws InvalidArgument naming the violated range.
Graph generate(const FamilySpec& spec);

Graph path_graph(std::size_t n);
/// Vertices in cyclic order 0-1-...-(n-1)-0.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K_n with one loop on every vertex; every degree is n + 1.
Graph total_graph(std::size_t n);
/// Part one is 0..s-1, part two s..s+t-1.
Graph complete_bipartite_graph(std::size_t s, std::size_t t);
/// Center 0, leaves 1..leaves.
Graph star_graph(std::size_t leaves);
/// Outer cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
Graph petersen_graph();

/// Simple k-regular graph on n vertices from the configuration (pairing)
/// model, rejecting pairings with loops or parallel edges.
///
/// The procedure is fixed so that a seed names the same graph everywhere:
/// a std::mt19937_64 seeded with `seed` drives a Fisher-Yates shuffle of the
/// n*k points (point p belongs to vertex p / k), iterating i from n*k-1 down
/// to 1 and swapping with index uniform(0..i); uniform draws reject raw
/// outputs >= floor(2^64 / b) * b and reduce modulo b. Consecutive points
/// 2j, 2j+1 are paired. A rejected pairing reshuffles from the current
/// permutation with the same engine.
///
/// Throws InvalidArgument if n*k is odd, k >= n, or no simple pairing is
/// found within `max_attempts` shuffles.
Graph random_regular(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t max_attempts = 1'000'000);

}  // namespace gcut
