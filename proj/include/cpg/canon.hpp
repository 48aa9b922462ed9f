#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

using Permutation = std::array<uint8_t, kMaxN>;

// Output of one canonical-labeling run. `cert` is the graph6 string of the
// canonically relabeled graph: two graphs have equal certs exactly when they
// are isomorphic (respecting the vertex coloring). `gens` generate the full
// color-preserving automorphism group; both come out of a single search.
struct CanonResult {
    Permutation labeling{};  // vertex -> canonical position
    std::string cert;
    std::vector<Permutation> gens;
};

// Individualization-refinement search. Colors must be a function of
// isomorphism-invariant data; the default overload colors by degree.
CanonResult canonical_form(const Graph& g, const std::vector<int>& colors);
CanonResult canonical_form(const Graph& g);

// Orbit id per input pair under the group generated by gens, with (u,v)
// identified with (v,u). Ids are indices into `pairs` of the orbit's first
// representative in input order.
std::vector<int> pair_orbits(int n, const std::vector<Permutation>& gens,
                             const std::vector<std::pair<int, int>>& pairs);

// Lexicographically largest (max endpoint, min endpoint) canonical label over
// the Aut-orbit of e; equal within an orbit, distinct across orbits.
std::pair<int, int> edge_orbit_label(const CanonResult& cr, int n, Edge e);
std::pair<int, int> edge_orbit_label(const Graph& g, Edge e);

// Test oracles: exhaustive backtracking over label bijections.
std::vector<Permutation> all_automorphisms_bruteforce(const Graph& g);
bool isomorphic_bruteforce(const Graph& a, const Graph& b);

}  // namespace cpg
