// Deterministic generation of digraph families: oriented paths (by
// orientation pattern), exhaustive oriented trees up to isomorphism, the
// small-digraph catalogue, and seed-stable random instances for tests.

#ifndef TREEHOM_ENUMERATE_HPP
#define TREEHOM_ENUMERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "digraph.hpp"

namespace treehom {

// Oriented path from an orientation pattern: pattern[i] true = arc i runs
// forward (v_i -> v_{i+1}). Vertices are named p0, p1, ...
Digraph make_path(const std::vector<bool>& pattern);

// Pattern rendered as "+-+" (forward / backward per arc); "." for the
// single-vertex path.
std::string pattern_string(const std::vector<bool>& pattern);

// Lexicographically least pattern among the four transforms generated by
// reading the path from the other end and by reversing all arcs.
std::vector<bool> canonical_path_pattern(const std::vector<bool>& pattern);

// All oriented paths with at most max_arcs arcs that are cores,
// deduplicated up to isomorphism and arc reversal, ordered by arc count
// then pattern. Includes the single-vertex path (0 arcs).
std::vector<Digraph> enumerate_path_cores(int max_arcs);

// Seed-deterministic random oriented paths with 1..max_len arcs.
std::vector<Digraph> random_paths(int count, int max_len, uint64_t seed);

// Canonical encoding of an oriented tree (isomorphism-invariant), and its
// inverse. Encodings are rooted at the underlying center; children carry
// an F/B tag for the arc direction from the parent.
std::string canonical_tree_encoding(const Digraph& t);
Digraph decode_tree_encoding(const std::string& encoding);

// Every oriented tree with 1..max_vertices vertices, one per isomorphism
// class, ordered by vertex count then canonical encoding.
std::vector<Digraph> enumerate_oriented_trees(int max_vertices);
// Same, a single size class.
std::vector<std::string> oriented_tree_encodings(int vertices);

// Seed-deterministic random oriented tree on n >= 1 vertices.
Digraph random_tree(int n, std::mt19937_64& eng);

// Every digraph with 1..max_vertices vertices up to isomorphism
// (exhaustive canonical-form dedup; intended for very small sizes).
std::vector<Digraph> enumerate_small_digraphs(int max_vertices);

}  // namespace treehom

#endif
