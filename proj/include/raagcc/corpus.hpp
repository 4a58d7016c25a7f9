#ifndef RAAGCC_CORPUS_HPP
#define RAAGCC_CORPUS_HPP

#include <cstdint>
#include <string>

#include "raagcc/graph.hpp"

namespace raagcc {

// Diamonds c_{i-1}-a_i-c_i-b_i-c_{i-1}, i = 1..d, glued at the c_i.
Graph diamonds(int d);
Graph complete_graph(int n);
Graph discrete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
// Uniform labelled tree via a Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);
Graph random_graph(int n, double p, std::uint64_t seed);

// Parses names such as "diamonds:3", "tree:random:12:7", "complete:4".
// A trailing "seed" token (or a missing seed) takes `seed`.
Graph example_graph(std::string const &name, std::uint64_t seed = 0);

} // namespace raagcc

#endif // RAAGCC_CORPUS_HPP
