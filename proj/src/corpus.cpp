#include "raagcc/corpus.hpp"

#include <random>
#include <sstream>
#include <vector>

#include "raagcc/error.hpp"

namespace raagcc {

namespace {

std::vector<std::string> numbered(std::string const &prefix, int n, int from = 0) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i)
    out.push_back(prefix + std::to_string(from + i));
  return out;
}

std::vector<std::string> split(std::string const &s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep))
    out.push_back(tok);
  return out;
}

int parse_int(std::string const &s, std::string const &name) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos == s.size())
      return v;
  } catch (std::exception const &) {
  }
  throw Error(ErrorKind::Usage, "bad number '" + s + "' in example '" + name + "'");
}

} // namespace

Graph diamonds(int d) {
  if (d < 1)
    throw Error(ErrorKind::InvalidInput, "diamonds need d >= 1");
  std::vector<std::string> labels{"c0"};
  for (int i = 1; i <= d; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("b" + std::to_string(i));
    labels.push_back("c" + std::to_string(i));
  }
  Graph g(labels);
  for (int i = 1; i <= d; ++i) {
    int prev = 3 * (i - 1), a = prev + 1, b = prev + 2, c = prev + 3;
    g.add_edge(prev, a);
    g.add_edge(prev, b);
    g.add_edge(a, c);
    g.add_edge(b, c);
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(numbered("v", n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

Graph discrete_graph(int n) { return Graph(numbered("v", n)); }

Graph path_graph(int n) {
  Graph g(numbered("v", n));
  for (int u = 0; u + 1 < n; ++u)
    g.add_edge(u, u + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3)
    throw Error(ErrorKind::InvalidInput, "cycles need at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  std::vector<std::string> labels{"z"};
  for (auto const &l : numbered("l", leaves, 1))
    labels.push_back(l);
  Graph g(labels);
  for (int i = 1; i <= leaves; ++i)
    g.add_edge(0, i);
  return g;
}

Graph random_tree(int n, std::uint64_t seed) {
  Graph g(numbered("v", n));
  if (n < 2)
    return g;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(n - 2);
  for (auto &x : prufer)
    x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : prufer)
    ++degree[x];
  for (int x : prufer) {
    for (int leaf = 0; leaf < n; ++leaf)
      if (degree[leaf] == 1) {
        g.add_edge(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (u < 0)
        u = v;
      else
        g.add_edge(u, v);
    }
  return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  Graph g(numbered("v", n));
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng))
        g.add_edge(u, v);
  return g;
}

Graph example_graph(std::string const &name, std::uint64_t seed) {
  auto parts = split(name, ':');
  if (parts.size() < 2)
    throw Error(ErrorKind::Usage, "example must look like kind:size, got '" + name + "'");
  std::string const &kind = parts[0];
  if (kind == "tree" && parts[1] == "random") {
    if (parts.size() < 3)
      throw Error(ErrorKind::Usage, "tree:random:N[:SEED]");
    int n = parse_int(parts[2], name);
    std::uint64_t s = seed;
    if (parts.size() > 3 && parts[3] != "seed")
      s = static_cast<std::uint64_t>(parse_int(parts[3], name));
    return random_tree(n, s);
  }
  int n = parse_int(parts[1], name);
  if (n < 0 || n > kMaxGraphVertices)
    throw Error(ErrorKind::SizeLimit, "example size out of range in '" + name + "'");
  if (kind == "diamonds")
    return diamonds(n);
  if (kind == "complete")
    return complete_graph(n);
  if (kind == "discrete")
    return discrete_graph(n);
  if (kind == "path")
    return path_graph(n);
  if (kind == "cycle")
    return cycle_graph(n);
  if (kind == "star")
    return star_graph(n);
  throw Error(ErrorKind::Usage, "unknown graph example '" + name + "'");
}

} // namespace raagcc
