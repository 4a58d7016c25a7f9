#include "raagcc/parabolic.hpp"

#include <algorithm>
#include <set>

#include "raagcc/error.hpp"

namespace raagcc {

namespace {

std::vector<int> ordered_members(EquivClass const &c, ClassOrdering const &ordering) {
  auto it = ordering.find(c.members.least());
  if (it == ordering.end())
    return c.members.members();
  VertexSet given;
  for (int v : it->second)
    given.insert(v);
  if (given != c.members || static_cast<int>(it->second.size()) != c.members.size())
    throw Error(ErrorKind::InvalidInput, "class ordering must list every class member once");
  return it->second;
}

VertexSet delta_for(RelOutSpec const &spec, std::vector<int> const &order, int j) {
  VertexSet d = conical(spec, order.front()).gt;
  for (int i = 0; i < j; ++i)
    d.insert(order[i]);
  return d;
}

} // namespace

int rank(RelOutSpec const &spec) {
  return spec.graph.order() - static_cast<int>(equiv_classes(spec).size());
}

std::vector<ParabolicDescriptor> maximal_parabolics(RelOutSpec const &spec, ClassOrdering const &ordering) {
  std::vector<ParabolicDescriptor> out;
  for (auto const &c : equiv_classes(spec)) {
    if (c.members.size() < 2)
      continue;
    auto order = ordered_members(c, ordering);
    for (int j = 1; j < c.members.size(); ++j) {
      ParabolicDescriptor p;
      p.class_rep = c.members.least();
      p.j = j;
      p.class_order = order;
      p.delta = delta_for(spec, order, j);
      p.spec = spec;
      p.spec.stabilized.push_back(p.delta);
      p.spec.saturated = false;
      p.spec.normalize();
      out.push_back(std::move(p));
    }
  }
  return out;
}

RelOutSpec parabolic_from_picks(RelOutSpec const &spec, std::vector<Pick> const &picks,
                                ClassOrdering const &ordering) {
  if (picks.empty())
    return spec;
  int r = rank(spec);
  if (static_cast<int>(picks.size()) > r - 1)
    throw Error(ErrorKind::TooManyPicks, "at most rank-1 = " + std::to_string(r - 1) + " picks allowed");
  auto classes = equiv_classes(spec);
  std::set<std::pair<int, int>> seen;
  RelOutSpec out = spec;
  for (auto [v, j] : picks) {
    spec.graph.check_vertex(v);
    auto it = std::find_if(classes.begin(), classes.end(), [&](EquivClass const &c) { return c.members.contains(v); });
    if (j < 1 || j >= it->members.size())
      throw Error(ErrorKind::InvalidInput, "pick index j must lie in 1..|class|-1");
    if (!seen.insert({it->members.least(), j}).second)
      throw Error(ErrorKind::DuplicatePick, "duplicate pick for class of '" + spec.graph.label(v) + "'");
    out.stabilized.push_back(delta_for(spec, ordered_members(*it, ordering), j));
  }
  out.saturated = false;
  out.normalize();
  return out;
}

CoxeterDescriptor aut0(RelOutSpec const &spec) {
  Graph const &g = spec.graph;
  CoxeterDescriptor d;
  for (auto const &c : equiv_classes(spec)) {
    d.class_sizes.push_back(c.members.size());
    d.coxeter_rank += c.members.size() - 1;
    auto m = c.members.members();
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        VertexSet rest = g.vertices() - VertexSet{m[a], m[b]};
        if ((g.link(m[a]) & rest) != (g.link(m[b]) & rest))
          throw Error(ErrorKind::ClassNotSymmetric, "swapping '" + g.label(m[a]) + "' and '" + g.label(m[b]) +
                                                        "' is not a graph automorphism");
      }
  }
  return d;
}

LaurenceGenerator properness_witness(ParabolicDescriptor const &p) {
  return LaurenceGenerator::transvection(p.class_order.front(), p.class_order.back());
}

} // namespace raagcc
