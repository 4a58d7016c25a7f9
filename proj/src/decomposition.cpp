#include "raagcc/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "raagcc/error.hpp"
#include "raagcc/parabolic.hpp"

namespace raagcc {

namespace {

int position_in(VertexSet delta, int v) {
  return (delta & VertexSet((std::uint64_t{1} << v) - 1)).size();
}

DecompNode leaf(BaseKind kind, RelOutSpec const &spec, int n = 0) {
  DecompNode node;
  node.kind = NodeKind::Base;
  node.spec = spec;
  node.base.kind = kind;
  node.base.n = n;
  node.base.spec = spec;
  return node;
}

class Decomposer {
public:
  explicit Decomposer(DecomposeOptions const &opts) : opts_(opts) {}

  DecompNode node_for(RelOutSpec const &spec, int current) {
    RelOutSpec s = saturate(spec, opts_.saturate);
    VertexSet all = s.graph.vertices();
    auto classes = equiv_classes(s);
    if (current < 0) {
      for (auto const &c : classes)
        if (conical(s, c.members.least()).geq == all) {
          current = c.members.least();
          break;
        }
    }
    VertexSet above = current < 0 ? all : conical(s, current).gt;
    for (auto const &c : classes) {
      int w = c.members.least();
      if (!above.contains(w))
        continue;
      VertexSet cone = conical(s, w).geq;
      if (cone == all || !acts_nontrivially(s, cone))
        continue;
      Restriction r = restrict(s, cone);
      DecompNode node;
      node.kind = NodeKind::Restrict;
      node.spec = s;
      node.current = current;
      node.delta = cone;
      node.children.push_back(node_for(r.image, position_in(cone, w)));
      node.children.push_back(node_for(r.kernel, current));
      return node;
    }
    if (current < 0) {
      DecompNode node = leaf(BaseKind::LeftmostKernel, s);
      node.base.note = "generated by partial conjugations; not decomposed further";
      return node;
    }
    return conical_node(s, current);
  }

private:
  DecompNode conical_node(RelOutSpec const &s, int v) {
    Projection p = project_center(s, v);
    DecompNode child = classify(p.image, position_in(p.delta, v));
    if (p.Z.empty())
      return child;
    DecompNode node;
    node.kind = NodeKind::Project;
    node.spec = s;
    node.current = v;
    node.Z = p.Z;
    node.delta = p.delta;
    node.twist_rank = p.twist_rank;
    node.children.push_back(leaf(BaseKind::TwistGroup, s, p.twist_rank));
    node.children.push_back(std::move(child));
    return node;
  }

  DecompNode classify(RelOutSpec const &image, int v) {
    RelOutSpec s = saturate(image, opts_.saturate);
    EquivClass cls = class_of(s, v);
    VertexSet all = s.graph.vertices();
    if (cls.kind == ClassKind::Abelian) {
      if (cls.members != all)
        throw Error(ErrorKind::TheoremViolation, "abelian class image is larger than the class");
      DecompNode node = leaf(BaseKind::GeneralLinear, s, cls.members.size());
      node.current = v;
      node.base.klass = cls.members;
      return node;
    }
    if (all.size() == 1) {
      DecompNode node = leaf(BaseKind::CyclicOrderTwo, s);
      node.current = v;
      node.base.klass = cls.members;
      return node;
    }
    if (s.graph.link(v).intersects(all))
      throw Error(ErrorKind::TheoremViolation, "free class vertex keeps a neighbour after projection");
    std::vector<VertexSet> parts;
    for (auto K : relative_components(s, v))
      if (!K.subset_of(cls.members))
        parts.push_back(K);
    return free_chain(s, v, cls.members, parts, 0);
  }

  DecompNode free_chain(RelOutSpec const &spec, int v, VertexSet cls, std::vector<VertexSet> const &parts,
                        std::size_t idx) {
    RelOutSpec s = saturate(spec, opts_.saturate);
    for (; idx < parts.size(); ++idx) {
      if (!acts_nontrivially(s, parts[idx]))
        continue;
      Restriction r = restrict(s, parts[idx]);
      DecompNode node;
      node.kind = NodeKind::Restrict;
      node.spec = s;
      node.current = v;
      node.delta = parts[idx];
      DecompNode pc = leaf(BaseKind::PartialConjugationGroup, r.image);
      pc.base.note = "generated by partial conjugations; not decomposed further";
      node.children.push_back(std::move(pc));
      node.children.push_back(free_chain(r.kernel, v, cls, parts, idx + 1));
      return node;
    }
    DecompNode node = leaf(BaseKind::FouxeRabinovitch, s, cls.size());
    node.current = v;
    node.base.klass = cls;
    node.base.factors = parts;
    return node;
  }

  DecomposeOptions opts_;
};

void collect(DecompNode const &n, std::vector<BaseCase const *> &out) {
  if (n.kind == NodeKind::Base)
    out.push_back(&n.base);
  for (auto const &c : n.children)
    collect(c, out);
}

std::string join_labels(Graph const &g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (auto const &l : g.labels_of(s)) {
    out += (first ? "" : ",") + l;
    first = false;
  }
  return out + "}";
}

} // namespace

char const *base_kind_name(BaseKind k) {
  switch (k) {
  case BaseKind::LeftmostKernel: return "LeftmostKernel";
  case BaseKind::TwistGroup: return "TwistGroup";
  case BaseKind::GeneralLinear: return "GeneralLinear";
  case BaseKind::FouxeRabinovitch: return "FouxeRabinovitch";
  case BaseKind::CyclicOrderTwo: return "CyclicOrderTwo";
  case BaseKind::PartialConjugationGroup: return "PartialConjugationGroup";
  }
  return "?";
}

int BaseCase::contribution() const {
  if (kind == BaseKind::GeneralLinear || kind == BaseKind::FouxeRabinovitch)
    return n - 1;
  return 0;
}

DecompNode decompose(RelOutSpec const &spec, DecomposeOptions const &opts) {
  Decomposer d(opts);
  return d.node_for(spec, -1);
}

int predicted_sphere_dimension(RelOutSpec const &spec) { return rank(spec) - 1; }

std::vector<BaseCase const *> leaves(DecompNode const &root) {
  std::vector<BaseCase const *> out;
  collect(root, out);
  return out;
}

std::vector<std::string> base_case_signature(DecompNode const &root) {
  std::vector<std::string> out;
  for (auto const *b : leaves(root)) {
    std::string s = base_kind_name(b->kind);
    switch (b->kind) {
    case BaseKind::TwistGroup:
    case BaseKind::GeneralLinear:
      s += "(" + std::to_string(b->n) + ")";
      break;
    case BaseKind::FouxeRabinovitch:
      s += "(" + std::to_string(b->n) + ";" + std::to_string(b->factors.size()) + ")";
      break;
    default:
      break;
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AuditReport verify_tree(RelOutSpec const &spec, DecompNode const &tree) {
  AuditReport rep;
  rep.rank = rank(spec);
  std::multiset<std::set<std::string>> leaf_classes;
  for (auto const *b : leaves(tree)) {
    rep.contribution += b->contribution();
    if ((b->kind == BaseKind::GeneralLinear || b->kind == BaseKind::FouxeRabinovitch) && b->n >= 2) {
      auto labels = b->spec.graph.labels_of(b->klass);
      leaf_classes.insert(std::set<std::string>(labels.begin(), labels.end()));
    }
  }
  rep.rank_sum = rep.contribution == rep.rank;
  if (!rep.rank_sum)
    rep.failures.push_back("rank sum: leaf contributions " + std::to_string(rep.contribution) + " != rank " +
                           std::to_string(rep.rank));

  std::multiset<std::set<std::string>> root_classes;
  for (auto const &c : equiv_classes(spec))
    if (c.members.size() >= 2) {
      auto labels = spec.graph.labels_of(c.members);
      root_classes.insert(std::set<std::string>(labels.begin(), labels.end()));
    }
  rep.class_leaves = leaf_classes == root_classes;
  if (!rep.class_leaves)
    rep.failures.push_back("class leaves: GeneralLinear/FouxeRabinovitch leaves do not match the classes of size >= 2");

  rep.dichotomy = true;
  std::function<void(DecompNode const &)> walk = [&](DecompNode const &n) {
    if (n.kind == NodeKind::Restrict) {
      ++rep.restrict_steps;
      RelOutSpec const &s = n.spec;
      RelOutSpec const &kernel = n.children[1].spec;
      auto gens = enumerate_generators(s);
      auto kernel_gens = enumerate_generators(kernel);
      std::vector<LaurenceGenerator> outside;
      for (auto const &g : gens)
        if (!contains_generator(kernel, g))
          outside.push_back(g);
      for (auto const &p : maximal_parabolics(s)) {
        auto keeps = [&](std::vector<LaurenceGenerator> const &gs) {
          for (auto const &g : gs)
            if (generator_action(s.graph, g, p.delta) == Action::Moves)
              return false;
          return true;
        };
        if (!keeps(kernel_gens) && !keeps(outside)) {
          rep.dichotomy = false;
          rep.failures.push_back("dichotomy: parabolic " + join_labels(s.graph, p.delta) + " at restriction to " +
                                 join_labels(s.graph, n.delta) + " contains neither the kernel nor S\\N");
        }
      }
    }
    for (auto const &c : n.children)
      walk(c);
  };
  walk(tree);
  return rep;
}

std::string render_text(DecompNode const &root) {
  std::ostringstream os;
  std::function<void(DecompNode const &, std::string const &, std::string const &)> rec =
      [&](DecompNode const &n, std::string const &indent, std::string const &tag) {
        Graph const &g = n.spec.graph;
        os << indent << tag;
        switch (n.kind) {
        case NodeKind::Restrict:
          os << "restrict to " << join_labels(g, n.delta) << "\n";
          rec(n.children[0], indent + "  ", "image:  ");
          rec(n.children[1], indent + "  ", "kernel: ");
          return;
        case NodeKind::Project:
          os << "project away Z=" << join_labels(g, n.Z) << " (twist rank " << n.twist_rank << ")\n";
          rec(n.children[0], indent + "  ", "kernel: ");
          rec(n.children[1], indent + "  ", "image:  ");
          return;
        case NodeKind::Base: {
          BaseCase const &b = n.base;
          os << base_kind_name(b.kind);
          switch (b.kind) {
          case BaseKind::TwistGroup:
            os << " Z^" << b.n;
            break;
          case BaseKind::GeneralLinear:
            os << " GL_" << b.n << "(Z) on " << join_labels(g, b.klass);
            break;
          case BaseKind::FouxeRabinovitch:
            os << " free class " << join_labels(g, b.klass);
            for (auto f : b.factors)
              os << " * " << join_labels(g, f);
            break;
          case BaseKind::CyclicOrderTwo:
            os << " Out<" << g.label(b.klass.least()) << "> = Z/2";
            break;
          default:
            os << " on " << join_labels(g, g.vertices());
            break;
          }
          os << "\n";
          return;
        }
        }
      };
  rec(root, "", "");
  return os.str();
}

} // namespace raagcc
