#ifndef RAAGCC_IO_HPP
#define RAAGCC_IO_HPP

#include <string>

#include "json.hpp"

#include "raagcc/decomposition.hpp"
#include "raagcc/finite_coset.hpp"
#include "raagcc/graph.hpp"
#include "raagcc/homology.hpp"
#include "raagcc/relgroup.hpp"
#include "raagcc/subgraph_poset.hpp"

namespace raagcc {

using Json = nlohmann::ordered_json;

// Throws InvalidInput on unreadable files or bad JSON.
Json load_json(std::string const &path);

// {"vertices": [...], "edges": [["a","b"], ...]}
Graph graph_from_json(Json const &j);
Json to_json(Graph const &g);

// {"graph": {...}, "stabilized": [[...]], "trivial": [[...]]}; a bare graph
// object is read as a spec with empty families.
RelOutSpec spec_from_json(Json const &j);
Json to_json(RelOutSpec const &spec);
Json vertex_set_json(Graph const &g, VertexSet s);

// {"kind": "transvection", "v": "a", "w": "b"}; partial conjugations carry "K".
LaurenceGenerator generator_from_json(Graph const &g, Json const &j);
Json to_json(Graph const &g, LaurenceGenerator const &gen);

// {"vertices": [...], "edges": [["u","v","e1"], ...], "labels": {"1": "u"}}
LabelledGraph multigraph_from_json(Json const &j);
Json to_json(LabelledGraph const &gl);

// {"order": n, "table": [[...]]} or {"permutations": [[...], ...]}
FiniteGroup group_from_json(Json const &j);
// [[0,2,4],[0,3]] or {"members": [...], "normal": [...]}. A subgroup may also be
// {"generators": [...]}, with elements as indices or, for permutation groups,
// as permutations.
SubgroupFamily family_from_json(FiniteGroup const &g, Json const &j);
ElementSet normal_from_json(FiniteGroup const &g, Json const &j);

// {"faces": [[0,1],[1,2]]}; vertices may be integers or strings.
SimplicialComplex complex_from_json(Json const &j);

// {"-1": {"betti": 0, "torsion": []}, "0": {...}, ...}
Json to_json(HomologyResult const &h);
Json to_json(AuditReport const &a);
// Leaves carry the number of Laurence generators of their group.
Json to_json(DecompNode const &node);

} // namespace raagcc

#endif // RAAGCC_IO_HPP
