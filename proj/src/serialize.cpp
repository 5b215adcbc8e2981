#include "omega/serialize.hpp"

#include <sstream>

namespace omega {

using nlohmann::json;

json to_json(const Permutation& p) { return json(p.word()); }

json to_json(const CyclicForm& c) { return json(c.cycles); }

json to_json(const Composition& lambda) { return json(lambda.parts()); }

json to_json(const CopyDecomposition& dec) {
  json out = json::object();
  for (size_t i = 0; i < dec.copies.size(); ++i) {
    json copy = json::array();
    for (const Permutation& p : dec.copies[i]) {
      copy.push_back(to_json(p));
    }
    out[std::to_string(i)] = std::move(copy);
  }
  return out;
}

json to_json(const GradedPoset& poset, const Composition& lambda) {
  json out;
  out["n"] = lambda.n();
  out["lambda"] = to_json(lambda);
  json elements = json::array();
  for (const Permutation& p : poset.elements()) {
    elements.push_back(to_json(p));
  }
  out["elements"] = std::move(elements);
  out["ranks"] = json(poset.ranks());
  json covers = json::array();
  for (const CoverEdge& e : poset.covers()) {
    covers.push_back(json::array({e.lower, e.upper, e.label.i, e.label.j}));
  }
  out["covers"] = std::move(covers);
  return out;
}

std::string to_dot(const GradedPoset& poset) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (int i = 0; i < poset.size(); ++i) {
    out << "  e" << i << " [label=\"" << to_string(poset.element(i)) << "\\nrank "
        << poset.rank(i) << "\"];\n";
  }
  for (int r = 0; r <= poset.length(); ++r) {
    out << "  { rank=same;";
    for (int i = 0; i < poset.size(); ++i) {
      if (poset.rank(i) == r) out << " e" << i << ';';
    }
    out << " }\n";
  }
  for (const CoverEdge& e : poset.covers()) {
    out << "  e" << e.lower << " -> e" << e.upper << " [label=\""
        << to_string(e.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace omega
