#include "ado/setcover.hpp"

#include <sstream>

namespace ado {

void SetCoverInstance::validate() const {
  if (n_elements < 1 || sets.empty())
    throw EmptyInstance("set cover instance needs elements and sets");
  std::vector<char> covered(n_elements + 1, 0);
  for (const auto& s : sets)
    for (int e : s) {
      if (e < 1 || e > n_elements)
        throw MetricError("set element " + std::to_string(e) + " out of range");
      covered[e] = 1;
    }
  for (int e = 1; e <= n_elements; ++e)
    if (!covered[e])
      throw MetricError("element " + std::to_string(e) + " appears in no set");
}

ReductionMap gen_setcover_reduction(const SetCoverInstance& sc) {
  sc.validate();
  const int groups = sc.n_elements + sc.n_sets();
  const int gsize = 3 * groups;
  const int nv = groups * gsize;

  ReductionMap rm;
  rm.instance = sc;
  rm.group_of_vertex.assign(nv + 1, 0);
  rm.vertices_of_group.assign(groups + 1, {});
  for (int g = 1; g <= groups; ++g) {
    rm.vertices_of_group[g].reserve(gsize);
    for (int j = 0; j < gsize; ++j) {
      const Vertex v = (g - 1) * gsize + j + 1;
      rm.group_of_vertex[v] = g;
      rm.vertices_of_group[g].push_back(v);
    }
  }

  // membership[e][s]: e in S_s
  std::vector<std::vector<char>> member(sc.n_elements + 1,
                                        std::vector<char>(sc.n_sets() + 1, 0));
  for (int s = 1; s <= sc.n_sets(); ++s)
    for (int e : sc.sets[s - 1]) member[e][s] = 1;

  auto group_dist = [&](int ga, int gb) -> Dist {
    if (ga == gb) return 1;
    const bool sa = ga > sc.n_elements, sb = gb > sc.n_elements;
    if (sa && sb) return 1;
    if (!sa && !sb) return 2;
    const int e = sa ? gb : ga;
    const int s = (sa ? ga : gb) - sc.n_elements;
    return member[e][s] ? 1 : 2;
  };

  std::vector<Dist> flat(static_cast<std::size_t>(nv + 1) * (nv + 1), 0);
  for (Vertex u = 1; u <= nv; ++u)
    for (Vertex v = 1; v <= nv; ++v)
      if (u != v)
        flat[static_cast<std::size_t>(u) * (nv + 1) + v] =
            group_dist(rm.group_of_vertex[u], rm.group_of_vertex[v]);
  rm.metric = MetricSpace::from_valid(nv, std::move(flat));
  return rm;
}

SetCoverInstance parse_setcover(const std::string& text) {
  std::istringstream in(text);
  SetCoverInstance sc;
  int n_sets = 0;
  if (!(in >> sc.n_elements >> n_sets))
    throw MetricError("set cover file: bad header");
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<int> s;
    int e;
    while (ls >> e) s.push_back(e);
    sc.sets.push_back(std::move(s));
  }
  if (static_cast<int>(sc.sets.size()) != n_sets)
    throw MetricError("set cover file: set count mismatch");
  sc.validate();
  return sc;
}

std::string format_setcover(const SetCoverInstance& sc) {
  std::ostringstream out;
  out << sc.n_elements << ' ' << sc.n_sets() << '\n';
  for (const auto& s : sc.sets) {
    for (std::size_t i = 0; i < s.size(); ++i)
      out << s[i] << (i + 1 < s.size() ? ' ' : '\n');
    if (s.empty()) out << '\n';
  }
  return out.str();
}

}  // namespace ado
