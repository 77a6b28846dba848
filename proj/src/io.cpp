#include "ado/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ado {

std::string format_instance(const MetricSpace& ms) {
  std::ostringstream out;
  const int n = ms.n();
  out << n << '\n';
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v)
      out << ms.d(u, v) << (v < n ? ' ' : '\n');
  }
  return out.str();
}

MetricSpace parse_instance(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) throw MetricError("instance file: missing vertex count");
  if (n < 2) throw SizeTooSmall("instance file: n must be >= 2");
  std::vector<std::vector<Dist>> matrix(n, std::vector<Dist>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (!(in >> matrix[u][v]))
        throw MetricError("instance file: matrix truncated at row " +
                          std::to_string(u + 1));
  return validate_metric(matrix);
}

std::string format_chain(const LevelChain& chain) {
  std::ostringstream out;
  for (int i = 0; i <= chain.k; ++i) {
    const auto& lvl = chain.levels[i];
    for (std::size_t j = 0; j < lvl.size(); ++j)
      out << lvl[j] << (j + 1 < lvl.size() ? ' ' : '\n');
    if (lvl.empty()) out << '\n';
  }
  return out.str();
}

LevelChain parse_chain(const std::string& text, const MetricSpace& ms) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  if (lines.size() < 2) throw MetricError("chain file: needs at least 2 levels");

  LevelChain chain;
  chain.k = static_cast<int>(lines.size()) - 1;
  chain.levels.resize(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    Vertex v;
    while (ls >> v) chain.levels[i].push_back(v);
    std::sort(chain.levels[i].begin(), chain.levels[i].end());
  }
  validate_chain(ms, chain);
  return chain;
}

std::string format_vertex_set(const std::vector<Vertex>& set) {
  std::ostringstream out;
  for (std::size_t i = 0; i < set.size(); ++i)
    out << set[i] << (i + 1 < set.size() ? ' ' : '\n');
  if (set.empty()) out << '\n';
  return out.str();
}

std::vector<Vertex> parse_vertex_set(const std::string& text) {
  std::istringstream in(text);
  std::vector<Vertex> set;
  Vertex v;
  while (in >> v) set.push_back(v);
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MetricError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MetricError("cannot write " + path);
  out << content;
}

}  // namespace ado
