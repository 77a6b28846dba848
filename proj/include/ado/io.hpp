#pragma once

#include <string>
#include <vector>

#include "ado/metric.hpp"
#include "ado/tz.hpp"

namespace ado {

// Instance files: line 1 is n, lines 2..n+1 the rows of the distance matrix.
// Parsing validates the metric and throws MetricError subclasses on failure.
std::string format_instance(const MetricSpace& ms);
MetricSpace parse_instance(const std::string& text);

// Chain files: one line per level (k+1 lines), each listing member ids.
std::string format_chain(const LevelChain& chain);
LevelChain parse_chain(const std::string& text, const MetricSpace& ms);

// Vertex-set files: whitespace-separated ids.
std::string format_vertex_set(const std::vector<Vertex>& set);
std::vector<Vertex> parse_vertex_set(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ado
