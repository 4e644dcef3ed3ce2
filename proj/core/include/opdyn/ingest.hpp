#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "opdyn/graph.hpp"

namespace opdyn {

struct DatasetManifest {
  std::string name = "custom";  // YT, SD, TW, FB or custom
  std::filesystem::path path;
  std::optional<std::size_t> expected_n;
  std::optional<std::size_t> expected_m;
};

// Built-in manifests carrying the published node/edge counts.
DatasetManifest known_dataset(const std::string& name, std::filesystem::path path);

struct LoadReport {
  std::size_t lines = 0;
  std::size_t comment_lines = 0;
  std::size_t pairs = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  bool gzip = false;
};

struct LoadedGraph {
  Graph graph;
  // original_ids[new_id] is the id used in the file.
  std::vector<std::uint64_t> original_ids;
  LoadReport report;
};

// Loads a whitespace-separated "u v" edge list (optionally gzip-compressed)
// as an undirected simple graph. Ids are remapped to 0..n-1 in order of first
// appearance. Lines starting with '#' or '%' are comments; columns after the
// second are ignored.
// Throws ParseError (with line number) for malformed lines and
// ValidationError when the manifest's expected counts do not match.
LoadedGraph load_edge_list(const std::filesystem::path& path, const DatasetManifest& manifest = {});

// Same parser over an in-memory buffer.
LoadedGraph parse_edge_list(std::string_view text, const DatasetManifest& manifest = {});

// Sidecar "original_id new_id" map, one pair per line in new-id order.
void write_id_map(const std::filesystem::path& path, const std::vector<std::uint64_t>& original_ids);

void write_graph_file(const std::filesystem::path& path, const Graph& g);

}  // namespace opdyn
