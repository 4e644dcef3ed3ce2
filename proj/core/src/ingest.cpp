#include "opdyn/ingest.hpp"

#include <zlib.h>

#include <array>
#include <charconv>
#include <fstream>
#include <unordered_map>

#include "opdyn/error.hpp"

namespace opdyn {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; }

std::string read_file(const std::filesystem::path& path, bool& gzip) {
  {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw Error("cannot open " + path.string());
    std::array<unsigned char, 2> magic{};
    probe.read(reinterpret_cast<char*>(magic.data()), 2);
    gzip = probe.gcount() == 2 && magic[0] == 0x1f && magic[1] == 0x8b;
  }
  if (!gzip) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  gzFile file = gzopen(path.string().c_str(), "rb");
  if (file == nullptr) throw Error("cannot open " + path.string());
  std::string out;
  std::array<char, 1 << 16> buffer{};
  int got = 0;
  while ((got = gzread(file, buffer.data(), static_cast<unsigned>(buffer.size()))) > 0) {
    out.append(buffer.data(), static_cast<std::size_t>(got));
  }
  const bool failed = got < 0;
  gzclose(file);
  if (failed) throw Error("gzip decode failed for " + path.string());
  return out;
}

void validate(const LoadedGraph& loaded, const DatasetManifest& manifest) {
  const std::size_t n = loaded.graph.num_nodes();
  const std::size_t m = loaded.graph.num_edges();
  std::string problems;
  if (manifest.expected_n && *manifest.expected_n != n) {
    problems += " n: expected " + std::to_string(*manifest.expected_n) + ", loaded " + std::to_string(n) + ";";
  }
  if (manifest.expected_m && *manifest.expected_m != m) {
    problems += " m: expected " + std::to_string(*manifest.expected_m) + ", loaded " + std::to_string(m) + ";";
  }
  if (!problems.empty()) throw ValidationError("dataset " + manifest.name + " mismatch:" + problems);
}

}  // namespace

DatasetManifest known_dataset(const std::string& name, std::filesystem::path path) {
  DatasetManifest m;
  m.name = name;
  m.path = std::move(path);
  if (name == "YT") {
    m.expected_n = 1138499;
    m.expected_m = 2990443;
  } else if (name == "SD") {
    m.expected_n = 82168;
    m.expected_m = 582533;
  } else if (name == "TW") {
    m.expected_n = 81306;
    m.expected_m = 1342310;
  } else if (name == "FB") {
    m.expected_n = 63731;
    m.expected_m = 817090;
  } else if (name != "custom") {
    throw ParameterError("unknown dataset label '" + name + "' (expected YT, SD, TW, FB or custom)");
  }
  return m;
}

LoadedGraph parse_edge_list(std::string_view text, const DatasetManifest& manifest) {
  LoadedGraph out;
  std::unordered_map<std::uint64_t, NodeId> remap;
  std::vector<Edge> edges;

  auto intern = [&](std::uint64_t id) {
    const auto [it, inserted] = remap.try_emplace(id, static_cast<NodeId>(out.original_ids.size()));
    if (inserted) out.original_ids.push_back(id);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) continue;
    if (line[i] == '#' || line[i] == '%') {
      ++out.report.comment_lines;
      continue;
    }

    std::array<std::uint64_t, 2> ids{};
    for (auto& id : ids) {
      while (i < line.size() && is_space(line[i])) ++i;
      const char* first = line.data() + i;
      const char* last = line.data() + line.size();
      const auto [ptr, ec] = std::from_chars(first, last, id);
      if (ec != std::errc() || (ptr != last && !is_space(*ptr))) {
        throw ParseError("malformed edge line '" + std::string(line) + "'", line_no);
      }
      i = static_cast<std::size_t>(ptr - line.data());
    }
    const NodeId u = intern(ids[0]);
    const NodeId v = intern(ids[1]);
    edges.emplace_back(u, v);
  }
  out.report.lines = line_no;
  out.report.pairs = edges.size();

  BuildReport build;
  out.graph = build_graph(out.original_ids.size(), edges, &build);
  out.report.self_loops_dropped = build.self_loops_dropped;
  out.report.duplicates_dropped = build.duplicates_dropped;
  validate(out, manifest);
  return out;
}

LoadedGraph load_edge_list(const std::filesystem::path& path, const DatasetManifest& manifest) {
  bool gzip = false;
  const std::string text = read_file(path, gzip);
  LoadedGraph out = parse_edge_list(text, manifest);
  out.report.gzip = gzip;
  return out;
}

void write_id_map(const std::filesystem::path& path, const std::vector<std::uint64_t>& original_ids) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  for (std::size_t i = 0; i < original_ids.size(); ++i) out << original_ids[i] << ' ' << i << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_edge_list(out, g);
}

}  // namespace opdyn
