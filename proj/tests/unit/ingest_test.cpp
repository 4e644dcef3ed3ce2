#include <zlib.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "opdyn/error.hpp"
#include "opdyn/generators.hpp"
#include "opdyn/ingest.hpp"

using namespace opdyn;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "opdyn_ingest_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

void write_gzip(const fs::path& path, const std::string& text) {
  gzFile f = gzopen(path.string().c_str(), "wb");
  REQUIRE(f != nullptr);
  gzwrite(f, text.data(), static_cast<unsigned>(text.size()));
  gzclose(f);
}

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("undirected dedup and comments") {
  const auto loaded = parse_edge_list("0 1\n1 0\n# c\n1 2\n");
  CHECK(loaded.graph.num_nodes() == 3);
  CHECK(loaded.graph.num_edges() == 2);
  CHECK(loaded.report.comment_lines == 1);
  CHECK(loaded.report.duplicates_dropped == 1);
  CHECK(loaded.report.pairs == 3);
}

TEST_CASE("ids are remapped by first appearance") {
  const auto loaded = parse_edge_list("% header\n100 7\n7 42\n42 100\n");
  CHECK(loaded.original_ids == std::vector<std::uint64_t>{100, 7, 42});
  CHECK(loaded.graph.has_edge(0, 1));
  CHECK(loaded.graph.has_edge(1, 2));
  CHECK(loaded.graph.has_edge(0, 2));
}

TEST_CASE("separators, extra columns and self-loops") {
  const auto loaded = parse_edge_list("1\t2\r\n2,3,17\n  3 3\n\n4 1 foo\n");
  CHECK(loaded.graph.num_nodes() == 4);
  CHECK(loaded.graph.num_edges() == 3);
  CHECK(loaded.report.self_loops_dropped == 1);
}

TEST_CASE("malformed lines report their line number") {
  try {
    parse_edge_list("0 1\n# ok\n2 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("5\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("-1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("1.5 2\n"), ParseError);
}

TEST_CASE("manifest counts are enforced") {
  DatasetManifest manifest;
  manifest.name = "toy";
  manifest.expected_n = 3;
  manifest.expected_m = 2;
  CHECK_NOTHROW(parse_edge_list("0 1\n1 2\n", manifest));
  manifest.expected_m = 3;
  try {
    parse_edge_list("0 1\n1 2\n", manifest);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find('2') != std::string::npos);
    CHECK(what.find('3') != std::string::npos);
  }
}

TEST_CASE("known datasets carry published counts") {
  const auto fb = known_dataset("FB", "fb.txt");
  CHECK(fb.expected_n == 63731u);
  CHECK(fb.expected_m == 817090u);
  CHECK(known_dataset("YT", "x").expected_m == 2990443u);
  CHECK(known_dataset("SD", "x").expected_n == 82168u);
  CHECK(known_dataset("TW", "x").expected_m == 1342310u);
  CHECK_FALSE(known_dataset("custom", "x").expected_n.has_value());
  CHECK_THROWS_AS(known_dataset("ZZ", "x"), ParameterError);
}

TEST_CASE("plain and gzip files load identically") {
  const std::string text = "# toy\n0 1\n1 2\n2 3\n3 0\n0 2\n";
  write_text(scratch("toy.txt"), text);
  write_gzip(scratch("toy.txt.gz"), text);
  const auto plain = load_edge_list(scratch("toy.txt"));
  const auto packed = load_edge_list(scratch("toy.txt.gz"));
  CHECK_FALSE(plain.report.gzip);
  CHECK(packed.report.gzip);
  CHECK(plain.graph == packed.graph);
  CHECK(plain.original_ids == packed.original_ids);
  CHECK_THROWS_AS(load_edge_list(scratch("missing.txt")), Error);
}

TEST_CASE("load, write, load round trip through the id map") {
  const std::string text = "10 20\n20 30\n30 10\n40 10\n";
  write_text(scratch("orig.txt"), text);
  const auto first = load_edge_list(scratch("orig.txt"));
  write_graph_file(scratch("canon.txt"), first.graph);
  write_id_map(scratch("canon.map"), first.original_ids);

  // Translate the canonical file back to original ids and load again.
  std::map<std::uint64_t, std::uint64_t> back;
  std::ifstream map_in(scratch("canon.map"));
  for (std::uint64_t orig, fresh; map_in >> orig >> fresh;) back[fresh] = orig;
  std::ifstream canon_in(scratch("canon.txt"));
  std::ostringstream translated;
  for (std::uint64_t u, v; canon_in >> u >> v;) translated << back.at(u) << ' ' << back.at(v) << '\n';
  write_text(scratch("again.txt"), translated.str());
  const auto second = load_edge_list(scratch("again.txt"));

  // Same edge set over original ids.
  auto original_edges = [](const LoadedGraph& g) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> s;
    for (auto [u, v] : g.graph.edges()) {
      auto a = g.original_ids[u], b = g.original_ids[v];
      s.insert({std::min(a, b), std::max(a, b)});
    }
    return s;
  };
  CHECK(original_edges(first) == original_edges(second));

  // Reading the canonical file back sees exactly the canonical edge set.
  const auto canon = load_edge_list(scratch("canon.txt"));
  std::set<std::pair<std::uint64_t, std::uint64_t>> expected;
  for (auto [u, v] : first.graph.edges()) expected.insert({u, v});
  CHECK(original_edges(canon) == expected);
}

}
