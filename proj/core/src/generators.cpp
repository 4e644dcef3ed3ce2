#include "opdyn/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "opdyn/error.hpp"
#include "opdyn/random.hpp"

namespace opdyn {
namespace {

// Open-addressing set of undirected edge keys, used while pairing stubs.
class EdgeKeySet {
 public:
  explicit EdgeKeySet(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, kEmpty);
    mask_ = cap - 1;
  }

  // Returns false if already present.
  bool insert(NodeId u, NodeId v) {
    const std::uint64_t key = make_key(u, v);
    std::size_t i = splitmix64(key) & mask_;
    while (slots_[i] != kEmpty) {
      if (slots_[i] == key) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = key;
    ++size_;
    return true;
  }

  bool contains(NodeId u, NodeId v) const {
    const std::uint64_t key = make_key(u, v);
    std::size_t i = splitmix64(key) & mask_;
    while (slots_[i] != kEmpty) {
      if (slots_[i] == key) return true;
      i = (i + 1) & mask_;
    }
    return false;
  }

  std::vector<Edge> to_edges() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (std::uint64_t key : slots_) {
      if (key != kEmpty) out.emplace_back(static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xFFFFFFFFu));
    }
    return out;
  }

 private:
  static constexpr std::uint64_t kEmpty = std::numeric_limits<std::uint64_t>::max();
  static std::uint64_t make_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  std::vector<std::uint64_t> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

// One Steger-Wormald style attempt. Returns false when it gets stuck.
bool try_steger_wormald(std::size_t n, std::size_t d, Rng& rng, std::vector<Edge>& out) {
  EdgeKeySet edges(n * d / 2);
  std::vector<NodeId> stubs;
  stubs.reserve(n * d);
  for (NodeId v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);

  std::vector<std::uint32_t> leftover(n, 0);
  std::vector<NodeId> touched;
  while (!stubs.empty()) {
    shuffle(stubs.begin(), stubs.end(), rng);
    touched.clear();
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const NodeId a = stubs[i];
      const NodeId b = stubs[i + 1];
      if (a != b && edges.insert(a, b)) continue;
      for (NodeId x : {a, b}) {
        if (leftover[x]++ == 0) touched.push_back(x);
      }
    }
    if (touched.empty()) break;

    // Is any pair of leftover nodes still joinable?
    std::sort(touched.begin(), touched.end());
    bool suitable = false;
    for (std::size_t i = 0; i < touched.size() && !suitable; ++i) {
      for (std::size_t j = i + 1; j < touched.size(); ++j) {
        if (!edges.contains(touched[i], touched[j])) {
          suitable = true;
          break;
        }
      }
    }
    if (!suitable) return false;

    stubs.clear();
    for (NodeId x : touched) {
      stubs.insert(stubs.end(), leftover[x], x);
      leftover[x] = 0;
    }
  }
  out = edges.to_edges();
  return true;
}

bool try_restart_pairing(std::size_t n, std::size_t d, Rng& rng, std::vector<Edge>& out) {
  std::vector<NodeId> stubs;
  stubs.reserve(n * d);
  for (NodeId v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
  shuffle(stubs.begin(), stubs.end(), rng);
  EdgeKeySet edges(n * d / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    if (stubs[i] == stubs[i + 1] || !edges.insert(stubs[i], stubs[i + 1])) return false;
  }
  out = edges.to_edges();
  return true;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::ER: return "er";
    case Family::RRG: return "rrg";
    case Family::PA: return "pa";
    case Family::HRG: return "hrg";
    case Family::Cycle: return "cycle";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "er") return Family::ER;
  if (lower == "rrg") return Family::RRG;
  if (lower == "pa") return Family::PA;
  if (lower == "hrg") return Family::HRG;
  if (lower == "cycle") return Family::Cycle;
  throw ParameterError("unknown graph family '" + text + "' (expected er, rrg, pa, hrg or cycle)");
}

void GenSpec::validate() const {
  switch (family) {
    case Family::ER:
      if (!(q >= 0.0 && q <= 1.0)) throw ParameterError("ER: q must lie in [0, 1]");
      break;
    case Family::RRG:
      if (d >= n) throw ParameterError("RRG: d = " + std::to_string(d) + " must be < n = " + std::to_string(n));
      if ((n * d) % 2 != 0) {
        throw ParameterError("RRG: n*d must be even (n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
      }
      break;
    case Family::PA:
      if (m_out < 1) throw ParameterError("PA: m_out must be >= 1");
      if (n <= m_out) throw ParameterError("PA: n must exceed m_out");
      break;
    case Family::HRG:
      if (!(beta > 2.0)) throw ParameterError("HRG: beta must be > 2");
      if (!(temperature > 0.0 && temperature < 1.0)) throw ParameterError("HRG: T must lie in (0, 1)");
      if (!(target_avg_deg > 0.0) || target_avg_deg >= static_cast<double>(n) - 1.0) {
        throw ParameterError("HRG: target average degree must lie in (0, n-1)");
      }
      break;
    case Family::Cycle:
      if (n < 3) throw ParameterError("cycle: n must be >= 3");
      break;
  }
}

Graph generate(const GenSpec& spec, GenerationInfo* info) {
  spec.validate();
  switch (spec.family) {
    case Family::ER: return gen_er(spec.n, spec.q, spec.seed);
    case Family::RRG:
      return gen_rrg(spec.n, spec.d, spec.seed, spec.rrg_strategy, info ? &info->rrg_attempts : nullptr);
    case Family::PA: return gen_pa(spec.n, spec.m_out, spec.seed);
    case Family::HRG:
      return gen_hrg(spec.n, spec.target_avg_deg, spec.beta, spec.temperature, spec.seed,
                     info ? &info->hrg : nullptr);
    case Family::Cycle: return gen_cycle(spec.n);
  }
  throw ParameterError("unknown family");
}

Graph gen_er(std::size_t n, double q, std::uint64_t seed) {
  if (!(q >= 0.0 && q <= 1.0)) throw ParameterError("ER: q must lie in [0, 1]");
  std::vector<Edge> edges;
  if (n < 2 || q == 0.0) return build_graph(n, edges);
  if (q == 1.0) {
    edges.reserve(n * (n - 1) / 2);
    for (NodeId v = 1; v < n; ++v) {
      for (NodeId w = 0; w < v; ++w) edges.emplace_back(w, v);
    }
    return build_graph(n, edges);
  }

  // Batagelj-Brandes: walk the lower triangle in row-major order, jumping
  // geometrically distributed gaps between successive edges.
  Rng rng(seed);
  const double log_miss = std::log1p(-q);
  edges.reserve(static_cast<std::size_t>(q * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * 1.05) + 16);
  std::uint64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double u = uniform01(rng);
    const double skip = std::floor(std::log1p(-u) / log_miss);
    const double limit = static_cast<double>(n) * static_cast<double>(n);
    w += 1 + static_cast<std::int64_t>(std::min(skip, limit));
    while (v < n && w >= static_cast<std::int64_t>(v)) {
      w -= static_cast<std::int64_t>(v);
      ++v;
    }
    if (v < n) edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
  }
  return build_graph(n, edges);
}

Graph gen_rrg(std::size_t n, std::size_t d, std::uint64_t seed, RrgStrategy strategy, std::size_t* attempts) {
  GenSpec spec;
  spec.family = Family::RRG;
  spec.n = n;
  spec.d = d;
  spec.validate();

  Rng rng(seed);
  std::vector<Edge> edges;
  constexpr std::size_t kMaxAttempts = 10000;
  for (std::size_t attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    const bool ok = strategy == RrgStrategy::StegerWormald ? try_steger_wormald(n, d, rng, edges)
                                                           : try_restart_pairing(n, d, rng, edges);
    if (ok) {
      if (attempts != nullptr) *attempts = attempt;
      return build_graph(n, edges);
    }
  }
  throw ParameterError("RRG: no simple " + std::to_string(d) + "-regular graph found after " +
                       std::to_string(kMaxAttempts) + " attempts");
}

Graph gen_pa(std::size_t n, std::size_t m_out, std::uint64_t seed) {
  GenSpec spec;
  spec.family = Family::PA;
  spec.n = n;
  spec.m_out = m_out;
  spec.validate();

  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m_out * (m_out + 1) / 2 + (n - m_out - 1) * m_out);
  // Node v appears deg(v) times, so uniform draws are degree-proportional.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());
  for (NodeId a = 0; a <= m_out; ++a) {
    for (NodeId b = a + 1; b <= m_out; ++b) {
      edges.emplace_back(a, b);
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  }

  std::vector<NodeId> chosen;
  chosen.reserve(m_out);
  for (NodeId v = static_cast<NodeId>(m_out + 1); v < n; ++v) {
    chosen.clear();
    while (chosen.size() < m_out) {
      const NodeId target = endpoints[uniform_below(rng, endpoints.size())];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) chosen.push_back(target);
    }
    for (NodeId target : chosen) {
      edges.emplace_back(target, v);
      endpoints.push_back(target);
      endpoints.push_back(v);
    }
  }
  return build_graph(n, edges);
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw ParameterError("cycle: n must be >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<NodeId>((i + 1) % n));
  return build_graph(n, edges);
}

std::size_t parity_adjusted_degree(double target, std::size_t n) {
  auto d = static_cast<std::int64_t>(std::llround(target));
  if (n % 2 == 1 && d % 2 != 0) {
    // Pick the even neighbour closest to the real-valued target.
    d = (target >= static_cast<double>(d)) ? d + 1 : d - 1;
    if (d < 0) d = 0;
  }
  if (d >= static_cast<std::int64_t>(n)) {
    throw ParameterError("degree " + std::to_string(d) + " must be < n = " + std::to_string(n));
  }
  return static_cast<std::size_t>(d);
}

GenSpec match_params(const DegreeStats& reference, Family family, std::uint64_t seed) {
  GenSpec spec;
  spec.family = family;
  spec.n = reference.n;
  spec.seed = seed;
  const double avg = reference.average();
  switch (family) {
    case Family::ER:
      spec.q = reference.n < 2 ? 0.0
                               : 2.0 * static_cast<double>(reference.m) /
                                     (static_cast<double>(reference.n) * static_cast<double>(reference.n - 1));
      break;
    case Family::RRG: spec.d = parity_adjusted_degree(avg, reference.n); break;
    case Family::PA:
      spec.m_out = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(avg / 2.0)));
      break;
    case Family::HRG:
      spec.target_avg_deg = avg;
      spec.beta = 2.5;
      spec.temperature = 0.6;
      break;
    case Family::Cycle: break;
  }
  return spec;
}

}  // namespace opdyn
