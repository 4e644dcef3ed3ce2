#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opdyn/graph.hpp"

namespace opdyn {

enum class Color : std::uint8_t { White = 0, Black = 1 };

inline Color opposite(Color c) noexcept { return c == Color::Black ? Color::White : Color::Black; }

/// One black/white assignment of a graph's nodes, packed 64 per word.
/// Bits beyond size() are kept zero so equality is a word compare.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t n, Color fill = Color::White)
      : n_(n), words_((n + 63) / 64, fill == Color::Black ? ~std::uint64_t{0} : 0) {
    clear_tail();
  }

  std::size_t size() const noexcept { return n_; }

  bool is_black(NodeId v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }
  Color operator[](NodeId v) const noexcept { return is_black(v) ? Color::Black : Color::White; }

  void set(NodeId v, Color c) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (c == Color::Black) {
      words_[v >> 6] |= bit;
    } else {
      words_[v >> 6] &= ~bit;
    }
  }
  void flip(NodeId v) noexcept { words_[v >> 6] ^= std::uint64_t{1} << (v & 63); }

  std::size_t count_black() const noexcept {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  // "b"/"w" per node, e.g. "bwbw".
  static Coloring from_string(std::string_view text);
  std::string to_string() const;

  // Node i takes bit i of `bits` (n <= 64); used by exhaustive sweeps.
  static Coloring from_bits(std::size_t n, std::uint64_t bits);

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  void clear_tail() noexcept {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace opdyn
