#pragma once

// Zigzag intervals and the three index shapes a diagram can live on.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genrank/poset.hpp"

namespace genrank {

enum class Bound { Open, Closed };

// <b,d>_ZZ. Vertex (i,i) sits at position 2i, edge (i,i-1) at 2i-1.
struct ZZInterval {
  std::int64_t b = 0;
  std::int64_t d = 0;
  Bound left = Bound::Closed;
  Bound right = Bound::Closed;

  static ZZInterval closed(std::int64_t b, std::int64_t d) { return {b, d, Bound::Closed, Bound::Closed}; }
  // Inverse of positions(); throws InvalidInterval when p > q.
  static ZZInterval from_positions(std::int64_t p, std::int64_t q);
  // Grammar: [b,d] [b,d) (b,d] (b,d). Throws Parse or InvalidInterval.
  static ZZInterval parse(std::string_view text);

  void validate() const;  // throws InvalidInterval
  std::pair<std::int64_t, std::int64_t> positions() const;
  std::string to_string() const;
  std::string decoration() const;  // o, co, oc, c

  friend bool operator==(const ZZInterval& a, const ZZInterval& b) { return a.positions() == b.positions(); }
  friend std::strong_ordering operator<=>(const ZZInterval& a, const ZZInterval& b) {
    return a.positions() <=> b.positions();
  }
};

struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool operator==(const Window&) const = default;
};

enum class Side { Minus, Plus, Both };

// nullopt is the out-of-window sentinel; callers read it as rank 0.
std::optional<ZZInterval> zz_extend(const ZZInterval& i, Side side, Window w);

enum class IndexKind { General, ZigZag, Line };

class IndexShape {
 public:
  IndexShape() = default;
  static IndexShape general(Poset p);
  static IndexShape zigzag(std::int64_t lo, std::int64_t hi);
  static IndexShape line(std::int64_t lo, std::int64_t hi);

  IndexKind kind() const noexcept { return kind_; }
  bool is_path() const noexcept { return kind_ != IndexKind::General; }
  const Poset& poset() const noexcept { return poset_; }
  Window window() const noexcept { return window_; }
  std::size_t size() const noexcept { return poset_.size(); }

  // Path shapes: node k has absolute position pos(k). Zigzag positions follow the ZZ encoding;
  // line positions are the integers themselves.
  std::int64_t position(Index k) const;
  Index node_at(std::int64_t position) const;

  // Zigzag: "v3"/"e3"; line: "3"; general: the element label.
  std::string node_name(Index k) const;
  std::optional<Index> find_node(std::string_view name) const;

  // Interval text <-> subposet. Line windows use closed [a,b] only.
  Subposet parse_interval(std::string_view text) const;
  std::string format(const Subposet& s) const;
  ZZInterval to_interval(const Subposet& s) const;  // path shapes; s must be contiguous
  Subposet from_interval(const ZZInterval& i) const;

  // All contiguous runs (path shapes) or all intervals of P (general), lexicographic.
  std::vector<Subposet> intervals() const;

  friend bool operator==(const IndexShape& a, const IndexShape& b);

 private:
  IndexKind kind_ = IndexKind::General;
  Poset poset_;
  Window window_{};
};

}  // namespace genrank
