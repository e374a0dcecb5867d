#include "genrank/shape.hpp"

#include <cctype>
#include <charconv>

#include "genrank/error.hpp"

namespace genrank {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(Errc::Parse, "bad integer in interval '" + std::string(whole) + "'");
  return v;
}

}  // namespace

ZZInterval ZZInterval::from_positions(std::int64_t p, std::int64_t q) {
  if (p > q) throw Error(Errc::InvalidInterval, "empty position range");
  ZZInterval i;
  if (p % 2 == 0) {
    i.b = p / 2;
    i.left = Bound::Closed;
  } else {
    i.b = (p - 1) / 2;
    i.left = Bound::Open;
  }
  if (q % 2 == 0) {
    i.d = q / 2;
    i.right = Bound::Closed;
  } else {
    i.d = (q + 1) / 2;
    i.right = Bound::Open;
  }
  return i;
}

ZZInterval ZZInterval::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 5) throw Error(Errc::Parse, "bad interval '" + std::string(text) + "'");
  ZZInterval i;
  if (s.front() == '[') i.left = Bound::Closed;
  else if (s.front() == '(') i.left = Bound::Open;
  else throw Error(Errc::Parse, "interval must start with '[' or '(': '" + std::string(text) + "'");
  if (s.back() == ']') i.right = Bound::Closed;
  else if (s.back() == ')') i.right = Bound::Open;
  else throw Error(Errc::Parse, "interval must end with ']' or ')': '" + std::string(text) + "'");
  std::string_view body = s.substr(1, s.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
    throw Error(Errc::Parse, "interval needs exactly one comma: '" + std::string(text) + "'");
  i.b = parse_int(body.substr(0, comma), text);
  i.d = parse_int(body.substr(comma + 1), text);
  i.validate();
  return i;
}

void ZZInterval::validate() const {
  if (b > d) throw Error(Errc::InvalidInterval, "interval with b > d: " + to_string());
  if (b == d && (left != Bound::Closed || right != Bound::Closed))
    throw Error(Errc::InvalidInterval, "degenerate interval must be closed: " + to_string());
}

std::pair<std::int64_t, std::int64_t> ZZInterval::positions() const {
  return {left == Bound::Closed ? 2 * b : 2 * b + 1, right == Bound::Closed ? 2 * d : 2 * d - 1};
}

std::string ZZInterval::to_string() const {
  return std::string(left == Bound::Closed ? "[" : "(") + std::to_string(b) + "," + std::to_string(d) +
         (right == Bound::Closed ? "]" : ")");
}

std::string ZZInterval::decoration() const {
  if (left == Bound::Open && right == Bound::Open) return "o";
  if (left == Bound::Closed && right == Bound::Open) return "co";
  if (left == Bound::Open && right == Bound::Closed) return "oc";
  return "c";
}

std::optional<ZZInterval> zz_extend(const ZZInterval& i, Side side, Window w) {
  auto [p, q] = i.positions();
  if (side != Side::Plus) --p;
  if (side != Side::Minus) ++q;
  if (p < 2 * w.lo || q > 2 * w.hi) return std::nullopt;
  return ZZInterval::from_positions(p, q);
}

IndexShape IndexShape::general(Poset p) {
  IndexShape s;
  s.kind_ = IndexKind::General;
  s.poset_ = std::move(p);
  return s;
}

IndexShape IndexShape::zigzag(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(Errc::InvalidInterval, "zigzag window needs lo <= hi");
  IndexShape s;
  s.kind_ = IndexKind::ZigZag;
  s.window_ = {lo, hi};
  std::vector<std::string> names;
  for (std::int64_t pos = 2 * lo; pos <= 2 * hi; ++pos)
    names.push_back(pos % 2 == 0 ? "v" + std::to_string(pos / 2) : "e" + std::to_string((pos + 1) / 2));
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t k = 1; k + 1 < names.size(); k += 2) {
    rel.emplace_back(names[k], names[k - 1]);
    rel.emplace_back(names[k], names[k + 1]);
  }
  s.poset_ = Poset::build(std::move(names), rel);
  return s;
}

IndexShape IndexShape::line(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(Errc::InvalidInterval, "line window needs lo <= hi");
  IndexShape s;
  s.kind_ = IndexKind::Line;
  s.window_ = {lo, hi};
  std::vector<std::string> names;
  for (std::int64_t i = lo; i <= hi; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t k = 0; k + 1 < names.size(); ++k) rel.emplace_back(names[k], names[k + 1]);
  s.poset_ = Poset::build(std::move(names), rel);
  return s;
}

std::int64_t IndexShape::position(Index k) const {
  switch (kind_) {
    case IndexKind::ZigZag: return 2 * window_.lo + static_cast<std::int64_t>(k);
    case IndexKind::Line: return window_.lo + static_cast<std::int64_t>(k);
    default: throw Error(Errc::NotZigzag, "positions exist only on path shapes");
  }
}

Index IndexShape::node_at(std::int64_t position) const {
  std::int64_t base = kind_ == IndexKind::ZigZag ? 2 * window_.lo : window_.lo;
  if (kind_ == IndexKind::General) throw Error(Errc::NotZigzag, "positions exist only on path shapes");
  std::int64_t k = position - base;
  if (k < 0 || k >= static_cast<std::int64_t>(size())) throw Error(Errc::InvalidInterval, "position outside window");
  return static_cast<Index>(k);
}

std::string IndexShape::node_name(Index k) const { return poset_.label(k); }

std::optional<Index> IndexShape::find_node(std::string_view name) const { return poset_.find(name); }

Subposet IndexShape::parse_interval(std::string_view text) const {
  std::string_view s = trim(text);
  if (kind_ == IndexKind::General) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
      throw Error(Errc::Parse, "poset interval must look like {a,b}: '" + std::string(text) + "'");
    std::vector<std::string> labels;
    std::string_view body = s.substr(1, s.size() - 2);
    while (true) {
      auto comma = body.find(',');
      auto tok = trim(body.substr(0, comma));
      if (tok.empty()) throw Error(Errc::Parse, "empty element in '" + std::string(text) + "'");
      labels.emplace_back(tok);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return subposet_of(poset_, labels);
  }
  ZZInterval i = ZZInterval::parse(s);
  return from_interval(i);
}

std::string IndexShape::format(const Subposet& s) const {
  if (kind_ != IndexKind::General) return to_interval(s).to_string();
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + poset_.label(s.members()[k]);
  return out + "}";
}

ZZInterval IndexShape::to_interval(const Subposet& s) const {
  if (kind_ == IndexKind::General) throw Error(Errc::NotZigzag, "general posets have no ZZ intervals");
  check_subposet(poset_, s);
  const auto& m = s.members();
  if (m.back() - m.front() + 1 != m.size()) throw Error(Errc::InvalidInterval, "subposet is not contiguous");
  if (kind_ == IndexKind::Line) return ZZInterval::closed(position(m.front()), position(m.back()));
  return ZZInterval::from_positions(position(m.front()), position(m.back()));
}

Subposet IndexShape::from_interval(const ZZInterval& i) const {
  i.validate();
  std::int64_t p, q;
  if (kind_ == IndexKind::Line) {
    if (i.left != Bound::Closed || i.right != Bound::Closed)
      throw Error(Errc::InvalidInterval, "line windows use closed intervals only: " + i.to_string());
    p = i.b;
    q = i.d;
  } else if (kind_ == IndexKind::ZigZag) {
    std::tie(p, q) = i.positions();
  } else {
    throw Error(Errc::NotZigzag, "general posets have no ZZ intervals");
  }
  Index a = node_at(p), b = node_at(q);
  std::vector<Index> v;
  for (Index k = a; k <= b; ++k) v.push_back(k);
  return Subposet(std::move(v));
}

std::vector<Subposet> IndexShape::intervals() const {
  if (kind_ == IndexKind::General) return enumerate_intervals(poset_, poset_.size());
  std::vector<Subposet> out;
  for (Index a = 0; a < size(); ++a) {
    std::vector<Index> v;
    for (Index b = a; b < size(); ++b) {
      v.push_back(b);
      out.emplace_back(v);
    }
  }
  return out;
}

bool operator==(const IndexShape& a, const IndexShape& b) {
  return a.kind_ == b.kind_ && a.window_ == b.window_ && a.poset_.labels() == b.poset_.labels() &&
         a.poset_.covers() == b.poset_.covers();
}

}  // namespace genrank
