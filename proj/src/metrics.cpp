#include "genrank/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "genrank/error.hpp"

namespace genrank {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::InvalidInterval, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      std::size_t used = 0;
      std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw Error(Errc::Parse, "bad rational '" + text + "'");
      return Rational(v);
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::int64_t den = 1;
    for (std::size_t k = dot + 1; k < text.size(); ++k) den *= 10;
    std::size_t used = 0;
    std::int64_t v = std::stoll(digits, &used);
    if (used != digits.size()) throw Error(Errc::Parse, "bad rational '" + text + "'");
    return Rational(v, den);
  } catch (const std::logic_error&) {
    throw Error(Errc::Parse, "bad rational '" + text + "'");
  }
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }
Rational operator/(const Rational& a, const Rational& b) { return Rational(a.num_ * b.den_, a.den_ * b.num_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Extended::to_string() const {
  if (kind == Kind::PosInf) return "inf";
  if (kind == Kind::NegInf) return "-inf";
  return value.to_string();
}

std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  if (a.kind != Extended::Kind::Finite) return std::strong_ordering::equal;
  return a.value <=> b.value;
}

std::string to_string(Decoration d) {
  switch (d) {
    case Decoration::Open: return "o";
    case Decoration::ClosedOpen: return "co";
    case Decoration::OpenClosed: return "oc";
    case Decoration::Closed: return "c";
  }
  return "?";
}

Decoration parse_decoration(const std::string& tag) {
  if (tag == "o") return Decoration::Open;
  if (tag == "co") return Decoration::ClosedOpen;
  if (tag == "oc") return Decoration::OpenClosed;
  if (tag == "c") return Decoration::Closed;
  throw Error(Errc::MissingDecoration, "unknown decoration '" + tag + "'");
}

DiagramPoints intervals_to_points(const ZZBarcode& bars) {
  DiagramPoints out;
  for (const auto& [i, mult] : bars) {
    if (mult < 0)
      throw Error(Errc::NegativeMultiplicity, i.to_string() + " has multiplicity " + std::to_string(mult) +
                                                  "; signed diagrams have no matching semantics");
    if (mult == 0) continue;
    out.push_back({Extended::finite(Rational(i.b)), Extended::finite(Rational(i.d)), parse_decoration(i.decoration()),
                   static_cast<std::size_t>(mult)});
  }
  return out;
}

std::string Distance::to_string() const { return infinite ? "inf" : value.to_string(); }

namespace {

// nullopt encodes +inf.
using Cost = std::optional<Rational>;

Cost coord_gap(const Extended& a, const Extended& b) {
  if (a.is_finite() && b.is_finite()) {
    Rational d = a.value - b.value;
    return d < Rational(0) ? Rational(0) - d : d;
  }
  if (a.kind == b.kind) return Rational(0);
  return std::nullopt;
}

Cost point_gap(const DiagramPoint& u, const DiagramPoint& v) {
  Cost x = coord_gap(u.birth, v.birth), y = coord_gap(u.death, v.death);
  if (!x || !y) return std::nullopt;
  return std::max(*x, *y);
}

Cost deletion_cost(const DiagramPoint& u) {
  if (!u.birth.is_finite() || !u.death.is_finite()) return std::nullopt;
  return (u.death.value - u.birth.value) / Rational(2);
}

bool within(const Cost& c, const Rational& eps) { return c && *c <= eps; }

std::vector<DiagramPoint> expand(const DiagramPoints& pts) {
  std::vector<DiagramPoint> out;
  for (const auto& p : pts) {
    if (p.birth > p.death) throw Error(Errc::InvalidInterval, "point with birth after death");
    for (std::size_t k = 0; k < p.multiplicity; ++k) out.push_back(p);
  }
  return out;
}

bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj, std::vector<char>& seen,
             std::vector<std::ptrdiff_t>& match_right) {
  for (std::size_t v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = 1;
    if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]), adj, seen, match_right)) {
      match_right[v] = static_cast<std::ptrdiff_t>(u);
      return true;
    }
  }
  return false;
}

bool matching_exists(const std::vector<DiagramPoint>& x, const std::vector<DiagramPoint>& y, const Rational& eps) {
  // Left: x points, then one diagonal slot per y point. Right: y points, then one slot per x point.
  const std::size_t n = x.size(), m = y.size(), size = n + m;
  std::vector<std::vector<std::size_t>> adj(size);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if (within(point_gap(x[i], y[j]), eps)) adj[i].push_back(j);
    if (within(deletion_cost(x[i]), eps)) adj[i].push_back(m + i);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (within(deletion_cost(y[j]), eps)) adj[n + j].push_back(j);
    for (std::size_t i = 0; i < n; ++i) adj[n + j].push_back(m + i);
  }
  std::vector<std::ptrdiff_t> match_right(size, -1);
  for (std::size_t u = 0; u < size; ++u) {
    std::vector<char> seen(size, 0);
    if (!augment(u, adj, seen, match_right)) return false;
  }
  return true;
}

}  // namespace

bool epsilon_matching_exists(const DiagramPoints& x, const DiagramPoints& y, const Rational& eps) {
  if (eps < Rational(0)) return false;
  return matching_exists(expand(x), expand(y), eps);
}

Distance bottleneck(const DiagramPoints& x, const DiagramPoints& y) {
  auto ex = expand(x), ey = expand(y);
  std::vector<Rational> cand{Rational(0)};
  for (const auto& u : ex) {
    if (auto c = deletion_cost(u)) cand.push_back(*c);
    for (const auto& v : ey)
      if (auto c = point_gap(u, v)) cand.push_back(*c);
  }
  for (const auto& v : ey)
    if (auto c = deletion_cost(v)) cand.push_back(*c);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  if (!matching_exists(ex, ey, cand.back())) return {true, {}};
  std::size_t lo = 0, hi = cand.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (matching_exists(ex, ey, cand[mid])) hi = mid;
    else lo = mid + 1;
  }
  return {false, cand[lo]};
}

PerDecoration bottleneck_per_decoration(const DiagramPoints& x, const DiagramPoints& y) {
  std::map<Decoration, std::pair<DiagramPoints, DiagramPoints>> split;
  for (auto d : {Decoration::Open, Decoration::ClosedOpen, Decoration::OpenClosed, Decoration::Closed}) split[d];
  for (const auto& p : x) {
    if (!p.decoration) throw Error(Errc::MissingDecoration, "point without decoration tag");
    split[*p.decoration].first.push_back(p);
  }
  for (const auto& p : y) {
    if (!p.decoration) throw Error(Errc::MissingDecoration, "point without decoration tag");
    split[*p.decoration].second.push_back(p);
  }
  PerDecoration out;
  for (const auto& [d, xy] : split) {
    Distance dist = bottleneck(xy.first, xy.second);
    out.per_class[d] = dist;
    if (dist.infinite || (!out.max.infinite && out.max.value < dist.value)) out.max = dist;
  }
  return out;
}

}  // namespace genrank
