#include "genrank/setmod.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "genrank/error.hpp"

namespace genrank {

SetDiagram::SetDiagram(IndexShape shape, std::vector<std::vector<std::string>> elements,
                       std::vector<std::vector<std::size_t>> maps)
    : shape_(std::move(shape)), elements_(std::move(elements)), maps_(std::move(maps)) {
  if (!shape_.is_path()) throw Error(Errc::NotZigzag, "set diagrams live on zigzag or line windows");
  const Poset& p = shape_.poset();
  if (elements_.size() != p.size()) throw Error(Errc::ShapeMismatch, "one element list per node expected");
  if (maps_.size() != p.covers().size()) throw Error(Errc::ShapeMismatch, "one map per cover expected");
  for (Index k = 0; k < p.size(); ++k) {
    std::set<std::string> seen(elements_[k].begin(), elements_[k].end());
    if (seen.size() != elements_[k].size())
      throw Error(Errc::DuplicateElement, "repeated element label in node " + p.label(k));
  }
  for (std::size_t c = 0; c < maps_.size(); ++c) {
    auto [lo, hi] = p.covers()[c];
    if (maps_[c].size() != elements_[lo].size())
      throw Error(Errc::ShapeMismatch, "map " + p.label(lo) + "->" + p.label(hi) + " is not total");
    for (auto y : maps_[c])
      if (y >= elements_[hi].size())
        throw Error(Errc::ShapeMismatch, "map " + p.label(lo) + "->" + p.label(hi) + " hits a missing element");
  }
}

const std::vector<std::size_t>& SetDiagram::cover_map(Index lo, Index hi) const {
  auto id = poset().cover_id(lo, hi);
  if (!id) throw Error(Errc::InvalidIndex, "no cover " + poset().label(lo) + "->" + poset().label(hi));
  return maps_[*id];
}

bool SetDiagram::empty() const {
  return std::all_of(elements_.begin(), elements_.end(), [](const auto& e) { return e.empty(); });
}

SetDiagram disjoint_union(const SetDiagram& a, const SetDiagram& b) {
  if (!(a.shape() == b.shape())) throw Error(Errc::ShapeMismatch, "disjoint union needs equal windows");
  const Poset& p = a.poset();
  std::vector<std::vector<std::string>> el(p.size());
  for (Index k = 0; k < p.size(); ++k) {
    for (const auto& x : a.elements(k)) el[k].push_back(x + "#0");
    for (const auto& x : b.elements(k)) el[k].push_back(x + "#1");
  }
  std::vector<std::vector<std::size_t>> maps;
  for (std::size_t c = 0; c < p.covers().size(); ++c) {
    auto hi = p.covers()[c].second;
    auto m = a.maps()[c];
    for (auto y : b.maps()[c]) m.push_back(y + a.cardinality(hi));
    maps.push_back(std::move(m));
  }
  return SetDiagram(a.shape(), std::move(el), std::move(maps));
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void require_run(const SetDiagram& d, const Subposet& i) {
  d.shape().to_interval(i);  // throws unless contiguous and in range
}

}  // namespace

ComponentTable colimit_components(const SetDiagram& d, const Subposet& i) {
  require_run(d, i);
  ComponentTable t;
  t.interval = i;
  std::vector<Element> flat;
  std::map<Element, std::size_t> id;
  for (Index k : i.members())
    for (std::size_t x = 0; x < d.cardinality(k); ++x) {
      id[{k, x}] = flat.size();
      flat.emplace_back(k, x);
    }
  UnionFind uf(flat.size());
  for (auto [lo, hi] : d.poset().covers()) {
    if (!i.contains(lo) || !i.contains(hi)) continue;
    const auto& m = d.cover_map(lo, hi);
    for (std::size_t x = 0; x < m.size(); ++x) uf.unite(id[{lo, x}], id[{hi, m[x]}]);
  }
  // Roots are the smallest flat index in each class, and flat is sorted, so classes come out
  // ordered by smallest member.
  std::map<std::size_t, std::size_t> root_to_class;
  for (std::size_t f = 0; f < flat.size(); ++f) {
    std::size_t r = uf.find(f);
    auto [it, fresh] = root_to_class.emplace(r, t.classes.size());
    if (fresh) t.classes.emplace_back();
    t.classes[it->second].members.push_back(flat[f]);
    t.class_of[flat[f]] = it->second;
  }
  for (auto& c : t.classes) {
    std::vector<Index> nodes;
    for (const auto& e : c.members) nodes.push_back(e.first);
    c.support = Subposet(std::move(nodes));
  }
  return t;
}

std::size_t count_full(const SetDiagram& d, const Subposet& i) {
  auto t = colimit_components(d, i);
  return static_cast<std::size_t>(
      std::count_if(t.classes.begin(), t.classes.end(), [&](const Component& c) { return c.support == i; }));
}

bool has_section(const SetDiagram& d, const ComponentTable& table, std::size_t cls) {
  const Component& c = table.classes.at(cls);
  const auto& nodes = table.interval.members();
  if (!(c.support == table.interval)) return false;
  // Feasible elements at the current node that extend to a partial section from the left end.
  std::set<std::size_t> feasible;
  for (const auto& [k, x] : c.members)
    if (k == nodes.front()) feasible.insert(x);
  for (std::size_t step = 1; step < nodes.size() && !feasible.empty(); ++step) {
    Index prev = nodes[step - 1], cur = nodes[step];
    std::set<std::size_t> next;
    if (d.poset().cover_id(prev, cur)) {
      const auto& m = d.cover_map(prev, cur);
      for (auto x : feasible) next.insert(m[x]);
    } else {
      const auto& m = d.cover_map(cur, prev);
      for (std::size_t y = 0; y < m.size(); ++y)
        if (feasible.count(m[y]) && table.class_of.at({cur, y}) == cls) next.insert(y);
    }
    feasible = std::move(next);
  }
  return !feasible.empty();
}

std::size_t set_lc_rank(const SetDiagram& d, const Subposet& i) {
  auto t = colimit_components(d, i);
  std::size_t n = 0;
  for (std::size_t c = 0; c < t.count(); ++c)
    if (has_section(d, t, c)) ++n;
  return n;
}

RankInvariant set_rank_invariant(const SetDiagram& d) {
  RankInvariant out;
  for (const auto& i : d.shape().intervals()) out[i] = static_cast<std::int64_t>(set_lc_rank(d, i));
  return out;
}

RankInvariant full_function(const SetDiagram& d) {
  RankInvariant out;
  for (const auto& i : d.shape().intervals()) out[i] = static_cast<std::int64_t>(count_full(d, i));
  return out;
}

std::int64_t set_persistence_diagram_at(const SetDiagram& d, const Subposet& i) {
  require_run(d, i);
  return entourage_sum(d.poset(), i, [&](const Subposet& j) { return static_cast<std::int64_t>(set_lc_rank(d, j)); });
}

PersistenceDiagram set_persistence_diagram(const SetDiagram& d) {
  RankInvariant rk = set_rank_invariant(d);
  PersistenceDiagram out;
  for (const auto& [i, v] : rk) out[i] = entourage_sum(d.poset(), i, [&](const Subposet& j) { return rk.at(j); });
  return out;
}

VecDiagram linearize(const SetDiagram& d, std::uint32_t modulus) {
  const Poset& p = d.poset();
  std::vector<std::size_t> dims(p.size());
  for (Index k = 0; k < p.size(); ++k) dims[k] = d.cardinality(k);
  std::vector<Matrix> maps;
  for (std::size_t c = 0; c < p.covers().size(); ++c) {
    auto [lo, hi] = p.covers()[c];
    Matrix m(dims[hi], dims[lo], modulus);
    for (std::size_t x = 0; x < d.maps()[c].size(); ++x) m.set(d.maps()[c][x], x, 1);
    maps.push_back(std::move(m));
  }
  return VecDiagram(d.shape(), modulus, std::move(dims), std::move(maps));
}

ZZBarcode levelset_barcode(const SetDiagram& d) {
  const IndexShape& shape = d.shape();
  if (shape.kind() != IndexKind::ZigZag) throw Error(Errc::NotZigzag, "level-set barcode needs a ZZ window");
  RankInvariant full = full_function(d);
  auto at = [&](const std::optional<ZZInterval>& j) -> std::int64_t {
    return j ? full.at(shape.from_interval(*j)) : 0;
  };
  ZZBarcode out;
  Window w = shape.window();
  for (const auto& [s, v] : full) {
    ZZInterval i = shape.to_interval(s);
    std::int64_t m = v - at(zz_extend(i, Side::Minus, w)) - at(zz_extend(i, Side::Plus, w)) +
                     at(zz_extend(i, Side::Both, w));
    if (m > 0) out[i] = m;
  }
  return out;
}

UntwistedReport is_untwisted(const SetDiagram& d) {
  VecDiagram lin = linearize(d);
  // Positional order: by left end, then right end.
  std::vector<Subposet> order = d.shape().intervals();
  for (const auto& i : order)
    if (set_lc_rank(d, i) != lc_rank(lin, i)) return {false, i};
  return {};
}

std::vector<SetDiagram> decompose(const SetDiagram& d) {
  if (d.empty()) throw Error(Errc::EmptyDiagram, "cannot decompose an empty diagram");
  const Poset& p = d.poset();
  ComponentTable t = colimit_components(d, whole(p));
  std::vector<SetDiagram> out;
  for (std::size_t c = 0; c < t.count(); ++c) {
    std::vector<std::vector<std::string>> el(p.size());
    std::map<Element, std::size_t> local;
    for (Index k = 0; k < p.size(); ++k)
      for (std::size_t x = 0; x < d.cardinality(k); ++x)
        if (t.class_of.at({k, x}) == c) {
          local[{k, x}] = el[k].size();
          el[k].push_back(d.elements(k)[x]);
        }
    std::vector<std::vector<std::size_t>> maps;
    for (auto [lo, hi] : p.covers()) {
      const auto& m = d.cover_map(lo, hi);
      std::vector<std::size_t> mm;
      for (std::size_t x = 0; x < m.size(); ++x)
        if (t.class_of.at({lo, x}) == c) mm.push_back(local.at({hi, m[x]}));
      maps.push_back(std::move(mm));
    }
    out.emplace_back(d.shape(), std::move(el), std::move(maps));
  }
  return out;
}

RankInvariant merge_tree_rank(const SetDiagram& d) {
  if (d.shape().kind() != IndexKind::Line) throw Error(Errc::NotLinear, "merge trees live on Z windows");
  const std::size_t n = d.poset().size();
  RankInvariant out;
  for (Index a = 0; a < n; ++a) {
    std::set<std::size_t> image;
    for (std::size_t x = 0; x < d.cardinality(a); ++x) image.insert(x);
    std::vector<Index> run;
    for (Index b = a; b < n; ++b) {
      if (b > a) {
        const auto& m = d.cover_map(b - 1, b);
        std::set<std::size_t> next;
        for (auto x : image) next.insert(m[x]);
        image = std::move(next);
      }
      run.push_back(b);
      out[Subposet(run)] = static_cast<std::int64_t>(image.size());
    }
  }
  return out;
}

SetDiagram lift_to_zigzag(const SetDiagram& d) {
  if (d.shape().kind() != IndexKind::Line) throw Error(Errc::NotLinear, "lift needs a Z window");
  Window w = d.shape().window();
  IndexShape zz = IndexShape::zigzag(w.lo, w.hi);
  const std::size_t n = d.poset().size();
  // Vertex lo+k carries F_{lo+k}; edge (lo+k+1, lo+k) carries a copy of F_{lo+k}.
  std::vector<std::vector<std::string>> el(zz.size());
  for (std::size_t k = 0; k < n; ++k) {
    el[2 * k] = d.elements(k);
    if (k + 1 < n) el[2 * k + 1] = d.elements(k);
  }
  std::vector<std::vector<std::size_t>> maps;
  for (auto [lo, hi] : zz.poset().covers()) {
    std::size_t k = lo / 2;  // edge node lo = 2k+1
    if (hi == lo - 1) {
      std::vector<std::size_t> id(d.cardinality(k));
      std::iota(id.begin(), id.end(), 0);
      maps.push_back(std::move(id));
    } else {
      maps.push_back(d.cover_map(k, k + 1));
    }
  }
  return SetDiagram(zz, std::move(el), std::move(maps));
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string reeb_dot(const SetDiagram& d) {
  const IndexShape& shape = d.shape();
  if (shape.kind() != IndexKind::ZigZag) throw Error(Errc::NotZigzag, "Reeb graphs need a ZZ window");
  const Poset& p = d.poset();
  auto node_id = [&](Index k, std::size_t x) { return quoted(p.label(k) + "/" + d.elements(k)[x]); };
  std::string out = "graph reeb {\n";
  for (Index k = 0; k < p.size(); k += 2) {
    std::int64_t height = shape.position(k) / 2;
    for (std::size_t x = 0; x < d.cardinality(k); ++x)
      out += "  " + node_id(k, x) + " [label=" + quoted(d.elements(k)[x]) + ", level=" + std::to_string(height) + "];\n";
  }
  for (Index k = 1; k < p.size(); k += 2) {
    if (d.cardinality(k) == 0) continue;
    if (!p.cover_id(k, k - 1) || !p.cover_id(k, k + 1))
      throw Error(Errc::DanglingEdge, "edge node " + p.label(k) + " lacks an attaching map");
    const auto& left = d.cover_map(k, k - 1);
    const auto& right = d.cover_map(k, k + 1);
    for (std::size_t x = 0; x < d.cardinality(k); ++x) {
      if (x >= left.size() || x >= right.size())
        throw Error(Errc::DanglingEdge, "edge " + d.elements(k)[x] + " lacks an endpoint");
      out += "  " + node_id(k - 1, left[x]) + " -- " + node_id(k + 1, right[x]) +
             " [label=" + quoted(d.elements(k)[x]) + "];\n";
    }
  }
  return out + "}\n";
}

}  // namespace genrank
