#include "genrank/vecmod.hpp"

#include <algorithm>
#include <string>

#include "genrank/error.hpp"

namespace genrank {

namespace {

void require_connected(const Poset& p, const Subposet& i) {
  if (!is_connected_subposet(p, i)) throw Error(Errc::NotConnected, "subposet is not Hasse-connected");
}

std::vector<std::size_t> offsets(const VecDiagram& d, const std::vector<Index>& members, std::size_t& total) {
  std::vector<std::size_t> off(d.poset().size(), 0);
  total = 0;
  for (Index s : members) {
    off[s] = total;
    total += d.dim(s);
  }
  return off;
}

ConeData make_cone(std::size_t dim, const Subposet& i, std::vector<Matrix> legs) {
  return ConeData{dim, i.members(), std::move(legs)};
}

}  // namespace

VecDiagram::VecDiagram(IndexShape shape, std::uint32_t modulus, std::vector<std::size_t> dims,
                       std::vector<Matrix> maps)
    : shape_(std::move(shape)), modulus_(PrimeField(modulus).modulus()), dims_(std::move(dims)), maps_(std::move(maps)) {
  const Poset& p = shape_.poset();
  if (dims_.size() != p.size())
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(p.size()) + " dimensions, got " +
                                         std::to_string(dims_.size()));
  if (maps_.size() != p.covers().size())
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(p.covers().size()) + " cover maps, got " +
                                         std::to_string(maps_.size()));
  for (std::size_t c = 0; c < maps_.size(); ++c) {
    auto [lo, hi] = p.covers()[c];
    const Matrix& m = maps_[c];
    if (m.rows() != dims_[hi] || m.cols() != dims_[lo] || m.modulus() != modulus_)
      throw Error(Errc::ShapeMismatch, "map " + p.label(lo) + "->" + p.label(hi) + " should be " +
                                           std::to_string(dims_[hi]) + "x" + std::to_string(dims_[lo]) + " over GF(" +
                                           std::to_string(modulus_) + ")");
  }
}

VecDiagram VecDiagram::zero(IndexShape shape, std::uint32_t modulus, std::vector<std::size_t> dims) {
  std::vector<Matrix> maps;
  if (dims.size() == shape.poset().size())
    for (auto [lo, hi] : shape.poset().covers()) maps.emplace_back(dims[hi], dims[lo], modulus);
  return VecDiagram(std::move(shape), modulus, std::move(dims), std::move(maps));
}

const Matrix& VecDiagram::cover_map(Index lo, Index hi) const {
  auto id = poset().cover_id(lo, hi);
  if (!id) throw Error(Errc::InvalidIndex, "no cover " + poset().label(lo) + "->" + poset().label(hi));
  return maps_[*id];
}

void VecDiagram::set_cover_map(Index lo, Index hi, Matrix m) {
  auto id = poset().cover_id(lo, hi);
  if (!id) throw Error(Errc::InvalidIndex, "no cover " + poset().label(lo) + "->" + poset().label(hi));
  if (m.rows() != dims_[hi] || m.cols() != dims_[lo] || m.modulus() != modulus_)
    throw Error(Errc::ShapeMismatch, "replacement map has the wrong shape");
  maps_[*id] = std::move(m);
}

Matrix VecDiagram::transfer(Index s, Index t) const {
  const Poset& p = poset();
  if (!p.leq(s, t)) throw Error(Errc::InvalidIndex, p.label(s) + " is not below " + p.label(t));
  Matrix acc = Matrix::identity(dims_[s], modulus_);
  Index cur = s;
  while (cur != t) {
    Index next = cur;
    for (Index u : p.upper_covers(cur))
      if (p.leq(u, t)) {
        next = u;
        break;
      }
    acc = cover_map(cur, next) * acc;
    cur = next;
  }
  return acc;
}

VecDiagram direct_sum(const VecDiagram& a, const VecDiagram& b) {
  if (!(a.shape() == b.shape()) || a.modulus() != b.modulus())
    throw Error(Errc::ShapeMismatch, "direct sum needs equal index shapes and fields");
  std::vector<std::size_t> dims(a.dims().size());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dim(i) + b.dim(i);
  std::vector<Matrix> maps;
  for (std::size_t c = 0; c < a.maps().size(); ++c) {
    const Matrix& x = a.maps()[c];
    const Matrix& y = b.maps()[c];
    Matrix m(x.rows() + y.rows(), x.cols() + y.cols(), a.modulus());
    m.put(0, 0, x);
    m.put(x.rows(), x.cols(), y);
    maps.push_back(std::move(m));
  }
  return VecDiagram(a.shape(), a.modulus(), std::move(dims), std::move(maps));
}

FunctorialityReport validate_functoriality(const VecDiagram& d) {
  const Poset& p = d.poset();
  for (Index s = 0; s < p.size(); ++s) {
    std::vector<std::optional<Matrix>> from_s(p.size());
    from_s[s] = Matrix::identity(d.dim(s), d.modulus());
    for (Index x : p.topological_order()) {
      if (x == s || !p.leq(s, x)) continue;
      for (Index u : p.lower_covers(x)) {
        if (!p.leq(s, u)) continue;
        Matrix via = d.cover_map(u, x) * *from_s[u];
        if (!from_s[x]) from_s[x] = std::move(via);
        else if (!(via == *from_s[x])) return {false, std::make_pair(s, x)};
      }
    }
  }
  return {};
}

const Matrix& ConeData::leg(Index s) const {
  auto it = std::lower_bound(members.begin(), members.end(), s);
  if (it == members.end() || *it != s) throw Error(Errc::InvalidIndex, "no leg at element outside the subposet");
  return legs[static_cast<std::size_t>(it - members.begin())];
}

ConeData limit(const VecDiagram& d, const Subposet& i) {
  require_connected(d.poset(), i);
  std::size_t total = 0;
  auto off = offsets(d, i.members(), total);
  auto cov = induced_covers(d.poset(), i);
  std::size_t rows = 0;
  for (auto [s, t] : cov) rows += d.dim(t);
  // Constraint phi(s,t) v_s - v_t = 0 per induced cover.
  Matrix a(rows, total, d.modulus());
  std::size_t r = 0;
  for (auto [s, t] : cov) {
    a.put(r, off[s], d.transfer(s, t));
    a.put(r, off[t], Matrix::identity(d.dim(t), d.modulus()).negated());
    r += d.dim(t);
  }
  Matrix k = kernel_basis(a);
  std::vector<Matrix> legs;
  for (Index s : i.members()) legs.push_back(k.block(off[s], 0, d.dim(s), k.cols()));
  return make_cone(k.cols(), i, std::move(legs));
}

ConeData colimit(const VecDiagram& d, const Subposet& i) {
  require_connected(d.poset(), i);
  std::size_t total = 0;
  auto off = offsets(d, i.members(), total);
  auto cov = induced_covers(d.poset(), i);
  std::size_t cols = 0;
  for (auto [s, t] : cov) cols += d.dim(s);
  // Relation columns iota_s(e) - iota_t(phi e).
  Matrix rel(total, cols, d.modulus());
  std::size_t c = 0;
  for (auto [s, t] : cov) {
    rel.put(off[s], c, Matrix::identity(d.dim(s), d.modulus()));
    rel.put(off[t], c, d.transfer(s, t).negated());
    c += d.dim(s);
  }
  Cokernel q = cokernel_projection(rel);
  std::vector<Matrix> legs;
  for (Index s : i.members()) legs.push_back(q.projection.block(0, off[s], q.dim, d.dim(s)));
  return make_cone(q.dim, i, std::move(legs));
}

std::size_t lc_rank_at_anchor(const VecDiagram& d, const Subposet& i, Index anchor) {
  if (!i.contains(anchor)) throw Error(Errc::InvalidIndex, "anchor outside the subposet");
  ConeData lim = limit(d, i);
  ConeData col = colimit(d, i);
  return rank(col.leg(anchor) * lim.leg(anchor));
}

std::size_t lc_rank(const VecDiagram& d, const Subposet& i) {
  check_subposet(d.poset(), i);
  return lc_rank_at_anchor(d, i, i.members().front());
}

RankInvariant rank_invariant(const VecDiagram& d, const std::vector<Subposet>& carrier) {
  RankInvariant out;
  for (const auto& i : carrier) out[i] = static_cast<std::int64_t>(lc_rank(d, i));
  return out;
}

RankInvariant rank_invariant(const VecDiagram& d) { return rank_invariant(d, d.shape().intervals()); }

RankInvariant rank_invariant_connected(const VecDiagram& d, std::size_t size_cap) {
  return rank_invariant(d, enumerate_connected_subposets(d.poset(), size_cap));
}

namespace {

RankFn caching_rank(const VecDiagram& d, std::map<Subposet, std::int64_t>& cache) {
  return [&d, &cache](const Subposet& j) {
    auto it = cache.find(j);
    if (it != cache.end()) return it->second;
    auto v = static_cast<std::int64_t>(lc_rank(d, j));
    cache.emplace(j, v);
    return v;
  };
}

}  // namespace

std::int64_t persistence_diagram_at(const VecDiagram& d, const Subposet& i) {
  std::map<Subposet, std::int64_t> cache;
  return entourage_sum(d.poset(), i, caching_rank(d, cache));
}

std::int64_t persistence_diagram_via_mobius(const VecDiagram& d, const Subposet& i) {
  std::map<Subposet, std::int64_t> cache;
  return mobius_sum(d.poset(), i, caching_rank(d, cache));
}

PersistenceDiagram persistence_diagram(const VecDiagram& d, const std::vector<Subposet>& carrier) {
  std::map<Subposet, std::int64_t> cache;
  auto rk = caching_rank(d, cache);
  PersistenceDiagram out;
  for (const auto& i : carrier) out[i] = entourage_sum(d.poset(), i, rk);
  return out;
}

ZZBarcode zigzag_barcode(const VecDiagram& d) {
  const IndexShape& shape = d.shape();
  if (shape.kind() != IndexKind::ZigZag) throw Error(Errc::NotZigzag, "zigzag barcode needs a ZZ window");
  std::map<Subposet, std::int64_t> cache;
  auto rk = caching_rank(d, cache);
  auto rk_of = [&](const std::optional<ZZInterval>& j) -> std::int64_t {
    return j ? rk(shape.from_interval(*j)) : 0;
  };
  ZZBarcode out;
  for (const auto& s : shape.intervals()) {
    ZZInterval i = shape.to_interval(s);
    Window w = shape.window();
    std::int64_t m = rk(s) - rk_of(zz_extend(i, Side::Minus, w)) - rk_of(zz_extend(i, Side::Plus, w)) +
                     rk_of(zz_extend(i, Side::Both, w));
    if (m > 0) out[i] = m;
  }
  return out;
}

VecDiagram synthesize(const IndexShape& shape, const PosetBarcode& bars, std::uint32_t modulus) {
  const Poset& p = shape.poset();
  // copies[k] lists, per bar copy, the coordinate it occupies at each element (or -1).
  std::vector<std::size_t> dims(p.size(), 0);
  std::vector<std::vector<std::ptrdiff_t>> coord;
  for (const auto& [support, mult] : bars) {
    check_subposet(p, support);
    if (mult < 1) throw Error(Errc::InvalidInterval, "bar multiplicity must be positive");
    if (!is_interval(p, support)) throw Error(Errc::InvalidInterval, shape.format(support) + " is not an interval");
    for (std::int64_t c = 0; c < mult; ++c) {
      std::vector<std::ptrdiff_t> at(p.size(), -1);
      for (Index s : support.members()) at[s] = static_cast<std::ptrdiff_t>(dims[s]++);
      coord.push_back(std::move(at));
    }
  }
  std::vector<Matrix> maps;
  for (auto [lo, hi] : p.covers()) {
    Matrix m(dims[hi], dims[lo], modulus);
    for (const auto& at : coord)
      if (at[lo] >= 0 && at[hi] >= 0) m.set(static_cast<std::size_t>(at[hi]), static_cast<std::size_t>(at[lo]), 1);
    maps.push_back(std::move(m));
  }
  return VecDiagram(shape, modulus, std::move(dims), std::move(maps));
}

VecDiagram synthesize_zigzag(Window w, const ZZBarcode& bars, std::uint32_t modulus) {
  IndexShape shape = IndexShape::zigzag(w.lo, w.hi);
  PosetBarcode pb;
  for (const auto& [i, mult] : bars) {
    auto [p, q] = i.positions();
    if (p < 2 * w.lo || q > 2 * w.hi) throw Error(Errc::InvalidInterval, i.to_string() + " leaves the window");
    pb[shape.from_interval(i)] += mult;
  }
  return synthesize(shape, pb, modulus);
}

std::optional<ObstructionWitness> decomposability_obstruction(const VecDiagram& d, std::size_t size_cap) {
  std::map<Subposet, std::int64_t> cache;
  auto rk = caching_rank(d, cache);
  for (const auto& i : enumerate_connected_subposets(d.poset(), size_cap)) {
    std::int64_t v = entourage_sum(d.poset(), i, rk);
    bool interval = is_interval(d.poset(), i);
    if ((!interval && v != 0) || v < 0) return ObstructionWitness{i, v, interval};
  }
  return std::nullopt;
}

std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> standard_rank_invariant(const VecDiagram& d) {
  if (d.shape().kind() != IndexKind::Line) throw Error(Errc::NotLinear, "standard rank invariant needs a Z window");
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> out;
  for (Index a = 0; a < d.poset().size(); ++a)
    for (Index b = a; b < d.poset().size(); ++b)
      out[{d.shape().position(a), d.shape().position(b)}] = rank(d.transfer(a, b));
  return out;
}

std::map<std::pair<Index, Index>, std::size_t> pairwise_image_rank(const VecDiagram& d) {
  std::map<std::pair<Index, Index>, std::size_t> out;
  const Poset& p = d.poset();
  for (Index a = 0; a < p.size(); ++a)
    for (Index b = 0; b < p.size(); ++b)
      if (p.leq(a, b)) out[{a, b}] = rank(d.transfer(a, b));
  return out;
}

VecDiagram reindex_R_to_Z(const std::vector<double>& critical_values, const std::vector<std::size_t>& dims,
                          const std::vector<Matrix>& maps, std::uint32_t modulus) {
  for (std::size_t k = 1; k < critical_values.size(); ++k)
    if (!(critical_values[k - 1] < critical_values[k]))
      throw Error(Errc::NonMonotoneCriticalValues, "critical values must be strictly increasing");
  if (critical_values.empty()) throw Error(Errc::EmptyDiagram, "no critical values");
  if (dims.size() != critical_values.size())
    throw Error(Errc::ShapeMismatch, "one space per critical value expected");
  auto n = static_cast<std::int64_t>(critical_values.size());
  return VecDiagram(IndexShape::line(1, n), modulus, dims, maps);
}

ZZInterval reindex_bar_R_to_Z(std::size_t i, std::size_t j) {
  if (i < 1 || j <= i) throw Error(Errc::InvalidInterval, "need 1 <= i < j for [s_i, s_j)");
  return ZZInterval::closed(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j) - 1);
}

VecDiagram reindex_Z_to_ZZ(const VecDiagram& d) {
  if (d.shape().kind() != IndexKind::Line) throw Error(Errc::NotLinear, "L(F) needs a Z window");
  Window w = d.shape().window();
  IndexShape zz = IndexShape::zigzag(w.lo, w.hi + 1);
  const std::size_t n = d.poset().size();
  // ZZ node 2k is vertex lo+k, node 2k+1 is edge (lo+k+1, lo+k); both carry F_{lo+k}.
  std::vector<std::size_t> dims(zz.size(), 0);
  for (std::size_t k = 0; k < n; ++k) dims[2 * k] = dims[2 * k + 1] = d.dim(k);
  VecDiagram out = VecDiagram::zero(zz, d.modulus(), dims);
  for (std::size_t k = 0; k < n; ++k) {
    out.set_cover_map(2 * k + 1, 2 * k, Matrix::identity(d.dim(k), d.modulus()));
    if (k + 1 < n) out.set_cover_map(2 * k + 1, 2 * k + 2, d.cover_map(k, k + 1));
  }
  return out;
}

ZZInterval reindex_bar_Z_to_ZZ(const ZZInterval& line_bar) {
  line_bar.validate();
  return {line_bar.b, line_bar.d + 1, Bound::Closed, Bound::Open};
}

}  // namespace genrank
