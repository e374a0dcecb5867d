#include "genrank/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "genrank/error.hpp"

namespace genrank {

const VecDiagram& LoadedDiagram::vec() const {
  if (auto* v = std::get_if<VecDiagram>(&d_)) return *v;
  throw Error(Errc::Parse, "operation needs a vec diagram, file holds a set diagram");
}

const SetDiagram& LoadedDiagram::set() const {
  if (auto* s = std::get_if<SetDiagram>(&d_)) return *s;
  throw Error(Errc::Parse, "operation needs a set diagram, file holds a vec diagram");
}

const IndexShape& LoadedDiagram::shape() const {
  return std::visit([](const auto& d) -> const IndexShape& { return d.shape(); }, d_);
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(Errc::Parse, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + " must be an integer");
  return j.get<std::int64_t>();
}

IndexShape parse_shape(const Json& j) {
  std::string index = field(j, "index").get<std::string>();
  if (index == "zz" || index == "z") {
    const Json& w = field(j, "window");
    if (!w.is_array() || w.size() != 2) fail("window must be [lo,hi]");
    std::int64_t lo = as_int(w[0], "window"), hi = as_int(w[1], "window");
    return index == "zz" ? IndexShape::zigzag(lo, hi) : IndexShape::line(lo, hi);
  }
  if (index == "poset") {
    const Json& p = field(j, "poset");
    std::vector<std::string> elements = field(p, "elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> rel;
    if (p.contains("relations"))
      for (const auto& r : p.at("relations")) {
        if (!r.is_array() || r.size() != 2) fail("relation must be a pair [a,b]");
        rel.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
      }
    return IndexShape::general(Poset::build(std::move(elements), rel));
  }
  fail("index must be one of zz, z, poset");
}

Index node(const IndexShape& shape, const std::string& name) {
  if (auto k = shape.find_node(name)) return *k;
  throw Error(Errc::UnknownElement, "unknown node '" + name + "'");
}

std::pair<Index, Index> cover_key(const IndexShape& shape, const std::string& key) {
  auto arrow = key.find("->");
  if (arrow == std::string::npos) fail("map key must look like 'src->dst': '" + key + "'");
  Index lo = node(shape, key.substr(0, arrow)), hi = node(shape, key.substr(arrow + 2));
  if (!shape.poset().cover_id(lo, hi)) fail("'" + key + "' is not a cover relation of the index");
  return {lo, hi};
}

VecDiagram parse_vec(const Json& j, IndexShape shape) {
  std::uint32_t p = j.contains("field") ? static_cast<std::uint32_t>(as_int(j.at("field"), "field")) : 2;
  PrimeField f(p);
  std::vector<std::size_t> dims(shape.size(), 0);
  if (j.contains("spaces"))
    for (const auto& [name, v] : j.at("spaces").items()) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail("dimension of '" + name + "' must be a non-negative integer");
      dims[node(shape, name)] = v.get<std::size_t>();
    }
  VecDiagram d = VecDiagram::zero(shape, p, dims);
  if (j.contains("maps"))
    for (const auto& [key, rows] : j.at("maps").items()) {
      auto [lo, hi] = cover_key(shape, key);
      if (!rows.is_array()) fail("map '" + key + "' must be an array of rows");
      std::vector<std::vector<std::int64_t>> r;
      for (const auto& row : rows) {
        if (!row.is_array()) fail("map '" + key + "' must be an array of rows");
        std::vector<std::int64_t> vals;
        for (const auto& x : row) vals.push_back(as_int(x, "matrix entry"));
        r.push_back(std::move(vals));
      }
      Matrix m = Matrix::from_rows(r, p, dims[lo]);
      if (m.rows() != dims[hi] || m.cols() != dims[lo])
        throw Error(Errc::ShapeMismatch, "map '" + key + "' must be " + std::to_string(dims[hi]) + "x" +
                                             std::to_string(dims[lo]));
      d.set_cover_map(lo, hi, std::move(m));
    }
  return d;
}

SetDiagram parse_set(const Json& j, IndexShape shape) {
  if (!shape.is_path()) fail("set diagrams need a zz or z index");
  std::vector<std::vector<std::string>> el(shape.size());
  if (j.contains("spaces"))
    for (const auto& [name, v] : j.at("spaces").items()) el[node(shape, name)] = v.get<std::vector<std::string>>();
  const Poset& p = shape.poset();
  std::vector<std::vector<std::size_t>> maps(p.covers().size());
  std::vector<char> given(p.covers().size(), 0);
  if (j.contains("maps"))
    for (const auto& [key, table] : j.at("maps").items()) {
      auto [lo, hi] = cover_key(shape, key);
      std::size_t c = *p.cover_id(lo, hi);
      if (!table.is_object()) fail("set map '" + key + "' must be an object {src: dst}");
      std::map<std::string, std::size_t> dst;
      for (std::size_t y = 0; y < el[hi].size(); ++y) dst[el[hi][y]] = y;
      std::vector<std::ptrdiff_t> img(el[lo].size(), -1);
      for (const auto& [src, tgt] : table.items()) {
        std::ptrdiff_t x = -1;
        for (std::size_t k = 0; k < el[lo].size(); ++k)
          if (el[lo][k] == src) x = static_cast<std::ptrdiff_t>(k);
        if (x < 0) throw Error(Errc::UnknownElement, "map '" + key + "': no element '" + src + "' at source");
        auto it = dst.find(tgt.get<std::string>());
        if (it == dst.end())
          throw Error(Errc::UnknownElement, "map '" + key + "': no element '" + tgt.get<std::string>() + "' at target");
        img[static_cast<std::size_t>(x)] = static_cast<std::ptrdiff_t>(it->second);
      }
      for (std::size_t x = 0; x < img.size(); ++x) {
        if (img[x] < 0) throw Error(Errc::ShapeMismatch, "map '" + key + "' is not total at '" + el[lo][x] + "'");
        maps[c].push_back(static_cast<std::size_t>(img[x]));
      }
      given[c] = 1;
    }
  for (std::size_t c = 0; c < maps.size(); ++c) {
    auto [lo, hi] = p.covers()[c];
    if (!given[c] && !el[lo].empty())
      throw Error(Errc::ShapeMismatch, "missing map " + p.label(lo) + "->" + p.label(hi));
  }
  return SetDiagram(std::move(shape), std::move(el), std::move(maps));
}

Json shape_json(const IndexShape& shape) {
  Json j;
  switch (shape.kind()) {
    case IndexKind::ZigZag: j["index"] = "zz"; break;
    case IndexKind::Line: j["index"] = "z"; break;
    case IndexKind::General: j["index"] = "poset"; break;
  }
  if (shape.is_path()) {
    j["window"] = {shape.window().lo, shape.window().hi};
  } else {
    const Poset& p = shape.poset();
    Json rel = Json::array();
    for (auto [lo, hi] : p.covers()) rel.push_back({p.label(lo), p.label(hi)});
    j["poset"] = {{"elements", p.labels()}, {"relations", rel}};
  }
  return j;
}

std::int64_t line_dgm(const Poset& p, const Subposet& i, const RankFn& rk) { return entourage_sum(p, i, rk); }

ZZBarcode positive_part_on_line(const IndexShape& shape, const RankFn& rk) {
  ZZBarcode out;
  for (const auto& i : shape.intervals()) {
    std::int64_t m = line_dgm(shape.poset(), i, rk);
    if (m > 0) out[shape.to_interval(i)] = m;
  }
  return out;
}

Extended parse_extended(const Json& v) {
  if (v.is_number_integer()) return Extended::finite(Rational(v.get<std::int64_t>()));
  if (v.is_number_float()) {
    std::ostringstream os;
    os << v.get<double>();
    return Extended::finite(Rational::parse(os.str()));
  }
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return Extended::pos_inf();
    if (s == "-inf") return Extended::neg_inf();
    return Extended::finite(Rational::parse(s));
  }
  fail("point coordinate must be a number or a string");
}

}  // namespace

LoadedDiagram parse_diagram(const Json& j) {
  try {
    if (!j.is_object()) fail("diagram file must be a JSON object");
    std::string kind = field(j, "kind").get<std::string>();
    IndexShape shape = parse_shape(j);
    if (kind == "vec") return LoadedDiagram(parse_vec(j, std::move(shape)));
    if (kind == "set") return LoadedDiagram(parse_set(j, std::move(shape)));
    fail("kind must be vec or set");
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed diagram: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail("'" + path + "' is not valid JSON: " + e.what());
  }
}

LoadedDiagram load_diagram(const std::string& path) { return parse_diagram(read_json_file(path)); }

Json diagram_to_json(const LoadedDiagram& d) {
  const IndexShape& shape = d.shape();
  const Poset& p = shape.poset();
  Json j;
  j["kind"] = d.is_set() ? "set" : "vec";
  Json head = shape_json(shape);
  for (auto& [k, v] : head.items()) j[k] = v;
  Json spaces = Json::object(), maps = Json::object();
  if (d.is_set()) {
    const SetDiagram& s = d.set();
    for (Index k = 0; k < p.size(); ++k) spaces[p.label(k)] = s.elements(k);
    for (std::size_t c = 0; c < p.covers().size(); ++c) {
      auto [lo, hi] = p.covers()[c];
      if (s.cardinality(lo) == 0) continue;
      Json table = Json::object();
      for (std::size_t x = 0; x < s.cardinality(lo); ++x) table[s.elements(lo)[x]] = s.elements(hi)[s.maps()[c][x]];
      maps[p.label(lo) + "->" + p.label(hi)] = table;
    }
  } else {
    const VecDiagram& v = d.vec();
    j["field"] = v.modulus();
    for (Index k = 0; k < p.size(); ++k) spaces[p.label(k)] = v.dim(k);
    for (std::size_t c = 0; c < p.covers().size(); ++c) {
      auto [lo, hi] = p.covers()[c];
      if (v.maps()[c].is_zero()) continue;
      maps[p.label(lo) + "->" + p.label(hi)] = v.maps()[c].to_rows();
    }
  }
  j["spaces"] = spaces;
  j["maps"] = maps;
  return j;
}

std::vector<Subposet> carriers(const LoadedDiagram& d, const std::optional<std::string>& interval, std::size_t cap) {
  const IndexShape& shape = d.shape();
  if (interval) {
    Subposet s = shape.parse_interval(*interval);
    if (!is_connected_subposet(shape.poset(), s)) throw Error(Errc::NotConnected, *interval + " is not connected");
    return {s};
  }
  if (shape.is_path()) return shape.intervals();
  return enumerate_connected_subposets(shape.poset(), cap ? cap : shape.size());
}

std::int64_t rank_of(const LoadedDiagram& d, const Subposet& i) {
  if (d.is_set()) {
    d.shape().to_interval(i);
    return static_cast<std::int64_t>(set_lc_rank(d.set(), i));
  }
  return static_cast<std::int64_t>(lc_rank(d.vec(), i));
}

std::int64_t diagram_of(const LoadedDiagram& d, const Subposet& i) {
  if (d.is_set()) return set_persistence_diagram_at(d.set(), i);
  return persistence_diagram_at(d.vec(), i);
}

std::int64_t diagram_via_mobius_of(const LoadedDiagram& d, const Subposet& i) {
  if (d.is_set()) return mobius_sum(d.shape().poset(), i, [&](const Subposet& j) { return rank_of(d, j); });
  return persistence_diagram_via_mobius(d.vec(), i);
}

ZZBarcode barcode_of(const LoadedDiagram& d) {
  const IndexShape& shape = d.shape();
  if (shape.kind() == IndexKind::General) throw Error(Errc::NotZigzag, "barcode needs a zz or z index");
  if (shape.kind() == IndexKind::ZigZag) return d.is_set() ? levelset_barcode(d.set()) : zigzag_barcode(d.vec());
  if (d.is_set()) {
    RankInvariant rk = merge_tree_rank(d.set());
    return positive_part_on_line(shape, [&](const Subposet& j) { return rk.at(j); });
  }
  return positive_part_on_line(shape, [&](const Subposet& j) { return static_cast<std::int64_t>(lc_rank(d.vec(), j)); });
}

ZZBarcode comparison_diagram(const LoadedDiagram& d) {
  if (!d.is_set() || d.shape().kind() != IndexKind::ZigZag) return barcode_of(d);
  ZZBarcode out;
  for (const auto& [i, v] : set_persistence_diagram(d.set()))
    if (v != 0) out[d.shape().to_interval(i)] = v;
  return out;
}

Json barcode_to_json(const ZZBarcode& b) {
  Json out = Json::array();
  for (const auto& [i, m] : b) out.push_back({{"interval", i.to_string()}, {"mult", m}});
  return out;
}

DiagramPoints points_from_json(const Json& j) {
  try {
    if (j.is_object()) return intervals_to_points(comparison_diagram(parse_diagram(j)));
    if (!j.is_array()) fail("expected a diagram object or a list of bars/points");
    ZZBarcode bars;
    DiagramPoints pts;
    for (const auto& e : j) {
      std::int64_t mult = e.contains("mult") ? as_int(e.at("mult"), "mult") : 1;
      if (e.contains("interval")) {
        bars[ZZInterval::parse(e.at("interval").get<std::string>())] += mult;
        continue;
      }
      if (mult < 0) throw Error(Errc::NegativeMultiplicity, "negative point multiplicity");
      DiagramPoint p{parse_extended(field(e, "birth")), parse_extended(field(e, "death")), std::nullopt,
                     static_cast<std::size_t>(mult)};
      if (e.contains("decoration")) p.decoration = parse_decoration(e.at("decoration").get<std::string>());
      if (mult > 0) pts.push_back(p);
    }
    DiagramPoints from_bars = intervals_to_points(bars);
    pts.insert(pts.end(), from_bars.begin(), from_bars.end());
    return pts;
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed point list: ") + e.what());
  }
}

}  // namespace genrank
