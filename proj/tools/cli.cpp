#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "genrank/error.hpp"
#include "genrank/io.hpp"

namespace genrank::cli {

namespace {

struct ExitWith {
  int code;
};

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  Json j = {{"error", kind}, {"message", message}};
  err << j.dump() << "\n";
}

std::size_t worker_count() {
  const char* env = std::getenv("GPD_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw Error(Errc::Parse, "GPD_THREADS must be a positive integer");
  return static_cast<std::size_t>(n);
}

// Evaluates fn on every carrier; results keep the carrier order regardless of scheduling.
std::vector<std::int64_t> evaluate(const std::vector<Subposet>& items,
                                   const std::function<std::int64_t(const Subposet&)>& fn) {
  std::vector<std::int64_t> out(items.size());
  std::size_t workers = std::min(worker_count(), std::max<std::size_t>(items.size(), 1));
  if (workers <= 1) {
    for (std::size_t k = 0; k < items.size(); ++k) out[k] = fn(items[k]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < items.size(); k += workers) out[k] = fn(items[k]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct Options {
  std::string file, file_b;
  std::optional<std::string> interval;
  bool all = false;
  std::size_t cap = 0;
  bool mobius_check = false;
  bool expect_decomposable = false;
  bool per_decoration = false;
};

std::vector<Subposet> selected(const LoadedDiagram& d, const Options& o) {
  if (!o.interval && !o.all) throw Error(Errc::Parse, "give --interval SPEC or --all");
  return carriers(d, o.all ? std::nullopt : o.interval, o.cap);
}

Json distance_json(const Distance& d) {
  Json j = {{"distance", d.to_string()}};
  if (d.infinite) j["value"] = nullptr;
  else j["value"] = d.value.to_double();
  return j;
}

int cmd_validate(const Options& o, std::ostream& out) {
  LoadedDiagram d = load_diagram(o.file);
  if (d.is_set()) {
    out << Json{{"ok", true}}.dump() << "\n";
    return 0;
  }
  FunctorialityReport r = validate_functoriality(d.vec());
  Json j = {{"ok", r.ok}};
  if (r.violation) {
    const Poset& p = d.shape().poset();
    j["violation"] = {p.label(r.violation->first), p.label(r.violation->second)};
  }
  out << j.dump() << "\n";
  return r.ok ? 0 : 1;
}

LoadedDiagram load_valid(const std::string& path) {
  LoadedDiagram d = load_diagram(path);
  if (!d.is_set()) {
    FunctorialityReport r = validate_functoriality(d.vec());
    if (!r.ok) {
      const Poset& p = d.shape().poset();
      throw Error(Errc::ShapeMismatch, "diagram is not functorial between " + p.label(r.violation->first) + " and " +
                                           p.label(r.violation->second));
    }
  }
  return d;
}

int cmd_values(const Options& o, std::ostream& out, std::ostream& err, bool signed_values) {
  LoadedDiagram d = load_valid(o.file);
  auto items = selected(d, o);
  auto values = evaluate(items, [&](const Subposet& i) { return signed_values ? diagram_of(d, i) : rank_of(d, i); });
  const char* key = signed_values ? "value" : "rank";
  if (signed_values && o.mobius_check) {
    auto check = evaluate(items, [&](const Subposet& i) { return diagram_via_mobius_of(d, i); });
    for (std::size_t k = 0; k < items.size(); ++k)
      if (check[k] != values[k]) {
        emit_error(err, "MobiusMismatch",
                   d.shape().format(items[k]) + ": entourage sum " + std::to_string(values[k]) + " vs Moebius " +
                       std::to_string(check[k]));
        return 1;
      }
  }
  if (o.interval && !o.all) {
    out << Json{{"interval", d.shape().format(items.front())}, {key, values.front()}}.dump() << "\n";
    return 0;
  }
  Json j = Json::object();
  for (std::size_t k = 0; k < items.size(); ++k) j[d.shape().format(items[k])] = values[k];
  out << j.dump() << "\n";
  return 0;
}

int cmd_barcode(const Options& o, std::ostream& out) {
  LoadedDiagram d = load_valid(o.file);
  out << barcode_to_json(barcode_of(d)).dump() << "\n";
  return 0;
}

int cmd_full(const Options& o, std::ostream& out) {
  LoadedDiagram d = load_valid(o.file);
  Subposet i = d.shape().parse_interval(*o.interval);
  out << count_full(d.set(), i) << "\n";
  return 0;
}

int cmd_untwisted(const Options& o, std::ostream& out) {
  LoadedDiagram d = load_valid(o.file);
  UntwistedReport r = is_untwisted(d.set());
  Json j = {{"untwisted", r.untwisted}};
  j["witness"] = r.witness ? Json(d.shape().format(*r.witness)) : Json(nullptr);
  out << j.dump() << "\n";
  return 0;
}

int cmd_obstruction(const Options& o, std::ostream& out) {
  LoadedDiagram d = load_valid(o.file);
  auto w = decomposability_obstruction(d.vec(), o.cap ? o.cap : d.shape().size());
  Json j;
  if (w)
    j["obstruction"] = {{"interval", d.shape().format(w->interval)}, {"value", w->value}, {"is_interval", w->is_interval}};
  else
    j["obstruction"] = nullptr;
  out << j.dump() << "\n";
  return (w && o.expect_decomposable) ? 1 : 0;
}

int cmd_bottleneck(const Options& o, std::ostream& out) {
  DiagramPoints a = points_from_json(read_json_file(o.file));
  DiagramPoints b = points_from_json(read_json_file(o.file_b));
  if (o.per_decoration) {
    PerDecoration r = bottleneck_per_decoration(a, b);
    Json per = Json::object();
    for (const auto& [deco, dist] : r.per_class) per[to_string(deco)] = distance_json(dist);
    out << Json{{"per_decoration", per}, {"max", distance_json(r.max)}}.dump() << "\n";
    return 0;
  }
  out << distance_json(bottleneck(a, b)).dump() << "\n";
  return 0;
}

int cmd_dot(const Options& o, std::ostream& out) {
  LoadedDiagram d = load_valid(o.file);
  out << reeb_dot(d.set());
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  LoadedDiagram d = load_valid(o.file);
  Json j = Json::array();
  for (auto& s : decompose(d.set())) j.push_back(diagram_to_json(LoadedDiagram(std::move(s))));
  out << j.dump() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized rank invariants, persistence diagrams and barcodes of diagrams over posets"};
  app.name("genrank");
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto interval_opts = [&](CLI::App* sub) {
    auto* iv = sub->add_option("--interval", o.interval, "interval such as [2,3) or {a,b}");
    auto* all = sub->add_flag("--all", o.all, "every interval (zz/z) or connected subposet (poset)");
    iv->excludes(all);
    sub->add_option("--cap", o.cap, "size cap for connected subposet enumeration");
  };

  auto* validate = app.add_subcommand("validate", "check functoriality");
  validate->add_option("FILE", o.file)->required();
  validate->callback([&] { action = [&] { return cmd_validate(o, out); }; });

  auto* rank = app.add_subcommand("rank", "generalized rank invariant");
  rank->add_option("FILE", o.file)->required();
  interval_opts(rank);
  rank->callback([&] { action = [&] { return cmd_values(o, out, err, false); }; });

  auto* diagram = app.add_subcommand("diagram", "persistence diagram by inclusion-exclusion");
  diagram->add_option("FILE", o.file)->required();
  interval_opts(diagram);
  diagram->add_flag("--mobius-check", o.mobius_check, "cross-check against the Moebius function of Con^op");
  diagram->callback([&] { action = [&] { return cmd_values(o, out, err, true); }; });

  auto* barcode = app.add_subcommand("barcode", "barcode of a zz or z diagram");
  barcode->add_option("FILE", o.file)->required();
  barcode->callback([&] { action = [&] { return cmd_barcode(o, out); }; });

  auto* full = app.add_subcommand("full", "number of full components over an interval");
  full->add_option("FILE", o.file)->required();
  full->add_option("--interval", o.interval)->required();
  full->callback([&] { action = [&] { return cmd_full(o, out); }; });

  auto* untwisted = app.add_subcommand("untwisted", "whether set rank equals linearized rank everywhere");
  untwisted->add_option("FILE", o.file)->required();
  untwisted->callback([&] { action = [&] { return cmd_untwisted(o, out); }; });

  auto* obstruction = app.add_subcommand("obstruction", "search for a certificate of non-decomposability");
  obstruction->add_option("FILE", o.file)->required();
  obstruction->add_option("--cap", o.cap);
  obstruction->add_flag("--expect-decomposable", o.expect_decomposable, "exit 1 when a witness is found");
  obstruction->callback([&] { action = [&] { return cmd_obstruction(o, out); }; });

  auto* bottleneck_cmd = app.add_subcommand("bottleneck", "bottleneck distance between two diagrams or bar lists");
  bottleneck_cmd->add_option("FILE_A", o.file)->required();
  bottleneck_cmd->add_option("FILE_B", o.file_b)->required();
  bottleneck_cmd->add_flag("--per-decoration", o.per_decoration);
  bottleneck_cmd->callback([&] { action = [&] { return cmd_bottleneck(o, out); }; });

  auto* dot = app.add_subcommand("dot", "Reeb graph of a set zigzag diagram as DOT");
  dot->add_option("FILE", o.file)->required();
  dot->callback([&] { action = [&] { return cmd_dot(o, out); }; });

  auto* decompose_cmd = app.add_subcommand("decompose", "split a set diagram into connected summands");
  decompose_cmd->add_option("FILE", o.file)->required();
  decompose_cmd->callback([&] { action = [&] { return cmd_decompose(o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    emit_error(err, "Usage", e.what());
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    emit_error(err, std::string(to_string(e.code())), e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(err, "Internal", e.what());
    return 2;
  }
}

}  // namespace genrank::cli
