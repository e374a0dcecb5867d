#pragma once

// Bottleneck distance between finite multisets of points in the extended half-plane.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genrank/shape.hpp"
#include "genrank/vecmod.hpp"

namespace genrank {

class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);  // throws InvalidInterval on den == 0
  static Rational parse(const std::string& text);        // "p/q", "p", or a finite decimal

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;  // "p/q", or "p" when integral

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_, den_;
};

// A rational or +-infinity.
struct Extended {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value{};

  static Extended finite(Rational r) { return {Kind::Finite, r}; }
  static Extended pos_inf() { return {Kind::PosInf, {}}; }
  static Extended neg_inf() { return {Kind::NegInf, {}}; }
  bool is_finite() const noexcept { return kind == Kind::Finite; }
  std::string to_string() const;

  friend bool operator==(const Extended& a, const Extended& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b);
};

enum class Decoration { Open, ClosedOpen, OpenClosed, Closed };

std::string to_string(Decoration d);
Decoration parse_decoration(const std::string& tag);  // throws MissingDecoration

struct DiagramPoint {
  Extended birth;
  Extended death;
  std::optional<Decoration> decoration;
  std::size_t multiplicity = 1;
};

using DiagramPoints = std::vector<DiagramPoint>;

// (b,d) tagged with the decoration. Zero entries are skipped; negative entries (possible for
// signed diagrams) throw NegativeMultiplicity.
DiagramPoints intervals_to_points(const ZZBarcode& bars);

// +inf persistence means the point can never be deleted.
struct Distance {
  bool infinite = false;
  Rational value{};
  std::string to_string() const;
  friend bool operator==(const Distance&, const Distance&) = default;
};

bool epsilon_matching_exists(const DiagramPoints& x, const DiagramPoints& y, const Rational& eps);
Distance bottleneck(const DiagramPoints& x, const DiagramPoints& y);

struct PerDecoration {
  std::map<Decoration, Distance> per_class;
  Distance max;
};

// Throws MissingDecoration if any point lacks a tag.
PerDecoration bottleneck_per_decoration(const DiagramPoints& x, const DiagramPoints& y);

}  // namespace genrank
