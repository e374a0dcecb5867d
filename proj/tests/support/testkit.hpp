#pragma once

// Fixture loading, random instance generators and brute-force oracles shared by the test binaries.
// Oracles only use the public data accessors of the library, never its algorithms.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "genrank/io.hpp"
#include "genrank/metrics.hpp"
#include "genrank/setmod.hpp"
#include "genrank/vecmod.hpp"

namespace testkit {

using namespace genrank;

std::string fixture_path(const std::string& name);
LoadedDiagram fixture(const std::string& name);
Subposet iv(const IndexShape& shape, const std::string& text);

// ---- generators ----

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::uint32_t p = 2);
Matrix random_invertible(std::mt19937& rng, std::size_t n, std::uint32_t p = 2);

// Random maps on every cover; zigzag/line/tree shapes are functorial by construction.
VecDiagram random_vec_diagram(std::mt19937& rng, const IndexShape& shape, std::size_t max_dim, std::uint32_t p = 2);

// Per-node sizes 0..max_elems, random total maps; empty sources where a target is empty.
SetDiagram random_set_diagram(std::mt19937& rng, const IndexShape& shape, std::size_t max_elems);

ZZBarcode random_zz_barcode(std::mt19937& rng, Window w, std::size_t max_bars);

// Conjugate every space by a random invertible matrix; the result is isomorphic to d.
VecDiagram random_conjugate(std::mt19937& rng, const VecDiagram& d);

// Random poset on n labelled elements (relations i<j sampled with probability prob).
Poset random_poset(std::mt19937& rng, std::size_t n, double prob);
// Random tree-shaped poset (Hasse diagram is a tree); every diagram on it is functorial.
Poset random_tree_poset(std::mt19937& rng, std::size_t n);

DiagramPoints random_points(std::mt19937& rng, std::size_t max_points, std::int64_t max_coord_halves);

// ---- oracles ----

// Rank by image cardinality: |{Mx}| = p^rank. Only for small column counts.
std::size_t brute_rank(const Matrix& m);

// Connectivity of the induced Hasse graph computed from raw covers.
bool brute_connected(const Poset& p, const Subposet& s);

// Moebius closed form of Con^op: 1 if J = I, (-1)^n if J is I plus n neighbourhood points, else 0.
std::int64_t mobius_closed_form(const Poset& p, const Subposet& j, const Subposet& i);

// Full components and sections by exhaustive enumeration of element tuples.
std::size_t brute_full(const SetDiagram& d, const Subposet& i);
std::size_t brute_set_rank(const SetDiagram& d, const Subposet& i);

// Zigzag rank over a contiguous run by sweeping images/preimages from the left end:
// L tracks the limit's image, K the kernel into the colimit; rank = dim L - dim(L cap K).
std::size_t sweep_rank(const VecDiagram& d, const Subposet& run);

// dim Hom(I^J, M) for the interval module on J, by solving the morphism equations.
// Equal values for every interval J characterise interval-decomposable modules up to isomorphism.
std::size_t hom_dim_from_interval(const Subposet& j, const VecDiagram& m);

// Number of bars (with multiplicity) of b whose support contains i.
std::int64_t containment_count(const IndexShape& shape, const ZZBarcode& b, const Subposet& i);
std::int64_t containment_count(const PosetBarcode& b, const Subposet& i);

// Exhaustive partial-injection search for the bottleneck value (finite diagrams only).
Rational brute_bottleneck(const DiagramPoints& x, const DiagramPoints& y);

// Sorted vertex degrees per level of a Reeb graph; an isomorphism invariant.
std::map<std::int64_t, std::multiset<std::size_t>> degree_profile(const SetDiagram& d);

}  // namespace testkit
