// Class-field-tower criteria and the bundled catalogue of number fields with
// infinite unramified 2-towers, with the per-example Brauer-Siegel interval
// arithmetic.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfa/phi.hpp"

namespace gfa {

enum class TowerSource { Prop91, Thm91, Cor92, Literature };

enum class SplitType { Split, Inert, Ramified };

struct DecompositionRow {
  std::uint64_t v = 0;  // rational prime
  int e = 0, f = 0, n = 0;
};

struct PlaceCount {
  std::uint64_t norm = 0;
  int count = 0;
};

// How the unconditional upper bound of an example is produced:
//  Greedy      - same greedy fill as the GRH bound, with the weaker
//                coefficients;
//  CrudeWindow - fill a window of primes at full multiplicity, ending at the
//                first prime whose inclusion already contradicts the
//                Stark-type inequality;
//  Asserted    - constant quoted from the source, no reproduction.
enum class UncRecipe { Greedy, CrudeWindow, Asserted };

struct NumberFieldExample {
  std::string id;
  int degree = 0, r1 = 0, r2 = 0;
  std::vector<std::pair<std::uint64_t, int>> disc_factors;  // (p, e); |D| = prod p^e
  std::vector<PlaceCount> split_places;  // completely split in the tower
  std::vector<DecompositionRow> decomposition;
  TowerSource source = TowerSource::Literature;

  // Admissible extra norms for the upper-bound fill: explicit places of the
  // base field plus, from free_from on, every prime at free_count places.
  std::vector<PlaceCount> extra_norms;
  std::uint64_t free_from = 0;
  int free_count = 0;

  UncRecipe unc = UncRecipe::Greedy;
  std::uint64_t window_from = 0;  // CrudeWindow fill start
  int window_count = 0;           // CrudeWindow multiplicity
  double unc_upper_asserted = 0;  // Asserted value

  // Sharper norm data (known possible norms in a range), when the source
  // records it.
  std::vector<PlaceCount> sharp_norms;
  std::uint64_t sharp_free_from = 0;
  int sharp_free_count = 0;

  std::optional<double> delta_asserted;  // stored deficiency, no recomputation
};

// g = (1/2) sum e_i log p_i.
double genus(const NumberFieldExample& example);

// Guaranteed lower phi-vector of an infinite unramified tower over the
// example field: phi_R = r1/g, phi_C = r2/g, 1/g per declared split place.
PhiSystem phi_from_unramified_tower(const NumberFieldExample& example);

// Splitting of p in Q(sqrt d), d squarefree.
SplitType quadratic_decomposition(long long d, long long p);
// Same with d = sign * prod(factors) given in factored form.
SplitType quadratic_decomposition(bool negative, const std::vector<long long>& factors,
                                  long long p);

// Decomposition of v in {2,...,23} in the degree-20 field obtained by
// composing the real 11th-cyclotomic subfield with Q(sqrt 2) and
// Q(sqrt -23); recomputed from multiplicative orders mod 11 and quadratic
// symbols.
std::vector<DecompositionRow> martinet_table();

enum class CriterionVariant { Prop91, Thm91, Cor92Complex, Cor92Real, GolodShafarevich };

struct CriterionInput {
  int ell = 2;      // tower prime
  int r = 0;        // ramified prime count (d_ell(Cl) for GolodShafarevich)
  int r1 = 0, r2 = 0;
  int rho = 0;      // ramified real places
  int delta_ell = 0;
  int s = 0, t0 = 0;  // split-place data (s = d_ell(E) for GolodShafarevich)
  int sigma = 0;      // split primes (quadratic corollary)
};

struct CriterionResult {
  bool holds = false;
  double lhs = 0, rhs = 0;
};

CriterionResult tower_criterion(const CriterionInput& input, CriterionVariant variant);

// d_ell(E_{K,S}) = ell (r1 + r2 - rho/2) + delta_ell - 1 + s.
long long unit_s_rank(int ell, int r1, int r2, int rho, int delta_ell, int s);

enum class BoundAssumption { Grh, Unconditional };

struct ExampleBounds {
  double g = 0;
  double bs_lower = 0, bs_upper = 0;
  double kappa_lower = 0, kappa_upper = 0;
  double deficiency_upper = 0;
  bool asserted_only = false;  // stored constants, nothing recomputed
};

struct Catalogue {
  std::vector<NumberFieldExample> examples;
  const NumberFieldExample& find(const std::string& id) const;
};

// Bundled catalogue (embedded copy of data/catalogue.txt).
const Catalogue& catalogue();
Catalogue parse_catalogue(const std::string& text);
std::string format_catalogue(const Catalogue& cat);
const std::string& catalogue_text();

ExampleBounds example_bounds(const std::string& id, BoundAssumption mode);
ExampleBounds example_bounds(const NumberFieldExample& example, BoundAssumption mode);

// The tower-criterion field that would contradict GRH: genus and basic
// inequality left-hand side of the ten-split-places quadratic field.
struct YamamuraCheck {
  double g = 0;
  double grh_lhs = 0;
  bool contradiction = false;
};
YamamuraCheck yamamura_grh_check();

// Sharpened unconditional upper bound for an example carrying sharp norm
// data (possible norms in a window); greedy fill under the weaker
// inequality.
double sharp_unconditional_upper(const NumberFieldExample& example);

}  // namespace gfa
