#include "gfa/towers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gfa/inequality.hpp"
#include "gfa/lp.hpp"
#include "gfa/numerics.hpp"
#include "gfa/zeta.hpp"

namespace gfa::detail {
const std::string& embedded_catalogue_text();
}

namespace gfa {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

long long product_mod(bool negative, const std::vector<long long>& factors, long long mod) {
  long long prod = 1;
  for (long long f : factors) prod = prod * (f % mod) % mod;
  if (negative) prod = (mod - prod) % mod;
  return prod;
}

}  // namespace

double genus(const NumberFieldExample& example) {
  if (example.disc_factors.empty())
    throw std::invalid_argument("genus: example has no discriminant data");
  double sum = 0;
  for (auto& [p, e] : example.disc_factors) sum += e * std::log((double)p);
  return sum / 2;
}

PhiSystem phi_from_unramified_tower(const NumberFieldExample& example) {
  if (example.r1 == 0 && example.r2 == 0)
    throw std::invalid_argument("phi_from_unramified_tower: malformed example (no archimedean places)");
  double g = genus(example);
  if (!(g > 0)) throw std::invalid_argument("phi_from_unramified_tower: genus must be positive");
  PhiSystem phi = PhiSystem::number_field(example.r1 / g, example.r2 / g);
  for (const auto& place : example.split_places) phi.add(place.norm, place.count / g);
  return phi;
}

SplitType quadratic_decomposition(bool negative, const std::vector<long long>& factors,
                                  long long p) {
  // discriminant is d when d = 1 mod 4, else 4d
  long long d_mod4 = product_mod(negative, factors, 4);
  bool disc_is_d = d_mod4 == 1;
  if (p == 2) {
    if (!disc_is_d) return SplitType::Ramified;
    long long d_mod8 = product_mod(negative, factors, 8);
    return d_mod8 == 1 ? SplitType::Split : SplitType::Inert;
  }
  for (long long f : factors)
    if (f % p == 0) return SplitType::Ramified;
  int symbol = kronecker_symbol_factored(negative, factors, p);
  // (disc|p) = (d|p) for odd p since (4|p) = 1
  return symbol == 1 ? SplitType::Split : SplitType::Inert;
}

SplitType quadratic_decomposition(long long d, long long p) {
  if (d == 0 || d == 1) throw std::invalid_argument("quadratic_decomposition: d must define a field");
  bool negative = d < 0;
  long long a = negative ? -d : d;
  std::vector<long long> factors;
  for (long long q = 2; q * q <= a; ++q)
    while (a % q == 0) {
      factors.push_back(q);
      a /= q;
    }
  if (a > 1) factors.push_back(a);
  return quadratic_decomposition(negative, factors, p);
}

std::vector<DecompositionRow> martinet_table() {
  // K is the compositum of the real degree-5 subfield K0 of the 11th
  // cyclotomic field with Q(sqrt 2) and Q(sqrt -23); Galois of degree 20,
  // so f is the lcm of the residue degrees in the three pieces and
  // n = 20/(e f).
  std::vector<DecompositionRow> rows;
  for (long long v : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    int e = 1;
    long long f0 = 1;  // residue degree in K0
    if (v == 11) {
      e = 5;  // totally ramified in K0
    } else {
      long long ord = multiplicative_order(v, 11);
      f0 = ord % 2 == 0 ? ord / 2 : ord;  // order in (Z/11)*/{+-1}
    }
    long long f2 = 1;  // residue degree in Q(sqrt 2)
    if (v == 2)
      e = 2;
    else if (quadratic_decomposition(2, v) == SplitType::Inert)
      f2 = 2;
    long long f23 = 1;  // residue degree in Q(sqrt -23)
    if (v == 23)
      e = 2;
    else if (quadratic_decomposition(-23, v) == SplitType::Inert)
      f23 = 2;
    long long f = std::lcm(std::lcm(f0, f2), f23);
    rows.push_back({(std::uint64_t)v, e, (int)f, (int)(20 / (e * f))});
  }
  return rows;
}

CriterionResult tower_criterion(const CriterionInput& in, CriterionVariant variant) {
  CriterionResult res;
  switch (variant) {
    case CriterionVariant::Prop91:
      res.lhs = in.r;
      res.rhs = in.r1 + in.r2 + in.delta_ell + 2 - in.rho +
                2 * std::sqrt(in.ell * (in.r1 + in.r2 - in.rho / 2.0) + in.delta_ell);
      break;
    case CriterionVariant::Thm91:
      res.lhs = in.r;
      res.rhs = in.s - in.t0 + in.r1 + in.r2 + in.delta_ell + 2 - in.rho +
                2 * std::sqrt(in.ell * (in.r1 + in.r2 - in.rho / 2.0) + in.delta_ell + in.s);
      break;
    case CriterionVariant::Cor92Complex:
      res.lhs = in.r;
      res.rhs = 3 + in.sigma + 2 * std::sqrt(2.0 + in.s);
      break;
    case CriterionVariant::Cor92Real:
      res.lhs = in.r;
      res.rhs = 4 + in.sigma + 2 * std::sqrt(3.0 + in.s);
      break;
    case CriterionVariant::GolodShafarevich:
      // r and s slots carry d_ell(Cl) and d_ell(E)
      res.lhs = in.r;
      res.rhs = 2 + 2 * std::sqrt(in.s + 1.0);
      break;
  }
  res.holds = res.lhs >= res.rhs;
  return res;
}

long long unit_s_rank(int ell, int r1, int r2, int rho, int delta_ell, int s) {
  if (ell < 0 || r1 < 0 || r2 < 0 || rho < 0 || delta_ell < 0 || s < 0)
    throw std::invalid_argument("unit_s_rank: counts must be non-negative");
  if ((long long)ell * rho % 2 != 0)
    throw std::invalid_argument("unit_s_rank: ell * rho must be even");
  return (long long)ell * (r1 + r2) - (long long)ell * rho / 2 + delta_ell - 1 + s;
}

namespace {

LPCoefficients bound_coefficients(BoundAssumption mode) {
  // b0 = b1 = 0: the archimedean objective part is carried by bs_lower.
  return coefficients(mode == BoundAssumption::Grh ? BoundMode::GrhKappa
                                                   : BoundMode::UncKappa,
                      FieldClass::All);
}

double greedy_upper_fill(const NumberFieldExample& ex, double g, const PhiSystem& base,
                         BoundAssumption mode) {
  LPCoefficients coeffs = bound_coefficients(mode);
  double used = inequality_lhs(base, mode == BoundAssumption::Grh
                                         ? InequalityMode::Grh
                                         : InequalityMode::Unconditional1);
  std::vector<GreedyItem> items;
  for (const auto& place : ex.extra_norms) items.push_back({place.norm, place.count / g});
  LPSolution sol = greedy_fill(coeffs, used, std::move(items), ex.free_from,
                               ex.free_count / g);
  return sol.value;
}

// Crude window bound: fill window_from.. at full multiplicity; the window
// ends at the first prime whose inclusion pushes the Stark-type inequality
// past 1, which caps every limit point of the ratio by the plain b-sum.
double crude_window_fill(const NumberFieldExample& ex, double g, const PhiSystem& base) {
  double used = inequality_lhs(base, InequalityMode::Unconditional2);
  double fill = 0;
  for (const auto& place : ex.extra_norms) {
    used += place.count / g * place_coefficient(place.norm, InequalityMode::Unconditional2);
    fill += place.count / g * std::log((double)place.norm / ((double)place.norm - 1));
  }
  double budget = 1 - used;
  double mass = 0, bsum = 0;
  bool closed = false;
  for (std::uint64_t p : primes_up_to(100000)) {
    if (p < ex.window_from) continue;
    mass += ex.window_count / g * place_coefficient(p, InequalityMode::Unconditional2);
    bsum += ex.window_count / g * std::log((double)p / ((double)p - 1));
    if (mass > budget) {
      closed = true;
      break;
    }
  }
  if (!closed) throw std::runtime_error("crude window: no contradiction below the prime cap");
  return fill + bsum;
}

}  // namespace

ExampleBounds example_bounds(const NumberFieldExample& ex, BoundAssumption mode) {
  ExampleBounds out;
  if (ex.delta_asserted) {
    out.asserted_only = true;
    out.deficiency_upper = *ex.delta_asserted;
    return out;
  }
  double g = genus(ex);
  PhiSystem base = phi_from_unramified_tower(ex);
  out.g = g;
  out.bs_lower = bs_ratio(base);
  out.kappa_lower = kappa(base);
  out.deficiency_upper = deficiency(base);

  double fill = 0;
  if (mode == BoundAssumption::Grh) {
    fill = greedy_upper_fill(ex, g, base, mode);
  } else {
    switch (ex.unc) {
      case UncRecipe::Greedy:
        fill = greedy_upper_fill(ex, g, base, mode);
        break;
      case UncRecipe::CrudeWindow:
        fill = crude_window_fill(ex, g, base);
        break;
      case UncRecipe::Asserted:
        out.bs_upper = ex.unc_upper_asserted;
        out.kappa_upper = out.bs_upper - 1 + base.phi_real() * std::log(2.0) +
                          base.phi_complex() * std::log(2 * kPi);
        return out;
    }
  }
  out.bs_upper = out.bs_lower + fill;
  out.kappa_upper = out.bs_upper - 1 + base.phi_real() * std::log(2.0) +
                    base.phi_complex() * std::log(2 * kPi);
  return out;
}

ExampleBounds example_bounds(const std::string& id, BoundAssumption mode) {
  return example_bounds(catalogue().find(id), mode);
}

double sharp_unconditional_upper(const NumberFieldExample& ex) {
  if (ex.sharp_norms.empty())
    throw std::invalid_argument("sharp_unconditional_upper: example has no sharp norm data");
  double g = genus(ex);
  PhiSystem base = phi_from_unramified_tower(ex);
  LPCoefficients coeffs = bound_coefficients(BoundAssumption::Unconditional);
  double used = inequality_lhs(base, InequalityMode::Unconditional1);
  std::vector<GreedyItem> items;
  for (const auto& place : ex.extra_norms) items.push_back({place.norm, place.count / g});
  for (const auto& place : ex.sharp_norms) items.push_back({place.norm, place.count / g});
  LPSolution sol = greedy_fill(coeffs, used, std::move(items), ex.sharp_free_from,
                               ex.sharp_free_count / g);
  return bs_ratio(base) + sol.value;
}

YamamuraCheck yamamura_grh_check() {
  const NumberFieldExample& ex = catalogue().find("yamamura");
  YamamuraCheck out;
  out.g = genus(ex);
  PhiSystem phi = phi_from_unramified_tower(ex);
  out.grh_lhs = inequality_lhs(phi, InequalityMode::Grh);
  out.contradiction = out.grh_lhs > 1;
  return out;
}

// ---------------------------------------------------------------------------
// catalogue text format

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

PlaceCount parse_place(const std::string& tok) {
  auto star = tok.find('*');
  if (star == std::string::npos) throw std::runtime_error("catalogue: expected q*count, got " + tok);
  return {std::stoull(tok.substr(0, star)), std::stoi(tok.substr(star + 1))};
}

TowerSource parse_source(const std::string& s) {
  if (s == "prop9.1") return TowerSource::Prop91;
  if (s == "thm9.1") return TowerSource::Thm91;
  if (s == "cor9.2") return TowerSource::Cor92;
  if (s == "literature") return TowerSource::Literature;
  throw std::runtime_error("catalogue: unknown source " + s);
}

std::string source_name(TowerSource s) {
  switch (s) {
    case TowerSource::Prop91: return "prop9.1";
    case TowerSource::Thm91: return "thm9.1";
    case TowerSource::Cor92: return "cor9.2";
    case TowerSource::Literature: return "literature";
  }
  return "";
}

}  // namespace

Catalogue parse_catalogue(const std::string& text) {
  Catalogue cat;
  std::istringstream in(text);
  std::string line;
  NumberFieldExample cur;
  bool open = false;
  auto flush = [&] {
    if (open) cat.examples.push_back(cur);
    cur = NumberFieldExample{};
    open = false;
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::runtime_error("catalogue: missing ':' in " + line);
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    auto vb = value.find_first_not_of(" \t");
    value = vb == std::string::npos ? "" : value.substr(vb);

    if (key == "id") {
      flush();
      open = true;
      cur.id = value;
    } else if (!open) {
      throw std::runtime_error("catalogue: key before id: " + key);
    } else if (key == "n") {
      cur.degree = std::stoi(value);
    } else if (key == "r1") {
      cur.r1 = std::stoi(value);
    } else if (key == "r2") {
      cur.r2 = std::stoi(value);
    } else if (key == "disc") {
      for (auto& tok : split_ws(value)) {
        auto caret = tok.find('^');
        if (caret == std::string::npos) throw std::runtime_error("catalogue: disc term " + tok);
        cur.disc_factors.emplace_back(std::stoull(tok.substr(0, caret)),
                                      std::stoi(tok.substr(caret + 1)));
      }
    } else if (key == "split") {
      for (auto& tok : split_ws(value)) cur.split_places.push_back(parse_place(tok));
    } else if (key == "decomp") {
      for (auto& tok : split_ws(value)) {
        DecompositionRow row;
        std::istringstream ts(tok);
        char c1, c2, c3;
        if (!(ts >> row.v >> c1 >> row.e >> c2 >> row.f >> c3 >> row.n) || c1 != ':' ||
            c2 != ':' || c3 != ':')
          throw std::runtime_error("catalogue: decomp term " + tok);
        cur.decomposition.push_back(row);
      }
    } else if (key == "norms") {
      for (auto& tok : split_ws(value)) cur.extra_norms.push_back(parse_place(tok));
    } else if (key == "free") {
      PlaceCount pc = parse_place(value);
      cur.free_from = pc.norm;
      cur.free_count = pc.count;
    } else if (key == "unc") {
      auto toks = split_ws(value);
      if (toks.empty()) throw std::runtime_error("catalogue: empty unc recipe");
      if (toks[0] == "greedy") {
        cur.unc = UncRecipe::Greedy;
      } else if (toks[0] == "window") {
        cur.unc = UncRecipe::CrudeWindow;
        PlaceCount pc = parse_place(toks.at(1));
        cur.window_from = pc.norm;
        cur.window_count = pc.count;
      } else if (toks[0] == "asserted") {
        cur.unc = UncRecipe::Asserted;
        cur.unc_upper_asserted = std::stod(toks.at(1));
      } else {
        throw std::runtime_error("catalogue: unknown unc recipe " + toks[0]);
      }
    } else if (key == "sharp-norms") {
      for (auto& tok : split_ws(value)) cur.sharp_norms.push_back(parse_place(tok));
    } else if (key == "sharp-free") {
      PlaceCount pc = parse_place(value);
      cur.sharp_free_from = pc.norm;
      cur.sharp_free_count = pc.count;
    } else if (key == "delta") {
      cur.delta_asserted = std::stod(value);
    } else if (key == "source") {
      cur.source = parse_source(value);
    } else {
      throw std::runtime_error("catalogue: unknown key " + key);
    }
  }
  flush();
  // signature and decomposition consistency
  for (const auto& ex : cat.examples) {
    if (ex.degree != ex.r1 + 2 * ex.r2)
      throw std::runtime_error("catalogue: n != r1 + 2 r2 for " + ex.id);
    for (const auto& row : ex.decomposition)
      if (row.e * row.f * row.n != ex.degree)
        throw std::runtime_error("catalogue: efn != n for " + ex.id);
  }
  return cat;
}

std::string format_catalogue(const Catalogue& cat) {
  std::ostringstream out;
  bool first = true;
  for (const auto& ex : cat.examples) {
    if (!first) out << "\n";
    first = false;
    out << "id: " << ex.id << "\n";
    out << "n: " << ex.degree << "\n";
    out << "r1: " << ex.r1 << "\n";
    out << "r2: " << ex.r2 << "\n";
    if (!ex.disc_factors.empty()) {
      out << "disc:";
      for (auto& [p, e] : ex.disc_factors) out << " " << p << "^" << e;
      out << "\n";
    }
    if (!ex.split_places.empty()) {
      out << "split:";
      for (auto& pc : ex.split_places) out << " " << pc.norm << "*" << pc.count;
      out << "\n";
    }
    if (!ex.decomposition.empty()) {
      out << "decomp:";
      for (auto& row : ex.decomposition)
        out << " " << row.v << ":" << row.e << ":" << row.f << ":" << row.n;
      out << "\n";
    }
    if (!ex.extra_norms.empty()) {
      out << "norms:";
      for (auto& pc : ex.extra_norms) out << " " << pc.norm << "*" << pc.count;
      out << "\n";
    }
    if (ex.free_from) out << "free: " << ex.free_from << "*" << ex.free_count << "\n";
    switch (ex.unc) {
      case UncRecipe::Greedy:
        out << "unc: greedy\n";
        break;
      case UncRecipe::CrudeWindow:
        out << "unc: window " << ex.window_from << "*" << ex.window_count << "\n";
        break;
      case UncRecipe::Asserted:
        out << "unc: asserted " << ex.unc_upper_asserted << "\n";
        break;
    }
    if (!ex.sharp_norms.empty()) {
      out << "sharp-norms:";
      for (auto& pc : ex.sharp_norms) out << " " << pc.norm << "*" << pc.count;
      out << "\n";
    }
    if (ex.sharp_free_from)
      out << "sharp-free: " << ex.sharp_free_from << "*" << ex.sharp_free_count << "\n";
    if (ex.delta_asserted) out << "delta: " << *ex.delta_asserted << "\n";
    out << "source: " << source_name(ex.source) << "\n";
  }
  return out.str();
}

const NumberFieldExample& Catalogue::find(const std::string& id) const {
  for (const auto& ex : examples)
    if (ex.id == id) return ex;
  throw std::out_of_range("catalogue: unknown example id '" + id + "'");
}

const std::string& catalogue_text() { return detail::embedded_catalogue_text(); }

const Catalogue& catalogue() {
  static const Catalogue cat = parse_catalogue(catalogue_text());
  return cat;
}

}  // namespace gfa
