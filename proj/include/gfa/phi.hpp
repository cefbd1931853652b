// The phi-vector data model: the limits N_alpha/g of an asymptotically exact
// family of global fields, together with validity checks and a line-based
// text format.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gfa {

enum class FieldKind { Number, Function };

// Structural validation only checks the shape constraints (non-negativity,
// prime-power keys, the per-prime degree bound); Grh and Unconditional
// additionally evaluate the corresponding basic inequality.
enum class ValidationMode { Structural, Grh, Unconditional };

struct Violation {
  std::string constraint;
  double lhs = 0;
  double rhs = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

class PhiSystem {
 public:
  // All-zero number-field vector.
  PhiSystem() = default;

  static PhiSystem number_field(double phi_real, double phi_complex,
                                std::map<std::uint64_t, double> entries = {});
  // entries keyed by q = r^m.
  static PhiSystem function_field(std::uint64_t r,
                                  std::map<std::uint64_t, double> entries = {});

  FieldKind kind() const { return kind_; }
  std::uint64_t r() const { return r_; }
  double phi_real() const { return phi_real_; }
  double phi_complex() const { return phi_complex_; }
  const std::map<std::uint64_t, double>& entries() const { return entries_; }

  double at(std::uint64_t q) const;  // 0 when absent
  bool zero() const;

  // m with q = r^m (function-field kind).
  int ff_exponent(std::uint64_t q) const;

  // Adds v to phi_q (construction helper; values stay >= 0).
  void add(std::uint64_t q, double v);

 private:
  FieldKind kind_ = FieldKind::Number;
  std::uint64_t r_ = 0;
  double phi_real_ = 0;
  double phi_complex_ = 0;
  std::map<std::uint64_t, double> entries_;
};

// A passing report certifies the checked constraints only; which vectors
// are attained by actual field families is open, so no completeness claim
// is made.
ValidationReport validate(const PhiSystem& phi, ValidationMode mode);

// Text format: `kind:` line, optional `phi_R:`/`phi_C:` lines, then
// `phi <q>: <value>` lines; '#' starts a comment.  Duplicate q is an error.
PhiSystem parse_phi(const std::string& text);
PhiSystem load_phi_file(const std::string& path);
std::string format_phi(const PhiSystem& phi);

}  // namespace gfa
