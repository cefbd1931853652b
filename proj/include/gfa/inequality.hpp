// Left-hand sides of the basic inequalities bounding a phi-vector, and the
// deficiency 1 - LHS.
#pragma once

#include <cstdint>

namespace gfa {

class PhiSystem;

enum class InequalityMode {
  Grh,            // sum phi_q log q/(sqrt q - 1) + archimedean terms
  Unconditional1, // 2 sum phi_q log q sum_m (q^m+1)^-1 + archimedean terms
  Unconditional2, // sum phi_q log q/(q-1) + archimedean terms
  FunctionField,  // sum m phi_{r^m} / (r^{m/2} - 1)
};

// Archimedean coefficients of the three number-field inequalities.
double arch_real_coefficient(InequalityMode mode);
double arch_complex_coefficient(InequalityMode mode);

// Non-archimedean coefficient of a single prime power q in the given mode.
double place_coefficient(std::uint64_t q, InequalityMode mode);

double inequality_lhs(const PhiSystem& phi, InequalityMode mode);

// 1 - lhs(Grh) for number fields, 1 - lhs(FunctionField) otherwise.
// Negative values are data: they exhibit GRH-infeasible vectors.
double deficiency(const PhiSystem& phi);

}  // namespace gfa
