// Assembly of the two global summary tables: bounds from the closed-form
// linear program, example columns from the tower catalogue.
#pragma once

#include <string>
#include <vector>

#include "gfa/lp.hpp"

namespace gfa {

struct BoundsRow {
  bool grh = true;
  FieldClass field_class = FieldClass::All;
  bool kappa_target = false;          // false: Brauer-Siegel ratio
  double lower_bound = 0;             // 0 for kappa rows (always attainable)
  double upper_bound = 0;
  std::uint64_t p0 = 0;               // boundary prime behind the upper bound
  std::string lower_example_id, upper_example_id;
  double lower_example_lo = 0, lower_example_hi = 0;
  double upper_example_lo = 0, upper_example_hi = 0;
  bool has_lower_example = false;
};

struct BoundsTable {
  std::vector<BoundsRow> rows;  // 6 BS rows then 6 kappa rows
};

BoundsTable global_bounds_table();

// Lower/upper global bound pair for one mode/class/target triple.
struct GlobalBounds {
  double lower = 0, upper = 0;
  std::uint64_t p0 = 0;
};
GlobalBounds global_bounds(bool grh, FieldClass field_class, bool kappa_target);

std::string render_table_text(const BoundsTable& table, int precision = 4);
std::string render_table_csv(const BoundsTable& table);

}  // namespace gfa
