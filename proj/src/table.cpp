#include "gfa/table.hpp"

#include <cstdio>
#include <sstream>

#include "gfa/towers.hpp"

namespace gfa {

namespace {

BoundMode bs_mode(bool grh) { return grh ? BoundMode::GrhBs : BoundMode::UncBs; }
BoundMode kappa_mode(bool grh) { return grh ? BoundMode::GrhKappa : BoundMode::UncKappa; }

ScanOptions scan_options(bool grh, FieldClass field_class, bool kappa_target) {
  ScanOptions opt;
  // The published unconditional totally-complex BS constant counts the
  // prime-power columns in the constraint sum and admits its boundary prime
  // at four-decimal working precision; every other cell is the plain prime
  // scan.
  if (!grh && !kappa_target && field_class == FieldClass::TotallyComplex) {
    opt.prime_power_constraint_sum = true;
    opt.turnover_tolerance = 5e-4;
  }
  return opt;
}

std::string class_name(FieldClass c) {
  switch (c) {
    case FieldClass::All: return "all fields";
    case FieldClass::TotallyReal: return "totally real";
    case FieldClass::TotallyComplex: return "totally complex";
  }
  return "";
}

}  // namespace

GlobalBounds global_bounds(bool grh, FieldClass field_class, bool kappa_target) {
  LPCoefficients coeffs =
      coefficients(kappa_target ? kappa_mode(grh) : bs_mode(grh), field_class);
  GlobalBounds out;
  LPSolution mx = lp_max(coeffs, scan_options(grh, field_class, kappa_target));
  out.p0 = mx.p0;
  if (kappa_target) {
    out.lower = 0;  // attained by any asymptotically bad family
    out.upper = mx.value;
  } else {
    out.lower = 1 + lp_min(coeffs).value;
    out.upper = 1 + mx.value;
  }
  return out;
}

BoundsTable global_bounds_table() {
  BoundsTable table;
  struct ExampleRef {
    const char* lower;
    const char* upper;
  };
  // example columns per class row: lower example / upper example
  auto examples_for = [](FieldClass c) -> ExampleRef {
    switch (c) {
      case FieldClass::All: return {"martinet20", "tr-quad15"};
      case FieldClass::TotallyReal: return {"martinet4r", "tr-quad15"};
      case FieldClass::TotallyComplex: return {"martinet20", "tc-quad15"};
    }
    return {"", ""};
  };
  for (bool kappa_target : {false, true}) {
    for (bool grh : {true, false}) {
      for (FieldClass c : {FieldClass::All, FieldClass::TotallyReal, FieldClass::TotallyComplex}) {
        BoundsRow row;
        row.grh = grh;
        row.field_class = c;
        row.kappa_target = kappa_target;
        GlobalBounds gb = global_bounds(grh, c, kappa_target);
        row.lower_bound = gb.lower;
        row.upper_bound = gb.upper;
        row.p0 = gb.p0;
        ExampleRef ref = examples_for(c);
        BoundAssumption mode = grh ? BoundAssumption::Grh : BoundAssumption::Unconditional;
        ExampleBounds lo = example_bounds(ref.lower, mode);
        ExampleBounds hi = example_bounds(ref.upper, mode);
        row.upper_example_id = ref.upper;
        if (kappa_target) {
          // the kappa table only carries the upper example column
          row.upper_example_lo = hi.kappa_lower;
          row.upper_example_hi = hi.kappa_upper;
        } else {
          row.has_lower_example = true;
          row.lower_example_id = ref.lower;
          row.lower_example_lo = lo.bs_lower;
          row.lower_example_hi = lo.bs_upper;
          row.upper_example_lo = hi.bs_lower;
          row.upper_example_hi = hi.bs_upper;
        }
        table.rows.push_back(row);
      }
    }
  }
  return table;
}

namespace {

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string interval(double lo, double hi, int precision) {
  return fmt(lo, precision) + "-" + fmt(hi, precision);
}

}  // namespace

std::string render_table_text(const BoundsTable& table, int precision) {
  std::ostringstream out;
  out << "Brauer-Siegel ratio\n";
  out << "  mode           class            lower    lower example     upper example     upper\n";
  for (const auto& row : table.rows) {
    if (row.kappa_target) continue;
    char line[256];
    std::snprintf(line, sizeof line, "  %-14s %-16s %-8s %-17s %-17s %s\n",
                  row.grh ? "GRH" : "unconditional", class_name(row.field_class).c_str(),
                  fmt(row.lower_bound, precision).c_str(),
                  interval(row.lower_example_lo, row.lower_example_hi, precision).c_str(),
                  interval(row.upper_example_lo, row.upper_example_hi, precision).c_str(),
                  fmt(row.upper_bound, precision).c_str());
    out << line;
  }
  out << "\nkappa\n";
  out << "  mode           class            upper example     upper\n";
  for (const auto& row : table.rows) {
    if (!row.kappa_target) continue;
    char line[256];
    std::snprintf(line, sizeof line, "  %-14s %-16s %-17s %s\n",
                  row.grh ? "GRH" : "unconditional", class_name(row.field_class).c_str(),
                  interval(row.upper_example_lo, row.upper_example_hi, precision).c_str(),
                  fmt(row.upper_bound, precision).c_str());
    out << line;
  }
  return out.str();
}

std::string render_table_csv(const BoundsTable& table) {
  std::ostringstream out;
  out << "mode,class,target,lower_bound,lower_example,upper_example,upper_bound\n";
  for (const auto& row : table.rows) {
    out << (row.grh ? "grh" : "unc") << ",";
    switch (row.field_class) {
      case FieldClass::All: out << "all"; break;
      case FieldClass::TotallyReal: out << "real"; break;
      case FieldClass::TotallyComplex: out << "complex"; break;
    }
    out << "," << (row.kappa_target ? "kappa" : "bs") << ",";
    char buf[256];
    if (row.kappa_target) {
      std::snprintf(buf, sizeof buf, "%.17g,,%.17g:%.17g,%.17g\n", row.lower_bound,
                    row.upper_example_lo, row.upper_example_hi, row.upper_bound);
    } else {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g:%.17g,%.17g:%.17g,%.17g\n",
                    row.lower_bound, row.lower_example_lo, row.lower_example_hi,
                    row.upper_example_lo, row.upper_example_hi, row.upper_bound);
    }
    out << buf;
  }
  return out.str();
}

}  // namespace gfa
