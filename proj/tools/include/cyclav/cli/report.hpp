#pragma once

// The per-class record emitted by `check` and friends. Big integers travel
// as decimal strings so JSON consumers never lose precision.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "cyclav/arith.hpp"
#include "cyclav/validity.hpp"
#include "cyclav/weil.hpp"

namespace cyclav::cli {

using Json = nlohmann::ordered_json;

struct ReportRecord {
  unsigned g = 1;
  Int p;
  unsigned r = 1;
  std::vector<Int> coeffs;
  Int N;
  Int dN;
  Int hatN;
  Int witness_gcd;
  bool cyclic = false;
  bool valid = false;
  Certainty certainty = Certainty::Exact;
  bool ordinary = false;
  std::string mode;  // membership test label

  bool operator==(const ReportRecord&) const = default;
};

ReportRecord make_record(const IsogenyClass& c, Mode mode);

Json to_json(const ReportRecord& rec);
ReportRecord record_from_json(const Json& j);

std::vector<std::string> record_columns();
std::vector<std::string> record_cells(const ReportRecord& rec);

Json int_array(const std::vector<Int>& values);
std::string rational_string(const Rational& r);

}  // namespace cyclav::cli
