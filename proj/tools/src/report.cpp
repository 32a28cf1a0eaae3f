#include "cyclav/cli/report.hpp"

#include "cyclav/error.hpp"

namespace cyclav::cli {
namespace {

Int int_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (v.is_string()) return parse_int(v.get<std::string>());
  if (v.is_number_integer()) return Int(v.get<long>());
  throw InvalidArgument(std::string("record field '") + key + "' must be a decimal string");
}

Certainty parse_certainty(const std::string& text) {
  if (text == "exact") return Certainty::Exact;
  if (text == "necessary-only") return Certainty::NecessaryOnly;
  throw InvalidArgument("unknown certainty '" + text + "'");
}

std::string join(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += to_string(values[i]);
  }
  return out;
}

}  // namespace

ReportRecord make_record(const IsogenyClass& c, Mode mode) {
  const ValidityVerdict v = validate(c, mode);
  const CyclicityVerdict cv = is_cyclic_class(c);
  ReportRecord rec;
  rec.g = c.g();
  rec.p = c.field().p;
  rec.r = c.field().r;
  rec.coeffs = c.coeffs();
  rec.N = cv.N;
  rec.dN = cv.dN;
  rec.hatN = cv.hatN;
  rec.witness_gcd = cv.witness_gcd;
  rec.cyclic = cv.cyclic;
  rec.valid = v.valid;
  rec.certainty = v.certainty;
  rec.ordinary = v.ordinary;
  rec.mode = membership_label(c.g(), mode);
  return rec;
}

Json int_array(const std::vector<Int>& values) {
  Json arr = Json::array();
  for (const Int& v : values) arr.push_back(to_string(v));
  return arr;
}

std::string rational_string(const Rational& r) { return to_string(r); }

Json to_json(const ReportRecord& rec) {
  Json j;
  j["g"] = rec.g;
  j["p"] = to_string(rec.p);
  j["r"] = rec.r;
  j["coeffs"] = int_array(rec.coeffs);
  j["N"] = to_string(rec.N);
  j["dN"] = to_string(rec.dN);
  j["hatN"] = to_string(rec.hatN);
  j["witness_gcd"] = to_string(rec.witness_gcd);
  j["cyclic"] = rec.cyclic;
  j["valid"] = rec.valid;
  j["certainty"] = std::string(to_string(rec.certainty));
  j["ordinary"] = rec.ordinary;
  j["mode"] = rec.mode;
  return j;
}

ReportRecord record_from_json(const Json& j) {
  ReportRecord rec;
  rec.g = j.at("g").get<unsigned>();
  rec.p = int_field(j, "p");
  rec.r = j.at("r").get<unsigned>();
  for (const Json& c : j.at("coeffs")) rec.coeffs.push_back(c.is_string() ? parse_int(c.get<std::string>()) : Int(c.get<long>()));
  rec.N = int_field(j, "N");
  rec.dN = int_field(j, "dN");
  rec.hatN = int_field(j, "hatN");
  rec.witness_gcd = int_field(j, "witness_gcd");
  rec.cyclic = j.at("cyclic").get<bool>();
  rec.valid = j.at("valid").get<bool>();
  rec.certainty = parse_certainty(j.at("certainty").get<std::string>());
  rec.ordinary = j.at("ordinary").get<bool>();
  rec.mode = j.at("mode").get<std::string>();
  return rec;
}

std::vector<std::string> record_columns() {
  return {"g", "p", "r", "coeffs", "N", "dN", "hatN", "witness_gcd", "cyclic", "valid", "certainty", "ordinary", "mode"};
}

std::vector<std::string> record_cells(const ReportRecord& rec) {
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  return {std::to_string(rec.g), to_string(rec.p), std::to_string(rec.r), join(rec.coeffs), to_string(rec.N),
          to_string(rec.dN), to_string(rec.hatN), to_string(rec.witness_gcd), b(rec.cyclic), b(rec.valid),
          std::string(to_string(rec.certainty)), b(rec.ordinary), rec.mode};
}

}  // namespace cyclav::cli
