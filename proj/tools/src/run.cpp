#include "cyclav/cli/run.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "cyclav/cli/output.hpp"
#include "cyclav/cli/report.hpp"
#include "cyclav/enumerate.hpp"
#include "cyclav/error.hpp"
#include "cyclav/hyp.hpp"
#include "cyclav/oracle.hpp"
#include "cyclav/stats.hpp"
#include "cyclav/surfaces.hpp"

namespace cyclav::cli {
namespace {

// Thrown by a command after writing its output when a check failed.
struct CheckFailed {
  std::string message;
};

struct Globals {
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::string out_path;
};

std::vector<Int> parse_ints(const std::vector<std::string>& texts) {
  std::vector<Int> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_int(t));
  return out;
}

unsigned parse_unsigned(const std::string& text, const char* what) {
  const Int v = parse_int(text);
  if (v < 0 || !v.fits_uint_p()) throw InvalidArgument(std::string(what) + " must be a non-negative integer");
  return static_cast<unsigned>(v.get_ui());
}

std::string b(bool x) { return x ? "true" : "false"; }

Json opt_rational(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return rational_string(*r);
}

Json window_json(const EnumWindow& w) {
  Json j;
  j["values"] = int_array(w.values);
  j["size"] = w.size();
  if (w.empty()) {
    j["min"] = nullptr;
    j["max"] = nullptr;
  } else {
    j["min"] = to_string(w.min);
    j["max"] = to_string(w.max);
  }
  j["M"] = to_string(w.M);
  return j;
}

Json verdict_json(const CyclicityVerdict& v) {
  Json j;
  j["N"] = to_string(v.N);
  j["dN"] = to_string(v.dN);
  j["hatN"] = to_string(v.hatN);
  j["witness_gcd"] = to_string(v.witness_gcd);
  j["cyclic"] = v.cyclic;
  return j;
}

Json witness_json(const HypWitness& w) {
  Json j;
  j["eta"] = to_string(w.eta);
  j["t"] = to_string(w.t);
  j["s"] = to_string(w.s);
  return j;
}

HypWitness parse_witness(const std::vector<std::string>& parts) {
  if (parts.size() != 3) throw InvalidArgument("a witness is three integers: eta t s");
  HypWitness w{parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
  if (w.eta < 0) throw InvalidArgument("eta must be non-negative");
  return w;
}

Table witness_table(const HypWitness& w) { return {{"eta", "t", "s"}, {{to_string(w.eta), to_string(w.t), to_string(w.s)}}}; }

FieldSize parse_field(const std::string& p, unsigned r) { return FieldSize::make(parse_int(p), r); }

// ---------------------------------------------------------------- check

void cmd_check(const std::vector<std::string>& args, const std::string& mode_text, Emitter& em) {
  if (args.size() < 4) throw InvalidArgument("usage: check g p r a1 .. ag");
  const unsigned g = parse_unsigned(args[0], "g");
  const unsigned r = parse_unsigned(args[2], "r");
  std::vector<Int> coeffs = parse_ints({args.begin() + 3, args.end()});
  const Mode mode = parse_mode(mode_text);
  const IsogenyClass c = make_class(g, parse_int(args[1]), r, std::move(coeffs));
  const ReportRecord rec = make_record(c, mode);
  Json doc = to_json(rec);
  doc["reason"] = validate(c, mode).reason;
  if (g == 2) {
    const RueckReport rr = rueck_report(c.field(), c.coeffs()[0], c.coeffs()[1]);
    doc["rueck"] = {{"bounds_ok", rr.bounds_ok}, {"delta", to_string(rr.delta)},
                    {"delta_nonsquare", rr.delta_nonsquare}, {"case3", std::string(to_string(rr.case3))},
                    {"case3_ok", rr.case3_ok}, {"valid", rr.valid}};
  }
  em.emit(doc, {record_columns(), {record_cells(rec)}});
}

// ---------------------------------------------------------------- enum

void cmd_enum(const std::vector<std::string>& args, const std::string& mode_text, unsigned jobs, Emitter& em) {
  if (args.size() < 3) throw InvalidArgument("usage: enum g p r a1 .. a(g-1)");
  const unsigned g = parse_unsigned(args[0], "g");
  const unsigned r = parse_unsigned(args[2], "r");
  const std::vector<Int> prefix = parse_ints({args.begin() + 3, args.end()});
  const Mode mode = parse_mode(mode_text);
  const FieldSize field = parse_field(args[1], r);
  const EnumPair pair = enumerate_both(g, prefix, field, {mode, jobs});

  Json doc;
  doc["g"] = g;
  doc["p"] = to_string(field.p);
  doc["r"] = r;
  doc["q"] = to_string(field.q);
  doc["prefix"] = int_array(prefix);
  doc["mode"] = membership_label(g, mode);
  doc["I"] = window_json(pair.all);
  doc["I_c"] = window_json(pair.cyclic);

  Table t{{"z", "cyclic"}, {}};
  std::size_t k = 0;
  for (const Int& z : pair.all.values) {
    while (k < pair.cyclic.size() && pair.cyclic.values[k] < z) ++k;
    const bool cyc = k < pair.cyclic.size() && pair.cyclic.values[k] == z;
    t.rows.push_back({to_string(z), b(cyc)});
  }
  em.emit(doc, t);
}

// ---------------------------------------------------------------- density

struct DensityArgs {
  std::string p;
  std::string n;
  std::vector<std::string> coeffs;
  std::string mode = "either";
  bool with_bound = false;
  unsigned from_index = 1;
  std::string base_num = "0";
  std::string base_den = "0";
};

void cmd_density(const std::string& kind, const DensityArgs& a, unsigned jobs, Emitter& em) {
  const std::vector<Int> coeffs = parse_ints(a.coeffs);
  DensityOptions opts;
  opts.mode = parse_mode(a.mode);
  opts.jobs = jobs;
  opts.from_index = a.from_index;
  opts.base_numerator = parse_int(a.base_num);
  opts.base_denominator = parse_int(a.base_den);
  opts.with_bound = a.with_bound;
  if (a.n.empty()) throw InvalidArgument("density: --n is required");
  if (a.with_bound && kind != "r") throw InvalidArgument("--with-bound applies to density r only");

  const std::string index_name = kind == "x" ? "ell" : "i";
  em.begin_stream({index_name, "numerator", "denominator", "value"});
  opts.on_point = [&](const SeriesPoint& pt) {
    Json row{{"type", "point"}, {index_name, to_string(pt.index)}, {"numerator", to_string(pt.numerator)},
             {"denominator", to_string(pt.denominator)}, {"value", opt_rational(pt.value)}};
    em.stream_row(row, {to_string(pt.index), to_string(pt.numerator), to_string(pt.denominator),
                        pt.value ? rational_string(*pt.value) : ""});
  };

  DensityEstimate est;
  unsigned g = 0;
  Int p_value;
  if (kind == "r") {
    if (a.p.empty()) throw InvalidArgument("density r: --p is required");
    p_value = parse_int(a.p);
    g = static_cast<unsigned>(coeffs.size()) + 1;
    est = density_r(p_value, coeffs, parse_unsigned(a.n, "--n"), opts);
  } else if (kind == "x") {
    g = static_cast<unsigned>(coeffs.size());
    est = density_x(coeffs, parse_int(a.n), opts);
  } else {
    if (a.p.empty()) throw InvalidArgument("density y: --p is required");
    p_value = parse_int(a.p);
    g = static_cast<unsigned>(coeffs.size());
    est = density_y(p_value, coeffs, parse_unsigned(a.n, "--n"), opts);
  }

  Json summary{{"type", "summary"}, {"kind", kind}, {"g", g}, {"coeffs", int_array(coeffs)},
               {"mode", membership_label(std::max(g, 1u), opts.mode)}, {"numerator", to_string(est.numerator)},
               {"denominator", to_string(est.denominator)}, {"value", opt_rational(est.value)}};
  if (kind != "x") summary["p"] = to_string(p_value);
  if (est.value) summary["value_float"] = est.value->get_d();
  if (est.bound) summary["bound"] = static_cast<double>(*est.bound);
  if (!est.value) summary["note"] = "empty denominator: no valid class in range";
  em.end_stream(summary);
}

// ---------------------------------------------------------------- hyp

std::vector<FieldSize> sample_fields(const Int& q_max, unsigned samples, std::uint64_t seed) {
  std::vector<FieldSize> all = prime_powers_up_to(q_max);
  if (samples == 0 || samples >= all.size()) return all;
  std::mt19937_64 rng(seed);
  std::vector<FieldSize> picked;
  std::sample(all.begin(), all.end(), std::back_inserter(picked), samples, rng);
  return picked;
}

Json witness_report_json(const WitnessReport& rep) {
  Json v = Json::array();
  for (const auto& x : rep.violations) v.push_back({{"q", to_string(x.q)}, {"kind", x.kind}, {"detail", x.detail}});
  return {{"samples", rep.samples}, {"skipped", rep.skipped}, {"verified", rep.verified()}, {"violations", v}};
}

Table witness_report_table(const WitnessReport& rep) {
  Table t{{"q", "kind", "detail"}, {}};
  for (const auto& x : rep.violations) t.rows.push_back({to_string(x.q), x.kind, x.detail});
  return t;
}

// ---------------------------------------------------------------- surface

Json rueck_json(const RueckReport& rr) {
  return {{"bounds_ok", rr.bounds_ok}, {"delta", to_string(rr.delta)}, {"delta_nonsquare", rr.delta_nonsquare},
          {"case3", std::string(to_string(rr.case3))}, {"case3_ok", rr.case3_ok}, {"valid", rr.valid}};
}

void cmd_surface_max(const std::string& p, unsigned r, unsigned jobs, Emitter& em) {
  const MaximalFieldResult res = maximal_field_class(parse_field(p, r), jobs);
  Json doc{{"p", to_string(res.field.p)}, {"r", r}, {"q", to_string(res.field.q)}, {"a", to_string(res.a)},
           {"b", to_string(res.b)}, {"N", to_string(res.verdict.N)}, {"dN", to_string(res.verdict.dN)},
           {"witness_gcd", to_string(res.verdict.witness_gcd)}, {"cyclic", res.verdict.cyclic},
           {"ordinary", res.ordinary}, {"rueck", rueck_json(res.rueck)}, {"candidates", res.candidates}};
  em.emit(doc, {{"q", "a", "b", "N", "cyclic", "ordinary", "delta"},
                {{to_string(res.field.q), to_string(res.a), to_string(res.b), to_string(res.verdict.N),
                  b(res.verdict.cyclic), b(res.ordinary), to_string(res.rueck.delta)}}});
}

void cmd_surface_nearmax(const std::string& p, unsigned r, Emitter& em) {
  const NearMaxReport rep = nearmax_products(parse_field(p, r));
  Json entries = Json::array();
  Table t{{"label", "g", "coeffs", "N", "dN", "witness_gcd", "cyclic", "claimed", "agrees", "note"}, {}};
  for (const NearMaxEntry& e : rep.entries) {
    Json j{{"label", e.label}, {"g", e.g}, {"coeffs", int_array(e.coeffs)}, {"valid", e.valid}};
    j["verdict"] = e.verdict ? verdict_json(*e.verdict) : Json(nullptr);
    j["claimed_cyclic"] = e.claimed_cyclic ? Json(*e.claimed_cyclic) : Json(nullptr);
    j["agrees"] = e.agrees() ? Json(*e.agrees()) : Json(nullptr);
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(j);
    std::string coeffs;
    for (const Int& c : e.coeffs) coeffs += (coeffs.empty() ? "" : " ") + to_string(c);
    t.rows.push_back({e.label, std::to_string(e.g), coeffs, e.verdict ? to_string(e.verdict->N) : "",
                      e.verdict ? to_string(e.verdict->dN) : "", e.verdict ? to_string(e.verdict->witness_gcd) : "",
                      e.verdict ? b(e.verdict->cyclic) : "", e.claimed_cyclic ? b(*e.claimed_cyclic) : "",
                      e.agrees() ? b(*e.agrees()) : "", e.note});
  }
  Json doc{{"q", to_string(rep.field.q)}, {"entries", entries},
           {"cardinalities_coprime", rep.cardinalities_coprime}, {"disagreements", rep.disagreements}};
  em.emit(doc, t);
}

void cmd_surface_family(const std::string& kind, const std::string& bval, const std::string& p, unsigned r,
                        unsigned s, unsigned count, Emitter& em) {
  FamilySpec spec{parse_family_kind(kind), parse_int(bval), parse_int(p), r, s, count};
  spec = check_family_spec(spec);
  const auto members = family_generate(spec);
  Json arr = Json::array();
  Table t{{"i", "q", "coeffs", "N", "dN", "cyclic", "ordinary"}, {}};
  for (const FamilyMember& m : members) {
    Json j{{"i", m.index}, {"q", to_string(m.cls.field().q)}, {"coeffs", int_array(m.cls.coeffs())},
           {"verdict", verdict_json(m.verdict)}, {"valid", m.valid}, {"ordinary", m.ordinary},
           {"invariant_ok", m.invariant_ok}, {"recurrence_ok", m.recurrence_ok}};
    arr.push_back(j);
    t.rows.push_back({std::to_string(m.index), to_string(m.cls.field().q),
                      to_string(m.cls.coeffs()[0]) + " " + to_string(m.cls.coeffs()[1]), to_string(m.verdict.N),
                      to_string(m.verdict.dN), b(m.verdict.cyclic), b(m.ordinary)});
  }
  Json doc{{"kind", std::string(to_string(spec.kind))}, {"b", to_string(spec.b)}, {"p", to_string(spec.p)},
           {"r", spec.r}, {"s", spec.s}, {"members", arr}};
  em.emit(doc, t);
}

void cmd_surface_bezout(const std::string& from, const std::string& to, Emitter& em) {
  const Int lo = parse_int(from);
  const Int hi = to.empty() ? lo : parse_int(to);
  if (hi < lo) throw InvalidArgument("bezout: --to must be >= --x");
  if (Int(hi - lo) > 10'000'000) throw InvalidArgument("bezout: range too large");
  Json failures = Json::array();
  std::size_t checked = 0;
  Table t{{"x", "value"}, {}};
  for (Int x = lo; x <= hi; ++x, ++checked) {
    const Int v = bezout_identity_check(x);
    if (v != 35) failures.push_back({{"x", to_string(x)}, {"value", to_string(v)}});
    if (lo == hi) t.rows.push_back({to_string(x), to_string(v)});
  }
  if (lo != hi) t.rows.push_back({to_string(lo) + ".." + to_string(hi), failures.empty() ? "35" : "MISMATCH"});
  Json doc{{"from", to_string(lo)}, {"to", to_string(hi)}, {"checked", checked}, {"expected", 35},
           {"holds", failures.empty()}, {"failures", failures}};
  if (lo == hi) doc["value"] = to_string(bezout_identity_check(lo));
  em.emit(doc, t);
  if (!failures.empty()) throw CheckFailed{"Bezout identity fails"};
}

void cmd_surface_tables(Emitter& em) {
  const ResidueTables rt = residue_tables_check();
  Json doc{{"j_mod5", int_array(rt.j_mod5)}, {"N_mod25", int_array(rt.N_mod25)}, {"j_mod7", int_array(rt.j_mod7)},
           {"j_mod7_reference", int_array(rt.j_mod7_reference)}, {"j_mod5_ok", rt.j_mod5_ok},
           {"N_mod25_ok", rt.N_mod25_ok}, {"j_mod7_ok", rt.j_mod7_ok}, {"conclusion_ok", rt.conclusion_ok}};
  Table t{{"table", "x", "value"}, {}};
  for (std::size_t x = 0; x < rt.j_mod5.size(); ++x) t.rows.push_back({"j mod 5", std::to_string(x), to_string(rt.j_mod5[x])});
  for (std::size_t x = 0; x < rt.N_mod25.size(); ++x) t.rows.push_back({"N mod 25", std::to_string(x), to_string(rt.N_mod25[x])});
  for (std::size_t x = 0; x < rt.j_mod7.size(); ++x) t.rows.push_back({"j mod 7", std::to_string(x), to_string(rt.j_mod7[x])});
  em.emit(doc, t);
  if (!rt.ok()) throw CheckFailed{"residue tables differ from the expected rows"};
}

// ---------------------------------------------------------------- oracle

Json shapes_json(const std::map<GroupShape, std::uint64_t>& shapes) {
  Json arr = Json::array();
  for (const auto& [s, n] : shapes) arr.push_back({{"d1", s.d1}, {"d2", s.d2}, {"count", n}});
  return arr;
}

void cmd_oracle_classes(std::uint64_t p, unsigned jobs, Emitter& em) {
  const ClassReport rep = class_report(p, jobs);
  Json rows = Json::array();
  Table t{{"trace", "a", "curves", "cyclic_curves", "observed_all_cyclic", "predicted_cyclic", "witness_gcd", "match"}, {}};
  for (const TraceClassRow& row : rep.rows) {
    rows.push_back({{"trace", row.trace}, {"a", -row.trace}, {"curves", row.curves}, {"cyclic_curves", row.cyclic_curves},
                    {"observed_all_cyclic", row.observed_all_cyclic()}, {"predicted", verdict_json(row.predicted)},
                    {"match", row.match()}, {"shapes", shapes_json(row.shapes)}});
    t.rows.push_back({std::to_string(row.trace), std::to_string(-row.trace), std::to_string(row.curves),
                      std::to_string(row.cyclic_curves), b(row.observed_all_cyclic()), b(row.predicted.cyclic),
                      to_string(row.predicted.witness_gcd), b(row.match())});
  }
  Json doc{{"p", p}, {"total_curves", rep.total_curves}, {"total_ok", rep.total_ok}, {"mismatches", rep.mismatches},
           {"classes", rows}};
  em.emit(doc, t);
  if (rep.mismatches != 0 || !rep.total_ok) throw CheckFailed{"oracle disagrees with the criterion"};
}

void cmd_oracle_products(std::uint64_t p, const std::optional<long>& t1, const std::optional<long>& t2, unsigned jobs,
                         Emitter& em) {
  const auto curves = enumerate_curves(p, jobs);
  std::vector<std::pair<long, long>> pairs;
  if (t1 && t2) {
    pairs.emplace_back(*t1, *t2);
  } else {
    std::vector<long> traces;
    for (const auto& c : curves) traces.push_back(c.trace);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    for (std::size_t i = 0; i < traces.size(); ++i) {
      for (std::size_t j = i; j < traces.size(); ++j) pairs.emplace_back(traces[i], traces[j]);
    }
  }
  Json arr = Json::array();
  Table t{{"t1", "t2", "predicted_cyclic", "pairs", "cyclic_pairs", "consistent"}, {}};
  bool ok = true;
  for (const auto& [a, c] : pairs) {
    const ProductReport r = product_consistency(curves, p, a, c);
    ok = ok && r.consistent;
    arr.push_back({{"t1", a}, {"t2", c}, {"predicted", verdict_json(r.predicted)}, {"pairs", r.pairs},
                   {"cyclic_pairs", r.cyclic_pairs}, {"consistent", r.consistent},
                   {"converse_witnessed", r.converse_witnessed}});
    t.rows.push_back({std::to_string(a), std::to_string(c), b(r.predicted.cyclic), std::to_string(r.pairs),
                      std::to_string(r.cyclic_pairs), b(r.consistent)});
  }
  em.emit(Json{{"p", p}, {"consistent", ok}, {"products", arr}}, t);
  if (!ok) throw CheckFailed{"a product predicted cyclic contains a non-cyclic pair"};
}

void cmd_oracle_units(const std::string& t, const std::string& s, std::uint64_t n, Emitter& em) {
  const Int ti = parse_int(t), si = parse_int(s);
  const Rational brute = unit_translate_count(ti, si, n);
  const Rational closed = unit_translate_density(ti, si, Int(static_cast<unsigned long>(n)));
  em.emit(Json{{"t", t}, {"s", s}, {"n", n}, {"brute_force", rational_string(brute)},
               {"closed_form", rational_string(closed)}, {"agree", brute == closed}},
          {{"t", "s", "n", "brute_force", "closed_form", "agree"},
           {{t, s, std::to_string(n), rational_string(brute), rational_string(closed), b(brute == closed)}}});
  if (brute != closed) throw CheckFailed{"unit translate density mismatch"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cyclav");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclicity of isogeny classes of abelian varieties over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all");
  Globals gl;
  app.add_option("--format", gl.format, "Output format: json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--jobs", gl.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", gl.seed, "Seed for sampled verifications");
  app.add_option("--out", gl.out_path, "Write output to FILE instead of stdout");

  std::function<void(Emitter&)> action;
  std::string mode = "either";

  // check
  std::vector<std::string> check_args;
  auto* check = app.add_subcommand("check", "Verdict for one class: check g p r a1 .. ag");
  check->add_option("args", check_args)->required()->allow_extra_args();
  check->add_option("--mode", mode, "g = 2 membership: rueck-field, ordinary, either");
  check->callback([&] { action = [&](Emitter& em) { cmd_check(check_args, mode, em); }; });

  // enum
  std::vector<std::string> enum_args;
  auto* en = app.add_subcommand("enum", "I and I_c: enum g p r a1 .. a(g-1)");
  en->add_option("args", enum_args)->required();
  en->add_option("--mode", mode, "g = 2 membership: rueck-field, ordinary, either");
  en->callback([&] { action = [&](Emitter& em) { cmd_enum(enum_args, mode, gl.jobs, em); }; });

  // density
  auto* density = app.add_subcommand("density", "Cyclic densities r, x, y");
  density->require_subcommand(1);
  DensityArgs da;
  for (const char* kind : {"r", "x", "y"}) {
    auto* sub = density->add_subcommand(kind, std::string("density ") + kind);
    if (std::string(kind) != "x") sub->add_option("--p", da.p, "Characteristic");
    sub->add_option("--n", da.n, std::string(kind) == "x" ? "Largest prime ell" : "Largest exponent i")->required();
    sub->add_option("--coeffs", da.coeffs, "Coefficient vector")->expected(0, -1);
    sub->add_option("--mode", da.mode, "g = 2 membership: rueck-field, ordinary, either");
    if (std::string(kind) == "r") sub->add_flag("--with-bound", da.with_bound, "Attach the closed-form lower bound");
    if (std::string(kind) != "x") {
      sub->add_option("--from-index", da.from_index, "Resume from this exponent");
      sub->add_option("--base-numerator", da.base_num, "Cumulative numerator before --from-index");
      sub->add_option("--base-denominator", da.base_den, "Cumulative denominator before --from-index");
    }
    const std::string k = kind;
    sub->callback([&, k] { action = [&, k](Emitter& em) { cmd_density(k, da, gl.jobs, em); }; });
  }

  // hyp
  auto* hyp = app.add_subcommand("hyp", "Witnesses (eta, t, s)");
  hyp->require_subcommand(1);
  std::vector<std::string> hyp_coeffs, w1, w2;
  std::string ell, q_max = "1000", hyp_p;
  unsigned samples = 0;
  auto* hw = hyp->add_subcommand("witness", "Built-in witness: --coeffs a (elliptic) or --coeffs a b (surface)");
  hw->add_option("--coeffs", hyp_coeffs)->required();
  hw->callback([&] {
    action = [&](Emitter& em) {
      const auto c = parse_ints(hyp_coeffs);
      HypWitness w;
      if (c.size() == 1) w = elliptic_witness(c[0]);
      else if (c.size() == 2) w = surface_witness(c[0], c[1]);
      else throw InvalidArgument("hyp witness: give one (g = 1) or two (g = 2) coefficients");
      Json doc = witness_json(w);
      doc["coeffs"] = int_array(c);
      em.emit(doc, witness_table(w));
    };
  });
  auto* hv = hyp->add_subcommand("verify", "Check a witness on sampled prime powers q <= --q-max");
  hv->add_option("--coeffs", hyp_coeffs)->required();
  hv->add_option("--witness", w1, "eta t s")->required()->expected(3);
  hv->add_option("--q-max", q_max, "Largest q sampled");
  hv->add_option("--samples", samples, "Random subset size (0: all, uses --seed)");
  hv->callback([&] {
    action = [&](Emitter& em) {
      const auto c = parse_ints(hyp_coeffs);
      const HypWitness w = parse_witness(w1);
      const auto fields = sample_fields(parse_int(q_max), samples, gl.seed);
      const WitnessReport rep = verify_witness(static_cast<unsigned>(c.size()), c, w, fields);
      Json doc = witness_report_json(rep);
      doc["witness"] = witness_json(w);
      Json qs = Json::array();
      for (const auto& f : fields) qs.push_back(to_string(f.q));
      doc["q"] = qs;
      em.emit(doc, witness_report_table(rep));
      if (!rep.verified()) throw CheckFailed{"witness violated on the sample"};
    };
  });
  auto* hc = hyp->add_subcommand("combine", "(gcd(eta1, eta2), t1, s1)");
  hc->add_option("--w1", w1, "eta t s")->required()->expected(3);
  hc->add_option("--w2", w2, "eta t s")->required()->expected(3);
  hc->callback([&] {
    action = [&](Emitter& em) {
      const HypWitness w = combine_witnesses(parse_witness(w1), parse_witness(w2));
      em.emit(witness_json(w), witness_table(w));
    };
  });
  auto* hr = hyp->add_subcommand("reduce", "(eta/ell, t ell, s ell)");
  hr->add_option("--w1", w1, "eta t s")->required()->expected(3);
  hr->add_option("--w2", w2, "eta t s")->required()->expected(3);
  hr->add_option("--ell", ell)->required();
  hr->callback([&] {
    action = [&](Emitter& em) {
      const HypWitness w = reduce_witness(parse_witness(w1), parse_witness(w2), parse_int(ell));
      em.emit(witness_json(w), witness_table(w));
    };
  });
  auto* ht = hyp->add_subcommand("thm3", "Hypotheses for the y-density bound and the bound itself");
  ht->add_option("--coeffs", hyp_coeffs)->required();
  ht->add_option("--p", hyp_p)->required();
  ht->add_option("--witness", w1, "eta t s")->required()->expected(3);
  ht->callback([&] {
    action = [&](Emitter& em) {
      const auto c = parse_ints(hyp_coeffs);
      const HypWitness w = parse_witness(w1);
      const Thm3Check chk = thm3_check(c, parse_int(hyp_p), w);
      Json doc{{"p_odd", chk.p_odd}, {"p_not_dividing_last", chk.p_not_dividing_last},
               {"primitive_root", chk.primitive_root}, {"applicable", chk.applicable},
               {"bound", opt_rational(chk.bound)}};
      em.emit(doc, {{"p_odd", "p_not_dividing_last", "primitive_root", "applicable", "bound"},
                    {{b(chk.p_odd), b(chk.p_not_dividing_last), b(chk.primitive_root), b(chk.applicable),
                      chk.bound ? rational_string(*chk.bound) : ""}}});
    };
  });

  // surface
  auto* surface = app.add_subcommand("surface", "Abelian surface constructions");
  surface->require_subcommand(1);
  std::string sp;
  unsigned sr = 2, ss = 0, scount = 3;
  std::string skind = "prop6", sb, sx = "1", sto;
  auto* smax = surface->add_subcommand("max", "Maximal simple-field class over q = p^r, r even");
  smax->add_option("--p", sp)->required();
  smax->add_option("--r", sr)->required();
  smax->callback([&] { action = [&](Emitter& em) { cmd_surface_max(sp, sr, gl.jobs, em); }; });
  auto* snear = surface->add_subcommand("nearmax", "Near-maximal elliptic products and claim comparison");
  snear->add_option("--p", sp)->required();
  snear->add_option("--r", sr)->required();
  snear->callback([&] { action = [&](Emitter& em) { cmd_surface_nearmax(sp, sr, em); }; });
  auto* sfam = surface->add_subcommand("family", "Cyclic families prop6 / prop7");
  sfam->add_option("--kind", skind)->check(CLI::IsMember({"prop6", "prop7"}));
  sfam->add_option("--b", sb)->required();
  sfam->add_option("--p", sp)->required();
  sfam->add_option("--r", sr);
  sfam->add_option("--s", ss, "Step (0: derive)");
  sfam->add_option("--count", scount);
  sfam->callback([&] {
    if (sfam->count("--r") == 0) sr = 1;
    action = [&](Emitter& em) { cmd_surface_family(skind, sb, sp, sr, ss, scount, em); };
  });
  auto* sbez = surface->add_subcommand("bezout", "Evaluate the Bezout combination at x (or x..to)");
  sbez->add_option("--x", sx);
  sbez->add_option("--to", sto);
  sbez->callback([&] { action = [&](Emitter& em) { cmd_surface_bezout(sx, sto, em); }; });
  auto* stab = surface->add_subcommand("tables", "Residue tables mod 5, 25, 7");
  stab->callback([&] { action = [&](Emitter& em) { cmd_surface_tables(em); }; });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force elliptic curve oracle over F_p");
  oracle->require_subcommand(1);
  std::uint64_t op = 0, on = 1;
  std::optional<long> ot1, ot2;
  std::string ut = "1", us = "1";
  auto* ocl = oracle->add_subcommand("classes", "Per-trace observed vs predicted cyclicity");
  ocl->add_option("--p", op)->required();
  ocl->callback([&] { action = [&](Emitter& em) { cmd_oracle_classes(op, gl.jobs, em); }; });
  auto* opr = oracle->add_subcommand("products", "Products of trace classes");
  opr->add_option("--p", op)->required();
  opr->add_option("--t1", ot1);
  opr->add_option("--t2", ot2);
  opr->callback([&] {
    if (ot1.has_value() != ot2.has_value()) throw CLI::ValidationError("--t1/--t2", "give both traces or neither");
    action = [&](Emitter& em) { cmd_oracle_products(op, ot1, ot2, gl.jobs, em); };
  });
  auto* oun = oracle->add_subcommand("units", "Unit-translate density by direct count vs closed form");
  oun->add_option("--t", ut)->required();
  oun->add_option("--s", us)->required();
  oun->add_option("--n", on)->required()->check(CLI::PositiveNumber);
  oun->callback([&] { action = [&](Emitter& em) { cmd_oracle_units(ut, us, on, em); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!gl.out_path.empty()) {
    file.open(gl.out_path);
    if (!file) {
      err << "error: cannot open " << gl.out_path << '\n';
      return 2;
    }
    sink = &file;
  }
  try {
    Emitter em(parse_format(gl.format), *sink);
    if (action) action(em);
    return 0;
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.message << '\n';
    return 1;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cyclav::cli
