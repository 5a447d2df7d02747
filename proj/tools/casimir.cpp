// casimir: command-line front end for the spectrum engines.
//
// Exit codes: 0 success, 1 certificate violated, 2 usage error.

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "casimir/bundles.hpp"
#include "casimir/products.hpp"
#include "casimir/rank2.hpp"
#include "casimir/simplicity.hpp"
#include "casimir/spectrum.hpp"
#include "casimir/su2f.hpp"
#include "casimir/symmdata.hpp"
#include "casimir/witness.hpp"

using json = nlohmann::ordered_json;
using namespace casimir;

namespace {

enum class Format { Json, Table, Csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Serialization

json to_json(const Rational& r) { return r.str(); }

json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

json to_json(const Integer& i) { return i.get_str(); }

json to_json(const DominantWeight& w) { return w.coeffs; }

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [exps, c] : p.terms()) terms.push_back({{"exponents", exps}, {"coeff", c.str()}});
  return {{"variables", p.variables()}, {"terms", terms}, {"text", p.str()}};
}

json to_json(const CollisionReport& c) {
  return {{"weight_a", to_json(c.weight_a)},
          {"weight_b", to_json(c.weight_b)},
          {"eigenvalue", to_json(c.eigenvalue)},
          {"dual_related", c.dual_related}};
}

json to_json(const HopfWeight& w) { return json::array({w.p, w.q}); }

json to_json(const TwoParamEigenvalue& f) {
  return {{"k", f.k}, {"d", f.d}, {"a", to_json(f.a_coeff)}, {"b", to_json(f.b_coeff)}};
}

json pairs_json(const std::vector<EntryPair>& v) {
  json out = json::array();
  for (const auto& [a, b] : v) out.push_back({a, b});
  return out;
}

json descriptor_json(const SymmetricSpaceDescriptor& d) {
  json out{{"label", to_string(d.label)}, {"description", describe_params(d)}};
  if (d.r) out["r"] = d.r;
  out["rank"] = d.rank;
  out["restricted_type"] = to_string(d.restricted_type);
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::vector<std::string> strs(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      os << std::left << std::setw(static_cast<int>(width[i])) << r[i];
      if (i + 1 < r.size()) os << "  ";
    }
    os << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows) line(r);
}

void print_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void print_kv(std::ostream& os, const json& j, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      print_kv(os, value, indent + "  ");
    } else if (value.is_string()) {
      os << indent << key << ": " << value.get<std::string>() << '\n';
    } else {
      os << indent << key << ": " << value.dump() << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Argument helpers

Rational parse_rational(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: '" + text + "'");
  }
}

std::vector<Rational> parse_metric(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  for (const auto& r : out)
    if (r.sign() <= 0) throw UsageError("metric entries must be positive: '" + text + "'");
  return out;
}

SpaceLabel parse_space(const std::string& text, SpaceParams& params) {
  try {
    const auto parsed = parse_label(text);
    if (parsed.embedded) params.r = parsed.embedded;
    return parsed.label;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SpaceParams make_params(const std::optional<int>& r, const std::optional<int>& rank) { return {r, rank}; }

// ---------------------------------------------------------------------------
// Subcommands. Each returns the exit code and writes to std::cout.

struct Common {
  bool json_flag = false;
  bool table_flag = false;
  bool csv_flag = false;

  Format format() const { return table_flag ? Format::Table : csv_flag ? Format::Csv : Format::Json; }
};

void add_format(CLI::App* sub, Common& c, bool csv) {
  auto* j = sub->add_flag("--json", c.json_flag, "JSON output (default)");
  auto* t = sub->add_flag("--table", c.table_flag, "human-readable table");
  j->excludes(t);
  if (csv) {
    auto* v = sub->add_flag("--csv", c.csv_flag, "CSV output");
    v->excludes(j)->excludes(t);
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_table_delta(const std::optional<std::string>& label, Format fmt) {
  std::vector<std::pair<SpaceLabel, SpaceParams>> rows;
  if (label) {
    SpaceParams p;
    const auto l = parse_space(*label, p);
    for (const auto& [rl, rp] : representative_rows())
      if (rl == l) rows.emplace_back(rl, rp);
    if (rows.empty()) throw UsageError("no table row for label " + *label);
  } else {
    rows = representative_rows();
  }

  json list = json::array();
  std::vector<std::vector<std::string>> cells;
  for (const auto& [l, p] : rows) {
    const auto datum = restricted_datum(l, p);
    json row = descriptor_json(datum.descriptor);
    row["two_delta_bar"] = to_json(datum.two_delta_bar);
    list.push_back(row);
    cells.push_back({to_string(l), datum.descriptor.r ? std::to_string(datum.descriptor.r) : "",
                     std::to_string(datum.descriptor.rank), to_string(datum.descriptor.restricted_type),
                     join(strs(datum.two_delta_bar), " ")});
  }
  const std::vector<std::string> header{"label", "r", "rank", "type", "two_delta_bar"};
  if (fmt == Format::Table) print_table(std::cout, header, cells);
  else if (fmt == Format::Csv) print_csv(std::cout, header, cells);
  else if (label && list.size() == 1) emit(list.front());
  else emit({{"rows", list}});
  return 0;
}

int cmd_rank2_catalog(int span, Format fmt) {
  bool ok = true;
  json list = json::array();
  std::vector<std::vector<std::string>> cells;
  for (const auto& c : rank2_catalog()) {
    json entry{{"label", to_string(c.label)},
               {"restricted_type", to_string(c.restricted_type)},
               {"polynomial", to_json(c.published_polynomial)},
               {"r_min", c.r_min}};
    json checks = json::array();
    const int last = c.parametric() ? c.r_min + span : c.r_min;
    for (int r = c.r_min; r <= last; ++r) {
      const auto ch = check_rank2_case(c, r);
      ok = ok && ch.polynomial_matches && ch.pairs_collide;
      json pairs = json::array();
      for (const auto& p : ch.pairs) pairs.push_back(to_json(p));
      json check = json::object();
      if (c.parametric()) check["r"] = r;
      check["polynomial_matches"] = ch.polynomial_matches;
      check["pairs_collide"] = ch.pairs_collide;
      check["pairs"] = pairs;
      checks.push_back(check);
      for (const auto& p : ch.pairs)
        cells.push_back({to_string(c.label), c.parametric() ? std::to_string(r) : "", p.weight_a.str(),
                         p.weight_b.str(), p.eigenvalue.str(), ch.polynomial_matches ? "yes" : "NO",
                         ch.pairs_collide ? "yes" : "NO"});
    }
    entry["checks"] = checks;
    list.push_back(entry);
  }
  const std::vector<std::string> header{"label", "r", "weight_a", "weight_b", "eigenvalue", "poly_ok", "collide"};
  if (fmt == Format::Table) print_table(std::cout, header, cells);
  else if (fmt == Format::Csv) print_csv(std::cout, header, cells);
  else emit({{"cases", list}, {"all_hold", ok}});
  return ok ? 0 : 1;
}

int cmd_collide(const std::string& label_text, const SpaceParams& given, std::int64_t bound, bool include_duals,
                Format fmt) {
  SpaceParams params = given;
  const auto label = parse_space(label_text, params);
  const auto datum = restricted_datum(label, params);
  const auto found = enumerate_collisions(datum, bound, !include_duals);
  if (fmt == Format::Table) {
    std::cout << describe_params(datum.descriptor) << ", bound " << bound << ": " << found.size()
              << " collision(s)\n";
    std::vector<std::vector<std::string>> cells;
    for (const auto& c : found)
      cells.push_back({c.weight_a.str(), c.weight_b.str(), c.eigenvalue.str(), c.dual_related ? "yes" : "no"});
    print_table(std::cout, {"weight_a", "weight_b", "eigenvalue", "dual"}, cells);
    return 0;
  }
  json list = json::array();
  for (const auto& c : found) list.push_back(to_json(c));
  emit({{"space", descriptor_json(datum.descriptor)},
        {"bound", bound},
        {"include_duals", include_duals},
        {"count", found.size()},
        {"collisions", list}});
  return 0;
}

int cmd_witness(const std::string& label_text, const SpaceParams& given, Format fmt) {
  SpaceParams params = given;
  const auto label = parse_space(label_text, params);
  const auto datum = restricted_datum(label, params);
  ReflectionWitness w;
  try {
    w = reflection_witness(datum);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const auto& c = w.certificate;
  std::vector<std::string> alpha;
  for (const auto& a : c.alpha) alpha.push_back(a.get_str());
  json cert{{"indices", {c.index_i, c.index_j}},
            {"alpha", alpha},
            {"alpha_norm", to_json(c.alpha_norm)},
            {"m_lower_bounds", to_json(c.m_lower_bounds)},
            {"m", c.m},
            {"multiplier", to_json(c.multiplier)},
            {"duality_retries", c.duality_retries},
            {"alpha_dot_delta", to_json(c.alpha_dot_delta)},
            {"fixes_delta", c.fixes_delta},
            {"both_dominant", c.both_dominant},
            {"distinct", c.distinct},
            {"non_dual", c.non_dual},
            {"equal_eigenvalues", c.equal_eigenvalues},
            {"valid", c.valid()}};
  json out{{"space", descriptor_json(datum.descriptor)},
           {"v", to_json(w.report.weight_a)},
           {"w", to_json(w.report.weight_b)},
           {"eigenvalue", to_json(w.report.eigenvalue)},
           {"certificate", cert}};
  if (fmt == Format::Table) print_kv(std::cout, out);
  else emit(out);
  return c.valid() ? 0 : 1;
}

int cmd_hopf(int n, std::int64_t bound, Format fmt) {
  const auto rep = hopf_swap_theorem_scan(n, bound);
  json non_swap = json::array();
  for (const auto& c : rep.non_swap) non_swap.push_back({to_json(c.a), to_json(c.b)});
  json out{{"n", rep.n},
           {"bound", rep.bound},
           {"ordered_pairs_checked", rep.ordered_pairs_checked},
           {"reduction_disagreements", rep.disagreements},
           {"recovery_failures", rep.recovery_failures},
           {"collisions", rep.collisions.size()},
           {"swap_collisions", rep.swap_collisions},
           {"non_swap_collisions", rep.non_swap.size()},
           {"non_swap_pairs", non_swap},
           {"holds", rep.holds()}};
  if (fmt == Format::Table) print_kv(std::cout, out);
  else emit(out);
  return rep.holds() ? 0 : 1;
}

int cmd_su2f(int kmax, const std::optional<std::string>& metric_text, Format fmt) {
  std::optional<std::pair<Rational, Rational>> metric;
  if (metric_text) {
    const auto m = parse_metric(*metric_text);
    if (m.size() != 2) throw UsageError("--metric expects two entries a,b");
    metric = std::pair{m[0], m[1]};
  }
  const auto cert = simplicity_certificate(kmax, metric);
  if (fmt == Format::Table) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& f : cert.forms)
      cells.push_back({std::to_string(f.k), std::to_string(f.d), f.a_coeff.str(), f.b_coeff.str()});
    print_table(std::cout, {"k", "d", "a", "b"}, cells);
    std::cout << "oracle_agrees: " << cert.oracle_agrees << "\nodd_k_vanish: " << cert.odd_k_vanish
              << "\nwithin_k_distinct: " << cert.within_k_distinct << "\ncross_k_injective: " << cert.cross_k_injective
              << "\nmetric_collisions: " << cert.metric_collisions.size() << "\nholds: " << cert.holds() << '\n';
    return cert.holds() ? 0 : 1;
  }
  json forms = json::array();
  for (const auto& f : cert.forms) forms.push_back(to_json(f));
  json out{{"kmax", cert.kmax},
           {"dimensions", cert.dimensions},
           {"forms", forms},
           {"oracle_agrees", cert.oracle_agrees},
           {"odd_k_vanish", cert.odd_k_vanish},
           {"within_k_distinct", cert.within_k_distinct},
           {"cross_k_injective", cert.cross_k_injective},
           {"ri3_vacuous", Su2fCertificate::ri3_vacuous}};
  if (metric) {
    json cols = json::array();
    for (const auto& c : cert.metric_collisions)
      cols.push_back({{"first", to_json(c.first)}, {"second", to_json(c.second)}, {"value", to_json(c.value)}});
    out["metric"] = {to_json(metric->first), to_json(metric->second)};
    out["metric_collisions"] = cols;
  }
  out["holds"] = cert.holds();
  emit(out);
  return cert.holds() ? 0 : 1;
}

int cmd_product(const std::string& factors_text, std::int64_t bound, std::size_t max_level, Format fmt) {
  std::vector<FactorSpectrum> factors;
  std::vector<std::string> names;
  std::stringstream ss(factors_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    SymmetricSpaceDescriptor d;
    try {
      d = parse_factor(item);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    factors.push_back(factor_spectrum(d, bound));
    names.push_back(describe_params(d));
  }
  if (factors.empty()) throw UsageError("--factors is empty");
  const auto cert = generic_beta_certificate(factors, max_level);
  std::vector<Rational> ones(factors.size(), Rational(1));
  const auto unit = beta_collisions(factors, ones);

  json out{{"factors", names}, {"bound", bound}};
  json unit_json{{"collisions", unit.size()}};
  if (!unit.empty()) unit_json["first"] = {{"a", unit.front().a}, {"b", unit.front().b}, {"value", to_json(unit.front().value)}};
  out["unit_beta"] = unit_json;
  if (cert) {
    out["beta"] = to_json(cert->beta);
    out["candidates_tried"] = cert->candidates_tried;
    out["arrays_checked"] = cert->arrays_checked;
    out["hyperplanes"] = cert->hyperplanes;
    out["values_distinct"] = cert->values_distinct;
    out["avoids_hyperplanes"] = cert->avoids_hyperplanes;
    out["factors_injective"] = cert->factors_injective;
  } else {
    out["beta"] = nullptr;
  }
  const bool ok = cert && cert->holds();
  out["holds"] = ok;
  if (fmt == Format::Table) print_kv(std::cout, out);
  else emit(out);
  return ok ? 0 : 1;
}

int cmd_simplicity(const std::string& family_name, int bound, int n, const std::optional<std::string>& metric_text,
                   const std::string& mode_text, Format fmt) {
  RepresentationFamily fam;
  if (family_name == "su2f") fam = su2f_family(bound);
  else if (family_name == "hopf") fam = hopf_family(n, bound);
  else throw UsageError("unknown family '" + family_name + "'");
  validate(fam);

  const auto a = condition_a(fam);
  const auto b = condition_b(fam);
  const auto c = condition_c(fam);
  json out{{"family", fam.name}, {"truncation", fam.truncation}, {"parameters", fam.parameters},
           {"entries", fam.entries.size()}};
  out["generic"] = {{"condition_a", pairs_json(a)}, {"condition_b", b}, {"condition_c", c}};
  bool ok = a.empty() && b.empty() && c.empty();

  if (metric_text) {
    const auto point = parse_metric(*metric_text);
    if (point.size() != fam.parameters.size())
      throw UsageError("--metric expects " + std::to_string(fam.parameters.size()) + " entries");
    const auto mode = mode_text == "complex" ? SimplicityMode::Complex : SimplicityMode::Real;
    const auto rep = evaluate_at_metric(fam, point, mode);
    json m{{"point", to_json(point)}, {"mode", mode_text}};
    if (mode == SimplicityMode::Real) {
      m["ri1"] = pairs_json(rep.ri1);
      m["ri2"] = rep.ri2;
      m["ri3"] = rep.ri3;
    } else {
      m["ci1"] = rep.ci1;
      m["ci2"] = rep.ci2;
      m["ci3"] = pairs_json(rep.ci3);
    }
    m["holds"] = rep.holds();
    out["metric"] = m;
    ok = ok && rep.holds();
  }
  out["holds"] = ok;
  if (fmt == Format::Table) print_kv(std::cout, out);
  else emit(out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Laplace-spectrum certificates for compact homogeneous spaces"};
  app.require_subcommand(1);
  Common common;

  std::optional<std::string> td_label;
  auto* td = app.add_subcommand("table-delta", "2δ̄ for every row of the symmetric-space table");
  td->add_option("--label", td_label, "restrict to one label");
  add_format(td, common, true);

  int r2_span = 4;
  auto* r2 = app.add_subcommand("rank2-catalog", "rank-two eigenvalue polynomials and colliding pairs");
  r2->add_option("--span", r2_span, "check r_min..r_min+span for parametric cases")->check(CLI::Range(0, 200));
  add_format(r2, common, true);

  std::string label;
  std::optional<int> r, rank;
  std::int64_t bound = 0;
  bool include_duals = false;
  auto* co = app.add_subcommand("collide", "enumerate eigenvalue collisions in a weight box");
  co->add_option("label", label, "space label, e.g. AI, BI, CP3")->required();
  co->add_option("--r", r, "range parameter");
  co->add_option("--rank", rank, "restricted rank");
  co->add_option("--bound", bound, "box bound per coordinate")->required()->check(CLI::Range(0, 1000000));
  co->add_flag("--include-duals", include_duals, "keep pairs related by duality");
  add_format(co, common, false);

  std::string w_pos, w_opt;
  auto* wi = app.add_subcommand("witness", "reflection witness of a forced collision");
  auto* wp = wi->add_option("space", w_pos, "space label");
  auto* wo = wi->add_option("--label", w_opt, "space label");
  wp->excludes(wo);
  wi->add_option("--r", r, "range parameter");
  wi->add_option("--rank", rank, "restricted rank");
  add_format(wi, common, false);

  int n = 2;
  auto* ho = app.add_subcommand("hopf", "swap-theorem scan on the Hopf circle bundle");
  ho->add_option("--n", n, "CP^n base")->required()->check(CLI::Range(2, 1000));
  ho->add_option("--bound", bound, "bound on p, q")->required()->check(CLI::Range(1, 2000));
  add_format(ho, common, false);

  int kmax = 0;
  std::optional<std::string> metric;
  auto* su = app.add_subcommand("su2f", "SU(2)/F fixed spaces and simplicity certificate");
  su->add_option("--kmax", kmax, "largest k")->required()->check(CLI::Range(2, 400));
  su->add_option("--metric", metric, "sample metric a,b (rationals)");
  add_format(su, common, false);

  std::string factors;
  std::size_t max_level = 2000;
  auto* pr = app.add_subcommand("product", "generic β for a product of rank-one spaces");
  pr->add_option("--factors", factors, "comma-separated factors, e.g. S2,S2")->required();
  pr->add_option("--bound", bound, "per-factor bound")->required()->check(CLI::Range(0, 10000));
  pr->add_option("--max-level", max_level, "search depth for β");
  add_format(pr, common, false);

  std::string family, mode = "real";
  int si_bound = 0;
  auto* si = app.add_subcommand("simplicity", "resultant criterion on a truncated family");
  si->add_option("--family", family, "su2f or hopf")->required()->check(CLI::IsMember({"su2f", "hopf"}));
  si->add_option("--bound", si_bound, "kmax (su2f) or p+q bound (hopf)")->required()->check(CLI::Range(0, 200));
  si->add_option("--n", n, "CP^n base for the hopf family")->check(CLI::Range(2, 1000));
  si->add_option("--metric", metric, "metric point, comma-separated rationals");
  si->add_option("--mode", mode, "real or complex")->check(CLI::IsMember({"real", "complex"}));
  add_format(si, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "casimir: " << e.what() << '\n';
    return 2;
  }

  const Format fmt = common.format();
  try {
    if (*td) return cmd_table_delta(td_label, fmt);
    if (*r2) return cmd_rank2_catalog(r2_span, fmt);
    if (*co) return cmd_collide(label, make_params(r, rank), bound, include_duals, fmt);
    if (*wi) {
      const std::string l = w_pos.empty() ? w_opt : w_pos;
      if (l.empty()) throw UsageError("witness needs a label");
      return cmd_witness(l, make_params(r, rank), fmt);
    }
    if (*ho) return cmd_hopf(n, bound, fmt);
    if (*su) return cmd_su2f(kmax, metric, fmt);
    if (*pr) return cmd_product(factors, bound, max_level, fmt);
    if (*si) return cmd_simplicity(family, si_bound, n, metric, mode, fmt);
  } catch (const UsageError& e) {
    std::cerr << "casimir: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "casimir: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "casimir: check failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
