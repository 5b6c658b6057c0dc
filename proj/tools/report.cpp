#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "weakforms/duality.hpp"
#include "weakforms/genfun.hpp"
#include "weakforms/linalg.hpp"
#include "weakforms/spaces.hpp"
#include "weakforms/trace.hpp"
#include "weakforms/weak.hpp"

namespace weakforms::cli {

namespace {

constexpr int kBasisDefaultPrec = 20;
constexpr int kBasisDefaultPole = 10;

int parse_int(const std::string &text, const std::string &what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception &) {
    throw UsageError("malformed " + what + ": " + text);
  }
  if (used != text.size()) {
    throw UsageError("malformed " + what + ": " + text);
  }
  return v;
}

std::pair<int, int> parse_pair(const std::string &text, const std::string &seps,
                               const std::string &what) {
  const auto pos = text.find_first_of(seps, 1);
  if (pos == std::string::npos) {
    throw UsageError("malformed " + what + ": " + text);
  }
  return {parse_int(text.substr(0, pos), what), parse_int(text.substr(pos + 1), what)};
}

Json rat(const Rat &r) { return to_string(r); }

Json series_json(const QSeries &s) {
  Json c = Json::array();
  for (const auto &x : s.coefficients()) {
    c.push_back(rat(x));
  }
  return Json{{"min_exp", s.min_exp()}, {"prec_cap", s.prec_cap()}, {"coefficients", c}};
}

std::vector<int> weights(const RunConfig &cfg, int lo_default, int hi_default) {
  int lo = lo_default;
  int hi = hi_default;
  if (cfg.k) {
    lo = hi = *cfg.k;
  } else if (cfg.k_range) {
    std::tie(lo, hi) = *cfg.k_range;
  }
  std::vector<int> out;
  for (int k = lo; k <= hi; k += 2) {
    out.push_back(k);
  }
  return out;
}

Json cmd_dims(const RunConfig &cfg, bool &pass) {
  const int p = *cfg.p;
  Json rows = Json::array();
  for (int k : weights(cfg, 2, std::max(p - 1, 2))) {
    rows.push_back({{"k", k}, {"dim_S", dim_S(p, k)}, {"dim_E", dim_E(p, k)}, {"dim_M", dim_M(p, k)}});
  }
  pass = true;
  Json r{{"genus", genus(p)}, {"lambda", lambda_p(p)}};
  if (genus(p) == 0) {
    r["note"] = "genus-0 guard: outside the range of the duality and generating-function results";
  }
  r["rows"] = rows;
  return r;
}

Json cmd_gaps(const RunConfig &cfg, bool &pass) {
  const int p = *cfg.p;
  Json rows = Json::array();
  pass = true;
  for (int k : weights(cfg, 2, p - 1)) {
    const auto g = gap_sets(p, k);
    Json row{{"k", k},         {"miss_M", g.miss_m}, {"miss_S", g.miss_s}, {"c_M", g.c_m},
             {"c_S", g.c_s},   {"m_max", g.m_max},   {"s_max", g.s_max},   {"dim_M", g.dim_m},
             {"dim_S", g.dim_s}};
    const Rat bound = ahlgren_bound(p, k);
    const int count_bound = gap_count_bound(p, k);
    const bool ok = Rat(g.s_max) <= bound && g.c_s <= count_bound;
    row["valence_bound"] = rat(bound);
    row["gap_count_bound"] = count_bound;
    row["bounds_hold"] = ok;
    pass = pass && ok;
    rows.push_back(row);
  }
  return Json{{"rows", rows}};
}

Json cmd_basis(const RunConfig &cfg, bool &pass) {
  const int p = *cfg.p;
  const int k = *cfg.k;
  const Space sp = parse_space(cfg.space);
  const int pole = cfg.mmax.value_or(kBasisDefaultPole);
  const int prec = cfg.prec.value_or(kBasisDefaultPrec);
  const auto b = weak_basis(p, k, sp, pole, prec);
  Json r{{"space", to_string(sp)}, {"ell", b.ell},       {"anchor_weight", b.anchor_weight()},
         {"max_pole", pole},       {"prec_cap", prec},  {"index_set", b.index_set()}};
  pass = true;
  if (prediction_supported(p)) {
    const auto pred = index_set_predicted(p, k, sp);
    const auto expect = pred.members(1 - prec, pole);
    r["predicted_index_set"] = expect;
    r["matches_prediction"] = expect == b.index_set();
    pass = expect == b.index_set();
  }
  Json elems = Json::array();
  for (const auto &[m, s] : b.elements) {
    Json e = series_json(s);
    e["m"] = m;
    elems.push_back(e);
  }
  r["elements"] = elems;
  return r;
}

Json cmd_duality(const RunConfig &cfg, bool &pass) {
  const int p = *cfg.p;
  Json rows = Json::array();
  pass = true;
  for (int k : weights(cfg, 0, 0)) {
    const auto rep = duality_check_box(p, k, cfg.box, true);
    Json viol = Json::array();
    for (const auto &v : rep.violations) {
      viol.push_back({{"m", v.m}, {"n", v.n}, {"lhs", rat(v.lhs)}, {"rhs", rat(v.rhs)}});
    }
    Json dec = Json::array();
    for (const auto &[m, n] : rep.decomposition_failures) {
      dec.push_back({m, n});
    }
    rows.push_back({{"k", k},
                    {"m_range", {rep.m_lo, rep.m_hi}},
                    {"n_range", {rep.n_lo, rep.n_hi}},
                    {"checked", rep.checked},
                    {"violation_count", rep.violations.size()},
                    {"decomposition_checked", rep.decomposition_checked},
                    {"decomposition_failures", dec},
                    {"violations", viol},
                    {"pass", rep.pass()}});
    pass = pass && rep.pass();
  }
  return Json{{"rows", rows}};
}

Json cmd_genfun(const RunConfig &cfg, bool &pass) {
  const int p = *cfg.p;
  std::vector<Variant> variants;
  if (cfg.variant == "both") {
    variants = {Variant::FDenominator, Variant::GDenominator};
  } else {
    variants = {parse_variant(cfg.variant)};
  }
  Json rows = Json::array();
  pass = true;
  for (int k : weights(cfg, 0, 0)) {
    for (Variant v : variants) {
      const auto rep = genfun_check(p, k, cfg.window.first, cfg.window.second, v);
      Json nz = Json::array();
      for (const auto &[m, n] : rep.nonzero) {
        nz.push_back({m, n});
      }
      rows.push_back({{"k", k},
                      {"variant", to_string(v)},
                      {"n0", rep.params.n0},
                      {"gap_case", rep.params.gap_case},
                      {"z_last", rep.z_last},
                      {"tau_last", rep.tau_last},
                      {"a_-1", rat(rep.params.a_m1)},
                      {"a_1", rat(rep.params.a_1)},
                      {"b_-1", rat(rep.params.b_m1)},
                      {"b_1", rat(rep.params.b_1)},
                      {"numerator_products", rep.numerator_products},
                      {"coefficients_checked", rep.coefficients_checked},
                      {"max_abs_residual", rat(rep.max_abs_residual)},
                      {"nonzero_residual", nz},
                      {"pass", rep.pass()}});
      pass = pass && rep.pass();
    }
  }
  const QSeries diff = genfun_constant_difference(p, cfg.window.second + 1);
  bool constant = true;
  for (int n = diff.min_exp(); n < diff.prec_cap(); ++n) {
    constant = constant && (n == 0 || sgn(diff.coeff(n)) == 0);
  }
  pass = pass && constant;
  return Json{{"f_minus_g", series_json(diff)}, {"f_minus_g_constant", constant}, {"rows", rows}};
}

Json cmd_trace(const RunConfig &cfg, bool &pass) {
  const int p = *cfg.p;
  const int k = *cfg.k;
  const auto t = trace_table(p, k, cfg.count);
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.traces.size(); ++i) {
    rows.push_back({{"n", i + 1}, {"trace", rat(t.traces[i])}});
  }
  pass = t.traces.front() == dim_S(p, k);
  return Json{{"dim_S", dim_S(p, k)}, {"trace_T1_equals_dim", pass}, {"rows", rows}};
}

Json config_json(const RunConfig &cfg) {
  Json c;
  c["p"] = cfg.p ? Json(*cfg.p) : Json(nullptr);
  c["k"] = cfg.k ? Json(*cfg.k) : Json(nullptr);
  c["k_range"] = cfg.k_range ? Json{cfg.k_range->first, cfg.k_range->second} : Json(nullptr);
  if (cfg.command == "basis") {
    c["space"] = cfg.space;
    c["mmax"] = cfg.mmax.value_or(kBasisDefaultPole);
    c["prec"] = cfg.prec.value_or(kBasisDefaultPrec);
  }
  if (cfg.command == "duality") {
    c["box"] = cfg.box;
  }
  if (cfg.command == "genfun") {
    c["window"] = {cfg.window.first, cfg.window.second};
    c["variant"] = cfg.variant;
  }
  if (cfg.command == "trace") {
    c["count"] = cfg.count;
  }
  return c;
}

bool is_level(int p) { return p > 3 && linalg::is_prime(static_cast<std::uint64_t>(p)); }

std::string cell(const Json &v) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json &x) { return x.is_primitive(); })) {
    std::string s;
    for (const auto &x : v) {
      s += (s.empty() ? "" : " ") + cell(x);
    }
    return s;
  }
  return v.dump();
}

std::string csv_escape(const std::string &s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  }
  return out + "\"";
}

std::string render_csv(const Json &doc) {
  const auto &res = doc.at("results");
  if (!res.contains("rows")) {
    throw UsageError("csv output is available for tabular commands only");
  }
  const auto &rows = res.at("rows");
  std::ostringstream os;
  if (rows.empty()) {
    return "";
  }
  std::vector<std::string> cols;
  for (const auto &[key, val] : rows.front().items()) {
    cols.push_back(key);
  }
  for (std::size_t i = 0; i < cols.size(); ++i) {
    os << (i ? "," : "") << cols[i];
  }
  os << "\n";
  for (const auto &row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      os << (i ? "," : "") << csv_escape(cell(row.at(cols[i])));
    }
    os << "\n";
  }
  return os.str();
}

void pretty_value(std::ostringstream &os, const std::string &key, const Json &v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto &[k2, v2] : v.items()) {
      pretty_value(os, k2, v2, indent + 2);
    }
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    os << pad << key << ":\n";
    for (const auto &item : v) {
      std::string line;
      for (const auto &[k2, v2] : item.items()) {
        line += (line.empty() ? "" : "  ") + k2 + "=" + cell(v2);
      }
      os << pad << "  - " << line << "\n";
    }
  } else {
    os << pad << key << ": " << cell(v) << "\n";
  }
}

std::string render_pretty(const Json &doc) {
  std::ostringstream os;
  for (const auto &[key, val] : doc.items()) {
    pretty_value(os, key, val, 0);
  }
  return os.str();
}

} // namespace

std::pair<int, int> parse_k_range(const std::string &text) {
  const auto r = parse_pair(text, ":", "--k-range (expected lo:hi)");
  if (r.first > r.second) {
    throw UsageError("--k-range lower end exceeds upper end");
  }
  return r;
}

std::pair<int, int> parse_window(const std::string &text) {
  return parse_pair(text, ",x", "--window (expected J,I)");
}

Format parse_format(const std::string &text) {
  if (text == "json") {
    return Format::Json;
  }
  if (text == "csv") {
    return Format::Csv;
  }
  if (text == "pretty") {
    return Format::Pretty;
  }
  throw UsageError("--format must be json, csv or pretty");
}

void validate(const RunConfig &cfg) {
  static const std::vector<std::string> commands = {"dims", "gaps", "basis", "duality", "genfun", "trace"};
  if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end()) {
    throw UsageError("unknown command: " + cfg.command);
  }
  if (!cfg.p) {
    throw UsageError("--p is required");
  }
  if (!is_level(*cfg.p)) {
    throw UsageError("--p must be a prime > 3");
  }
  if (cfg.k && cfg.k_range) {
    throw UsageError("--k and --k-range are mutually exclusive");
  }
  auto even = [](int k) { return k % 2 == 0; };
  if ((cfg.k && !even(*cfg.k)) || (cfg.k_range && (!even(cfg.k_range->first) || !even(cfg.k_range->second)))) {
    throw UsageError("weights must be even");
  }
  const bool holomorphic = cfg.command == "dims" || cfg.command == "gaps" || cfg.command == "trace";
  if (holomorphic && ((cfg.k && *cfg.k < 2) || (cfg.k_range && cfg.k_range->first < 2))) {
    throw UsageError(cfg.command + " needs weights >= 2");
  }
  if (cfg.command == "gaps" && ((cfg.k && *cfg.k > *cfg.p - 1) || (cfg.k_range && cfg.k_range->second > *cfg.p - 1))) {
    throw UsageError("gaps needs weights <= p - 1");
  }
  if ((cfg.command == "basis" || cfg.command == "trace") && !cfg.k) {
    throw UsageError(cfg.command + " needs --k");
  }
  if (cfg.command != "basis" && (cfg.prec || cfg.mmax)) {
    throw UsageError("--prec and --mmax apply to basis only");
  }
  if (cfg.command == "basis") {
    if (cfg.space != "M" && cfg.space != "S") {
      throw UsageError("--space must be M or S");
    }
    if (cfg.mmax && *cfg.mmax < 0) {
      throw UsageError("--mmax must be >= 0");
    }
    if (cfg.prec && *cfg.prec < kBasisDefaultPrec) {
      throw UsageError("--prec may only raise the default precision " + std::to_string(kBasisDefaultPrec));
    }
  }
  if (cfg.command == "duality" && cfg.box < 1) {
    throw UsageError("--box must be positive");
  }
  if (cfg.command == "genfun") {
    if (*cfg.p != 11 && *cfg.p != 17 && *cfg.p != 19) {
      throw UsageError("genfun needs p in {11, 17, 19}");
    }
    if (cfg.window.first < 0 || cfg.window.second < 0) {
      throw UsageError("--window spans must be >= 0");
    }
    if (cfg.variant != "f" && cfg.variant != "g" && cfg.variant != "both") {
      throw UsageError("--variant must be f, g or both");
    }
  }
  if (cfg.command == "trace" && cfg.count < 1) {
    throw UsageError("--count must be positive");
  }
  if (cfg.format == Format::Csv && cfg.command == "basis") {
    throw UsageError("csv output is available for tabular commands only");
  }
}

Json run(const RunConfig &cfg) {
  validate(cfg);
  Json doc;
  doc["command"] = cfg.command;
  doc["config"] = config_json(cfg);
  bool pass = false;
  try {
    if (cfg.command == "dims") {
      doc["results"] = cmd_dims(cfg, pass);
    } else if (cfg.command == "gaps") {
      doc["results"] = cmd_gaps(cfg, pass);
    } else if (cfg.command == "basis") {
      doc["results"] = cmd_basis(cfg, pass);
    } else if (cfg.command == "duality") {
      doc["results"] = cmd_duality(cfg, pass);
    } else if (cfg.command == "genfun") {
      doc["results"] = cmd_genfun(cfg, pass);
    } else {
      doc["results"] = cmd_trace(cfg, pass);
    }
  } catch (const std::exception &e) {
    doc["results"] = Json{{"error", e.what()}, {"rows", Json::array()}};
    pass = false;
  }
  doc["pass"] = pass;
  return doc;
}

std::string render(const Json &doc, Format format) {
  switch (format) {
  case Format::Csv:
    return render_csv(doc);
  case Format::Pretty:
    return render_pretty(doc);
  default:
    return doc.dump(2) + "\n";
  }
}

} // namespace weakforms::cli
