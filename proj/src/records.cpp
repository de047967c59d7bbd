#include "gwspec/records.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <tuple>

namespace gwspec {

using nlohmann::json;

namespace {

json wide_to_json(wide_int v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return to_string(v);
}

wide_int wide_from_json(const json& j) {
  if (j.is_string()) return parse_wide_int(j.get<std::string>());
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw invalid_parameter("expected an integer");
}

json graph_to_json(const WheelParams& p) { return json{{"a", p.a}, {"m", p.m}, {"n", p.n}}; }

WheelParams graph_from_json(const json& j) {
  return WheelParams::make(j.at("a").get<std::int64_t>(), j.at("m").get<std::int64_t>(), j.at("n").get<std::int64_t>());
}

std::string format_double(double v, int precision = 10) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string opt_wide(const std::optional<wide_int>& v) { return v ? to_string(*v) : std::string(); }

const char* kind_name(const ExactEigenvalue& e) {
  switch (e.kind_rank()) {
    case 0: return "integer";
    case 1: return "surd";
    default: return "cosine";
  }
}

// Left-aligned fixed-width table.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
      if (i + 1 != cells.size()) os << "  ";
    }
    os << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (const auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
  return os.str();
}

}  // namespace

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return "adj";
    case MatrixKind::distance: return "dist";
    case MatrixKind::dl: return "dl";
    case MatrixKind::dq: return "dq";
  }
  return "?";
}

MatrixKind parse_matrix_kind(const std::string& text) {
  if (text == "adj") return MatrixKind::adjacency;
  if (text == "dist") return MatrixKind::distance;
  if (text == "dl") return MatrixKind::dl;
  if (text == "dq") return MatrixKind::dq;
  throw invalid_parameter("unknown matrix kind: " + text);
}

SpectrumMode parse_spectrum_mode(const std::string& text) {
  if (text == "exact") return SpectrumMode::exact;
  if (text == "numeric") return SpectrumMode::numeric;
  if (text == "both") return SpectrumMode::both;
  throw invalid_parameter("unknown mode: " + text);
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "table") return OutputFormat::table;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw invalid_parameter("unknown format: " + text);
}

bool VerifyRecord::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void to_json(json& j, const ExactEigenvalue& e) {
  std::visit(
      [&j](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, IntegerValue>) {
          j = json{{"kind", "integer"}, {"value", wide_to_json(f.value)}};
        } else if constexpr (std::is_same_v<T, Surd>) {
          j = json{{"kind", "surd"}, {"u", wide_to_json(f.u)}, {"t", wide_to_json(f.t)}, {"sign", f.sign}};
        } else {
          j = json{{"kind", "cosine"}, {"c0", wide_to_json(f.c0)}, {"j", wide_to_json(f.j)}, {"n", wide_to_json(f.n)}};
        }
      },
      e.form());
}

std::pair<ExactEigenvalue, std::size_t> eigenvalue_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const auto mult = j.at("multiplicity").get<std::size_t>();
  if (kind == "integer") return {ExactEigenvalue::integer(wide_from_json(j.at("value"))), mult};
  if (kind == "surd") {
    return {ExactEigenvalue::surd(wide_from_json(j.at("u")), wide_from_json(j.at("t")), j.at("sign").get<int>()), mult};
  }
  if (kind == "cosine") {
    return {ExactEigenvalue::cosine(wide_from_json(j.at("c0")), wide_from_json(j.at("j")), wide_from_json(j.at("n"))),
            mult};
  }
  throw invalid_parameter("unknown eigenvalue kind: " + kind);
}

void to_json(json& j, const SpectrumRecord& r) {
  j = json{{"order", r.graph.order()}, {"graph", graph_to_json(r.graph)}, {"matrix", to_string(r.matrix)}};
  if (r.exact) {
    json list = json::array();
    for (const auto& e : r.exact->entries()) {
      json item = e.value;
      item["multiplicity"] = e.multiplicity;
      list.push_back(std::move(item));
    }
    j["eigenvalues"] = std::move(list);
  }
  if (r.numeric) j["numeric"] = *r.numeric;
  if (r.max_deviation) j["max_deviation"] = *r.max_deviation;
}

SpectrumRecord spectrum_record_from_json(const json& j) {
  SpectrumRecord r{graph_from_json(j.at("graph")), parse_matrix_kind(j.at("matrix").get<std::string>()),
                   std::nullopt, std::nullopt, std::nullopt};
  if (j.contains("eigenvalues")) {
    Spectrum s;
    for (const auto& item : j.at("eigenvalues")) {
      const auto [value, mult] = eigenvalue_from_json(item);
      s.add(value, mult);
    }
    r.exact = std::move(s);
  }
  if (j.contains("numeric")) r.numeric = j.at("numeric").get<std::vector<double>>();
  if (j.contains("max_deviation")) r.max_deviation = j.at("max_deviation").get<double>();
  return r;
}

void to_json(json& j, const ClassificationRecord& r) {
  const auto& res = r.result;
  j = json{{"which", r.which}, {"graph", graph_to_json(res.params)}};
  if (r.which != "dl") {
    j["dq"] = json{{"t", wide_to_json(res.dq.t)},
                   {"c", res.dq.c ? wide_to_json(*res.dq.c) : json(nullptr)},
                   {"n_ok", res.dq.n_ok},
                   {"integral", res.dq.verdict},
                   {"case", res.matched_case ? json(*res.matched_case) : json(nullptr)}};
  }
  if (r.which != "dq") j["dl"] = json{{"integral", res.dl_verdict}};
}

ClassificationRecord classification_record_from_json(const json& j) {
  ClassificationRecord r{j.at("which").get<std::string>(), classify(graph_from_json(j.at("graph")))};
  // Witness fields come from the document, not from recomputation.
  if (j.contains("dq")) {
    const auto& dq = j.at("dq");
    r.result.dq.t = wide_from_json(dq.at("t"));
    r.result.dq.c = dq.at("c").is_null() ? std::nullopt : std::optional<wide_int>(wide_from_json(dq.at("c")));
    r.result.dq.n_ok = dq.at("n_ok").get<bool>();
    r.result.dq.verdict = dq.at("integral").get<bool>();
    r.result.matched_case =
        dq.at("case").is_null() ? std::nullopt : std::optional<std::string>(dq.at("case").get<std::string>());
  }
  if (j.contains("dl")) r.result.dl_verdict = j.at("dl").at("integral").get<bool>();
  return r;
}

void to_json(json& j, const EnumerationRecord& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"a", row.a},
                        {"m", row.m ? json(*row.m) : json("*")},
                        {"n", row.n},
                        {"t", row.t ? wide_to_json(*row.t) : json(nullptr)},
                        {"c", row.c ? wide_to_json(*row.c) : json(nullptr)},
                        {"verdict", row.verdict},
                        {"case", row.label}});
  }
  j = json{{"which", r.which}, {"method", r.method}, {"a_max", r.a_max},
           {"m_max", r.m_max}, {"n_values", r.n_values}, {"rows", std::move(rows)}};
}

EnumerationRecord enumeration_record_from_json(const json& j) {
  EnumerationRecord r{j.at("which").get<std::string>(),
                      j.at("method").get<std::string>(),
                      j.at("a_max").get<std::int64_t>(),
                      j.at("m_max").get<std::int64_t>(),
                      j.at("n_values").get<std::vector<std::int64_t>>(),
                      {}};
  for (const auto& row : j.at("rows")) {
    EnumerationRow out{row.at("a").get<std::int64_t>(),
                       row.at("m").is_string() ? std::nullopt : std::optional<std::int64_t>(row.at("m").get<std::int64_t>()),
                       row.at("n").get<std::int64_t>(),
                       row.at("t").is_null() ? std::nullopt : std::optional<wide_int>(wide_from_json(row.at("t"))),
                       row.at("c").is_null() ? std::nullopt : std::optional<wide_int>(wide_from_json(row.at("c"))),
                       row.at("verdict").get<bool>(),
                       row.at("case").get<std::string>()};
    r.rows.push_back(std::move(out));
  }
  return r;
}

void to_json(json& j, const VerifyRecord& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j = json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

VerifyRecord verify_record_from_json(const json& j) {
  VerifyRecord r{j.at("suite").get<std::string>(), {}};
  for (const auto& c : j.at("checks")) {
    r.checks.push_back(
        CheckResult{c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
  }
  return r;
}

std::string render(const SpectrumRecord& r, OutputFormat format) {
  if (format == OutputFormat::json) return json(r).dump() + "\n";
  std::ostringstream os;
  if (format == OutputFormat::csv) {
    if (r.exact) {
      os << "kind,exact,numeric,multiplicity\n";
      for (const auto& e : r.exact->entries()) {
        os << kind_name(e.value) << ',' << csv_field(to_string(e.value)) << ',' << format_double(numeric_value(e.value), 15)
           << ',' << e.multiplicity << '\n';
      }
    } else if (r.numeric) {
      os << "index,numeric\n";
      for (std::size_t i = 0; i < r.numeric->size(); ++i) os << i << ',' << format_double((*r.numeric)[i], 15) << '\n';
    }
    return os.str();
  }
  os << "GW(" << r.graph.a << "," << r.graph.m << "," << r.graph.n << ")  order " << r.graph.order() << "  matrix "
     << to_string(r.matrix) << '\n';
  if (r.exact) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : r.exact->entries()) {
      rows.push_back({to_string(e.value), format_double(numeric_value(e.value), 12), std::to_string(e.multiplicity)});
    }
    os << table({"eigenvalue", "numeric", "mult"}, rows);
  } else if (r.numeric) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < r.numeric->size(); ++i) rows.push_back({std::to_string(i), format_double((*r.numeric)[i], 12)});
    os << table({"#", "numeric"}, rows);
  }
  if (r.max_deviation) os << "max |exact - numeric| = " << format_double(*r.max_deviation, 3) << '\n';
  return os.str();
}

std::string render(const ClassificationRecord& r, OutputFormat format) {
  if (format == OutputFormat::json) return json(r).dump() + "\n";
  const auto& res = r.result;
  const bool show_dq = r.which != "dl";
  const bool show_dl = r.which != "dq";
  std::ostringstream os;
  if (format == OutputFormat::csv) {
    os << "a,m,n";
    if (show_dq) os << ",t,c,dq_verdict,case";
    if (show_dl) os << ",dl_verdict";
    os << '\n' << res.params.a << ',' << res.params.m << ',' << res.params.n;
    if (show_dq) {
      os << ',' << to_string(res.dq.t) << ',' << opt_wide(res.dq.c) << ',' << (res.dq.verdict ? "true" : "false") << ','
         << csv_field(res.matched_case.value_or(""));
    }
    if (show_dl) os << ',' << (res.dl_verdict ? "true" : "false");
    os << '\n';
    return os.str();
  }
  os << "GW(" << res.params.a << "," << res.params.m << "," << res.params.n << ")\n";
  if (show_dq) {
    os << "  dq: " << (res.dq.verdict ? "integral" : "not integral") << "  t = " << to_string(res.dq.t);
    if (res.dq.c) os << " = " << to_string(*res.dq.c) << "^2  c = " << to_string(*res.dq.c);
    else os << " (not a square)";
    os << "  n in {3,4,6}: " << (res.dq.n_ok ? "yes" : "no");
    if (res.matched_case) os << "  case: " << *res.matched_case;
    os << '\n';
  }
  if (show_dl) os << "  dl: " << (res.dl_verdict ? "integral" : "not integral") << '\n';
  return os.str();
}

std::string render(const EnumerationRecord& r, OutputFormat format) {
  if (format == OutputFormat::json) return json(r).dump() + "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r.rows) {
    rows.push_back({std::to_string(row.a), row.m ? std::to_string(*row.m) : "*", std::to_string(row.n), opt_wide(row.t),
                    opt_wide(row.c), row.verdict ? "true" : "false", row.label});
  }
  if (format == OutputFormat::csv) {
    std::ostringstream os;
    os << "a,m,n,t,c,verdict,case\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << csv_field(row[i]) << (i + 1 == row.size() ? '\n' : ',');
    }
    return os.str();
  }
  return table({"a", "m", "n", "t", "c", "verdict", "case"}, rows) + std::to_string(r.rows.size()) + " rows\n";
}

std::string render(const VerifyRecord& r, OutputFormat format) {
  if (format == OutputFormat::json) return json(r).dump() + "\n";
  std::ostringstream os;
  if (format == OutputFormat::csv) {
    os << "suite,check,passed,detail\n";
    for (const auto& c : r.checks) {
      os << r.suite << ',' << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << ',' << csv_field(c.detail) << '\n';
    }
    return os.str();
  }
  for (const auto& c : r.checks) os << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  " << c.detail << '\n';
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.passed ? 0 : 1;
  os << "suite " << r.suite << ": " << (r.checks.size() - failed) << "/" << r.checks.size() << " passed\n";
  return os.str();
}

EnumerationRecord enumerate_integral(const std::string& which, const std::string& method, std::int64_t a_max,
                                     std::int64_t m_max, std::vector<std::int64_t> n_values) {
  if (which != "dq" && which != "dl") throw invalid_parameter("which must be dq or dl");
  if (method != "scan" && method != "alpha") throw invalid_parameter("method must be scan or alpha");
  if (a_max < 1 || m_max < 1) throw invalid_parameter("grid bounds must be >= 1");
  if (n_values.empty()) throw invalid_parameter("n-values must not be empty");
  std::sort(n_values.begin(), n_values.end());
  n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());
  if (n_values.front() < 3) throw invalid_parameter("n values must be >= 3");

  EnumerationRecord out{which, method, a_max, m_max, n_values, {}};
  auto has_n = [&](std::int64_t n) { return std::binary_search(n_values.begin(), n_values.end(), n); };
  auto dq_row = [](const WheelParams& p) {
    const auto res = classify(p);
    return EnumerationRow{p.a, p.m, p.n, res.dq.t, res.dq.c, res.dq.verdict, res.matched_case.value_or("")};
  };

  if (which == "dl") {
    if (method == "alpha") throw invalid_parameter("the alpha method only applies to dq");
    for (std::int64_t a = 1; a <= a_max; ++a) {
      for (std::int64_t m = 1; m <= m_max; ++m) {
        for (const auto n : n_values) {
          if (is_gw_dl_integral(WheelParams{a, m, n})) {
            out.rows.push_back(EnumerationRow{a, m, n, std::nullopt, std::nullopt, true, "n=" + std::to_string(n)});
          }
        }
      }
    }
    return out;
  }

  const bool family = has_n(3);
  if (family) out.rows.push_back(EnumerationRow{1, std::nullopt, 3, std::nullopt, std::nullopt, true, case_label({1, 1, 3})});

  if (method == "scan") {
    const auto scan = classify_all_dq(a_max, m_max, n_values);
    for (const auto& res : scan.sporadic) out.rows.push_back(dq_row(res.params));
  } else {
    if (a_max < 2) throw invalid_parameter("the alpha method needs a-max >= 2");
    std::vector<WheelParams> found;
    for (const auto n : n_values) {
      if (n < 4 || !is_rim_integral(n)) continue;
      for (const auto m : gw1_square_m_values(n)) {
        if (m <= m_max) found.push_back({1, m, n});
      }
    }
    for (std::int64_t a = 2; a <= a_max; ++a) {
      for (const auto n : n_values) {
        if (!is_rim_integral(n)) continue;
        for (const auto m : alpha_m_values(a, n)) {
          if (m <= m_max) found.push_back({a, m, n});
        }
      }
    }
    std::sort(found.begin(), found.end());
    for (const auto& p : found) out.rows.push_back(dq_row(p));
  }
  return out;
}

}  // namespace gwspec
