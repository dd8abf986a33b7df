#include "cosetchar/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace cosetchar {

using nlohmann::ordered_json;

std::string format_double(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

namespace {

std::string format_complex(ComplexApprox z) {
  const std::string re = format_double(z.real());
  const std::string im = format_double(z.imag());
  if (im == "0") return re;
  return "(" + re + ", " + im + ")";
}

double rounded(double x) { return std::stod(format_double(x)); }

ordered_json rational_json(const Rational& r) {
  return ordered_json::array({r.get_num().get_str(), r.get_den().get_str()});
}

ordered_json cyclotomic_json(const Cyclotomic& v) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(rational_json(c));
  const ComplexApprox z = v.to_complex();
  return {{"order", v.order()},
          {"coeffs", coeffs},
          {"text", v.to_string()},
          {"complex", {rounded(z.real()), rounded(z.imag())}}};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

// Right-aligned grid with a header row.
std::string grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) {
    w[j] = header[j].size();
    for (const auto& r : rows) w[j] = std::max(w[j], r[j].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "  " : "  ") << pad(r[j], w[j]);
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

ordered_json classes_json(const GroupContext& g, const AbelianQuotient* q, const CosetAnalysis* a) {
  ordered_json out = ordered_json::array();
  for (ClassIndex k = 0; k < g.class_count(); ++k) {
    const ElementIndex rep = g.classes.representatives[k];
    ordered_json c = {{"index", k},
                      {"representative", g.group.elements()[rep].to_cycle_string()},
                      {"element_order", g.group.element_order(rep)},
                      {"size", g.classes.sizes[k]}};
    if (q && a) c["coset"] = a->coset_label(q->coset_of[rep]);
    out.push_back(std::move(c));
  }
  return out;
}

ordered_json table_json(const CharacterTable& t) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    ordered_json vals = ordered_json::array();
    for (const auto& v : t[i].values()) vals.push_back(cyclotomic_json(v));
    rows.push_back({{"index", i}, {"degree", t.degrees()[i]}, {"values", vals}});
  }
  return rows;
}

std::string table_text(const CharacterTable& t) {
  const auto& g = *t.group();
  std::vector<std::string> header{"", "size"};
  std::vector<std::vector<std::string>> rows;
  for (ClassIndex k = 0; k < g.class_count(); ++k) header.push_back("c" + std::to_string(k));
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> r{"X" + std::to_string(i), ""};
    for (const auto& v : t[i].values()) r.push_back(v.to_string());
    rows.push_back(std::move(r));
  }
  std::vector<std::string> sizes{"#[g]", ""};
  for (std::size_t s : g.classes.sizes) sizes.push_back(std::to_string(s));
  rows.insert(rows.begin(), sizes);
  for (auto& r : rows) r.erase(r.begin() + 1);
  header.erase(header.begin() + 1);
  return grid(header, rows);
}

std::string class_list_text(const GroupContext& g, const CosetAnalysis* a) {
  std::ostringstream os;
  for (ClassIndex k = 0; k < g.class_count(); ++k) {
    const ElementIndex rep = g.classes.representatives[k];
    os << "  c" << k << "  order " << g.group.element_order(rep) << "  size " << g.classes.sizes[k];
    if (a) os << "  coset " << a->coset_label(a->quotient().coset_of[rep]);
    os << "  rep " << g.group.elements()[rep].to_cycle_string() << '\n';
  }
  return os.str();
}

ordered_json coset_report_json(const CosetAnalysis& a, const CosetReport& r) {
  ordered_json m = ordered_json::array();
  const auto numeric = r.numeric();
  for (std::size_t i = 0; i < r.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < r.size(); ++j) {
      row.push_back({{"radicand", rational_json(r.radicands[i][j])},
                     {"value", cyclotomic_json(r.values[i][j])},
                     {"complex", {rounded(numeric[i][j].real()), rounded(numeric[i][j].imag())}}});
    }
    m.push_back(std::move(row));
  }
  ordered_json orbit_reps = ordered_json::array();
  for (std::size_t o : r.orbits) orbit_reps.push_back(a.orbits()[o].representative);
  return {{"coset", r.label},
          {"classes", r.classes},
          {"orbits", r.orbits},
          {"orbit_representatives", orbit_reps},
          {"size", r.size()},
          {"matrix", m},
          {"gram_exact", r.gram_exact},
          {"unitarity_error", r.unitarity_error}};
}

std::string coset_report_text(const CosetAnalysis& a, const CosetReport& r) {
  std::ostringstream os;
  std::vector<std::string> cls, orb;
  for (ClassIndex k : r.classes) cls.push_back("c" + std::to_string(k));
  for (std::size_t o : r.orbits) orb.push_back("X" + std::to_string(a.orbits()[o].representative));
  os << "coset " << r.label << ": #C = " << r.classes.size() << ", #R = " << r.orbits.size() << '\n';
  os << "  classes " << join(cls, " ") << '\n';
  os << "  orbits  " << join(orb, " ") << '\n';
  os << "  M (exact, sqrt(radicand)*value):\n";
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::vector<std::string> cells;
    for (std::size_t j = 0; j < r.size(); ++j) {
      cells.push_back(r.values[i][j].is_zero()
                          ? "0"
                          : "sqrt(" + r.radicands[i][j].get_str() + ")*(" + r.values[i][j].to_string() + ")");
    }
    os << "    [" << join(cells, ", ") << "]\n";
  }
  os << "  M (numeric):\n";
  for (const auto& row : r.numeric()) {
    std::vector<std::string> cells;
    for (const auto& z : row) cells.push_back(format_complex(z));
    os << "    [" << join(cells, ", ") << "]\n";
  }
  os << "  gram identity exact: " << (r.gram_exact ? "yes" : "no")
     << ", max |MM* - I| = " << format_double(r.unitarity_error) << '\n';
  return os.str();
}

std::string multiset_text(const RootMultiset& m) {
  std::vector<std::string> parts;
  for (std::size_t e : m.exponents) parts.push_back(root_of_unity(m.n, static_cast<std::int64_t>(e)).to_string());
  return "{" + join(parts, ", ") + "}";
}

ordered_json multiset_json(const RootMultiset& m) {
  return {{"n", m.n}, {"exponents", m.exponents}};
}

}  // namespace

std::string render_table(const CharacterTable& table, const std::string& label, Format format) {
  const auto& g = *table.group();
  if (format == Format::kJson) {
    ordered_json doc = {{"label", label},
                        {"group_order", g.order()},
                        {"prime", table.prime()},
                        {"classes", classes_json(g, nullptr, nullptr)},
                        {"characters", table_json(table)}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "group " << label << ", order " << g.order() << ", " << g.class_count() << " classes\n";
  os << class_list_text(g, nullptr) << '\n' << table_text(table);
  return os.str();
}

std::string render_analysis(const CosetAnalysis& a, const std::string& label, std::optional<CosetIndex> only,
                            Format format) {
  const auto& g = *a.group();
  const auto& q = a.quotient();
  std::vector<CosetIndex> cosets;
  for (CosetIndex c = 0; c < a.coset_count(); ++c)
    if (!only || *only == c) cosets.push_back(c);

  std::vector<CosetReport> reports;
  for (CosetIndex c : cosets) reports.push_back(a.build_matrix(c));

  std::optional<ExtendabilityCounts> counts;
  std::optional<CosetIndex> count_coset;
  if (q.is_cyclic()) {
    const CosetIndex gen = only && q.coset_order(*only) == q.order() ? *only : a.generator_coset();
    counts = a.extendability_counts(gen);
    count_coset = gen;
  }
  std::optional<ExtensionVerdict> verdict;
  if (q.is_cyclic()) verdict = a.nontrivial_extension_exists();

  std::vector<std::string> factors;
  for (const auto& [c, n] : q.cyclic_factors) factors.push_back(std::to_string(n));

  if (format == Format::kJson) {
    ordered_json doc;
    doc["label"] = label;
    doc["group_order"] = g.order();
    doc["subgroup_order"] = a.subgroup().in_parent.order();
    doc["quotient"] = {{"order", q.order()}, {"cyclic", q.is_cyclic()}, {"invariants", ordered_json::array()}};
    for (const auto& [c, n] : q.cyclic_factors)
      doc["quotient"]["invariants"].push_back({{"generator", a.coset_label(c)}, {"order", n}});
    doc["classes"] = classes_json(g, &q, &a);
    doc["characters"] = table_json(a.table());
    ordered_json orbits = ordered_json::array();
    for (const auto& o : a.orbits()) {
      orbits.push_back({{"representative", o.representative},
                        {"members", o.members},
                        {"length", o.length()},
                        {"stabilizer_order", o.stabilizer.size()},
                        {"restriction_norm", rational_json(o.restriction_norm)}});
    }
    doc["orbits"] = orbits;
    ordered_json reps = ordered_json::array();
    for (const auto& r : reports) reps.push_back(coset_report_json(a, r));
    doc["cosets"] = reps;
    if (counts) {
      doc["extendability"] = {{"generator", a.coset_label(*count_coset)},
                              {"classes_in_coset", counts->classes_in_coset},
                              {"nonvanishing_orbits", counts->nonvanishing_orbits},
                              {"full_length_orbits", counts->full_length_orbits},
                              {"irreducible_restrictions_per_index", counts->irreducible_restrictions_per_index},
                              {"extendable_characters", counts->extendable_characters},
                              {"all_equal", counts->all_equal()}};
    }
    if (verdict) {
      ordered_json v = {{"nontrivial_extension_exists", verdict->exists}};
      if (verdict->extending_character) v["extending_subgroup_character"] = *verdict->extending_character;
      if (verdict->class_of_size_n) v["class_of_size_n"] = *verdict->class_of_size_n;
      doc["extension"] = v;
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "group " << label << ": #G = " << g.order() << ", #N = " << a.subgroup().in_parent.order()
     << ", G/N of order " << q.order() << (q.is_cyclic() ? " (cyclic)" : "")
     << (factors.empty() ? "" : ", invariants " + join(factors, " x ")) << "\n\n";
  os << "classes:\n" << class_list_text(g, &a) << '\n';
  os << "character table:\n" << table_text(a.table()) << '\n';
  os << "orbits of the dual group on Irr(G):\n";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < a.orbits().size(); ++i) {
    const auto& o = a.orbits()[i];
    std::vector<std::string> mem;
    for (std::size_t m : o.members) mem.push_back("X" + std::to_string(m));
    rows.push_back({std::to_string(i), "X" + std::to_string(o.representative), join(mem, " "),
                    std::to_string(o.stabilizer.size()), o.restriction_norm.get_str()});
  }
  os << grid({"orbit", "rep", "members", "#Stab", "<Res,Res>"}, rows) << '\n';
  for (const auto& r : reports) os << coset_report_text(a, r) << '\n';
  if (counts) {
    os << "extendability counts for generator " << a.coset_label(*count_coset) << ":\n"
       << "  classes in coset                 " << counts->classes_in_coset << '\n'
       << "  nonvanishing orbits              " << counts->nonvanishing_orbits << '\n'
       << "  orbits of full length            " << counts->full_length_orbits << '\n'
       << "  irreducible restrictions / #Q    " << counts->irreducible_restrictions_per_index << '\n'
       << "  extendable characters of N       " << counts->extendable_characters << '\n';
  }
  if (verdict) {
    os << "nontrivial character of N extends to G: " << (verdict->exists ? "yes" : "no");
    if (verdict->extending_character) os << " (Irr(N) row " << *verdict->extending_character << ")";
    if (verdict->class_of_size_n) os << " (class c" << *verdict->class_of_size_n << " has size #N)";
    os << '\n';
  }
  return os.str();
}

std::string render_inversion(const CosetAnalysis& a, const Theta& theta, const std::vector<PsiComponent>& comps,
                             const std::string& label, Format format) {
  if (format == Format::kJson) {
    ordered_json cs = ordered_json::array();
    for (const auto& c : comps) {
      ordered_json pv = ordered_json::array();
      for (const auto& v : c.power_values) pv.push_back(cyclotomic_json(v));
      ordered_json psi = ordered_json::array();
      for (const auto& v : c.psi.values()) psi.push_back(cyclotomic_json(v));
      cs.push_back({{"orbit", c.orbit},
                    {"representative", c.representative},
                    {"m", c.m},
                    {"bound", c.bound},
                    {"power_values", pv},
                    {"eigenvalues", multiset_json(c.lambdas)},
                    {"psi_at_generator", multiset_json(c.psi_at_q)},
                    {"dimension", c.dimension()},
                    {"psi", psi},
                    {"choice_independent", c.choice_independent}});
    }
    ordered_json theta_vals = ordered_json::array();
    for (const auto& v : theta.values.values()) theta_vals.push_back(cyclotomic_json(v));
    ordered_json doc = {{"label", label},
                        {"generator", a.coset_label(a.generator_coset())},
                        {"theta", {{"degree", theta.degree()},
                                   {"multiplicities", theta.multiplicities},
                                   {"values", theta_vals}}},
                        {"components", cs},
                        {"reconstruction_exact", true}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  std::vector<std::string> mult;
  for (auto m : theta.multiplicities) mult.push_back(std::to_string(m));
  os << "group " << label << ", generator " << a.coset_label(a.generator_coset()) << '\n';
  os << "Theta: degree " << theta.degree() << ", multiplicities (" << join(mult, ", ") << ")\n\n";
  for (const auto& c : comps) {
    std::vector<std::string> psi;
    for (const auto& v : c.psi.values()) psi.push_back(v.to_string());
    os << "component rho = X" << c.representative << " (orbit " << c.orbit << "), m = " << c.m
       << ", dim Psi = " << c.dimension() << '\n';
    os << "  eigenvalues of Psi(q^m): " << multiset_text(c.lambdas) << '\n';
    os << "  Psi(q):                  " << multiset_text(c.psi_at_q) << '\n';
    os << "  Psi on classes:          [" << join(psi, ", ") << "]\n";
    if (c.m > 1) os << "  root choice independent: " << (c.choice_independent ? "yes" : "no") << '\n';
  }
  os << "\nreconstruction sum equals Theta exactly: yes\n";
  return os.str();
}

std::string render_selftest(const SelftestSummary& s, Format format) {
  if (format == Format::kJson) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : s.checks) {
      ordered_json j = {{"subject", c.subject}, {"check", c.check}, {"passed", c.passed}};
      if (!c.detail.empty()) j["detail"] = c.detail;
      checks.push_back(std::move(j));
    }
    ordered_json doc = {{"checks", checks},
                        {"total", s.checks.size()},
                        {"failures", s.failures()},
                        {"seconds", rounded(s.seconds)}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& c : s.checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.subject << ": " << c.check;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
  os << '\n' << s.checks.size() - s.failures() << "/" << s.checks.size() << " checks passed in "
     << std::fixed << std::setprecision(2) << s.seconds << " s\n";
  return os.str();
}

}  // namespace cosetchar
