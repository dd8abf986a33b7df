#include "cosetchar/group_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "cosetchar/errors.hpp"
#include "json.hpp"

namespace cosetchar {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::int64_t parse_int(const std::string& tok, std::size_t line, const std::string& field) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    fail(line, field + ": expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size()) fail(line, field + ": expected an integer, got '" + tok + "'");
  return v;
}

// "(0 1 2)(3 4)" -> cycles
Permutation parse_cycles(const std::string& text, std::size_t degree, std::size_t line) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail(line, "cycle notation: expected '('");
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) fail(line, "cycle notation: missing ')'");
    std::istringstream in(text.substr(i + 1, close - i - 1));
    std::vector<Point> cyc;
    std::string tok;
    while (in >> tok) {
      const auto v = parse_int(tok, line, "cycle point");
      if (v < 0 || static_cast<std::size_t>(v) >= degree) fail(line, "cycle point " + tok + " out of range");
      cyc.push_back(static_cast<Point>(v));
    }
    cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

Permutation parse_images(const std::vector<std::string>& toks, std::size_t degree, std::size_t line) {
  if (toks.size() != degree) {
    fail(line, "expected " + std::to_string(degree) + " images, got " + std::to_string(toks.size()));
  }
  std::vector<Point> im;
  for (const auto& t : toks) {
    const auto v = parse_int(t, line, "image");
    if (v < 0) fail(line, "negative image " + t);
    im.push_back(static_cast<Point>(v));
  }
  try {
    return Permutation(std::move(im));
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

std::int64_t det_mod(const Matrix2& m, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  return (((m[0] * m[3] - m[1] * m[2]) % sp) + sp) % sp;
}

Matrix2 normalize_matrix(Matrix2 m, std::uint64_t p, std::size_t line) {
  const auto sp = static_cast<std::int64_t>(p);
  for (auto& x : m) x = ((x % sp) + sp) % sp;
  if (det_mod(m, p) == 0) fail(line, "singular matrix mod " + std::to_string(p));
  return m;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

AnyGroupSpec parse_json_group(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
  try {
    const std::string label = j.value("label", std::string());
    if (j.contains("prime")) {
      MatrixGroupSpec spec;
      spec.label = label;
      spec.prime = j.at("prime").get<std::uint64_t>();
      if (!is_prime(spec.prime)) throw ParseError("JSON field 'prime': " + std::to_string(spec.prime) + " is not prime");
      auto read = [&](const char* key, std::vector<Matrix2>& out) {
        if (!j.contains(key)) return;
        std::size_t idx = 0;
        for (const auto& mj : j.at(key)) {
          const auto rows = mj.get<std::vector<std::vector<std::int64_t>>>();
          if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
            throw ParseError(std::string("JSON field '") + key + "': matrix " + std::to_string(idx) + " is not 2x2");
          out.push_back(normalize_matrix({rows[0][0], rows[0][1], rows[1][0], rows[1][1]}, spec.prime, idx + 1));
          ++idx;
        }
      };
      read("generators", spec.generators);
      read("normal", spec.normal_generators);
      return spec;
    }
    GroupSpec spec;
    spec.label = label;
    spec.degree = j.at("degree").get<std::size_t>();
    auto read = [&](const char* key, std::vector<Permutation>& out) {
      if (!j.contains(key)) return;
      for (const auto& pj : j.at(key)) {
        auto im = pj.get<std::vector<Point>>();
        if (im.size() != spec.degree)
          throw ParseError(std::string("JSON field '") + key + "': permutation has wrong length");
        out.emplace_back(std::move(im));
      }
    };
    read("generators", spec.generators);
    read("normal", spec.normal_generators);
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

}  // namespace

AnyGroupSpec parse_group_text(std::string_view text) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json_group(body);

  std::string label;
  std::optional<std::size_t> degree;
  std::optional<std::uint64_t> prime;
  struct Pending {
    std::size_t line;
    bool normal;
    std::string rest;
  };
  std::vector<Pending> pending;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto sp = line.find_first_of(" \t");
    const std::string key = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (key == "label") {
      label = rest;
    } else if (key == "degree") {
      if (degree) fail(line_no, "duplicate 'degree'");
      const auto v = parse_int(rest, line_no, "degree");
      if (v < 1) fail(line_no, "degree must be positive");
      degree = static_cast<std::size_t>(v);
    } else if (key == "prime") {
      if (prime) fail(line_no, "duplicate 'prime'");
      const auto v = parse_int(rest, line_no, "prime");
      if (v < 2 || !is_prime(static_cast<std::uint64_t>(v))) fail(line_no, rest + " is not prime");
      prime = static_cast<std::uint64_t>(v);
    } else if (key == "gen" || key == "normal") {
      pending.push_back({line_no, key == "normal", rest});
    } else {
      fail(line_no, "unknown keyword '" + key + "'");
    }
  }

  if (degree && prime) throw ParseError("a group file cannot declare both 'degree' and 'prime'");
  if (!degree && !prime) throw ParseError("missing 'degree' (permutation group) or 'prime' (matrix group)");

  if (prime) {
    MatrixGroupSpec spec;
    spec.label = label;
    spec.prime = *prime;
    for (const auto& p : pending) {
      std::istringstream toks(p.rest);
      std::vector<std::string> v;
      std::string t;
      while (toks >> t) v.push_back(t);
      if (v.size() != 4) fail(p.line, "expected 4 matrix entries a b c d, got " + std::to_string(v.size()));
      Matrix2 m{};
      for (int i = 0; i < 4; ++i) m[i] = parse_int(v[i], p.line, "matrix entry");
      (p.normal ? spec.normal_generators : spec.generators).push_back(normalize_matrix(m, spec.prime, p.line));
    }
    return spec;
  }

  GroupSpec spec;
  spec.label = label;
  spec.degree = *degree;
  for (const auto& p : pending) {
    Permutation perm;
    if (!p.rest.empty() && p.rest.front() == '(') {
      perm = parse_cycles(p.rest, spec.degree, p.line);
    } else {
      std::istringstream toks(p.rest);
      std::vector<std::string> v;
      std::string t;
      while (toks >> t) v.push_back(t);
      perm = parse_images(v, spec.degree, p.line);
    }
    (p.normal ? spec.normal_generators : spec.generators).push_back(std::move(perm));
  }
  return spec;
}

AnyGroupSpec parse_group_file(const std::filesystem::path& path) {
  try {
    return parse_group_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_group_spec(const AnyGroupSpec& any) {
  std::ostringstream out;
  if (const auto* spec = std::get_if<GroupSpec>(&any)) {
    if (!spec->label.empty()) out << "label " << spec->label << '\n';
    out << "degree " << spec->degree << '\n';
    auto emit = [&](const char* key, const std::vector<Permutation>& perms) {
      for (const auto& p : perms) {
        out << key;
        for (Point x : p.images()) out << ' ' << x;
        out << '\n';
      }
    };
    emit("gen", spec->generators);
    emit("normal", spec->normal_generators);
  } else {
    const auto& m = std::get<MatrixGroupSpec>(any);
    if (!m.label.empty()) out << "label " << m.label << '\n';
    out << "prime " << m.prime << '\n';
    auto emit = [&](const char* key, const std::vector<Matrix2>& mats) {
      for (const auto& a : mats) out << key << ' ' << a[0] << ' ' << a[1] << ' ' << a[2] << ' ' << a[3] << '\n';
    };
    emit("gen", m.generators);
    emit("normal", m.normal_generators);
  }
  return out.str();
}

Permutation matrix_permutation(const Matrix2& m, std::uint64_t p) {
  // Vector (x, y) != 0 has index x*p + y - 1.
  const std::size_t degree = p * p - 1;
  std::vector<Point> im(degree);
  for (std::uint64_t x = 0; x < p; ++x) {
    for (std::uint64_t y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      const auto sx = static_cast<std::int64_t>(x), sy = static_cast<std::int64_t>(y);
      const auto sp = static_cast<std::int64_t>(p);
      const auto nx = static_cast<std::uint64_t>((((m[0] * sx + m[1] * sy) % sp) + sp) % sp);
      const auto ny = static_cast<std::uint64_t>((((m[2] * sx + m[3] * sy) % sp) + sp) % sp);
      im[x * p + y - 1] = static_cast<Point>(nx * p + ny - 1);
    }
  }
  return Permutation(std::move(im));
}

GroupSpec matrix_to_permutation(const MatrixGroupSpec& spec) {
  GroupSpec out;
  out.label = spec.label;
  out.degree = spec.prime * spec.prime - 1;
  for (const auto& m : spec.generators) out.generators.push_back(matrix_permutation(m, spec.prime));
  for (const auto& m : spec.normal_generators) out.normal_generators.push_back(matrix_permutation(m, spec.prime));
  return out;
}

GroupSpec to_permutation_spec(const AnyGroupSpec& spec) {
  if (const auto* g = std::get_if<GroupSpec>(&spec)) return *g;
  return matrix_to_permutation(std::get<MatrixGroupSpec>(spec));
}

Problem build_problem(const GroupSpec& spec, std::size_t order_limit) {
  FiniteGroup g = generate_group(spec.degree, spec.generators, order_limit);
  std::vector<ElementIndex> ngens;
  for (const auto& p : spec.normal_generators) {
    const auto idx = g.find(p);
    if (!idx) throw HypothesisError("hypothesis violated: N generator " + p.to_cycle_string() + " is not in G");
    ngens.push_back(*idx);
  }
  Subgroup n = subgroup_generated(g, ngens);
  return Problem{spec.label, GroupContext::make(std::move(g)), std::move(n)};
}

Cyclotomic parse_cyclotomic(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty value");

  auto parse_rational = [&](const std::string& t) {
    Rational r;
    if (t.empty() || r.set_str(t, 10) != 0) throw ParseError("bad number '" + t + "' in value '" + s + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in value '" + s + "'");
    r.canonicalize();
    return r;
  };

  Cyclotomic total;
  std::size_t i = 0;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' in value '" + s + "'");
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    const std::string term = s.substr(i, j - i);
    if (term.empty()) throw ParseError("dangling sign in value '" + s + "'");
    i = j;

    Rational coef(1);
    std::string root = term;
    const auto z = term.find('z');
    if (z == std::string::npos) {
      Cyclotomic v(parse_rational(term));
      total += neg ? -v : v;
      continue;
    }
    if (z > 0) {
      std::string c = term.substr(0, z);
      if (c.back() == '*') c.pop_back();
      coef = parse_rational(c);
    }
    root = term.substr(z + 1);
    std::size_t k = 1;
    const auto caret = root.find('^');
    std::string order_str = root.substr(0, caret);
    if (caret != std::string::npos) {
      const std::string ks = root.substr(caret + 1);
      if (ks.empty() || !std::all_of(ks.begin(), ks.end(), ::isdigit)) throw ParseError("bad exponent in '" + term + "'");
      k = std::stoul(ks);
    }
    if (order_str.empty() || !std::all_of(order_str.begin(), order_str.end(), ::isdigit))
      throw ParseError("bad root order in '" + term + "'");
    const std::size_t n = std::stoul(order_str);
    if (n == 0) throw ParseError("root order must be positive in '" + term + "'");
    Cyclotomic v = root_of_unity(n, static_cast<std::int64_t>(k)) * coef;
    total += neg ? -v : v;
  }
  return total;
}

ThetaSpec parse_theta_text(std::string_view text) {
  const std::string body = trim(text);
  ThetaSpec spec;
  if (!body.empty() && body.front() == '{') {
    try {
      const json j = json::parse(body);
      if (j.contains("multiplicities")) {
        spec.kind = ThetaSpec::Kind::kMultiplicities;
        spec.multiplicities = j.at("multiplicities").get<std::vector<std::int64_t>>();
      } else if (j.contains("values")) {
        spec.kind = ThetaSpec::Kind::kValues;
        for (const auto& v : j.at("values")) {
          spec.values.push_back(v.is_string() ? parse_cyclotomic(v.get<std::string>())
                                              : Cyclotomic(static_cast<long>(v.get<std::int64_t>())));
        }
      } else {
        throw ParseError("JSON theta needs 'multiplicities' or 'values'");
      }
    } catch (const json::exception& e) {
      throw ParseError(std::string("JSON: ") + e.what());
    }
    return spec;
  }

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (seen) fail(line_no, "only one 'values' or 'multiplicities' line is allowed");
    seen = true;
    const auto sp = line.find_first_of(" \t");
    const std::string key = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (key == "multiplicities") {
      spec.kind = ThetaSpec::Kind::kMultiplicities;
      std::istringstream toks(rest);
      std::string t;
      while (toks >> t) spec.multiplicities.push_back(parse_int(t, line_no, "multiplicity"));
    } else if (key == "values") {
      spec.kind = ThetaSpec::Kind::kValues;
      std::istringstream parts(rest);
      std::string part;
      while (std::getline(parts, part, ',')) {
        try {
          spec.values.push_back(parse_cyclotomic(part));
        } catch (const ParseError& e) {
          fail(line_no, e.what());
        }
      }
    } else {
      fail(line_no, "unknown keyword '" + key + "'");
    }
  }
  if (!seen) throw ParseError("theta file has no 'values' or 'multiplicities' line");
  return spec;
}

ThetaSpec parse_theta_file(const std::filesystem::path& path) {
  try {
    return parse_theta_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace cosetchar
