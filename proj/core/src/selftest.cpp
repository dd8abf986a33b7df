#include "cosetchar/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "cosetchar/corpus.hpp"
#include "cosetchar/errors.hpp"
#include "cosetchar/group_io.hpp"
#include "cosetchar/inversion.hpp"

namespace cosetchar {

std::size_t SelftestSummary::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

class Recorder {
 public:
  Recorder(std::string subject, std::vector<CheckResult>& out) : subject_(std::move(subject)), out_(out) {}

  void run(const std::string& name, const std::function<bool()>& body) {
    CheckResult r{subject_, name, false, {}};
    try {
      r.passed = body();
      if (!r.passed) r.detail = "check returned false";
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string subject_;
  std::vector<CheckResult>& out_;
};

}  // namespace

std::vector<CheckResult> run_property_checks(const std::string& subject, const CosetAnalysis& a,
                                             std::size_t inversion_samples, unsigned seed) {
  std::vector<CheckResult> results;
  Recorder rec(subject, results);
  const auto& g = *a.group();
  const auto& q = a.quotient();
  const std::size_t n_order = a.subgroup().in_parent.order();

  rec.run("class sizes", [&] {
    std::size_t total = 0;
    for (std::size_t s : g.classes.sizes) {
      if (g.order() % s != 0) return false;
      total += s;
    }
    return total == g.order();
  });
  rec.run("coset sizes", [&] {
    return std::all_of(q.coset_members.begin(), q.coset_members.end(),
                       [&](const auto& m) { return m.size() == n_order; });
  });
  rec.run("character degrees", [&] {
    std::size_t sum = 0;
    for (std::size_t d : a.table().degrees()) {
      if (g.order() % d != 0) return false;
      sum += d * d;
    }
    return sum == g.order();
  });
  rec.run("stabilizer = restriction norm", [&] {
    for (const auto& o : a.orbits()) {
      const Cyclotomic norm = inner_product(a.restriction(o.representative), a.restriction(o.representative));
      if (!(norm == Cyclotomic(static_cast<long>(o.stabilizer.size())))) return false;
      if (o.length() * o.stabilizer.size() != q.order()) return false;
    }
    return true;
  });

  std::size_t class_total = 0;
  for (CosetIndex c = 0; c < a.coset_count(); ++c) {
    const std::string tag = " [" + a.coset_label(c) + "]";
    rec.run("#C_q = #R_q and exact Gram identity" + tag, [&] {
      const auto rep = a.build_matrix(c);
      class_total += rep.size();
      return rep.gram_exact && rep.classes.size() == rep.orbits.size() && rep.unitarity_error < 1e-9;
    });
    rec.run("pi_q is the coset indicator" + tag, [&] {
      const auto f = a.pi(c);
      for (ClassIndex k = 0; k < g.class_count(); ++k) {
        const bool inside = q.coset_of[g.classes.representatives[k]] == c;
        if (!(f[k] == Cyclotomic(inside ? 1L : 0L))) return false;
      }
      return true;
    });
    rec.run("kernel criterion matches nonvanishing" + tag, [&] {
      const auto r = a.orbits_nonzero_on_coset(c);
      for (std::size_t o = 0; o < a.orbits().size(); ++o) {
        if (a.in_stabilizer_kernel(o, c) != std::binary_search(r.begin(), r.end(), o)) return false;
      }
      return true;
    });
    rec.run("monotonicity under powers" + tag, [&] {
      for (std::size_t k = 1; k <= q.order(); ++k)
        if (!a.monotonicity_holds(c, k)) return false;
      return true;
    });
  }
  rec.run("class and orbit totals", [&] {
    std::size_t lengths = 0;
    for (const auto& o : a.orbits()) lengths += o.length();
    return class_total == g.class_count() && lengths == a.table().size();
  });

  if (q.is_cyclic()) {
    for (CosetIndex c = 0; c < a.coset_count(); ++c) {
      if (q.coset_order(c) != q.order()) continue;
      const std::string tag = " [" + a.coset_label(c) + "]";
      rec.run("three-way equivalence for cyclic quotient" + tag, [&] { return a.cyclic_equivalence_holds(c); });
      rec.run("five extendability counts agree" + tag, [&] { return a.extendability_counts(c).all_equal(); });
    }
    rec.run("extension iff no class of size #N", [&] {
      const auto v = a.nontrivial_extension_exists();
      return v.exists != v.class_of_size_n.has_value();
    });
  }

  rec.run("orthonormal basis of class functions", [&] {
    const auto family = a.basis_family();
    if (family.size() != g.class_count()) return false;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i; j < family.size(); ++j) {
        const Cyclotomic ip = inner_product(family[i].function, family[j].function);
        const long len = static_cast<long>(a.orbits()[family[i].orbit].length());
        if (!(ip == (i == j ? Cyclotomic(ratio(1, len)) : Cyclotomic()))) return false;
      }
    }
    return true;
  });

  if (q.is_cyclic() && inversion_samples > 0) {
    rec.run("inversion round trip (" + std::to_string(inversion_samples) + " random characters)", [&] {
      std::mt19937 rng(seed);
      std::uniform_int_distribution<int> dist(0, 3);
      for (std::size_t s = 0; s < inversion_samples; ++s) {
        std::vector<std::int64_t> mult(a.table().size());
        for (auto& m : mult) m = dist(rng);
        if (std::all_of(mult.begin(), mult.end(), [](auto m) { return m == 0; })) mult[0] = 1;
        const Theta theta = Theta::from_multiplicities(a.table(), mult);
        const auto comps = decompose(a, theta);
        ClassFunction sum = ClassFunction::constant(a.group(), Cyclotomic());
        for (const auto& c : comps) sum += c.product;
        if (!(sum == theta.values)) return false;
      }
      return true;
    });
  }
  return results;
}

SelftestSummary run_selftest(std::size_t inversion_samples) {
  const auto start = std::chrono::steady_clock::now();
  SelftestSummary summary;
  for (const auto& entry : corpus::property_corpus()) {
    try {
      const Problem p = build_problem(entry.spec);
      const CosetAnalysis a = CosetAnalysis::make(p.group, p.normal);
      auto r = run_property_checks(entry.name, a, inversion_samples);
      summary.checks.insert(summary.checks.end(), r.begin(), r.end());
    } catch (const std::exception& e) {
      summary.checks.push_back({entry.name, "analysis construction", false, e.what()});
    }
  }
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace cosetchar
