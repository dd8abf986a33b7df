#include "cosetchar/permutation_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cosetchar/errors.hpp"

namespace cosetchar {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw ParseError("invalid permutation: images are not a bijection of {0.." +
                       std::to_string(images_.size()) + "-1}");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] >= degree) throw ParseError("cycle point out of range");
      im[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      if (j != i) out << ' ';
      out << j;
      seen[j] = true;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()) + ")");
  }
  std::vector<Point> im(p.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = p(q(static_cast<Point>(i)));
  return Permutation(std::move(im));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array.
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<ElementIndex> FiniteGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex FiniteGroup::index_of(const Permutation& p) const {
  auto idx = find(p);
  if (!idx) throw HypothesisError("permutation " + p.to_cycle_string() + " is not an element of the group");
  return *idx;
}

ElementIndex FiniteGroup::multiply(ElementIndex a, ElementIndex b) const {
  return index_.at(compose(elements_[a], elements_[b]));
}

ElementIndex FiniteGroup::power(ElementIndex a, std::size_t k) const {
  k %= orders_[a];
  ElementIndex r = 0;
  for (std::size_t i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (ElementIndex a : generators_)
    for (ElementIndex b : generators_)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

FiniteGroup generate_group(std::size_t degree, std::span<const Permutation> generators,
                           std::size_t order_limit) {
  if (order_limit < 1) throw std::invalid_argument("order limit must be at least 1");
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw ParseError("generator " + g.to_cycle_string() + " has degree " +
                       std::to_string(g.degree()) + ", expected " + std::to_string(degree));
    }
  }

  FiniteGroup group;
  group.degree_ = degree;
  auto add = [&](Permutation p) -> ElementIndex {
    auto [it, inserted] = group.index_.emplace(p, group.elements_.size());
    if (inserted) {
      group.elements_.push_back(std::move(p));
      if (group.elements_.size() > order_limit) {
        throw HypothesisError("group order exceeds the order limit of " +
                              std::to_string(order_limit));
      }
    }
    return it->second;
  };

  add(Permutation::identity(degree));
  for (std::size_t head = 0; head < group.elements_.size(); ++head) {
    for (const auto& g : generators) add(compose(g, group.elements_[head]));
  }
  for (const auto& g : generators) group.generators_.push_back(group.index_.at(g));

  const std::size_t n = group.elements_.size();
  group.inverses_.resize(n);
  group.orders_.resize(n);
  for (ElementIndex i = 0; i < n; ++i) {
    group.inverses_[i] = group.index_.at(group.elements_[i].inverse());
    group.orders_[i] = group.elements_[i].order();
    group.exponent_ = std::lcm(group.exponent_, group.orders_[i]);
  }
  return group;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, kUnassigned);
  std::vector<std::vector<ElementIndex>> orbits;

  for (ElementIndex start = 0; start < n; ++start) {
    if (raw[start] != kUnassigned) continue;
    const std::size_t id = orbits.size();
    std::vector<ElementIndex> orbit{start};
    raw[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const ElementIndex x = orbit[head];
      for (ElementIndex s : g.generators()) {
        const ElementIndex y = g.multiply(g.multiply(s, x), g.inverse(s));
        if (raw[y] == kUnassigned) {
          raw[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<std::size_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto key = [&](std::size_t k) {
    return std::make_tuple(g.element_order(orbits[k].front()), orbits[k].size(), orbits[k].front());
  };
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  ConjugacyClasses cc;
  cc.class_of.resize(n);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    auto& orbit = orbits[perm[k]];
    for (ElementIndex e : orbit) cc.class_of[e] = k;
    cc.representatives.push_back(orbit.front());
    cc.sizes.push_back(orbit.size());
    cc.members.push_back(std::move(orbit));
  }
  return cc;
}

bool Subgroup::contains(ElementIndex e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const ElementIndex> elems) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementIndex> list{0};
  in[0] = true;
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (ElementIndex s : elems) {
      const ElementIndex y = g.multiply(s, list[head]);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return Subgroup{std::move(list), std::vector<ElementIndex>(elems.begin(), elems.end())};
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (ElementIndex s : g.generators()) {
    const ElementIndex s_inv = g.inverse(s);
    for (ElementIndex x : h.members) {
      if (!h.contains(g.multiply(g.multiply(s, x), s_inv))) return false;
    }
  }
  return true;
}

std::size_t AbelianQuotient::coset_order(CosetIndex c) const {
  std::size_t k = 1;
  for (CosetIndex x = c; x != 0; x = mult[x][c]) ++k;
  return k;
}

CosetIndex AbelianQuotient::inverse(CosetIndex c) const {
  for (CosetIndex d = 0; d < order(); ++d)
    if (mult[c][d] == 0) return d;
  throw InternalError("coset without inverse");
}

CosetIndex AbelianQuotient::from_exponents(std::span<const std::size_t> e) const {
  CosetIndex c = 0;
  for (std::size_t i = 0; i < cyclic_factors.size(); ++i) {
    const std::size_t k = i < e.size() ? e[i] % cyclic_factors[i].second : 0;
    for (std::size_t j = 0; j < k; ++j) c = mult[c][cyclic_factors[i].first];
  }
  return c;
}

namespace {

// Greedy cyclic decomposition. Each step picks the smallest coset y whose
// image in Q/H has maximal order and whose order in Q equals that image
// order; then <y> meets H trivially and H + <y> is again a direct summand.
void decompose_cyclic(AbelianQuotient& q) {
  const std::size_t n = q.order();
  std::vector<bool> in_h(n, false);
  in_h[0] = true;
  std::size_t h_size = 1;

  auto order_mod_h = [&](CosetIndex x) {
    std::size_t k = 1;
    for (CosetIndex y = x; !in_h[y]; y = q.mult[y][x]) ++k;
    return k;
  };

  while (h_size < n) {
    std::size_t best_order = 0;
    for (CosetIndex x = 0; x < n; ++x) best_order = std::max(best_order, order_mod_h(x));
    CosetIndex lift = n;
    for (CosetIndex y = 0; y < n && lift == n; ++y) {
      if (order_mod_h(y) == best_order && q.coset_order(y) == best_order) lift = y;
    }
    ensure(lift != n, "cyclic decomposition: no lift of maximal order");
    q.cyclic_factors.emplace_back(lift, best_order);

    std::vector<CosetIndex> old_h;
    for (CosetIndex x = 0; x < n; ++x)
      if (in_h[x]) old_h.push_back(x);
    CosetIndex power = 0;
    for (std::size_t k = 1; k < best_order; ++k) {
      power = q.mult[power][lift];
      for (CosetIndex x : old_h) in_h[q.mult[x][power]] = true;
    }
    h_size *= best_order;
  }

  q.exponents.assign(n, std::vector<std::size_t>(q.cyclic_factors.size(), 0));
  std::vector<bool> hit(n, false);
  std::vector<std::size_t> e(q.cyclic_factors.size(), 0);
  for (std::size_t count = 0; count < n; ++count) {
    const CosetIndex c = q.from_exponents(e);
    ensure(!hit[c], "cyclic decomposition is not a direct product");
    hit[c] = true;
    q.exponents[c] = e;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (++e[i] < q.cyclic_factors[i].second) break;
      e[i] = 0;
    }
  }
}

}  // namespace

AbelianQuotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) {
    throw HypothesisError("hypothesis violated: N is not a normal subgroup of G");
  }
  AbelianQuotient q;
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  q.coset_of.assign(g.order(), kUnassigned);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] != kUnassigned) continue;
    const CosetIndex c = q.coset_reps.size();
    q.coset_reps.push_back(x);
    std::vector<ElementIndex> members;
    for (ElementIndex m : n.members) {
      const ElementIndex y = g.multiply(x, m);
      q.coset_of[y] = c;
      members.push_back(y);
    }
    std::sort(members.begin(), members.end());
    q.coset_members.push_back(std::move(members));
  }

  const std::size_t k = q.coset_reps.size();
  q.mult.assign(k, std::vector<CosetIndex>(k));
  for (CosetIndex a = 0; a < k; ++a)
    for (CosetIndex b = 0; b < k; ++b)
      q.mult[a][b] = q.coset_of[g.multiply(q.coset_reps[a], q.coset_reps[b])];
  for (CosetIndex a = 0; a < k; ++a)
    for (CosetIndex b = a + 1; b < k; ++b)
      if (q.mult[a][b] != q.mult[b][a])
        throw HypothesisError("hypothesis violated: the quotient G/N is not abelian");

  decompose_cyclic(q);
  return q;
}

CosetIndex power_coset(const AbelianQuotient& q, CosetIndex c, std::size_t k) {
  CosetIndex r = 0;
  k %= q.coset_order(c);
  for (std::size_t i = 0; i < k; ++i) r = q.mult[r][c];
  return r;
}

}  // namespace cosetchar
