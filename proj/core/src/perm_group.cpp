#include "unitlat/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "unitlat/error.hpp"

namespace unitlat {

Perm perm_identity(int n) {
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "permutation degrees differ");
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[static_cast<size_t>(a[i])] = static_cast<int>(i);
  return r;
}

bool perm_is_valid(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  for (int x : a) {
    if (x < 0 || static_cast<size_t>(x) >= a.size() || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = 1;
  }
  return true;
}

Perm parse_cycles(std::string_view text, int degree) {
  require(degree > 0, ErrorCode::InvalidArgument, "permutation degree must be positive");
  Perm p = perm_identity(degree);
  size_t i = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::InvalidArgument, "bad cycle string '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  std::vector<char> used(static_cast<size_t>(degree), 0);
  skip_ws();
  if (i == text.size()) bad("empty");
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') bad("expected '('");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      continue;
    }
    while (true) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) bad("expected a point");
      long v = std::stol(std::string(text.substr(start, i - start)));
      if (v < 1 || v > degree) bad("point " + std::to_string(v) + " out of range");
      int pt = static_cast<int>(v - 1);
      if (used[static_cast<size_t>(pt)]) bad("point " + std::to_string(v) + " repeated");
      used[static_cast<size_t>(pt)] = 1;
      cyc.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      bad("expected ',' or ')'");
    }
    for (size_t k = 0; k < cyc.size(); ++k) p[static_cast<size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

size_t PermHash::operator()(const Perm& p) const noexcept {
  uint64_t h = 1469598103934665603ull;
  for (int x : p) {
    h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

PermGroup PermGroup::generate(int degree, const std::vector<Perm>& generators, size_t order_budget) {
  require(degree > 0, ErrorCode::InvalidArgument, "group degree must be positive");
  PermGroup g;
  g.degree_ = degree;
  for (const auto& s : generators) {
    require(s.size() == static_cast<size_t>(degree) && perm_is_valid(s), ErrorCode::InvalidArgument,
            "generator is not a permutation of degree " + std::to_string(degree));
    g.generators_.push_back(s);
  }
  std::unordered_map<Perm, size_t, PermHash> seen;
  std::vector<Perm> elems{perm_identity(degree)};
  seen.emplace(elems[0], 0);
  for (size_t k = 0; k < elems.size(); ++k) {
    for (const auto& s : g.generators_) {
      Perm q = perm_mul(s, elems[k]);
      if (seen.count(q)) continue;
      if (elems.size() >= order_budget)
        fail(ErrorCode::OrderBudgetExceeded, "group order exceeds " + std::to_string(order_budget));
      seen.emplace(q, elems.size());
      elems.push_back(std::move(q));
    }
  }
  std::sort(elems.begin(), elems.end());
  g.elements_ = std::move(elems);
  for (size_t i = 0; i < g.elements_.size(); ++i) g.index_.emplace(g.elements_[i], i);
  size_t n = g.elements_.size();
  g.inv_.resize(n);
  for (size_t i = 0; i < n; ++i) g.inv_[i] = g.index_.at(perm_inverse(g.elements_[i]));
  if (n <= kTableLimit) {
    g.table_.resize(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) g.table_[i * n + j] = g.index_.at(perm_mul(g.elements_[i], g.elements_[j]));
  }
  g.build_classes();
  return g;
}

PermGroup PermGroup::from_cycles(int degree, const std::vector<std::string>& generators, size_t order_budget) {
  std::vector<Perm> gens;
  for (const auto& s : generators) gens.push_back(parse_cycles(s, degree));
  return generate(degree, gens, order_budget);
}

size_t PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? npos : it->second;
}

size_t PermGroup::mul(size_t i, size_t j) const {
  if (!table_.empty()) return table_[i * order() + j];
  return index_.at(perm_mul(elements_[i], elements_[j]));
}

std::vector<size_t> PermGroup::generator_indices() const {
  std::vector<size_t> out;
  for (const auto& s : generators_) out.push_back(index_of(s));
  return out;
}

void PermGroup::build_classes() {
  size_t n = order();
  class_of_.assign(n, npos);
  std::vector<size_t> gens = generator_indices();
  std::vector<std::vector<size_t>> raw;
  for (size_t i = 0; i < n; ++i) {
    if (class_of_[i] != npos) continue;
    std::vector<size_t> cls{i};
    class_of_[i] = raw.size();
    for (size_t k = 0; k < cls.size(); ++k)
      for (size_t s : gens) {
        size_t c = mul(mul(s, cls[k]), inv_[s]);
        if (class_of_[c] == npos) {
          class_of_[c] = raw.size();
          cls.push_back(c);
        }
      }
    std::sort(cls.begin(), cls.end());
    raw.push_back(std::move(cls));
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  classes_ = std::move(raw);
  for (size_t c = 0; c < classes_.size(); ++c)
    for (size_t e : classes_[c]) class_of_[e] = c;
}

size_t PermGroup::element_order(size_t i) const {
  size_t k = 1, x = i;
  while (x != 0) {
    x = mul(x, i);
    ++k;
  }
  return k;
}

size_t PermGroup::exponent() const {
  size_t e = 1;
  for (const auto& c : classes_) e = std::lcm(e, element_order(c.front()));
  return e;
}

namespace {

Subgroup closure(const PermGroup& g, const std::vector<size_t>& gens, std::string name) {
  std::vector<char> in(g.order(), 0);
  std::vector<size_t> elems{0};
  in[0] = 1;
  for (size_t k = 0; k < elems.size(); ++k)
    for (size_t s : gens) {
      size_t x = g.mul(s, elems[k]);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(name), std::move(elems)};
}

}  // namespace

Subgroup make_subgroup(const PermGroup& g, const std::vector<Perm>& generators, std::string name) {
  std::vector<size_t> gens;
  for (const auto& p : generators) {
    size_t i = g.index_of(p);
    require(i != PermGroup::npos, ErrorCode::InvalidArgument,
            "subgroup generator " + format_cycles(p) + " is not in the group");
    gens.push_back(i);
  }
  return closure(g, gens, std::move(name));
}

Subgroup make_subgroup(const PermGroup& g, const std::vector<std::string>& cycle_generators, std::string name) {
  std::vector<Perm> gens;
  for (const auto& s : cycle_generators) gens.push_back(parse_cycles(s, g.degree()));
  return make_subgroup(g, gens, std::move(name));
}

Subgroup trivial_subgroup(const PermGroup&) { return Subgroup{"1", {0}}; }

Subgroup whole_group(const PermGroup& g) {
  Subgroup h{"G", std::vector<size_t>(g.order())};
  std::iota(h.elements.begin(), h.elements.end(), 0);
  return h;
}

Subgroup conjugate(const PermGroup& g, const Subgroup& h, size_t x) {
  Subgroup out{h.name, {}};
  for (size_t e : h.elements) out.elements.push_back(g.mul(g.mul(x, e), g.inv(x)));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

bool is_normal(const PermGroup& g, const Subgroup& h) {
  for (size_t s : g.generator_indices())
    if (conjugate(g, h, s).elements != h.elements) return false;
  return true;
}

bool are_conjugate(const PermGroup& g, const Subgroup& h1, const Subgroup& h2) {
  if (h1.order() != h2.order()) return false;
  for (size_t x = 0; x < g.order(); ++x)
    if (conjugate(g, h1, x).elements == h2.elements) return true;
  return false;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  Subgroup out{a.name + "∩" + b.name, {}};
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  return out;
}

Subgroup join(const PermGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<size_t> gens = a.elements;
  gens.insert(gens.end(), b.elements.begin(), b.elements.end());
  return closure(g, gens, "<" + a.name + "," + b.name + ">");
}

std::vector<size_t> class_intersections(const PermGroup& g, const Subgroup& h) {
  std::vector<size_t> counts(g.classes().size(), 0);
  for (size_t e : h.elements) ++counts[g.class_of(e)];
  return counts;
}

bool gassmann_equivalent(const PermGroup& g, const Subgroup& h1, const Subgroup& h2) {
  if (h1.order() != h2.order())
    fail(ErrorCode::IndexMismatch, "subgroup indices differ: " + std::to_string(g.order() / h1.order()) + " vs " +
                                       std::to_string(g.order() / h2.order()));
  return class_intersections(g, h1) == class_intersections(g, h2);
}

}  // namespace unitlat
