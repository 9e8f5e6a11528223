#include "nuforge/cayley.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "nuforge/todd_coxeter.hpp"

namespace nuforge {

using u32 = FiniteGroupInput::u32;
using u64 = FiniteGroupInput::u64;

u32 FiniteGroupInput::pow(u32 a, u64 k) const {
  u32 r = 0;
  for (u64 i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

FiniteGroupInput FiniteGroupInput::from_table(std::string label, u32 n,
                                              std::vector<u32> flat) {
  if (n < 1) throw InvalidCayleyTable("order must be at least 1");
  if (flat.size() != static_cast<std::size_t>(n) * n)
    throw InvalidCayleyTable("table size is not order^2");
  for (u32 v : flat)
    if (v >= n) throw InvalidCayleyTable("entry out of range");
  FiniteGroupInput g;
  g.label = std::move(label);
  g.n = n;
  g.table = std::move(flat);
  for (u32 a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      throw InvalidCayleyTable("index 0 is not a two-sided identity");
  }
  std::vector<bool> seen(n);
  for (u32 a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (u32 b = 0; b < n; ++b) {
      u32 v = g.mul(a, b);
      if (seen[v]) throw InvalidCayleyTable("row is not a permutation");
      seen[v] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (u32 b = 0; b < n; ++b) {
      u32 v = g.mul(b, a);
      if (seen[v]) throw InvalidCayleyTable("column is not a permutation");
      seen[v] = true;
    }
  }
  g.inverse.assign(n, 0);
  for (u32 a = 0; a < n; ++a) {
    bool found = false;
    for (u32 b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0) {
        if (g.mul(b, a) != 0)
          throw InvalidCayleyTable("one-sided inverse at element " +
                                   std::to_string(a));
        g.inverse[a] = b;
        found = true;
        break;
      }
    }
    if (!found)
      throw InvalidCayleyTable("no inverse for element " + std::to_string(a));
  }
  auto assoc = [&](u32 a, u32 b, u32 c) {
    return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
  };
  if (n <= 64) {
    for (u32 a = 0; a < n; ++a)
      for (u32 b = 0; b < n; ++b)
        for (u32 c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            throw InvalidCayleyTable("associativity fails at (" +
                                     std::to_string(a) + "," +
                                     std::to_string(b) + "," +
                                     std::to_string(c) + ")");
  } else {
    std::mt19937_64 rng(0);  // fixed seed: validation is deterministic
    std::uniform_int_distribution<u32> pick(0, n - 1);
    for (int i = 0; i < 100000; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw InvalidCayleyTable("associativity fails on sampled triple");
  }
  return g;
}

u64 FiniteGroupInput::element_order(u32 a) const {
  u64 ord = 1;
  for (u32 x = a; x != 0; x = mul(x, a)) ++ord;
  return ord;
}

bool FiniteGroupInput::is_abelian() const {
  for (u32 a = 0; a < n; ++a)
    for (u32 b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<u32> FiniteGroupInput::subgroup_closure(
    std::vector<u32> seed) const {
  std::vector<bool> in(n, false);
  std::vector<u32> all{0};
  in[0] = true;
  for (u32 s : seed)
    if (!in[s]) {
      in[s] = true;
      all.push_back(s);
    }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      u32 v = mul(all[i], all[j]);
      if (!in[v]) {
        in[v] = true;
        all.push_back(v);
      }
    }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<u32> FiniteGroupInput::derived_subgroup() const {
  std::vector<u32> seeds;
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b) seeds.push_back(comm(a, b));
  return subgroup_closure(std::move(seeds));
}

std::vector<u32> FiniteGroupInput::center_elements() const {
  std::vector<u32> z;
  for (u32 a = 0; a < n; ++a) {
    bool central = true;
    for (u32 b = 0; b < n && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<std::vector<u32>> FiniteGroupInput::conjugacy_classes() const {
  std::vector<bool> seen(n, false);
  std::vector<std::vector<u32>> classes;
  for (u32 a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<u32> cls;
    for (u32 b = 0; b < n; ++b) {
      u32 c = conj(a, b);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

u64 FiniteGroupInput::max_conjugacy_class_size() const {
  u64 best = 1;
  for (const auto& cls : conjugacy_classes())
    best = std::max<u64>(best, cls.size());
  return best;
}

bool FiniteGroupInput::is_subgroup(const std::vector<u32>& elems) const {
  std::vector<bool> in(n, false);
  for (u32 e : elems) {
    if (e >= n) return false;
    in[e] = true;
  }
  if (!in[0]) return false;
  for (u32 a : elems)
    for (u32 b : elems)
      if (!in[mul(a, b)]) return false;
  return true;
}

bool FiniteGroupInput::is_normal_subgroup(const std::vector<u32>& elems) const {
  if (!is_subgroup(elems)) return false;
  std::vector<bool> in(n, false);
  for (u32 e : elems) in[e] = true;
  for (u32 a : elems)
    for (u32 b = 0; b < n; ++b)
      if (!in[conj(a, b)]) return false;
  return true;
}

std::vector<std::vector<u32>> FiniteGroupInput::normal_subgroups() const {
  // a normal subgroup is a union of conjugacy classes containing the
  // identity class and closed under multiplication
  auto classes = conjugacy_classes();
  std::size_t k = classes.size();
  if (k > 20)
    throw InputError("normal-subgroup enumeration needs at most 20 "
                     "conjugacy classes; " +
                     label + " has " + std::to_string(k));
  std::size_t identity_class = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (classes[i].front() == 0) identity_class = i;
  std::vector<std::vector<u32>> result;
  for (u64 mask = 0; mask < (1ull << k); ++mask) {
    if (!(mask >> identity_class & 1)) continue;
    u64 size = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) size += classes[i].size();
    if (n % size != 0) continue;
    std::vector<u32> elems;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1)
        elems.insert(elems.end(), classes[i].begin(), classes[i].end());
    std::sort(elems.begin(), elems.end());
    if (is_subgroup(elems)) result.push_back(std::move(elems));
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return result;
}

FiniteGroupInput::Quotient FiniteGroupInput::quotient(
    const std::vector<u32>& normal_elems) const {
  if (!is_normal_subgroup(normal_elems)) throw NotNormal();
  constexpr u32 kNone = 0xffffffffu;
  std::vector<u32> coset_min(n, kNone);  // element -> min element of coset
  for (u32 a = 0; a < n; ++a) {
    if (coset_min[a] != kNone) continue;
    u32 least = a;  // ascending scan: a is the least of its coset
    for (u32 s : normal_elems) coset_min[mul(s, a)] = least;
  }
  // cosets indexed by ascending least element; identity coset first
  std::vector<u32> reps;
  for (u32 a = 0; a < n; ++a)
    if (coset_min[a] == a) reps.push_back(a);
  std::vector<u32> index_of(n, 0);
  for (u32 i = 0; i < reps.size(); ++i) index_of[reps[i]] = i;
  std::vector<u32> proj(n);
  for (u32 a = 0; a < n; ++a) proj[a] = index_of[coset_min[a]];
  u32 q = static_cast<u32>(reps.size());
  std::vector<u32> qtab(static_cast<std::size_t>(q) * q);
  for (u32 i = 0; i < q; ++i)
    for (u32 j = 0; j < q; ++j)
      qtab[i * q + j] = proj[mul(reps[i], reps[j])];
  Quotient out{
      from_table(label + "/N" + std::to_string(normal_elems.size()), q,
                 std::move(qtab)),
      std::move(proj)};
  return out;
}

PermGroup FiniteGroupInput::regular_perm_group() const {
  std::vector<Permutation> gens;
  for (u32 e = 1; e < n; ++e) {
    std::vector<u32> img(n);
    for (u32 a = 0; a < n; ++a) img[a] = mul(a, e);
    gens.push_back(Permutation(std::move(img)));
  }
  auto ambient = RegularAmbient::build(gens, n);
  return PermGroup(n, std::move(gens), ambient);
}

// --- file loaders -----------------------------------------------------------

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

FiniteGroupInput load_cayley_file(const std::string& path, std::string label) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open Cayley file: " + path);
  std::string line;
  u32 n = 0;
  bool have_order = false;
  std::vector<u32> flat;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    if (!have_order) {
      if (t.rfind("order:", 0) != 0)
        throw InputError("Cayley file must start with 'order: n'");
      n = static_cast<u32>(std::stoul(strip(t.substr(6))));
      have_order = true;
      continue;
    }
    std::istringstream row(t);
    u64 v;
    while (row >> v) {
      if (v >= n) throw InvalidCayleyTable("entry out of range");
      flat.push_back(static_cast<u32>(v));
    }
    if (!row.eof())
      throw InputError("line " + std::to_string(lineno) +
                       ": malformed table row");
  }
  if (!have_order) throw InputError("Cayley file has no order header");
  return FiniteGroupInput::from_table(std::move(label), n, std::move(flat));
}

std::vector<Permutation> load_perms_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open permutation file: " + path);
  std::string line;
  std::uint32_t degree = 0;
  std::vector<std::string> cycle_lines;
  while (std::getline(in, line)) {
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("degree:", 0) == 0) {
      degree = static_cast<std::uint32_t>(std::stoul(strip(t.substr(7))));
      continue;
    }
    cycle_lines.push_back(t);
  }
  std::vector<Permutation> perms;
  for (const auto& c : cycle_lines) perms.push_back(parse_cycles(c, degree));
  // normalize to a common degree (max point + 1 across the file)
  std::uint32_t d = degree;
  for (const auto& p : perms) d = std::max(d, p.degree());
  d = std::max<std::uint32_t>(d, 1);
  for (auto& p : perms) {
    if (p.degree() < d) {
      std::vector<std::uint32_t> img(p.images());
      for (std::uint32_t i = p.degree(); i < d; ++i) img.push_back(i);
      p = Permutation(std::move(img));
    }
  }
  return perms;
}

FiniteGroupInput group_from_perms(std::string label,
                                  const std::vector<Permutation>& gens,
                                  std::uint64_t bound) {
  std::uint32_t degree = gens.empty() ? 1 : gens.front().degree();
  PermGroup g(degree, gens);
  std::vector<Permutation> elems = g.elements(bound);
  u32 n = static_cast<u32>(elems.size());
  auto index_of = [&](const Permutation& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    internal_check(it != elems.end() && *it == p, "closure index lookup");
    return static_cast<u32>(it - elems.begin());
  };
  std::vector<u32> flat(static_cast<std::size_t>(n) * n);
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b)
      flat[a * n + b] = index_of(elems[a] * elems[b]);
  return FiniteGroupInput::from_table(std::move(label), n, std::move(flat));
}

FiniteGroupInput group_from_presentation(std::string label,
                                         const Presentation& p,
                                         std::uint64_t cap,
                                         std::uint64_t order_bound) {
  CosetTable t = todd_coxeter(p, {}, cap);
  internal_check(t.verify_traces(p, {}), "coset table fails relator traces");
  if (t.live_count() > order_bound)
    throw GroupTooLarge(t.live_count(), order_bound);
  u32 n = static_cast<u32>(t.live_count());
  // regular action: coset a * element_of_coset(b); walk b's spanning-tree
  // word from a
  std::vector<std::int64_t> parent(n, -1);
  std::vector<GeneratorSymbol> via(n);
  std::vector<u32> order;
  order.push_back(0);
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    u32 c = order[qi];
    for (u32 g = 0; g < t.generator_count(); ++g) {
      for (int sign : {+1, -1}) {
        u32 d = t.apply(c, {static_cast<int>(g), sign});
        if (d != 0 && parent[d] < 0) {
          parent[d] = c;
          via[d] = {static_cast<int>(g), sign};
          order.push_back(d);
        }
      }
    }
  }
  internal_check(order.size() == n, "coset table action not transitive");
  // column b holds right multiplication by the element of coset b; filling
  // in BFS order lets each column derive from its parent in O(1) per entry
  std::vector<u32> flat(static_cast<std::size_t>(n) * n);
  for (u32 a = 0; a < n; ++a) flat[a * n + 0] = a;
  for (std::size_t qi = 1; qi < order.size(); ++qi) {
    u32 b = order[qi];
    u32 par = static_cast<u32>(parent[b]);
    for (u32 a = 0; a < n; ++a)
      flat[a * n + b] = t.apply(flat[a * n + par], via[b]);
  }
  return FiniteGroupInput::from_table(std::move(label), n, std::move(flat));
}

}  // namespace nuforge
