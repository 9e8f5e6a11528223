#include "nuforge/catalog.hpp"

#include <algorithm>
#include <functional>

namespace nuforge {

namespace {

using u32 = std::uint32_t;

FiniteGroupInput from_mul(std::string label, u32 n,
                          const std::function<u32(u32, u32)>& mul) {
  std::vector<u32> flat(static_cast<std::size_t>(n) * n);
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b) flat[a * n + b] = mul(a, b);
  return FiniteGroupInput::from_table(std::move(label), n, std::move(flat));
}

FiniteGroupInput from_perm_list(std::string label,
                                std::vector<Permutation> elems) {
  std::sort(elems.begin(), elems.end());  // identity is lexicographically first
  u32 n = static_cast<u32>(elems.size());
  auto index_of = [&](const Permutation& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    internal_check(it != elems.end() && *it == p, "element set not closed");
    return static_cast<u32>(it - elems.begin());
  };
  return from_mul(std::move(label), n, [&](u32 a, u32 b) {
    return index_of(elems[a] * elems[b]);
  });
}

}  // namespace

FiniteGroupInput make_cyclic(u32 n) {
  if (n < 1) throw InputError("cyclic order must be positive");
  return from_mul(n == 1 ? "trivial" : "C" + std::to_string(n), n,
                  [n](u32 a, u32 b) { return (a + b) % n; });
}

FiniteGroupInput make_dihedral(u32 order) {
  if (order < 4 || order % 2 != 0)
    throw InputError("dihedral order must be even and at least 4");
  u32 m = order / 2;
  // element r^i s^j at index i + m*j
  return from_mul("D" + std::to_string(order), order, [m](u32 x, u32 y) {
    u32 i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
    u32 i = (i1 + (j1 ? m - i2 : i2)) % m;
    return i + m * (j1 ^ j2);
  });
}

FiniteGroupInput make_quaternion8() {
  // indices: 1, -1, i, -i, j, -j, k, -k
  auto unit = [](u32 e) { return e / 2; };  // 0:1, 1:i, 2:j, 3:k
  auto sign = [](u32 e) { return e % 2; };
  auto enc = [](u32 u, u32 s) { return 2 * u + s; };
  return from_mul("Q8", 8, [&](u32 a, u32 b) {
    static const u32 unit_mul[4][4] = {{0, 1, 2, 3},
                                       {1, 0, 3, 2},
                                       {2, 3, 0, 1},
                                       {3, 2, 1, 0}};
    // extra sign from the unit product: i*i = j*j = k*k = -1,
    // i*j = k, j*k = i, k*i = j and the reversed products are negative
    static const u32 sign_mul[4][4] = {{0, 0, 0, 0},
                                       {0, 1, 0, 1},
                                       {0, 1, 1, 0},
                                       {0, 0, 1, 1}};
    u32 u = unit_mul[unit(a)][unit(b)];
    u32 s = (sign(a) + sign(b) + sign_mul[unit(a)][unit(b)]) % 2;
    return enc(u, s);
  });
}

FiniteGroupInput make_symmetric3() {
  std::vector<Permutation> elems;
  std::vector<u32> img{0, 1, 2};
  do {
    elems.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return from_perm_list("S3", std::move(elems));
}

FiniteGroupInput make_alternating4() {
  std::vector<Permutation> elems;
  std::vector<u32> img{0, 1, 2, 3};
  do {
    Permutation p(img);
    // parity by counting inversions
    int inv = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (img[i] > img[j]) ++inv;
    if (inv % 2 == 0) elems.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return from_perm_list("A4", std::move(elems));
}

FiniteGroupInput direct_product(const FiniteGroupInput& a,
                                const FiniteGroupInput& b, std::string label) {
  u32 n = a.n * b.n;
  return from_mul(std::move(label), n, [&](u32 x, u32 y) {
    u32 xa = x / b.n, xb = x % b.n, ya = y / b.n, yb = y % b.n;
    return a.mul(xa, ya) * b.n + b.mul(xb, yb);
  });
}

namespace {

bool parse_uint(const std::string& s, u32& out) {
  if (s.empty() || s.size() > 6) return false;
  u32 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<u32>(c - '0');
  }
  out = v;
  return true;
}

}  // namespace

FiniteGroupInput make_catalog_group(const std::string& name) {
  if (name == "trivial") return make_cyclic(1);
  if (name == "S3") return make_symmetric3();
  if (name == "Q8") return make_quaternion8();
  if (name == "A4") return make_alternating4();
  if (name == "C2xC2")
    return direct_product(make_cyclic(2), make_cyclic(2), "C2xC2");
  if (name == "C2xC4")
    return direct_product(make_cyclic(2), make_cyclic(4), "C2xC4");
  u32 v = 0;
  if (name.size() >= 2 && name[0] == 'C' && parse_uint(name.substr(1), v) &&
      v >= 1)
    return make_cyclic(v);
  if (name.size() >= 2 && name[0] == 'D' && parse_uint(name.substr(1), v) &&
      v >= 4 && v % 2 == 0)
    return make_dihedral(v);
  throw UnknownGroup(name);
}

bool catalog_has(const std::string& name) {
  try {
    make_catalog_group(name);
    return true;
  } catch (const UnknownGroup&) {
    return false;
  } catch (const InputError&) {
    return false;
  }
}

const std::vector<std::string>& default_corpus() {
  static const std::vector<std::string> corpus = {
      "trivial", "C2",    "C3",  "C4",  "C2xC2", "C6",  "S3",
      "D8",      "Q8",    "C2xC4", "D10", "D12",   "A4"};
  return corpus;
}

}  // namespace nuforge
