#include "nuforge/todd_coxeter.hpp"

#include <algorithm>
#include <set>

namespace nuforge {

// internal assembly hook for the enumerator
CosetTable make_completed_table(std::uint32_t ngens, std::uint64_t live,
                                std::vector<std::int32_t> tab) {
  CosetTable out;
  out.ngens_ = ngens;
  out.live_ = live;
  out.tab_ = std::move(tab);
  out.complete_ = true;
  return out;
}

namespace {

using u32 = std::uint32_t;
using i32 = std::int32_t;
using u64 = std::uint64_t;

constexpr i32 kUndef = -1;

// Column encoding: generator id g occupies columns 2g (g) and 2g+1 (g^-1).
u32 column_of(const GeneratorSymbol& s) {
  return 2u * static_cast<u32>(s.id) + (s.sign < 0 ? 1u : 0u);
}

std::vector<u32> encode_word(const Word& w) {
  Word r = free_reduce(w);
  std::vector<u32> cols;
  cols.reserve(r.size());
  for (const auto& s : r) cols.push_back(column_of(s));
  // cyclic reduction: conjugate relators scan identically
  while (cols.size() >= 2 && cols.front() == (cols.back() ^ 1u)) {
    cols.erase(cols.begin());
    cols.pop_back();
  }
  return cols;
}

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_gens,
             u64 cap)
      : ngens_(static_cast<u32>(p.generator_names.size())),
        width_(2 * ngens_),
        cap_(std::max<u64>(cap, 1)) {
    std::set<std::vector<u32>> seen;
    for (const auto& rel : p.relators) {
      auto cols = encode_word(rel);
      if (cols.empty()) continue;
      if (seen.insert(cols).second) rels_.push_back(std::move(cols));
    }
    for (const auto& w : subgroup_gens) {
      auto cols = encode_word(w);
      if (!cols.empty()) subs_.push_back(std::move(cols));
    }
  }

  CosetTable run() {
    new_coset();
    for (const auto& w : subs_) {
      u64 root = 0;
      ensure_room(w.size() + 2, root);
      scan_and_fill(0, w, /*fill=*/true);
    }
    u64 alpha = 0;
    while (alpha < rows_) {
      if (dead(alpha)) {
        ++alpha;
        continue;
      }
      if (!process(alpha)) continue;  // compacted: retry remapped alpha
      ++alpha;
    }
    return finish();
  }

 private:
  // Scans every relator from alpha and completes its row. Returns false if a
  // compaction interrupted the work (alpha has been remapped; the caller
  // must reprocess it from scratch so no relator scan is skipped).
  bool process(u64& alpha) {
    for (const auto& rel : rels_) {
      if (!ensure_room(rel.size() + 2, alpha)) return false;
      scan_and_fill(static_cast<u32>(alpha), rel, /*fill=*/true);
      if (dead(alpha)) return true;  // rep has a smaller id, already done
    }
    for (u32 col = 0; col < width_; ++col) {
      if (at(alpha, col) != kUndef) continue;
      if (!ensure_room(2, alpha)) return false;
      if (at(alpha, col) == kUndef) {
        u32 n = new_coset();
        set_pair(static_cast<u32>(alpha), col, n);
      }
    }
    return true;
  }

  bool dead(u64 c) { return rep(static_cast<u32>(c)) != c; }

  i32& at(u64 c, u32 col) { return tab_[c * width_ + col]; }

  u32 rep(u32 c) {
    while (ufp_[c] != c) {
      ufp_[c] = ufp_[ufp_[c]];
      c = ufp_[c];
    }
    return c;
  }

  u32 new_coset() {
    tab_.resize(tab_.size() + width_, kUndef);
    ufp_.push_back(static_cast<u32>(rows_));
    ++live_;
    return static_cast<u32>(rows_++);
  }

  void set_pair(u32 a, u32 col, u32 b) {
    at(a, col) = static_cast<i32>(b);
    at(b, col ^ 1u) = static_cast<i32>(a);
  }

  // Guarantees `need` free slots below cap before a scan starts, so no scan
  // ever stalls mid-flight. Returns true if room was already available,
  // false after a lookahead+compaction pass (coset ids renumbered, alpha
  // remapped). Throws once compaction cannot recover enough space.
  bool ensure_room(u64 need, u64& alpha) {
    if (rows_ + need <= cap_) return true;
    lookahead();
    compact(alpha);
    if (rows_ + need > cap_) throw CosetLimitExceeded(cap_);
    return false;
  }

  // Relator pass over all live cosets with definitions disabled; recovers
  // space through deductions and coincidences only.
  void lookahead() {
    for (u64 c = 0; c < rows_; ++c) {
      if (dead(c)) continue;
      for (const auto& rel : rels_) {
        scan_and_fill(static_cast<u32>(c), rel, /*fill=*/false);
        if (dead(c)) break;
      }
    }
  }

  void compact(u64& alpha) {
    std::vector<u32> remap(rows_, 0);
    u64 next = 0;
    u64 new_alpha = 0;
    for (u64 c = 0; c < rows_; ++c) {
      if (rep(static_cast<u32>(c)) == c) {
        if (c < alpha) ++new_alpha;
        remap[c] = static_cast<u32>(next++);
      }
    }
    std::vector<i32> fresh(next * width_, kUndef);
    for (u64 c = 0; c < rows_; ++c) {
      if (rep(static_cast<u32>(c)) != c) continue;
      for (u32 col = 0; col < width_; ++col) {
        i32 t = at(c, col);
        if (t != kUndef)
          fresh[remap[c] * width_ + col] =
              static_cast<i32>(remap[rep(static_cast<u32>(t))]);
      }
    }
    tab_ = std::move(fresh);
    rows_ = next;
    ufp_.resize(next);
    for (u64 c = 0; c < next; ++c) ufp_[c] = static_cast<u32>(c);
    alpha = new_alpha;
  }

  void scan_and_fill(u32 alpha, const std::vector<u32>& rel, bool fill) {
    u32 f = alpha;
    u32 b = alpha;
    std::size_t i = 0;
    std::size_t j = rel.size();  // backward cursor is j-1
    for (;;) {
      while (i < j) {
        i32 t = at(f, rel[i]);
        if (t == kUndef) break;
        f = static_cast<u32>(t);
        ++i;
      }
      if (i == j) {
        if (f != b) coincide(f, b);
        return;
      }
      while (j > i) {
        i32 t = at(b, rel[j - 1] ^ 1u);
        if (t == kUndef) break;
        b = static_cast<u32>(t);
        --j;
      }
      if (j == i) {
        // scans met with both entries undefined from opposite sides
        coincide(f, b);
        return;
      }
      if (j == i + 1) {
        set_pair(f, rel[i], b);
        return;
      }
      if (!fill) return;
      u32 n = new_coset();
      set_pair(f, rel[i], n);
      // forward scan resumes through the fresh coset
    }
  }

  void coincide(u32 a, u32 b) {
    merge(a, b);
    while (qhead_ < queue_.size()) {
      u32 y = queue_[qhead_++];
      for (u32 col = 0; col < width_; ++col) {
        i32 t = at(y, col);
        if (t == kUndef) continue;
        u32 d = static_cast<u32>(t);
        if (at(d, col ^ 1u) == static_cast<i32>(y)) at(d, col ^ 1u) = kUndef;
        at(y, col) = kUndef;
        u32 mu = rep(y);
        u32 nu = rep(d);
        i32 e = at(mu, col);
        if (e != kUndef) {
          merge(nu, static_cast<u32>(e));
        } else {
          e = at(nu, col ^ 1u);
          if (e != kUndef)
            merge(mu, static_cast<u32>(e));
          else
            set_pair(mu, col, nu);
        }
      }
    }
    queue_.clear();
    qhead_ = 0;
  }

  void merge(u32 a, u32 b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);  // smallest id survives; coset 0 is immortal
    ufp_[b] = a;
    --live_;
    queue_.push_back(b);
  }

  CosetTable finish() {
    u64 alpha = 0;
    compact(alpha);
    internal_check(live_ == rows_, "live/row mismatch after compaction");
    for (u64 c = 0; c < rows_; ++c)
      for (u32 col = 0; col < width_; ++col)
        internal_check(at(c, col) != kUndef && at(c, col) >= 0 &&
                           static_cast<u64>(at(c, col)) < rows_,
                       "incomplete coset table row");
    return make_completed_table(ngens_, live_, std::move(tab_));
  }

  u32 ngens_;
  u32 width_;
  u64 cap_;
  std::vector<i32> tab_;
  std::vector<u32> ufp_;
  std::vector<u32> queue_;
  std::size_t qhead_ = 0;
  u64 rows_ = 0;
  u64 live_ = 0;
  std::vector<std::vector<u32>> rels_;
  std::vector<std::vector<u32>> subs_;
};

}  // namespace

std::uint32_t CosetTable::apply(std::uint32_t coset, GeneratorSymbol s) const {
  if (!complete_) throw IncompleteTable();
  return static_cast<u32>(entry(coset, column_of(s)));
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  u32 c = coset;
  for (const auto& s : w) c = apply(c, s);
  return c;
}

std::vector<Permutation> CosetTable::to_permutations() const {
  if (!complete_) throw IncompleteTable();
  std::vector<Permutation> perms;
  perms.reserve(ngens_);
  for (u32 g = 0; g < ngens_; ++g) {
    std::vector<u32> img(live_);
    for (u64 c = 0; c < live_; ++c)
      img[c] = static_cast<u32>(entry(c, 2 * g));
    perms.push_back(Permutation(std::move(img)));  // validates bijectivity
  }
  return perms;
}

bool CosetTable::verify_traces(const Presentation& p,
                               const std::vector<Word>& subgroup_gens) const {
  if (!complete_) throw IncompleteTable();
  for (const auto& rel : p.relators)
    for (u64 c = 0; c < live_; ++c)
      if (trace(static_cast<u32>(c), rel) != c) return false;
  for (const auto& w : subgroup_gens)
    if (trace(0, w) != 0) return false;
  return true;
}

CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_gens,
                        std::uint64_t cap) {
  p.validate();
  for (const auto& w : subgroup_gens)
    for (const auto& s : w)
      if (s.id < 0 ||
          static_cast<std::size_t>(s.id) >= p.generator_names.size())
        throw InputError("subgroup generator references an unknown generator");
  if (cap < 1) throw InputError("coset cap must be at least 1");
  return Enumerator(p, subgroup_gens, cap).run();
}

}  // namespace nuforge
