#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nuforge/errors.hpp"

namespace nuforge {

// One signed occurrence of a generator: `id` indexes the presentation's
// generator list, `sign` is +1 for the generator and -1 for its inverse.
struct GeneratorSymbol {
  int id = 0;
  int sign = +1;

  bool operator==(const GeneratorSymbol&) const = default;
};

// A word over a generator alphabet. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<GeneratorSymbol> syms) : syms_(std::move(syms)) {}

  static Word generator(int id, int sign = +1) {
    return Word({GeneratorSymbol{id, sign}});
  }

  void push(int id, int sign) { syms_.push_back({id, sign}); }
  std::size_t size() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }
  const GeneratorSymbol& operator[](std::size_t i) const { return syms_[i]; }
  auto begin() const { return syms_.begin(); }
  auto end() const { return syms_.end(); }
  const std::vector<GeneratorSymbol>& symbols() const { return syms_; }

  bool operator==(const Word&) const = default;

 private:
  std::vector<GeneratorSymbol> syms_;
};

// Cancels adjacent inverse pairs until none remain. Idempotent.
Word free_reduce(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, long long n);
// a^-1 b^-1 a b
Word commutator_word(const Word& a, const Word& b);
// by^-1 w by
Word conjugate_word(const Word& w, const Word& by);

// Parses the word grammar: juxtaposition or '*' for products, '^n' integer
// powers (negative allowed), '[x,y]' = x^-1 y^-1 x y, parentheses. Single
// letter generators admit case-flip inverses (a/A); any generator may be
// inverted with '^-1'. The result is freely reduced.
Word parse_word(const std::string& text, const std::vector<std::string>& gens);

std::string format_word(const Word& w, const std::vector<std::string>& gens);

}  // namespace nuforge
