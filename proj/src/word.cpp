#include "nuforge/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace nuforge {

Word free_reduce(const Word& w) {
  std::vector<GeneratorSymbol> out;
  out.reserve(w.size());
  for (const auto& s : w) {
    if (!out.empty() && out.back().id == s.id && out.back().sign == -s.sign)
      out.pop_back();
    else
      out.push_back(s);
  }
  return Word(std::move(out));
}

Word inverse(const Word& w) {
  std::vector<GeneratorSymbol> out;
  out.reserve(w.size());
  for (auto it = w.end(); it != w.begin();) {
    --it;
    out.push_back({it->id, -it->sign});
  }
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<GeneratorSymbol> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

Word power(const Word& w, long long n) {
  Word base = n < 0 ? inverse(w) : w;
  unsigned long long reps = n < 0 ? static_cast<unsigned long long>(-n)
                                  : static_cast<unsigned long long>(n);
  std::vector<GeneratorSymbol> out;
  out.reserve(w.size() * reps);
  for (unsigned long long i = 0; i < reps; ++i)
    out.insert(out.end(), base.begin(), base.end());
  return Word(std::move(out));
}

Word commutator_word(const Word& a, const Word& b) {
  return concat(concat(inverse(a), inverse(b)), concat(a, b));
}

Word conjugate_word(const Word& w, const Word& by) {
  return concat(concat(inverse(by), w), by);
}

namespace {

// Recursive-descent parser over the word grammar.
class WordParser {
 public:
  WordParser(const std::string& text, const std::vector<std::string>& gens)
      : text_(text), gens_(gens) {}

  Word parse() {
    Word w = parse_product(/*stop_chars=*/"");
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected character", pos_);
    return free_reduce(w);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() { return pos_ >= text_.size(); }

  char peek() { return text_[pos_]; }

  Word parse_product(const std::string& stop_chars) {
    Word result;
    bool expect_factor = true;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (stop_chars.find(c) != std::string::npos) break;
      if (c == '*') {
        if (expect_factor) throw SyntaxError("unexpected '*'", pos_);
        ++pos_;
        expect_factor = true;
        continue;
      }
      Word term = parse_term();
      result = concat(result, term);
      expect_factor = false;
    }
    if (expect_factor && !result.empty())
      throw SyntaxError("dangling product", pos_);
    return result;
  }

  Word parse_term() {
    Word f = parse_factor();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      long long n = parse_integer();
      f = power(f, n);
    }
    return f;
  }

  Word parse_factor() {
    skip_ws();
    if (at_end()) throw SyntaxError("expected a factor", pos_);
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = parse_product(")");
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word x = parse_product(",");
      expect(',');
      Word y = parse_product("]");
      expect(']');
      return commutator_word(x, y);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return parse_generator();
    throw SyntaxError("expected a generator, '(' or '['", pos_);
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || text_[pos_] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  long long parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw SyntaxError("expected an integer exponent", start);
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw SyntaxError("exponent too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }

  // Longest declared-name match; single-letter names also match case-flipped
  // as the inverse. Declared names win over case-flips of the same length.
  Word parse_generator() {
    std::size_t best_len = 0;
    int best_id = -1;
    int best_sign = +1;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      const std::string& name = gens_[g];
      if (name.size() > best_len && text_.compare(pos_, name.size(), name) == 0) {
        best_len = name.size();
        best_id = static_cast<int>(g);
        best_sign = +1;
      }
    }
    if (best_len == 0) {
      for (std::size_t g = 0; g < gens_.size(); ++g) {
        const std::string& name = gens_[g];
        if (name.size() != 1) continue;
        char flip = std::isupper(static_cast<unsigned char>(name[0]))
                        ? static_cast<char>(std::tolower(
                              static_cast<unsigned char>(name[0])))
                        : static_cast<char>(std::toupper(
                              static_cast<unsigned char>(name[0])));
        if (flip != name[0] && text_[pos_] == flip) {
          best_len = 1;
          best_id = static_cast<int>(g);
          best_sign = -1;
          break;
        }
      }
    }
    if (best_id < 0) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_'))
        ++end;
      throw UnknownGenerator(text_.substr(pos_, end - pos_));
    }
    pos_ += best_len;
    return Word::generator(best_id, best_sign);
  }

  const std::string& text_;
  const std::vector<std::string>& gens_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
  return WordParser(text, gens).parse();
}

std::string format_word(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w) {
    if (!first) out << '*';
    first = false;
    const std::string& name = gens.at(static_cast<std::size_t>(s.id));
    if (s.sign > 0) {
      out << name;
    } else if (name.size() == 1 &&
               std::isalpha(static_cast<unsigned char>(name[0]))) {
      char flip = std::isupper(static_cast<unsigned char>(name[0]))
                      ? static_cast<char>(
                            std::tolower(static_cast<unsigned char>(name[0])))
                      : static_cast<char>(
                            std::toupper(static_cast<unsigned char>(name[0])));
      out << flip;
    } else {
      out << name << "^-1";
    }
  }
  return out.str();
}

}  // namespace nuforge
