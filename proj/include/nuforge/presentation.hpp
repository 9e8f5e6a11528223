#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nuforge/word.hpp"

namespace nuforge {

// Generators plus relators of a finitely presented group.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  // Names unique and non-empty; relator symbols reference declared
  // generators. Throws InputError on violation.
  void validate() const;
};

// Text format, one presentation per file:
//   gens: a, b, c
//   rel: a^2
//   rel: [a,b]
// Blank lines and lines starting with '#' are ignored.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation_text(const std::string& text);
Presentation load_presentation_file(const std::string& path);

std::string format_presentation(const Presentation& p);

}  // namespace nuforge
