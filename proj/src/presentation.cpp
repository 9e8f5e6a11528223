#include "nuforge/presentation.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nuforge {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& name : generator_names) {
    if (name.empty()) throw InputError("empty generator name");
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw InputError("invalid generator name: " + name);
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
      throw InputError("generator name must start with a letter: " + name);
    if (!seen.insert(name).second)
      throw InputError("duplicate generator name: " + name);
  }
  for (const auto& rel : relators)
    for (const auto& s : rel) {
      if (s.id < 0 || static_cast<std::size_t>(s.id) >= generator_names.size())
        throw InputError("relator references an undeclared generator");
      if (s.sign != 1 && s.sign != -1)
        throw InputError("generator symbol sign must be +1 or -1");
    }
}

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  bool have_gens = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("gens:", 0) == 0) {
      if (have_gens)
        throw InputError("line " + std::to_string(lineno) +
                         ": duplicate gens: line");
      std::stringstream names(t.substr(5));
      std::string name;
      while (std::getline(names, name, ',')) {
        name = strip(name);
        if (!name.empty()) p.generator_names.push_back(name);
      }
      have_gens = true;
    } else if (t.rfind("rel:", 0) == 0) {
      if (!have_gens)
        throw InputError("line " + std::to_string(lineno) +
                         ": rel: before gens:");
      p.relators.push_back(parse_word(strip(t.substr(4)), p.generator_names));
    } else {
      throw InputError("line " + std::to_string(lineno) +
                       ": expected 'gens:' or 'rel:'");
    }
  }
  if (!have_gens) throw InputError("presentation has no gens: line");
  p.validate();
  return p;
}

Presentation parse_presentation_text(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presentation file: " + path);
  return parse_presentation(in);
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (std::size_t i = 0; i < p.generator_names.size(); ++i)
    out << (i ? ", " : " ") << p.generator_names[i];
  out << '\n';
  for (const auto& rel : p.relators)
    out << "rel: " << format_word(rel, p.generator_names) << '\n';
  return out.str();
}

}  // namespace nuforge
