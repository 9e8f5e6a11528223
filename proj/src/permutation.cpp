#include "nuforge/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nuforge/kernels.hpp"

namespace nuforge {

Permutation::Permutation(u32 degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Permutation::Permutation(std::vector<u32> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (u32 v : img_) {
    if (v >= img_.size() || seen[v])
      throw InputError("image array is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::from_images_unchecked(std::vector<u32> images) {
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  return kernels::is_identity(img_.data(), img_.size());
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw DegreeMismatch(degree(), rhs.degree());
  std::vector<u32> out(img_.size());
  kernels::compose(out.data(), img_.data(), rhs.img_.data(), img_.size());
  return from_images_unchecked(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<u32> out(img_.size());
  for (u32 i = 0; i < degree(); ++i) out[img_[i]] = i;
  return from_images_unchecked(std::move(out));
}

Permutation Permutation::conjugated_by(const Permutation& b) const {
  return b.inverse() * (*this) * b;
}

Permutation Permutation::commutator(const Permutation& a,
                                    const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  std::uint64_t ord = 1;
  for (u32 i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (u32 j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation parse_cycles(const std::string& text, std::uint32_t min_degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::uint32_t max_point = 0;
  bool any_point = false;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw SyntaxError("expected '('", i);
    ++i;
    std::vector<std::uint32_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw SyntaxError("expected point number", i);
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      if (v > 16'000'000ULL) throw SyntaxError("point out of range", i);
      cyc.push_back(static_cast<std::uint32_t>(v));
      max_point = std::max(max_point, cyc.back());
      any_point = true;
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw SyntaxError("unterminated cycle", i);
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  std::uint32_t degree = std::max(min_degree, any_point ? max_point + 1 : 0u);
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      std::uint32_t from = cyc[k];
      std::uint32_t to = cyc[(k + 1) % cyc.size()];
      if (img[from] != from)
        throw InputError("cycles are not disjoint at point " +
                         std::to_string(from));
      img[from] = to;
    }
  }
  return Permutation(std::move(img));
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  bool wrote = false;
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out << '(';
    bool first = true;
    for (std::uint32_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
    }
    out << ')';
    wrote = true;
  }
  if (!wrote) out << "()";
  return out.str();
}

}  // namespace nuforge
