#include "g2/form.hpp"

#include <algorithm>

namespace g2 {

MultiIndex MultiIndex::of(std::initializer_list<int> labels) {
  std::uint8_t mask = 0;
  int prev = 0;
  for (int l : labels) {
    if (l < 1 || l > kDim) throw std::out_of_range("frame label must lie in 1..7");
    if (l <= prev) throw std::invalid_argument("multi-index labels must be strictly increasing");
    mask |= static_cast<std::uint8_t>(1u << (l - 1));
    prev = l;
  }
  return from_mask(mask);
}

MultiIndex MultiIndex::parse(std::string_view digits) {
  if (!digits.empty() && digits.front() == 'e') digits.remove_prefix(1);
  std::uint8_t mask = 0;
  int prev = 0;
  for (char ch : digits) {
    const int l = ch - '0';
    if (l < 1 || l > kDim) throw std::invalid_argument("frame label must be a digit 1..7");
    if (l <= prev) throw std::invalid_argument("multi-index labels must be strictly increasing");
    mask |= static_cast<std::uint8_t>(1u << (l - 1));
    prev = l;
  }
  return from_mask(mask);
}

std::vector<int> MultiIndex::labels() const {
  std::vector<int> out;
  for (int k = 1; k <= kDim; ++k)
    if (contains(k)) out.push_back(k);
  return out;
}

std::string to_string(MultiIndex m) {
  if (m.degree() == 0) return "1";
  std::string s = "e";
  for (int l : m.labels()) s += static_cast<char>('0' + l);
  return s;
}

std::vector<MultiIndex> basis_indices(int degree) {
  std::vector<MultiIndex> out;
  for (unsigned mask = 0; mask < 128; ++mask)
    if (std::popcount(mask) == degree) out.push_back(MultiIndex::from_mask(static_cast<std::uint8_t>(mask)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace g2
