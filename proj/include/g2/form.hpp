#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "g2/matrix.hpp"
#include "g2/rational.hpp"

namespace g2 {

/// Strictly increasing set of frame labels from {1..7}, stored as a bitmask
/// (bit k-1 set <=> label k present).
class MultiIndex {
 public:
  constexpr MultiIndex() = default;
  static constexpr MultiIndex from_mask(std::uint8_t mask) {
    if (mask > 0x7f) throw std::out_of_range("multi-index mask beyond 7 labels");
    MultiIndex m;
    m.mask_ = mask;
    return m;
  }
  /// Labels must be strictly increasing and within 1..7.
  static MultiIndex of(std::initializer_list<int> labels);
  /// "123" or "e123".
  static MultiIndex parse(std::string_view digits);
  static constexpr MultiIndex full() { return from_mask(0x7f); }

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(mask_); }
  constexpr bool contains(int label) const { return (mask_ >> (label - 1)) & 1u; }
  constexpr MultiIndex complement() const { return from_mask(0x7f & ~mask_); }
  std::vector<int> labels() const;

  /// Lexicographic order on the sorted label tuples (for equal degree).
  friend constexpr bool operator<(MultiIndex a, MultiIndex b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const std::uint8_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return false;
    const std::uint8_t low = diff & static_cast<std::uint8_t>(-diff);
    return (a.mask_ & low) != 0;
  }
  friend constexpr bool operator==(MultiIndex, MultiIndex) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// "e123"; the empty index renders as "1".
std::string to_string(MultiIndex m);

/// Sign of the shuffle (I, J) -> sorted(I u J); zero if I and J overlap.
constexpr int shuffle_sign(MultiIndex a, MultiIndex b) {
  if (a.mask() & b.mask()) return 0;
  int inversions = 0;
  for (int j = 0; j < kDim; ++j)
    if (b.mask() >> j & 1u) inversions += std::popcount(static_cast<unsigned>(a.mask() >> (j + 1)));
  return inversions % 2 ? -1 : 1;
}

/// Orientation of the frame: vol = sign * e^{1234567}.
enum class Orientation : int { positive = 1, negative = -1 };

constexpr int sign_of(Orientation o) { return static_cast<int>(o); }

/// A k-form on the fixed frame e^1..e^7. The coefficient of e^I is the value
/// of the form on (e_{i1}, ..., e_{ik}); no factorial weights. Zero
/// coefficients are never stored.
template <class S>
class Form {
 public:
  using Terms = std::map<MultiIndex, S>;

  explicit Form(int degree = 0) : degree_(degree) {
    if (degree < 0 || degree > kDim) throw std::out_of_range("form degree must lie in 0..7");
  }
  static Form basis(MultiIndex index, const S& coeff = S(1)) {
    Form f(index.degree());
    f.add(index, coeff);
    return f;
  }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  S coefficient(MultiIndex index) const {
    const auto it = terms_.find(index);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// Accumulates coeff onto e^index.
  Form& add(MultiIndex index, const S& coeff) {
    if (index.degree() != degree_) throw std::invalid_argument("multi-index degree mismatch");
    if (g2::is_zero(coeff)) return *this;
    S c = coeff;
    if constexpr (std::is_same_v<S, Rational>) c.canonicalize();
    auto [it, inserted] = terms_.try_emplace(index, std::move(c));
    if (!inserted) {
      it->second += coeff;
      if (g2::is_zero(it->second)) terms_.erase(it);
    }
    return *this;
  }

  Form& operator+=(const Form& o) {
    check_degree(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    check_degree(o);
    for (const auto& [k, c] : o.terms_) add(k, S(-c));
    return *this;
  }
  Form operator-() const {
    Form r(degree_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, S(-c));
    return r;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const S& s, const Form& a) {
    Form r(a.degree_);
    for (const auto& [k, c] : a.terms_) r.add(k, S(s * c));
    return r;
  }
  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Applies f to each coefficient, producing a form over another scalar.
  template <class F>
  auto map(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    Form<T> r(degree_);
    for (const auto& [k, c] : terms_) r.add(k, f(c));
    return r;
  }

 private:
  void check_degree(const Form& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("form degree mismatch");
  }
  int degree_;
  Terms terms_;
};

template <class S>
bool is_zero(const Form<S>& f) {
  return f.is_zero();
}

/// Embeds a form into a richer scalar type (e.g. Rational -> Poly).
template <class T, class S>
Form<T> form_cast(const Form<S>& f) {
  return f.map([](const S& c) { return T(c); });
}

template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
  if (a.degree() + b.degree() > kDim) return Form<S>(kDim);
  Form<S> r(a.degree() + b.degree());
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) {
      const int s = shuffle_sign(i, j);
      if (s == 0) continue;
      S prod = ci * cj;
      r.add(MultiIndex::from_mask(i.mask() | j.mask()), s > 0 ? prod : S(-prod));
    }
  return r;
}

/// e_v interior product, v in 1..7. The zero form of degree 0 for 0-forms.
template <class S>
Form<S> interior_product(int v, const Form<S>& a) {
  if (v < 1 || v > kDim) throw std::out_of_range("frame vector index must lie in 1..7");
  if (a.degree() == 0) return Form<S>(0);
  Form<S> r(a.degree() - 1);
  const std::uint8_t bit = static_cast<std::uint8_t>(1u << (v - 1));
  for (const auto& [i, c] : a.terms()) {
    if (!(i.mask() & bit)) continue;
    const int before = std::popcount(static_cast<unsigned>(i.mask() & (bit - 1)));
    r.add(MultiIndex::from_mask(i.mask() & ~bit), before % 2 ? S(-c) : c);
  }
  return r;
}

/// X interior product for a vector with components X^1..X^7.
template <class S>
Form<S> interior_product(const Vector7<S>& x, const Form<S>& a) {
  Form<S> r(a.degree() == 0 ? 0 : a.degree() - 1);
  for (int v = 1; v <= kDim; ++v)
    if (!is_zero(x(v - 1))) r += x(v - 1) * interior_product(v, a);
  return r;
}

/// The 1-form with components x.
template <class S>
Form<S> one_form(const Vector7<S>& x) {
  Form<S> r(1);
  for (int v = 1; v <= kDim; ++v) r.add(MultiIndex::from_mask(std::uint8_t(1u << (v - 1))), x(v - 1));
  return r;
}

template <class S>
Vector7<S> components(const Form<S>& one) {
  if (one.degree() != 1) throw std::invalid_argument("components: expected a 1-form");
  Vector7<S> x;
  for (int v = 1; v <= kDim; ++v) x(v - 1) = one.coefficient(MultiIndex::from_mask(std::uint8_t(1u << (v - 1))));
  return x;
}

template <class S>
Form<S> volume_form(Orientation o = Orientation::positive) {
  return Form<S>::basis(MultiIndex::full(), S(sign_of(o)));
}

/// Hodge star of the frame metric: *(e^I) = o * sign(I, I^c) e^{I^c}.
template <class S>
Form<S> hodge_star_identity(const Form<S>& a, Orientation o = Orientation::positive) {
  Form<S> r(kDim - a.degree());
  for (const auto& [i, c] : a.terms()) {
    const MultiIndex ic = i.complement();
    const int s = shuffle_sign(i, ic) * sign_of(o);
    r.add(ic, s > 0 ? c : S(-c));
  }
  return r;
}

/// Value of a top-degree form on the ordered frame (e_1, ..., e_7).
template <class S>
S top_form_evaluate(const Form<S>& a) {
  if (a.degree() != kDim) throw std::invalid_argument("top_form_evaluate: expected a 7-form");
  return a.coefficient(MultiIndex::full());
}

/// Pointwise inner product for the frame metric.
template <class S>
S form_inner_product(const Form<S>& a, const Form<S>& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("form_inner_product: degree mismatch");
  S total(0);
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = &small == &a ? b : a;
  for (const auto& [i, c] : small.terms()) {
    const auto it = large.terms().find(i);
    if (it != large.terms().end()) total += c * it->second;
  }
  return total;
}

/// All multi-indices of a given degree, in lexicographic order.
std::vector<MultiIndex> basis_indices(int degree);

template <class S>
std::string to_string(const Form<S>& f) {
  using g2::to_string;
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [i, c] : f.terms()) {
    std::string cs = to_string(c);
    const bool simple = cs.find_first_of("+ *") == std::string::npos;
    bool neg = simple && !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (!simple) s += "(" + cs + ")*";
    else if (cs != "1") s += cs + "*";
    s += to_string(i);
  }
  return s;
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Form<S>& f) {
  return os << to_string(f);
}

inline std::ostream& operator<<(std::ostream& os, MultiIndex m) { return os << to_string(m); }

}  // namespace g2
