#include "g2/surd.hpp"

namespace g2 {

Surd& Surd::operator+=(const Surd& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Surd operator*(const Surd& a, const Surd& b) {
  // basis 1, r2, r5, r10 with r2 r5 = r10, r2 r10 = 2 r5, r5 r10 = 5 r2
  const auto& x = a.c_;
  const auto& y = b.c_;
  Surd r;
  r.c_[0] = x[0] * y[0] + 2 * x[1] * y[1] + 5 * x[2] * y[2] + 10 * x[3] * y[3];
  r.c_[1] = x[0] * y[1] + x[1] * y[0] + 5 * (x[2] * y[3] + x[3] * y[2]);
  r.c_[2] = x[0] * y[2] + x[2] * y[0] + 2 * (x[1] * y[3] + x[3] * y[1]);
  r.c_[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
  return r;
}

std::string to_string(const Surd& s) {
  static const char* names[4] = {"", "*sqrt2", "*sqrt5", "*sqrt10"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (is_zero(s[k])) continue;
    std::string c = to_string(s[k]);
    if (!out.empty()) {
      if (c[0] == '-') {
        out += " - ";
        c.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    out += c + names[k];
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const CSurd& z) {
  if (z.im.is_zero()) return to_string(z.re);
  const std::string im = "(" + to_string(z.im) + ")*i";
  return z.re.is_zero() ? im : "(" + to_string(z.re) + ") + " + im;
}

}  // namespace g2
