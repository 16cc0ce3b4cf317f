#include "heunlie/distribution.hpp"

#include <algorithm>

#include "heunlie/errors.hpp"

namespace heunlie {

Distribution::Distribution(std::vector<DeltaTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const DeltaTerm& x, const DeltaTerm& y) {
    if (x.center != y.center) return CRat::lex_less(x.center, y.center);
    return x.order < y.order;
  });
  for (auto& t : terms) {
    if (t.order < 0) throw InvalidParams("delta order must be >= 0");
    if (!terms_.empty() && terms_.back().order == t.order && terms_.back().center == t.center) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const DeltaTerm& t) { return t.coeff.is_zero(); });
}

Distribution Distribution::delta(int order, const CRat& center, const CRat& coeff) {
  return Distribution({{order, center, coeff}});
}

Distribution operator+(const Distribution& x, const Distribution& y) {
  std::vector<DeltaTerm> all = x.terms_;
  all.insert(all.end(), y.terms_.begin(), y.terms_.end());
  return Distribution(std::move(all));
}

Distribution operator-(const Distribution& x, const Distribution& y) { return x + y * CRat(-1); }

Distribution operator*(const Distribution& d, const CRat& s) {
  std::vector<DeltaTerm> out = d.terms_;
  for (auto& t : out) t.coeff *= s;
  return Distribution(std::move(out));
}

CRat pair(const Distribution& d, const Polynomial& f) {
  CRat total;
  for (const auto& t : d.terms()) {
    CRat v = t.coeff * f.derivative(t.order).eval(t.center);
    if (t.order % 2 != 0) v = -v;
    total += v;
  }
  return total;
}

Distribution multiply(const Polynomial& phi, const Distribution& d) {
  std::vector<DeltaTerm> out;
  for (const auto& t : d.terms()) {
    const int m = t.order;
    for (int r = 0; r <= m; ++r) {
      CRat c = t.coeff * CRat(Rational(binomial(m, r))) * phi.derivative(m - r).eval(t.center);
      if ((m - r) % 2 != 0) c = -c;
      out.push_back({r, t.center, c});
    }
  }
  return Distribution(std::move(out));
}

Distribution monomial_times_delta(int n, int m) {
  if (n < 0 || m < 0) throw InvalidParams("monomial_times_delta: n, m must be >= 0");
  if (m < n) return {};
  CRat c(Rational(factorial(m) / factorial(m - n)));
  if (n % 2 != 0) c = -c;
  return Distribution::delta(m - n, CRat(), c);
}

}  // namespace heunlie
