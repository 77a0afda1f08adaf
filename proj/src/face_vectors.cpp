#include "nctoric/face_vectors.hpp"

#include "nctoric/error.hpp"

namespace nctoric {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

IntVector h_from_f(const IntVector& f, std::size_t d) {
  if (f.size() != d + 1) fail("LengthMismatch", "f-vector needs d+1 entries (f_-1, ..., f_{d-1})");
  if (f[0] != 1) fail("LengthMismatch", "f_-1 must be 1");
  const long dl = static_cast<long>(d);
  IntVector h(d + 1);
  for (long i = 0; i <= dl; ++i)
    for (long j = 0; j <= i; ++j) {
      Integer term = binomial(dl - j, dl - i) * f[static_cast<std::size_t>(j)];
      h[static_cast<std::size_t>(i)] += (i - j) % 2 == 0 ? term : Integer(-term);
    }
  return h;
}

IntVector f_from_h(const IntVector& h) {
  if (h.empty()) fail("LengthMismatch", "empty h-vector");
  const long d = static_cast<long>(h.size()) - 1;
  IntVector f(h.size());
  for (long j = 0; j <= d; ++j)
    for (long i = 0; i <= j; ++i) f[static_cast<std::size_t>(j)] += binomial(d - i, j - i) * h[static_cast<std::size_t>(i)];
  return f;
}

IntVector g_from_h(const IntVector& h) {
  if (h.empty()) return {};
  const std::size_t d = h.size() - 1;
  IntVector g{h[0]};
  for (std::size_t i = 1; i <= d / 2; ++i) g.push_back(h[i] - h[i - 1]);
  return g;
}

bool check_dehn_sommerville(const IntVector& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != h[h.size() - 1 - i]) return false;
  return true;
}

std::vector<long> macaulay_expansion(const Integer& l, long i) {
  if (i < 1) fail("OutOfRange", "Macaulay expansions start at level 1");
  std::vector<long> terms;
  Integer rest = l;
  for (long level = i; level >= 1 && rest > 0; --level) {
    long n = level;
    while (binomial(n + 1, level) <= rest) ++n;
    terms.push_back(n);
    rest -= binomial(n, level);
  }
  return terms;
}

Integer shadow(const Integer& l, long i, ShadowConvention conv) {
  if (l <= 0) return 0;
  auto terms = macaulay_expansion(l, i);
  const long shift = conv == ShadowConvention::Standard ? 1 : 0;
  Integer out = 0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    long level = i - static_cast<long>(k);
    out += binomial(terms[k] + shift, level + 1);
  }
  return out;
}

bool is_m_vector(const IntVector& l, ShadowConvention conv) {
  if (l.empty() || l[0] != 1) return false;
  for (const auto& x : l)
    if (x < 0) return false;
  for (std::size_t i = 1; i + 1 < l.size(); ++i)
    if (l[i + 1] > shadow(l[i], static_cast<long>(i), conv)) return false;
  return true;
}

GTheoremCheck g_theorem_necessity(const IntVector& f, std::size_t d, ShadowConvention conv) {
  GTheoremCheck c;
  c.vectors.d = d;
  c.vectors.f = f;
  c.vectors.h = h_from_f(f, d);
  c.vectors.g = g_from_h(c.vectors.h);
  c.ds = check_dehn_sommerville(c.vectors.h);
  c.h0 = c.vectors.h[0] == 1;
  c.m_vector = is_m_vector(c.vectors.g, conv);
  c.pass = c.ds && c.h0 && c.m_vector;
  return c;
}

}  // namespace nctoric
