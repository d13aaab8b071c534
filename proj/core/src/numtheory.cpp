#include "etaq/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace etaq {
namespace {

void require_positive(const Integer& n, const char* what) {
  if (n <= 0) throw std::domain_error(std::string(what) + ": argument must be positive, got " + n.get_str());
}

// (2/b) for odd b > 0 depends on b mod 8.
int two_over(const Integer& b) {
  const unsigned long r = mpz_fdiv_ui(b.get_mpz_t(), 8);
  return (r == 1 || r == 7) ? 1 : -1;
}

}  // namespace

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

int kronecker(const Integer& a_in, const Integer& b_in) {
  if (b_in == 0) return (a_in == 1 || a_in == -1) ? 1 : 0;
  if (mpz_even_p(a_in.get_mpz_t()) && mpz_even_p(b_in.get_mpz_t())) return 0;

  Integer a = a_in;
  Integer b = b_in;
  int sign = 1;

  // Strip the 2-part of b: (a/2)^v, with a odd here.
  const unsigned long v = mpz_scan1(b.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), v);
  if (v % 2 == 1) sign = two_over(a);

  if (b < 0) {
    b = -b;
    if (a < 0) sign = -sign;
  }

  // Jacobi symbol with odd b > 0.
  mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  while (a != 0) {
    const unsigned long s = mpz_scan1(a.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), s);
    if (s % 2 == 1) sign *= two_over(b);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(b.get_mpz_t(), 4) == 3) sign = -sign;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    b = a;
    a = r;
  }
  return b == 1 ? sign : 0;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n_in) {
  require_positive(n_in, "factorize");
  std::vector<std::pair<Integer, unsigned>> out;
  Integer n = n_in;

  const unsigned long twos = mpz_scan1(n.get_mpz_t(), 0);
  if (twos > 0) {
    out.emplace_back(2, static_cast<unsigned>(twos));
    mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), twos);
  }
  for (Integer p = 3; p * p <= n; p += 2) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

int moebius(const Integer& n) {
  require_positive(n, "moebius");
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

Integer euler_phi(const Integer& n) {
  require_positive(n, "euler_phi");
  Integer phi = n;
  for (const auto& [p, e] : factorize(n)) {
    phi /= p;
    phi *= p - 1;
  }
  return phi;
}

Integer rad_common(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw std::domain_error("rad_common: both arguments are zero");
  Integer rad = 1;
  for (const auto& p : prime_divisors(gcd(a, b))) rad *= p;
  return rad;
}

Integer squarefree_part(const Integer& n) {
  require_positive(n, "squarefree_part");
  Integer d = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2 == 1) d *= p;
  }
  return d;
}

unsigned long v2(const Integer& n) {
  if (n == 0) throw std::domain_error("v2: argument is zero");
  return mpz_scan1(n.get_mpz_t(), 0);
}

std::vector<Integer> divisors(const Integer& n) {
  require_positive(n, "divisors");
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace etaq
