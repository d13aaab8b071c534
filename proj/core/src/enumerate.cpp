#include "etaq/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

#include "etaq/dimension.hpp"
#include "etaq/numtheory.hpp"
#include "etaq/table.hpp"

namespace etaq {
namespace {

// N * x_c = sum_n coeff[c][n] r_n with integer coefficients
// N/gcd(N,c^2) * gcd(n,c)^2 * N/n.
std::vector<std::vector<std::int64_t>> scaled_cusp_matrix(std::int64_t N, const std::vector<std::int64_t>& divs) {
  std::vector<std::vector<std::int64_t>> m(divs.size(), std::vector<std::int64_t>(divs.size()));
  for (std::size_t ci = 0; ci < divs.size(); ++ci) {
    const std::int64_t c = divs[ci];
    const std::int64_t scale = N / std::gcd(N, c * c);
    for (std::size_t ni = 0; ni < divs.size(); ++ni) {
      const std::int64_t g = std::gcd(divs[ni], c);
      m[ci][ni] = scale * g * g * (N / divs[ni]);
    }
  }
  return m;
}

struct Search {
  std::int64_t N;
  std::vector<std::int64_t> divs;
  std::vector<std::vector<std::int64_t>> cusp;
  const EnumerationConfig& cfg;
  std::int64_t k_max;

  bool accept(const std::vector<std::int64_t>& r) const {
    for (const auto& row : cusp) {
      std::int64_t x = 0;
      for (std::size_t i = 0; i < r.size(); ++i) x += row[i] * r[i];
      if (x < 0) return false;
    }
    if (cfg.exact_level) {
      std::int64_t lcm = 1;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] != 0) lcm = std::lcm(lcm, divs[i]);
      }
      if (lcm != N) return false;
    }
    if (cfg.dimension_filter) {
      const DimensionData d = dimension_data(EtaQuotient(N, r));
      if (!d.applicable || d.dim != 1) return false;
    }
    return true;
  }

  // All exponent vectors with the first free coordinate pinned to `first`
  // (ignored when there are no free coordinates). Free coordinates are the
  // divisors strictly between 1 and N; r_1 and r_N are solved from
  // sum r_n = 2k and sum n r_n = 0.
  std::vector<EtaQuotient> run(std::int64_t first) const {
    std::vector<EtaQuotient> out;
    const std::size_t s = divs.size();
    const std::int64_t R = cfg.bound;
    if (s < 2) return out;
    const std::size_t free_count = s - 2;
    std::vector<std::int64_t> r(s, 0);
    for (std::int64_t k = 1; k <= k_max; ++k) {
      std::vector<std::int64_t> v(free_count, -R);
      if (free_count > 0) v[0] = first;
      // Odometer over the free coordinates after the pinned first one.
      auto advance = [&] {
        for (std::size_t i = free_count; i-- > 1;) {
          if (v[i] < R) {
            ++v[i];
            return true;
          }
          v[i] = -R;
        }
        return false;
      };
      do {
        std::int64_t s0 = 0, s1 = 0;
        for (std::size_t i = 0; i < free_count; ++i) {
          s0 += v[i];
          s1 += divs[i + 1] * v[i];
        }
        // r_1 + r_N = 2k - s0 and r_1 + N r_N = -s1.
        const std::int64_t num = -s1 - (2 * k - s0);
        if (num % (N - 1) != 0) continue;
        const std::int64_t rN = num / (N - 1);
        const std::int64_t r1 = 2 * k - s0 - rN;
        if (std::abs(rN) > R || std::abs(r1) > R) continue;
        r[0] = r1;
        r[s - 1] = rN;
        std::copy(v.begin(), v.end(), r.begin() + 1);
        if (accept(r)) out.emplace_back(N, r);
      } while (advance());
    }
    return out;
  }
};

}  // namespace

std::int64_t k_max_for(std::int64_t N) {
  const Rational m(gamma0_index(N));
  Integer phi_sum = 0;
  for (auto c : divisors_of(N)) phi_sum += euler_phi(std::gcd(c, N / c));
  const Rational bound = 1 + (1 + Rational(11, 24) * Rational(phi_sum)) * 12 / m;
  Integer ceil;
  mpz_cdiv_q(ceil.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  return to_int64(ceil);
}

std::vector<EtaQuotient> enumerate_level(const EnumerationConfig& cfg) {
  if (cfg.level < 1) throw std::invalid_argument("enumerate_level: level must be positive");
  if (cfg.bound < 0) throw std::invalid_argument("enumerate_level: bound must be nonnegative");
  const std::int64_t N = cfg.level;
  const auto divs = divisors_of(N);
  const Search search{N, divs, scaled_cusp_matrix(N, divs), cfg, cfg.k_max.value_or(k_max_for(N))};

  // One task per value of the outermost free coordinate.
  std::vector<std::int64_t> firsts;
  if (divs.size() > 2) {
    for (std::int64_t v = -cfg.bound; v <= cfg.bound; ++v) firsts.push_back(v);
  } else {
    firsts.push_back(0);
  }
  std::vector<std::vector<EtaQuotient>> parts(firsts.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(firsts.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < firsts.size(); i = next++) parts[i] = search.run(firsts[i]);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<EtaQuotient> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_candidate_only_level(std::int64_t N) { return N == 24 || N == 30 || N == 36; }

LevelReconstruction reconstruct_level(const EnumerationConfig& cfg) {
  LevelReconstruction rec;
  rec.level = cfg.level;
  rec.candidate_only = is_candidate_only_level(cfg.level);
  rec.found = enumerate_level(cfg);

  std::vector<EtaQuotient> expected;
  for (const auto& row : load_table()) {
    if (row.entry.level() == cfg.level) expected.push_back(row.entry);
  }
  std::sort(expected.begin(), expected.end());
  std::set_difference(expected.begin(), expected.end(), rec.found.begin(), rec.found.end(), std::back_inserter(rec.missing));
  std::set_difference(rec.found.begin(), rec.found.end(), expected.begin(), expected.end(), std::back_inserter(rec.surplus));
  return rec;
}

}  // namespace etaq
