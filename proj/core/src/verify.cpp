#include "etaq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "etaq/dimension.hpp"
#include "etaq/errors.hpp"
#include "etaq/hecke.hpp"
#include "etaq/qseries.hpp"

namespace etaq {
namespace {

constexpr std::size_t kEigenIndices = 3;

void check_column(VerificationReport& report, const char* name, const std::string& published, const std::string& derived) {
  if (published != derived) report.mismatches.push_back({Mismatch::Kind::column, name, published, derived});
}

void check_coefficients(VerificationReport& report, const HeckeContext& base, const QSeries& f) {
  const auto m_r = static_cast<std::size_t>(base.invariants().m_r);
  for (std::size_t l = 1; l < f.precision(); l += m_r) {
    const auto li = static_cast<std::int64_t>(l);
    const Integer closed = closed_coefficient(base.with_index(li), EntryPolicy::allow_unverified);
    report.l_tested.push_back(li);
    if (closed != f[l]) {
      report.mismatches.push_back(
          {Mismatch::Kind::coefficient, "c_f(" + std::to_string(l) + ")", closed.get_str(), f[l].get_str()});
    }
  }
}

void check_eigen_relation(VerificationReport& report, const HeckeContext& base, const QSeries& f) {
  const std::int64_t m_r = base.invariants().m_r;
  const auto prec = static_cast<std::int64_t>(f.precision());
  for (std::int64_t l = 1 + m_r; report.eigen_l.size() < kEigenIndices && l < prec; l += m_r) {
    report.eigen_l.push_back(l);
    const HeckeContext ctx = base.with_index(l);
    const GaussianRational eigenvalue = scaled_transform_simplified(ctx, 0, f);
    for (std::int64_t n = 0; l * n < prec; ++n) {
      const GaussianRational lhs = scaled_transform_simplified(ctx, n, f);
      const GaussianRational rhs = eigenvalue * GaussianRational(Rational(f[static_cast<std::size_t>(n)]));
      ++report.eigen_checks;
      if (!(lhs == rhs)) {
        report.mismatches.push_back({Mismatch::Kind::eigen,
                                     "T_" + std::to_string(l) + " at n=" + std::to_string(n), rhs.to_string(),
                                     lhs.to_string()});
      }
    }
  }
}

}  // namespace

std::string to_string(Mismatch::Kind kind) {
  switch (kind) {
    case Mismatch::Kind::coefficient: return "coefficient";
    case Mismatch::Kind::column: return "column";
    case Mismatch::Kind::dimension: return "dimension";
    case Mismatch::Kind::eigen: return "eigen";
    case Mismatch::Kind::error: return "error";
  }
  return "unknown";
}

VerificationReport verify_entry(const TableEntry& row, std::size_t precision) {
  VerificationReport report;
  report.entry_id = row.id;
  report.level = row.entry.level();
  report.r_string = row.entry.to_string();
  report.precision = precision;

  try {
    if (precision < 2) throw std::invalid_argument("verification needs precision >= 2");
    const DerivedInvariants inv = derive(row.entry);
    check_column(report, "m_r", std::to_string(row.m_r), std::to_string(inv.m_r));
    check_column(report, "k", std::to_string(row.k), inv.k.get_str());
    check_column(report, "delta", std::to_string(row.delta), std::to_string(inv.delta));
    check_column(report, "Pi_sf", row.pi_sf.get_str(), inv.pi_sf.get_str());
    check_column(report, "x_N", "0", inv.x_n.get_str());

    const DimensionData dim = dimension_data(row.entry);
    report.dimension_applicable = dim.applicable;
    report.dimension = dim.dim;
    if (!dim.applicable) {
      report.mismatches.push_back({Mismatch::Kind::dimension, "applicable", "true", "false"});
    } else if (dim.dim != 1) {
      report.mismatches.push_back({Mismatch::Kind::dimension, "dim", "1", dim.dim.get_str()});
    }

    const QSeries f = eta_quotient_expansion(row.entry, precision);
    const HeckeContext base(row.entry, inv, 1);
    check_coefficients(report, base, f);
    check_eigen_relation(report, base, f);
  } catch (const std::exception& ex) {
    report.mismatches.push_back({Mismatch::Kind::error, "exception", "", ex.what()});
  }
  return report;
}

std::vector<VerificationReport> verify_entries(const std::vector<TableEntry>& rows, std::size_t precision, unsigned jobs) {
  std::vector<VerificationReport> out(rows.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rows.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) out[i] = verify_entry(rows[i], precision);
  };
  if (workers == 1) {
    work();
    return out;
  }
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return out;
}

}  // namespace etaq
