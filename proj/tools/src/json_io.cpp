#include "etaq/cli/json_io.hpp"

#include <string>
#include <vector>

#include "etaq/errors.hpp"

namespace etaq::cli {

using nlohmann::json;

json to_json(const QSeries& f) {
  const Rational offset = f.offset();
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.get_str());
  return {{"offset_num", Integer(offset.get_num()).get_si()},
          {"offset_den", Integer(offset.get_den()).get_si()},
          {"precision", f.precision()},
          {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const json& j) {
  try {
    const auto num = j.at("offset_num").get<std::int64_t>();
    const auto den = j.at("offset_den").get<std::int64_t>();
    const auto precision = j.at("precision").get<std::size_t>();
    const auto& raw = j.at("coeffs");
    if (den <= 0 || 24 % den != 0) throw ParseError("offset_den must be a positive divisor of 24");
    if (!raw.is_array() || raw.size() != precision) throw ParseError("coeffs must be an array of length precision");
    std::vector<Integer> coeffs;
    coeffs.reserve(precision);
    for (const auto& c : raw) {
      Integer v;
      if (!c.is_string() || v.set_str(c.get<std::string>(), 10) != 0) throw ParseError("coefficient is not a decimal string");
      coeffs.push_back(std::move(v));
    }
    return QSeries(num * (24 / den), std::move(coeffs));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("QSeries JSON: ") + ex.what());
  }
}

json to_json(const EtaQuotient& e, const DerivedInvariants& inv) {
  json x_c = json::object();
  for (const auto& [c, x] : inv.x_c) x_c[std::to_string(c)] = x.get_str();
  return {{"level", e.level()},       {"r", e.to_string()},     {"k", inv.k.get_str()},
          {"pi", inv.pi.get_str()},   {"pi_sf", inv.pi_sf.get_str()}, {"m_r", inv.m_r},
          {"delta", inv.delta},       {"x_N", inv.x_n.get_str()}, {"x_c", std::move(x_c)}};
}

json to_json(const VerificationReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"kind", to_string(m.kind)}, {"what", m.what}, {"expected", m.expected}, {"got", m.got}});
  }
  return {{"id", r.entry_id},
          {"level", r.level},
          {"r", r.r_string},
          {"precision", r.precision},
          {"verified", r.verified()},
          {"l_tested", r.l_tested},
          {"eigen_l", r.eigen_l},
          {"eigen_checks", r.eigen_checks},
          {"dimension", r.dimension.get_str()},
          {"mismatches", std::move(mismatches)}};
}

}  // namespace etaq::cli
