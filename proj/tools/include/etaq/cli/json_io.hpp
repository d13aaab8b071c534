#pragma once
// JSON schemas used by the CLI.
//
// QSeries:   {"offset_num": int, "offset_den": int, "precision": int, "coeffs": [decimal string, ...]}
// invariants: {"level", "r", "k", "pi", "pi_sf", "m_r", "delta", "x_N", "x_c": {"<c>": string}}
// report:    {"id", "level", "r", "precision", "verified", "l_tested", "eigen_l", "eigen_checks",
//             "dimension", "mismatches": [{"kind", "what", "expected", "got"}]}

#include <json.hpp>

#include "etaq/eta_quotient.hpp"
#include "etaq/qseries.hpp"
#include "etaq/verify.hpp"

namespace etaq::cli {

nlohmann::json to_json(const QSeries& f);
/// Throws ParseError on schema violations.
QSeries qseries_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EtaQuotient& e, const DerivedInvariants& inv);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace etaq::cli
