#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "rankmc/bounds.hpp"

namespace rankmc {

inline constexpr const char* kToolVersion = "0.1.0";

/// "a,b;c,d": rows separated by ';', entries by ','. Entries use FieldTower::parse.
ExtMatrix parse_matrix(const FieldTower& f, const std::string& literal);
std::string format_matrix(const FieldTower& f, const ExtMatrix& g);

/// Builds a code from a construction spec:
///   poly:p^h:m:lambda=auto:t=1,2
///   lifted:p^h:m:sub=2:ell=1:t=1,2[:mu=auto]
///   gabidulin:p^h:m:n:k
///   redei:p^h:m
///   simplex:p^h:m:k
Code construct(const std::string& spec);

/// Canonical report: sorted keys, big integers as decimal strings.
nlohmann::json analyze_report(const Code& c, const std::string& description, const Classification& cl,
                              std::optional<double> timing_ms = {});

nlohmann::json to_json(const BoundReport& r);

/// dump(2) plus a trailing newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace rankmc
