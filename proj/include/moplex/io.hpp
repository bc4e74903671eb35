#ifndef MOPLEX_IO_HPP
#define MOPLEX_IO_HPP

#include <string>

#include "moplex/driver.hpp"
#include "moplex/model.hpp"

namespace moplex {

/// Parses an instance document (JSON, format_version "1") into a validated
/// Problem. Unknown and missing fields are rejected. Infinite bounds are
/// encoded as the strings "inf" / "-inf".
Problem parse_instance(const std::string& text);

/// Inverse of parse_instance; reals rendered with 17 significant digits so
/// the round trip is exact.
std::string serialize_instance(const Problem& p, const std::string& name);

enum class ResultFormat { Json, Csv };

/// JSON: {status, stats, points:[{x: name -> value, y: [..]}]}. CSV: header
/// y1..yo,x_<name>... plus one row per point. Point order follows the
/// ResultSet; reals rendered with 17 significant digits.
std::string write_results(const ResultSet& r, ResultFormat format);

} // namespace moplex

#endif
