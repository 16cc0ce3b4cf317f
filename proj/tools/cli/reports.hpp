#pragma once

#include <complex>
#include "json.hpp"
#include <string>

#include "heunlie/heunlie.hpp"

namespace heunlie::reports {

using Json = nlohmann::ordered_json;

inline Json exact(const CRat& z) { return z.str(); }
inline Json exact(const Rational& r) { return r.get_str(); }
inline Json number(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }
Json surd(const Surd& s);

Json params(const HeunParams& p);
Json discrepancies(const DiscrepancyReport& r);
Json spectrum(const Spectrum& s);
Json matrix(const ExactMatrix& m);

/// Fixed set of (j, p) draws whose UEA-form discrepancy tables are kept as
/// a golden file.
Json theorem1_golden_table();

/// "path: value" lines with the values aligned in one column.
std::string to_text(const Json& doc);

}  // namespace heunlie::reports
