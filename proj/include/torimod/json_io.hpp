#ifndef TORIMOD_JSON_IO_HPP
#define TORIMOD_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "torimod/degree.hpp"
#include "torimod/fan.hpp"
#include "torimod/qseries.hpp"

namespace torimod {

using Json = nlohmann::json;

Json cyc_to_json(const Cyclotomic& x);
Cyclotomic cyc_from_json(const Json& j);

Json qseries_to_json(const QSeries& f);
QSeries qseries_from_json(const Json& j);

// {"rank": r, "rays": [[...], ...], "max_cones": [[ray indices], ...]}
Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j);

// {"l": l, "values": [a_d per ray, ...]}
Json degree_to_json(const DegreeFunction& d);
DegreeFunction degree_from_json(Fan fan, const Json& j);

// e.g. "(1 - z5 + 2*z5^2)*q^3 + ..." with zL for zeta_L
std::string pretty_cyclotomic(const Cyclotomic& x);
std::string pretty_qseries(const QSeries& f);

}  // namespace torimod

#endif
