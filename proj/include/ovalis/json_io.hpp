#ifndef OVALIS_JSON_IO_HPP
#define OVALIS_JSON_IO_HPP

#include <json.hpp>

#include "ovalis/arf.hpp"
#include "ovalis/prohibit.hpp"
#include "ovalis/quadratic_form.hpp"
#include "ovalis/scheme.hpp"

namespace ovalis {

// Form files: {"dim": n, "pairing": [[0|1, ...], ...], "q": [0..3, ...]}.
// Violations of symmetry or the diagonal-parity rule are rejected with a
// descriptive std::invalid_argument.
QuadraticForm form_from_json(const nlohmann::json& j);
nlohmann::ordered_json form_to_json(const QuadraticForm& f);

// Surface files: {"form": <form>, "mu_quarters": int, "gamma": 0..3,
// "r": "-1/8" | "3/8"}.  The form must be proper.
SurfaceData surface_from_json(const nlohmann::json& j);
nlohmann::ordered_json surface_to_json(const SurfaceData& d);

nlohmann::ordered_json report_to_json(const VerdictReport& r);

// Scheme statistics plus classifications; classification fields are computed
// on the figure-eight-reduced scheme, orientation-dependent fields are null
// when some oval is unsigned.
nlohmann::ordered_json stats_report_json(const Scheme& s);

}  // namespace ovalis

#endif
