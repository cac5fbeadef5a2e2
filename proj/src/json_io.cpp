#include "ovalis/json_io.hpp"

#include <stdexcept>
#include <string>

namespace ovalis {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string quarters_to_fraction(std::int64_t q) {
    if (q % 4 == 0) return std::to_string(q / 4);
    if (q % 2 == 0) return std::to_string(q / 2) + "/2";
    return std::to_string(q) + "/4";
}

const json& require_field(const json& j, const char* key) {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return *it;
}

std::int64_t require_int(const json& j, const char* key) {
    const json& v = require_field(j, key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("field \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

std::vector<int> int_row(const json& row, const char* what) {
    if (!row.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(row.size());
    for (const json& e : row) {
        if (!e.is_number_integer())
            throw std::invalid_argument(std::string(what) + " entries must be integers");
        out.push_back(e.get<int>());
    }
    return out;
}

}  // namespace

QuadraticForm form_from_json(const json& j) {
    const std::int64_t dim = require_int(j, "dim");
    if (dim < 0) throw std::invalid_argument("dim must be nonnegative");
    const json& pairing_json = require_field(j, "pairing");
    if (!pairing_json.is_array()) throw std::invalid_argument("pairing must be an array of rows");
    if (static_cast<std::int64_t>(pairing_json.size()) != dim)
        throw std::invalid_argument("pairing has " + std::to_string(pairing_json.size()) +
                                    " rows but dim is " + std::to_string(dim));
    std::vector<std::vector<int>> pairing;
    pairing.reserve(pairing_json.size());
    for (const json& row : pairing_json) pairing.push_back(int_row(row, "pairing row"));
    const std::vector<int> q = int_row(require_field(j, "q"), "q");
    return {pairing, q};
}

ordered_json form_to_json(const QuadraticForm& f) {
    ordered_json j;
    j["dim"] = f.dim();
    auto pairing = ordered_json::array();
    for (std::size_t i = 0; i < f.dim(); ++i) {
        auto row = ordered_json::array();
        for (std::size_t k = 0; k < f.dim(); ++k) row.push_back(f.pair(i, k) ? 1 : 0);
        pairing.push_back(std::move(row));
    }
    j["pairing"] = std::move(pairing);
    auto q = ordered_json::array();
    for (std::size_t i = 0; i < f.dim(); ++i) q.push_back(static_cast<int>(f.q(i)));
    j["q"] = std::move(q);
    return j;
}

SurfaceData surface_from_json(const json& j) {
    SurfaceData d;
    d.form = form_from_json(require_field(j, "form"));
    if (!is_proper_form(d.form))
        throw std::invalid_argument("form is not proper (q does not vanish on the radical)");
    d.mu_quarters = require_int(j, "mu_quarters");
    const std::int64_t gamma = require_int(j, "gamma");
    if (gamma < 0 || gamma > 3) throw std::invalid_argument("gamma must lie in 0..3");
    d.gamma = H1Class(static_cast<int>(gamma));
    const json& r = require_field(j, "r");
    if (r == "-1/8")
        d.r = Refinement::MinusEighth;
    else if (r == "3/8")
        d.r = Refinement::ThreeEighths;
    else
        throw std::invalid_argument("r must be \"-1/8\" or \"3/8\"");
    return d;
}

ordered_json surface_to_json(const SurfaceData& d) {
    ordered_json j;
    j["form"] = form_to_json(d.form);
    j["mu_quarters"] = d.mu_quarters;
    j["gamma"] = d.gamma.v;
    j["r"] = refinement_name(d.r);
    return j;
}

ordered_json report_to_json(const VerdictReport& r) {
    ordered_json j;
    j["degree"] = r.degree;
    j["scheme"] = r.scheme;
    auto results = ordered_json::array();
    for (const CheckResult& c : r.results) {
        ordered_json e;
        e["name"] = c.name;
        e["applicable"] = c.applicable;
        e["passed"] = c.applicable ? ordered_json(c.passed) : ordered_json(nullptr);
        e["details"] = c.details;
        results.push_back(std::move(e));
    }
    j["results"] = std::move(results);
    j["verdict"] = verdict_name(r.verdict);
    return j;
}

ordered_json stats_report_json(const Scheme& s) {
    const SchemeStats st = stats(s);
    const Scheme reduced = reduce_weak(s);

    ordered_json j;
    j["scheme"] = serialize(canonicalize(s));
    j["ovals"] = st.ovals;
    j["p"] = st.p;
    j["n"] = st.n;
    j["components"] = st.components;
    j["double_points"] = st.double_points;
    j["signed"] = st.oriented.has_value();
    if (st.oriented) {
        j["pi_plus"] = st.oriented->pi_plus;
        j["pi_minus"] = st.oriented->pi_minus;
        j["d"] = st.oriented->d;
        j["d_plus"] = st.oriented->d_plus;
        j["d_minus"] = st.oriented->d_minus;
        const std::int64_t mu = mu_simple_quarters(reduced);
        j["mu_quarters"] = mu;
        j["mu"] = quarters_to_fraction(mu);
    } else {
        j["pi_plus"] = nullptr;
        j["pi_minus"] = nullptr;
        j["d"] = nullptr;
        j["d_plus"] = nullptr;
        j["d_minus"] = nullptr;
        j["mu_quarters"] = nullptr;
        j["mu"] = nullptr;
    }
    j["odd_curve"] = is_odd_curve(reduced);
    j["even_curve"] = is_even_curve(reduced);
    j["bplus_parities"] = euler_parities_bplus(reduced);
    j["bminus_parities"] = euler_parities_bminus(reduced);
    return j;
}

}  // namespace ovalis
