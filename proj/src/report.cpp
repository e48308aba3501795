#include <nilcert/report.hpp>

namespace nilcert {

Json CertReport::to_json() const {
    Json j;
    j["check"] = check;
    j["params"] = params;
    j["trials"] = trials;
    j["violations"] = violations;
    j["observed_min"] = observed_min;
    if (!attainment.is_null())
        j["attainment"] = attainment;
    j["pass"] = pass();
    return j;
}

Json DimensionBreakdown::to_json() const {
    Json j;
    j["check"] = "dim-match";
    j["genus"] = genus;
    j["kind"] = kind;
    j["flag"] = flag;
    Json summands = Json::array();
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        Json s;
        s["degree"] = degrees[i];
        s["pole_order"] = pole_orders[i];
        s["h0"] = h0_values[i];
        summands.push_back(s);
    }
    j["summands"] = summands;
    j["total"] = total;
    j["bun_dim"] = bun_dim;
    j["match"] = match;
    j["pass"] = match;
    return j;
}

} // namespace nilcert
