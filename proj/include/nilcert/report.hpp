#ifndef NILCERT_REPORT_HPP
#define NILCERT_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace nilcert {

// Insertion-ordered JSON keeps report bytes stable run to run.
using Json = nlohmann::ordered_json;

// Outcome of one certification sweep. Serialized with the frozen keys
// check / params / trials / violations / observed_min / pass (attainment
// added where the check reports it).
struct CertReport {
    std::string check;
    Json params = Json::object();
    std::size_t trials = 0;
    std::vector<Json> violations;
    Json observed_min = Json::object();
    Json attainment; // null unless the check reports attainment fractions

    bool pass() const { return violations.empty(); }
    Json to_json() const;
};

// One Riemann-Roch dimension comparison: the pinned-pole Hitchin base
// against the moduli-stack dimension.
struct DimensionBreakdown {
    long genus = 0;
    std::string kind;
    std::string flag;
    std::vector<long> degrees;
    std::vector<long> pole_orders;
    std::vector<long> h0_values;
    long total = 0;
    long bun_dim = 0;
    bool match = false;

    Json to_json() const;
};

} // namespace nilcert

#endif
