#include <nilcert/cli.hpp>

#include <nilcert/certify.hpp>
#include <nilcert/liealg.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

namespace nilcert {

namespace {

// --- sweep helpers (the suite pieces that are not single library calls) ----

CertReport identity_sweep(long max_size) {
    CertReport report;
    report.check = "identity-sweep";
    report.params = {{"max_size", max_size}};
    for (long m = 0; m <= max_size; ++m)
        for_each_partition(m, PartitionFilter::all, [&](const Partition &mu) {
            ++report.trials;
            const auto [lhs, rhs] = lemma3_sides(mu);
            if (lhs != rhs)
                report.violations.push_back({{"identity", "lemma3"},
                                             {"partition", mu.str()},
                                             {"lhs", lhs},
                                             {"rhs", rhs}});
        });
    for (long total = 0; total <= max_size; total += 2)
        for_each_partition(total, PartitionFilter::symplectic, [&](const Partition &mu) {
            ++report.trials;
            const auto [lhs, rhs] = cor3_sides(mu);
            if (lhs != rhs)
                report.violations.push_back({{"identity", "cor3"},
                                             {"partition", mu.str()},
                                             {"lhs", to_string(lhs)},
                                             {"rhs", to_string(rhs)}});
        });
    return report;
}

Json so5_report() {
    const So5Remark r = so5_remark_check();
    Json j;
    j["check"] = "so5-remark";
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["equal"] = r.equal;
    // the expected outcome IS the inequality with these two values
    j["pass"] = (r.lhs == 3 && r.rhs == 4 && !r.equal);
    return j;
}

Json dual_lattice_report(const FlagSpec &flag, std::int64_t precision) {
    const DualLatticeCheck check = check_dual_lattice(flag, precision);
    CertReport report;
    report.check = "dual-lattice";
    report.params = {{"flag", flag.str()}, {"precision", precision}};
    report.trials = check.inclusion_pairs + check.maximality_directions;
    for (const PairingViolation &v : check.violations)
        report.violations.push_back({{"part", v.part}, {"detail", v.detail}});
    return report.to_json();
}

CertReport jordan_roundtrip_sweep(long max_size) {
    CertReport report;
    report.check = "jordan-roundtrip";
    report.params = {{"max_size", max_size}};
    for (long m = 1; m <= max_size; ++m)
        for_each_partition(m, PartitionFilter::all, [&](const Partition &mu) {
            ++report.trials;
            const Partition back = jordan_type(jordan_nilpotent(mu));
            if (back != mu)
                report.violations.push_back(
                    {{"partition", mu.str()}, {"observed", back.str()}});
        });
    return report;
}

CertReport centralizer_sweep(long sp_max, long so_max) {
    CertReport report;
    report.check = "centralizer-cross";
    report.params = {{"sp_max", sp_max}, {"so_max", so_max}};
    const auto compare = [&](const AlgebraKind &kind, const Partition &mu,
                             AlgebraFamily formula_kind) {
        ++report.trials;
        const RationalMatrix e = classical_nilpotent(kind, mu);
        const long oracle = centralizer_dim_oracle(kind, e);
        const long formula = centralizer_dim_formula(mu, formula_kind);
        if (oracle != formula)
            report.violations.push_back({{"kind", kind.str()},
                                         {"partition", mu.str()},
                                         {"oracle", oracle},
                                         {"formula", formula}});
    };
    for (long m = 2; m <= sp_max; m += 2)
        for_each_partition(m, PartitionFilter::symplectic, [&](const Partition &mu) {
            compare(AlgebraKind::sp(static_cast<std::size_t>(m)), mu, AlgebraFamily::sp);
        });
    for (long m = 1; m <= so_max; ++m)
        for_each_partition(m, PartitionFilter::orthogonal, [&](const Partition &mu) {
            compare(AlgebraKind::so(static_cast<std::size_t>(m)), mu, AlgebraFamily::so);
        });
    return report;
}

void all_compositions(std::size_t m, std::vector<std::vector<std::size_t>> &out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t first = 1; first <= rest; ++first) {
            cur.push_back(first);
            rec(rest - first);
            cur.pop_back();
        }
    };
    rec(m);
}

void all_isotropic_flags(std::size_t n, std::vector<std::vector<std::size_t>> &out) {
    // nonempty subsets of {1..n}, as increasing dimension lists
    for (std::size_t mask = 1; mask < (1ULL << n); ++mask) {
        std::vector<std::size_t> dims;
        for (std::size_t d = 1; d <= n; ++d)
            if (mask & (1ULL << (d - 1)))
                dims.push_back(d);
        out.push_back(std::move(dims));
    }
}

CertReport richardson_gl_sweep(long max_size, std::size_t trials, long bound,
                               std::uint64_t seed) {
    CertReport report;
    report.check = "richardson-gl";
    report.params = {{"max_size", max_size},
                     {"trials", trials},
                     {"bound", bound},
                     {"seed", seed}};
    for (std::size_t m = 1; m <= static_cast<std::size_t>(max_size); ++m) {
        std::vector<std::vector<std::size_t>> comps;
        all_compositions(m, comps);
        for (const auto &blocks : comps) {
            ++report.trials;
            const FlagSpec flag{AlgebraKind::gl(m), blocks};
            const Partition expected = gl_richardson_closed_form(blocks);
            const RichardsonResult got =
                richardson_partition(flag, trials, bound, seed);
            if (got.partition != expected)
                report.violations.push_back({{"flag", flag.str()},
                                             {"expected", expected.str()},
                                             {"observed", got.partition.str()}});
        }
    }
    return report;
}

Json dim_match_sweep(std::uint64_t seed) {
    Json wrapper;
    wrapper["check"] = "dim-match-sweep";
    Json reports = Json::array();
    bool all = true;
    for (std::size_t m = 2; m <= 5; ++m)
        for (long g = 2; g <= 5; ++g) {
            const DimensionBreakdown b =
                dim_match(g, FlagSpec::full_flag(AlgebraKind::sl(m)), seed);
            all = all && b.match;
            reports.push_back(b.to_json());
        }
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<std::vector<std::size_t>> flags;
        all_isotropic_flags(n, flags);
        for (const auto &dims : flags)
            for (long g = 2; g <= 3; ++g) {
                const DimensionBreakdown b =
                    dim_match(g, FlagSpec{AlgebraKind::sp(2 * n), dims}, seed);
                all = all && b.match;
                reports.push_back(b.to_json());
            }
    }
    wrapper["reports"] = reports;
    wrapper["pass"] = all;
    return wrapper;
}

Json jet_sweep(std::size_t trials, long bound, std::int64_t precision,
               std::uint64_t seed) {
    Json wrapper;
    wrapper["check"] = "jet-check";
    wrapper["params"] = {{"trials", trials},
                         {"bound", bound},
                         {"precision", precision},
                         {"seed", seed}};
    Json reports = Json::array();
    bool all = true;
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t j = 1; j <= m; ++j)
            for (std::int64_t k = 0; k <= 6; ++k) {
                const CertReport r =
                    jet_dependence_check(m, j, k, trials, bound, precision, seed);
                all = all && r.pass();
                reports.push_back(r.to_json());
            }
    wrapper["reports"] = reports;
    wrapper["pass"] = all;
    return wrapper;
}

Json prop2_sweep(long max_size, std::size_t trials, long bound,
                 std::int64_t precision, std::uint64_t seed) {
    Json wrapper;
    wrapper["check"] = "prop2-sweep";
    wrapper["params"] = {{"max_size", max_size},
                         {"trials", trials},
                         {"bound", bound},
                         {"precision", precision},
                         {"seed", seed}};
    Json reports = Json::array();
    bool all = true;
    for (long m = 1; m <= max_size; ++m)
        for_each_partition(m, PartitionFilter::all, [&](const Partition &mu) {
            const CertReport r = prop2_certify(mu, trials, bound, precision, seed);
            all = all && r.pass();
            reports.push_back(r.to_json());
        });
    wrapper["reports"] = reports;
    wrapper["pass"] = all;
    return wrapper;
}

Json lemma4_sweep(std::size_t max_rank, std::size_t trials, long bound,
                  std::int64_t precision, std::uint64_t seed) {
    Json wrapper;
    wrapper["check"] = "lemma4-sweep";
    wrapper["params"] = {{"max_rank", max_rank},
                         {"trials", trials},
                         {"bound", bound},
                         {"precision", precision},
                         {"seed", seed}};
    Json reports = Json::array();
    bool all = true;
    for (std::size_t n = 1; n <= max_rank; ++n) {
        std::vector<std::vector<std::size_t>> flags;
        all_isotropic_flags(n, flags);
        for (const auto &dims : flags) {
            const FlagSpec flag{AlgebraKind::sp(2 * n), dims};
            const CertReport r = lemma4_certify(flag, trials, bound, precision, seed);
            all = all && r.pass();
            reports.push_back(r.to_json());
        }
    }
    wrapper["reports"] = reports;
    wrapper["pass"] = all;
    return wrapper;
}

Json richardson_report(const FlagSpec &flag, std::size_t trials, long bound,
                       std::uint64_t seed) {
    Json j;
    j["check"] = "richardson";
    j["params"] = {{"flag", flag.str()},
                   {"trials", trials},
                   {"bound", bound},
                   {"seed", seed}};
    const RichardsonResult r = richardson_partition(flag, trials, bound, seed);
    j["partition"] = r.partition.str();
    Json observed = Json::array();
    for (const Partition &q : r.observed)
        observed.push_back(q.str());
    j["observed"] = observed;
    j["pass"] = true;
    return j;
}

Json dual_lattice_suite(std::int64_t precision) {
    Json wrapper;
    wrapper["check"] = "dual-lattice-sweep";
    wrapper["params"] = {{"precision", precision}};
    Json reports = Json::array();
    bool all = true;
    for (std::size_t m = 1; m <= 4; ++m) {
        std::vector<std::vector<std::size_t>> comps;
        all_compositions(m, comps);
        for (const auto &blocks : comps) {
            const Json r =
                dual_lattice_report(FlagSpec{AlgebraKind::gl(m), blocks}, precision);
            all = all && r["pass"].get<bool>();
            reports.push_back(r);
        }
    }
    for (std::size_t n = 2; n <= 3; ++n) {
        std::vector<std::vector<std::size_t>> flags;
        all_isotropic_flags(n, flags);
        for (const auto &dims : flags) {
            const Json r =
                dual_lattice_report(FlagSpec{AlgebraKind::sp(2 * n), dims}, precision);
            all = all && r["pass"].get<bool>();
            reports.push_back(r);
        }
    }
    wrapper["reports"] = reports;
    wrapper["pass"] = all;
    return wrapper;
}

FlagSpec flag_for_dim_match(const RunConfig &cfg) {
    if (!cfg.flag.empty())
        return FlagSpec::parse(cfg.flag);
    if (cfg.kind == "sl") {
        if (cfg.size < 2)
            throw std::invalid_argument("dim-match --kind sl requires --m >= 2");
        return FlagSpec::full_flag(AlgebraKind::sl(static_cast<std::size_t>(cfg.size)));
    }
    if (cfg.kind == "sp") {
        if (cfg.rank < 1)
            throw std::invalid_argument("dim-match --kind sp requires --n >= 1");
        return FlagSpec::full_flag(AlgebraKind::sp(2 * static_cast<std::size_t>(cfg.rank)));
    }
    throw std::invalid_argument("dim-match needs --flag or --kind sl|sp: got '" +
                                cfg.kind + "'");
}

// --- output ----------------------------------------------------------------

void render_text(const Json &j, std::ostream &out, int depth = 0) {
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    const bool pass = j.contains("pass") && j["pass"].is_boolean() && j["pass"].get<bool>();
    out << indent << (pass ? "PASS" : "FAIL") << "  "
        << (j.contains("check") ? j["check"].get<std::string>() : "?");
    if (j.contains("params"))
        out << "  " << j["params"].dump();
    if (j.contains("trials"))
        out << "  cases=" << j["trials"];
    if (j.contains("lhs"))
        out << "  lhs=" << j["lhs"] << " rhs=" << j["rhs"] << " equal=" << j["equal"];
    if (j.contains("total"))
        out << "  hitchin_base=" << j["total"] << " bun=" << j["bun_dim"];
    if (j.contains("partition"))
        out << "  partition=" << j["partition"];
    out << "\n";
    if (j.contains("violations"))
        for (const auto &v : j["violations"])
            out << indent << "  violation: " << v.dump() << "\n";
    if (j.contains("reports"))
        for (const auto &r : j["reports"])
            render_text(r, out, depth + 1);
}

void emit(const Json &j, const RunConfig &cfg, std::ostream &out) {
    if (cfg.format == "text")
        render_text(j, out);
    else
        out << j.dump(2) << "\n";
}

bool report_passes(const Json &j) {
    return j.contains("pass") && j["pass"].is_boolean() && j["pass"].get<bool>();
}

} // namespace

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        Json report;
        if (cfg.subcommand == "identity-sweep") {
            report = identity_sweep(cfg.max_size).to_json();
        } else if (cfg.subcommand == "so5-remark") {
            report = so5_report();
        } else if (cfg.subcommand == "certify-prop2") {
            const Partition mu = Partition::parse(cfg.partition);
            report =
                prop2_certify(mu, cfg.trials, cfg.bound, cfg.precision, cfg.seed).to_json();
        } else if (cfg.subcommand == "certify-lemma4") {
            const FlagSpec flag = FlagSpec::parse(cfg.flag);
            report =
                lemma4_certify(flag, cfg.trials, cfg.bound, cfg.precision, cfg.seed)
                    .to_json();
        } else if (cfg.subcommand == "dual-lattice") {
            report = dual_lattice_report(FlagSpec::parse(cfg.flag), cfg.precision);
        } else if (cfg.subcommand == "jet-check") {
            if (cfg.jet_m > 0) {
                const long j = cfg.jet_j > 0 ? cfg.jet_j : cfg.jet_m;
                const long k = cfg.jet_k >= 0 ? cfg.jet_k : 4;
                report = jet_dependence_check(static_cast<std::size_t>(cfg.jet_m),
                                              static_cast<std::size_t>(j), k, cfg.trials,
                                              cfg.bound, cfg.precision, cfg.seed)
                             .to_json();
            } else {
                report = jet_sweep(cfg.trials, cfg.bound, cfg.precision, cfg.seed);
            }
        } else if (cfg.subcommand == "richardson") {
            const FlagSpec flag = FlagSpec::parse(cfg.flag);
            report = richardson_report(flag, cfg.trials, cfg.bound, cfg.seed);
        } else if (cfg.subcommand == "dim-match") {
            const FlagSpec flag = flag_for_dim_match(cfg);
            report = dim_match(cfg.genus, flag, cfg.seed, cfg.pole_override).to_json();
            if (cfg.pole_override >= 0) {
                // coarse uniform-C target space: report, do not assert
                report["pass"] = true;
            }
        } else if (cfg.subcommand == "suite") {
            Json reports = Json::array();
            reports.push_back(identity_sweep(cfg.max_size).to_json());
            reports.push_back(so5_report());
            reports.push_back(jordan_roundtrip_sweep(10).to_json());
            reports.push_back(centralizer_sweep(8, 7).to_json());
            reports.push_back(dual_lattice_suite(cfg.precision));
            reports.push_back(richardson_gl_sweep(5, 25, cfg.bound, cfg.seed).to_json());
            reports.push_back(dim_match_sweep(cfg.seed));
            reports.push_back(jet_sweep(50, cfg.bound, cfg.precision, cfg.seed));
            reports.push_back(prop2_sweep(6, cfg.trials, cfg.bound, cfg.precision, cfg.seed));
            reports.push_back(
                lemma4_sweep(3, cfg.trials, cfg.bound, cfg.precision, cfg.seed));
            bool all = true;
            for (const auto &r : reports)
                all = all && report_passes(r);
            report = Json();
            report["check"] = "suite";
            report["params"] = {{"trials", cfg.trials},
                                {"seed", cfg.seed},
                                {"precision", cfg.precision},
                                {"bound", cfg.bound},
                                {"max_size", cfg.max_size}};
            report["reports"] = reports;
            report["pass"] = all;
        } else {
            err << "unknown subcommand: '" << cfg.subcommand << "'\n";
            return 2;
        }
        emit(report, cfg, out);
        return report_passes(report) ? 0 : 1;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    }
}

CapturedRun run_captured(const RunConfig &cfg) {
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

} // namespace nilcert
