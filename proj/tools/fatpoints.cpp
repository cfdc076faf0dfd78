#include "fatpoints/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace fatpoints;
using nlohmann::json;

namespace {

struct SystemOpts {
    Int degree = 0;
    Int m0 = 0;
    Int mult = 0;
    Int count = 0;
    std::string mults_csv;
    bool qh_form = false;
    bool csv_form = false;
};

void add_system_options(CLI::App* cmd, SystemOpts& s) {
    cmd->add_option("--degree,-d", s.degree, "Degree of the system")->required();
    auto* m0 = cmd->add_option("--m0", s.m0, "Multiplicity of the special point");
    auto* mult = cmd->add_option("--mult,-m", s.mult, "Multiplicity of the general points");
    auto* count = cmd->add_option("--count,-r", s.count, "Number of general points");
    auto* csv = cmd->add_option("--mults", s.mults_csv,
                                "Explicit comma-separated multiplicity list");
    csv->excludes(m0)->excludes(mult)->excludes(count);
    cmd->callback([&s, m0, mult, count, csv] {
        s.qh_form = m0->count() || mult->count() || count->count();
        s.csv_form = csv->count() > 0;
    });
}

DivisorClass system_class(const SystemOpts& s) {
    if (s.csv_form) {
        DivisorClass L{s.degree, {}};
        std::stringstream ss(s.mults_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            L.mults.push_back(std::stoll(tok));
        }
        return L;
    }
    if (s.qh_form) return QuasiHomSystem{s.degree, s.m0, s.mult, s.count}.to_divisor();
    return {s.degree, {}};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CLI::ValidationError("--out", "cannot open " + out_path);
    out << text;
    std::cout << "report written to " << out_path << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fatpoints: dimensions of plane linear systems with multiple base points"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string out_path;
    std::uint64_t prime = kDefaultPrime;
    int trials = 3;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        if (with_format)
            cmd->add_option("--format", format, "Output format")
                ->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--out", out_path, "Write the report to this path");
    };
    auto add_oracle_opts = [&](CLI::App* cmd) {
        cmd->add_option("--prime", prime, "Prime modulus for the rank oracle")
            ->envname("FATPOINTS_PRIME");
        cmd->add_option("--trials", trials, "Rank trials per system");
        cmd->add_option("--seed", seed, "Oracle seed")->envname("FATPOINTS_SEED");
    };

    // dim -----------------------------------------------------------------
    auto* dim_cmd = app.add_subcommand("dim", "Virtual/expected/conjectured dimension");
    SystemOpts dim_sys;
    add_system_options(dim_cmd, dim_sys);
    bool with_oracle = false;
    dim_cmd->add_flag("--oracle", with_oracle, "Also run the rank oracle");
    add_common(dim_cmd);
    add_oracle_opts(dim_cmd);

    // scan ----------------------------------------------------------------
    auto* scan_cmd = app.add_subcommand("scan", "Scan for special quasi-homogeneous systems");
    Int scan_m = 5, scan_dmax = 20, scan_rmax = 10;
    scan_cmd->add_option("--mult,-m", scan_m, "Multiplicity of the general points")->required();
    scan_cmd->add_option("--dmax", scan_dmax, "Largest degree")->required();
    scan_cmd->add_option("--rmax", scan_rmax, "Largest point count")->required();
    add_common(scan_cmd);

    // curves --------------------------------------------------------------
    auto* curves_cmd = app.add_subcommand("curves", "(-1)-curve catalog and enumeration");
    Int curves_m = 0;
    curves_cmd->add_option("--mult,-m", curves_m,
                           "Enumerate quasi-homogeneous (-1)-curves of this multiplicity (>= 2)");
    add_common(curves_cmd);

    // degenerate ----------------------------------------------------------
    auto* deg_cmd = app.add_subcommand("degenerate", "One (k,b)-degeneration");
    SystemOpts deg_sys;
    Int deg_k = 1, deg_b = 0;
    deg_cmd->add_option("--degree,-d", deg_sys.degree, "Degree")->required();
    deg_cmd->add_option("--m0", deg_sys.m0, "Multiplicity of the special point");
    deg_cmd->add_option("--mult,-m", deg_sys.mult, "Multiplicity of the general points")
        ->default_val(5);
    deg_cmd->add_option("--count,-r", deg_sys.count, "Number of general points")->required();
    deg_cmd->add_option("--k", deg_k, "Degeneration parameter k")->required();
    deg_cmd->add_option("--b", deg_b, "Points moved to the Hirzebruch part")->required();
    add_common(deg_cmd);

    // oracle --------------------------------------------------------------
    auto* oracle_cmd = app.add_subcommand("oracle", "Rank of the conditions matrix mod p");
    SystemOpts oracle_sys;
    add_system_options(oracle_cmd, oracle_sys);
    add_common(oracle_cmd);
    add_oracle_opts(oracle_cmd);

    // verify --------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "Degeneration sweep against the fixture");
    VerifyConfig vcfg;
    verify_cmd->add_option("--dmin", vcfg.d_min, "Smallest degree (>= 8)")->required();
    verify_cmd->add_option("--dmax", vcfg.d_max, "Largest degree")->required();
    verify_cmd->add_option("--threads", vcfg.threads, "Worker threads");
    verify_cmd->add_flag("--oracle-exceptional,!--skip-oracle", vcfg.oracle_exceptional,
                         "Oracle-check every exceptional system (default on)");
    verify_cmd->add_option("--prime", vcfg.prime, "Prime modulus")->envname("FATPOINTS_PRIME");
    verify_cmd->add_option("--trials", vcfg.trials, "Rank trials per system");
    verify_cmd->add_option("--seed", vcfg.seed, "Oracle seed")->envname("FATPOINTS_SEED");
    add_common(verify_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*dim_cmd) {
            const DivisorClass L = system_class(dim_sys);
            DimensionReport rep;
            rep.virt = virtual_dim(L);
            rep.expected = expected_dim(L);
            rep.conjectured = conjectured_dim(L).conjectured;
            if (with_oracle) rep.oracle = oracle_dim(L, prime, trials, seed);
            rep.special = rep.conjectured > rep.expected;
            if (format == "json") {
                emit(dump_report(json_dimension_report(L.str(), rep)), out_path);
            } else {
                std::ostringstream os;
                os << L.str() << "\n"
                   << "  virtual:     " << rep.virt << "\n"
                   << "  expected:    " << rep.expected << "\n"
                   << "  conjectured: " << rep.conjectured << "\n";
                if (rep.oracle) os << "  oracle:      " << *rep.oracle << "\n";
                os << "  special:     " << (rep.special ? "yes" : "no") << "\n";
                emit(os.str(), out_path);
            }
            return 0;
        }

        if (*scan_cmd) {
            auto recs = scan_special(scan_m, scan_dmax, scan_rmax);
            if (format == "json") {
                emit(dump_report(json_scan(scan_m, scan_dmax, scan_rmax, recs)), out_path);
            } else if (format == "csv") {
                emit(scan_csv(recs), out_path);
            } else {
                std::ostringstream os;
                os << recs.size() << " special systems\n";
                for (const auto& r : recs)
                    os << "  " << r.system.str() << "  v=" << r.virt
                       << " l=" << r.conjectured << "  [" << r.family << "]\n";
                emit(os.str(), out_path);
            }
            return 0;
        }

        if (*curves_cmd) {
            std::vector<QuasiHomSystem> rows;
            if (curves_cmd->count("--mult")) rows = enumerate_qh_curves(curves_m);
            if (format == "json") {
                emit(dump_report(json_curves(curves_m, rows)), out_path);
            } else {
                std::ostringstream os;
                os << "catalog:\n";
                for (const auto& row : table1_catalog()) {
                    os << "  " << row.base.label;
                    if (row.compound) os << "  (compound " << row.compound->label << ")";
                    os << "\n";
                }
                if (curves_cmd->count("--mult")) {
                    os << "multiplicity " << curves_m << ":\n";
                    for (const auto& sys : rows) os << "  " << sys.str() << "\n";
                }
                emit(os.str(), out_path);
            }
            return 0;
        }

        if (*deg_cmd) {
            const QuasiHomSystem parent{deg_sys.degree, deg_sys.m0, deg_sys.mult,
                                        deg_sys.count};
            auto s = split(parent, deg_k, deg_b);
            auto cert = certify(s);
            if (format == "json") {
                emit(dump_report(json_split(s, cert)), out_path);
            } else {
                std::ostringstream os;
                os << parent.str() << "  (k=" << deg_k << ", b=" << deg_b << ")\n"
                   << "  LP    = " << s.LP.str() << "   l=" << s.dims.lP << "\n"
                   << "  LF    = " << s.LF.str() << "   l=" << s.dims.lF << "\n"
                   << "  LPhat = " << s.LPhat.str() << "   l=" << s.dims.lhatP << "\n"
                   << "  LFhat = " << s.LFhat.str() << "   l=" << s.dims.lhatF << "\n"
                   << "  l0 = " << s.dims.l0 << "\n";
                const char* kind = cert.kind == Certificate::Kind::Empty5Cose
                                       ? "Empty5Cose"
                                       : (cert.kind == Certificate::Kind::NonspecialClaim
                                              ? "NonspecialClaim"
                                              : "Inconclusive");
                os << "  certificate: " << kind << "\n";
                emit(os.str(), out_path);
            }
            return 0;
        }

        if (*oracle_cmd) {
            const DivisorClass L = system_class(oracle_sys);
            const Int dim = oracle_dim(L, prime, trials, seed);
            const Int cols = L.degree >= 0 ? (L.degree + 1) * (L.degree + 2) / 2 : 0;
            json j{{"system", L.str()},
                   {"prime", prime},
                   {"trials", trials},
                   {"seed", seed},
                   {"rank", cols - 1 - dim},
                   {"dim", dim},
                   {"note", "rank is maximal at generic points; the reported "
                            "dimension is the minimum over trials"}};
            emit(dump_report(j), out_path);
            return 0;
        }

        if (*verify_cmd) {
            auto out = verify_run(vcfg);
            emit(dump_report(json_verify(vcfg, out)), out_path);
            return out.exit_code;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
