// swcalc: command-line front end for the exact Seiberg-Witten lattice and
// multiplicity calculators. All numeric output is exact (integers or reduced
// fractions); the machine format is line-oriented key=value records.

#include "sw/basic_classes.hpp"
#include "sw/elliptic.hpp"
#include "sw/io.hpp"
#include "sw/lattice.hpp"
#include "sw/numeric.hpp"
#include "sw/series.hpp"
#include "sw/surface.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct RunConfig {
    bool machine = false;          // --format machine|table
    std::string input_path = "-";  // document path, "-" = stdin
};

json load_document(const RunConfig& cfg) {
    if (cfg.input_path == "-") return sw::parse_document(std::cin, "stdin");
    std::ifstream in(cfg.input_path);
    if (!in) throw sw::parse_error("cannot open input file " + cfg.input_path);
    return sw::parse_document(in, cfg.input_path);
}

struct SurfaceFlags {
    long pg = 0, q = 0, kmin_sq = 0, torsion = 0, nexc = 0;

    sw::SurfaceInvariants invariants() const {
        return {pg, q, kmin_sq, torsion, nexc};
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--pg", pg, "geometric genus p_g")->required();
        cmd->add_option("--q", q, "irregularity q");
        cmd->add_option("--kmin-sq", kmin_sq, "self-intersection of K_min");
        cmd->add_option("--torsion", torsion,
                        "torsion order of K_min (0 = not torsion)");
        cmd->add_option("--nexc", nexc, "number of (-1)-curves");
    }
};

void emit(const RunConfig& cfg, const std::string& key,
          const std::string& value) {
    if (cfg.machine)
        std::cout << key << "=" << value << "\n";
    else
        std::cout << value << "\n";
}

std::string coords_str(const sw::LatticeVector& v, bool machine) {
    std::ostringstream out;
    if (!machine) out << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << (machine ? "," : ", ");
        out << sw::rational_str(v[i]);
    }
    if (!machine) out << ")";
    return out.str();
}

void run_surface_info(const RunConfig& cfg, const SurfaceFlags& flags) {
    sw::DerivedInvariants d = sw::derive(flags.invariants());
    const char* sep = cfg.machine ? "=" : " = ";
    std::cout << "chi" << sep << d.chi << "\n"
              << "kx_sq" << sep << d.kx_sq << "\n"
              << "e" << sep << d.e << "\n"
              << "sigma" << sep << d.sigma << "\n"
              << "b1" << sep << d.b1 << "\n"
              << "b2" << sep << d.b2 << "\n"
              << "b_plus" << sep << d.b_plus << "\n"
              << "b_minus" << sep << d.b_minus << "\n";
}

void run_selftest(const RunConfig& cfg, long chi_max, long g_max, long d_max) {
    long cases = 0, failures = 0;
    for (long chi = 0; chi <= chi_max; ++chi)
        for (long g = 0; g <= g_max; ++g)
            for (long d = 0; d <= d_max; ++d) {
                ++cases;
                if (sw::sw_mult_closed(chi, g, d) != sw::sw_mult_series(chi, g, d))
                    ++failures;
            }
    if (cfg.machine) {
        std::cout << "cases=" << cases << "\n"
                  << "failures=" << failures << "\n"
                  << "result=" << (failures == 0 ? "pass" : "fail") << "\n";
    } else {
        std::cout << "closed form vs series pipeline: " << cases << " cases, "
                  << failures << " failures: "
                  << (failures == 0 ? "PASS" : "FAIL") << "\n";
    }
    if (failures != 0) throw sw::domain_error("selftest failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Seiberg-Witten arithmetic for Kahler surfaces"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "table";
    app.add_option("--format", format, "output format: table or machine")
        ->check(CLI::IsMember({"table", "machine"}));

    // surface-info / kodaira / plurigenus / vdim share the invariant flags.
    SurfaceFlags surf_flags;
    auto* info = app.add_subcommand("surface-info",
                                    "derived topological invariants");
    surf_flags.attach(info);

    SurfaceFlags kod_flags;
    auto* kod = app.add_subcommand("kodaira", "Kodaira dimension (0, 1 or 2)");
    kod_flags.attach(kod);

    SurfaceFlags pl_flags;
    long pl_n = 2;
    auto* pl = app.add_subcommand("plurigenus",
                                  "n-th plurigenus of a general-type surface");
    pl_flags.attach(pl);
    pl->add_option("--n", pl_n, "plurigenus index, n >= 2")->required();

    SurfaceFlags vd_flags;
    long long vd_lsq = 0;
    auto* vd = app.add_subcommand(
        "vdim", "virtual moduli dimension (L^2 - 2e - 3 sigma)/4");
    vd_flags.attach(vd);
    vd->add_option("--lsq", vd_lsq, "square of the determinant class L")
        ->required();

    long sm_chi = 0, sm_g = 0, sm_d = 0;
    std::string sm_method = "closed";
    auto* sm = app.add_subcommand("swmult",
                                  "multiplicity of a vertical twisting bundle");
    sm->add_option("--chi", sm_chi, "holomorphic Euler characteristic")
        ->required();
    sm->add_option("--g", sm_g, "base genus")->required();
    sm->add_option("--d", sm_d, "degree of the base divisor")->required();
    sm->add_option("--method", sm_method, "closed, series, or both")
        ->check(CLI::IsMember({"closed", "series", "both"}));

    long bl_chi = 0, bl_g = 0, bl_d = 0, bl_a = 0;
    auto* bl = app.add_subcommand("blowup",
                                  "multiplicity after twisting by a*E on a "
                                  "blow-up");
    bl->add_option("--chi", bl_chi)->required();
    bl->add_option("--g", bl_g)->required();
    bl->add_option("--d", bl_d)->required();
    bl->add_option("--a", bl_a, "exceptional twist, a >= 0")->required();

    long dv_p = 0, dv_q = 0, dv_pg = 0;
    auto* dv = app.add_subcommand(
        "divisibility", "canonical divisibility; flags for a P^1 base with "
                        "two multiple fibers, or a document {g,chi,fibers}");
    auto* dv_popt = dv->add_option("--p", dv_p, "first multiplicity");
    auto* dv_qopt = dv->add_option("--q", dv_q, "second multiplicity");
    dv_popt->needs(dv_qopt);
    dv_qopt->needs(dv_popt);
    dv->add_option("--pg", dv_pg, "geometric genus");
    dv->add_option("input", cfg.input_path, "document path or - for stdin");

    long rc_pg = 0;
    long long rc_gcd = 1, rc_d = 0;
    std::optional<long long> rc_d2;
    auto* rc = app.add_subcommand(
        "recover", "fiber multiplicities from divisibility data");
    rc->add_option("--pg", rc_pg)->required();
    rc->add_option("--gcd", rc_gcd, "order of the fundamental group")
        ->required();
    rc->add_option("--d", rc_d, "largest canonical-ray divisibility")
        ->required();
    rc->add_option("--d2", rc_d2, "second largest divisibility, if observed");

    auto* cand = app.add_subcommand(
        "candidates", "basic-class candidates from a document "
                      "{surface, lattice, kmin, exceptionals}");
    cand->add_option("input", cfg.input_path, "document path or - for stdin");

    auto* refl = app.add_subcommand(
        "reflect", "reflect v in a (-1)- or (-2)-sphere s; document "
                   "{lattice, v, s}");
    refl->add_option("input", cfg.input_path, "document path or - for stdin");

    long st_chi = 6, st_g = 4, st_d = 10;
    auto* st = app.add_subcommand(
        "selftest", "cross-check the closed form against the series pipeline");
    st->add_option("--chi-max", st_chi);
    st->add_option("--g-max", st_g);
    st->add_option("--d-max", st_d);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.machine = format == "machine";

    try {
        if (info->parsed()) {
            run_surface_info(cfg, surf_flags);
        } else if (kod->parsed()) {
            emit(cfg, "kodaira",
                 std::to_string(sw::kodaira_dimension(kod_flags.invariants())));
        } else if (pl->parsed()) {
            sw::Int p = sw::plurigenus(pl_flags.invariants(), pl_n);
            if (cfg.machine)
                std::cout << "n=" << pl_n << "\nplurigenus=" << p << "\n";
            else
                std::cout << p << "\n";
        } else if (vd->parsed()) {
            sw::Rational d = sw::vdim_real(vd_flags.invariants(), sw::Int(vd_lsq));
            emit(cfg, "vdim", sw::rational_str(d));
        } else if (sm->parsed()) {
            sw::Int closed, series;
            if (sm_method != "series") closed = sw::sw_mult_closed(sm_chi, sm_g, sm_d);
            if (sm_method != "closed") series = sw::sw_mult_series(sm_chi, sm_g, sm_d);
            if (sm_method == "both" && closed != series)
                throw sw::domain_error(
                    "swmult: closed form and series pipeline disagree");
            emit(cfg, "n",
                 (sm_method == "series" ? series : closed).str());
        } else if (bl->parsed()) {
            emit(cfg, "n", sw::sw_mult_blowup(bl_chi, bl_g, bl_d, bl_a).str());
        } else if (dv->parsed()) {
            if (dv_popt->count()) {
                sw::DivisibilityPair pair =
                    sw::expected_divisibilities(dv_p, dv_q, dv_pg);
                if (cfg.machine) {
                    std::cout << "d=" << pair.d << "\n"
                              << "d2=" << (pair.d2 ? pair.d2->str() : "none")
                              << "\n";
                } else {
                    std::cout << "d = " << pair.d << "\n";
                    if (pair.d2)
                        std::cout << "d2 = " << *pair.d2 << "\n";
                    else
                        std::cout << "d2 = none (exceptional family)\n";
                }
            } else {
                sw::EllipticSurface surf = sw::elliptic_from_json(load_document(cfg));
                sw::validate(surf);
                emit(cfg, "d", sw::general_divisibility(surf).str());
            }
        } else if (rc->parsed()) {
            sw::RecoveryInput in;
            in.p_g = rc_pg;
            in.gcd_pq = rc_gcd;
            in.d = rc_d;
            if (rc_d2) in.d2 = sw::Int(*rc_d2);
            sw::MultiplePair pq = sw::recover_multiplicities(in);
            if (cfg.machine)
                std::cout << "p=" << pq.p << "\nq=" << pq.q << "\n";
            else
                std::cout << "(" << pq.p << "," << pq.q << ")\n";
        } else if (cand->parsed()) {
            json doc = load_document(cfg);
            if (!doc.contains("surface") || !doc.contains("lattice") ||
                !doc.contains("kmin") || !doc.contains("exceptionals"))
                throw sw::parse_error(
                    "candidates document needs surface, lattice, kmin and "
                    "exceptionals");
            sw::SurfaceInvariants inv = sw::surface_from_json(doc["surface"]);
            sw::IntersectionLattice lat = sw::lattice_from_json(doc["lattice"]);
            sw::LatticeVector kmin = sw::vector_from_json(doc["kmin"]);
            std::vector<sw::LatticeVector> exc;
            for (const json& e : doc["exceptionals"])
                exc.push_back(sw::vector_from_json(e));
            auto candidates = sw::enumerate_candidates(inv, lat, kmin, exc);
            if (cfg.machine) std::cout << "count=" << candidates.size() << "\n";
            for (size_t i = 0; i < candidates.size(); ++i) {
                const auto& c = candidates[i];
                std::string signs;
                for (int s : c.signs) signs += s > 0 ? '+' : '-';
                if (cfg.machine) {
                    std::string p = "candidate." + std::to_string(i);
                    std::cout << p << ".lambda=" << sw::rational_str(c.lambda)
                              << "\n"
                              << p << ".signs=" << signs << "\n"
                              << p << ".coords=" << coords_str(c.vector, true)
                              << "\n"
                              << p << ".square=" << c.square << "\n";
                } else {
                    std::cout << "lambda=" << sw::rational_str(c.lambda)
                              << " signs=" << (signs.empty() ? "-none-" : signs)
                              << " coords=" << coords_str(c.vector, false)
                              << " square=" << c.square << "\n";
                }
            }
        } else if (refl->parsed()) {
            json doc = load_document(cfg);
            if (!doc.contains("lattice") || !doc.contains("v") ||
                !doc.contains("s"))
                throw sw::parse_error("reflect document needs lattice, v and s");
            sw::IntersectionLattice lat = sw::lattice_from_json(doc["lattice"]);
            sw::LatticeVector v = sw::vector_from_json(doc["v"]);
            sw::LatticeVector s = sw::vector_from_json(doc["s"]);
            sw::LatticeVector r = lat.reflect_sphere(v, s);
            emit(cfg, "coords", coords_str(r, cfg.machine));
        } else if (st->parsed()) {
            run_selftest(cfg, st_chi, st_g, st_d);
        }
    } catch (const sw::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sw::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
