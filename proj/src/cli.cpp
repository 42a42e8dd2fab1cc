#include "birkhoff/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "birkhoff/alphafam.hpp"
#include "birkhoff/appendix.hpp"
#include "birkhoff/bistoch.hpp"
#include "birkhoff/erdosenum.hpp"
#include "birkhoff/highfloat.hpp"
#include "birkhoff/infarray.hpp"
#include "birkhoff/kernelmr.hpp"
#include "birkhoff/matrix_io.hpp"
#include "birkhoff/orbits.hpp"
#include "birkhoff/randindep.hpp"

namespace birkhoff {
namespace {

using nlohmann::json;

std::string g15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string g15(const HighFloat& v) { return g15(static_cast<double>(v)); }

std::string rat(const Rational& q) {
    std::ostringstream ss;
    ss << q;
    return ss.str();
}

void print_float_matrix(std::ostream& out, const FloatMatrix& m) {
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) out << (j ? " " : "") << g15(m.at(i, j));
        out << '\n';
    }
}

int cmd_delta(const std::string& file, std::ostream& out) {
    const BistochMatrix a{load_matrix_file(file)};
    const auto cert = delta(a);
    out << "delta = " << rat(cert.delta) << ", erdos = " << (cert.erdos ? "true" : "false")
        << '\n';
    out << "maxtrace = " << rat(cert.maxtrace_value) << '\n';
    out << "frobenius_sq = " << rat(cert.frobenius) << '\n';
    out << "witness = " << cert.witness.to_one_line() << '\n';
    return 0;
}

int cmd_maxtrace(const std::string& file, const std::string& method, std::ostream& out) {
    const auto m = load_matrix_file(file);
    const auto how = method == "brute"    ? MaxtraceMethod::kBrute
                     : method == "assign" ? MaxtraceMethod::kAssignment
                                          : MaxtraceMethod::kAuto;
    const auto best = maxtrace(m, how);
    out << "maxtrace = " << rat(best.value) << '\n';
    out << "witness = " << best.witness.to_one_line() << '\n';
    return 0;
}

int cmd_equiv(const std::string& file_a, const std::string& file_b, std::ostream& out) {
    const BistochMatrix a{load_matrix_file(file_a)};
    const BistochMatrix b{load_matrix_file(file_b)};
    const auto w = equivalence_witness(a, b);
    if (!w) {
        out << "not equivalent\n";
        return 1;
    }
    out << "equivalent\n";
    out << "P = " << w->first.to_one_line() << '\n';
    out << "Q = " << w->second.to_one_line() << '\n';
    return 0;
}

json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_enumerate(std::size_t n, unsigned workers, const std::string& stats_file,
                  bool as_json, std::ostream& out) {
    const auto res = enumerate_erdos(n, workers);
    if (!stats_file.empty()) {
        std::ofstream f(stats_file);
        if (!f) throw std::runtime_error("cannot write stats file '" + stats_file + "'");
        f << stats_tsv(res.stats);
    }
    if (as_json) {
        json j;
        j["classes"] = json::array();
        for (const auto& c : res.classes) j["classes"].push_back(matrix_to_json(c.matrix()));
        j["transpose_classes"] = res.transpose_classes;
        json stats;
        for (std::size_t k = 1; k <= res.stats.max_k(); ++k) {
            stats.push_back({{"k", k},
                             {"total", res.stats.total[k]},
                             {"independent", res.stats.independent[k]},
                             {"positive", res.stats.positive[k]},
                             {"erdos", res.stats.erdos[k]},
                             {"classes", res.stats.classes[k]}});
        }
        j["stats"] = std::move(stats);
        out << j.dump(2) << '\n';
        return 0;
    }
    out << res.classes.size() << " classes (" << res.transpose_classes << " up to transpose)\n";
    for (std::size_t i = 0; i < res.classes.size(); ++i) {
        out << "\n# class " << i + 1 << '\n' << write_matrix(res.classes[i].matrix());
    }
    return 0;
}

int cmd_verify_appendix(bool as_json, std::ostream& out) {
    const auto entries = load_appendix();
    const auto rep = verify_appendix(entries);
    if (as_json) {
        json j;
        j["entries"] = rep.total;
        j["enumerated_classes"] = rep.enumeration_classes;
        j["not_erdos"] = rep.not_erdos;
        j["equivalent_pairs"] = json::array();
        for (auto [x, y] : rep.equivalent_pairs) j["equivalent_pairs"].push_back({x, y});
        j["matches_enumeration"] = rep.matches_enumeration;
        j["ok"] = rep.ok();
        out << j.dump(2) << '\n';
        return rep.ok() ? 0 : 1;
    }
    out << "entries = " << rep.total << '\n';
    out << "enumerated classes = " << rep.enumeration_classes << '\n';
    out << "all erdos = " << (rep.not_erdos.empty() ? "true" : "false") << '\n';
    if (!rep.not_erdos.empty()) {
        out << "  offending indices:";
        for (int i : rep.not_erdos) out << ' ' << i;
        out << '\n';
    }
    out << "pairwise inequivalent = " << (rep.equivalent_pairs.empty() ? "true" : "false")
        << '\n';
    for (auto [x, y] : rep.equivalent_pairs) {
        out << "  equivalent pair: " << x << " ~ " << y << '\n';
    }
    out << "matches enumeration = " << (rep.matches_enumeration ? "true" : "false") << '\n';
    out << (rep.ok() ? "OK" : "FAILED") << '\n';
    return rep.ok() ? 0 : 1;
}

int cmd_orbits(std::size_t n, std::size_t k, const std::string& method, std::ostream& out) {
    if (method == "canon") {
        out << count_orbits_canonical(n, k) << '\n';
    } else {
        out << count_orbits_burnside(n, k) << '\n';
    }
    return 0;
}

int cmd_orbits_table(std::size_t n, bool as_json, std::ostream& out) {
    const auto counts = orbit_counts_burnside(n);
    if (as_json) {
        json j;
        j["n"] = n;
        j["counts"] = json::array();
        for (std::size_t k = 1; k < counts.size(); ++k) {
            j["counts"].push_back(counts[k].get_str());
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "k\tf\n";
    for (std::size_t k = 1; k < counts.size(); ++k) out << k << '\t' << counts[k] << '\n';
    return 0;
}

int cmd_alpha_n(std::size_t n, const std::string& alpha_str, const std::string& x_str,
                std::ostream& out) {
    ensure_precision();
    const HighFloat alpha(alpha_str);
    const HighFloat x(x_str);
    const auto iv = interval_n(n, alpha);
    if (x < iv.lo || x > iv.hi) {
        throw std::invalid_argument("x = " + x_str + " is outside the feasible interval [" +
                                    g15(iv.lo) + ", " + g15(iv.hi) + "]");
    }
    const auto m = alpha_erdos_n(n, alpha, x);
    const auto d = float_delta(m);
    out << "interval = [" << g15(iv.lo) << ", " << g15(iv.hi) << "]\n";
    out << "x = " << g15(x) << '\n';
    out << "z = " << g15(z_of_x_n(n, alpha, x)) << '\n';
    out << "delta = " << g15(d.delta) << '\n';
    out << "witness = " << d.trace.witness.to_one_line() << '\n';
    out << "matrix:\n";
    print_float_matrix(out, m);
    return 0;
}

int cmd_alpha_curve(std::size_t n, const std::string& alpha_str, const std::string& base_file,
                    const std::string& eps_str, std::ostream& out) {
    ensure_precision();
    const auto pt = alpha_on_segment(n, HighFloat(alpha_str), load_matrix_file(base_file),
                                     HighFloat(eps_str));
    out << "t = " << g15(pt.t) << '\n';
    out << "delta = " << g15(pt.delta) << '\n';
    out << "delta_at0 = " << g15(pt.delta_at0) << '\n';
    out << "delta_at1 = " << g15(pt.delta_at1) << '\n';
    out << "matrix:\n";
    print_float_matrix(out, pt.matrix);
    return 0;
}

int cmd_array(std::size_t rows, bool want_l2, long pairing_terms, std::ostream& out) {
    const ArrayPrefix p(rows);
    bool printed = false;
    if (want_l2) {
        out << "l2 = " << rat(p.prefix_l2()) << '\n';
        printed = true;
    }
    if (pairing_terms >= 0) {
        out << "pairing = " << rat(p.pairing_trace(static_cast<std::size_t>(pairing_terms)))
            << '\n';
        printed = true;
    }
    if (printed) return 0;
    // Sparse dump of the generated rows: one line per constant run,
    // "i j_lo j_hi value"; cells mirrored from earlier rows come first.
    for (std::size_t i = 1; i <= rows; ++i) {
        for (std::size_t j = 1; j < i; ++j) {
            if (p.row_end(j) >= static_cast<long>(i)) {
                out << i << '\t' << j << '\t' << j << '\t'
                    << rat(p.entry(Integer(static_cast<long>(i)), Integer(static_cast<long>(j))))
                    << '\n';
            }
        }
        out << i << '\t' << i << '\t' << p.row_end(i) << '\t'
            << rat(p.entry(Integer(static_cast<long>(i)), Integer(static_cast<long>(i))))
            << '\n';
    }
    return 0;
}

json mr_report_json(const MrReport& rep) {
    return json{{"lhs", g15(rep.lhs)},
                {"rhs", g15(rep.rhs)},
                {"drift", g15(rep.drift)},
                {"tol", g15(rep.tol)},
                {"pass", rep.pass}};
}

void print_mr_report(std::ostream& out, const std::string& label, const MrReport& rep) {
    out << label << ": lhs = " << g15(rep.lhs) << ", rhs = " << g15(rep.rhs)
        << ", drift = " << g15(rep.drift) << ", pass = " << (rep.pass ? "true" : "false")
        << '\n';
}

int cmd_kernel_check(const std::string& spec, int m, const std::string& spec2, double tol,
                     bool as_json, std::ostream& out) {
    const auto g = dyadic_average(parse_kernel(spec), m);
    const auto finite = check_finite_mr(g, tol);
    bool all_pass = finite.pass;
    json j{{"kernel", spec}, {"m", m}, {"finite", mr_report_json(finite)}};
    MrReport coupling;
    if (!spec2.empty()) {
        coupling = check_coupling_mr(g, dyadic_average(parse_kernel(spec2), m), tol);
        all_pass = all_pass && coupling.pass;
        j["kernel2"] = spec2;
        j["coupling"] = mr_report_json(coupling);
    }
    if (as_json) {
        out << j.dump(2) << '\n';
    } else {
        out << "kernel = " << spec << ", m = " << m << '\n';
        print_mr_report(out, "finite", finite);
        if (!spec2.empty()) print_mr_report(out, "coupling(" + spec2 + ")", coupling);
    }
    return all_pass ? 0 : 1;
}

int cmd_mc(int n, std::uint64_t iters, std::uint64_t seed, std::uint64_t k, int workers,
           bool as_json, std::ostream& out) {
    McConfig cfg;
    cfg.n = n;
    cfg.k = static_cast<std::size_t>(k);
    cfg.iters = iters;
    cfg.seed = seed;
    cfg.workers = workers;
    const auto res = estimate(cfg);
    if (as_json) {
        json j{{"n", n},
               {"k", cfg.subset_size()},
               {"iters", iters},
               {"dependent", res.dependent},
               {"estimate", g15(res.estimate)},
               {"ci", {g15(res.wilson_lo), g15(res.wilson_hi)}}};
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "n\titers\td\testimate\tci_low\tci_high\n";
    out << n << '\t' << iters << '\t' << res.dependent << '\t' << g15(res.estimate) << '\t'
        << g15(res.wilson_lo) << '\t' << g15(res.wilson_hi) << '\n';
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tools for bistochastic matrices: the Marcus-Ree gap, its zero set, "
                 "orbit counts, and the infinite-dimensional analogues"};
    app.name("birkhoff");
    app.require_subcommand(1);
    int rc = 0;

    // delta
    std::string delta_file;
    auto* sc_delta = app.add_subcommand("delta", "delta(A) = maxtrace - ||A||_F^2 of a "
                                                 "bistochastic matrix file, with certificate");
    sc_delta->add_option("file", delta_file, "matrix file")->required();
    sc_delta->callback([&] { rc = cmd_delta(delta_file, out); });

    // maxtrace
    std::string mt_file, mt_method = "auto";
    auto* sc_mt = app.add_subcommand("maxtrace", "best permutation diagonal of a matrix file");
    sc_mt->add_option("file", mt_file, "matrix file")->required();
    sc_mt->add_option("--method", mt_method, "brute | assign (default: auto)")
        ->check(CLI::IsMember({"auto", "brute", "assign"}));
    sc_mt->callback([&] { rc = cmd_maxtrace(mt_file, mt_method, out); });

    // equiv
    std::string eq_a, eq_b;
    auto* sc_eq = app.add_subcommand(
        "equiv", "test B = P A Q for permutations P, Q (exit 1 when inequivalent)");
    sc_eq->add_option("fileA", eq_a, "matrix file")->required();
    sc_eq->add_option("fileB", eq_b, "matrix file")->required();
    sc_eq->callback([&] { rc = cmd_equiv(eq_a, eq_b, out); });

    // enumerate
    std::size_t en_n = 0;
    unsigned en_workers = 1;
    std::string en_stats;
    bool en_json = false;
    auto* sc_en = app.add_subcommand("enumerate",
                                     "classify all matrices with delta = 0 up to P A Q");
    sc_en->add_option("--n", en_n, "matrix size (3 or 4)")->required();
    sc_en->add_option("--workers", en_workers, "worker threads")->check(CLI::PositiveNumber);
    sc_en->add_option("--stats", en_stats, "write per-size pipeline stats to this TSV file");
    sc_en->add_flag("--json", en_json, "JSON instead of text");
    sc_en->callback([&] { rc = cmd_enumerate(en_n, en_workers, en_stats, en_json, out); });

    // verify-appendix
    bool va_json = false;
    auto* sc_va = app.add_subcommand("verify-appendix",
                                     "check the bundled 4x4 catalog against a fresh enumeration");
    sc_va->add_flag("--json", va_json, "JSON instead of text");
    sc_va->callback([&] { rc = cmd_verify_appendix(va_json, out); });

    // orbits
    std::size_t or_n = 0, or_k = 0;
    std::string or_method = "burnside";
    auto* sc_or = app.add_subcommand("orbits",
                                     "count k-subsets of the symmetric group up to S -> a S b");
    sc_or->add_option("--n", or_n, "group degree")->required();
    sc_or->add_option("--k", or_k, "subset size")->required();
    sc_or->add_option("--method", or_method, "canon | burnside (default)")
        ->check(CLI::IsMember({"canon", "burnside"}));
    sc_or->callback([&] { rc = cmd_orbits(or_n, or_k, or_method, out); });

    // orbits-table
    std::size_t ot_n = 0;
    bool ot_json = false;
    auto* sc_ot = app.add_subcommand("orbits-table", "all orbit counts k = 1 .. n!");
    sc_ot->add_option("--n", ot_n, "group degree (<= 6)")->required();
    sc_ot->add_flag("--json", ot_json, "JSON instead of text");
    sc_ot->callback([&] { rc = cmd_orbits_table(ot_n, ot_json, out); });

    // alpha3 / alpha-n
    std::string a3_alpha, a3_x;
    auto* sc_a3 = app.add_subcommand("alpha3",
                                     "symmetric 3x3 matrix with delta = alpha at parameter x");
    sc_a3->add_option("--alpha", a3_alpha, "target delta in (0, 1/2)")->required();
    sc_a3->add_option("--x", a3_x, "diagonal parameter")->required();
    sc_a3->callback([&] { rc = cmd_alpha_n(3, a3_alpha, a3_x, out); });

    std::size_t an_n = 0;
    std::string an_alpha, an_x;
    auto* sc_an = app.add_subcommand("alpha-n",
                                     "n x n matrix with delta = alpha at parameter x");
    sc_an->add_option("--n", an_n, "matrix size (>= 3)")->required();
    sc_an->add_option("--alpha", an_alpha, "target delta in (0, (n-1)/4)")->required();
    sc_an->add_option("--x", an_x, "diagonal parameter")->required();
    sc_an->callback([&] { rc = cmd_alpha_n(an_n, an_alpha, an_x, out); });

    // alpha-curve
    std::size_t ac_n = 0;
    std::string ac_alpha, ac_base, ac_eps = "1e-12";
    auto* sc_ac = app.add_subcommand(
        "alpha-curve", "bisect the segment from (I + J)/2 to an embedded 3x3 base matrix "
                       "for the point with delta = alpha");
    sc_ac->add_option("--n", ac_n, "matrix size (3 .. 8)")->required();
    sc_ac->add_option("--alpha", ac_alpha, "target delta")->required();
    sc_ac->add_option("--base", ac_base, "3x3 bistochastic matrix file")->required();
    sc_ac->add_option("--eps", ac_eps, "bisection tolerance on |delta - alpha|");
    sc_ac->callback([&] { rc = cmd_alpha_curve(ac_n, ac_alpha, ac_base, ac_eps, out); });

    // array
    std::size_t ar_rows = 0;
    bool ar_l2 = false;
    long ar_pairing = -1;
    auto* sc_ar = app.add_subcommand(
        "array", "symmetric bistochastic array over the positive integers, first R rows");
    sc_ar->add_option("--rows", ar_rows, "rows to materialize")->required();
    sc_ar->add_flag("--l2", ar_l2, "print the exact sum of squares over the generated rows");
    sc_ar->add_option("--pairing", ar_pairing,
                      "print the exact transversal pairing sum over this many 2x2 blocks")
        ->check(CLI::NonNegativeNumber);
    sc_ar->callback([&] { rc = cmd_array(ar_rows, ar_l2, ar_pairing, out); });

    // kernel-check
    std::string kc_kernel, kc_kernel2;
    int kc_m = 0;
    double kc_tol = 1e-9;
    bool kc_json = false;
    auto* sc_kc = app.add_subcommand(
        "kernel-check", "trace inequality for the dyadic discretization of a kernel");
    sc_kc->add_option("--kernel", kc_kernel, "uniform | cosine:EPS | random:SEED")->required();
    sc_kc->add_option("--m", kc_m, "dyadic scale (grid 2^m, m <= 10)")->required();
    sc_kc->add_option("--kernel2", kc_kernel2, "second kernel: also check <A, B> <= maxtrace(A)");
    sc_kc->add_option("--tol", kc_tol, "comparison tolerance");
    sc_kc->add_flag("--json", kc_json, "JSON instead of text");
    sc_kc->callback(
        [&] { rc = cmd_kernel_check(kc_kernel, kc_m, kc_kernel2, kc_tol, kc_json, out); });

    // mc
    int mc_n = 0, mc_workers = 1;
    std::uint64_t mc_iters = 0, mc_seed = 0, mc_k = 0;
    bool mc_json = false;
    auto* sc_mc = app.add_subcommand(
        "mc", "Monte Carlo probability that k random permutation matrices are dependent");
    sc_mc->add_option("--n", mc_n, "matrix size")->required();
    sc_mc->add_option("--iters", mc_iters, "accepted samples")->required();
    sc_mc->add_option("--seed", mc_seed, "RNG seed")->required();
    sc_mc->add_option("--k", mc_k, "subset size (default (n-1)^2 + 1)");
    sc_mc->add_option("--workers", mc_workers, "worker threads")->check(CLI::PositiveNumber);
    sc_mc->add_flag("--json", mc_json, "JSON instead of text");
    sc_mc->callback([&] { rc = cmd_mc(mc_n, mc_iters, mc_seed, mc_k, mc_workers, mc_json, out); });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

}  // namespace birkhoff
