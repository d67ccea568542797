#include "conekit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "conekit/cone_probes.hpp"
#include "conekit/errors.hpp"
#include "conekit/gibbons_hawking.hpp"
#include "conekit/polyhom.hpp"
#include "conekit/special_functions.hpp"
#include "conekit/table.hpp"
#include "conekit/toric_futaki.hpp"

namespace conekit {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> parse_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ValidationError(what + ": not a number list: " + text);
        }
    }
    if (out.empty()) throw ValidationError(what + ": empty list");
    return out;
}

// "lo:hi:n" -> n evenly spaced values
std::vector<double> parse_grid(const std::string& text, const std::string& what) {
    std::stringstream ss(text);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
        throw ValidationError(what + ": grid must be lo:hi:n");
    const double lo = parse_list(a, what)[0], hi = parse_list(b, what)[0];
    const int n = static_cast<int>(parse_list(c, what)[0]);
    if (n < 1 || n > 100000) throw ValidationError(what + ": grid size must be in 1..100000");
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return out;
}

ConePoint parse_cone_point(const ConeParams& p, const std::string& text, const std::string& what) {
    const auto v = parse_list(text, what);
    if (static_cast<int>(v.size()) != p.m) throw ValidationError(what + ": expected r,theta and m-2 transverse values");
    ConePoint x = make_point(p, v[0], v[1], std::vector<double>(v.begin() + 2, v.end()));
    validate_point(p, x);
    return x;
}

gh::Vec3 parse_vec3(const std::string& text, const std::string& what) {
    const auto v = parse_list(text, what);
    if (v.size() != 3) throw ValidationError(what + ": expected three values");
    return {v[0], v[1], v[2]};
}

struct Common {
    std::string format = "csv";
    std::string output = "-";
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--output,-o", c.output, "output path, - for stdout");
}

void write(const Table& t, const Common& c, std::ostream& out) {
    const auto f = parse_format(c.format);
    if (c.output.empty() || c.output == "-") {
        out << render_table(t, f);
        return;
    }
    emit_table(t, f, c.output);
}

gh::HarmonicField make_field(const std::string& kind, double beta) {
    if (kind == "flat") return gh::HarmonicField::flat_newton({0, 0, 0});
    if (kind == "two-pole") return gh::HarmonicField::multi_pole({{0, 0, 0}, {0.5, 0.2, -0.1}}, {1.0, 1.0});
    if (kind == "cone") {
        const auto p = make_params(beta, 3);
        return gh::HarmonicField::cone_green(p, make_point(p, 1.0, 0.0, {0.0}));
    }
    throw ValidationError("field must be flat, two-pole or cone");
}

} // namespace

std::vector<VerifyCheck> run_verify(const std::string& module) {
    const std::vector<std::string> known{"all", "special_functions", "cone_green", "gibbons_hawking", "toric_futaki"};
    if (std::find(known.begin(), known.end(), module) == known.end())
        throw ValidationError("unknown module " + module);
    std::vector<VerifyCheck> out;
    auto want = [&](const std::string& m) { return module == "all" || module == m; };
    auto check = [&](const std::string& m, const std::string& name, auto&& fn) {
        VerifyCheck c{m, name, false, ""};
        try {
            c.passed = fn(c.detail);
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        out.push_back(c);
    };
    if (want("special_functions")) {
        check("special_functions", "lemma1 grid", [](std::string& d) {
            for (double p = 0; p <= 4; p += 1)
                for (double q = 0; q <= 4; q += 1)
                    if (!lemma1_check(p, q).holds) {
                        d = "fails at p=" + format_real(p) + " q=" + format_real(q);
                        return false;
                    }
            return true;
        });
        check("special_functions", "J_0(1)", [](std::string& d) {
            const double v = bessel_j(0, 1).value;
            d = format_real(v);
            return std::abs(v - 0.76519768655796655) < 1e-14;
        });
    }
    if (want("toric_futaki")) {
        check("toric_futaki", "X2 critical beta 21/25", [](std::string& d) {
            const auto r = evaluate_fixture(builtin_fixture("x2"));
            d = r.beta_critical ? to_string(*r.beta_critical) : "none";
            return r.fut_Y == Rational(-2, 3) && r.beta_critical && *r.beta_critical == Rational(21, 25);
        });
        check("toric_futaki", "X1 critical beta 6/7", [](std::string& d) {
            const auto r = evaluate_fixture(builtin_fixture("x1"));
            d = r.beta_critical ? to_string(*r.beta_critical) : "none";
            return r.fut_Y == Rational(2, 3) && r.beta_critical && *r.beta_critical == Rational(6, 7);
        });
    }
    if (want("cone_green")) {
        check("cone_green", "modal I vs K", [](std::string& d) {
            const auto p = make_params(2.0 / 3.0, 3);
            const auto a = modal_gk_I(p, 1, 0.3, 1.0, 0.5), b = modal_gk_K(p, 1, 0.3, 1.0, 0.5);
            d = format_real(a.value - b.value);
            return std::abs(a.value - b.value) <= a.abs_error + b.abs_error + 1e-12;
        });
        check("cone_green", "closed form symmetry and scaling", [](std::string& d) {
            const auto p = make_params(2.0 / 3.0, 3);
            const auto x = make_point(p, 0.7, 0.4, {0.2}), y = make_point(p, 1.1, 2.5, {-0.3});
            const double g = green_closed(p, x, y).value, gs = green_closed(p, y, x).value;
            const double g2 = green_closed(p, dilate(x, 2), dilate(y, 2)).value;
            d = format_real(g);
            return std::abs(g - gs) <= 1e-12 * g && std::abs(2 * g2 / g - 1) <= 1e-10;
        });
        check("cone_green", "expansion vs closed form", [](std::string& d) {
            const auto p = make_params(2.0 / 3.0, 3);
            const auto x = make_point(p, 0.2, 1.0, {0.1}), y = make_point(p, 1.0, 0.0, {0.0});
            const auto e = polyhom_eval(p, x, y, -1, -1, 1e-10);
            const double c = green_closed(p, x, y).value;
            d = format_real(e.value - c);
            return std::abs(e.value - c) <= e.abs_error + 1e-12;
        });
        check("cone_green", "eigenfunction of the cone Laplacian", [](std::string& d) {
            const auto p = make_params(2.0 / 3.0, 3);
            const double nu = p.c();
            ScalarField phi = [&](const ConePoint& q) { return bessel_j(nu, 2.5 * q.r).value * std::cos(q.theta); };
            const auto x = make_point(p, 0.8, 0.3, {0.0});
            const double res = laplacian_cone(p, phi, x, 1e-3).value + 6.25 * phi(x);
            d = format_real(res);
            return std::abs(res) < 1e-5;
        });
    }
    if (want("gibbons_hawking")) {
        check("gibbons_hawking", "flat W = 0", [](std::string& d) {
            const auto f = gh::HarmonicField::flat_newton({0, 0, 0});
            const double w = gh::frobenius(gh::gh_curvature(f, {0.3, -0.4, 0.7}));
            d = format_real(w);
            return w <= 1e-8;
        });
        check("gibbons_hawking", "connection equations", [](std::string& d) {
            const auto f = gh::HarmonicField::multi_pole({{0, 0, 0}, {0.5, 0.2, -0.1}}, {1, 1});
            const double r = gh::connection_residual(f, {0.3, -0.4, 0.7});
            d = format_real(r);
            return r <= 1e-10;
        });
    }
    return out;
}

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"conekit: Green's functions of cone metrics, Gibbons-Hawking curvature, toric Futaki invariants"};
    app.require_subcommand(1);
    Common common;

    // bessel
    auto* bessel = app.add_subcommand("bessel", "Bessel functions J, I, K of real order");
    std::string bkind = "j", bx = "1", bgrid;
    double bnu = 0.0;
    bessel->add_option("--kind", bkind, "j, i or k")->check(CLI::IsMember({"j", "i", "k"}));
    bessel->add_option("--nu", bnu, "order >= 0");
    bessel->add_option("--x", bx, "comma separated arguments");
    bessel->add_option("--x-grid", bgrid, "lo:hi:n");
    add_common(bessel, common);

    // green
    auto* green = app.add_subcommand("green", "Green's function of the cone Laplacian");
    green->require_subcommand(1);
    double beta = 2.0 / 3.0, tol = 1e-8;
    int m = 3, k_max = -1;
    std::string xs = "0.5,0,0", ys = "1,0,0", rgrid;
    bool raw = false;
    auto add_geom = [&](CLI::App* a) {
        a->add_option("--beta", beta, "cone angle parameter in (0, 1]");
        a->add_option("--m", m, "dimension >= 3");
        add_common(a, common);
    };
    auto* geval = green->add_subcommand("eval", "G(x, y)");
    add_geom(geval);
    geval->add_option("--x", xs, "r,theta,s...");
    geval->add_option("--y", ys, "r,theta,s...");
    geval->add_option("--k-max", k_max, "mode cutoff, -1 for automatic");
    geval->add_option("--tol", tol, "relative tolerance");
    geval->add_option("--r-grid", rgrid, "sweep r of x: lo:hi:n");
    geval->add_flag("--raw", raw, "skip the unit-flux normalization");
    auto* gmodal = green->add_subcommand("modal", "modal integrals g_k");
    add_geom(gmodal);
    int mk = 0;
    double mr = 0.3, mrp = 1.0, mR = 0.5;
    std::string rep = "both";
    gmodal->add_option("--k", mk, "mode >= 0");
    gmodal->add_option("--r", mr, "r >= 0");
    gmodal->add_option("--rp", mrp, "r' > 0");
    gmodal->add_option("--R", mR, "transverse distance");
    gmodal->add_option("--rep", rep, "I, K or both")->check(CLI::IsMember({"I", "K", "both"}));
    auto* gexp = green->add_subcommand("expand", "expansion near the singular set");
    add_geom(gexp);
    int j_max = -1;
    gexp->add_option("--x", xs, "r,theta,s... with r < r'/2");
    gexp->add_option("--y", ys, "r,theta,s...");
    gexp->add_option("--j-max", j_max, "-1 for automatic");
    gexp->add_option("--k-max", k_max, "-1 for automatic");
    gexp->add_option("--tol", tol, "tail tolerance relative to the leading term");
    auto* gprobe = green->add_subcommand("probe", "kernel and Schauder probes");
    add_geom(gprobe);
    std::string probe = "kernel", deriv = "rs(1)";
    int level = 1;
    double alpha = -1.0;
    gprobe->add_option("--probe", probe, "kernel, kappa, schauder or smooth")
        ->check(CLI::IsMember({"kernel", "kappa", "schauder", "smooth"}));
    gprobe->add_option("--deriv", deriv, "ss(i,j), rs(i) or thetas(i)");
    gprobe->add_option("--x", xs, "r,theta,s...");
    gprobe->add_option("--y", ys, "r,theta,s...");
    gprobe->add_option("--level", level, "grid level for kappa");
    gprobe->add_option("--alpha", alpha, "Hoelder exponent in (0, mu); default mu/2");

    // gh
    auto* ghc = app.add_subcommand("gh", "Gibbons-Hawking metrics");
    ghc->require_subcommand(1);
    std::string field = "cone", gx = "0.2,0.3,0.25", radii;
    double psi = 0.0;
    auto add_field = [&](CLI::App* a) {
        a->add_option("--field", field, "flat, two-pole or cone")->check(CLI::IsMember({"flat", "two-pole", "cone"}));
        a->add_option("--beta", beta, "cone angle parameter of the cone field");
        add_common(a, common);
    };
    auto* gcurv = ghc->add_subcommand("curvature", "the matrix W at a point");
    add_field(gcurv);
    gcurv->add_option("--x", gx, "x1,x2,x3");
    auto* ggrowth = ghc->add_subcommand("growth", "exponent of |W| approaching S");
    add_field(ggrowth);
    ggrowth->add_option("--radii", radii, "comma separated radii (default 1e-7..1e-4)");
    auto* gholo = ghc->add_subcommand("holo", "holomorphic pair h, h~");
    add_field(gholo);
    gholo->add_option("--x", gx, "x1,x2,x3");
    gholo->add_option("--psi", psi, "fibre angle");

    // futaki
    auto* fut = app.add_subcommand("futaki", "toric Futaki invariants");
    fut->require_subcommand(1);
    std::string fixture = "x2";
    bool beta_table = false;
    auto* fpair = fut->add_subcommand("pair", "pair invariant Fut(Y, Delta, beta)");
    fpair->add_option("--fixture", fixture, "x1, x2, p2 or a fixture file path");
    fpair->add_flag("--beta-table", beta_table, "tabulate in beta");
    add_common(fpair, common);
    auto* fcrit = fut->add_subcommand("critical", "critical cone angle");
    fcrit->add_option("--fixture", fixture, "x1, x2, p2 or a fixture file path");
    add_common(fcrit, common);

    // verify
    auto* ver = app.add_subcommand("verify", "quick self-checks");
    std::string vmod = "all";
    ver->add_option("module", vmod, "all or a module name");
    add_common(ver, common);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        Table t;
        if (bessel->parsed()) {
            if (!(bnu >= 0)) throw ValidationError("nu must be >= 0");
            const auto xv = bgrid.empty() ? parse_list(bx, "--x") : parse_grid(bgrid, "--x-grid");
            t.add_column("kind", ColumnType::text);
            t.add_column("nu", ColumnType::real);
            t.add_column("x", ColumnType::real);
            t.add_column("value", ColumnType::real);
            t.add_column("abs_error", ColumnType::real);
            for (double x : xv) {
                if (!(x >= 0)) throw ValidationError("x must be >= 0");
                if (bkind == "k" && !(x > 0)) throw ValidationError("K needs x > 0");
            }
            for (double x : xv) {
                const auto v = bkind == "j" ? bessel_j(bnu, x) : bkind == "i" ? bessel_i(bnu, x) : bessel_k(bnu, x);
                t.add_row({bkind, bnu, x, v.value, v.abs_error});
            }
        } else if (green->parsed()) {
            const auto p = make_params(beta, m);
            if (geval->parsed()) {
                if (!(tol > 0 && tol < 1)) throw ValidationError("tol must lie in (0, 1)");
                if (k_max < -1) throw ValidationError("k-max must be >= 0, or -1 for automatic");
                auto x = parse_cone_point(p, xs, "--x");
                const auto y = parse_cone_point(p, ys, "--y");
                std::vector<double> rs{x.r};
                if (!rgrid.empty()) rs = parse_grid(rgrid, "--r-grid");
                for (double r : rs) {
                    x.r = r;
                    validate_point(p, x);
                    if (euclidean_distance(x, y) == 0.0) throw SingularityError("x = y");
                }
                for (const char* c : {"r", "theta", "value", "abs_error", "route", "modes"}) {
                    const std::string s = c;
                    t.add_column(s, s == "route" ? ColumnType::text
                                    : s == "modes" ? ColumnType::integer
                                                   : ColumnType::real);
                }
                for (double r : rs) {
                    x.r = r;
                    const auto v = raw ? green_raw(p, x, y, k_max, tol) : green_eval(p, x, y, k_max, true, tol);
                    t.add_row({x.r, x.theta, v.value, v.abs_error, to_string(v.route), static_cast<long long>(v.modes)});
                }
            } else if (gmodal->parsed()) {
                if (mk < 0) throw ValidationError("k must be >= 0");
                if (!(mr >= 0 && mrp >= 0 && mR >= 0)) throw ValidationError("radii must be >= 0");
                t.add_column("representation", ColumnType::text);
                t.add_column("k", ColumnType::integer);
                t.add_column("value", ColumnType::real);
                t.add_column("abs_error", ColumnType::real);
                if (rep != "K") {
                    if (!(mr < mrp)) throw ValidationError("the I representation needs r < r'");
                    const auto v = modal_gk_I(p, mk, mr, mrp, mR);
                    t.add_row({std::string("I"), static_cast<long long>(mk), v.value, v.abs_error});
                }
                if (rep != "I") {
                    if (!(mR > 0)) throw ValidationError("the K representation needs R > 0");
                    const auto v = modal_gk_K(p, mk, mr, mrp, mR);
                    t.add_row({std::string("K"), static_cast<long long>(mk), v.value, v.abs_error});
                }
            } else if (gexp->parsed()) {
                if (!(tol > 0 && tol < 1)) throw ValidationError("tol must lie in (0, 1)");
                const auto x = parse_cone_point(p, xs, "--x"), y = parse_cone_point(p, ys, "--y");
                if (!(x.r < 0.5 * y.r)) throw RegionError("the expansion needs r < r'/2");
                const auto v = polyhom_eval(p, x, y, j_max, k_max, tol);
                for (const char* c : {"value", "abs_error", "tail_bound"}) t.add_column(c, ColumnType::real);
                for (const char* c : {"terms", "j_max", "k_max"}) t.add_column(c, ColumnType::integer);
                t.add_row({v.value, v.abs_error, v.tail_bound, static_cast<long long>(v.terms),
                           static_cast<long long>(v.j_max), static_cast<long long>(v.k_max)});
            } else if (gprobe->parsed()) {
                const auto D = parse_deriv(deriv);
                D.validate(p);
                if (probe == "kernel") {
                    const auto x = parse_cone_point(p, xs, "--x"), y = parse_cone_point(p, ys, "--y");
                    KernelOptions o;
                    o.fd_check = true;
                    const auto k = deriv_kernel(p, D, x, y, o);
                    for (const char* c : {"value", "abs_error", "fd_value", "fd_error"}) t.add_column(c, ColumnType::real);
                    t.add_column("fd_agrees", ColumnType::integer);
                    t.add_row({k.value, k.abs_error, k.fd_value, k.fd_error, static_cast<long long>(k.fd_agrees)});
                } else if (probe == "kappa") {
                    if (level < 1 || level > 4) throw ValidationError("level must be in 1..4");
                    if (p.m != 3) throw ValidationError("kernel bound probes need m = 3");
                    const auto r = kernel_bounds(p, D, level);
                    for (const char* c : {"kappa1", "kappa2", "kappa3", "kappa4"}) t.add_column(c, ColumnType::real);
                    t.add_column("samples", ColumnType::integer);
                    t.add_row({r.kappa1, r.kappa2, r.kappa3, r.kappa4, static_cast<long long>(r.samples)});
                } else if (probe == "schauder") {
                    const double a = alpha < 0 ? 0.5 * p.mu() : alpha;
                    if (!(a > 0 && a < p.mu())) throw ValidationError("alpha must lie in (0, mu), mu = 1/beta - 1");
                    if (p.m != 3) throw ValidationError("the Schauder probe needs m = 3");
                    const auto r = schauder_probe(p, BumpField{}, D, a);
                    for (const char* c : {"alpha", "ratio", "holder_T", "holder_rho"}) t.add_column(c, ColumnType::real);
                    t.add_row({a, r.ratio, r.holder_T, r.holder_rho});
                } else {
                    const auto y = parse_cone_point(p, ys, "--y");
                    if (p.m != 3) throw ValidationError("the smoothness probe needs m = 3");
                    t.add_column("h", ColumnType::real);
                    t.add_column("chart", ColumnType::real);
                    t.add_column("developed", ColumnType::real);
                    for (double h : {1e-2, 5e-3, 2.5e-3, 1.25e-3}) {
                        const auto s = beta_smooth_probe(p, y, h * y.r);
                        t.add_row({h * y.r, s.chart, s.developed});
                    }
                }
            }
        } else if (ghc->parsed()) {
            if (field == "cone") make_params(beta, 3);
            const auto f = make_field(field, beta);
            if (gcurv->parsed()) {
                const auto x = parse_vec3(gx, "--x");
                const auto W = gh::gh_curvature(f, x);
                t.add_column("i", ColumnType::integer);
                for (const char* c : {"W_i1", "W_i2", "W_i3"}) t.add_column(c, ColumnType::real);
                for (int i = 0; i < 3; ++i) t.add_row({static_cast<long long>(i + 1), W[i][0], W[i][1], W[i][2]});
            } else if (ggrowth->parsed()) {
                std::vector<double> rr;
                if (radii.empty())
                    for (int i = 0; i < 8; ++i) rr.push_back(1e-7 * std::pow(1e3, i / 7.0));
                else
                    rr = parse_list(radii, "--radii");
                if (rr.size() < 4) throw ValidationError("need at least 4 radii");
                for (double r : rr)
                    if (!(r > 0 && r < 0.1)) throw ValidationError("radii must lie in (0, 0.1)");
                const auto g = gh::curvature_growth(f, rr);
                t.add_column("r", ColumnType::real);
                t.add_column("norm_W", ColumnType::real);
                t.add_column("fitted_exponent", ColumnType::real);
                t.add_column("zero_signal", ColumnType::integer);
                for (std::size_t i = 0; i < rr.size(); ++i)
                    t.add_row({g.radii[i], g.norms[i], g.exponent, static_cast<long long>(g.zero_signal)});
            } else {
                const auto x = parse_vec3(gx, "--x");
                gh::HoloSeed seed;
                if (field == "cone") {
                    const double c = 1.0 / beta;
                    seed = [c](std::complex<double> z) { return 1.0 - std::pow(z, c); };
                } else {
                    seed = [](std::complex<double> z) { return std::sqrt(0.5 * z); };
                }
                const auto hp = gh::holo_pair(f, x, psi, seed);
                const auto prod = hp.h * hp.h_tilde;
                for (const char* c : {"h_re", "h_im", "htilde_re", "htilde_im", "prod_re", "prod_im", "h0sq_re", "h0sq_im"})
                    t.add_column(c, ColumnType::real);
                const auto h0sq = hp.h0_at_base * hp.h0_at_base;
                t.add_row({hp.h.real(), hp.h.imag(), hp.h_tilde.real(), hp.h_tilde.imag(), prod.real(), prod.imag(),
                           h0sq.real(), h0sq.imag()});
            }
        } else if (fut->parsed()) {
            // "x2", "x2.json" and "x2.toml" name a shipped fixture; anything else is a path
            std::string stem = fixture;
            for (const char* ext : {".json", ".toml"})
                if (stem.size() > 5 && stem.ends_with(ext)) stem.resize(stem.size() - 5);
            const bool named = stem == "x1" || stem == "x2" || stem == "p2";
            const auto fx = named ? builtin_fixture(stem) : load_fixture(fixture);
            const auto r = evaluate_fixture(fx);
            if (fcrit->parsed()) {
                t.add_column("fixture", ColumnType::text);
                t.add_column("beta_critical", ColumnType::text);
                t.add_row({fx.name, r.beta_critical ? to_string(*r.beta_critical) : std::string("none")});
            } else if (beta_table) {
                t.add_column("beta", ColumnType::rational);
                t.add_column("futaki", ColumnType::rational);
                t.add_column("note", ColumnType::text);
                std::vector<Rational> betas;
                for (int i = 1; i <= 20; ++i) betas.push_back(Rational(i, 20));
                if (r.beta_critical) betas.push_back(*r.beta_critical);
                std::sort(betas.begin(), betas.end());
                betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
                for (const auto& b : betas)
                    t.add_row({b, r.futaki_of_beta.at(b),
                               std::string(r.beta_critical && b == *r.beta_critical ? "critical" : "")});
            } else {
                for (const char* c : {"fut_Y", "vol_X", "int_X_H", "vol_Delta", "int_Delta_H", "c0", "c1"})
                    t.add_column(c, ColumnType::rational);
                t.add_column("beta_critical", ColumnType::text);
                t.add_row({r.fut_Y, r.vol_X, r.int_X_H, r.vol_Delta, r.int_Delta_H, r.futaki_of_beta.c0,
                           r.futaki_of_beta.c1, r.beta_critical ? to_string(*r.beta_critical) : std::string("none")});
            }
        } else if (ver->parsed()) {
            const auto checks = run_verify(vmod);
            t.add_column("module", ColumnType::text);
            t.add_column("check", ColumnType::text);
            t.add_column("passed", ColumnType::integer);
            t.add_column("detail", ColumnType::text);
            bool all = true;
            for (const auto& c : checks) {
                t.add_row({c.module, c.name, static_cast<long long>(c.passed), c.detail});
                all = all && c.passed;
            }
            write(t, common, out);
            return all ? 0 : 1;
        }
        write(t, common, out);
        return 0;
    } catch (const ValidationError& e) {
        err << "invalid parameter: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "invalid parameter: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << "\n";
        return 1;
    }
}

} // namespace conekit
