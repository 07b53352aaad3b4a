// Command-line front end for the orbitfn library.

#include "orbitfn/affine.hpp"
#include "orbitfn/errors.hpp"
#include "orbitfn/orbit_algebra.hpp"
#include "orbitfn/orbit_fn.hpp"
#include "orbitfn/transform.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace orbitfn;
using Json = nlohmann::ordered_json;

namespace {

struct Config {
    std::string type;
    std::string lambda;
    std::string mu;
    std::string pair;
    std::string lambda_set;
    std::string signal;
    std::vector<std::string> points;
    std::string format;
    std::string output;
    int m = 0;
    int M = 0;
    int level = 16;
    int n = 2;
    int s_max = 6;
    int count = 5;
    unsigned seed = 1;
    double tol = 0;
    double h = 2e-4;
    std::size_t cap = kDefaultCap;
    unsigned threads = 0;
    bool modified = false;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

/// JSON number that carries the %.12e rounding.
Json jnum(double v) {
    if (!std::isfinite(v)) return nullptr;
    return Json::parse(fmt(v));
}

Json jrational(const Rational& r) {
    if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return to_string(r);
}

Json jvec(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(jrational(x));
    return a;
}

Json jdoubles(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(jnum(x));
    return a;
}

std::string csv_doubles(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + fmt(v[i]);
    return out;
}

std::string kac_string(const std::vector<int>& kac) {
    std::string out = "[";
    for (std::size_t i = 0; i < kac.size(); ++i) out += (i ? "," : "") + std::to_string(kac[i]);
    return out + "]";
}

std::vector<Weight> parse_weight_set(const RootSystem& rs, const std::string& s) {
    std::vector<Weight> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        Weight w = parse_vec(item);
        check_length(rs, w);
        out.push_back(w);
    }
    if (out.empty()) throw ParseError("empty weight set");
    return out;
}

/// "1,0:2;0,1:3/2" -> weights with rational coefficients.
std::vector<std::pair<Weight, Rational>> parse_signal(const RootSystem& rs, const std::string& s) {
    std::vector<std::pair<Weight, Rational>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        Rational c = 1;
        if (colon != std::string::npos) c = parse_rational(item.substr(colon + 1));
        Weight w = parse_vec(item.substr(0, colon));
        check_length(rs, w);
        if (!is_dominant(w)) throw NotDominant("signal weight " + to_string(w) + " is not dominant");
        out.emplace_back(w, c);
    }
    if (out.empty()) throw ParseError("empty signal");
    return out;
}

Weight parse_weight(const RootSystem& rs, const std::string& s, const char* what) {
    if (s.empty()) throw ParseError(std::string("missing ") + what);
    Weight w = parse_vec(s);
    check_length(rs, w);
    return w;
}

std::vector<double> parse_point_d(const std::string& s, std::size_t n) {
    std::vector<double> out = to_double(parse_vec(s));
    if (out.size() != n) throw MismatchedSystem("point " + s + " has " + std::to_string(out.size()) +
                                                " coordinates, expected " + std::to_string(n));
    return out;
}

Json orbit_sum_json(const OrbitSum& s) {
    Json terms = Json::array();
    for (const auto& [w, k] : s.terms) terms.push_back({{"lambda", jvec(w)}, {"mult", k}});
    return Json{{"terms", terms}};
}

std::string orbit_sum_csv(const OrbitSum& s) {
    std::string out;
    for (const auto& [w, k] : s.terms) out += to_string(w) + ";" + std::to_string(k) + "\n";
    return out;
}

std::string spectrum_csv(const Spectrum& s) {
    std::string out;
    for (const auto& e : s) out += to_string(e.lambda) + ";" + fmt(e.coeff.real()) + ";" + fmt(e.coeff.imag()) + "\n";
    return out;
}

Json spectrum_json(const Spectrum& s) {
    Json a = Json::array();
    for (const auto& e : s) a.push_back({{"lambda", jvec(e.lambda)}, {"re", jnum(e.coeff.real())}, {"im", jnum(e.coeff.imag())}});
    return Json{{"spectrum", a}};
}

class Runner {
public:
    explicit Runner(const Config& c) : c_(c) {}

    std::string run(const std::string& cmd) {
        if (cmd == "identities") return identities();
        if (cmd == "branch") return branch_cmd();
        rs_ = parse_root_system(c_.type);
        if (cmd == "orbit") return orbit_cmd();
        if (cmd == "product") return product_cmd();
        if (cmd == "grid") return grid_cmd();
        if (cmd == "tm") return tm_cmd();
        if (cmd == "rational") return rational_cmd();
        if (cmd == "eval") return eval_cmd();
        if (cmd == "sample") return sample_cmd();
        if (cmd == "transform") return transform_cmd();
        if (cmd == "ftransform") return ftransform_cmd();
        if (cmd == "laplace-check") return laplace_cmd();
        throw ParseError("unknown subcommand " + cmd);
    }

private:
    bool json(const char* dflt) const { return (c_.format.empty() ? std::string(dflt) : c_.format) == "json"; }

    std::string orbit_cmd() {
        Weight l = parse_weight(rs_, c_.lambda, "--lambda");
        Orbit o = orbit(rs_, l, c_.cap);
        if (json("json")) {
            Json pts = Json::array();
            for (const auto& p : o.points) pts.push_back(jvec(p));
            Json j{{"type", rs_.name()}, {"lambda", jvec(l)}, {"size", o.size.get_str()}, {"points", pts}};
            if (o.size.fits_slong_p()) j["size"] = o.size.get_si();
            return j.dump() + "\n";
        }
        std::string out;
        for (const auto& p : o.points) out += to_string(p) + "\n";
        return out;
    }

    std::string product_cmd() {
        OrbitSum s = product(rs_, parse_weight(rs_, c_.lambda, "--lambda"), parse_weight(rs_, c_.mu, "--mu"), c_.cap);
        return json("json") ? orbit_sum_json(s).dump() + "\n" : orbit_sum_csv(s);
    }

    std::string branch_cmd() {
        ProjectionMatrix proj = builtin_projection(c_.pair);
        rs_ = proj.source;
        OrbitSum s = branch_restrict(parse_weight(rs_, c_.lambda, "--lambda"), proj, c_.cap);
        return json("json") ? orbit_sum_json(s).dump() + "\n" : orbit_sum_csv(s);
    }

    std::string grid_cmd() {
        if (c_.M < 1) throw DomainError("--M must be at least 1");
        auto grid = grid_FM(rs_, c_.M);
        if (json("csv")) {
            Json a = Json::array();
            for (const auto& g : grid) a.push_back({{"kac", g.kac}, {"point", jvec(g.point)}});
            return Json{{"type", rs_.name()}, {"M", c_.M}, {"points", a}}.dump() + "\n";
        }
        std::string out;
        for (const auto& g : grid) out += kac_string(g.kac) + ";" + to_string(g.point) + "\n";
        return out;
    }

    std::string tm_cmd() {
        if (c_.m < 1) throw DomainError("--m must be at least 1");
        if (c_.lambda.empty() && c_.mu.empty()) {
            auto samples = finite_samples(rs_, c_.m, c_.cap);
            if (json("csv")) {
                Json a = Json::array();
                for (const auto& s : samples) a.push_back({{"point", jvec(s.point)}, {"count", s.count}});
                return Json{{"type", rs_.name()}, {"m", c_.m}, {"samples", a}}.dump() + "\n";
            }
            std::string out;
            for (const auto& s : samples) out += to_string(s.point) + ";" + std::to_string(s.count) + "\n";
            return out;
        }
        Weight l = parse_weight(rs_, c_.lambda, "--lambda");
        Weight mu = parse_weight(rs_, c_.mu.empty() ? c_.lambda : c_.mu, "--mu");
        Cyclotomic z = tm_scalar_product(rs_, l, mu, c_.m, c_.cap);
        bool sep = separates(rs_, l, mu, c_.m);
        Complex v = z.to_complex();
        std::string exact = z.is_rational() ? to_string(z.rational_value()) : "-";
        if (json("csv"))
            return Json{{"m", c_.m},          {"lambda", jvec(l)},       {"mu", jvec(mu)},
                        {"exact", exact},     {"re", jnum(v.real())},    {"im", jnum(v.imag())},
                        {"separates", sep}}
                       .dump() +
                   "\n";
        return exact + ";" + fmt(v.real()) + ";" + fmt(v.imag()) + ";" + (sep ? "1" : "0") + "\n";
    }

    std::string rational_cmd() {
        if (c_.M < 1) throw DomainError("--max-M must be at least 1");
        auto rows = rational_elements(rs_, c_.M);
        if (json("csv")) {
            Json a = Json::array();
            for (const auto& r : rows)
                a.push_back({{"M", r.M.get_si()}, {"N", r.N.get_si()}, {"kac", r.grid.kac}, {"fractions", r.fractions()}});
            return Json{{"type", rs_.name()}, {"rows", a}}.dump() + "\n";
        }
        std::string out;
        for (const auto& r : rows)
            out += r.M.get_str() + ";" + r.N.get_str() + ";" + kac_string(r.grid.kac) + ";" + r.fractions() + "\n";
        return out;
    }

    std::string eval_cmd() {
        OrbitFunction f = make_orbit_function(rs_, parse_weight(rs_, c_.lambda, "--lambda"), c_.modified, c_.cap);
        if (c_.points.empty()) throw ParseError("eval needs at least one --x point");
        std::vector<Complex> vals;
        for (const auto& s : c_.points) {
            Vec b = parse_vec(s);
            check_length(rs_, b);
            vals.push_back(eval(f, Point::exact_point(b)));
        }
        if (json("csv")) {
            Json a = Json::array();
            for (std::size_t i = 0; i < vals.size(); ++i)
                a.push_back({{"x", jvec(parse_vec(c_.points[i]))}, {"re", jnum(vals[i].real())}, {"im", jnum(vals[i].imag())}});
            return Json{{"values", a}}.dump() + "\n";
        }
        std::string out;
        for (const auto& v : vals) out += fmt(v.real()) + ";" + fmt(v.imag()) + "\n";
        return out;
    }

    /// Grid F_M as a triangular mesh; barycentric weights over {0, w^vee_i/m_i}.
    std::string sample_cmd() {
        if (!rs_.is_simple()) throw UnsupportedType("sample needs a simple system");
        int M = c_.M > 0 ? c_.M : 12;
        OrbitFunction f = make_orbit_function(rs_, parse_weight(rs_, c_.lambda, "--lambda"), c_.modified, c_.cap);
        auto marks = highest_root(rs_).marks;
        std::string out;
        Json a = Json::array();
        for (const auto& g : grid_FM(rs_, M)) {
            std::vector<double> bary{double(g.kac[0]) / M};
            for (int i = 0; i < rs_.rank; ++i) bary.push_back(double(g.kac[i + 1]) * marks[i] / M);
            Complex v = eval(f, Point::exact_point(g.point));
            if (json("csv"))
                a.push_back({{"bary", jdoubles(bary)}, {"re", jnum(v.real())}, {"im", jnum(v.imag())}});
            else
                out += csv_doubles(bary) + ";" + fmt(v.real()) + ";" + fmt(v.imag()) + "\n";
        }
        return json("csv") ? Json{{"type", rs_.name()}, {"M", M}, {"samples", a}}.dump() + "\n" : out;
    }

    /// Continuous transform of the orbit-function sum given by --signal.
    std::string transform_cmd() {
        auto signal = parse_signal(rs_, c_.signal);
        std::vector<OrbitFunction> fs;
        std::vector<double> coeffs;
        for (const auto& [w, c] : signal) {
            fs.push_back(make_orbit_function(rs_, w, false, c_.cap));
            coeffs.push_back(c.get_d());
        }
        PointFunction f = [&](const std::vector<double>& x) {
            Complex s = 0;
            for (std::size_t i = 0; i < fs.size(); ++i) s += coeffs[i] * eval(fs[i], x);
            return s;
        };
        std::vector<Weight> lambdas;
        if (c_.lambda_set.empty())
            for (const auto& [w, c] : signal) lambdas.push_back(w);
        else
            lambdas = parse_weight_set(rs_, c_.lambda_set);
        Spectrum s = forward_transform(rs_, f, lambdas, c_.level, c_.threads);
        for (auto& e : s) {
            double re = std::abs(e.coeff.real()) < c_.tol ? 0.0 : e.coeff.real();
            double im = std::abs(e.coeff.imag()) < c_.tol ? 0.0 : e.coeff.imag();
            e.coeff = Complex(re, im);
        }
        return json("csv") ? spectrum_json(s).dump() + "\n" : spectrum_csv(s);
    }

    /// Exact finite transform on T_m of the orbit-function sum given by --signal.
    std::string ftransform_cmd() {
        auto signal = parse_signal(rs_, c_.signal);
        std::vector<Weight> lambdas;
        if (c_.lambda_set.empty())
            for (const auto& [w, c] : signal) lambdas.push_back(w);
        else
            lambdas = parse_weight_set(rs_, c_.lambda_set);
        int m = c_.m;
        if (m == 0) {
            std::vector<Weight> all = lambdas;
            for (const auto& [w, c] : signal) all.push_back(w);
            m = minimal_separating_m(rs_, all);
        }
        if (m < 1) throw DomainError("--m must be at least 1");
        std::vector<std::pair<Weight, Cyclotomic>> spec;
        for (const auto& [w, c] : signal) spec.emplace_back(w, Cyclotomic::constant(m, c));
        auto samples = finite_samples(rs_, m, c_.cap);
        std::vector<Cyclotomic> values;
        for (const auto& s : samples) values.push_back(finite_synthesis(rs_, spec, s.point, m));
        auto exact = finite_forward_exact(rs_, samples, values, lambdas, m);
        Spectrum s;
        for (std::size_t i = 0; i < lambdas.size(); ++i) s.push_back({lambdas[i], exact[i].to_complex()});
        if (json("csv")) {
            Json a = Json::array();
            for (std::size_t i = 0; i < lambdas.size(); ++i) {
                Json e{{"lambda", jvec(lambdas[i])}, {"re", jnum(s[i].coeff.real())}, {"im", jnum(s[i].coeff.imag())}};
                if (exact[i].is_rational()) e["exact"] = to_string(exact[i].rational_value());
                a.push_back(e);
            }
            return Json{{"m", m}, {"spectrum", a}}.dump() + "\n";
        }
        return spectrum_csv(s);
    }

    std::string laplace_cmd() {
        Weight l = parse_weight(rs_, c_.lambda, "--lambda");
        OrbitFunction f = make_orbit_function(rs_, l, false, c_.cap);
        LaplaceEigenvalue ev = laplace_eigenvalue(rs_, l);
        std::vector<std::vector<double>> thetas;
        for (const auto& s : c_.points) thetas.push_back(parse_point_d(s, rs_.rank));
        if (thetas.empty()) {
            std::mt19937 gen(c_.seed);
            std::uniform_real_distribution<double> u(0.05, 0.45);
            for (int k = 0; k < c_.count; ++k) {
                std::vector<double> t(rs_.rank);
                for (auto& v : t) v = u(gen);
                thetas.push_back(t);
            }
        }
        Json a = Json::array();
        std::string out = "eigenvalue;" + to_string(ev.pi2) + ";" + fmt(ev.value) + "\n";
        for (const auto& t : thetas) {
            Complex fd = laplace_apply_fd(f, t, c_.h);
            Complex want = ev.value * eval(f, theta_to_coroot(rs_, t));
            double rel = std::abs(fd - want) / std::max(std::abs(want), 1e-300);
            if (want == Complex(0)) rel = std::abs(fd);
            out += csv_doubles(t) + ";" + fmt(fd.real()) + ";" + fmt(fd.imag()) + ";" + fmt(want.real()) + ";" +
                   fmt(want.imag()) + ";" + fmt(rel) + "\n";
            a.push_back({{"theta", jdoubles(t)},
                         {"fd", {jnum(fd.real()), jnum(fd.imag())}},
                         {"expected", {jnum(want.real()), jnum(want.imag())}},
                         {"rel_error", jnum(rel)}});
        }
        if (json("csv"))
            return Json{{"type", rs_.name()}, {"lambda", jvec(l)}, {"eigenvalue_pi2", to_string(ev.pi2)},
                        {"eigenvalue", jnum(ev.value)}, {"points", a}}
                       .dump() +
                   "\n";
        return out;
    }

    /// A_n identity residuals at given or seeded orthogonal points.
    std::string identities() {
        if (c_.n < 1) throw DomainError("--n must be at least 1");
        std::vector<std::vector<double>> xs;
        for (const auto& s : c_.points) xs.push_back(parse_point_d(s, c_.n + 1));
        if (xs.empty()) {
            std::mt19937 gen(c_.seed);
            std::uniform_real_distribution<double> u(-0.5, 0.5);
            for (int k = 0; k < c_.count; ++k) {
                std::vector<double> x(c_.n + 1);
                double mean = 0;
                for (auto& v : x) mean += (v = u(gen));
                mean /= x.size();
                for (auto& v : x) v -= mean;
                xs.push_back(x);
            }
        }
        Json a = Json::array();
        std::string out;
        for (const auto& x : xs) {
            IdentityReport r = an_identity_suite(c_.n, x, c_.s_max);
            std::vector<double> vals{r.generating,       r.complete_generating, r.alternating,
                                     r.newton_complete,  r.newton_elementary,   r.determinant};
            out += csv_doubles(x) + ";" + csv_doubles(vals) + "\n";
            a.push_back({{"x", jdoubles(x)},
                         {"generating", jnum(r.generating)},
                         {"complete_generating", jnum(r.complete_generating)},
                         {"alternating", jnum(r.alternating)},
                         {"newton_complete", jnum(r.newton_complete)},
                         {"newton_elementary", jnum(r.newton_elementary)},
                         {"determinant", jnum(r.determinant)},
                         {"max", jnum(r.max())}});
        }
        return json("csv") ? Json{{"n", c_.n}, {"s_max", c_.s_max}, {"points", a}}.dump() + "\n" : out;
    }

    const Config& c_;
    RootSystem rs_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl-group orbit functions"};
    app.require_subcommand(1);
    Config cfg;

    auto type = [&](CLI::App* s) { s->add_option("--type", cfg.type, "Root system, e.g. A2, B3, A1xA1")->required(); };
    auto lambda = [&](CLI::App* s, bool req) {
        auto* o = s->add_option("--lambda", cfg.lambda, "Weight in omega-coordinates, e.g. 1,0");
        if (req) o->required();
    };
    auto cap = [&](CLI::App* s) { s->add_option("--cap", cfg.cap, "Enumeration cap"); };
    auto common = [&](CLI::App* s) {
        s->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        s->add_option("--output", cfg.output, "Output file (default: standard output)");
    };
    auto points = [&](CLI::App* s, const char* help) { s->add_option("--x", cfg.points, help); };

    auto* orbit = app.add_subcommand("orbit", "Weyl orbit of a weight");
    type(orbit), lambda(orbit, true), cap(orbit);

    auto* product = app.add_subcommand("product", "Decomposition of O(lambda) x O(mu)");
    type(product), lambda(product, true), cap(product);
    product->add_option("--mu", cfg.mu, "Second weight")->required();

    auto* branch = app.add_subcommand("branch", "Restriction of an orbit to a subsystem");
    branch->add_option("--pair", cfg.pair, "Projection, e.g. A3->A2 or C4->A1xC2")->required();
    lambda(branch, true), cap(branch);

    auto* grid = app.add_subcommand("grid", "Grid F_M in Kac coordinates");
    type(grid);
    grid->add_option("--M", cfg.M, "Level M")->required();

    auto* tm = app.add_subcommand("tm", "Fundamental points of T_m, or a scalar product on T_m");
    type(tm), lambda(tm, false), cap(tm);
    tm->add_option("--mu", cfg.mu, "Second weight");
    tm->add_option("--m", cfg.m, "Lattice refinement m")->required();

    auto* rational = app.add_subcommand("rational", "Rational elements of the torus");
    type(rational);
    rational->add_option("--max-M,--M", cfg.M, "Largest order M")->required();

    auto* evalc = app.add_subcommand("eval", "Orbit function values, one re;im row per point");
    type(evalc), lambda(evalc, true), cap(evalc);
    points(evalc, "Point in alpha^vee-coordinates (repeatable)");
    evalc->add_flag("--modified", cfg.modified, "Scale by the stabilizer order");

    auto* sample = app.add_subcommand("sample", "Orbit function on the mesh F_M of the fundamental domain");
    type(sample), lambda(sample, true), cap(sample);
    sample->add_option("--M", cfg.M, "Mesh level (default 12)");
    sample->add_flag("--modified", cfg.modified, "Scale by the stabilizer order");

    auto* transform = app.add_subcommand("transform", "Continuous orbit-function transform by quadrature");
    type(transform), cap(transform);
    transform->add_option("--signal", cfg.signal, "Input f as weight:coeff terms, e.g. \"1,0:2;0,1:3\"")->required();
    transform->add_option("--lambda-set", cfg.lambda_set, "Weights to analyse, ';'-separated (default: signal weights)");
    transform->add_option("--level", cfg.level, "Quadrature level")->check(CLI::PositiveNumber);
    transform->add_option("--tol", cfg.tol, "Real and imaginary parts below tol are reported as 0");
    transform->add_option("--threads", cfg.threads, "Worker threads (0: hardware)");

    auto* ftransform = app.add_subcommand("ftransform", "Exact finite transform on T_m");
    type(ftransform), cap(ftransform);
    ftransform->add_option("--signal", cfg.signal, "Input f as weight:coeff terms")->required();
    ftransform->add_option("--lambda-set", cfg.lambda_set, "Weights to analyse (default: signal weights)");
    ftransform->add_option("--m", cfg.m, "Lattice refinement m (default: smallest separating m)");
    ftransform->add_option("--tol", cfg.tol, "Accepted for symmetry with transform; the result is exact");

    auto* laplace = app.add_subcommand("laplace-check", "Finite-difference Laplacian against the eigenvalue");
    type(laplace), lambda(laplace, true), cap(laplace);
    points(laplace, "Point in theta (omega-basis) coordinates (repeatable)");
    laplace->add_option("--step", cfg.h, "Difference step h")->check(CLI::PositiveNumber);
    laplace->add_option("--count", cfg.count, "Seeded points when no --x is given");
    laplace->add_option("--seed", cfg.seed, "Seed for the generated points");

    auto* ident = app.add_subcommand("identities", "A_n generating-function and Newton identities");
    ident->add_option("--n", cfg.n, "Rank n of A_n");
    points(ident, "Point as n+1 orthogonal coordinates summing to 0 (repeatable)");
    ident->add_option("--s-max", cfg.s_max, "Largest degree");
    ident->add_option("--count", cfg.count, "Seeded points when no --x is given");
    ident->add_option("--seed", cfg.seed, "Seed for the generated points");

    for (auto* s : app.get_subcommands({})) common(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        std::string out = Runner(cfg).run(cmd);
        if (cfg.output.empty()) {
            std::cout << out;
        } else {
            std::ofstream f(cfg.output, std::ios::binary);
            if (!(f << out)) throw DomainError("cannot write " + cfg.output);
        }
        return 0;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << " (size " << e.size() << ")\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: InternalError: " << e.what() << "\n";
        return 2;
    }
}
