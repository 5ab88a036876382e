#include "cli.hpp"

#include "freemeixner/cumulants.hpp"
#include "freemeixner/meixner.hpp"
#include "freemeixner/numerics.hpp"
#include "freemeixner/regression.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <stdexcept>

namespace freemeixner::cli {

namespace {

using nlohmann::json;

constexpr int kMaxCliOrder = 24;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Numeric inputs stay as text until the command decides between exact and float mode.
struct Options {
    std::string a = "0";
    std::string b = "0";
    std::string alpha;
    std::string t = "1";
    std::string q;
    std::string eta = "0";
    std::string sigma = "0";
    std::string s;
    std::string u;
    std::string dilate;
    std::string xmin;
    std::string xmax;
    std::string eps;
    std::string zre = "0";
    std::string zim = "1";
    int n = 8;
    int points = 101;
    std::string format = "json";
    std::string method = "nc_le2";
    std::string suite = "all";
    std::string mode = "auto";
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Result {
    std::string command{};
    json params = json::object();
    json data = json::object();
    std::vector<std::string> identities{};
    std::vector<std::string> notes{};  // extra '#' lines ahead of the CSV table
    Table table{};
    int exit_code = kExitOk;
};

template <Scalar T>
json scalar_json(const T& x) {
    if constexpr (is_exact_v<T>)
        return to_string(x);
    else
        return x;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string cell(const json& value) { return value.is_string() ? value.get<std::string>() : value.dump(); }

void emit(const Result& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json doc{{"command", r.command},
                 {"params", r.params},
                 {"data", r.data},
                 {"provenance", {{"identities", r.identities}}}};
        out << doc.dump(2) << '\n';
        return;
    }
    out << "# command: " << r.command << '\n';
    for (const auto& [key, value] : r.params.items()) out << "# " << key << ": " << cell(value) << '\n';
    out << "# provenance: " << join(r.identities, "; ") << '\n';
    for (const auto& note : r.notes) out << "# " << note << '\n';
    out << join(r.table.columns, ",") << '\n';
    for (const auto& row : r.table.rows) out << join(row, ",") << '\n';
}

bool use_exact(const Options& o, std::initializer_list<const std::string*> inputs) {
    if (o.mode == "exact") return true;
    if (o.mode == "float") return false;
    for (const std::string* text : inputs)
        if (!text->empty() && !is_rational_literal(*text)) return false;
    return true;
}

template <Scalar T>
T parse_scalar(const std::string& text, std::string_view name) {
    try {
        const Rational r = parse_rational(text);
        if constexpr (is_exact_v<T>)
            return r;
        else
            return to_double(r);
    } catch (const DomainError& e) {
        throw UsageError("--" + std::string(name) + ": " + e.what());
    }
}

template <Scalar T>
MeixnerParams<T> meixner_params(const Options& o) {
    MeixnerParams<T> p{parse_scalar<T>(o.a, "a"), parse_scalar<T>(o.b, "b")};
    if (p.b < T(-1)) throw UsageError("--b " + o.b + ": the free Meixner family needs b >= -1");
    return p;
}

int checked_order(const Options& o) {
    if (o.n < 0 || o.n > kMaxCliOrder)
        throw UsageError("--n " + std::to_string(o.n) + ": order must lie in [0, " + std::to_string(kMaxCliOrder) + "]");
    return o.n;
}

template <Scalar T>
json base_params(const MeixnerParams<T>& p) {
    return {{"a", scalar_json(p.a)}, {"b", scalar_json(p.b)}, {"mode", is_exact_v<T> ? "exact" : "float"}};
}

json atoms_json(const std::vector<Atom>& atoms) {
    json out = json::array();
    for (const Atom& atom : atoms) out.push_back({{"location", atom.location}, {"weight", atom.weight}});
    return out;
}

void atom_notes(Result& r, const MeixnerLaw& law) {
    r.notes.push_back("support: " + to_string(law.support.lo) + "," + to_string(law.support.hi));
    r.notes.push_back("atoms: location,weight");
    for (const Atom& atom : law.atoms) r.notes.push_back("atom: " + to_string(atom.location) + "," + to_string(atom.weight));
}

// Runs `body` with a Rational or double tag.
template <class Body>
Result with_mode(bool exact, Body&& body) {
    return exact ? body(Rational{}) : body(0.0);
}

template <Scalar T>
void sequence_output(Result& r, const std::vector<T>& values, int first_index, const std::string& column) {
    json list = json::array();
    r.table.columns = {"n", column};
    for (std::size_t i = 0; i < values.size(); ++i) {
        list.push_back(scalar_json(values[i]));
        r.table.rows.push_back({std::to_string(first_index + static_cast<int>(i)), to_string(values[i])});
    }
    r.data["values"] = std::move(list);
}

Result cmd_density(const Options& o) {
    const auto p = meixner_params<double>(o);
    const MeixnerLaw law = make_law(p);
    const double xmin = o.xmin.empty() ? law.support.lo : parse_scalar<double>(o.xmin, "xmin");
    const double xmax = o.xmax.empty() ? law.support.hi : parse_scalar<double>(o.xmax, "xmax");
    if (o.points < 2) throw UsageError("--points must be >= 2");
    if (!(xmax > xmin) && law.support.width() > 0.0) throw UsageError("--xmax must exceed --xmin");
    std::optional<double> eps;
    if (!o.eps.empty()) {
        eps = parse_scalar<double>(o.eps, "eps");
        if (!(*eps > 0.0)) throw UsageError("--eps must be > 0");
    }

    Result r{.command = "density"};
    r.params = base_params(p);
    r.params["xmin"] = xmin;
    r.params["xmax"] = xmax;
    r.params["points"] = o.points;
    if (eps) r.params["eps"] = *eps;
    r.identities = {"closed-form-density", "atom-residues"};
    if (eps) r.identities.push_back("stieltjes-inversion");

    std::vector<double> xs, ys, smoothed;
    // A degenerate support (b = -1) has no continuous part: the table stays empty.
    if (law.support.width() > 0.0) {
        for (int i = 0; i < o.points; ++i) {
            const double x = xmin + (xmax - xmin) * i / (o.points - 1);
            xs.push_back(x);
            ys.push_back(density(p, x));
            if (eps) smoothed.push_back(stieltjes_invert(p, x, *eps));
        }
    }
    r.data["support"] = {law.support.lo, law.support.hi};
    r.data["atoms"] = atoms_json(law.atoms);
    r.data["x"] = xs;
    r.data["density"] = ys;
    if (eps) r.data["stieltjes"] = smoothed;

    atom_notes(r, law);
    r.table.columns = {"x", "density"};
    if (eps) r.table.columns.push_back("stieltjes");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<std::string> row{to_string(xs[i]), to_string(ys[i])};
        if (eps) row.push_back(to_string(smoothed[i]));
        r.table.rows.push_back(std::move(row));
    }
    return r;
}

Result cmd_moments(const Options& o) {
    return with_mode(use_exact(o, {&o.a, &o.b}), [&]<Scalar T>(T) {
        const auto p = meixner_params<T>(o);
        const int n = checked_order(o);
        Result r{.command = "moments"};
        r.params = base_params(p);
        r.params["n"] = n;
        r.identities = {"moment-recursion"};
        sequence_output(r, moments(p, n).values(), 0, "m_n");
        return r;
    });
}

Result cmd_cumulants(const Options& o) {
    return with_mode(use_exact(o, {&o.a, &o.b, &o.q}), [&]<Scalar T>(T) {
        const auto p = meixner_params<T>(o);
        const int n = checked_order(o);
        Result r{.command = "cumulants"};
        r.params = base_params(p);
        r.params["n"] = n;
        CumulantSequence<T> seq = CumulantSequence<T>::zeros(1);
        if (!o.q.empty()) {
            const T qv = parse_scalar<T>(o.q, "q");
            r.params["q"] = scalar_json(qv);
            r.identities = {"q-recurrence"};
            seq = q_cumulants(p.a, p.b, qv, n);
        } else {
            const CumulantMethod method = parse_cumulant_method(o.method);
            r.params["method"] = to_string(method);
            switch (method) {
                case CumulantMethod::nc_le2: r.identities = {"nc-le2-cumulant-sum"}; break;
                case CumulantMethod::semicircle: r.identities = {"semicircle-levy-khinchin-moments"}; break;
                case CumulantMethod::from_moments:
                    r.identities = {"moment-recursion", "moment-cumulant-inversion"};
                    break;
            }
            seq = cumulants(p, n, method);
        }
        sequence_output(r, seq.values(), 1, "R_n");
        return r;
    });
}

Result cmd_classify(const Options& o) {
    return with_mode(use_exact(o, {&o.a, &o.b}), [&]<Scalar T>(T) {
        const auto p = meixner_params<T>(o);
        const ClassificationDetail detail = classify_detail(p);
        Result r{.command = "classify"};
        r.params = base_params(p);
        r.identities = {"classification"};
        r.data["type"] = to_string(detail.type);
        r.data["predicates"] = detail.predicates;
        r.table.columns = {"type", "predicates"};
        r.table.rows.push_back({to_string(detail.type), join(detail.predicates, "; ")});
        return r;
    });
}

Result cmd_atoms(const Options& o) {
    const auto p = meixner_params<double>(o);
    const MeixnerLaw law = make_law(p);
    Result r{.command = "atoms"};
    r.params = base_params(p);
    r.identities = {"atom-residues"};
    const double mass = continuous_mass(law);
    r.data["support"] = {law.support.lo, law.support.hi};
    r.data["atoms"] = atoms_json(law.atoms);
    r.data["continuous_mass"] = mass;
    r.notes.push_back("support: " + to_string(law.support.lo) + "," + to_string(law.support.hi));
    r.notes.push_back("continuous_mass: " + to_string(mass));
    r.table.columns = {"location", "weight"};
    for (const Atom& atom : law.atoms) r.table.rows.push_back({to_string(atom.location), to_string(atom.weight)});
    return r;
}

Result cmd_convolve_power(const Options& o) {
    return with_mode(use_exact(o, {&o.a, &o.b, &o.t, &o.dilate}), [&]<Scalar T>(T) {
        const auto p = meixner_params<T>(o);
        const int n = checked_order(o);
        const T t = parse_scalar<T>(o.t, "t");
        Result r{.command = "convolve-power"};
        r.params = base_params(p);
        r.params["n"] = n;
        r.params["t"] = scalar_json(t);
        r.identities = {"cumulant-scaling", "moment-cumulant-relation"};
        auto seq = convolution_power(cumulants(p, std::max(n, 2)), t);
        if (!o.dilate.empty()) {
            const T lambda = parse_scalar<T>(o.dilate, "dilate");
            r.params["dilate"] = scalar_json(lambda);
            r.identities.push_back("dilation");
            seq = dilate(seq, lambda);
        }
        auto values = cumulants_to_moments(seq).values();
        values.resize(n + 1);
        sequence_output(r, values, 0, "m_n");
        return r;
    });
}

json report_json(const RegressionReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"order", c.order}, {"label", c.label}, {"residual", c.residual}, {"passed", c.passed}});
    json constants = json::object();
    for (const auto& [key, value] : rep.constants) constants[key] = value;
    const auto failure = rep.first_failure();
    return {{"identity", rep.identity},
            {"passed", rep.passed()},
            {"order_checked", rep.order_checked},
            {"max_residual", rep.max_residual},
            {"first_failure", failure ? json(*failure) : json(nullptr)},
            {"constants", constants},
            {"checks", checks}};
}

Result cmd_verify(const Options& o) {
    static const std::vector<std::string> kSuites{"regression", "recursion", "orthogonality", "levy"};
    const bool all = o.suite == "all";
    std::vector<std::string> suites = all ? kSuites : std::vector<std::string>{o.suite};

    return with_mode(use_exact(o, {&o.a, &o.b, &o.alpha, &o.eta, &o.sigma, &o.s, &o.u}), [&]<Scalar T>(T) {
        const auto p = meixner_params<T>(o);
        const int n = checked_order(o);
        Result r{.command = "verify"};
        r.params = base_params(p);
        r.params["n"] = n;
        r.params["suite"] = o.suite;

        std::vector<RegressionReport> reports;
        json skipped = json::array();
        auto skip = [&](const std::string& suite, const std::string& reason) {
            if (!all) throw UsageError(suite + " suite: " + reason);
            skipped.push_back({{"suite", suite}, {"reason", reason}});
            r.notes.push_back("skipped " + suite + ": " + reason);
        };

        for (const auto& suite : suites) {
            if (suite == "regression") {
                if (o.alpha.empty()) {
                    skip(suite, "--alpha is required");
                    continue;
                }
                const T alpha = parse_scalar<T>(o.alpha, "alpha");
                r.params["alpha"] = scalar_json(alpha);
                const auto spec = build_free_pair(alpha, p, n + 2);
                reports.push_back(verify_linear_regression(spec, n));
                reports.push_back(verify_quadratic_variance(spec, n));
                reports.push_back(verify_mixed_cumulants(spec, n));
                r.identities.insert(r.identities.end(), {"linear-regression", "quadratic-variance", "mixed-cumulants"});
            } else if (suite == "recursion") {
                if (p.b == T(-1)) {
                    skip(suite, "the recursion divides by 1 + b; b = -1 is excluded");
                    continue;
                }
                reports.push_back(verify_moment_recursion(p, std::max(n, 2)));
                r.identities.push_back("moment-recursion");
            } else if (suite == "orthogonality") {
                reports.push_back(verify_orthogonality(p.to_double(), std::max(n, 1)));
                r.identities.push_back("orthogonality");
            } else if (suite == "levy") {
                if (o.s.empty() || o.u.empty()) {
                    skip(suite, "--s and --u are required");
                    continue;
                }
                const LevyParams<T> l{parse_scalar<T>(o.eta, "eta"), parse_scalar<T>(o.sigma, "sigma")};
                const T s = parse_scalar<T>(o.s, "s");
                const T u = parse_scalar<T>(o.u, "u");
                r.params["eta"] = scalar_json(l.eta);
                r.params["sigma"] = scalar_json(l.sigma);
                r.params["s"] = scalar_json(s);
                r.params["u"] = scalar_json(u);
                reports.push_back(verify_levy_martingale(l, s, u, n));
                r.identities.push_back("levy-martingale");
            } else {
                throw UsageError("--suite " + suite + ": expected regression, recursion, orthogonality, levy or all");
            }
        }

        bool passed = true;
        json list = json::array();
        r.table.columns = {"identity", "order", "label", "residual", "passed"};
        for (const auto& rep : reports) {
            passed = passed && rep.passed();
            list.push_back(report_json(rep));
            for (const auto& [key, value] : rep.constants) r.notes.push_back(rep.identity + " " + key + ": " + value);
            for (const auto& c : rep.checks)
                r.table.rows.push_back(
                    {rep.identity, std::to_string(c.order), c.label, to_string(c.residual), c.passed ? "pass" : "FAIL"});
        }
        r.data["passed"] = passed;
        r.data["reports"] = std::move(list);
        r.data["skipped"] = std::move(skipped);
        r.notes.push_back(std::string("result: ") + (passed ? "pass" : "FAIL"));
        r.exit_code = passed ? kExitOk : kExitVerifyFailed;
        return r;
    });
}

// Square roots are exact when the square is a perfect rational square.
template <Scalar T>
json root_json(const T& squared, int sign) {
    if constexpr (is_exact_v<T>) {
        if (auto root = exact_sqrt(squared)) return to_string(Rational(sign < 0 ? Rational(-*root) : *root));
    }
    return sign * std::sqrt(to_double(squared));
}

Result cmd_levy(const Options& o) {
    return with_mode(use_exact(o, {&o.eta, &o.sigma, &o.t}), [&]<Scalar T>(T) {
        const LevyParams<T> l{parse_scalar<T>(o.eta, "eta"), parse_scalar<T>(o.sigma, "sigma")};
        const T t = parse_scalar<T>(o.t, "t");
        const int n = checked_order(o);
        const auto marginal = levy_marginal(l, t);
        Result r{.command = "levy"};
        r.params = {{"eta", scalar_json(l.eta)},
                    {"sigma", scalar_json(l.sigma)},
                    {"t", scalar_json(t)},
                    {"n", n},
                    {"mode", is_exact_v<T> ? "exact" : "float"}};
        r.identities = {"levy-marginal", "levy-cumulant-linearity"};
        const json a = root_json(marginal.a_squared, marginal.a_sign);
        const json dilation = root_json(marginal.dilation_squared, 1);
        r.data["a"] = a;
        r.data["a_squared"] = scalar_json(marginal.a_squared);
        r.data["b"] = scalar_json(marginal.b);
        r.data["dilation"] = dilation;
        r.data["dilation_squared"] = scalar_json(marginal.dilation_squared);
        r.notes.push_back("a: " + cell(a));
        r.notes.push_back("a_squared: " + to_string(marginal.a_squared));
        r.notes.push_back("b: " + to_string(marginal.b));
        r.notes.push_back("dilation: " + cell(dilation));
        auto values = cumulants_to_moments(levy_cumulants(l, t, std::max(n, 2))).values();
        values.resize(n + 1);
        sequence_output(r, values, 0, "m_n");
        r.data["moments"] = r.data["values"];
        r.data.erase("values");
        return r;
    });
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Result cmd_transform(const Options& o) {
    const auto p = meixner_params<double>(o);
    const Complex z(parse_scalar<double>(o.zre, "zre"), parse_scalar<double>(o.zim, "zim"));
    Result r{.command = "transform"};
    r.params = base_params(p);
    r.params["zre"] = z.real();
    r.params["zim"] = z.imag();
    r.identities = {"cauchy-transform", "r-transform"};
    const Complex g = cauchy_transform(p, z);
    r.data["z"] = complex_json(z);
    r.data["G"] = complex_json(g);
    r.table.columns = {"quantity", "re", "im"};
    r.table.rows.push_back({"G", to_string(g.real()), to_string(g.imag())});
    try {
        const Complex rz = r_transform(p, z);
        r.data["r"] = complex_json(rz);
        r.table.rows.push_back({"r", to_string(rz.real()), to_string(rz.imag())});
    } catch (const DomainError& e) {
        // G is still meaningful far from the origin; r only near it.
        r.data["r"] = nullptr;
        r.data["r_error"] = e.what();
        r.notes.push_back(std::string("r: ") + e.what());
    }
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Free Meixner laws: moments, cumulants, transforms and identity checks", "freemeixner"};
    app.require_subcommand(1, 1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output encoding")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--mode", o.mode, "auto: exact when every input is p/q or an integer")
            ->check(CLI::IsMember({"auto", "exact", "float"}));
    };
    auto law = [&](CLI::App* sub) {
        sub->add_option("--a", o.a, "Parameter a (p/q, integer or decimal)");
        sub->add_option("--b", o.b, "Parameter b, at least -1");
        common(sub);
    };
    auto order = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Order N (at most 24)"); };

    auto* density = app.add_subcommand("density", "Tabulate the density with the atom list in the header");
    law(density);
    density->add_option("--xmin", o.xmin, "Grid start (default: left support endpoint)");
    density->add_option("--xmax", o.xmax, "Grid end (default: right support endpoint)");
    density->add_option("--points", o.points, "Grid size, at least 2");
    density->add_option("--eps", o.eps, "Add a column -Im G(x + i eps) / pi");

    auto* moments_cmd = app.add_subcommand("moments", "Moments m_0..m_N");
    law(moments_cmd);
    order(moments_cmd);

    auto* cumulants_cmd = app.add_subcommand("cumulants", "Free cumulants R_1..R_N");
    law(cumulants_cmd);
    order(cumulants_cmd);
    cumulants_cmd->add_option("--method", o.method, "nc_le2, semicircle or from_moments")
        ->check(CLI::IsMember({"nc_le2", "semicircle", "from_moments"}));
    cumulants_cmd->add_option("--q", o.q, "Use the q-deformed recurrence with this q in (-1, 1]");

    auto* classify_cmd = app.add_subcommand("classify", "Type of the law and the predicates that selected it");
    law(classify_cmd);

    auto* atoms_cmd = app.add_subcommand("atoms", "Point masses, support and continuous mass");
    law(atoms_cmd);

    auto* power = app.add_subcommand("convolve-power", "Moments of the t-th free convolution power");
    law(power);
    order(power);
    power->add_option("--t", o.t, "Power t >= 1");
    power->add_option("--dilate", o.dilate, "Dilate the result by this factor");

    auto* verify = app.add_subcommand("verify", "Check identities; exit 1 when any check fails");
    law(verify);
    order(verify);
    verify->add_option("--suite", o.suite, "regression, recursion, orthogonality, levy or all")
        ->check(CLI::IsMember({"regression", "recursion", "orthogonality", "levy", "all"}));
    verify->add_option("--alpha", o.alpha, "Cumulant split for the free pair, 0 < alpha < 1");
    verify->add_option("--eta", o.eta, "Levy drift parameter");
    verify->add_option("--sigma", o.sigma, "Levy parameter sigma >= 0");
    verify->add_option("--s", o.s, "Earlier time");
    verify->add_option("--u", o.u, "Later time");

    auto* levy = app.add_subcommand("levy", "Marginal law of a free Levy process at time t");
    levy->add_option("--eta", o.eta, "Drift parameter");
    levy->add_option("--sigma", o.sigma, "Parameter sigma >= 0");
    levy->add_option("--t", o.t, "Time t > 0");
    order(levy);
    common(levy);

    auto* transform = app.add_subcommand("transform", "Cauchy transform G and R-transform r at a complex point");
    law(transform);
    transform->add_option("--zre", o.zre, "Real part of z");
    transform->add_option("--zim", o.zim, "Imaginary part of z");

    std::vector<std::string> storage{"freemeixner"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Result result;
        if (*density) result = cmd_density(o);
        else if (*moments_cmd) result = cmd_moments(o);
        else if (*cumulants_cmd) result = cmd_cumulants(o);
        else if (*classify_cmd) result = cmd_classify(o);
        else if (*atoms_cmd) result = cmd_atoms(o);
        else if (*power) result = cmd_convolve_power(o);
        else if (*verify) result = cmd_verify(o);
        else if (*levy) result = cmd_levy(o);
        else result = cmd_transform(o);
        emit(result, o.format, out);
        return result.exit_code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const OrderError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const NumericError& e) {
        err << "error: " << e.what() << " (best estimate " << to_string(e.best_estimate()) << ")\n";
    }
    return kExitUsage;
}

}  // namespace freemeixner::cli
