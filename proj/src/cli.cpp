#include "tenspect/cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tenspect/counting.hpp"
#include "tenspect/fixtures.hpp"
#include "tenspect/hosvd.hpp"
#include "tenspect/hyperdet.hpp"
#include "tenspect/io.hpp"
#include "tenspect/lowrank.hpp"
#include "tenspect/singspace.hpp"
#include "tenspect/spectral.hpp"
#include "tenspect/tuples.hpp"

namespace tenspect::cli {

using nlohmann::json;
using io::InputError;

namespace {

const std::vector<std::string> kSubcommands = {"svd",   "approx",    "orthogonalize", "tuples", "eigen",
                                               "singspace", "count", "hosvd",     "hyperdet",      "demo-paper"};

struct Options {
    std::string input;
    std::string fixture;
    std::string format = "json";
    std::uint64_t seed = 42;
    std::size_t starts = 500;
    std::size_t real_starts = 200;
    std::size_t rank = 1;
    std::size_t threads = 0;
    bool allow_large = false;
    bool symmetric = false;
    std::vector<std::size_t> sizes;
};

json fixture_json(const std::string& name) {
    if (name == "identity3") return io::to_json(fixtures::identity(3));
    if (name == "example-f") return io::to_json(fixtures::example_tensor());
    if (name == "example-kronecker") return io::to_json(fixtures::sum_of_terms(fixtures::example_kronecker_terms()));
    throw InputError("fixture", "unknown fixture '" + name + "' (known: identity3, example-f, example-kronecker)");
}

io::TensorFile load(const Options& o) {
    if (!o.input.empty() && !o.fixture.empty()) throw InputError("input", "--input and --fixture are mutually exclusive");
    if (!o.input.empty()) return io::read_tensor_file(o.input);
    if (o.fixture.empty()) throw InputError("input", "provide --input FILE or --fixture NAME");
    return io::parse_tensor(fixture_json(o.fixture));
}

Matrix load_matrix(const Options& o) {
    const Tensor t = load(o).real();
    if (t.order() != 2) throw InputError("shape", "expected a matrix (2 modes), got " + shape_to_string(t.shape()));
    return Matrix::from_tensor(t);
}

SolverConfig solver_config(const Options& o) {
    SolverConfig cfg;
    cfg.seed = o.seed;
    cfg.complex_starts = o.starts;
    cfg.real_starts = o.real_starts;
    cfg.allow_large = o.allow_large;
    cfg.threads = o.threads;
    return cfg;
}

json config_json(const std::string& command, const Options& o) {
    json c{{"command", command}, {"format", o.format}};
    if (!o.input.empty()) c["input"] = o.input;
    if (!o.fixture.empty()) c["fixture"] = o.fixture;
    if (command == "tuples" || command == "eigen" || command == "hyperdet" || command == "demo-paper" ||
        command == "approx") {
        c["seed"] = o.seed;
        c["starts"] = o.starts;
        c["real_starts"] = o.real_starts;
        c["threads"] = o.threads == 0 ? default_thread_count() : o.threads;
    }
    if (command == "approx") c["rank"] = o.rank;
    if (command == "count") {
        c["sizes"] = o.sizes;
        c["symmetric"] = o.symmetric;
    }
    if (command == "singspace") c["symmetric"] = o.symmetric;
    if (o.allow_large) c["allow_large"] = true;
    return c;
}

json big_json(const BigInt& v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

json scalar_json(Complex c, bool real) { return real ? json(c.real()) : io::to_json(c); }

json vector_json(const ComplexVector& v, bool real) {
    if (!real) return io::to_json(std::span<const Complex>(v));
    json out = json::array();
    for (const auto& c : v) out.push_back(c.real());
    return out;
}

json diagnostics_json(const SolverDiagnostics& d) {
    return {{"starts", d.starts},
            {"converged", d.converged},
            {"rejected", d.rejected},
            {"failed", d.failed},
            {"duplicates", d.duplicates}};
}

json svd_json(const Svd& s) {
    return {{"sigmas", s.sigmas}, {"rank", s.rank}, {"u", io::to_json(s.u)}, {"v", io::to_json(s.v)}};
}

double distance_for(double norm_a, Complex lambda) {
    return std::sqrt(std::max(0.0, norm_a * norm_a - std::norm(lambda)));
}

json tuples_json(const TupleResult& r, double norm_a) {
    json list = json::array();
    for (const auto& t : r.tuples) {
        json factors = json::array();
        for (const auto& x : t.xs) factors.push_back(vector_json(x, t.is_real));
        json e{{"lambda", scalar_json(t.lambda, t.is_real)},
               {"real", t.is_real},
               {"residual", t.residual},
               {"factors", factors}};
        if (t.is_real) e["distance"] = distance_for(norm_a, t.lambda);
        if (t.zero_lambda) e["zero_lambda"] = true;
        list.push_back(e);
    }
    return list;
}

double cosine(std::span<const double> a, std::span<const double> b) {
    return std::abs(dot(a, b)) / (norm(a) * norm(b));
}

json cmd_svd(const Options& o) {
    const Matrix a = load_matrix(o);
    const Svd s = svd(a);
    json r = svd_json(s);
    r["shape"] = {a.rows(), a.cols()};
    const double an = a.norm();
    r["reconstruction_error"] = (a - s.reconstruct()).norm() / (an > 0 ? an : 1.0);
    return r;
}

json cmd_approx(const Options& o) {
    const io::TensorFile file = load(o);
    const Tensor t = file.real();
    if (o.rank == 0) throw InputError("rank", "must be at least 1");
    json r;
    if (t.order() == 2) {
        const Matrix a = Matrix::from_tensor(t);
        const Svd s = svd(a);
        if (o.rank > s.rank) {
            throw InputError("rank", "must not exceed the matrix rank " + std::to_string(s.rank));
        }
        const auto crit = enumerate_critical(s, o.rank);
        const Matrix best = best_rank_r(s, o.rank);
        r = io::to_json(best.to_tensor());
        r["distance"] = (a - best).norm();
        json points = json::array();
        for (const auto& p : crit.points) points.push_back({{"index_set", p.index_set}, {"distance", p.distance}});
        r["critical_points"] = points;
        r["degenerate"] = crit.degenerate;
        return r;
    }
    if (o.rank != 1) throw InputError("rank", "tensors of order 3 or more support only --rank 1");
    const auto best = best_rank_one(t, solver_config(o));
    r = io::to_json(best.approximation);
    r["distance"] = best.distance;
    r["lambda"] = best.tuple.lambda.real();
    json factors = json::array();
    for (const auto& x : best.tuple.real_factors()) factors.push_back(x);
    r["factors"] = factors;
    r["diagnostics"] = diagnostics_json(best.diagnostics);
    return r;
}

json cmd_orthogonalize(const Options& o) {
    const Matrix a = load_matrix(o);
    if (a.rows() != a.cols()) throw InputError("shape", "orthogonalize needs a square matrix");
    const Matrix q = lowdin(a);
    json r = io::to_json(q.to_tensor());
    r["distance"] = (a - q).norm();
    json distances = json::array();
    for (const auto& c : orthogonal_critical(a)) distances.push_back((a - c).norm());
    r["critical_count"] = distances.size();
    r["critical_distances"] = distances;
    return r;
}

json cmd_tuples(const Options& o) {
    const io::TensorFile file = load(o);
    if (file.tensor.order() < 2) throw InputError("shape", "tuples need at least 2 modes");
    const TupleResult res = singular_tuples(file.tensor, solver_config(o));
    const double na = frobenius_norm(file.tensor);
    json r{{"shape", file.tensor.shape()}};
    Shape sizes = file.tensor.shape();
    try {
        r["expected_count"] = big_json(count_singular_tuples(sizes, o.allow_large));
    } catch (const std::invalid_argument&) {
        r["expected_count"] = nullptr;
    }
    r["count"] = res.tuples.size();
    r["real_count"] = res.real_count();
    r["tuples"] = tuples_json(res, na);
    if (res.real_count() > 0) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& t : res.tuples)
            if (t.is_real) best = std::min(best, distance_for(na, t.lambda));
        r["min_real_distance"] = best;
    }
    r["diagnostics"] = diagnostics_json(res.diagnostics);
    return r;
}

json cmd_eigen(const Options& o) {
    const io::TensorFile file = load(o);
    try {
        require_symmetric(file.tensor);
    } catch (const std::invalid_argument& e) {
        throw InputError(file.from_polynomial ? "symmetric_poly" : "data", e.what());
    }
    const EigenResult res = eigenpairs(file.tensor, solver_config(o));
    const std::size_t n = file.tensor.dim(0);
    const std::size_t d = file.tensor.order();
    json pairs = json::array();
    for (const auto& p : res.pairs) {
        pairs.push_back({{"lambda", scalar_json(p.lambda, p.is_real)},
                         {"real", p.is_real},
                         {"residual", p.residual},
                         {"x", vector_json(p.x, p.is_real)}});
    }
    return {{"shape", file.tensor.shape()},
            {"expected_count", big_json(count_eigentensors(static_cast<unsigned>(n - 1), static_cast<unsigned>(d)))},
            {"count", res.pairs.size()},
            {"real_count", res.real_count()},
            {"pairs", pairs},
            {"diagnostics", diagnostics_json(res.diagnostics)}};
}

json cmd_singspace(const Options& o) {
    const io::TensorFile file = load(o);
    const bool sym = o.symmetric || file.from_polynomial;
    SingularSpaceSystem sys;
    try {
        sys = sym ? assemble_symmetric(file.tensor) : assemble_general(file.tensor);
    } catch (const std::invalid_argument& e) {
        throw InputError(file.from_polynomial ? "symmetric_poly" : "data", e.what());
    }
    const DimensionReport rep = dimension_report(sys);
    return {{"shape", rep.shape},
            {"symmetric", rep.symmetric},
            {"equations", rep.equations},
            {"ambient", sys.ambient},
            {"numeric_rank", rep.numeric_rank},
            {"numeric_dimension", rep.numeric_dimension},
            {"formula_dimension", rep.formula_dimension},
            {"tuple_count", rep.tuple_count},
            {"equations_independent", rep.equations_independent},
            {"formula_matches", rep.formula_matches},
            {"tuple_basis_possible", rep.tuple_basis_possible},
            {"membership_residual", sys.residual(file.tensor)},
            {"notes", rep.notes}};
}

json cmd_count(const Options& o) {
    if (o.symmetric) {
        if (o.sizes.size() != 2) throw InputError("sizes", "--symmetric expects VARIABLES DEGREE");
        if (o.sizes[0] == 0 || o.sizes[1] < 1) throw InputError("sizes", "need at least one variable and degree ≥ 1");
        return {{"count", big_json(count_eigentensors(static_cast<unsigned>(o.sizes[0] - 1),
                                                      static_cast<unsigned>(o.sizes[1])))}};
    }
    if (o.sizes.empty()) throw InputError("sizes", "expected mode sizes, e.g. count 3 3 3");
    try {
        return {{"count", big_json(count_singular_tuples(o.sizes, o.allow_large))}};
    } catch (const std::invalid_argument& e) {
        throw InputError("sizes", e.what());
    }
}

json cmd_hosvd(const Options& o) {
    const Tensor t = load(o).real();
    if (t.order() < 2) throw InputError("shape", "hosvd needs at least 2 modes");
    const Hosvd h = hosvd(t);
    const HosvdResiduals res = verify_hosvd(t, h);
    json factors = json::array();
    for (const auto& f : h.factors) factors.push_back(io::to_json(f));
    return {{"core", io::to_json(h.core)},
            {"factors", factors},
            {"mode_singular_values", h.mode_singular_values},
            {"residuals",
             {{"reconstruction", res.reconstruction},
              {"orthogonality", res.orthogonality},
              {"ordering", res.ordering},
              {"factor_orthogonality", res.factor_orthogonality}}}};
}

json cmd_hyperdet(const Options& o) {
    const Tensor t = load(o).real();
    if (t.shape() != Shape{2, 2, 2}) throw InputError("shape", "hyperdet needs a 2x2x2 tensor");
    const Hyperdet222Report rep = duality_check(t, solver_config(o));
    json values = json::array();
    for (std::size_t k = 0; k < rep.critical_tuples.size(); ++k) {
        const auto& tup = rep.critical_tuples[k];
        values.push_back({{"lambda", scalar_json(tup.lambda, tup.is_real)},
                          {"real", tup.is_real},
                          {"abs_det", rep.vanishing_values.at(k)}});
    }
    return {{"hyperdet", cayley_hyperdet(t)},
            {"critical_points", values},
            {"max_abs", rep.max_abs},
            {"tolerance", rep.tolerance},
            {"passed", rep.passed},
            {"degenerate", rep.degenerate},
            {"warnings", rep.warnings},
            {"diagnostics", diagnostics_json(rep.diagnostics)}};
}

json cmd_demo_paper(const Options& o) {
    if (!o.input.empty() || !o.fixture.empty()) throw InputError("input", "demo-paper always uses the bundled tensor");
    const Tensor f = fixtures::example_tensor();
    const SolverConfig cfg = solver_config(o);
    const TupleResult res = singular_tuples(f, cfg);
    const RankOneApproximation best = best_rank_one(f, cfg);

    const auto factors = best.tuple.real_factors();
    const auto published = fixtures::example_best_rank_one_factors();
    const std::vector<Vector> published_modes = {published.x, published.y, published.z};
    json scaled = json::array();
    json cosines = json::array();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        Vector v = factors[i];
        const double lead = v[0];
        for (auto& x : v) x /= lead;
        scaled.push_back(v);
        cosines.push_back(cosine(factors[i], published_modes[i]));
    }

    const Tensor kron = fixtures::sum_of_terms(fixtures::example_kronecker_terms());
    return {{"fixture", "example-f"},
            {"shape", f.shape()},
            {"expected_count", big_json(count_singular_tuples(f.shape()))},
            {"count", res.tuples.size()},
            {"real_count", res.real_count()},
            {"min_distance", best.distance},
            {"best_lambda", best.tuple.lambda.real()},
            {"best_factors_leading_one", scaled},
            {"published_factor_cosines", cosines},
            {"kronecker_relative_error", frobenius_norm(f - kron) / frobenius_norm(f)},
            {"tuples", tuples_json(res, frobenius_norm(f))},
            {"diagnostics", diagnostics_json(res.diagnostics)}};
}

void render(const json& j, const std::string& indent, std::ostream& os) {
    const auto inline_ok = [](const json& v) {
        if (!v.is_array()) return !v.is_object();
        return std::all_of(v.begin(), v.end(), [](const json& e) {
            return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(),
                                                                    [](const json& x) { return x.is_primitive(); }));
        });
    };
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (inline_ok(value)) {
                os << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            } else {
                os << indent << key << ":\n";
                render(value, indent + "  ", os);
            }
        }
    } else if (j.is_array()) {
        std::size_t k = 0;
        for (const auto& value : j) {
            if (inline_ok(value)) {
                os << indent << "- " << value.dump() << '\n';
            } else {
                os << indent << "[" << k << "]\n";
                render(value, indent + "  ", os);
            }
            ++k;
        }
    } else {
        os << indent << j.dump() << '\n';
    }
}

void add_input_options(CLI::App* sub, Options& o) {
    sub->add_option("--input,-i", o.input, "Tensor file (JSON)");
    sub->add_option("--fixture", o.fixture, "Bundled tensor: identity3, example-f, example-kronecker");
}

void add_solver_options(CLI::App* sub, Options& o) {
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    sub->add_option("--starts", o.starts, "Complex Newton starts")->capture_default_str();
    sub->add_option("--real-starts", o.real_starts, "Real power-iteration starts")->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads (0 reads TENSPECT_THREADS)");
    sub->add_flag("--allow-large", o.allow_large, "Lift the desk-scale size guard");
}

}  // namespace

std::string render_text(const std::string& json_report) {
    std::ostringstream os;
    render(json::parse(json_report), "", os);
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (!args.empty() && !args[0].empty() && args[0][0] != '-' &&
        std::find(kSubcommands.begin(), kSubcommands.end(), args[0]) == kSubcommands.end()) {
        err << "error: field 'subcommand': unknown subcommand '" << args[0] << "'\n";
        return kExitInputError;
    }

    Options o;
    CLI::App app{"Spectral and singular-tuple toolkit for small matrices and tensors", "tenspect"};
    app.require_subcommand(1);
    std::map<std::string, CLI::App*> subs;
    const std::map<std::string, std::string> descriptions = {
        {"svd", "Singular value decomposition of a matrix"},
        {"approx", "Best rank-r approximation (matrices) or rank-one approximation (tensors)"},
        {"orthogonalize", "Nearest orthogonal matrix and all orthogonal critical points"},
        {"tuples", "Singular vector tuples of a tensor"},
        {"eigen", "Eigenvectors of a symmetric tensor"},
        {"singspace", "Linear equations of the singular space and its dimension"},
        {"count", "Number of singular tuples of a general tensor format"},
        {"hosvd", "Higher-order SVD"},
        {"hyperdet", "Cayley hyperdeterminant and distance-duality check (2x2x2)"},
        {"demo-paper", "Reproduce the bundled 3x3x2 example"},
    };
    for (const auto& name : kSubcommands) {
        CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        subs[name] = sub;
    }
    for (const auto* name : {"svd", "approx", "orthogonalize", "tuples", "eigen", "singspace", "hosvd", "hyperdet"})
        add_input_options(subs[name], o);
    for (const auto* name : {"approx", "tuples", "eigen", "hyperdet", "demo-paper"}) add_solver_options(subs[name], o);
    subs["approx"]->add_option("--rank,-r", o.rank, "Target rank")->capture_default_str();
    subs["singspace"]->add_flag("--symmetric", o.symmetric, "Use the symmetric equations on Sym^d");
    subs["count"]->add_option("sizes", o.sizes, "Mode sizes, or VARIABLES DEGREE with --symmetric");
    subs["count"]->add_flag("--symmetric", o.symmetric, "Count eigenvectors of a symmetric tensor");
    subs["count"]->add_flag("--allow-large", o.allow_large, "Lift the degree guard");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        json report;
        if (command == "svd") report = cmd_svd(o);
        else if (command == "approx") report = cmd_approx(o);
        else if (command == "orthogonalize") report = cmd_orthogonalize(o);
        else if (command == "tuples") report = cmd_tuples(o);
        else if (command == "eigen") report = cmd_eigen(o);
        else if (command == "singspace") report = cmd_singspace(o);
        else if (command == "count") report = cmd_count(o);
        else if (command == "hosvd") report = cmd_hosvd(o);
        else if (command == "hyperdet") report = cmd_hyperdet(o);
        else report = cmd_demo_paper(o);
        report["command"] = command;
        report["config"] = config_json(command, o);
        if (o.format == "text") out << render_text(report.dump());
        else out << report.dump(2) << '\n';
        return kExitOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ConvergenceError& e) {
        err << "error: solver did not converge: " << e.what() << '\n';
        return kExitNoConvergence;
    } catch (const std::invalid_argument& e) {
        err << "error: field 'input': " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace tenspect::cli
