#include "gyro/cli.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <ostream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "gyro/complex_disk.hpp"
#include "gyro/errors.hpp"
#include "gyro/registry.hpp"
#include "gyro/text.hpp"

namespace gyro::cli {

namespace {

struct Options {
    std::string model;
    std::string gyronorm;
    std::size_t dim = 0;
    std::string u, v, a, b, c;
    std::string from, to, point;
    std::string suite;
    std::size_t samples = 10000;
    std::string seed;
    std::string tol_abs = "1e-9";
    std::string tol_rel = "1e-9";
    std::size_t workers = 1;
    std::string output;
};

std::uint64_t parse_seed(const std::string& text) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
        throw DomainError("malformed seed '" + text + "'");
    }
    return value;
}

double parse_tolerance(const std::string& text) {
    const double t = parse_real(text);
    if (t < 0.0) throw DomainError("tolerance must be nonnegative, got " + text);
    return t;
}

std::vector<double> parse_point(const std::string& model, const std::string& text) {
    if (model == "poincare-disk") return to_vector(parse_disk_point(text));
    return parse_real_list(text);
}

void check_dim(const Options& o, std::size_t actual) {
    if (o.dim != 0 && o.dim != actual) throw DimensionError(actual, o.dim);
}

/// CLI11 would read a value such as "-0.5,0" as an option; bind it explicitly.
std::vector<std::string> bind_negative_values(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& t = args[i];
        const bool takes_value = t.rfind("--", 0) == 0 && t.find('=') == std::string::npos;
        if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
            (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) || args[i + 1][1] == '.')) {
            out.push_back(t + "=" + args[i + 1]);
            ++i;
        } else if (t.size() > 1 && t[0] == '-' && (std::isdigit(static_cast<unsigned char>(t[1])) || t[1] == '.')) {
            out.push_back("--point=" + t);
        } else {
            out.push_back(t);
        }
    }
    return out;
}

void print_point(std::ostream& out, const Options& o, const std::string& command, const std::vector<double>& p) {
    if (o.output == "structured") {
        out << "{\"command\": \"" << command << "\", \"result\": [";
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? ", " : "") << format_real(p[i]);
        out << "]}\n";
    } else {
        out << format_point(p) << "\n";
    }
}

}  // namespace

Environment Environment::from_process() {
    Environment env;
    if (const char* s = std::getenv("GYRO_SEED")) env.seed = s;
    return env;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app{"Gyrogroup algebra, gyronorm metrics and property checks on the unit ball and disk", "gyro"};
    app.require_subcommand(1);
    Options o;

    const auto models = model_names();
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", o.output, "text | structured")->check(CLI::IsMember({"text", "structured"}));
    };

    CLI::App* add = app.add_subcommand("add", "Gyroaddition u + v");
    add->add_option("--model", o.model)->required()->check(CLI::IsMember(models));
    add->add_option("--dim", o.dim)->check(CLI::PositiveNumber);
    add->add_option("--u", o.u)->required();
    add->add_option("--v", o.v)->required();

    CLI::App* gyr = app.add_subcommand("gyr", "Gyration gyr[a,b]c");
    gyr->add_option("--model", o.model)->required()->check(CLI::IsMember(models));
    gyr->add_option("--dim", o.dim)->check(CLI::PositiveNumber);
    gyr->add_option("--a", o.a)->required();
    gyr->add_option("--b", o.b)->required();
    gyr->add_option("--c", o.c)->required();

    CLI::App* dist = app.add_subcommand("dist", "Gyronorm metric d(u, v) = ||-u + v||");
    dist->add_option("--model", o.model)->required()->check(CLI::IsMember(models));
    dist->add_option("--gyronorm", o.gyronorm);
    dist->add_option("--dim", o.dim)->check(CLI::PositiveNumber);
    dist->add_option("--u", o.u)->required();
    dist->add_option("--v", o.v)->required();

    CLI::App* convert = app.add_subcommand("convert", "Map a point between models");
    convert->add_option("--from", o.from)->required()->check(CLI::IsMember(models));
    convert->add_option("--to", o.to)->required()->check(CLI::IsMember(models));
    convert->add_option("point,--point", o.point)->required();

    CLI::App* check = app.add_subcommand("check", "Run a property suite and print its report");
    check->add_option("--model", o.model)->required()->check(CLI::IsMember(models));
    check->add_option("--suite", o.suite)->required();
    check->add_option("--gyronorm", o.gyronorm);
    check->add_option("--dim", o.dim)->check(CLI::PositiveNumber);
    check->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    check->add_option("--seed", o.seed, "64-bit seed (default 42, or GYRO_SEED)");
    check->add_option("--tol-abs", o.tol_abs);
    check->add_option("--tol-rel", o.tol_rel);
    check->add_option("--workers", o.workers)->check(CLI::PositiveNumber);

    for (CLI::App* cmd : {add, gyr, dist, convert, check}) add_output(cmd);

    std::vector<std::string> args = bind_negative_values(raw_args);
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }
    if (o.output.empty()) o.output = check->parsed() ? "structured" : "text";

    try {
        if (add->parsed()) {
            const auto u = parse_point(o.model, o.u);
            const auto v = parse_point(o.model, o.v);
            check_dim(o, u.size());
            print_point(out, o, "add", model_add(o.model, u, v));
            return kOk;
        }
        if (gyr->parsed()) {
            const auto a = parse_point(o.model, o.a);
            const auto b = parse_point(o.model, o.b);
            const auto c = parse_point(o.model, o.c);
            check_dim(o, a.size());
            print_point(out, o, "gyr", model_gyr(o.model, a, b, c));
            return kOk;
        }
        if (dist->parsed()) {
            const auto u = parse_point(o.model, o.u);
            const auto v = parse_point(o.model, o.v);
            check_dim(o, u.size());
            const double d = model_distance(o.model, o.gyronorm, u, v);
            if (o.output == "structured") {
                out << "{\"command\": \"dist\", \"result\": " << format_real(d) << "}\n";
            } else {
                out << format_real(d) << "\n";
            }
            return kOk;
        }
        if (convert->parsed()) {
            print_point(out, o, "convert", convert_point(o.from, o.to, parse_point(o.from, o.point)));
            return kOk;
        }

        SuiteRequest req;
        req.model = o.model;
        req.gyronorm = o.gyronorm;
        req.suite = o.suite;
        req.dim = o.dim != 0 ? o.dim : 2;
        req.cfg.samples = o.samples;
        req.cfg.seed = !o.seed.empty() ? parse_seed(o.seed) : env.seed ? parse_seed(*env.seed) : 42;
        req.cfg.tol = Tolerance{parse_tolerance(o.tol_abs), parse_tolerance(o.tol_rel)};
        req.cfg.workers = o.workers;
        const CheckReport report = run_suite(req);
        out << (o.output == "structured" ? to_json(report) : to_text(report));
        if (!report.sampling_healthy()) {
            err << "sampling health: " << report.skipped << " samples skipped on boundary errors (limit 1%)\n";
            return kSamplingHealth;
        }
        return report.passed() ? kOk : kPropertyFailure;
    } catch (const BoundaryError& e) {
        err << "boundary error: " << e.what() << "\n";
        return kBoundary;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace gyro::cli
