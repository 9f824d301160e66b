#include "tridkit/cli.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tridkit/bench.hpp"
#include "tridkit/inverse.hpp"
#include "tridkit/io.hpp"
#include "tridkit/minors.hpp"
#include "tridkit/verify.hpp"

namespace tridkit {
namespace {

using nlohmann::json;

struct Options {
    std::string file;
    std::string mode = "double";
    double tol = 0.0;
    std::string format = "plain";
    std::string sizes = "256,512,1024";
    std::uint64_t seed = 42;
};

std::string env_default_mode() {
    const char* env = std::getenv("TRIDKIT_MODE");
    if (!env) return "double";
    std::string mode(env);
    if (mode == "double" || mode == "rational" || mode == "scaled") return mode;
    return "double";
}

char column_separator(const std::string& format) {
    return format == "csv" ? ',' : ' ';
}

template <class T>
json grid_to_json(int n, const std::function<T(int, int)>& lookup) {
    json rows = json::array();
    for (int i = 1; i <= n; ++i) {
        json row = json::array();
        for (int j = 1; j <= n; ++j) row.push_back(format_scalar(lookup(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
void write_grid(std::ostream& out, const std::string& format, int n,
                const std::function<T(int, int)>& lookup) {
    const char sep = column_separator(format);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out << sep;
            out << format_scalar(lookup(i, j));
        }
        out << '\n';
    }
}

template <class T>
int cmd_det(const Options& opt, std::ostream& out) {
    auto file = read_tridiag_file<T>(opt.file, opt.mode);
    T det = determinant(file.matrix, opt.tol);
    if (opt.format == "json") {
        out << json{{"op", "det"}, {"mode", opt.mode}, {"value", format_scalar(det)}}
                   .dump()
            << '\n';
    } else {
        out << format_scalar(det) << '\n';
    }
    return 0;
}

template <class T>
int cmd_inv(const Options& opt, std::ostream& out) {
    auto file = read_tridiag_file<T>(opt.file, opt.mode);
    try {
        InverseMatrix<T> inv = invert(file.matrix, opt.tol);
        const int n = inv.order();
        std::function<T(int, int)> lookup = [&](int i, int j) { return inv.at(i, j); };
        if (opt.format == "json") {
            out << json{{"op", "inv"},
                        {"mode", opt.mode},
                        {"n", n},
                        {"delta", format_scalar(inv.delta())},
                        {"alpha", grid_to_json<T>(n, lookup)}}
                       .dump()
                << '\n';
        } else {
            write_grid<T>(out, opt.format, n, lookup);
        }
        return 0;
    } catch (const SingularMatrixError&) {
        if (opt.format == "json")
            out << json{{"op", "inv"}, {"mode", opt.mode}, {"singular", true}}.dump()
                << '\n';
        else
            out << "SINGULAR\n";
        return 2;
    }
}

template <class T>
int cmd_factors(const Options& opt, std::ostream& out) {
    auto file = read_tridiag_file<T>(opt.file, opt.mode);
    try {
        HadamardFactors<T> f = hadamard_factors(file.matrix, opt.tol);
        const int n = f.order();
        std::function<T(int, int)> r = [&](int i, int j) { return f.r(i, j); };
        std::function<T(int, int)> s = [&](int i, int j) { return f.s(i, j); };
        if (opt.format == "json") {
            out << json{{"op", "factors"},
                        {"mode", opt.mode},
                        {"n", n},
                        {"delta", format_scalar(f.delta())},
                        {"R", grid_to_json<T>(n, r)},
                        {"S", grid_to_json<T>(n, s)}}
                       .dump()
                << '\n';
        } else {
            out << "R\n";
            write_grid<T>(out, opt.format, n, r);
            out << "S\n";
            write_grid<T>(out, opt.format, n, s);
        }
        return 0;
    } catch (const SingularMatrixError&) {
        if (opt.format == "json")
            out << json{{"op", "factors"}, {"mode", opt.mode}, {"singular", true}}.dump()
                << '\n';
        else
            out << "SINGULAR\n";
        return 2;
    }
}

template <class T>
int cmd_verify(const Options& opt, std::ostream& out) {
    auto file = read_tridiag_file<T>(opt.file, opt.mode);
    const double cmp_tol = opt.tol > 0.0 ? opt.tol : 1e-8;
    VerifyReport report = verify_matrix(file.matrix, opt.tol, cmp_tol);

    if (opt.format == "json") {
        json checks = json::array();
        for (const VerifyCheck& c : report.checks) {
            json entry{{"name", c.name}, {"pass", c.pass}};
            if (!c.note.empty()) entry["note"] = c.note;
            checks.push_back(std::move(entry));
        }
        out << json{{"op", "verify"},
                    {"mode", opt.mode},
                    {"pass", report.pass()},
                    {"checks", std::move(checks)}}
                   .dump()
            << '\n';
    } else if (opt.format == "csv") {
        out << "check,pass,note\n";
        for (const VerifyCheck& c : report.checks)
            out << c.name << ',' << (c.pass ? "1" : "0") << ',' << c.note << '\n';
    } else {
        for (const VerifyCheck& c : report.checks) {
            out << (c.pass ? "ok   " : "FAIL ") << c.name;
            if (!c.note.empty()) out << " (" << c.note << ")";
            out << '\n';
        }
        out << (report.pass() ? "PASS" : "FAIL") << '\n';
    }
    return report.pass() ? 0 : 3;
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        errno = 0;
        char* end = nullptr;
        long v = std::strtol(item.c_str(), &end, 10);
        if (end != item.c_str() + item.size() || errno == ERANGE || v < 1)
            throw CLI::ValidationError("--sizes", "bad size '" + item + "'");
        sizes.push_back(static_cast<int>(v));
    }
    if (sizes.empty()) throw CLI::ValidationError("--sizes", "no sizes given");
    return sizes;
}

int cmd_bench(const Options& opt, std::ostream& out) {
    std::vector<BenchRecord> records =
        run_bench(parse_sizes(opt.sizes), default_bench_ops(), opt.seed);
    if (opt.format == "json") {
        json rows = json::array();
        for (const BenchRecord& r : records)
            rows.push_back(json{{"n", r.n},
                                {"op", r.op},
                                {"flops", r.flops},
                                {"nanos", r.nanos},
                                {"reps", r.reps}});
        out << rows.dump() << '\n';
    } else {
        write_bench_csv(out, records);
    }
    return 0;
}

template <template <class> class Command>
struct ModeDispatch {
    static int run(const Options& opt, std::ostream& out) {
        if (opt.mode == "rational") return Command<Rational>::run(opt, out);
        if (opt.mode == "scaled") return Command<Scaled>::run(opt, out);
        return Command<double>::run(opt, out);
    }
};

template <class T>
struct DetCommand {
    static int run(const Options& o, std::ostream& out) { return cmd_det<T>(o, out); }
};
template <class T>
struct InvCommand {
    static int run(const Options& o, std::ostream& out) { return cmd_inv<T>(o, out); }
};
template <class T>
struct FactorsCommand {
    static int run(const Options& o, std::ostream& out) {
        return cmd_factors<T>(o, out);
    }
};
template <class T>
struct VerifyCommand {
    static int run(const Options& o, std::ostream& out) {
        return cmd_verify<T>(o, out);
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"breakdown-free tridiagonal determinants, inverses and factor grids"};
    app.name("tridkit");
    app.require_subcommand(1);

    Options opt;
    opt.mode = env_default_mode();

    auto add_common = [&](CLI::App* sub, bool with_file) {
        if (with_file)
            sub->add_option("FILE", opt.file, "band-format matrix file")->required();
        sub->add_option("--mode", opt.mode, "scalar mode")
            ->check(CLI::IsMember({"double", "rational", "scaled"}))
            ->capture_default_str();
        sub->add_option("--tol", opt.tol,
                        "breakdown tolerance (and verify comparison tolerance)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"plain", "csv", "json"}))
            ->capture_default_str();
    };

    CLI::App* det = app.add_subcommand("det", "print the determinant");
    add_common(det, true);
    CLI::App* inv = app.add_subcommand("inv", "print the inverse or SINGULAR");
    add_common(inv, true);
    CLI::App* factors =
        app.add_subcommand("factors", "print the Hadamard factor grids R and S");
    add_common(factors, true);
    CLI::App* verify =
        app.add_subcommand("verify", "cross-check every formula against the oracle");
    add_common(verify, true);

    CLI::App* bench = app.add_subcommand("bench", "flop-count and time the kernels");
    add_common(bench, false);
    bench->add_option("--sizes", opt.sizes, "comma-separated matrix orders")
        ->capture_default_str();
    bench->add_option("--seed", opt.seed, "instance generator seed")
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (det->parsed()) return ModeDispatch<DetCommand>::run(opt, out);
        if (inv->parsed()) return ModeDispatch<InvCommand>::run(opt, out);
        if (factors->parsed()) return ModeDispatch<FactorsCommand>::run(opt, out);
        if (verify->parsed()) return ModeDispatch<VerifyCommand>::run(opt, out);
        if (bench->parsed()) return cmd_bench(opt, out);
    } catch (const ParseError& e) {
        err << opt.file << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace tridkit
