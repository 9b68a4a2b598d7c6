// Command line front end: enumeration, partition functions, verification.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "icelab/checks.hpp"
#include "icelab/enumerate.hpp"
#include "icelab/json_io.hpp"
#include "icelab/partition.hpp"

namespace {

using namespace icelab;

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct CountOpts {
    std::string cls = "unrestricted";
    int size = 0;
};

struct EnumOpts : CountOpts {
    std::string format = "text";
    std::string output;
};

struct ZfunOpts {
    std::string model;
    int size = 0;
    std::vector<std::string> params;
    std::vector<std::string> symbolic;
    std::string regime = "generic";
    std::string format = "text";
};

struct VerifyOpts {
    std::string suite = "all";
    int max_n = 2;
    uint64_t seed = 1;
    std::string report;
};

SymmetryClass parse_class(const std::string& s) {
    auto c = symmetry_class_from_string(s);
    if (!c) throw CLI::ValidationError("--class", "unknown symmetry class '" + s + "'");
    return *c;
}

ModelKind parse_model(const std::string& name, int size) {
    if (name == "dwbc") return ModelKind::Dwbc;
    if (name == "ht") return size % 2 == 0 ? ModelKind::HtEven : ModelKind::HtOdd;
    if (name == "qt") {
        if (size % 4 != 0)
            throw ValidationError("qt model requires size divisible by 4 (got " +
                                  std::to_string(size) + ")");
        return ModelKind::Qt;
    }
    if (name == "qqt") {
        if (size % 4 != 2)
            throw ValidationError("qqt model requires size 2 mod 4 (got " +
                                  std::to_string(size) + ")");
        return ModelKind::Qqt;
    }
    throw ValidationError("unknown model '" + name + "'");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    return file;
}

int run_count(const CountOpts& o) {
    std::cout << count_asms(o.size, parse_class(o.cls)) << "\n";
    return 0;
}

int run_enumerate(const EnumOpts& o) {
    std::ofstream file;
    std::ostream& out = open_output(o.output, file);
    SymmetryClass cls = parse_class(o.cls);
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        enumerate_asms(o.size, cls, [&](const AsmMatrix& m) { arr.push_back(matrix_to_json(m)); });
        out << arr.dump(2) << "\n";
    } else if (o.format == "csv") {
        enumerate_asms(o.size, cls, [&](const AsmMatrix& m) {
            out << m.size();
            for (int i = 1; i <= m.size(); ++i)
                for (int j = 1; j <= m.size(); ++j) out << "," << m.at(i, j);
            out << "\n";
        });
    } else {
        enumerate_asms(o.size, cls, [&](const AsmMatrix& m) { out << m.to_string() << "\n"; });
    }
    return 0;
}

int run_zfun(const ZfunOpts& o) {
    IceModel model = IceModel::build(parse_model(o.model, o.size), o.size);
    std::map<std::string, Rational> values;
    for (const std::string& p : o.params) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw ValidationError("--param expects name=value, got '" + p + "'");
        values[p.substr(0, eq)] = Rational::parse(p.substr(eq + 1));
    }
    if (o.regime == "omega6") {
        Assignment<Cyclotomic> assign;
        for (const auto& [k, v] : values) assign[k] = SlotBinding<Cyclotomic>::value(Cyclotomic(v));
        for (const auto& s : o.symbolic) assign[s] = SlotBinding<Cyclotomic>::symbol(s);
        auto z = partition_omega6(model, assign);
        if (o.format == "json")
            std::cout << poly_to_json(z).dump(2) << "\n";
        else
            std::cout << z.to_string() << "\n";
    } else if (o.regime == "generic") {
        Assignment<Rational> assign;
        for (const auto& [k, v] : values) assign[k] = SlotBinding<Rational>::value(v);
        for (const auto& s : o.symbolic) assign[s] = SlotBinding<Rational>::symbol(s);
        auto z = partition_generic(model, assign);
        if (o.format == "json")
            std::cout << poly_to_json(z).dump(2) << "\n";
        else
            std::cout << z.to_string() << "\n";
    } else {
        throw ValidationError("unknown regime '" + o.regime + "'");
    }
    return 0;
}

int run_verify(const VerifyOpts& o) {
    auto results = run_suites(o.suite, o.max_n, o.seed);
    int failed = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "\n";
        if (!r.pass) {
            ++failed;
            std::cout << r.witness << "\n";
        }
    }
    std::cout << (results.size() - failed) << "/" << results.size() << " checks passed\n";
    if (!o.report.empty()) {
        std::ofstream f(o.report);
        if (!f) throw std::runtime_error("cannot open report file '" + o.report + "'");
        f << report_to_json(results).dump(2) << "\n";
    }
    return failed ? kExitCheckFailure : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact six-vertex partition functions over alternating sign matrix classes"};
    app.require_subcommand(1);

    CountOpts count_opts;
    auto* count = app.add_subcommand("count", "Count the members of a symmetry class");
    count->add_option("--class", count_opts.cls, "unrestricted|ht|qt|qqt")->required();
    count->add_option("--size", count_opts.size, "matrix size")->required();

    EnumOpts enum_opts;
    auto* enumerate = app.add_subcommand("enumerate", "List the members of a symmetry class");
    enumerate->add_option("--class", enum_opts.cls, "unrestricted|ht|qt|qqt")->required();
    enumerate->add_option("--size", enum_opts.size, "matrix size")->required();
    enumerate->add_option("--format", enum_opts.format, "text|json|csv");
    enumerate->add_option("--output", enum_opts.output, "output path (default stdout)");

    ZfunOpts zfun_opts;
    auto* zfun = app.add_subcommand("zfun", "Evaluate a partition function");
    zfun->add_option("--model", zfun_opts.model, "dwbc|ht|qt|qqt")->required();
    zfun->add_option("--size", zfun_opts.size, "matrix size")->required();
    zfun->add_option("--param", zfun_opts.params, "slot=value, value a rational like 3/7");
    zfun->add_option("--symbolic", zfun_opts.symbolic, "slot left symbolic in the result");
    zfun->add_option("--regime", zfun_opts.regime, "generic|omega6");
    zfun->add_option("--format", zfun_opts.format, "text|json");

    VerifyOpts verify_opts;
    auto* verify = app.add_subcommand("verify", "Run the identity verification suites");
    verify->add_option("--suite", verify_opts.suite, "all|yb|symmetry|spec|main|counting");
    verify->add_option("--max-n", verify_opts.max_n, "largest family parameter N");
    verify->add_option("--seed", verify_opts.seed, "random seed for exact sample points");
    verify->add_option("--report", verify_opts.report, "write a JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(count_opts);
        if (enumerate->parsed()) return run_enumerate(enum_opts);
        if (zfun->parsed()) return run_zfun(zfun_opts);
        if (verify->parsed()) return run_verify(verify_opts);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
