// bernhankel: run verification suites and compute single objects exactly.
//
//   bernhankel verify --suite all --max-n 5 --max-r 8 [--parallel] [--format json|csv|text] [--out PATH]
//   bernhankel compute hankel --family b2k1 --n 2 [--x 7/3]

#include <bernhankel/suites.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace bh = bernhankel;

namespace {

constexpr int kUsage = 2;
constexpr int kIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComputeArgs {
    std::string object;
    std::string family = "b2k1";
    std::string identity;
    std::optional<long> n;
    std::optional<long> r;
    std::optional<long> m;
    std::optional<std::string> x;
};

long need(const std::optional<long>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing ") + flag);
    return *v;
}

std::optional<bh::Rational> point(const ComputeArgs& a) {
    if (!a.x) return std::nullopt;
    try {
        return bh::Rational::parse(*a.x);
    } catch (const std::exception&) {
        throw UsageError("--x must be a rational p/q, got '" + *a.x + "'");
    }
}

bh::MomentSequence family(const ComputeArgs& a) {
    try {
        return bh::MomentSequence::from_name(a.family, a.r);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::string compute(const ComputeArgs& a) {
    const auto x = point(a);
    if (a.object == "hankel") {
        const long n = need(a.n, "--n");
        const auto seq = family(a);
        if (x) return bh::hankel_det<bh::Rational>(seq.at(*x), n).str();
        return bh::hankel_det<bh::Polynomial>(seq, n).str();
    }
    if (a.object == "closedform") {
        if (a.identity.empty()) throw UsageError("missing --identity");
        bh::ClosedFormId id;
        try {
            id = bh::parse_closed_form_id(a.identity);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        const long n = bh::uses_r(id) && id != bh::ClosedFormId::DETVN ? a.n.value_or(0) : need(a.n, "--n");
        const long r = bh::uses_r(id) ? need(a.r, "--r") : 0;
        return bh::closed_form_value(id, n, r, x);
    }
    if (a.object == "inverse11") return bh::inverse_entry_11(need(a.r, "--r")).str();
    if (a.object == "detv") return bh::det_V(need(a.n, "--n"), need(a.r, "--r")).str();
    if (a.object == "tseq") {
        // Row n of the T triangle as an ascending coefficient list: prod_{m<n} (y - m^2).
        const long n = need(a.n, "--n");
        if (n < 1) throw UsageError("--n must be positive for tseq");
        std::vector<bh::Rational> row;
        for (long k = 1; k <= n; ++k) row.push_back(bh::t_triangle(n, k));
        return bh::Polynomial(std::move(row)).str();
    }
    if (a.object == "beta") {
        const long m = need(a.m, "--m");
        if (m < 1) throw UsageError("--m must be positive for beta");
        if (x) return bh::beta_sequence<bh::Rational>(m, x)[static_cast<std::size_t>(m)].str();
        return bh::beta_sequence<bh::RationalFunction>(m)[static_cast<std::size_t>(m)].str();
    }
    if (a.object == "jfraction") {
        const long n = need(a.n, "--n");
        auto render = [n](const auto& jf) {
            std::string out = "c0 = " + bh::to_text(jf.c0);
            for (long j = 0; j <= n; ++j) {
                const auto i = static_cast<std::size_t>(j);
                out += "\ns_" + std::to_string(j) + " = " + bh::to_text(jf.s[i]);
                if (j >= 1) out += "\nt_" + std::to_string(j) + " = " + bh::to_text(jf.t[i]);
            }
            return out;
        };
        const auto seq = family(a);
        if (x) return render(bh::jfraction_from_moments<bh::Rational>(seq.at(*x), n));
        return render(bh::jfraction_from_moments<bh::RationalFunction>(seq, n));
    }
    throw UsageError("unknown object '" + a.object + "'");
}

int emit(const bh::VerificationReport& report, const std::string& format, const std::string& out_path) {
    std::string body;
    if (format == "json") body = bh::to_json(report).dump(2) + "\n";
    else if (format == "csv") body = bh::to_csv(report);
    else body = bh::to_text(report);

    if (out_path.empty() || out_path == "-") {
        std::cout << body;
        return std::cout.good() ? 0 : kIo;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kIo;
    }
    file << body;
    file.close();
    if (!file) {
        std::cerr << "error: failed writing '" << out_path << "'\n";
        return kIo;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hankel determinants of Bernoulli moment sequences"};
    app.require_subcommand(1);

    std::string suite = "all", format = "json", out_path;
    bh::SuiteOptions opt;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(bh::suite_names()));
    verify->add_option("--max-n", opt.max_n, "Largest n in the grid")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-r", opt.max_r, "Largest r in the grid")->check(CLI::PositiveNumber);
    verify->add_flag("--parallel", opt.parallel, "Run cases on worker threads");
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--out", out_path, "Output file (default: stdout)");
    verify->add_flag("--inject-fault", opt.inject_fault, "Corrupt one Bernoulli moment in the B1 fixture");

    ComputeArgs args;
    auto* comp = app.add_subcommand("compute", "Print one exact value");
    comp->add_option("object", args.object, "hankel|closedform|inverse11|detv|tseq|beta|jfraction")
        ->required()
        ->check(CLI::IsMember({"hankel", "closedform", "inverse11", "detv", "tseq", "beta", "jfraction"}));
    comp->add_option("--family", args.family, "b2k1|b2k3|b2k5|powsum");
    comp->add_option("--identity", args.identity, "Closed-form identity name");
    comp->add_option("--n", args.n, "Order n");
    comp->add_option("--r", args.r, "Number of design points r");
    comp->add_option("--m", args.m, "Index m (beta)");
    comp->add_option("--x", args.x, "Evaluation point p/q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    if (*verify) {
        const auto report = bh::run_suite(suite, opt);
        const int io = emit(report, format, out_path);
        return io != 0 ? io : bh::exit_code(report);
    }

    try {
        std::cout << compute(args) << '\n';
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const bh::NondegeneracyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
