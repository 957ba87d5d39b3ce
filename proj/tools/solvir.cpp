// solvir: verification suites and computations for the solenoidal Virasoro
// algebra.
//
//   solvir verify {jacobi,cocycle,density,verma,gvm,all} [--n N] [--box R] [--seed S] ...
//   solvir bracket "e[1,0]" "e[-1,0]"
//   solvir dims verma --n 2 --shift -1,0 --boxes 1..6
//   solvir dims gvm --n 2 --kappa 0 --boxes 2..6
//
// Exit status: 0 pass, 1 failed check, 2 usage or configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <solvir/solvir.hpp>

#include "suites.hpp"

using namespace solvir;
using solvir::cli::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> out;
    try {
        if (auto dots = text.find(".."); dots != std::string::npos) {
            const int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
            if (hi < lo)
                throw UsageError(std::string(what) + ": empty range " + text);
            for (int i = lo; i <= hi; ++i)
                out.push_back(i);
            return out;
        }
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ','))
            out.push_back(std::stoi(part));
    } catch (const std::logic_error&) {
        throw UsageError(std::string(what) + ": cannot read '" + text + "'");
    }
    if (out.empty())
        throw UsageError(std::string(what) + ": empty list");
    return out;
}

std::map<Var, BigRational> parse_spec(const std::string& text)
{
    std::map<Var, BigRational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("--spec: expected name=value, got '" + item + "'");
        const auto var = var_from_name(item.substr(0, eq));
        if (!var)
            throw UsageError("--spec: unknown indeterminate '" + item.substr(0, eq) + "'");
        out[*var] = BigRational::parse(item.substr(eq + 1));
    }
    return out;
}

// Rank of the first bracketed index in either text, or `fallback`.
int infer_rank(const std::string& x, const std::string& y, int fallback)
{
    for (const auto* s : {&x, &y}) {
        const auto open = s->find('[');
        if (open == std::string::npos)
            continue;
        const auto close = s->find(']', open);
        if (close == std::string::npos)
            return fallback;
        return 1 + static_cast<int>(std::count(s->begin() + static_cast<std::ptrdiff_t>(open), s->begin() + static_cast<std::ptrdiff_t>(close), ','));
    }
    return fallback;
}

void emit(const json& report, const std::string& out_path)
{
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + out_path);
    out << text;
}

json header(const std::string& command, const cli::RunConfig& cfg)
{
    return {{"tool", "solvir"}, {"version", kVersion}, {"command", command}, {"config", cli::config_json(cfg)}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in the solenoidal Virasoro algebra"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key=value file; keys mirror the long options");

    cli::RunConfig cfg;
    std::string boxes_text, spec_text, mu1_text, kappa_text, shift_text, out_path;
    int level = -1, length = -1;
    app.add_option("--n", cfg.n, "Rank n of the lattice")->check(CLI::Range(1, kMaxRank));
    app.add_option("--box", cfg.box, "Box radius for exhaustive scans")->check(CLI::Range(1, 50));
    app.add_option("--boxes", boxes_text, "Box radii, as lo..hi or a comma list");
    app.add_option("--seed", cfg.seed, "Seed of the mt19937_64 generator");
    app.add_option("--trials", cfg.trials, "Randomized trials per check (suite default if omitted)")->check(CLI::NonNegativeNumber);
    app.add_option("--spec", spec_text, "Specialization for numeric spot checks, e.g. mu1=2/3,mu2=5");
    app.add_option("--mu1", mu1_text, "Shorthand for --spec mu1=<value>");
    app.add_option("--kappa", kappa_text, "Weight index kappa of rank n-1, comma separated");
    app.add_option("--shift", shift_text, "Verma weight shift, comma separated");
    app.add_option("--level", level, "Verma level k (shift -k e_1)")->check(CLI::NonNegativeNumber);
    app.add_option("--length", length, "Verma word length bound L (default 2N+1)")->check(CLI::PositiveNumber);
    app.add_option("--input", cfg.input, "Cochain file for the cocycle suite");
    app.add_option("--out", out_path, "Write the JSON report here instead of stdout");
    app.add_option("--threads", cfg.threads, "Worker threads; the report does not depend on it")->check(CLI::Range(1u, 256u));

    std::string suite, left, right, target;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember({"jacobi", "cocycle", "density", "verma", "gvm", "all"}));
    auto* bracket = app.add_subcommand("bracket", "Print [x, y] in canonical form");
    bracket->add_option("left", left)->required();
    bracket->add_option("right", right)->required();
    auto* dims = app.add_subcommand("dims", "Weight-space dimension tables");
    dims->add_option("target", target, "verma or gvm")->required()->check(CLI::IsMember({"verma", "gvm"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!boxes_text.empty())
            cfg.boxes = parse_int_list(boxes_text, "--boxes");
        for (int b : cfg.boxes)
            if (b < 1)
                throw UsageError("--boxes: radii must be >= 1");
        if (!spec_text.empty())
            cfg.spec = parse_spec(spec_text);
        if (!mu1_text.empty())
            cfg.spec[mu_var(0)] = BigRational::parse(mu1_text);
        for (const auto& [v, q] : cfg.spec)
            if (is_mu_var(v) && v - mu_var(0) >= cfg.n)
                throw UsageError("--spec: " + var_name(v) + " exceeds rank " + std::to_string(cfg.n));
        if (!kappa_text.empty())
            cfg.kappa = parse_int_list(kappa_text, "--kappa");

        if (*verify) {
            const auto checks = cli::run_suite(suite, cfg);
            json report = header("verify", cfg);
            report["suite"] = suite;
            json arr = json::array();
            std::size_t passed = 0;
            for (const auto& c : checks) {
                arr.push_back(cli::check_json(c));
                passed += c.pass ? 1 : 0;
            }
            report["checks"] = arr;
            report["summary"] = {{"total", checks.size()}, {"passed", passed}, {"failed", checks.size() - passed}};
            report["status"] = passed == checks.size() ? "pass" : "fail";
            emit(report, out_path);
            return passed == checks.size() ? 0 : 1;
        }

        if (*bracket) {
            const int n = infer_rank(left, right, cfg.n);
            const Algebra g(n);
            std::cout << Algebra::format(g.vir_bracket(g.parse(left), g.parse(right))) << "\n";
            return 0;
        }

        if (target == "verma") {
            LatticePoint shift(cfg.n);
            std::vector<int> boxes = cfg.boxes;
            if (level >= 0) {
                if (!shift_text.empty())
                    throw UsageError("--level and --shift are exclusive");
                shift[0] = -level;
                if (boxes.empty())
                    boxes = {std::max(level, 1)};
                if (length < 0)
                    length = std::max(level, 1);
            } else {
                if (shift_text.empty()) {
                    shift[0] = -1;
                } else {
                    const auto coords = parse_int_list(shift_text, "--shift");
                    if (static_cast<int>(coords.size()) != cfg.n)
                        throw UsageError("--shift needs " + std::to_string(cfg.n) + " coordinates");
                    shift = LatticePoint(std::span<const int>(coords));
                }
                if (boxes.empty())
                    boxes = {1, 2, 3, 4, 5, 6};
            }
            if (shift.lex_sign() > 0)
                throw UsageError("--shift must be lex-negative or zero");
            LatticePoint family_shift(cfg.n);
            family_shift[0] = -1;
            const bool family = cfg.n >= 2 && shift == family_shift;
            json rows = json::array(), fam = json::array();
            bool increasing = true;
            std::size_t prev = 0;
            for (std::size_t i = 0; i < boxes.size(); ++i) {
                const int N = boxes[i];
                const int L = length > 0 ? length : 2 * N + 1;
                const auto words = pbw_enumerate(shift, TruncationBox(N, L));
                rows.push_back({{"N", N}, {"L", L}, {"dim", words.size()}});
                if (i > 0 && words.size() <= prev)
                    increasing = false;
                prev = words.size();
            }
            if (family)
                for (const auto& r : cli::verma_growth(cfg.n, boxes))
                    fam.push_back(r.family);
            json report = header("dims", cfg);
            report["target"] = "verma";
            report["n"] = cfg.n;
            report["shift"] = shift.to_string();
            report["boxes"] = rows;
            report["family_lower_bound"] = family ? fam : json(nullptr);
            report["strictly_increasing"] = increasing;
            emit(report, out_path);
            return 0;
        }

        // dims gvm
        if (cfg.n < 2)
            throw UsageError("dims gvm needs --n >= 2");
        const auto kappas = cli::gvm_kappas(cfg);
        std::vector<int> radii = cfg.boxes.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8} : cfg.boxes;
        json tables = json::array();
        for (const auto& kappa : kappas) {
            const auto q = quotient_dim_level1(cfg.n, kappa, DensityParams::formal(), radii);
            json rows = json::array();
            bool within = true;
            for (const auto& b : q.boxes) {
                rows.push_back({{"radius", b.radius}, {"rows", b.rows}, {"cols", b.cols}, {"rank", b.rank}});
                within = within && b.rank <= 2;
            }
            tables.push_back({{"n", cfg.n},
                              {"kappa", kappa.to_string()},
                              {"boxes", rows},
                              {"bound", "1*3*...*(2i+1)"},
                              {"level", 1},
                              {"within_bound", within},
                              {"stabilized", q.stabilized},
                              {"stabilized_at", q.stabilized ? json(q.stabilized_at) : json(nullptr)}});
        }
        json report = header("dims", cfg);
        report["target"] = "gvm";
        report["tables"] = tables;
        emit(report, out_path);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "solvir: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "solvir: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return 2;
    }
}
