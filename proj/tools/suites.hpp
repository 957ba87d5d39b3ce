// Verification suites behind `solvir verify`.
#ifndef SOLVIR_TOOLS_SUITES_HPP
#define SOLVIR_TOOLS_SUITES_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <solvir/solvir.hpp>

namespace solvir::cli {

using nlohmann::json;

struct RunConfig {
    int n = 2;
    int box = 3;
    std::vector<int> boxes;
    std::uint64_t seed = 42;
    int trials = -1; // suite default when negative
    std::map<Var, BigRational> spec;
    std::vector<int> kappa;
    std::string input;
    unsigned threads = 1;
};

inline json spec_json(const std::map<Var, BigRational>& spec)
{
    json j = json::object();
    for (const auto& [v, q] : spec)
        j[var_name(v)] = q.to_string();
    return j;
}

/// The parts of the configuration that determine the output. The thread
/// count and output path are left out on purpose.
inline json config_json(const RunConfig& c)
{
    json j;
    j["n"] = c.n;
    j["box"] = c.box;
    j["boxes"] = c.boxes;
    j["seed"] = c.seed;
    j["trials"] = c.trials;
    j["spec"] = spec_json(c.spec);
    j["kappa"] = c.kappa;
    j["input"] = c.input.empty() ? json(nullptr) : json(c.input);
    return j;
}

struct Check {
    std::string id;
    bool pass = true;
    json inputs = json::object();
    json result = json::object();
};

inline json check_json(const Check& c)
{
    return {{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"inputs", c.inputs}, {"result", c.result}};
}

namespace detail {

inline int trials_or(const RunConfig& c, int fallback) { return c.trials >= 0 ? c.trials : fallback; }

inline std::string triple_text(const LatticePoint& a, const LatticePoint& b, const LatticePoint& k)
{
    return a.to_string() + " " + b.to_string() + " " + k.to_string();
}

struct ScanChunk {
    std::uint64_t count = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> shown;
};

/// Runs `probe` on basis triples of `pts`. In "full" mode every ordered
/// triple is visited; in "distinct" mode only i < j < k, which suffices for
/// an alternating trilinear expression once antisymmetry is checked on all
/// pairs. Returns {triples_checked, failures, examples}.
inline json scan_triples(const std::vector<LatticePoint>& pts, bool full, unsigned threads,
                         const std::function<std::optional<std::string>(const LatticePoint&, const LatticePoint&, const LatticePoint&)>& probe)
{
    const std::size_t np = pts.size();
    auto chunks = parallel_chunks<ScanChunk>(np, threads, [&](std::size_t lo, std::size_t hi, ScanChunk& out) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = full ? 0 : i + 1; j < np; ++j)
                for (std::size_t k = full ? 0 : j + 1; k < np; ++k) {
                    ++out.count;
                    if (auto f = probe(pts[i], pts[j], pts[k])) {
                        ++out.failures;
                        if (out.shown.size() < 5)
                            out.shown.push_back(triple_text(pts[i], pts[j], pts[k]) + ": " + *f);
                    }
                }
    }, 1);
    std::uint64_t count = 0, failures = 0;
    json shown = json::array();
    for (const auto& c : chunks) {
        count += c.count;
        failures += c.failures;
        for (const auto& s : c.shown)
            if (shown.size() < 5)
                shown.push_back(s);
    }
    return {{"triples_checked", count}, {"failures", failures}, {"examples", shown}};
}

/// Ordered pairs (alpha, beta) of `pts` on which `probe` fails.
inline json scan_pairs(const std::vector<LatticePoint>& pts,
                       const std::function<std::optional<std::string>(const LatticePoint&, const LatticePoint&)>& probe)
{
    std::uint64_t count = 0, failures = 0;
    json shown = json::array();
    for (const auto& a : pts)
        for (const auto& b : pts) {
            ++count;
            if (auto f = probe(a, b)) {
                ++failures;
                if (shown.size() < 5)
                    shown.push_back(a.to_string() + " " + b.to_string() + ": " + *f);
            }
        }
    return {{"pairs_checked", count}, {"failures", failures}, {"examples", shown}};
}

inline bool scan_ok(const json& r) { return r["failures"].get<std::uint64_t>() == 0; }

/// mu_i = 7^(i-1): mu.alpha != 0 for every nonzero alpha with |alpha_i| <= 3.
inline std::map<Var, BigRational> generic_mu(int n)
{
    std::map<Var, BigRational> at;
    std::int64_t p = 1;
    for (int i = 0; i < n; ++i, p *= 7)
        at[mu_var(i)] = BigRational(p);
    return at;
}

inline std::map<Var, BigRational> spot_assignment(const RunConfig& c)
{
    auto at = generic_mu(c.n);
    for (const auto& [v, q] : c.spec)
        at[v] = q;
    return at;
}

inline bool full_mode(int n) { return n <= 2; }

} // namespace detail

// ---------------------------------------------------------------- jacobi

inline std::vector<Check> suite_jacobi(const RunConfig& cfg)
{
    using namespace detail;
    std::vector<Check> out;
    const Algebra g(cfg.n);
    const auto pts = box_points(cfg.n, cfg.box);
    const bool full = full_mode(cfg.n);

    {
        Check c{"jacobi.basis_antisymmetry"};
        c.inputs = {{"n", cfg.n}, {"box", cfg.box}};
        c.result = scan_pairs(pts, [](const LatticePoint& a, const LatticePoint& b) -> std::optional<std::string> {
            const BasisBracket x = Algebra::basis_bracket(a, b), y = Algebra::basis_bracket(b, a);
            if (x.sum == y.sum && (x.coef + y.coef).is_zero() && (x.central + y.central).is_zero())
                return std::nullopt;
            return "[x,y] + [y,x] != 0";
        });
        c.pass = scan_ok(c.result);
        out.push_back(c);
    }
    {
        Check c{"jacobi.basis_triples"};
        c.inputs = {{"n", cfg.n}, {"box", cfg.box}, {"mode", full ? "full" : "distinct"}};
        c.result = scan_triples(pts, full, cfg.threads,
                                [](const LatticePoint& a, const LatticePoint& b, const LatticePoint& k) -> std::optional<std::string> {
                                    auto [e, z] = Algebra::basis_jacobi_residual(a, b, k);
                                    if (e.is_zero() && z.is_zero())
                                        return std::nullopt;
                                    return "E: " + e.to_string() + ", c: " + z.to_string();
                                });
        c.pass = scan_ok(c.result);
        out.push_back(c);
    }
    {
        Check c{"jacobi.random_elements"};
        const int trials = trials_or(cfg, 20);
        c.inputs = {{"n", cfg.n}, {"radius", 2}, {"trials", trials}, {"seed", cfg.seed}};
        Rng rng(cfg.seed);
        int bad_jacobi = 0, bad_anti = 0;
        for (int t = 0; t < trials; ++t) {
            const auto x = rng.element(cfg.n, 2), y = rng.element(cfg.n, 2), z = rng.element(cfg.n, 2);
            if (!g.jacobi_residual(x, y, z).is_zero())
                ++bad_jacobi;
            if (!(g.vir_bracket(x, y) + g.vir_bracket(y, x)).is_zero())
                ++bad_anti;
        }
        c.result = {{"jacobi_failures", bad_jacobi}, {"antisymmetry_failures", bad_anti}};
        c.pass = bad_jacobi == 0 && bad_anti == 0;
        out.push_back(c);
    }
    {
        Check c{"jacobi.triangular_closure"};
        c.inputs = {{"n", cfg.n}, {"box", cfg.box}};
        std::uint64_t count = 0, bad = 0;
        for (const auto& a : pts)
            for (const auto& b : pts) {
                const int sa = a.lex_sign(), sb = b.lex_sign();
                if (sa == 0 || sa != sb)
                    continue;
                ++count;
                const auto parts = g.triangular_split(g.vir_bracket(g.e(a), g.e(b)));
                const auto& same = sa > 0 ? parts.plus : parts.minus;
                if (!parts.zero.is_zero() || (sa > 0 ? parts.minus : parts.plus).size() != 0 || same.size() > 1)
                    ++bad;
            }
        c.result = {{"pairs_checked", count}, {"failures", bad}};
        c.pass = bad == 0;
        out.push_back(c);
    }
    {
        Check c{"jacobi.vir_i_cocycle"};
        c.inputs = {{"n", cfg.n}};
        json axes = json::array();
        for (int i = 1; i <= cfg.n; ++i) {
            auto [a, b] = g.vir_i_cocycle_coefficients(i);
            const LatticePoint e = LatticePoint::unit(cfg.n, i - 1);
            const Scalar mu = Scalar::mu_dot(e);
            const bool ok = a == mu.divide_by_constant(12) && b == Scalar(-1).divide_by_constant(12).divide_by_form(e) && !a.is_zero();
            axes.push_back({{"axis", i}, {"a", a.to_string()}, {"b", b.to_string()}, {"ok", ok}});
            c.pass = c.pass && ok;
        }
        c.result = {{"axes", axes}};
        out.push_back(c);
    }
    {
        Check c{"jacobi.spot_check"};
        const auto at = spot_assignment(cfg);
        c.inputs = {{"assignment", spec_json(at)}, {"seed", cfg.seed}};
        Rng rng(cfg.seed + 1);
        int bad = 0, trials = 5;
        std::string error;
        try {
            for (int t = 0; t < trials; ++t) {
                const auto x = rng.element(cfg.n, 2), y = rng.element(cfg.n, 2), z = rng.element(cfg.n, 2);
                for (const auto& [s, coef] : g.jacobi_residual(x, y, z))
                    if (!coef.evaluate(at).is_zero())
                        ++bad;
            }
        } catch (const Error& e) {
            error = e.what();
        }
        c.result = {{"trials", trials}, {"failures", bad}};
        if (!error.empty())
            c.result["error"] = error;
        c.pass = bad == 0 && error.empty();
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- cocycle

inline std::vector<Check> suite_cocycle(const RunConfig& cfg)
{
    using namespace detail;
    std::vector<Check> out;
    const auto pts = box_points(cfg.n, cfg.box);
    const bool full = full_mode(cfg.n);
    const auto canonical = [](const LatticePoint& a, const LatticePoint& b) { return canonical_cocycle(a, b); };

    {
        Check c{"cocycle.canonical_skew"};
        c.inputs = {{"n", cfg.n}, {"box", cfg.box}};
        c.result = scan_pairs(pts, [](const LatticePoint& a, const LatticePoint& b) -> std::optional<std::string> {
            if ((canonical_cocycle(a, b) + canonical_cocycle(b, a)).is_zero())
                return std::nullopt;
            return "not skew";
        });
        c.pass = scan_ok(c.result);
        out.push_back(c);
    }
    {
        Check c{"cocycle.canonical_triples"};
        c.inputs = {{"n", cfg.n}, {"box", cfg.box}, {"mode", full ? "full" : "distinct"}};
        c.result = scan_triples(pts, full, cfg.threads,
                                [&](const LatticePoint& a, const LatticePoint& b, const LatticePoint& k) -> std::optional<std::string> {
                                    Scalar r = cocycle_residual(canonical, a, b, k);
                                    if (r.is_zero())
                                        return std::nullopt;
                                    return r.to_string();
                                });
        c.pass = scan_ok(c.result);
        out.push_back(c);
    }

    Rng rng(cfg.seed);
    auto random_cochain = [&]() {
        OneCochain f;
        const int k = rng.uniform(1, 4);
        for (int i = 0; i < k; ++i)
            f.add_term(rng.point(cfg.n, 2), rng.scalar(cfg.n));
        if (rng.coin())
            f.add_term(LatticePoint::zero(cfg.n), Scalar(rng.rational()));
        return f;
    };
    {
        Check c{"cocycle.coboundary_random"};
        const int trials = trials_or(cfg, 50);
        c.inputs = {{"n", cfg.n}, {"box", cfg.box}, {"trials", trials}, {"triples_per_trial", 20}, {"seed", cfg.seed}};
        int bad = 0;
        for (int t = 0; t < trials; ++t) {
            const TwoCochain df = coboundary(random_cochain());
            for (int s = 0; s < 20; ++s)
                if (!cocycle_residual(df, rng.point(cfg.n, cfg.box), rng.point(cfg.n, cfg.box), rng.point(cfg.n, cfg.box)).is_zero())
                    ++bad;
        }
        c.result = {{"failures", bad}};
        c.pass = bad == 0;
        out.push_back(c);
    }
    {
        Check c{"cocycle.normalization"};
        const int trials = trials_or(cfg, 25);
        c.inputs = {{"n", cfg.n}, {"box", cfg.box}, {"trials", trials}, {"seed", cfg.seed}};
        int bad_canonical = 0, bad_coboundary = 0, bad_odd = 0;
        json shown = json::array();
        const Scalar twelfth = Scalar(1).divide_by_constant(12);
        auto odd = [](const EtaTable& t) {
            for (const auto& [p, v] : t.values)
                if (t.at(-p) != -v)
                    return false;
            return true;
        };
        for (int t = 0; t < trials; ++t) {
            const OneCochain f = random_cochain();
            try {
                const auto n1 = normalize_cocycle(TwoCochain::canonical() + coboundary(f), cfg.n, cfg.box);
                const auto n2 = normalize_cocycle(coboundary(f), cfg.n, cfg.box);
                if (recognize_eta(n1.eta).first != twelfth)
                    ++bad_canonical;
                if (!recognize_eta(n2.eta).first.is_zero())
                    ++bad_coboundary;
                if (!odd(n1.eta) || !odd(n2.eta))
                    ++bad_odd;
            } catch (const Error& e) {
                ++bad_canonical;
                if (shown.size() < 5)
                    shown.push_back(e.what());
            }
        }
        const auto plain = normalize_cocycle(TwoCochain::canonical(), cfg.n, cfg.box);
        const auto ab = recognize_eta(plain.eta);
        c.result = {{"canonical_a", ab.first.to_string()},
                    {"canonical_b", ab.second.to_string()},
                    {"canonical_shift_zero", plain.shift.is_zero()},
                    {"a_not_one_twelfth", bad_canonical},
                    {"coboundary_a_nonzero", bad_coboundary},
                    {"eta_not_odd", bad_odd},
                    {"errors", shown}};
        c.pass = bad_canonical == 0 && bad_coboundary == 0 && bad_odd == 0 && plain.shift.is_zero() && ab.first == twelfth
                 && ab.second == -twelfth;
        out.push_back(c);
    }
    {
        Check c{"cocycle.functional_equation"};
        const int bound = 10;
        c.inputs = {{"degree_bound", bound}};
        const auto sol = solve_functional_equation(bound);
        json factors = json::array();
        std::vector<int> zeros;
        bool closed_form_ok = true;
        for (int k = 0; k <= bound; ++k) {
            // 5 - 2^(k+2) + 3^k
            mpz_class two, three;
            mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(k + 2));
            mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned long>(k));
            const mpz_class expect = 5 - two + three;
            const BigRational got = sol.diagonal[static_cast<std::size_t>(k)];
            closed_form_ok = closed_form_ok && got.to_mpq() == mpq_class(expect);
            if (got.is_zero())
                zeros.push_back(k);
            factors.push_back(got.to_string());
        }
        c.result = {{"dimension", sol.basis.size()}, {"exponents", sol.exponents}, {"factors", factors}, {"vanishing_k", zeros}};
        c.pass = sol.basis.size() == 2 && sol.exponents == std::vector<int>{1, 3} && zeros == std::vector<int>{1, 3} && closed_form_ok;
        out.push_back(c);
    }
    {
        Check c{"cocycle.full_equation"};
        const int r = std::max(1, cfg.box);
        c.inputs = {{"n", cfg.n}, {"table_box", 2 * r}};
        const auto eta = EtaTable::from_function(cfg.n, 2 * r, [](const Scalar& x) { return (x * x * x - x).divide_by_constant(12); });
        const auto square = EtaTable::from_function(cfg.n, 2, [](const Scalar& x) { return x * x; });
        int bad = 0, count = 0;
        for (const auto& a : box_points(cfg.n, r))
            for (const auto& b : box_points(cfg.n, r)) {
                ++count;
                if (!full_equation_residual(eta, a, b).is_zero())
                    ++bad;
            }
        const LatticePoint e1 = LatticePoint::unit(cfg.n, 0);
        const LatticePoint e2 = cfg.n > 1 ? LatticePoint::unit(cfg.n, 1) : e1;
        const Scalar sq = full_equation_residual(square, e1, e2);
        c.result = {{"pairs_checked", count}, {"failures", bad}, {"square_residual", sq.to_string()}};
        c.pass = bad == 0 && !sq.is_zero();
        out.push_back(c);
    }
    {
        Check c{"cocycle.h2_quotient"};
        const int box = std::max(2, std::min(cfg.box, cfg.n <= 2 ? 3 : 2));
        c.inputs = {{"n", cfg.n}, {"box", box}, {"degree_bound", 7}};
        const auto h = h2_rank_experiment(cfg.n, box, 7);
        c.result = {{"equations", h.equations},
                    {"cocycle_space_dim", h.cocycle_space_dim},
                    {"coboundary_space_dim", h.coboundary_space_dim},
                    {"quotient_dim", h.quotient_dim}};
        c.pass = h.quotient_dim == 1 && h.cocycle_space_dim == 2 && h.coboundary_space_dim == 1;
        out.push_back(c);
    }
    if (!cfg.input.empty()) {
        Check c{"cocycle.input"};
        c.inputs = {{"file", cfg.input}, {"n", cfg.n}, {"box", cfg.box}};
        std::ifstream in(cfg.input);
        if (!in)
            throw Error(ErrorKind::Parse, "cannot open " + cfg.input);
        const TwoCochain theta = read_two_cochain(in, cfg.n);
        try {
            const auto norm = normalize_cocycle(theta, cfg.n, cfg.box);
            const auto [a, b] = recognize_eta(norm.eta);
            c.result = {{"a", a.to_string()}, {"b", b.to_string()}, {"nontrivial", !a.is_zero()}};
        } catch (const Error& e) {
            c.pass = false;
            c.result = {{"error", error_kind_name(e.kind())}, {"message", e.what()}};
        }
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- density

inline std::vector<Check> suite_density(const RunConfig& cfg)
{
    using namespace detail;
    std::vector<Check> out;
    const Algebra g(cfg.n);
    const DensityParams formal = DensityParams::formal();

    {
        Check c{"density.axiom_basis"};
        const auto pts = box_points(cfg.n, 2);
        const bool all_targets = pts.size() * pts.size() * pts.size() <= 200000;
        c.inputs = {{"n", cfg.n}, {"box", 2}, {"targets", all_targets ? "all" : "zero and one seeded point"}};
        Rng rng(cfg.seed);
        std::vector<LatticePoint> targets = all_targets ? pts : std::vector<LatticePoint>{};
        auto chunks = parallel_chunks<ScanChunk>(pts.size(), cfg.threads, [&](std::size_t lo, std::size_t hi, ScanChunk& r) {
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = 0; j < pts.size(); ++j) {
                    std::vector<LatticePoint> ks = targets;
                    if (!all_targets) {
                        // deterministic per pair, independent of scheduling
                        Rng local(cfg.seed ^ (i * 1000003u + j));
                        ks = {LatticePoint::zero(cfg.n), local.point(cfg.n, 2)};
                    }
                    for (const auto& k : ks) {
                        ++r.count;
                        const auto res = density_axiom_residual(g, g.e(pts[i]), g.e(pts[j]), DensityVector(k), formal);
                        if (!res.is_zero()) {
                            ++r.failures;
                            if (r.shown.size() < 5)
                                r.shown.push_back(triple_text(pts[i], pts[j], k));
                        }
                    }
                }
        }, 1);
        std::uint64_t count = 0, bad = 0;
        json shown = json::array();
        for (const auto& ch : chunks) {
            count += ch.count;
            bad += ch.failures;
            for (const auto& s : ch.shown)
                if (shown.size() < 5)
                    shown.push_back(s);
        }
        c.result = {{"checked", count}, {"failures", bad}, {"examples", shown}};
        c.pass = bad == 0;
        out.push_back(c);
    }
    {
        Check c{"density.axiom_random"};
        const int trials = trials_or(cfg, 100);
        c.inputs = {{"n", cfg.n}, {"trials", trials}, {"seed", cfg.seed}};
        Rng rng(cfg.seed + 7);
        int bad = 0;
        for (int t = 0; t < trials; ++t) {
            const auto x = rng.element(cfg.n, 3), y = rng.element(cfg.n, 3);
            DensityVector v;
            for (int k = 0; k < 3; ++k)
                v.add_term(rng.point(cfg.n, 3), rng.scalar(cfg.n));
            if (!density_axiom_residual(g, x, y, v, formal).is_zero())
                ++bad;
        }
        c.result = {{"failures", bad}};
        c.pass = bad == 0;
        out.push_back(c);
    }
    {
        Check c{"density.weight_spaces"};
        c.inputs = {{"n", cfg.n}, {"box", cfg.box}};
        int bad = 0;
        for (const auto& b : box_points(cfg.n, cfg.box)) {
            const auto img = density_act(g.d(), DensityVector(b), formal);
            if (img != DensityVector(b, formal.a + Scalar::mu_dot(b)))
                ++bad;
        }
        c.result = {{"failures", bad}};
        c.pass = bad == 0;
        out.push_back(c);
    }
    {
        Check c{"density.classification"};
        c.inputs = {{"n", cfg.n}};
        LatticePoint gamma(cfg.n);
        gamma[0] = 2;
        if (cfg.n > 1)
            gamma[1] = -1;
        struct Case {
            std::string name;
            DensityParams p;
            DensityCase expect;
        };
        const std::vector<Case> cases = {
            {"formal", formal, DensityCase::Irreducible},
            {"formal_a_b0", DensityParams(Scalar::var(kVarA), Scalar()), DensityCase::Irreducible},
            {"zero_zero", DensityParams(Scalar(), Scalar()), DensityCase::ReducibleTrivialSub},
            {"zero_one", DensityParams(Scalar(), Scalar(1)), DensityCase::ReducibleCodimOne},
            {"lattice_one", DensityParams::lattice(gamma, Scalar(1)), DensityCase::ReducibleCodimOne},
            {"lattice_zero", DensityParams::lattice(gamma, Scalar()), DensityCase::ReducibleTrivialSub},
            {"lattice_half", DensityParams::lattice(gamma, Scalar(BigRational(1, 2))), DensityCase::Irreducible},
            {"rational_one_zero", DensityParams(Scalar(1), Scalar()), DensityCase::Irreducible},
        };
        json rows = json::array();
        for (const auto& k : cases) {
            const auto cls = classify_density(k.p, cfg.n);
            const bool ok = cls.kind == k.expect;
            c.pass = c.pass && ok;
            rows.push_back({{"name", k.name}, {"case", density_case_name(cls.kind)}, {"witness", cls.witness}, {"ok", ok}});
        }
        Rng rng(cfg.seed + 11);
        int shift_bad = 0;
        for (int t = 0; t < 20; ++t) {
            const LatticePoint base = rng.point(cfg.n, 3), delta = rng.point(cfg.n, 3);
            const Scalar b = t % 3 == 0 ? Scalar() : t % 3 == 1 ? Scalar(1) : Scalar::var(kVarB);
            if (classify_density(DensityParams::lattice(base, b), cfg.n).kind
                != classify_density(DensityParams::lattice(base + delta, b), cfg.n).kind)
                ++shift_bad;
        }
        c.pass = c.pass && shift_bad == 0;
        c.result = {{"cases", rows}, {"shift_invariance_failures", shift_bad}};
        out.push_back(c);
    }
    for (const auto& [id, p] : {std::pair{std::string("density.submodule_00"), DensityParams(Scalar(), Scalar())},
                                std::pair{std::string("density.submodule_01"), DensityParams(Scalar(), Scalar(1))}}) {
        Check c{id};
        c.inputs = {{"n", cfg.n}, {"box", cfg.box}, {"a", p.a.to_string()}, {"b", p.b.to_string()}};
        const auto r = submodule_invariance_check(p, cfg.n, cfg.box);
        c.result = {{"case", density_case_name(r.kind)},
                    {"invariance_checks", r.invariance_checks},
                    {"invariance_failures", r.invariance_failures},
                    {"connectivity_checks", r.connectivity_checks},
                    {"connectivity_failures", r.connectivity_failures},
                    {"examples", r.failures}};
        c.pass = r.ok();
        out.push_back(c);
    }
    {
        Check c{"density.duality"};
        const auto at = spot_assignment(cfg);
        c.inputs = {{"n", cfg.n}, {"box", cfg.box}, {"spot_assignment", spec_json(at)}, {"spot_a", "1/2"}, {"spot_b", "1/3"}};
        int bad = 0, count = 0, spot_bad = 0;
        const DensityParams spot(Scalar(BigRational(1, 2)), Scalar(BigRational(1, 3)));
        for (const auto& a : box_points(cfg.n, cfg.box))
            for (const auto& gm : box_points(cfg.n, cfg.box)) {
                ++count;
                if (!duality_check(formal, a, gm).is_zero())
                    ++bad;
                if (!duality_check(spot, a, gm).evaluate(at).is_zero())
                    ++spot_bad;
            }
        c.result = {{"pairs_checked", count}, {"failures", bad}, {"spot_failures", spot_bad}};
        c.pass = bad == 0 && spot_bad == 0;
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- verma

inline std::vector<std::uint64_t> partition_numbers(int upto)
{
    std::vector<std::uint64_t> p(static_cast<std::size_t>(upto) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= upto; ++part)
        for (int k = part; k <= upto; ++k)
            p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
    return p;
}

struct GrowthRow {
    int N;
    int L;
    std::size_t dim;
    std::size_t family;
};

/// Truncated dimensions of the weight space with shift (-1, 0, ..., 0) and
/// the number of members of the family E((0,-k,0..)) E((-1,k,0..)) present.
inline std::vector<GrowthRow> verma_growth(int n, const std::vector<int>& boxes)
{
    std::vector<GrowthRow> rows;
    LatticePoint shift(n);
    shift[0] = -1;
    for (int N : boxes) {
        const TruncationBox box(N, 2 * N + 1);
        const auto words = pbw_enumerate(shift, box);
        std::size_t family = 0;
        for (int k = 1; k <= N; ++k) {
            LatticePoint x(n), y(n);
            x[1] = -k;
            y[0] = -1;
            y[1] = k;
            if (std::binary_search(words.begin(), words.end(), PBWMonomial({x, y})))
                ++family;
        }
        rows.push_back({N, box.max_length, words.size(), family});
    }
    return rows;
}

inline std::vector<Check> suite_verma(const RunConfig& cfg)
{
    using namespace detail;
    std::vector<Check> out;
    {
        Check c{"verma.partitions_rank1"};
        c.inputs = {{"n", 1}, {"levels", "0..6"}, {"specialization", {{"mu1", "1"}}}};
        const auto p = partition_numbers(6);
        json rows = json::array();
        for (int k = 0; k <= 6; ++k) {
            const int N = std::max(k, 1);
            const auto dim = weight_space_dim_truncated(LatticePoint{-k}, TruncationBox(N, N));
            const bool ok = dim == p[static_cast<std::size_t>(k)];
            c.pass = c.pass && ok;
            rows.push_back({{"level", k}, {"dim", dim}, {"partitions", p[static_cast<std::size_t>(k)]}});
        }
        c.result = {{"levels", rows}};
        out.push_back(c);
    }
    {
        Check c{"verma.singular_m00"};
        c.inputs = {{"n", 1}, {"lambda", "0"}, {"c", "0"}, {"vector", "e[-1]v"}, {"box", 3}};
        const VermaModule m(1, Scalar(), Scalar());
        const auto v = m.apply_word({LatticePoint{-1}});
        json res = json::object();
        for (const auto& [gmm, r] : m.singular_residuals(v, TruncationBox(3, 3))) {
            res[gmm.to_string()] = VermaModule::format(r);
            c.pass = c.pass && r.is_zero();
        }
        // the same vector is not singular for formal lambda
        const VermaModule formal(1);
        const auto r1 = formal.act(Algebra(1).e(LatticePoint{1}), formal.apply_word({LatticePoint{-1}}));
        c.result = {{"residuals", res}, {"formal_lambda_residual", VermaModule::format(r1)}};
        c.pass = c.pass && !r1.is_zero();
        out.push_back(c);
    }
    {
        Check c{"verma.growth"};
        const int n = std::max(2, cfg.n);
        std::vector<int> boxes = cfg.boxes.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6} : cfg.boxes;
        c.inputs = {{"n", n}, {"boxes", boxes}, {"length", "2N+1"}};
        const auto rows = verma_growth(n, boxes);
        json table = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            const bool increasing = i == 0 || r.dim > rows[i - 1].dim;
            const bool family = r.family == static_cast<std::size_t>(r.N) && r.dim >= static_cast<std::size_t>(r.N);
            c.pass = c.pass && increasing && family;
            table.push_back({{"N", r.N}, {"L", r.L}, {"dim", r.dim}, {"family", r.family}});
        }
        c.result = {{"boxes", table}};
        out.push_back(c);
    }
    {
        Check c{"verma.module_axiom"};
        const int trials = trials_or(cfg, 10);
        c.inputs = {{"n", cfg.n}, {"trials", trials}, {"seed", cfg.seed}};
        const Algebra g(cfg.n);
        const VermaModule m(cfg.n);
        Rng rng(cfg.seed + 3);
        int bad = 0;
        for (int t = 0; t < trials; ++t) {
            const auto x = rng.element(cfg.n, 2, 2), y = rng.element(cfg.n, 2, 2);
            std::vector<LatticePoint> word;
            for (int k = rng.uniform(0, 2); k > 0; --k) {
                LatticePoint p = rng.nonzero_point(cfg.n, 2);
                word.push_back(p.lex_sign() < 0 ? p : -p);
            }
            const auto v = m.apply_word(word);
            const auto lhs = m.act(x, m.act(y, v)) - m.act(y, m.act(x, v));
            if (lhs != m.act(g.vir_bracket(x, y), v))
                ++bad;
        }
        c.result = {{"failures", bad}};
        c.pass = bad == 0;
        out.push_back(c);
    }
    {
        Check c{"verma.pbw_determinism"};
        const int trials = trials_or(cfg, 10);
        c.inputs = {{"n", cfg.n}, {"trials", trials}, {"word_length", 3}, {"seed", cfg.seed}};
        const Algebra g(cfg.n);
        const VermaModule m(cfg.n);
        Rng rng(cfg.seed + 5);
        int order_bad = 0, normal_bad = 0, swap_bad = 0, weight_bad = 0;
        for (int t = 0; t < trials; ++t) {
            std::vector<LatticePoint> word;
            for (int k = 0; k < 3; ++k) {
                LatticePoint p = rng.nonzero_point(cfg.n, 2);
                word.push_back(p.lex_sign() < 0 ? p : -p);
            }
            std::sort(word.begin(), word.end());
            const PBWMonomial normal(word);
            // every ordering names the same basis monomial
            do {
                if (PBWMonomial(word) != normal)
                    ++order_bad;
                // swapping two adjacent generators changes the vector by their bracket
                for (std::size_t i = 0; i + 1 < word.size(); ++i) {
                    auto swapped = word;
                    std::swap(swapped[i], swapped[i + 1]);
                    VermaVector diff = m.apply_word(word) - m.apply_word(swapped);
                    VermaVector tail = m.apply_word(std::vector<LatticePoint>(word.begin() + static_cast<std::ptrdiff_t>(i) + 2, word.end()));
                    VermaVector expect = m.act(g.vir_bracket(g.e(word[i]), g.e(word[i + 1])), tail);
                    for (std::size_t j = i; j-- > 0;)
                        expect = m.act(g.e(word[j]), expect);
                    if (diff != expect)
                        ++swap_bad;
                }
            } while (std::next_permutation(word.begin(), word.end()));
            if (m.apply_word(normal.word()) != VermaVector(normal))
                ++normal_bad;
            const auto s = m.homogeneous_shift(VermaVector(normal));
            const LatticePoint gm = rng.point(cfg.n, 2);
            const auto img = m.act(AlgebraElement(BasisSymbol::e(gm)), VermaVector(normal));
            if (s && !img.is_zero() && m.homogeneous_shift(img) != *s + gm)
                ++weight_bad;
        }
        c.result = {{"ordering_failures", order_bad},
                    {"normal_word_failures", normal_bad},
                    {"swap_failures", swap_bad},
                    {"weight_failures", weight_bad}};
        c.pass = order_bad == 0 && normal_bad == 0 && swap_bad == 0 && weight_bad == 0;
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- gvm

inline std::vector<LatticePoint> gvm_kappas(const RunConfig& cfg)
{
    const int r = std::max(2, cfg.n) - 1;
    std::vector<LatticePoint> out;
    if (!cfg.kappa.empty()) {
        if (static_cast<int>(cfg.kappa.size()) != r)
            throw Error(ErrorKind::RankMismatch, "kappa needs " + std::to_string(r) + " coordinates");
        out.emplace_back(std::span<const int>(cfg.kappa));
        return out;
    }
    for (int k : {-1, 0, 1}) {
        LatticePoint p(r);
        p[0] = k;
        out.push_back(p);
    }
    return out;
}

inline std::vector<Check> suite_gvm(const RunConfig& cfg)
{
    using namespace detail;
    std::vector<Check> out;
    const int n = std::max(2, cfg.n);
    const DensityParams formal = DensityParams::formal();
    std::vector<int> radii = cfg.boxes;
    if (radii.empty())
        for (int r = 1; r <= 8; ++r)
            radii.push_back(r);

    for (const auto& kappa : gvm_kappas(cfg)) {
        const auto q = quotient_dim_level1(n, kappa, formal, radii);
        json table = json::array();
        bool monotone = true, bounded = true;
        for (std::size_t i = 0; i < q.boxes.size(); ++i) {
            const auto& b = q.boxes[i];
            table.push_back({{"radius", b.radius}, {"rows", b.rows}, {"cols", b.cols}, {"rank", b.rank}});
            if (i > 0 && b.rank < q.boxes[i - 1].rank)
                monotone = false;
            if (b.rank > 2)
                bounded = false;
        }
        const std::string tag = "kappa" + kappa.to_string();
        const json inputs = {{"n", n}, {"kappa", kappa.to_string()}, {"radii", radii}};
        out.push_back({"gvm.level1_monotone." + tag, monotone, inputs, {{"boxes", table}}});
        out.push_back({"gvm.level1_stabilized." + tag, q.stabilized && q.stabilized_at <= 8, inputs,
                       {{"stabilized", q.stabilized}, {"stabilized_at", q.stabilized_at}}});
        out.push_back({"gvm.level1_bound." + tag, bounded, inputs,
                       {{"bound", "1*3"}, {"max_allowed", 2}, {"max_rank", q.boxes.empty() ? 0 : q.boxes.back().rank}}});
    }
    {
        Check c{"gvm.level_basis"};
        c.inputs = {{"n", n}};
        LatticePoint zero(n - 1);
        const auto l1 = level_weight_basis(1, zero, 3).size();
        const auto l2 = level_weight_basis(2, zero, 1).size();
        // level 1: one word per gamma; level 2 with box 1: 3^(n-1) singles plus unordered pairs
        std::size_t m = 1;
        for (int i = 0; i < n - 1; ++i)
            m *= 3;
        std::size_t expect1 = 1;
        for (int i = 0; i < n - 1; ++i)
            expect1 *= 7;
        const std::size_t expect2 = m + m * (m + 1) / 2;
        c.result = {{"level1_box3", l1}, {"level2_box1", l2}};
        c.pass = l1 == expect1 && l2 == expect2;
        out.push_back(c);
    }
    {
        Check c{"gvm.module_axiom"};
        const int trials = trials_or(cfg, 10);
        c.inputs = {{"n", n}, {"trials", trials}, {"seed", cfg.seed}};
        const Algebra g(n);
        const GvmModule mod(n, formal);
        Rng rng(cfg.seed + 13);
        int bad = 0, weight_bad = 0;
        for (int t = 0; t < trials; ++t) {
            const auto x = rng.element(n, 1, 2), y = rng.element(n, 1, 2);
            std::vector<LatticePoint> word;
            for (int k = rng.uniform(0, 2); k > 0; --k) {
                LatticePoint p = rng.point(n, 1);
                p[0] = -rng.uniform(1, 2);
                word.push_back(p);
            }
            const GvmVector v(GvmMonomial(word, rng.point(n - 1, 2)));
            const auto lhs = mod.act(x, mod.act(y, v)) - mod.act(y, mod.act(x, v));
            if (lhs != mod.act(g.vir_bracket(x, y), v))
                ++bad;
            // E(gamma) moves level by -gamma_1 and the mu' shift by gamma'
            const LatticePoint gm = rng.point(n, 1);
            const GvmMonomial& src = v.begin()->first;
            for (const auto& [mono, coef] : mod.act(AlgebraElement(BasisSymbol::e(gm)), v))
                if (mono.level() != src.level() - gm[0] || mono.total_shift() != src.total_shift() + gm.tail())
                    ++weight_bad;
        }
        c.result = {{"failures", bad}, {"weight_failures", weight_bad}};
        c.pass = bad == 0 && weight_bad == 0;
        out.push_back(c);
    }
    {
        Check c{"gvm.degree0_density"};
        c.inputs = {{"n", n}, {"box", 2}};
        const GvmModule mod(n, formal);
        int bad = 0;
        for (const auto& gm : box_points(n - 1, 2))
            for (const auto& k : box_points(n - 1, 2)) {
                const AlgebraElement x(BasisSymbol::e(gm.prepend(0)));
                const auto lhs = mod.act(x, GvmVector(GvmMonomial(k)));
                // T_{mu'}(a, b) is the rank-n density module restricted to indices (0, kappa)
                const auto rhs = density_act(x, DensityVector(k.prepend(0)), formal);
                GvmVector lifted;
                for (const auto& [b, cb] : rhs)
                    lifted.add_term(GvmMonomial(b.tail()), cb);
                if (lhs != lifted)
                    ++bad;
            }
        c.result = {{"failures", bad}};
        c.pass = bad == 0;
        out.push_back(c);
    }
    return out;
}

inline std::vector<Check> run_suite(const std::string& suite, const RunConfig& cfg)
{
    std::vector<Check> out;
    auto add = [&](std::vector<Check> v) {
        for (auto& c : v)
            out.push_back(std::move(c));
    };
    if (suite == "jacobi" || suite == "all")
        add(suite_jacobi(cfg));
    if (suite == "cocycle" || suite == "all")
        add(suite_cocycle(cfg));
    if (suite == "density" || suite == "all")
        add(suite_density(cfg));
    if (suite == "verma" || suite == "all")
        add(suite_verma(cfg));
    if (suite == "gvm" || suite == "all")
        add(suite_gvm(cfg));
    std::sort(out.begin(), out.end(), [](const Check& x, const Check& y) { return x.id < y.id; });
    return out;
}

} // namespace solvir::cli

#endif
