#include "recipmono/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "recipmono/arithfactor.hpp"
#include "recipmono/discriminant.hpp"
#include "recipmono/families.hpp"
#include "recipmono/galois.hpp"
#include "recipmono/modpoly.hpp"
#include "recipmono/monogenic.hpp"
#include "recipmono/polycore.hpp"

namespace recipmono {

namespace {

using Json = nlohmann::ordered_json;

// Malformed input that the parser could not reject: exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fnv1a_hex(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

Integer parse_int_arg(const std::string& s)
{
    Integer v;
    std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    if (t.empty() || v.set_str(t, 10) != 0) throw UsageError("malformed integer '" + s + "'");
    return v;
}

IntPoly load_poly(const std::string& arg)
{
    std::string text = arg;
    std::error_code ec;
    if (!arg.empty() && arg[0] != '[' && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return parse_poly(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("malformed polynomial: ") + e.what());
    }
}

/// "a..b" or a single integer.
std::pair<Integer, Integer> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        Integer v = parse_int_arg(s);
        return {v, v};
    }
    Integer lo = parse_int_arg(s.substr(0, dots)), hi = parse_int_arg(s.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + s + "'");
    return {lo, hi};
}

std::uint64_t parse_u64(const std::string& s)
{
    Integer v = parse_int_arg(s);
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) throw UsageError("value out of range: " + s);
    return std::stoull(v.get_str());
}

Json poly_json(const IntPoly& f)
{
    Json j = Json::array();
    for (const auto& c : f.coeffs()) j.push_back(c.get_str());
    return j;
}

Json factorization_json(const IntFactorization& fac)
{
    Json j;
    j["sign"] = fac.sign;
    Json fs = Json::array();
    for (const auto& pp : fac.factors) fs.push_back({{"prime", pp.prime.get_str()}, {"exponent", pp.exponent}});
    j["factors"] = fs;
    j["cofactor"] = fac.cofactor.get_str();
    j["complete"] = fac.complete();
    return j;
}

Json strings_json(const std::vector<Integer>& v)
{
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.get_str());
    return j;
}

Json monogenic_json(const MonogenicityReport& rep)
{
    Json j;
    j["poly"] = poly_json(rep.poly);
    j["poly_text"] = to_string(rep.poly);
    j["irreducibility"] = to_string(rep.irreducibility);
    j["disc"] = rep.disc.get_str();
    j["factorization_complete"] = rep.factorization_complete;
    j["candidate_primes"] = strings_json(rep.candidate_primes);
    j["index_primes"] = strings_json(rep.index_primes);
    Json detail = Json::object();
    for (const auto& [p, v] : rep.per_prime_detail) detail[p.get_str()] = to_string(v);
    j["per_prime_detail"] = detail;
    j["verdict"] = to_string(rep.verdict);
    j["blocking"] = rep.blocking;
    return j;
}

Json sufficient_json(const SufficientReport& rep)
{
    Json j;
    j["verdict"] = to_string(rep.verdict);
    j["irreducibility"] = to_string(rep.irreducibility);
    j["f1_fm1"] = rep.f1_fm1.get_str();
    j["f1_fm1_status"] = to_string(rep.f1_fm1_status);
    j["g"] = poly_json(rep.g);
    j["g_report"] = monogenic_json(rep.g_report);
    j["failing"] = rep.failing;
    return j;
}

Json identity_json(const IdentityCheck& c)
{
    return {{"holds", c.holds}, {"lhs", c.lhs.get_str()}, {"rhs", c.rhs.get_str()}};
}

Json modfactor_json(const ModPolyFactorization& fac)
{
    Json j;
    j["p"] = fac.p;
    j["unit"] = fac.unit;
    Json fs = Json::array();
    for (const auto& f : fac.factors) {
        Json c = Json::array();
        for (auto x : f.factor.coeffs()) c.push_back(std::to_string(x));
        fs.push_back({{"factor", c}, {"multiplicity", f.multiplicity}});
    }
    j["factors"] = fs;
    return j;
}

Json galois_json(const GaloisEvidence& ev)
{
    Json j;
    j["poly"] = poly_json(ev.poly);
    j["disc"] = ev.disc.get_str();
    j["irreducibility"] = to_string(ev.irreducibility);
    j["disc_square"] = to_string(ev.disc_square);
    j["conclusion"] = to_string(ev.conclusion);
    if (ev.conclusion == GaloisConclusion::ProvenGroup) j["group"] = ev.group;
    j["facts"] = ev.facts;
    Json samples = Json::array();
    for (const auto& s : ev.samples) samples.push_back({{"p", s.p}, {"cycle_type", s.degrees}});
    j["samples"] = samples;
    j["skipped_primes"] = ev.skipped_primes;
    return j;
}

class Csv {
public:
    explicit Csv(std::vector<std::string> header) : header_(std::move(header)) {}
    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }
    void write(std::ostream& out) const
    {
        line(out, header_);
        for (const auto& r : rows_) line(out, r);
    }
    Json to_json() const
    {
        Json arr = Json::array();
        for (const auto& r : rows_) {
            Json o;
            for (std::size_t i = 0; i < header_.size(); ++i) o[header_[i]] = r[i];
            arr.push_back(o);
        }
        return arr;
    }

private:
    static void line(std::ostream& out, const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
            if (quote) {
                out << '"';
                for (char c : cells[i]) out << (c == '"' ? "\"\"" : std::string(1, c));
                out << '"';
            } else {
                out << cells[i];
            }
        }
        out << '\n';
    }
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

struct Globals {
    std::string format; // "", "json" or "csv"
    unsigned jobs = 0;
    std::string checkpoint;
    std::string summary;
    bool timing = false;
    bool keep_witnesses = false;
    std::uint64_t seed = kDefaultSeed;
};

class Runner {
public:
    Runner(std::ostream& out, Globals& g) : out_(out), g_(g) {}

    void set_command(std::string name) { command_ = std::move(name); }
    void param(const std::string& key, const std::string& value) { params_[key] = value; }
    void input(const std::string& key, const IntPoly& f) { digests_[key] = fnv1a_hex(to_json_array(f)); }

    Json manifest() const
    {
        Json m;
        m["tool"] = "recipmono";
        m["version"] = kToolVersion;
        m["subcommand"] = command_;
        m["parameters"] = params_;
        m["input_digests"] = digests_;
        m["seed"] = g_.seed;
        if (g_.timing) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
            m["wall_time_ms"] = ms.count();
        }
        return m;
    }

    void emit(Json report)
    {
        report["manifest"] = manifest();
        out_ << report.dump(2) << '\n';
    }

    /// Sweep output: CSV rows by default, JSON when asked.
    void emit_sweep(const Csv& csv, Json summary)
    {
        summary["manifest"] = manifest();
        summary["finite_verification"] = true;
        if (!g_.summary.empty()) {
            std::ofstream s(g_.summary);
            if (!s) throw std::runtime_error("cannot write summary " + g_.summary);
            s << summary.dump(2) << '\n';
        }
        if (g_.format == "json") {
            summary["rows"] = csv.to_json();
            out_ << summary.dump(2) << '\n';
        } else {
            csv.write(out_);
        }
    }

    SweepOptions sweep_options() const
    {
        SweepOptions o;
        o.jobs = g_.jobs;
        o.keep_witnesses = g_.keep_witnesses;
        if (!g_.checkpoint.empty()) o.checkpoint = g_.checkpoint;
        return o;
    }

    const Globals& globals() const { return g_; }

private:
    std::ostream& out_;
    Globals& g_;
    std::string command_;
    Json params_ = Json::object();
    Json digests_ = Json::object();
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string verdict_cell(Verdict v) { return to_string(v); }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Globals g;
    if (const char* env = std::getenv("RECIPMONO_SEED")) {
        try {
            g.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << Json{{"error", {{"type", "usage"}, {"message", "RECIPMONO_SEED must be an integer"}}}}.dump() << '\n';
            return 2;
        }
    }
    Runner runner(out, g);

    CLI::App app{"Exact toolkit for monogeneity of reciprocal polynomials", "recipmono"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", g.jobs, "Worker threads for sweeps (0: all cores)");
    app.add_option("--checkpoint", g.checkpoint, "Resumable state file for count sweeps");
    app.add_option("--summary", g.summary, "Write the JSON summary of a sweep to this file");
    app.add_flag("--timing", g.timing, "Include wall time in the manifest");
    app.add_flag("--keep-witnesses", g.keep_witnesses, "List the counted values in count reports");
    app.fallthrough();

    std::function<void()> action;

    // integers
    std::string n_arg;
    auto* factor = app.add_subcommand("factor", "Factor an integer");
    factor->add_option("n", n_arg)->required();
    factor->callback([&] {
        action = [&] {
            runner.set_command("factor");
            runner.param("n", n_arg);
            Integer n = parse_int_arg(n_arg);
            Json j = factorization_json(factor_int(n));
            j["n"] = n.get_str();
            runner.emit(j);
        };
    });

    auto* squarefree = app.add_subcommand("squarefree", "Decide whether an integer is squarefree");
    squarefree->add_option("n", n_arg)->required();
    squarefree->callback([&] {
        action = [&] {
            runner.set_command("squarefree");
            runner.param("n", n_arg);
            Integer n = parse_int_arg(n_arg);
            SquarefreeResult r = is_squarefree_int(n);
            Json j;
            j["n"] = n.get_str();
            j["status"] = to_string(r.status);
            j["witness"] = r.witness ? Json(r.witness->get_str()) : Json(nullptr);
            runner.emit(j);
        };
    });

    // discriminants
    std::string poly_arg;
    auto* disc = app.add_subcommand("disc", "Discriminant with factorization");
    disc->add_option("poly", poly_arg)->required();
    disc->callback([&] {
        action = [&] {
            runner.set_command("disc");
            IntPoly f = load_poly(poly_arg);
            runner.input("poly", f);
            if (f.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
            DiscriminantReport rep = discriminant_report(f);
            Json j;
            j["poly"] = poly_json(f);
            j["disc"] = rep.disc.get_str();
            j["factorization"] = factorization_json(rep.factorization);
            j["square_divisor_primes"] = strings_json(rep.square_divisor_primes);
            runner.emit(j);
        };
    });

    auto* lemma = app.add_subcommand("check-lemma", "Check Delta(f) = (-1)^n f(1) f(-1) Delta(g)^2");
    lemma->add_option("poly", poly_arg)->required();
    lemma->callback([&] {
        action = [&] {
            runner.set_command("check-lemma");
            IntPoly f = load_poly(poly_arg);
            runner.input("poly", f);
            Json j = identity_json(lemma_disc_identity(f));
            j["g"] = poly_json(reciprocal_to_half(f));
            runner.emit(j);
        };
    });

    std::string q_arg = "3", a_arg = "0", b_arg = "1", r_arg = "1", t_arg = "0";
    auto* conj = app.add_subcommand("check-conjecture", "Check the closed form of Delta(F_{2^a q, t})");
    conj->add_option("--q", q_arg, "odd prime q");
    conj->add_option("--a", a_arg, "0 or 1");
    conj->add_option("--r", r_arg, "nonzero integer r");
    conj->add_option("--t", t_arg, "t or a range lo..hi");
    conj->callback([&] {
        action = [&] {
            runner.set_command("check-conjecture");
            runner.param("q", q_arg);
            runner.param("a", a_arg);
            runner.param("r", r_arg);
            runner.param("t", t_arg);
            const unsigned long q = parse_u64(q_arg);
            const unsigned a = static_cast<unsigned>(parse_u64(a_arg));
            const Integer r = parse_int_arg(r_arg);
            auto [lo, hi] = parse_range(t_arg);
            Json checks = Json::array();
            bool all = true;
            for (Integer t = lo; t <= hi; ++t) {
                IdentityCheck c = conjecture_disc_identity(q, a, r, t);
                Json row = identity_json(c);
                row["t"] = t.get_str();
                checks.push_back(row);
                all = all && c.holds;
            }
            Json j;
            if (checks.size() == 1) {
                j = checks[0];
            } else {
                j["holds"] = all;
                j["checks"] = checks;
            }
            runner.emit(j);
        };
    });

    // transforms
    auto* f2g = app.add_subcommand("f2g", "Half-degree companion g of a reciprocal f");
    f2g->add_option("poly", poly_arg)->required();
    f2g->callback([&] {
        action = [&] {
            runner.set_command("f2g");
            IntPoly f = load_poly(poly_arg);
            runner.input("poly", f);
            IntPoly gpoly = reciprocal_to_half(f);
            runner.emit({{"f", poly_json(f)}, {"g", poly_json(gpoly)}, {"g_text", to_string(gpoly, 'x')}});
        };
    });

    int n_opt = 0;
    auto* g2f = app.add_subcommand("g2f", "Reciprocal f = x^n g(x + 1/x)");
    g2f->add_option("poly", poly_arg)->required();
    g2f->add_option("-n", n_opt, "degree of g (defaults to deg g)");
    g2f->callback([&] {
        action = [&] {
            runner.set_command("g2f");
            IntPoly gpoly = load_poly(poly_arg);
            runner.input("poly", gpoly);
            const int n = n_opt ? n_opt : gpoly.degree();
            runner.param("n", std::to_string(n));
            IntPoly f = half_to_reciprocal(gpoly, n);
            runner.emit({{"g", poly_json(gpoly)}, {"f", poly_json(f)}, {"f_text", to_string(f)}});
        };
    });

    // monogeneity
    unsigned k_opt = 2;
    auto* pcomp = app.add_subcommand("power-comp", "Sufficient test for f(x^k)");
    pcomp->add_option("poly", poly_arg)->required();
    pcomp->add_option("-k", k_opt, "k >= 2")->required();
    pcomp->callback([&] {
        action = [&] {
            runner.set_command("power-comp");
            runner.param("k", std::to_string(k_opt));
            IntPoly f = load_poly(poly_arg);
            runner.input("poly", f);
            PowerCompositionalReport rep = power_compositional_check(f, k_opt);
            Json detail = Json::object();
            for (const auto& [p, v] : rep.k_prime_detail) detail[p.get_str()] = to_string(v);
            Json j;
            j["verdict"] = to_string(rep.verdict);
            j["k"] = rep.k;
            j["composed_irreducibility"] = to_string(rep.composed_irreducibility);
            j["k_prime_detail"] = detail;
            j["base"] = sufficient_json(rep.base);
            j["failing"] = rep.failing;
            runner.emit(j);
        };
    });

    auto* mono = app.add_subcommand("monogenic", "Decide monogeneity of a monic polynomial");
    mono->add_option("poly", poly_arg)->required();
    mono->callback([&] {
        action = [&] {
            runner.set_command("monogenic");
            IntPoly f = load_poly(poly_arg);
            runner.input("poly", f);
            MonogenicityReport rep = is_monogenic(f);
            if (rep.disc == 0) throw std::domain_error("polynomial is not separable (discriminant is zero)");
            runner.emit(monogenic_json(rep));
        };
    });

    std::string p_arg;
    auto* itest = app.add_subcommand("index-test", "Dedekind test: does p divide the index of f");
    itest->add_option("poly", poly_arg)->required();
    itest->add_option("-p", p_arg, "prime")->required();
    itest->callback([&] {
        action = [&] {
            runner.set_command("index-test");
            runner.param("p", p_arg);
            IntPoly f = load_poly(poly_arg);
            runner.input("poly", f);
            Integer p = parse_int_arg(p_arg);
            runner.emit({{"p", p.get_str()}, {"result", to_string(dedekind_index_test(f, p))}});
        };
    });

    std::string h_arg;
    auto* isq = app.add_subcommand("ideal-square", "Membership of f in <p, h>^2");
    isq->add_option("poly", poly_arg)->required();
    isq->add_option("-p", p_arg, "prime")->required();
    isq->add_option("--h", h_arg, "monic h, irreducible mod p")->required();
    isq->callback([&] {
        action = [&] {
            runner.set_command("ideal-square");
            runner.param("p", p_arg);
            IntPoly f = load_poly(poly_arg);
            IntPoly h = load_poly(h_arg);
            runner.input("poly", f);
            runner.input("h", h);
            IdealSquareResult r = ideal_square_membership(f, parse_int_arg(p_arg), h);
            Json w;
            w["quotient"] = poly_json(r.witness.quotient);
            w["linear"] = poly_json(r.witness.linear);
            w["constant"] = poly_json(r.witness.constant);
            runner.emit({{"member", r.member}, {"p", r.witness.p.get_str()}, {"h", poly_json(h)}, {"witness", w}});
        };
    });

    auto* suff = app.add_subcommand("sufficient", "Sufficient monogeneity test for reciprocal f");
    suff->add_option("poly", poly_arg)->required();
    suff->callback([&] {
        action = [&] {
            runner.set_command("sufficient");
            IntPoly f = load_poly(poly_arg);
            runner.input("poly", f);
            runner.emit(sufficient_json(sufficient_reciprocal_monogenic(f)));
        };
    });

    unsigned budget = 50;
    auto* gal = app.add_subcommand("galois5", "Galois group of a quintic from cycle types");
    gal->add_option("poly", poly_arg)->required();
    gal->add_option("--budget", budget, "primes to sample");
    gal->callback([&] {
        action = [&] {
            runner.set_command("galois5");
            runner.param("budget", std::to_string(budget));
            IntPoly f = load_poly(poly_arg);
            runner.input("poly", f);
            runner.emit(galois_json(quintic_galois(f, budget)));
        };
    });

    auto* fmod = app.add_subcommand("factor-mod", "Factor a polynomial over F_p");
    fmod->add_option("p", p_arg)->required();
    fmod->add_option("poly", poly_arg)->required();
    fmod->callback([&] {
        action = [&] {
            runner.set_command("factor-mod");
            runner.param("p", p_arg);
            IntPoly f = load_poly(poly_arg);
            runner.input("poly", f);
            ModPoly fbar = reduce_mod(f, parse_int_arg(p_arg));
            if (fbar.is_zero()) throw std::domain_error("polynomial vanishes modulo p");
            runner.emit(modfactor_json(factor_mod_p(fbar, g.seed)));
        };
    });

    // families
    auto* family = app.add_subcommand("family", "Explicit polynomial families");
    family->require_subcommand(1);

    auto* jones = family->add_subcommand("jones", "F_{N,t} = Phi_N + 4 r q^2 t x^(phi(N)/2)");
    jones->add_option("--q", q_arg);
    jones->add_option("--a", a_arg);
    jones->add_option("--b", b_arg);
    jones->add_option("--r", r_arg);
    jones->add_option("--t", t_arg, "t or lo..hi");
    jones->callback([&] {
        action = [&] {
            runner.set_command("family jones");
            for (auto [k, v] : {std::pair{"q", q_arg}, {"a", a_arg}, {"b", b_arg}, {"r", r_arg}, {"t", t_arg}})
                runner.param(k, v);
            FamilyParams params{parse_u64(q_arg), static_cast<unsigned>(parse_u64(a_arg)),
                                static_cast<unsigned>(parse_u64(b_arg)), parse_int_arg(r_arg), 0};
            auto [lo, hi] = parse_range(t_arg);
            Csv csv({"t", "F", "disc", "verdict", "g", "identity_holds"});
            std::int64_t monogenic = 0, rows = 0;
            for (Integer t = lo; t <= hi; ++t) {
                params.t = t;
                IntPoly F = build_F(params);
                MonogenicityReport rep = is_monogenic(F);
                std::string ident = "n/a", gtext = "n/a";
                if (params.b == 1 && params.a <= 1) {
                    gtext = to_string(build_ga(params.q, params.a, params.r, t));
                    ident = conjecture_disc_identity(params.q, params.a, params.r, t).holds ? "true" : "false";
                }
                csv.row({t.get_str(), to_string(F), rep.disc.get_str(), verdict_cell(rep.verdict), gtext, ident});
                ++rows;
                if (rep.verdict == Verdict::Monogenic) ++monogenic;
            }
            runner.emit_sweep(csv, {{"N", params.N()}, {"rows", rows}, {"monogenic", monogenic}});
        };
    });

    std::uint64_t pmax = 100;
    auto* thm13 = family->add_subcommand("thm13", "Degree-10/5 family: primes with h(p) squarefree");
    thm13->add_option("--pmax", pmax);
    thm13->callback([&] {
        action = [&] {
            runner.set_command("family thm13");
            runner.param("pmax", std::to_string(pmax));
            Thm13Scan scan = thm13_prime_scan(pmax, g.jobs);
            Csv csv({"p", "h_p", "h_squarefree", "f_verdict", "g_verdict"});
            Json primes = Json::array();
            bool all_monogenic = true;
            for (const auto& row : scan.accepted) {
                csv.row({std::to_string(row.p), row.h_value.get_str(), to_string(row.h_status),
                         verdict_cell(row.f_verdict), verdict_cell(row.g_verdict)});
                primes.push_back(row.p);
                all_monogenic = all_monogenic && row.f_verdict == Verdict::Monogenic && row.g_verdict == Verdict::Monogenic;
            }
            Json rejected = Json::array();
            for (const auto& row : scan.rejected)
                rejected.push_back({{"p", row.p}, {"h_squarefree", to_string(row.h_status)},
                                    {"f_verdict", to_string(row.f_verdict)}, {"g_verdict", to_string(row.g_verdict)}});
            runner.emit_sweep(csv, {{"pmax", pmax}, {"primes", primes}, {"all_monogenic", all_monogenic},
                                    {"rejected", rejected}});
        };
    });

    std::string sext_arg = "1";
    auto* sextic = family->add_subcommand("sextic", "Sextic family f_a with H(a) = (4a^2+20a-7)(8a+7)");
    sextic->add_option("--a", sext_arg, "a or lo..hi");
    sextic->callback([&] {
        action = [&] {
            runner.set_command("family sextic");
            runner.param("a", sext_arg);
            auto [lo, hi] = parse_range(sext_arg);
            Csv csv({"a", "f", "g", "H_a", "H_squarefree", "f_verdict"});
            std::int64_t hits = 0;
            for (Integer a = lo; a <= hi; ++a) {
                SexticMember m = sextic_family(a);
                Squarefreeness s = is_squarefree_int(m.H_value).status;
                MonogenicityReport rep = is_monogenic(m.f);
                csv.row({a.get_str(), to_string(m.f), to_string(m.g), m.H_value.get_str(), to_string(s),
                         verdict_cell(rep.verdict)});
                if (s == Squarefreeness::Squarefree) ++hits;
            }
            runner.emit_sweep(csv, {{"H_squarefree", hits}});
        };
    });

    // counting
    auto* count = app.add_subcommand("count", "Counting functions L_f, M_H, N_H");
    count->require_subcommand(1);
    std::int64_t bound = 1000;
    std::string mode = "lemma", range = "symmetric", count_poly;
    auto count_json = [&](const CountReport& rep) {
        Json j;
        j["definition"] = to_string(rep.definition);
        j["bound"] = rep.bound;
        j["count"] = rep.count;
        j["undecided"] = rep.undecided;
        if (rep.witnesses) j["witnesses"] = *rep.witnesses;
        j["finite_verification"] = true;
        return j;
    };
    auto* lf = count->add_subcommand("lf", "L_f(N) for the sextic family");
    lf->add_option("--N", bound)->required();
    lf->add_option("--mode", mode)->check(CLI::IsMember({"lemma", "full"}));
    lf->add_option("--range", range)->check(CLI::IsMember({"symmetric", "positive"}));
    lf->callback([&] {
        action = [&] {
            runner.set_command("count lf");
            runner.param("N", std::to_string(bound));
            runner.param("mode", mode);
            runner.param("range", range);
            CountReport rep = count_LF(bound, mode == "lemma" ? LfMode::LemmaFilter : LfMode::FullDecision,
                                       range == "symmetric" ? CountRange::Symmetric : CountRange::Positive,
                                       runner.sweep_options());
            Json j = count_json(rep);
            j["mode"] = mode;
            j["range"] = range;
            runner.emit(j);
        };
    });
    auto add_h_count = [&](const char* name, CountDefinition def) {
        auto* sub = count->add_subcommand(name, std::string(to_string(def)) + "(X) for a polynomial (default H)");
        sub->add_option("--X", bound)->required();
        sub->add_option("--poly", count_poly, "polynomial (default H)");
        sub->callback([&, def, name] {
            action = [&, def, name] {
                runner.set_command(std::string("count ") + name);
                runner.param("X", std::to_string(bound));
                IntPoly F = count_poly.empty() ? sextic_H() : load_poly(count_poly);
                runner.input("poly", F);
                CountReport rep = def == CountDefinition::M_H ? count_MH(bound, F, runner.sweep_options())
                                                              : count_NH(bound, F, runner.sweep_options());
                Json j = count_json(rep);
                j["poly"] = poly_json(F);
                runner.emit(j);
            };
        });
    };
    add_h_count("mh", CountDefinition::M_H);
    add_h_count("nh", CountDefinition::N_H);

    std::uint64_t density_bound = 100;
    std::string density_poly;
    auto* density = app.add_subcommand("density", "rho_f(r^2), local obstructions and the partial product");
    density->add_option("--poly", density_poly, "polynomial or file")->required();
    density->add_option("--B", density_bound, "prime bound");
    density->callback([&] {
        action = [&] {
            runner.set_command("density");
            runner.param("B", std::to_string(density_bound));
            IntPoly f = load_poly(density_poly);
            runner.input("poly", f);
            DensityReport rep = local_obstruction_scan(f, density_bound);
            Json rows = Json::array();
            for (const auto& r : rep.rows)
                rows.push_back({{"r", r.r},
                                {"rho", r.rho},
                                {"obstruction", r.obstruction},
                                {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}});
            Json j;
            j["poly"] = poly_json(f);
            j["bound"] = rep.bound;
            j["rows"] = rows;
            j["obstruction_primes"] = rep.obstruction_primes;
            j["partial_product"] = rep.partial_product.get_str();
            mpf_class approx(rep.partial_product, 128);
            std::ostringstream os;
            os.precision(12);
            os << approx.get_d();
            j["partial_product_approx"] = os.str();
            j["finite_verification"] = true;
            runner.emit(j);
        };
    });

    std::vector<std::string> argv_storage{"recipmono"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump() << '\n';
        return 2;
    }

    try {
        if (action) action();
        return 0;
    } catch (const UsageError& e) {
        err << Json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << Json{{"error", {{"type", "domain"}, {"message", e.what()}}}}.dump() << '\n';
        return 1;
    }
}

} // namespace recipmono
