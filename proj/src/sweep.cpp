// Counting sweeps over integer ranges, parallel within a block and
// checkpointed between blocks.

#include <fstream>
#include <functional>
#include <stdexcept>

#include "json.hpp"
#include "parallel.hpp"
#include "recipmono/families.hpp"

namespace recipmono {

namespace {

constexpr std::int64_t kBlock = 1000;

enum class Outcome : signed char { No = 0, Yes = 1, Undecided = 2 };

struct SweepState {
    std::int64_t completed_through;
    std::int64_t count = 0;
    std::int64_t undecided = 0;
    std::vector<std::int64_t> witnesses;
};

void write_checkpoint(const std::filesystem::path& path, const std::string& label, std::int64_t lo, std::int64_t hi,
                      const SweepState& st, bool keep_witnesses)
{
    nlohmann::json j;
    j["definition"] = label;
    j["range"] = {lo, hi};
    j["completed-through"] = st.completed_through;
    j["partial-counts"] = {{"count", st.count}, {"undecided", st.undecided}};
    if (keep_witnesses) j["witnesses"] = st.witnesses;
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

std::optional<SweepState> read_checkpoint(const std::filesystem::path& path, const std::string& label, std::int64_t lo,
                                          std::int64_t hi, bool keep_witnesses)
{
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        throw std::runtime_error("corrupt checkpoint " + path.string());
    }
    if (j.value("definition", "") != label || j["range"] != nlohmann::json{lo, hi}) return std::nullopt;
    if (keep_witnesses && !j.contains("witnesses")) return std::nullopt;
    SweepState st;
    st.completed_through = j["completed-through"].get<std::int64_t>();
    st.count = j["partial-counts"]["count"].get<std::int64_t>();
    st.undecided = j["partial-counts"]["undecided"].get<std::int64_t>();
    if (keep_witnesses) st.witnesses = j["witnesses"].get<std::vector<std::int64_t>>();
    return st;
}

CountReport run_sweep(CountDefinition def, const std::string& label, std::int64_t bound, std::int64_t lo,
                      std::int64_t hi, const SweepOptions& options, const std::function<Outcome(std::int64_t)>& test)
{
    SweepState st{lo - 1, 0, 0, {}};
    if (options.checkpoint)
        if (auto resumed = read_checkpoint(*options.checkpoint, label, lo, hi, options.keep_witnesses)) st = *resumed;

    while (st.completed_through < hi) {
        const std::int64_t start = st.completed_through + 1;
        const std::int64_t stop = std::min(hi, start + kBlock - 1);
        std::vector<Outcome> results(static_cast<std::size_t>(stop - start + 1));
        detail::parallel_for(results.size(), options.jobs,
                             [&](std::size_t i) { results[i] = test(start + static_cast<std::int64_t>(i)); });
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (results[i] == Outcome::Yes) {
                ++st.count;
                if (options.keep_witnesses) st.witnesses.push_back(start + static_cast<std::int64_t>(i));
            } else if (results[i] == Outcome::Undecided) {
                ++st.undecided;
            }
        }
        st.completed_through = stop;
        if (options.checkpoint) write_checkpoint(*options.checkpoint, label, lo, hi, st, options.keep_witnesses);
    }

    CountReport rep;
    rep.definition = def;
    rep.bound = bound;
    rep.count = st.count;
    rep.undecided = st.undecided;
    if (options.keep_witnesses) rep.witnesses = std::move(st.witnesses);
    return rep;
}

Outcome squarefree_outcome(const Integer& v, const FactorEffort& effort)
{
    switch (is_squarefree_int(v, effort).status) {
    case Squarefreeness::Squarefree: return Outcome::Yes;
    case Squarefreeness::NotSquarefree: return Outcome::No;
    case Squarefreeness::Unknown: return Outcome::Undecided;
    }
    return Outcome::Undecided;
}

} // namespace

CountReport count_LF(std::int64_t N, LfMode mode, CountRange range, const SweepOptions& options)
{
    if (N < 1) throw std::invalid_argument("count_LF: N must be >= 1");
    const std::int64_t lo = range == CountRange::Symmetric ? -N : 1;
    const IntPoly H = sextic_H();
    std::string label = std::string("L_f:") + (mode == LfMode::LemmaFilter ? "lemma" : "full");
    if (mode == LfMode::LemmaFilter) {
        return run_sweep(CountDefinition::L_f, label, N, lo, N, options, [&](std::int64_t a) {
            return squarefree_outcome(evaluate(H, Integer(static_cast<long>(a))), options.effort);
        });
    }
    return run_sweep(CountDefinition::L_f, label, N, lo, N, options, [&](std::int64_t a) {
        switch (is_monogenic(sextic_f(Integer(static_cast<long>(a))), options.effort).verdict) {
        case Verdict::Monogenic: return Outcome::Yes;
        case Verdict::NotMonogenic: return Outcome::No;
        case Verdict::Unknown: return Outcome::Undecided;
        }
        return Outcome::Undecided;
    });
}

CountReport count_MH(std::int64_t X, const IntPoly& F, const SweepOptions& options)
{
    if (X < 1) throw std::invalid_argument("count_MH: X must be >= 1");
    return run_sweep(CountDefinition::M_H, "M_H:" + to_json_array(F), X, 1, X, options, [&](std::int64_t a) {
        return squarefree_outcome(evaluate(F, Integer(static_cast<long>(a))), options.effort);
    });
}

CountReport count_NH(std::int64_t X, const IntPoly& F, const SweepOptions& options)
{
    if (X < 1) throw std::invalid_argument("count_NH: X must be >= 1");
    return run_sweep(CountDefinition::N_H, "N_H:" + to_json_array(F), X, 1, X, options, [&](std::int64_t a) {
        const Integer az(static_cast<long>(a));
        if (!is_prime(az)) return Outcome::No;
        return squarefree_outcome(evaluate(F, az), options.effort);
    });
}

} // namespace recipmono
