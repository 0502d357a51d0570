#include "zdense/cli.hpp"

#include "zdense/error.hpp"
#include "zdense/galois.hpp"
#include "zdense/zariski.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

namespace zdense::cli {

using nlohmann::json;

std::string_view to_string(Mode m)
{
    switch (m) {
    case Mode::Weyl:
        return "weyl";
    case Mode::Adjoint:
        return "adjoint";
    case Mode::GaloisOnly:
        return "galois";
    }
    return "?";
}

Mode parse_mode(std::string_view name)
{
    if (name == "weyl")
        return Mode::Weyl;
    if (name == "adjoint")
        return Mode::Adjoint;
    if (name == "galois")
        return Mode::GaloisOnly;
    throw InvalidArgument("unknown mode '" + std::string(name) + "' (expected weyl, adjoint or galois)");
}

void RunConfig::check() const
{
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw InvalidArgument("epsilon must lie in (0, 1)");
    if (!(word_constant > 0.0))
        throw InvalidArgument("word constant must be positive");
    if (prime_bits_low < 2 || prime_bits_low >= prime_bits_high || prime_bits_high > 62)
        throw InvalidArgument("prime bits must satisfy 2 <= low < high <= 62");
    if (trials == 0)
        throw InvalidArgument("trials must be positive");
}

namespace {

    Integer json_integer(const json& j, const std::string& where)
    {
        if (j.is_number_integer())
            return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
        if (j.is_string()) {
            try {
                return parse_integer(j.get<std::string>());
            } catch (const InvalidArgument& e) {
                throw InvalidArgument(where + ": " + e.what());
            }
        }
        if (j.is_number_float())
            throw InvalidArgument(where + ": not an exact integer (quote large integers as strings)");
        throw InvalidArgument(where + ": expected an integer, got " + std::string(j.type_name()));
    }

    IntPolynomial polynomial_from_json(const json& arr)
    {
        if (!arr.is_array() || arr.empty())
            throw InvalidArgument("field 'poly': expected a nonempty array of coefficients");
        std::vector<Integer> c;
        for (std::size_t i = 0; i < arr.size(); ++i)
            c.push_back(json_integer(arr[i], "poly[" + std::to_string(i) + "]"));
        return IntPolynomial(std::move(c));
    }

    GeneratorSet generators_from_json(const json& doc)
    {
        if (!doc.contains("group") || !doc["group"].is_string())
            throw InvalidArgument("field 'group': expected \"SL\" or \"Sp\"");
        const std::string group = doc["group"].get<std::string>();
        GroupKind kind;
        if (group == "SL")
            kind = GroupKind::SpecialLinear;
        else if (group == "Sp")
            kind = GroupKind::Symplectic;
        else
            throw InvalidArgument("field 'group': expected \"SL\" or \"Sp\", got \"" + group + "\"");

        if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1)
            throw InvalidArgument("field 'dim': expected a positive integer");
        const auto dim = static_cast<std::size_t>(doc["dim"].get<long>());

        if (!doc.contains("generators") || !doc["generators"].is_array())
            throw InvalidArgument("field 'generators': expected an array of matrices");
        std::vector<IntegerMatrix> gens;
        const json& list = doc["generators"];
        for (std::size_t g = 0; g < list.size(); ++g) {
            const std::string where = "generators[" + std::to_string(g) + "]";
            if (!list[g].is_array())
                throw InvalidArgument(where + ": expected an array of rows");
            std::vector<std::vector<Integer>> rows;
            for (std::size_t r = 0; r < list[g].size(); ++r) {
                const json& row = list[g][r];
                const std::string rw = where + "[" + std::to_string(r) + "]";
                if (!row.is_array())
                    throw InvalidArgument(rw + ": expected an array of integers");
                std::vector<Integer> vals;
                for (std::size_t c = 0; c < row.size(); ++c)
                    vals.push_back(json_integer(row[c], rw + "[" + std::to_string(c) + "]"));
                rows.push_back(std::move(vals));
            }
            try {
                gens.push_back(IntegerMatrix::from_rows(rows));
            } catch (const InvalidArgument& e) {
                throw InvalidArgument(where + ": " + e.what());
            }
        }
        return validate(kind, dim, std::move(gens));
    }

    IntPolynomial polynomial_from_plain_text(const std::string& text)
    {
        std::istringstream is(text);
        std::vector<Integer> c;
        std::string token;
        while (is >> token)
            c.push_back(parse_integer(token));
        if (c.empty())
            throw InvalidArgument("input is empty");
        return IntPolynomial(std::move(c));
    }

} // namespace

Input parse_input_text(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw InvalidArgument("input is empty");
    if (text[first] != '{')
        return polynomial_from_plain_text(text);

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
    if (doc.contains("poly"))
        return polynomial_from_json(doc["poly"]);
    return generators_from_json(doc);
}

Input parse_input(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open input file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input_text(buf.str());
}

std::uint64_t trial_seed(std::uint64_t seed, unsigned index)
{
    return index == 0 ? seed : splitmix64(seed ^ splitmix64(index));
}

json strip_timings(json report)
{
    report.erase("timings_ms");
    return report;
}

namespace {

    json coefficients_json(const IntPolynomial& f)
    {
        json arr = json::array();
        for (const auto& c : f.coeffs())
            arr.push_back(c.get_str());
        return arr;
    }

    json witnesses_json(const std::vector<Witness>& ws)
    {
        json arr = json::array();
        for (const auto& w : ws)
            arr.push_back({ { "prime", w.prime }, { "degrees", w.degrees.degrees() } });
        return arr;
    }

    json galois_json(const GaloisVerdict& v)
    {
        json j = {
            { "answer", to_string(v.answer) },
            { "epsilon", v.epsilon },
            { "reason", v.reason },
            { "trials_used", v.trials_used },
            { "witnesses", witnesses_json(v.witnesses) },
        };
        if (!v.trace_polynomial.is_zero()) {
            j["trace_polynomial"] = coefficients_json(v.trace_polynomial);
            j["trace_witnesses"] = witnesses_json(v.trace_witnesses);
        }
        return j;
    }

    struct TrialResult {
        bool positive = false;
        json record;
        json timings;
        std::string headline;
    };

    double ms(double seconds)
    {
        return std::round(seconds * 1e6) / 1e3;
    }

    TrialResult density_trial(const GeneratorSet& gs, const RunConfig& config, std::uint64_t seed,
        const PrimeInterval& primes)
    {
        Rng rng(seed);
        DensityOptions opts;
        opts.word_constant = config.word_constant;
        opts.primes = primes;
        const DensityVerdict v = config.mode == Mode::Weyl ? zariski_dense(gs, config.epsilon, rng, opts)
                                                           : general_zariski_dense(gs, config.epsilon, rng, opts);
        TrialResult t;
        t.positive = v.dense;
        t.timings = json::object();
        json steps = json::array();
        for (const auto& s : v.trail) {
            json step = { { "step", s.step }, { "outcome", s.outcome } };
            if (s.polynomial)
                step["polynomial"] = coefficients_json(*s.polynomial);
            if (s.galois)
                step["galois"] = galois_json(*s.galois);
            if (s.irreducibility)
                step["irreducibility"] = {
                    { "irreducible", s.irreducibility->irreducible },
                    { "algebra_dimension", s.irreducibility->algebra_dimension },
                    { "rounds", s.irreducibility->rounds },
                    { "exact_recheck", s.irreducibility->exact_recheck },
                };
            steps.push_back(std::move(step));
            t.timings[s.step] = ms(s.seconds);
        }
        t.record = {
            { "seed", seed },
            { "dense", v.dense },
            { "certainty", to_string(v.certainty) },
            { "epsilon", v.epsilon },
            { "word_length", v.word_length },
            { "steps", std::move(steps) },
        };
        t.headline = v.trail.empty() ? "" : v.trail.back().step + ": " + v.trail.back().outcome;
        return t;
    }

    TrialResult galois_trial(const IntPolynomial& f, const RunConfig& config, std::uint64_t seed,
        const PrimeInterval& primes)
    {
        Rng rng(seed);
        const bool hyper = f.is_monic() && f.degree() >= 2 && f.degree() % 2 == 0 && is_reciprocal(f);
        const auto start = std::chrono::steady_clock::now();
        const GaloisVerdict v = hyper ? is_hyperoctahedral(f, config.epsilon, rng, primes)
                                      : is_sn(f, config.epsilon, rng, primes);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        TrialResult t;
        t.positive = v.confirmed();
        t.record = {
            { "seed", seed },
            { "test", hyper ? "hyperoctahedral" : "symmetric" },
            { "galois", galois_json(v) },
        };
        t.timings = { { hyper ? "is_hyperoctahedral" : "is_sn", ms(secs) } };
        t.headline = std::string(to_string(v.answer)) + ": " + v.reason;
        return t;
    }

} // namespace

RunOutcome run(const RunConfig& config)
{
    RunOutcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        config.check();
        const Input input = parse_input(config.input_path);
        const PrimeInterval primes { std::uint64_t { 1 } << config.prime_bits_low,
            std::uint64_t { 1 } << config.prime_bits_high };

        json input_json;
        if (const auto* gs = std::get_if<GeneratorSet>(&input)) {
            if (config.mode == Mode::GaloisOnly)
                throw InvalidArgument("mode 'galois' expects a polynomial input, got generators");
            input_json = {
                { "kind", "generators" },
                { "group", to_string(gs->kind()) },
                { "dim", gs->dim() },
                { "generator_count", gs->generators().size() },
                { "norm_bound", gs->norm_bound().get_str() },
            };
        } else {
            if (config.mode != Mode::GaloisOnly)
                throw InvalidArgument("mode '" + std::string(to_string(config.mode))
                    + "' expects a generator set, got a polynomial");
            input_json = { { "kind", "polynomial" }, { "poly", coefficients_json(std::get<IntPolynomial>(input)) } };
        }

        // Trials are independent given their seeds; results are merged by index.
        std::vector<std::future<TrialResult>> pending;
        for (unsigned i = 0; i < config.trials; ++i) {
            const std::uint64_t seed = trial_seed(config.seed, i);
            pending.push_back(std::async(std::launch::async, [&, seed] {
                if (const auto* gs = std::get_if<GeneratorSet>(&input))
                    return density_trial(*gs, config, seed, primes);
                return galois_trial(std::get<IntPolynomial>(input), config, seed, primes);
            }));
        }
        std::vector<TrialResult> results;
        for (auto& p : pending)
            results.push_back(p.get());

        // One certified YES settles it; k independent NOs have error eps^k.
        std::optional<unsigned> decided;
        for (unsigned i = 0; i < results.size() && !decided; ++i)
            if (results[i].positive)
                decided = i;
        const bool positive = decided.has_value();
        const double honored = positive ? 0.0 : std::pow(config.epsilon, static_cast<double>(config.trials));

        json trials = json::array();
        json timings = json::object();
        for (unsigned i = 0; i < results.size(); ++i) {
            trials.push_back(std::move(results[i].record));
            timings["trial_" + std::to_string(i)] = std::move(results[i].timings);
        }
        timings["total"] = ms(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());

        out.report = {
            { "mode", to_string(config.mode) },
            { "input", std::move(input_json) },
            { "config",
                {
                    { "epsilon", config.epsilon },
                    { "seed", config.seed },
                    { "word_constant", config.word_constant },
                    { "prime_bits", { config.prime_bits_low, config.prime_bits_high } },
                    { "trials", config.trials },
                } },
            { "verdict",
                {
                    { "positive", positive },
                    { "certainty", positive ? "Certain" : "MonteCarlo" },
                    { "epsilon_honored", honored },
                    { "decided_by_trial", positive ? json(*decided) : json(nullptr) },
                } },
            { "trials", std::move(trials) },
            { "timings_ms", std::move(timings) },
        };
        out.exit_code = positive ? kDense : kNotDense;

        std::ostringstream summary;
        const unsigned shown = decided.value_or(0);
        if (config.mode == Mode::GaloisOnly)
            summary << (positive ? "generic Galois group (certain)" : "not shown generic");
        else
            summary << (positive ? "Zariski dense (certain)" : "not Zariski dense");
        if (!positive)
            summary << ", error probability <= " << honored;
        summary << " [" << config.trials << " trial" << (config.trials == 1 ? "" : "s") << "; trial " << shown
                << ": " << results[shown].headline << "]";
        out.summary = summary.str();
    } catch (const std::exception& e) {
        out.exit_code = kInputError;
        out.report = json();
        out.summary = std::string("error: ") + e.what();
    }
    return out;
}

} // namespace zdense::cli
