// Command-line front end.  Exit codes: 0 success, 1 mathematical failure
// (invalid set, failing property), 2 usage or input error.

#include "cubcoh/cohomology.hpp"
#include "cubcoh/complex.hpp"
#include "cubcoh/core.hpp"
#include "cubcoh/io.hpp"
#include "cubcoh/propcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace
{

using namespace cubcoh;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct Source
{
    std::string file;
    std::string builtin;

    void attach(CLI::App* app)
    {
        app->add_option("file", file, "Precubical set document");
        app->add_option("--builtin", builtin, "Built-in set: point, interval, circle, torus, torus3, cube<N>");
    }

    PrecubicalSet load() const
    {
        if (!file.empty() && !builtin.empty())
            throw Error("give either a file or --builtin, not both");
        if (!builtin.empty())
            return cubcoh::builtin(builtin);
        if (file.empty())
            throw Error("no input: give a file or --builtin NAME");
        return read_document(file);
    }
};

std::string cochain_text(PrecubicalSet const& x, Cochain const& c)
{
    std::string out = std::to_string(c.dim) + "@";
    bool first = true;
    for (std::size_t k = 0; k < c.values.size(); ++k)
    {
        if (c.values[k].is_zero())
            continue;
        out += (first ? "" : ",") + x.label({static_cast<std::uint32_t>(c.dim), static_cast<std::uint32_t>(k)}) + ":"
               + c.values[k].str();
        first = false;
    }
    return out;
}

void print_groups(std::ostream& os, PrecubicalSet const& x, std::vector<CohomologyGroup> const& groups)
{
    for (auto const& g : groups)
        os << "H^" << g.dim << " = " << g.str() << "\n";
    bool header = false;
    for (auto const& g : groups)
        for (std::size_t k = 0; k < g.num_generators(); ++k)
        {
            if (!header)
                os << "generators:\n";
            header = true;
            os << "  " << generator_name(g.dim, k);
            if (g.ring.is_integers() && !g.order(k).is_zero())
                os << " (order " << g.order(k) << ")";
            os << " = " << cochain_text(x, g.generators[k]) << "\n";
        }
}

CoeffRing group_ring(std::string const& spec)
{
    CoeffRing const ring = CoeffRing::parse(spec);
    if (!ring.is_integers() && !ring.is_prime_field())
        throw Error("group computations need Z or Z/p with p prime; " + spec
                    + " has a composite modulus (use 'cup' or 'check' for cochain-level work)");
    return ring;
}

int run_validate(Source const& src)
{
    PrecubicalSet const x = src.load();
    auto const report = validate(x);
    if (report.empty())
    {
        std::cout << "valid\n";
        return kOk;
    }
    for (auto const& v : report)
        std::cout << v.describe(x) << "\n";
    return kMathFailure;
}

int run_cohomology(Source const& src, std::string const& coeff, bool json)
{
    CoeffRing const ring = group_ring(coeff);
    PrecubicalSet const x = src.load();
    auto const groups = cohomology_groups(x, ring);
    if (json)
        std::cout << groups_json(x, groups).dump(2) << "\n";
    else
        print_groups(std::cout, x, groups);
    return kOk;
}

int run_cup(Source const& src, std::string const& coeff, std::string const& p_spec, std::string const& q_spec, bool json)
{
    CoeffRing const ring = CoeffRing::parse(coeff);
    PrecubicalSet const x = src.load();
    require_valid(x);
    Cochain const phi = parse_cochain_spec(x, p_spec, ring);
    Cochain const psi = parse_cochain_spec(x, q_spec, ring);
    Cochain const prod = cup(x, phi, psi);
    if (json)
    {
        nlohmann::json j;
        j["coefficients"] = ring.name();
        j["degree"] = prod.dim;
        j["cochain"] = cochain_json(x, prod);
        std::cout << j.dump(2) << "\n";
    }
    else
    {
        std::cout << cochain_text(x, prod) << "\n";
    }
    return kOk;
}

int run_ring_table(Source const& src, std::string const& coeff, bool json)
{
    CoeffRing const ring = group_ring(coeff);
    PrecubicalSet const x = src.load();
    RingTable const table = ring_table(x, ring);
    if (json)
    {
        std::cout << ring_table_json(x, table).dump(2) << "\n";
        return kOk;
    }
    std::cout << "coefficients: " << ring.name() << "\n";
    print_groups(std::cout, x, table.groups);
    if (!table.groups.empty())
        std::cout << "unit = " << class_string(table.groups[0], table.unit) << "\n";
    std::cout << "products:\n";
    for (std::size_t p = 0; p < table.groups.size(); ++p)
        for (std::size_t q = 0; p + q < table.groups.size(); ++q)
            for (std::size_t i = 0; i < table.groups[p].num_generators(); ++i)
                for (std::size_t j = 0; j < table.groups[q].num_generators(); ++j)
                    std::cout << "  " << generator_name(p, i) << " ^ " << generator_name(q, j) << " = "
                              << class_string(table.groups[p + q], table.product(p, i, q, j)) << "\n";
    return kOk;
}

struct CheckOptions
{
    std::string props = "all";
    std::size_t trials = 100;
    std::optional<std::uint64_t> seed;
    std::string coeff = "Z";
    bool json = false;
    GenConfig gen;
};

nlohmann::json report_json(PropertyReport const& r)
{
    nlohmann::json j;
    j["property"] = r.name;
    j["coefficients"] = r.ring;
    j["trials"] = r.trials;
    j["vacuous"] = r.vacuous;
    j["failures"] = r.failures.size();
    j["report_only"] = r.report_only;
    j["passed"] = r.passed();
    nlohmann::json cex = nlohmann::json::array();
    for (auto const& f : r.failures)
        cex.push_back({{"trial", f.trial}, {"seed", f.seed}, {"digest", f.digest}, {"message", f.message},
                       {"instance", f.instance}});
    j["counterexamples"] = cex;
    return j;
}

int run_check(Source const& src, CheckOptions opts)
{
    opts.gen.ring = CoeffRing::parse(opts.coeff);
    if (opts.seed)
    {
        opts.gen.seed = *opts.seed;
    }
    else if (char const* env = std::getenv("CUBCOH_SEED"))
    {
        try
        {
            opts.gen.seed = std::stoull(env);
        }
        catch (std::exception const&)
        {
            throw Error(std::string("CUBCOH_SEED is not an unsigned integer: ") + env);
        }
    }

    std::optional<PrecubicalSet> fixed;
    if (!src.file.empty() || !src.builtin.empty())
        fixed = src.load();

    std::vector<std::string> names;
    if (opts.props == "all")
    {
        names = property_names();
        for (auto const& r : reporter_names())
            if (r != "anticommutativity" || opts.gen.ring.is_integers() || opts.gen.ring.is_prime_field())
                names.push_back(r);
    }
    else
    {
        std::stringstream ss(opts.props);
        for (std::string item; std::getline(ss, item, ',');)
            if (!item.empty())
                names.push_back(item);
    }

    std::vector<PropertyReport> reports;
    for (auto const& name : names)
        reports.push_back(check(name, opts.gen, opts.trials, fixed ? &*fixed : nullptr));

    bool ok = true;
    for (auto const& r : reports)
        ok = ok && r.passed();

    if (opts.json)
    {
        nlohmann::json j;
        j["seed"] = opts.gen.seed;
        j["reports"] = nlohmann::json::array();
        for (auto const& r : reports)
            j["reports"].push_back(report_json(r));
        std::cout << j.dump(2) << "\n";
    }
    else
    {
        std::cout << "seed " << opts.gen.seed << ", coefficients " << opts.gen.ring.name() << "\n";
        for (auto const& r : reports)
        {
            std::cout << (r.report_only ? "REPORT " : (r.passed() ? "PASS   " : "FAIL   ")) << r.name
                      << ": trials=" << r.trials << " vacuous=" << r.vacuous;
            if (r.report_only)
            {
                std::size_t const checked = r.trials - r.vacuous;
                std::size_t const agree = checked - r.failures.size();
                std::cout << " agreement=" << agree << "/" << checked;
            }
            else
            {
                std::cout << " failures=" << r.failures.size();
            }
            std::cout << " (" << static_cast<long long>(r.elapsed_ms) << " ms)\n";
            if (!r.report_only)
                for (auto const& f : r.failures)
                    std::cout << "  trial " << f.trial << " seed " << f.seed << " digest " << f.digest << ": "
                              << f.message << "\n"
                              << f.instance;
        }
    }
    return ok ? kOk : kMathFailure;
}

int run_export(Source const& src)
{
    std::cout << serialize_document(src.load());
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology rings of finite precubical sets"};
    app.require_subcommand(1);

    Source validate_src, coh_src, cup_src, table_src, check_src, export_src;
    std::string coeff = "Z";
    bool json = false;
    std::string p_spec, q_spec;
    CheckOptions check_opts;

    auto* validate_cmd = app.add_subcommand("validate", "Check the cubical identities");
    validate_src.attach(validate_cmd);

    auto* coh_cmd = app.add_subcommand("cohomology", "Cohomology groups with generator cocycles");
    coh_src.attach(coh_cmd);
    coh_cmd->add_option("--coeff", coeff, "Z or Z/p")->capture_default_str();
    coh_cmd->add_flag("--json", json);

    auto* cup_cmd = app.add_subcommand("cup", "Cup product of two explicit cochains");
    cup_src.attach(cup_cmd);
    cup_cmd->add_option("--coeff", coeff, "Z or Z/m")->capture_default_str();
    cup_cmd->add_option("--p-cochain", p_spec, "<dim>@label:value,...")->required();
    cup_cmd->add_option("--q-cochain", q_spec, "<dim>@label:value,...")->required();
    cup_cmd->add_flag("--json", json);

    auto* table_cmd = app.add_subcommand("ring-table", "Generators by degree and the full product table");
    table_src.attach(table_cmd);
    table_cmd->add_option("--coeff", coeff, "Z or Z/p")->capture_default_str();
    table_cmd->add_flag("--json", json);

    auto* check_cmd = app.add_subcommand("check", "Run the property suite on random or given instances");
    check_src.attach(check_cmd);
    check_cmd->add_option("--props", check_opts.props, "Comma-separated property names or 'all'")->capture_default_str();
    check_cmd->add_option("--trials", check_opts.trials)->capture_default_str()->check(CLI::PositiveNumber);
    check_cmd->add_option("--seed", check_opts.seed, "Base seed (default: $CUBCOH_SEED or 0)");
    check_cmd->add_option("--coeff", check_opts.coeff, "Z or Z/m")->capture_default_str();
    check_cmd->add_option("--max-dim", check_opts.gen.max_dim)->capture_default_str();
    check_cmd->add_option("--vertices", check_opts.gen.vertices)->capture_default_str();
    check_cmd->add_option("--edges", check_opts.gen.edges)->capture_default_str();
    check_cmd->add_option("--factors", check_opts.gen.factors)->capture_default_str();
    check_cmd->add_option("--fraction", check_opts.gen.fraction)->capture_default_str();
    check_cmd->add_flag("--json", check_opts.json);

    auto* export_cmd = app.add_subcommand("export", "Write a set in canonical document form");
    export_src.attach(export_cmd);

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try
    {
        if (*validate_cmd)
            return run_validate(validate_src);
        if (*coh_cmd)
            return run_cohomology(coh_src, coeff, json);
        if (*cup_cmd)
            return run_cup(cup_src, coeff, p_spec, q_spec, json);
        if (*table_cmd)
            return run_ring_table(table_src, coeff, json);
        if (*check_cmd)
            return run_check(check_src, check_opts);
        if (*export_cmd)
            return run_export(export_src);
    }
    catch (Error const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
