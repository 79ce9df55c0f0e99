#include "jagged/cli.hpp"

#include "jagged/acceptance.hpp"
#include "jagged/counting.hpp"
#include "jagged/families.hpp"
#include "jagged/genfun.hpp"
#include "jagged/identities.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace jagged::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string family = "01";
    long weight = -1;
    long length = -1;
    long upto = -1;
    long order = -1;
    long r = -1;
    long s = -1;
    std::string modulus;
    long min_index = 0;
    std::string name;
    std::string format = "text";
    long zmax = -1;
    std::string out_path;
    std::string source = "closed";
    bool staircase = false;
};

// What a subcommand produced: the JSON document is the source of truth and the
// text rendering is derived from the same values.
struct Outcome {
    int status = kExitOk;
    json doc;
    std::string text;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message)
{
    if (!ok) throw UsageError(message);
}

json series_json(const IntSeries& s)
{
    json a = json::array();
    for (const auto& c : s.coeffs()) a.push_back(c.get_str());
    return a;
}

std::string series_text(const IntSeries& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.order(); ++i) out += (i ? " " : "") + s[i].get_str();
    return out;
}

FamilySpec family_or_usage(const std::string& text)
{
    try {
        return parse_family(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Outcome cmd_enumerate(const Options& o)
{
    require(o.weight >= 0, "enumerate needs --weight >= 0");
    const auto f = family_or_usage(o.family);
    const auto parts = o.length >= 0 ? enumerate(f, o.weight, static_cast<std::size_t>(o.length))
                                     : enumerate(f, o.weight);
    Outcome r;
    r.doc = {{"family", f.name()}, {"weight", o.weight}, {"count", parts.size()}};
    r.doc["length"] = o.length >= 0 ? json(o.length) : json(nullptr);
    json list = json::array();
    for (const auto& p : parts) {
        list.push_back(p.parts);
        r.text += to_string(p.parts) + "\n";
    }
    r.doc["partitions"] = std::move(list);
    return r;
}

Outcome cmd_count(const Options& o)
{
    Outcome r;
    if (o.weight >= 0) {
        require(o.weight >= 1, "count --weight needs n >= 1");
        const auto j = j_by_recurrence(static_cast<std::size_t>(o.weight));
        const auto e = j_by_squares(o.weight);
        r.doc = {{"n", o.weight}, {"j", j[o.weight].get_str()}};
        r.text = "j(" + std::to_string(o.weight) + ") = " + j[o.weight].get_str() + "\n";
        json terms = json::array();
        for (const auto& t : e.terms) {
            terms.push_back({{"parts", t.parts},
                             {"sign", t.sign},
                             {"representations", t.representations.get_str()},
                             {"contribution", t.contribution.get_str()}});
            r.text += "  p = " + std::to_string(t.parts) + ": " + (t.sign < 0 ? "-" : "+") + "2^" +
                      std::to_string(t.parts) + " * " + t.representations.get_str() + " = " +
                      t.contribution.get_str() + "\n";
        }
        r.doc["squares"] = std::move(terms);
        return r;
    }
    require(o.upto >= 0, "count needs --upto N or --weight n");
    if (o.length >= 0) {
        const auto t = jk_tables(static_cast<std::size_t>(o.length), static_cast<std::size_t>(o.upto));
        json values = json::array();
        for (long n = 0; n <= o.upto; ++n) {
            const auto v = t.j.at(o.length, n);
            values.push_back(v.get_str());
            r.text += std::to_string(n) + " " + v.get_str() + "\n";
        }
        r.doc = {{"length", o.length}, {"upto", o.upto}, {"j", std::move(values)}};
        return r;
    }
    const auto j = j_by_recurrence(static_cast<std::size_t>(o.upto));
    json values = json::array();
    for (long n = 0; n <= o.upto; ++n) {
        values.push_back(j[n].get_str());
        r.text += std::to_string(n) + " " + j[n].get_str() + "\n";
    }
    r.doc = {{"upto", o.upto}, {"j", std::move(values)}};
    return r;
}

Outcome cmd_genfun(const Options& o)
{
    const std::size_t M = o.zmax >= 0 ? static_cast<std::size_t>(o.zmax) : 8;
    const std::size_t N = o.order >= 0 ? static_cast<std::size_t>(o.order) : 16;
    BiSeries x;
    std::string label;
    if (o.source == "multisum") {
        require(!o.name.empty(), "genfun --source multisum needs --name");
        try {
            x = multisum(parse_multisum(o.name), M, N);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        label = o.name;
    } else {
        const auto f = family_or_usage(o.family);
        label = f.name();
        // Negative staircase weights eat low coefficients, so compute that many more.
        long lowest = 0;
        for (std::size_t m = 0; o.staircase && m <= M; ++m) lowest = std::min(lowest, f.staircase().weight(m));
        const auto extra = static_cast<std::size_t>(-lowest);
        if (o.source == "closed") {
            try {
                x = closed_form(f.name(), M, N + extra);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        } else if (o.source == "enumeration") {
            x = enumeration_counts(f, M, N + extra);
        } else {
            const std::map<std::string, QDiffSystem (*)()> systems = {
                {"01", system_01}, {"02", system_02}, {"012", system_012}, {"001", system_001}};
            const auto it = systems.find(f.name());
            require(it != systems.end(), "no q-difference system for family " + f.name());
            x = qdiff_solve(it->second(), M, N + extra).at("J");
        }
        if (o.staircase) x = staircase_transform(x, f.staircase()).truncated(M, N);
    }
    Outcome r;
    json rows = json::array();
    for (std::size_t m = 0; m <= x.z_max(); ++m) {
        rows.push_back(series_json(x.row(m)));
        r.text += "z^" + std::to_string(m) + ": " + series_text(x.row(m)) + "\n";
    }
    r.doc = {{"series", label},
             {"source", o.source},
             {"staircase", o.staircase},
             {"zmax", x.z_max()},
             {"order", x.q_order()},
             {"rows", std::move(rows)}};
    return r;
}

Outcome cmd_slice(const Options& o)
{
    require(o.r >= 1, "slice needs --r >= 1");
    require(o.s >= 0 && o.s < o.r, "slice needs 0 <= --s < --r");
    const std::size_t N = o.order >= 0 ? static_cast<std::size_t>(o.order) : 20;
    const auto r_ = static_cast<std::size_t>(o.r), s_ = static_cast<std::size_t>(o.s);
    const auto sl = slice(jagged_series(r_ * N + s_), r_, s_);
    Outcome r;
    r.doc = {{"r", o.r}, {"s", o.s}, {"order", N}, {"coefficients", series_json(sl)}};
    r.text = series_text(sl) + "\n";
    return r;
}

Outcome cmd_congruence(const Options& o)
{
    require(o.r >= 1, "congruence needs --r >= 1");
    require(o.s >= 0 && o.s < o.r, "congruence needs 0 <= --s < --r");
    require(o.upto >= 0, "congruence needs --upto >= 0");
    Outcome r;
    Integer modulus;
    if (!o.modulus.empty()) {
        require(modulus.set_str(o.modulus, 10) == 0 && sgn(modulus) > 0, "--modulus must be a positive integer");
    } else {
        require(o.r >= 2 && o.s >= 1, "prediction needs 1 <= --s < --r; pass --modulus to check a claim");
        const auto p = congruence_predict(o.r, o.s);
        modulus = p.modulus;
        r.doc["prediction"] = {{"p_prime", p.p_prime},
                               {"compositions", p.compositions},
                               {"orbit_gcd", p.orbit_gcd},
                               {"upgraded", p.upgraded},
                               {"modulus", std::to_string(p.modulus)}};
        r.text += "predicted modulus " + std::to_string(p.modulus) + " (p' = " + std::to_string(p.p_prime) +
                  ", c = " + std::to_string(p.compositions) + ")\n";
    }
    const auto rep = congruence_verify(o.r, o.s, modulus, o.upto, o.min_index);
    r.doc["claim"] = rep.claim;
    r.doc["range"] = {rep.min_index, rep.upto};
    r.doc["status"] = rep.passed ? "pass" : "fail";
    r.doc["counterexample"] = rep.counterexample
                                  ? json{{"n", rep.counterexample->first}, {"j", rep.counterexample->second.get_str()}}
                                  : json(nullptr);
    r.text += (rep.passed ? "PASS " : "FAIL ") + rep.claim + " for indices in [" + std::to_string(rep.min_index) +
              ", " + std::to_string(rep.upto) + "]";
    if (rep.counterexample)
        r.text += ": j(" + std::to_string(rep.counterexample->first) + ") = " + rep.counterexample->second.get_str();
    r.text += "\n";
    r.status = rep.passed ? kExitOk : kExitVerificationFailed;
    return r;
}

json identity_json(const IdentityReport& rep)
{
    json doc = {{"name", rep.name},
                {"paper_ref", rep.paper_ref},
                {"order", rep.order},
                {"status", rep.passed ? "pass" : "fail"}};
    doc["mismatch"] = rep.mismatch ? json{{"exponent", rep.mismatch->exponent},
                                          {"lhs", rep.mismatch->lhs.get_str()},
                                          {"rhs", rep.mismatch->rhs.get_str()}}
                                   : json(nullptr);
    if (!rep.error.empty()) doc["error"] = rep.error;
    return doc;
}

std::string identity_text(const IdentityReport& rep)
{
    std::string line = (rep.passed ? "PASS " : "FAIL ") + rep.name + " (order " + std::to_string(rep.order) + ")";
    if (rep.mismatch)
        line += " at q^" + std::to_string(rep.mismatch->exponent) + ": lhs " + rep.mismatch->lhs.get_str() +
                ", rhs " + rep.mismatch->rhs.get_str();
    if (!rep.error.empty()) line += ": " + rep.error;
    return line + "\n";
}

Outcome cmd_identity(const Options& o)
{
    require(!o.name.empty(), "identity needs --name (an entry, a group, or 'all')");
    const std::size_t order = o.order >= 0 ? static_cast<std::size_t>(o.order) : 0;
    std::vector<IdentityReport> reports;
    const bool all = o.name == "all";
    if (all) {
        reports = verify_all(order);
    } else {
        try {
            find_identities(o.name);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        reports = verify(o.name, order);
    }
    Outcome r;
    bool passed = true;
    json entries = json::array();
    for (const auto& rep : reports) {
        passed = passed && rep.passed;
        entries.push_back(identity_json(rep));
        r.text += identity_text(rep);
    }
    if (!all && reports.size() == 1 && reports[0].name == o.name)
        r.doc = entries[0];
    else
        r.doc = {{"name", o.name}, {"status", passed ? "pass" : "fail"}, {"entries", std::move(entries)}};
    r.status = passed ? kExitOk : kExitVerificationFailed;
    return r;
}

Outcome cmd_suite(const Options&)
{
    Outcome r;
    bool passed = true;
    json criteria = json::array();
    for (const auto& c : run_acceptance()) {
        passed = passed && c.passed;
        criteria.push_back({{"id", c.id},
                            {"title", c.title},
                            {"status", c.passed ? "pass" : "fail"},
                            {"detail", c.detail},
                            {"seconds", c.seconds}});
        std::ostringstream line;
        line << (c.passed ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << "  " << c.detail << "\n";
        r.text += line.str();
    }
    r.doc = {{"status", passed ? "pass" : "fail"}, {"criteria", std::move(criteria)}};
    r.status = passed ? kExitOk : kExitVerificationFailed;
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Jagged partitions: enumeration, counting, generating functions and identity checks", "jagged"};
    app.require_subcommand(1);
    Options o;

    const auto format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out_path, "Also write the JSON report to this file");
    };

    auto* en = app.add_subcommand("enumerate", "List jagged partitions of a weight");
    en->add_option("--family", o.family, "01, 02, 012, 001, 0p1:p or a constraint string like d1:1,d2:0;tail=1");
    en->add_option("--weight", o.weight, "Weight n")->required()->check(CLI::NonNegativeNumber);
    en->add_option("--length", o.length, "Restrict to this length")->check(CLI::NonNegativeNumber);
    format_opt(en);

    auto* co = app.add_subcommand("count", "Count 01-partitions");
    co->add_option("--upto", o.upto, "Tabulate j(n) for n <= N")->check(CLI::NonNegativeNumber);
    co->add_option("--weight", o.weight, "Single j(n) with its sum-of-squares expansion")
        ->check(CLI::PositiveNumber);
    co->add_option("--length", o.length, "Tabulate j(m, n) for this length instead")->check(CLI::NonNegativeNumber);
    format_opt(co);

    auto* gf = app.add_subcommand("genfun", "Length-graded generating function table");
    gf->add_option("--family", o.family, "01, 02, 012 or 001");
    gf->add_option("--source", o.source, "How to compute it")
        ->check(CLI::IsMember({"closed", "enumeration", "system", "multisum"}));
    gf->add_option("--name", o.name, "Multi-sum name when --source multisum");
    gf->add_flag("--staircase", o.staircase, "Shift row m by the family's staircase weight");
    gf->add_option("--zmax", o.zmax, "Largest z-degree (default 8)")->check(CLI::NonNegativeNumber);
    gf->add_option("--order", o.order, "Number of q coefficients (default 16)")->check(CLI::NonNegativeNumber);
    format_opt(gf);

    auto* sl = app.add_subcommand("slice", "Coefficients of sum_n j(rn+s) q^n");
    sl->add_option("--r", o.r, "Modulus r")->required();
    sl->add_option("--s", o.s, "Residue s")->required();
    sl->add_option("--order", o.order, "Number of coefficients (default 20)")->check(CLI::NonNegativeNumber);
    format_opt(sl);

    auto* cg = app.add_subcommand("congruence", "Check (or predict and check) modulus | j(rn+s)");
    cg->add_option("--r", o.r, "Modulus r")->required();
    cg->add_option("--s", o.s, "Residue s")->required();
    cg->add_option("--modulus", o.modulus, "Claimed modulus; predicted when omitted");
    cg->add_option("--upto", o.upto, "Largest index rn+s to check")->required();
    cg->add_option("--min-index", o.min_index, "Smallest index to check")->check(CLI::NonNegativeNumber);
    format_opt(cg);

    auto* id = app.add_subcommand("identity", "Verify registered series identities");
    id->add_option("--name", o.name, "Entry name, group prefix, or 'all'")->required();
    id->add_option("--order", o.order, "Coefficients to compare (default: the entry's own)")
        ->check(CLI::NonNegativeNumber);
    format_opt(id);

    auto* su = app.add_subcommand("suite", "Run the acceptance checks");
    format_opt(su);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::map<CLI::App*, Outcome (*)(const Options&)> handlers = {
        {en, cmd_enumerate}, {co, cmd_count},    {gf, cmd_genfun}, {sl, cmd_slice},
        {cg, cmd_congruence}, {id, cmd_identity}, {su, cmd_suite}};

    Outcome result;
    try {
        for (const auto& [sub, handler] : handlers)
            if (sub->parsed()) result = handler(o);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }

    if (o.format == "json")
        out << result.doc.dump() << "\n";
    else
        out << result.text;
    if (!o.out_path.empty()) {
        std::ofstream file(o.out_path);
        if (!file) {
            err << "error: cannot write " << o.out_path << "\n";
            return kExitUsage;
        }
        file << result.doc.dump(2) << "\n";
    }
    return result.status;
}

}  // namespace jagged::cli
