#include "qrcft/cli.hpp"

#include "qrcft/arith.hpp"
#include "qrcft/classfield.hpp"
#include "qrcft/error.hpp"
#include "qrcft/groups.hpp"
#include "qrcft/splitting.hpp"
#include "qrcft/suites.hpp"
#include "qrcft/symbols.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace qrcft::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

// Raised for flag combinations CLI11 cannot express; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    Json inputs = Json::object();
    Json result = Json::object();
    Json trace = nullptr;
    std::string text;
    int exit_code = kExitOk;
};

Json record(const std::string& command, const Output& o)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = o.inputs;
    j["result"] = o.result;
    j["trace"] = o.trace;
    return j;
}

std::vector<std::int64_t> parse_residue_list(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: '" + text + "'");
        }
        if (pos != item.size())
            throw UsageError("not an integer list: '" + text + "'");
        out.push_back(v);
    }
    return out;
}

std::int64_t parse_int(const std::string& text)
{
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + text + "'");
    }
    if (pos != text.size())
        throw UsageError("not an integer: '" + text + "'");
    return v;
}

std::string signed_str(int v)
{
    return v > 0 ? "+1" : (v < 0 ? "-1" : "0");
}

Element unit_or_fail(const FiniteGroup& g, std::int64_t m, std::int64_t r)
{
    const auto e = g.find_label(mod(r, m));
    if (!e)
        fail(Errc::not_coprime, std::to_string(r) + " is not coprime to " + std::to_string(m));
    return *e;
}

// ---- symbol -------------------------------------------------------------

struct SymbolArgs {
    std::string kind;
    std::int64_t a = 0;
    std::int64_t n = 0;
    std::string method;
    std::string half_system;
};

Output cmd_symbol(const SymbolArgs& args)
{
    Output o;
    o.inputs["kind"] = args.kind;
    o.inputs["a"] = args.a;
    o.inputs["n"] = args.n;
    if (args.kind != "legendre" && !args.method.empty())
        throw UsageError("--method applies to --kind legendre only");
    if (!args.half_system.empty() && args.method != "gauss-lemma")
        throw UsageError("--half-system requires --method gauss-lemma");

    std::ostringstream text;
    int value = 0;
    if (args.kind == "legendre") {
        const std::string method = args.method.empty() ? "euler" : args.method;
        o.inputs["method"] = method;
        if (method == "brute") {
            value = legendre_brute(args.a, args.n);
        } else if (method == "euler") {
            value = legendre_euler(args.a, args.n);
        } else {
            const HalfSystem hs = args.half_system.empty()
                                      ? default_half_system(args.n)
                                      : HalfSystem::make(args.n, parse_residue_list(args.half_system));
            o.inputs["half_system"] = hs.elements();
            const auto res = gauss_lemma(args.a, args.n, hs);
            value = res.value;
            Json rows = Json::array();
            text << "  j  a_j  a*a_j mod p  s_j  pi(j)\n";
            for (const auto& row : res.trace.rows) {
                rows.push_back({{"j", row.j + 1},
                                {"a_j", hs.elements()[row.j]},
                                {"product", row.product},
                                {"sign", row.sign},
                                {"target", row.target + 1}});
                text << std::setw(3) << row.j + 1 << std::setw(5) << hs.elements()[row.j] << std::setw(13)
                     << row.product << std::setw(5) << (row.sign > 0 ? "+" : "-") << std::setw(7) << row.target + 1
                     << "\n";
            }
            o.trace = {{"half_system", hs.elements()}, {"rows", rows}, {"sign_product", res.trace.sign_product}};
        }
    } else if (args.kind == "jacobi") {
        value = jacobi(args.a, args.n);
    } else {
        value = kronecker(args.a, args.n);
    }
    o.result["value"] = value;
    o.text = "(" + std::to_string(args.a) + "/" + std::to_string(args.n) + ") = " + signed_str(value) + "\n" +
             text.str();
    return o;
}

// ---- transfer -----------------------------------------------------------

struct TransferArgs {
    std::int64_t modulus = 0;
    std::string subgroup;
    std::int64_t element = 0;
};

Output cmd_transfer(const TransferArgs& args)
{
    Output o;
    o.inputs["mod"] = args.modulus;
    o.inputs["subgroup"] = parse_residue_list(args.subgroup);
    o.inputs["element"] = args.element;

    const std::int64_t m = args.modulus;
    const GroupPtr g = group_from_unit_residues(m);
    std::vector<Element> gens;
    for (const auto r : parse_residue_list(args.subgroup))
        gens.push_back(unit_or_fail(*g, m, r));
    const Subgroup u = subgroup_generated(g, gens);
    const auto decomposition = coset_decomposition(u);
    const Element x = unit_or_fail(*g, m, args.element);
    const TransferResult tr = transfer(decomposition, x);

    const std::int64_t value = g->label(tr.value);
    const std::int64_t value_signed = value > m / 2 ? value - m : value;
    std::vector<std::int64_t> members;
    for (const Element e : u.members())
        members.push_back(g->label(e));

    o.result["value"] = value;
    o.result["value_signed"] = value_signed;
    o.result["subgroup"] = members;
    o.result["index"] = u.index();

    std::ostringstream text;
    text << "V(" << mod(args.element, m) << ") = " << value;
    if (value_signed != value)
        text << " (= " << value_signed << " mod " << m << ")";
    text << "\nU = {";
    for (std::size_t i = 0; i < members.size(); ++i)
        text << (i ? ", " : "") << members[i];
    text << "}, (G:U) = " << u.index() << "\n   r_i   r_j   u_j\n";
    Json rows = Json::array();
    for (const auto& c : tr.contributions) {
        const auto& reps = decomposition.reps();
        rows.push_back({{"r_i", g->label(reps[c.i])}, {"r_j", g->label(reps[c.j])}, {"u", g->label(c.u)}});
        text << std::setw(6) << g->label(reps[c.i]) << std::setw(6) << g->label(reps[c.j]) << std::setw(6)
             << g->label(c.u) << "\n";
    }
    o.trace = {{"contributions", rows}};
    o.text = text.str();
    return o;
}

// ---- splitting ----------------------------------------------------------

struct SplittingArgs {
    std::vector<std::string> field;
    std::int64_t prime = 0;
};

Output cmd_splitting(const SplittingArgs& args)
{
    Output o;
    const auto& f = args.field;
    if (f.empty())
        throw UsageError("--field needs a field kind");
    const std::string& kind = f[0];
    const std::size_t expected = kind == "subfield" ? 3 : 2;
    if ((kind != "quadratic" && kind != "cyclotomic" && kind != "subfield") || f.size() != expected)
        throw UsageError("--field expects 'quadratic <d>', 'cyclotomic <m>' or 'subfield <m> <gens>'");

    Json field_json = {{"kind", kind}};
    std::optional<FieldDescriptor> field;
    if (kind == "quadratic") {
        const std::int64_t d = parse_int(f[1]);
        field_json["d"] = d;
        field = QuadraticField{FundamentalDiscriminant::make(d)};
    } else if (kind == "cyclotomic") {
        const std::int64_t m = parse_int(f[1]);
        field_json["m"] = m;
        if (m < 3)
            fail(Errc::invalid_argument, "cyclotomic modulus must be at least 3");
        field = CyclotomicField{m};
    } else {
        const std::int64_t m = parse_int(f[1]);
        const auto gen_residues = parse_residue_list(f[2]);
        field_json["m"] = m;
        field_json["generators"] = gen_residues;
        const GroupPtr g = group_from_unit_residues(m);
        std::vector<Element> gens;
        for (const auto r : gen_residues)
            gens.push_back(unit_or_fail(*g, m, r));
        field = make_cyclotomic_subfield(m, subgroup_generated(g, gens));
    }
    o.inputs["field"] = field_json;
    o.inputs["prime"] = args.prime;

    const SplittingType t = splitting(args.prime, *field);
    o.result["field"] = describe(*field);
    o.result["degree"] = degree(*field);
    o.result["e"] = t.e;
    o.result["f"] = t.f;
    o.result["g"] = t.g;
    std::ostringstream text;
    text << args.prime << " in " << describe(*field) << ": (e,f,g) = (" << t.e << "," << t.f << "," << t.g << ")";
    if (t.degree() == 2) {
        o.result["type"] = t.word();
        text << " " << t.word();
    }
    text << "\n";
    o.text = text.str();
    return o;
}

// ---- takagi-witness -----------------------------------------------------

struct WitnessArgs {
    std::int64_t a = 0;
    std::int64_t d = 0;
    std::int64_t prime_bound = 10000;
};

Output cmd_takagi_witness(const WitnessArgs& args)
{
    Output o;
    o.inputs["a"] = args.a;
    o.inputs["d"] = args.d;
    o.inputs["prime_bound"] = args.prime_bound;
    const auto w = takagi_witness(args.a, FundamentalDiscriminant::make(args.d), args.prime_bound);

    Json factors = Json::array();
    std::ostringstream text;
    text << "factors: [";
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        factors.push_back({{"prime", w.factors[i].first}, {"exponent", w.factors[i].second}});
        text << (i ? ", " : "") << "(" << w.factors[i].first << "," << w.factors[i].second << ")";
    }
    text << "]\n";
    const std::int64_t n = args.d < 0 ? -args.d : args.d;
    const std::string s = w.denominator == "1" ? w.numerator : w.numerator + "/" + w.denominator;
    o.result["factors"] = factors;
    o.result["s_numerator"] = w.numerator;
    o.result["s_denominator"] = w.denominator;
    o.result["verified"] = true;
    text << "s = " << s << " = 1 mod " << n << ", s > 0 (verified)\n";
    o.text = text.str();
    return o;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::optional<std::int64_t> max_prime;
    int threads = 0;
    bool csv = false;
};

std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

Output cmd_verify(const VerifyArgs& args)
{
    Output o;
    o.inputs["suite"] = args.suite;
    o.inputs["max_prime"] = args.max_prime ? Json(*args.max_prime) : Json(nullptr);

    SuiteOptions options;
    options.max_prime = args.max_prime;
    options.exec.threads = args.threads;
    const auto summaries = run_suite(args.suite, options);

    bool all_passed = true;
    Json list = Json::array();
    std::ostringstream text;
    if (args.csv)
        text << "check,checks,failures,passed,counterexample\n";
    for (const auto& s : summaries) {
        all_passed = all_passed && s.passed();
        list.push_back({{"name", s.name},
                        {"checks", s.checks},
                        {"failures", s.failures},
                        {"passed", s.passed()},
                        {"counterexample", s.counterexample ? Json(*s.counterexample) : Json(nullptr)}});
        if (args.csv) {
            text << s.name << "," << s.checks << "," << s.failures << "," << (s.passed() ? "true" : "false") << ","
                 << (s.counterexample ? csv_quote(*s.counterexample) : "") << "\n";
        } else {
            text << (s.passed() ? "PASS " : "FAIL ") << std::left << std::setw(28) << s.name << std::right
                 << " checks=" << s.checks << " failures=" << s.failures << "\n";
            if (s.counterexample)
                text << "     first counterexample: " << *s.counterexample << "\n";
        }
    }
    o.result["passed"] = all_passed;
    o.result["summaries"] = list;
    o.exit_code = all_passed ? kExitOk : kExitFailure;
    o.text = text.str();
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quadratic residue symbols, transfers, ray class groups and reciprocity sweeps over Q", "qrcft"};
    app.require_subcommand(1);
    bool json = false;

    SymbolArgs symbol;
    auto* sym = app.add_subcommand("symbol", "Legendre, Jacobi or Kronecker symbol (a/n)");
    sym->add_option("--kind", symbol.kind, "Symbol kind")
        ->required()
        ->check(CLI::IsMember({"legendre", "jacobi", "kronecker"}));
    sym->add_option("--a", symbol.a, "Top argument")->required();
    sym->add_option("--n", symbol.n, "Bottom argument")->required();
    sym->add_option("--method", symbol.method, "Legendre route")->check(CLI::IsMember({"brute", "euler", "gauss-lemma"}));
    sym->add_option("--half-system", symbol.half_system, "Comma-separated half-system for gauss-lemma");
    sym->add_flag("--json", json, "Emit a JSON record");

    TransferArgs tr;
    auto* trc = app.add_subcommand("transfer", "Transfer (Z/m)^x -> U for U generated by residues");
    trc->add_option("--mod", tr.modulus, "Modulus m")->required();
    trc->add_option("--subgroup", tr.subgroup, "Comma-separated generators of U")->required();
    trc->add_option("--element", tr.element, "Residue to transfer")->required();
    trc->add_flag("--json", json, "Emit a JSON record");

    SplittingArgs sp;
    auto* spc = app.add_subcommand("splitting", "Decomposition (e,f,g) of a prime");
    spc->add_option("--field", sp.field, "quadratic <d> | cyclotomic <m> | subfield <m> <gens>")
        ->required()
        ->expected(2, 3)
        ->allow_extra_args(false);
    spc->add_option("--prime", sp.prime, "Rational prime q")->required();
    spc->add_flag("--json", json, "Emit a JSON record");

    WitnessArgs wa;
    auto* wc = app.add_subcommand("takagi-witness", "Write a = r s with r a norm and s = 1 mod |d|");
    wc->add_option("--a", wa.a, "Positive integer a")->required();
    wc->add_option("--d", wa.d, "Fundamental discriminant")->required();
    wc->add_option("--prime-bound", wa.prime_bound, "Largest prime used in the witness")->capture_default_str();
    wc->add_flag("--json", json, "Emit a JSON record");

    VerifyArgs va;
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    std::int64_t max_prime = 0;
    auto* vc = app.add_subcommand("verify", "Run an exhaustive verification suite");
    vc->add_option("--suite", va.suite, "Suite name")->required()->check(CLI::IsMember(suites));
    auto* max_prime_opt = vc->add_option("--max-prime", max_prime, "Prime bound for prime-indexed sweeps")
                              ->check(CLI::PositiveNumber);
    vc->add_option("--threads", va.threads, "Worker threads (default: all available)")->check(CLI::NonNegativeNumber);
    vc->add_flag("--json", json, "Emit a JSON record");
    vc->add_flag("--csv", va.csv, "Emit CSV rows");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    const auto* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    try {
        Output o;
        if (command == "symbol") {
            o = cmd_symbol(symbol);
        } else if (command == "transfer") {
            o = cmd_transfer(tr);
        } else if (command == "splitting") {
            o = cmd_splitting(sp);
        } else if (command == "takagi-witness") {
            o = cmd_takagi_witness(wa);
        } else {
            if (*max_prime_opt)
                va.max_prime = max_prime;
            if (json && va.csv)
                throw UsageError("--json and --csv are mutually exclusive");
            o = cmd_verify(va);
        }
        if (json)
            out << record(command, o).dump(2) << "\n";
        else
            out << o.text;
        return o.exit_code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return e.code() == Errc::witness_not_found ? kExitRetry : kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace qrcft::cli
