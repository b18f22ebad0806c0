#include "qrcft/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = qrcft::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args)
{
    args.push_back("--json");
    const auto r = run(args);
    REQUIRE(r.code == qrcft::cli::kExitOk);
    auto doc = json::parse(r.out);
    for (const char* key : {"schema_version", "command", "inputs", "result", "trace"})
        REQUIRE(doc.contains(key));
    CHECK(doc["schema_version"] == "1");
    return doc;
}

} // namespace

TEST_CASE("symbol command")
{
    const auto r = run({"symbol", "--kind", "legendre", "--a", "3", "--n", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("-1") != std::string::npos);

    CHECK(run_json({"symbol", "--kind", "legendre", "--a", "3", "--n", "7"})["result"]["value"] == -1);
    CHECK(run_json({"symbol", "--kind", "kronecker", "--a", "1", "--n", "0"})["result"]["value"] == 1);
    CHECK(run_json({"symbol", "--kind", "jacobi", "--a", "2", "--n", "15"})["result"]["value"] == 1);

    const auto bad = run({"symbol", "--kind", "legendre", "--a", "3", "--n", "8"});
    CHECK(bad.code == qrcft::cli::kExitFailure);
    CHECK(bad.err.find("n must be an odd prime") != std::string::npos);

    const auto g = run_json({"symbol", "--kind", "legendre", "--a", "3", "--n", "7", "--method", "gauss-lemma"});
    CHECK(g["result"]["value"] == -1);
    const auto& rows = g["trace"]["rows"];
    REQUIRE(rows.size() == 3);
    CHECK(rows[1]["j"] == 2);
    CHECK(rows[1]["sign"] == -1);
    const auto custom = run_json({"symbol", "--kind", "legendre", "--a", "2", "--n", "7", "--method", "gauss-lemma",
                                  "--half-system", "1,5,3"});
    CHECK(custom["result"]["value"] == 1);
    CHECK(run({"symbol", "--kind", "legendre", "--a", "2", "--n", "7", "--method", "gauss-lemma", "--half-system",
               "1,6,3"})
              .code == qrcft::cli::kExitFailure);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == qrcft::cli::kExitUsage);
    CHECK(run({"nosuch"}).code == qrcft::cli::kExitUsage);
    CHECK(run({"symbol", "--kind", "jacobi", "--a", "2", "--n", "15", "--method", "brute"}).code ==
          qrcft::cli::kExitUsage);
    CHECK(run({"symbol", "--kind", "weird", "--a", "2", "--n", "15"}).code == qrcft::cli::kExitUsage);
    CHECK(run({"symbol", "--kind", "legendre", "--a", "x", "--n", "7"}).code == qrcft::cli::kExitUsage);
    CHECK(run({"verify", "--suite", "nosuch"}).code == qrcft::cli::kExitUsage);
    CHECK(run({"verify", "--suite", "conductor", "--json", "--csv"}).code == qrcft::cli::kExitUsage);
    CHECK(run({"splitting", "--field", "torus", "5", "--prime", "3"}).code == qrcft::cli::kExitUsage);
    CHECK(run({"--help"}).code == qrcft::cli::kExitOk);
}

TEST_CASE("transfer command")
{
    const auto t = run_json({"transfer", "--mod", "7", "--subgroup", "6", "--element", "3"});
    CHECK(t["result"]["value_signed"] == -1);
    CHECK(t["trace"]["contributions"].size() == 3);
    CHECK(run_json({"transfer", "--mod", "7", "--subgroup", "6", "--element", "1"})["result"]["value"] == 1);
    CHECK(run_json({"transfer", "--mod", "8", "--subgroup", "3", "--element", "5"})["result"]["value"] == 1);
    CHECK(run({"transfer", "--mod", "7", "--subgroup", "6", "--element", "14"}).code == qrcft::cli::kExitFailure);
    CHECK(run({"transfer", "--mod", "8", "--subgroup", "2", "--element", "3"}).code == qrcft::cli::kExitFailure);
}

TEST_CASE("splitting command")
{
    CHECK(run_json({"splitting", "--field", "quadratic", "5", "--prime", "19"})["result"]["type"] == "split");
    const auto c = run_json({"splitting", "--field", "cyclotomic", "12", "--prime", "13"})["result"];
    CHECK((c["e"] == 1 && c["f"] == 1 && c["g"] == 4));
    const auto r = run_json({"splitting", "--field", "cyclotomic", "12", "--prime", "2"})["result"];
    CHECK((r["e"] == 2 && r["f"] == 2 && r["g"] == 1));
    CHECK(run({"splitting", "--field", "cyclotomic", "12", "--prime", "2"}).out.find("(2,2,1)") != std::string::npos);
    const auto s = run_json({"splitting", "--field", "subfield", "7", "2", "--prime", "2"})["result"];
    CHECK((s["f"] == 1 && s["g"] == 2));
    CHECK(run({"splitting", "--field", "quadratic", "12", "--prime", "5"}).code == 0);
    CHECK(run({"splitting", "--field", "quadratic", "3", "--prime", "5"}).code == qrcft::cli::kExitFailure);
}

TEST_CASE("takagi-witness command")
{
    const auto w = run_json({"takagi-witness", "--a", "4", "--d", "5"})["result"];
    REQUIRE(w["factors"].size() == 1);
    CHECK(w["factors"][0]["prime"] == 19);
    CHECK(w["factors"][0]["exponent"] == 1);
    CHECK(w["s_denominator"] == "19");
    const auto six = run_json({"takagi-witness", "--a", "6", "--d", "5"})["result"];
    CHECK(six["factors"].empty());
    CHECK(six["s_numerator"] == "6");
    CHECK(run({"takagi-witness", "--a", "2", "--d", "5"}).code == qrcft::cli::kExitFailure);
    CHECK(run({"takagi-witness", "--a", "4", "--d", "5", "--prime-bound", "5"}).code == qrcft::cli::kExitRetry);
}

TEST_CASE("verify command")
{
    CHECK(run({"verify", "--suite", "qr-transfer", "--max-prime", "100"}).code == 0);
    const auto all = run_json({"verify", "--suite", "all", "--max-prime", "50"});
    CHECK(all["result"]["passed"] == true);
    CHECK(all["result"]["summaries"].size() > 8);
    const auto csv = run({"verify", "--suite", "conductor", "--csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("check,checks,failures,passed,counterexample\n", 0) == 0);
    CHECK(csv.out.find("conductor,61,0,true,") != std::string::npos);
}

TEST_CASE("identical invocations give byte-identical output at any thread count")
{
    const std::vector<std::vector<std::string>> cmds{
        {"symbol", "--kind", "legendre", "--a", "5", "--n", "11", "--method", "gauss-lemma", "--json"},
        {"transfer", "--mod", "21", "--subgroup", "4", "--element", "5", "--json"},
        {"takagi-witness", "--a", "13", "--d", "-23", "--json"},
        {"verify", "--suite", "gauss-lemma", "--max-prime", "40", "--json"},
    };
    for (const auto& cmd : cmds) {
        const auto a = run(cmd);
        const auto b = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    const auto t1 = run({"verify", "--suite", "transfer-props", "--json", "--threads", "1"});
    const auto t3 = run({"verify", "--suite", "transfer-props", "--json", "--threads", "3"});
    CHECK(t1.code == 0);
    CHECK(t1.out == t3.out);
}
