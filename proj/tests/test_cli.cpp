#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ccnet/cli.hpp"
#include "ccnet/document.hpp"
#include "ccnet/liealg.hpp"
#include "ccnet/polytext.hpp"

using namespace ccnet;
using njson = nlohmann::ordered_json;

namespace {

std::string golden_dir() {
    const char* d = std::getenv("CCNET_GOLDEN_DIR");
    REQUIRE_MESSAGE(d != nullptr, "CCNET_GOLDEN_DIR must point at the golden files");
    return d;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fixture(const std::string& name) { return golden_dir() + "/" + name; }

CommandResult run(std::vector<std::string> args) { return run_command(args); }

njson out_json(const CommandResult& r) { return njson::parse(r.output); }

} // namespace

// ---------------------------------------------------------- document format

TEST_CASE("parsing and serializing a document is idempotent") {
    std::string text = slurp(fixture("chain_doc.json"));
    NetworkDocument doc = parse_network_document(text);
    CHECK_FALSE(doc.colored);
    CHECK(doc.net.cells == 3);
    CHECK(doc.map_names == std::vector<std::string>{"s1", "s2"});
    CHECK(doc.function_names == std::vector<std::string>{"f", "g"});
    CHECK_FALSE(doc.net.is_semigroup());

    std::string canon = serialize_document(doc);
    NetworkDocument again = parse_network_document(canon);
    CHECK(serialize_document(again) == canon);
    CHECK(again.net.maps == doc.net.maps);
    CHECK(again.functions.at("f") == doc.functions.at("f"));
}

TEST_CASE("the order key controls map positions") {
    std::string text = R"json({
        "cells": 2,
        "maps": {"a": [1, 1], "b": [2, 2]},
        "order": ["b", "a"]
    })json";
    NetworkDocument doc = parse_network_document(text);
    CHECK(doc.map_names == std::vector<std::string>{"b", "a"});
    CHECK(doc.net.maps[0] == FiniteMap({2, 2}));

    CHECK_THROWS_AS(parse_network_document(R"json({"cells":2,"maps":{"a":[1,1]},"order":["a","a"]})json"),
                    validation_error);
    CHECK_THROWS_AS(parse_network_document(R"json({"cells":2,"maps":{"a":[1,1]},"order":[]})json"),
                    validation_error);
    CHECK_THROWS_AS(parse_network_document(R"json({"cells":2,"maps":{"a":[1,1]},"order":["z"]})json"),
                    validation_error);
}

TEST_CASE("documents with defaults and diagnostics") {
    NetworkDocument doc = parse_network_document(R"json({"cells": 2, "maps": {"m": [2, 1]}})json");
    CHECK(doc.net.dim == 1);
    CHECK(doc.net.params == 0);
    CHECK(doc.function_names.empty());

    auto message_of = [](const std::string& text) {
        try {
            parse_network_document(text);
        } catch (const validation_error& e) {
            return std::string(e.what());
        }
        return std::string("(no error)");
    };
    CHECK(message_of("{") .find("not valid JSON") != std::string::npos);
    CHECK(message_of(R"json({"maps":{"m":[1]}})json").find("cells") != std::string::npos);
    CHECK(message_of(R"json({"cells":2,"maps":{"m":[1,3]}})json").find("outside") != std::string::npos);
    CHECK(message_of(R"json({"cells":2,"maps":{}})json").find("maps") != std::string::npos);
    CHECK(message_of(R"json({"cells":2,"maps":{"m":[1,1]},"extra":0})json").find("extra") !=
          std::string::npos);
    CHECK(message_of(R"json({"cells":2,"maps":{"m":[1,1]},"functions":{"f":"X9"}})json")
              .find("\"f\"") != std::string::npos);
    // two names for the same image list
    CHECK(message_of(R"json({"cells":2,"maps":{"m":[1,1],"n":[1,1]}})json").find("n") !=
          std::string::npos);
}

TEST_CASE("multi-dimensional cells use component arrays") {
    std::string text = R"json({
        "cells": 2,
        "dim": 2,
        "maps": {"id": [1, 2], "swap": [2, 1]},
        "functions": {"f": ["X1_1 + X2_2", "X1_2^2"]}
    })json";
    NetworkDocument doc = parse_network_document(text);
    REQUIRE(doc.functions.at("f").comp.size() == 2);
    // a bare string is rejected when dim > 1
    CHECK_THROWS_AS(parse_network_document(R"json({
        "cells": 2, "dim": 2, "maps": {"id": [1, 2]}, "functions": {"f": "X1_1"}
    })json"),
                    validation_error);
}

TEST_CASE("completing a document names new maps and widens functions") {
    NetworkDocument doc = parse_network_document(slurp(fixture("chain_doc.json")));
    NetworkDocument full = complete_document(doc);
    REQUIRE(full.map_names.size() == 3);
    CHECK(full.map_names[2] == "s3");
    CHECK(full.net.maps[2] == FiniteMap({3, 3, 3}));
    CHECK(full.net.is_semigroup());
    CHECK(full.functions.at("f").sig.arity() == 3);
    // the widened function ignores the new slot
    Signature sig = network_sig(full.net);
    CHECK(full.functions.at("f") == parse_polymap({"X1^2 - X2"}, sig));

    // name collision: the natural name for position 3 is taken
    NetworkDocument clash = parse_network_document(R"json({
        "cells": 3,
        "maps": {"s1": [1, 2, 3], "s3": [2, 3, 3]}
    })json");
    NetworkDocument cfull = complete_document(clash);
    REQUIRE(cfull.map_names.size() == 3);
    CHECK(cfull.map_names[2] == "g3");
}

TEST_CASE("colored documents parse, serialize and complete") {
    std::string text = slurp(fixture("colored_doc.json"));
    NetworkDocument doc = parse_network_document(text);
    CHECK(doc.colored);
    CHECK(doc.cnet.colors == 2);
    CHECK(doc.cnet.cell_counts == std::vector<int>{2, 1});
    CHECK(doc.colored_map_names[0][0] == std::vector<std::string>{"a"});
    REQUIRE(doc.colored_functions.count("f") == 1);
    CHECK(doc.colored_functions.at("f").comp.size() == 2);

    std::string canon = serialize_document(doc);
    CHECK(serialize_document(parse_network_document(canon)) == canon);

    NetworkDocument full = complete_document(doc);
    CHECK(full.cnet.arity(2, 2) == 1);
    CHECK(full.cnet.sigma(2, 2, 1) == FiniteMap({1}));
    // the color-2 function gains the new (2<-2) slot
    CHECK(full.colored_functions.at("f").comp[1].sig.arity() == 2);

    auto message_of = [](const std::string& t) {
        try {
            parse_network_document(t);
        } catch (const validation_error& e) {
            return std::string(e.what());
        }
        return std::string("(no error)");
    };
    // every color needs its component
    CHECK(message_of(R"json({
        "colors": [{"cells": 1}, {"cells": 1}],
        "maps": {"a@(1<-1)": [1], "b@(2<-2)": [1]},
        "functions": {"f@1": "X1"}
    })json").find("color 2") != std::string::npos);
    // malformed typed keys
    CHECK(message_of(R"json({"colors":[{"cells":1}],"maps":{"a":[1]}})json").find("a") !=
          std::string::npos);
    CHECK(message_of(R"json({"colors":[{"cells":1}],"maps":{"a@(1<-9)":[1]}})json").find("color") !=
          std::string::npos);
    // top-level cells clash with the colored form
    CHECK(message_of(R"json({"colors":[{"cells":1}],"cells":1,"maps":{"a@(1<-1)":[1]}})json")
              .find("cells") != std::string::npos);
}

// ------------------------------------------------------------- CLI commands

TEST_CASE("complete matches its golden output") {
    CommandResult r = run({"complete", fixture("chain_doc.json")});
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == slurp(fixture("chain_complete.json")));

    njson j = out_json(r);
    CHECK(j["table"] == njson::parse("[[1,2,3],[2,3,3],[3,3,3]]"));
    CHECK(j["tilde"] == njson::parse("[[1,2,3],[2,3,3],[3,3,3]]"));
    CHECK(j["a_maps"] == njson::parse("[[1,2,3],[2,3,3],[3,3,3]]"));
    CHECK(j["network"]["maps"]["s3"] == njson::parse("[3,3,3]"));

    CommandResult pretty = run({"complete", "--pretty", fixture("chain_doc.json")});
    REQUIRE(pretty.exit_code == 0);
    CHECK(pretty.output == slurp(fixture("chain_complete_pretty.txt")));
}

TEST_CASE("colored complete matches its golden output") {
    CommandResult r = run({"complete", fixture("colored_doc.json")});
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == slurp(fixture("colored_complete.json")));
    njson j = out_json(r);
    // the closure invents a name for the (2<-2) identity
    bool found = false;
    for (const auto& [key, val] : j["network"]["maps"].items())
        found = found || (key.find("@(2<-2)") != std::string::npos &&
                          val == njson::parse("[1]"));
    CHECK(found);
}

TEST_CASE("bracket and compose agree with the library") {
    CommandResult r = run({"bracket", "f", "g", fixture("chain_doc.json")});
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == slurp(fixture("chain_bracket.json")));

    NetworkDocument full = complete_document(
        parse_network_document(slurp(fixture("chain_doc.json"))));
    PolyMap expect = sigma_bracket(full.net, full.functions.at("f"), full.functions.at("g"));
    njson j = out_json(r);
    Signature sig = network_sig(full.net);
    CHECK(parse_polymap({j["result"]["text"].get<std::string>()}, sig) == expect);

    CommandResult c = run({"compose", "f", "g", fixture("chain_doc.json")});
    REQUIRE(c.exit_code == 0);
    PolyMap cexpect = sigma_compose(full.net, full.functions.at("f"), full.functions.at("g"));
    CHECK(parse_polymap({out_json(c)["result"]["text"].get<std::string>()}, sig) == cexpect);
}

TEST_CASE("kernel-gamma reports the known quadratic relation") {
    CommandResult r = run({"kernel-gamma", "--degree", "1", fixture("overlap_doc.json")});
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == slurp(fixture("overlap_kernel.json")));
    njson j = out_json(r);
    CHECK(j["dimension"] == 1);
    NetworkDocument doc = parse_network_document(slurp(fixture("overlap_doc.json")));
    Signature sig = network_sig(doc.net);
    CHECK(parse_polymap({j["basis"][0]["text"].get<std::string>()}, sig) ==
          parse_polymap({"X1^2 - X1*X2 - X1*X3 + X2*X3"}, sig));

    CommandResult lin = run({"kernel-gamma", "--degree", "0", fixture("overlap_doc.json")});
    CHECK(out_json(lin)["dimension"] == 0);
}

TEST_CASE("structure commands answer on the raw document") {
    // the swap conjugates the two constant maps instead of commuting with
    // them, so it is an input symmetry but not a network symmetry
    CommandResult sym = run({"symmetries", fixture("overlap_doc.json")});
    REQUIRE(sym.exit_code == 0);
    njson j = out_json(sym);
    CHECK(j["count"] == 1);

    CommandResult syn = run({"synchrony", fixture("chain_doc.json")});
    REQUIRE(syn.exit_code == 0);
    CHECK(out_json(syn)["count"].get<int>() >= 2);

    CommandResult inp = run({"input-symmetries", fixture("overlap_doc.json")});
    REQUIRE(inp.exit_code == 0);
    CHECK(out_json(inp)["count"] == 2);
}

TEST_CASE("fundamental reports faithfulness and components") {
    CommandResult r = run({"fundamental", fixture("chain_doc.json")});
    REQUIRE(r.exit_code == 0);
    njson j = out_json(r);
    CHECK(j["faithful"] == true);
    CHECK(j["network"]["cells"] == 3);
    CHECK(j["components"]["f"].size() == 3);
}

TEST_CASE("sn decomposes through the CLI") {
    CommandResult r = run({"sn", "f0", fixture("overlap_doc.json")});
    REQUIRE(r.exit_code == 0);
    njson j = out_json(r);
    NetworkDocument doc = parse_network_document(slurp(fixture("overlap_doc.json")));
    Signature sig = network_sig(doc.net);
    PolyMap s = parse_polymap({j["f0_S"]["text"].get<std::string>()}, sig);
    PolyMap n = parse_polymap({j["f0_N"]["text"].get<std::string>()}, sig);
    CHECK(pm_sub(pm_add(s, n), doc.functions.at("f0")).is_zero());
}

TEST_CASE("normal-form runs end to end through the CLI") {
    CommandResult r = run({"normal-form", "f0", "--degree", "2",
                           fixture("overlap_doc.json")});
    REQUIRE(r.exit_code == 0);
    njson j = out_json(r);
    CHECK(j["symmetry_check"] == true);
    CHECK(j["grades"].size() == 2);
    CHECK(j["strategy"] == "sn");

    CommandResult img = run({"normal-form", "f0", "--degree", "1", "--strategy", "image",
                             fixture("overlap_doc.json")});
    REQUIRE(img.exit_code == 0);

    CommandResult inv = run({"normal-form", "f0", "--degree", "1", "--invariant", "bogus",
                             fixture("overlap_doc.json")});
    CHECK(inv.exit_code == 1);
    CommandResult bad = run({"normal-form", "f0", "--degree", "1", "--strategy", "zzz",
                             fixture("overlap_doc.json")});
    CHECK(bad.exit_code == 1);
}

TEST_CASE("verify passes on the fixtures") {
    CommandResult r = run({"verify", fixture("chain_doc.json")});
    CHECK(r.exit_code == 0);
    CHECK(out_json(r)["pass"] == true);

    CommandResult c = run({"verify", fixture("colored_doc.json")});
    CHECK(c.exit_code == 0);
    CHECK(out_json(c)["pass"] == true);
}

TEST_CASE("errors surface as JSON reports with matching exit codes") {
    CommandResult missing = run({"complete", "/nonexistent/file.json"});
    CHECK(missing.exit_code == 1);
    CHECK(out_json(missing)["error"]["kind"] == "validation");

    CommandResult nofn = run({"bracket", "f", "nope", fixture("chain_doc.json")});
    CHECK(nofn.exit_code == 1);
    CHECK(out_json(nofn)["error"]["message"].get<std::string>().find("nope") !=
          std::string::npos);

    CommandResult noargs = run({});
    CHECK(noargs.exit_code == 1);
    CHECK(noargs.output.find("Usage") != std::string::npos);

    CommandResult help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("complete") != std::string::npos);

    CommandResult badsub = run({"frobnicate", "x.json"});
    CHECK(badsub.exit_code == 1);
}
