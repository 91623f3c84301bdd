#include "ccnet/document.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "ccnet/polytext.hpp"

namespace ccnet {

namespace {

using njson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw validation_error(msg); }

int require_int(const njson& j, const std::string& where, int lo) {
    if (!j.is_number_integer())
        fail(where + " must be an integer");
    long long v = j.get<long long>();
    if (v < lo || v > 1000000) fail(where + " is out of range");
    return static_cast<int>(v);
}

int optional_int(const njson& obj, const std::string& key, int dflt, int lo) {
    if (!obj.contains(key)) return dflt;
    return require_int(obj.at(key), "\"" + key + "\"", lo);
}

FiniteMap parse_images(const njson& val, const std::string& name, int domain, int codomain) {
    if (!val.is_array() || static_cast<int>(val.size()) != domain)
        fail("map \"" + name + "\" must be an array of " + std::to_string(domain) + " images");
    FiniteMap m;
    for (int i = 0; i < domain; ++i) {
        const njson& e = val.at(static_cast<size_t>(i));
        if (!e.is_number_integer())
            fail("map \"" + name + "\" entry " + std::to_string(i + 1) + " is not an integer");
        long long v = e.get<long long>();
        if (v < 1 || v > codomain)
            fail("map \"" + name + "\" entry " + std::to_string(i + 1) + " is " +
                 std::to_string(v) + ", outside 1.." + std::to_string(codomain));
        m.images.push_back(static_cast<int>(v));
    }
    return m;
}

std::vector<std::string> resolve_order(const njson& doc, const njson& maps) {
    std::vector<std::string> order;
    if (doc.contains("order")) {
        const njson& o = doc.at("order");
        if (!o.is_array()) fail("\"order\" must be an array of map names");
        std::set<std::string> seen;
        for (const auto& e : o) {
            if (!e.is_string()) fail("\"order\" must be an array of map names");
            std::string name = e.get<std::string>();
            if (!maps.contains(name)) fail("\"order\" lists unknown map \"" + name + "\"");
            if (!seen.insert(name).second) fail("\"order\" lists map \"" + name + "\" twice");
            order.push_back(name);
        }
        if (order.size() != maps.size()) fail("\"order\" must list every map exactly once");
    } else {
        for (auto it = maps.begin(); it != maps.end(); ++it) order.push_back(it.key());
    }
    return order;
}

std::vector<std::string> function_texts(const njson& val, const std::string& name, int out_dim) {
    std::vector<std::string> texts;
    if (out_dim == 1) {
        if (!val.is_string())
            fail("function \"" + name + "\" must be a polynomial string");
        texts.push_back(val.get<std::string>());
    } else {
        if (!val.is_array() || static_cast<int>(val.size()) != out_dim)
            fail("function \"" + name + "\" must be an array of " + std::to_string(out_dim) +
                 " polynomial strings");
        for (const auto& e : val) {
            if (!e.is_string())
                fail("function \"" + name + "\" must be an array of polynomial strings");
            texts.push_back(e.get<std::string>());
        }
    }
    return texts;
}

void check_keys(const njson& doc, const std::set<std::string>& allowed) {
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!allowed.count(it.key())) fail("unknown document key \"" + it.key() + "\"");
}

NetworkDocument parse_homogeneous(const njson& j) {
    check_keys(j, {"cells", "dim", "params", "maps", "order", "functions"});
    if (!j.contains("cells")) fail("document is missing \"cells\"");
    int cells = require_int(j.at("cells"), "\"cells\"", 1);
    int dim = optional_int(j, "dim", 1, 1);
    int params = optional_int(j, "params", 0, 0);
    if (!j.contains("maps") || !j.at("maps").is_object() || j.at("maps").empty())
        fail("document must declare at least one map under \"maps\"");
    const njson& maps = j.at("maps");

    std::vector<std::string> order = resolve_order(j, maps);
    NetworkDocument doc;
    std::map<FiniteMap, std::string> first_name;
    std::vector<FiniteMap> list;
    for (const auto& name : order) {
        if (name.empty() || name.find('@') != std::string::npos)
            fail("map name \"" + name + "\" is not allowed");
        FiniteMap m = parse_images(maps.at(name), name, cells, cells);
        auto it = first_name.find(m);
        if (it != first_name.end())
            fail("maps \"" + it->second + "\" and \"" + name + "\" are identical");
        first_name[m] = name;
        list.push_back(std::move(m));
    }
    doc.net = make_network(cells, dim, params, list, /*close=*/false);
    doc.map_names = order;

    if (j.contains("functions")) {
        const njson& fns = j.at("functions");
        if (!fns.is_object()) fail("\"functions\" must be an object");
        Signature sig = network_sig(doc.net);
        for (auto it = fns.begin(); it != fns.end(); ++it) {
            const std::string& name = it.key();
            if (name.empty() || name.find('@') != std::string::npos)
                fail("function name \"" + name + "\" is not allowed");
            try {
                doc.functions[name] = parse_polymap(function_texts(it.value(), name, dim), sig);
            } catch (const validation_error& e) {
                fail("function \"" + name + "\": " + e.what());
            }
            doc.function_names.push_back(name);
        }
    }
    return doc;
}

// "name@(d<-c)" -> base name and colors
void split_typed_key(const std::string& key, int colors, std::string& base, int& d, int& c) {
    size_t at = key.find('@');
    if (at == std::string::npos || at == 0)
        fail("map key \"" + key + "\" must look like \"name@(d<-c)\"");
    base = key.substr(0, at);
    std::string suffix = key.substr(at + 1);
    std::istringstream is(suffix);
    char ch1 = 0, ch2 = 0, ch3 = 0, ch4 = 0;
    if (!(is >> ch1 >> d >> ch2 >> ch3 >> c >> ch4) || ch1 != '(' || ch2 != '<' || ch3 != '-' ||
        ch4 != ')' || is.peek() != std::char_traits<char>::eof())
        fail("map key \"" + key + "\" must look like \"name@(d<-c)\"");
    if (d < 1 || d > colors || c < 1 || c > colors)
        fail("map key \"" + key + "\" names a color outside 1.." + std::to_string(colors));
}

NetworkDocument parse_colored(const njson& j) {
    check_keys(j, {"colors", "params", "maps", "order", "functions"});
    const njson& colors = j.at("colors");
    if (!colors.is_array() || colors.empty())
        fail("\"colors\" must be a non-empty array of {cells, dim} entries");
    const int C = static_cast<int>(colors.size());
    std::vector<int> counts, dims;
    for (int c = 0; c < C; ++c) {
        const njson& e = colors.at(static_cast<size_t>(c));
        if (!e.is_object()) fail("\"colors\" entries must be objects with cells and dim");
        check_keys(e, {"cells", "dim"});
        if (!e.contains("cells")) fail("color " + std::to_string(c + 1) + " is missing \"cells\"");
        counts.push_back(require_int(e.at("cells"), "color cells", 1));
        dims.push_back(optional_int(e, "dim", 1, 1));
    }
    int params = optional_int(j, "params", 0, 0);
    if (!j.contains("maps") || !j.at("maps").is_object() || j.at("maps").empty())
        fail("document must declare at least one map under \"maps\"");
    const njson& maps = j.at("maps");

    std::vector<std::string> order = resolve_order(j, maps);
    NetworkDocument doc;
    doc.colored = true;
    std::vector<std::vector<std::vector<FiniteMap>>> lists(
        static_cast<size_t>(C), std::vector<std::vector<FiniteMap>>(static_cast<size_t>(C)));
    doc.colored_map_names.assign(static_cast<size_t>(C),
                                 std::vector<std::vector<std::string>>(static_cast<size_t>(C)));
    std::map<std::array<int, 2>, std::map<FiniteMap, std::string>> first_name;
    for (const auto& key : order) {
        std::string base;
        int d = 0, c = 0;
        split_typed_key(key, C, base, d, c);
        FiniteMap m = parse_images(maps.at(key), key, counts[static_cast<size_t>(c) - 1],
                                   counts[static_cast<size_t>(d) - 1]);
        auto& names = first_name[{d, c}];
        auto it = names.find(m);
        if (it != names.end())
            fail("maps \"" + it->second + "\" and \"" + key + "\" are identical");
        names[m] = key;
        lists[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1].push_back(std::move(m));
        doc.colored_map_names[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1].push_back(base);
    }
    doc.cnet = make_colored_network(C, counts, dims, params, lists, /*close=*/false);

    if (j.contains("functions")) {
        const njson& fns = j.at("functions");
        if (!fns.is_object()) fail("\"functions\" must be an object");
        std::map<std::string, std::map<int, PolyMap>> partial;
        for (auto it = fns.begin(); it != fns.end(); ++it) {
            const std::string& key = it.key();
            size_t at = key.find('@');
            if (at == std::string::npos || at == 0 || at + 1 == key.size())
                fail("function key \"" + key + "\" must look like \"name@color\"");
            std::string base = key.substr(0, at);
            int c = 0;
            try {
                size_t used = 0;
                c = std::stoi(key.substr(at + 1), &used);
                if (used != key.size() - at - 1) throw std::invalid_argument("");
            } catch (...) {
                fail("function key \"" + key + "\" must look like \"name@color\"");
            }
            if (c < 1 || c > C)
                fail("function key \"" + key + "\" names a color outside 1.." + std::to_string(C));
            Signature sig = colored_profile_sig(doc.cnet, c);
            PolyMap f;
            try {
                f = parse_polymap(function_texts(it.value(), key, sig.out_dim), sig);
            } catch (const validation_error& e) {
                fail("function \"" + key + "\": " + e.what());
            }
            if (!partial.count(base)) doc.function_names.push_back(base);
            if (!partial[base].emplace(c, std::move(f)).second)
                fail("function \"" + key + "\" is defined twice");
        }
        for (const auto& name : doc.function_names) {
            ColoredPolyFamily fam;
            for (int c = 1; c <= C; ++c) {
                auto it = partial[name].find(c);
                if (it == partial[name].end())
                    fail("function \"" + name + "\" is missing its color " + std::to_string(c) +
                         " component");
                fam.comp.push_back(std::move(it->second));
            }
            doc.colored_functions[name] = std::move(fam);
        }
    }
    return doc;
}

std::string typed_key(const std::string& base, int d, int c) {
    std::ostringstream os;
    os << base << "@(" << d << "<-" << c << ")";
    return os.str();
}

njson function_json(const PolyMap& f) {
    if (f.sig.out_dim == 1) return poly_str(f.sig, f.comp[0]);
    njson arr = njson::array();
    for (const auto& p : f.comp) arr.push_back(poly_str(f.sig, p));
    return arr;
}

// First free name among "s<pos>", "g<pos>", "m<pos>_2", "m<pos>_3", ...
std::string generated_name(const std::set<std::string>& taken, int pos) {
    std::string cand = "s" + std::to_string(pos);
    if (!taken.count(cand)) return cand;
    cand = "g" + std::to_string(pos);
    if (!taken.count(cand)) return cand;
    for (int t = 2;; ++t) {
        cand = "m" + std::to_string(pos) + "_" + std::to_string(t);
        if (!taken.count(cand)) return cand;
    }
}

} // namespace

NetworkDocument parse_network_document(const std::string& text) {
    njson j;
    try {
        j = njson::parse(text);
    } catch (const njson::parse_error& e) {
        fail(std::string("document is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("document must be a JSON object");
    if (j.contains("colors")) {
        if (j.contains("cells") || j.contains("dim"))
            fail("a colored document lists cells and dims per color, not at top level");
        return parse_colored(j);
    }
    return parse_homogeneous(j);
}

std::string serialize_document(const NetworkDocument& doc) {
    njson j;
    if (!doc.colored) {
        j["cells"] = doc.net.cells;
        j["dim"] = doc.net.dim;
        j["params"] = doc.net.params;
        njson maps = njson::object();
        for (size_t i = 0; i < doc.map_names.size(); ++i)
            maps[doc.map_names[i]] = doc.net.maps[i].images;
        j["maps"] = std::move(maps);
        j["order"] = doc.map_names;
        njson fns = njson::object();
        for (const auto& name : doc.function_names)
            fns[name] = function_json(doc.functions.at(name));
        j["functions"] = std::move(fns);
    } else {
        njson colors = njson::array();
        for (int c = 0; c < doc.cnet.colors; ++c)
            colors.push_back({{"cells", doc.cnet.cell_counts[static_cast<size_t>(c)]},
                              {"dim", doc.cnet.cell_dims[static_cast<size_t>(c)]}});
        j["colors"] = std::move(colors);
        j["params"] = doc.cnet.params;
        njson maps = njson::object();
        njson order = njson::array();
        for (int d = 1; d <= doc.cnet.colors; ++d)
            for (int c = 1; c <= doc.cnet.colors; ++c)
                for (int k = 1; k <= doc.cnet.arity(d, c); ++k) {
                    std::string key = typed_key(
                        doc.colored_map_names[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1]
                                             [static_cast<size_t>(k) - 1],
                        d, c);
                    maps[key] = doc.cnet.sigma(d, c, k).images;
                    order.push_back(key);
                }
        j["maps"] = std::move(maps);
        j["order"] = std::move(order);
        njson fns = njson::object();
        for (const auto& name : doc.function_names) {
            const ColoredPolyFamily& fam = doc.colored_functions.at(name);
            for (int c = 1; c <= doc.cnet.colors; ++c)
                fns[name + "@" + std::to_string(c)] =
                    function_json(fam.comp[static_cast<size_t>(c) - 1]);
        }
        j["functions"] = std::move(fns);
    }
    return j.dump(2) + "\n";
}

NetworkDocument complete_document(const NetworkDocument& doc) {
    NetworkDocument out;
    if (!doc.colored) {
        out.net = make_network(doc.net.cells, doc.net.dim, doc.net.params, doc.net.maps,
                               /*close=*/true);
        out.map_names = doc.map_names;
        std::set<std::string> taken(out.map_names.begin(), out.map_names.end());
        for (size_t pos = out.map_names.size() + 1; pos <= out.net.maps.size(); ++pos) {
            std::string name = generated_name(taken, static_cast<int>(pos));
            taken.insert(name);
            out.map_names.push_back(name);
        }
        out.function_names = doc.function_names;
        for (const auto& [name, f] : doc.functions)
            out.functions[name] = extend_function(out.net, f);
    } else {
        out.colored = true;
        out.cnet = semigroupoid_closure(doc.cnet);
        out.colored_map_names = doc.colored_map_names;
        for (int d = 1; d <= out.cnet.colors; ++d)
            for (int c = 1; c <= out.cnet.colors; ++c) {
                auto& names = out.colored_map_names[static_cast<size_t>(d) - 1]
                                                  [static_cast<size_t>(c) - 1];
                std::set<std::string> taken(names.begin(), names.end());
                for (size_t pos = names.size() + 1;
                     pos <= static_cast<size_t>(out.cnet.arity(d, c)); ++pos) {
                    std::string name = generated_name(taken, static_cast<int>(pos));
                    taken.insert(name);
                    names.push_back(name);
                }
            }
        out.function_names = doc.function_names;
        for (const auto& [name, fam] : doc.colored_functions)
            out.colored_functions[name] = colored_extend_family(out.cnet, fam);
    }
    return out;
}

} // namespace ccnet
