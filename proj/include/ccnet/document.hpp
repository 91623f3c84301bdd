#pragma once
#include <map>
#include <string>

#include "ccnet/colored.hpp"
#include "ccnet/network.hpp"

namespace ccnet {

// An in-memory network document: a homogeneous or colored network plus named
// polynomial functions, as read from the JSON file format.
struct NetworkDocument {
    bool colored = false;

    NetworkSpec net;                      // when !colored
    std::vector<std::string> map_names;   // parallel to net.maps

    ColoredNetworkSpec cnet;              // when colored
    // base names parallel to cnet.maps, indexed [d-1][c-1][j-1]
    std::vector<std::vector<std::vector<std::string>>> colored_map_names;

    std::vector<std::string> function_names;  // base names, document order
    std::map<std::string, PolyMap> functions;
    std::map<std::string, ColoredPolyFamily> colored_functions;
};

// Parses the JSON document format; throws validation_error with a located
// diagnostic (JSON syntax position, or the offending map/function name).
NetworkDocument parse_network_document(const std::string& text);

// Canonical serialization; parse o serialize is the identity and serialize o
// parse normalizes a document.
std::string serialize_document(const NetworkDocument& doc);

// The document with its maps completed to a semigroup(oid), generated
// elements named deterministically and functions widened to the new arity.
NetworkDocument complete_document(const NetworkDocument& doc);

} // namespace ccnet
