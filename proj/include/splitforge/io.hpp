#pragma once
// JSON formats and run provenance.
//   hypergraph: {"m", "vertices": [label...], "edges": [[v...]...]}
//   partition:  {"k", "parts": [[v...]...]}
//   witness:    {"pattern", "vertices", "edges"}
// Written files carry a "provenance" object; the payload is everything else.

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "splitforge/forbidden.hpp"
#include "splitforge/hypergraph.hpp"

namespace splitforge {

using Json = nlohmann::json;

Json to_json(const Hypergraph& h);
Json to_json(const SplitPartition& p);
Json to_json(const Witness& w);
// Throw ParameterError on malformed input.
Hypergraph hypergraph_from_json(const Json& j);
SplitPartition partition_from_json(const Json& j);

std::string sha256_hex(std::string_view data);

// Canonical serialisation of a document without its provenance.
std::string payload_text(const Json& doc);
std::string payload_digest(const Json& doc);

// Throws ParameterError if the file is missing or not JSON.
Json read_json(const std::string& path);
void write_json(const std::string& path, const Json& doc);

class Provenance {
 public:
  Provenance(std::string command, Json params, std::optional<std::uint64_t> seed);
  void add_input(const std::string& path);
  // Copy of payload with "provenance" attached.
  Json stamp(const Json& payload) const;

 private:
  std::string command_;
  Json params_;
  std::optional<std::uint64_t> seed_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace splitforge
