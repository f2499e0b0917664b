#include "splitforge/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "splitforge/errors.hpp"
#include "splitforge/rng.hpp"

namespace splitforge {

Json to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto ev = h.edge(e);
    edges.push_back(std::vector<VertexId>(ev.begin(), ev.end()));
  }
  return {{"m", h.uniformity()}, {"vertices", h.labels()}, {"edges", std::move(edges)}};
}

Json to_json(const SplitPartition& p) { return {{"k", p.declared_k}, {"parts", p.parts}}; }

Json to_json(const Witness& w) {
  return {{"pattern", w.pattern}, {"vertices", w.vertices}, {"edges", w.edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  try {
    const auto m = j.at("m").get<std::uint32_t>();
    if (m < 2) throw ParameterError("uniformity must be at least 2");
    Hypergraph h(m);
    for (const auto& label : j.at("vertices")) h.add_vertex(label.get<std::string>());
    for (const auto& e : j.at("edges")) {
      const auto ev = e.get<std::vector<VertexId>>();
      h.add_edge(ev);
    }
    return h;
  } catch (const Json::exception& e) {
    throw ParameterError(std::string("malformed hypergraph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParameterError(std::string("invalid hypergraph: ") + e.what());
  }
}

SplitPartition partition_from_json(const Json& j) {
  try {
    SplitPartition p;
    p.declared_k = j.at("k").get<std::uint32_t>();
    p.parts = j.at("parts").get<std::vector<std::vector<VertexId>>>();
    return p;
  } catch (const Json::exception& e) {
    throw ParameterError(std::string("malformed partition JSON: ") + e.what());
  }
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
  return os.str();
}

std::string payload_text(const Json& doc) {
  if (!doc.is_object() || !doc.contains("provenance")) return doc.dump();
  Json copy = doc;
  copy.erase("provenance");
  return copy.dump();
}

std::string payload_digest(const Json& doc) { return sha256_hex(payload_text(doc)); }

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParameterError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write " + path);
  out << doc.dump(1) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

Provenance::Provenance(std::string command, Json params, std::optional<std::uint64_t> seed)
    : command_(std::move(command)),
      params_(std::move(params)),
      seed_(seed),
      start_(std::chrono::steady_clock::now()) {}

void Provenance::add_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  inputs_.emplace_back(path, sha256_hex(os.str()));
}

Json Provenance::stamp(const Json& payload) const {
  Json out = payload;
  Json inputs = Json::object();
  for (const auto& [path, digest] : inputs_) inputs[path] = digest;
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start_;
  out["provenance"] = {
      {"command", command_},
      {"params", params_},
      {"seed", seed_ ? Json(*seed_) : Json(nullptr)},
      {"generator", Rng::kName},
      {"version", SPLITFORGE_VERSION},
      {"inputs", std::move(inputs)},
      {"payload_sha256", payload_digest(payload)},
      {"wall_seconds", wall.count()},
  };
  return out;
}

}  // namespace splitforge
