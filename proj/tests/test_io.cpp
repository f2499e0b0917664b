#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "splitforge/constructions.hpp"
#include "splitforge/errors.hpp"
#include "splitforge/io.hpp"

using namespace splitforge;

TEST(Io, Sha256KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Io, HypergraphAndPartitionRoundTrip) {
  const auto c = build_berge3(5);
  const auto h = hypergraph_from_json(to_json(c.graph));
  EXPECT_EQ(h.uniformity(), 3u);
  EXPECT_EQ(h.labels(), c.graph.labels());
  ASSERT_EQ(h.num_edges(), c.graph.num_edges());
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    EXPECT_TRUE(std::ranges::equal(h.edge(e), c.graph.edge(e)));
  }
  const auto p = partition_from_json(to_json(c.partition));
  EXPECT_EQ(p.parts, c.partition.parts);
  EXPECT_EQ(p.declared_k, c.partition.declared_k);
}

TEST(Io, MalformedInputIsAParameterError) {
  EXPECT_THROW(hypergraph_from_json(Json::parse(R"({"m":2})")), ParameterError);
  EXPECT_THROW(hypergraph_from_json(Json::parse(R"({"m":2,"vertices":["a"],"edges":[[0,1]]})")), ParameterError);
  EXPECT_THROW(partition_from_json(Json::parse(R"({"parts":[]})")), ParameterError);
  EXPECT_THROW(read_json("/nonexistent/file.json"), ParameterError);
}

TEST(Io, ProvenanceDoesNotChangeThePayloadDigest) {
  const auto payload = to_json(build_design_split(design_catalog("fano"), 2).graph);
  Provenance a("construct", {{"family", "design"}}, 1), b("construct", {{"family", "design"}}, 1);
  const auto da = a.stamp(payload), db = b.stamp(payload);
  EXPECT_EQ(payload_digest(da), payload_digest(db));
  EXPECT_EQ(payload_digest(da), sha256_hex(payload.dump()));
  EXPECT_EQ(da["provenance"]["generator"], "mt19937_64/v1");
  EXPECT_EQ(da["provenance"]["payload_sha256"], sha256_hex(payload.dump()));

  const auto path = (std::filesystem::temp_directory_path() / "splitforge_io_test.json").string();
  write_json(path, da);
  EXPECT_EQ(payload_text(read_json(path)), payload.dump());
  std::remove(path.c_str());
}
