#include "splitforge/designs.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <unordered_set>

#include "splitforge/errors.hpp"
#include "splitforge/gf.hpp"
#include "splitforge/numtheory.hpp"

namespace splitforge {

std::uint64_t DesignInstance::replication() const {
  return nt::binomial(points - 1, strength - 1) / nt::binomial(block_size - 1, strength - 1);
}

namespace {

// "(a,b)" -> {a, b}.
std::vector<std::uint32_t> parse_args(std::string_view s, std::string_view id) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParameterError("unknown design id '" + std::string(id) + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<std::uint32_t> out;
  while (true) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc()) throw ParameterError("bad design parameters in '" + std::string(id) + "'");
    out.push_back(v);
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    if (s.empty()) return out;
    if (s.front() != ',') throw ParameterError("bad design parameters in '" + std::string(id) + "'");
    s.remove_prefix(1);
  }
}

gf::FieldSpec plane_field(std::uint32_t q) {
  const auto pp = nt::prime_power(q);
  if (!pp || q > 32) throw ParameterError("plane order must be a prime power <= 32, got " + std::to_string(q));
  return gf::FieldSpec::make(pp->first, pp->second);
}

DesignInstance projective_plane(std::uint32_t q) {
  const auto f = plane_field(q);
  // Points and lines are normalised vectors of GF(q)^3 (first nonzero
  // coordinate 1), in a fixed enumeration order.
  std::vector<std::array<gf::FieldElement, 3>> vecs;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) vecs.push_back({f.one(), {a}, {b}});
  }
  for (std::uint32_t b = 0; b < q; ++b) vecs.push_back({f.zero(), f.one(), {b}});
  vecs.push_back({f.zero(), f.zero(), f.one()});

  DesignInstance d;
  d.id = "PG(2," + std::to_string(q) + ")";
  d.points = static_cast<std::uint32_t>(vecs.size());
  d.block_size = q + 1;
  d.strength = 2;
  for (const auto& line : vecs) {
    std::vector<std::uint32_t> block;
    for (std::uint32_t p = 0; p < vecs.size(); ++p) {
      gf::FieldElement dot = f.zero();
      for (int i = 0; i < 3; ++i) dot = f.add(dot, f.mul(line[i], vecs[p][i]));
      if (dot == f.zero()) block.push_back(p);
    }
    d.blocks.push_back(std::move(block));
  }
  return d;
}

DesignInstance affine_plane(std::uint32_t q, std::string id) {
  const auto f = plane_field(q);
  DesignInstance d;
  d.id = std::move(id);
  d.points = q * q;
  d.block_size = q;
  d.strength = 2;
  // Point (x, y) has index x*q + y. Lines y = s*x + b, then x = c.
  for (std::uint32_t s = 0; s < q; ++s) {
    for (std::uint32_t b = 0; b < q; ++b) {
      std::vector<std::uint32_t> block;
      for (std::uint32_t x = 0; x < q; ++x) {
        const auto y = f.add(f.mul({s}, {x}), {b});
        block.push_back(x * q + y.value);
      }
      std::sort(block.begin(), block.end());
      d.blocks.push_back(std::move(block));
    }
  }
  for (std::uint32_t c = 0; c < q; ++c) {
    std::vector<std::uint32_t> block;
    for (std::uint32_t y = 0; y < q; ++y) block.push_back(c * q + y);
    d.blocks.push_back(std::move(block));
  }
  return d;
}

DesignInstance all_subsets(std::uint32_t r, std::uint32_t m) {
  if (m < 2 || r < m) throw ParameterError("all-m-subsets needs 2 <= m <= r");
  if (nt::binomial(r, m) > 2'000'000) throw ParameterError("all-m-subsets design too large");
  DesignInstance d;
  d.id = "all-m-subsets(" + std::to_string(r) + "," + std::to_string(m) + ")";
  d.points = r;
  d.block_size = m;
  d.strength = m;
  std::vector<std::uint32_t> idx(m);
  for (std::uint32_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    d.blocks.push_back(idx);
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && idx[i] == r - m + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return d;
}

}  // namespace

DesignInstance design_catalog(std::string_view id) {
  DesignInstance d;
  if (id == "fano") {
    d.id = "fano";
    d.points = 7;
    d.block_size = 3;
    d.strength = 2;
    for (std::uint32_t i = 0; i < 7; ++i) {
      std::vector<std::uint32_t> b{i, (i + 1) % 7, (i + 3) % 7};
      std::sort(b.begin(), b.end());
      d.blocks.push_back(b);
    }
  } else if (id == "STS(9)") {
    d = affine_plane(3, "STS(9)");
  } else if (id.substr(0, 2) == "PG" || id.substr(0, 2) == "AG") {
    const auto args = parse_args(id.substr(2), id);
    if (args.size() != 2 || args[0] != 2) throw ParameterError("only planes PG(2,q) and AG(2,q) are provided");
    d = id[0] == 'P' ? projective_plane(args[1]) : affine_plane(args[1], std::string(id));
  } else if (id.substr(0, 13) == "all-m-subsets") {
    const auto args = parse_args(id.substr(13), id);
    if (args.size() != 2) throw ParameterError("all-m-subsets takes (r,m)");
    d = all_subsets(args[0], args[1]);
  } else {
    throw ParameterError("unknown design id '" + std::string(id) + "'");
  }
  validate_design(d);
  return d;
}

void validate_design(const DesignInstance& d) {
  const std::uint32_t r = d.points, m = d.strength;
  if (m < 2 || d.block_size < m || r < d.block_size) throw ParameterError("design parameters out of range");
  long double span = 1;
  for (std::uint32_t i = 0; i < m; ++i) span *= r;
  if (span > 1.8e19L) throw ParameterError("design too large to validate");

  std::unordered_set<std::uint64_t> covered;
  std::vector<std::uint32_t> idx(m);
  for (const auto& block : d.blocks) {
    if (block.size() != d.block_size) throw ParameterError("block of wrong size in " + d.id);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] >= r || (i > 0 && block[i] <= block[i - 1])) {
        throw ParameterError("block points must be distinct, sorted and in range in " + d.id);
      }
    }
    const auto t = static_cast<std::uint32_t>(block.size());
    for (std::uint32_t i = 0; i < m; ++i) idx[i] = i;
    while (true) {
      std::uint64_t key = 0;
      for (std::uint32_t i : idx) key = key * r + block[i];
      if (!covered.insert(key).second) {
        std::string set;
        for (std::uint32_t i : idx) set += (set.empty() ? "" : ",") + std::to_string(block[i]);
        throw ParameterError(d.id + ": the set {" + set + "} lies in two blocks");
      }
      int i = static_cast<int>(m) - 1;
      while (i >= 0 && idx[i] == t - m + static_cast<std::uint32_t>(i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  // No m-set is covered twice, so coverage is complete exactly when the
  // counts agree.
  if (covered.size() != nt::binomial(r, m)) {
    throw ParameterError(d.id + ": " + std::to_string(nt::binomial(r, m) - covered.size()) +
                         " point sets lie in no block");
  }
}

}  // namespace splitforge
