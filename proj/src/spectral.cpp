#include "splitforge/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "splitforge/errors.hpp"
#include "splitforge/kernels.hpp"
#include "splitforge/rng.hpp"

namespace splitforge {

namespace {

std::size_t regular_degree(const Graph& g) {
  if (g.num_vertices() == 0) throw ParameterError("spectrum of an empty graph");
  const std::size_t d = g.degree(0);
  for (VertexId v = 1; v < g.num_vertices(); ++v) {
    if (g.degree(v) != d) {
      throw ParameterError("graph is not regular: vertex 0 has degree " + std::to_string(d) +
                           ", vertex " + std::to_string(v) + " has " + std::to_string(g.degree(v)));
    }
  }
  return d;
}

void matvec(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    double acc = 0;
    for (VertexId w : g.neighbors(v)) acc += x[w];
    y[v] = acc;
  }
}

void remove_mean(std::vector<double>& x) {
  double mean = 0;
  for (double t : x) mean += t;
  mean /= static_cast<double>(x.size());
  for (double& t : x) t -= mean;
}

// Extreme eigenvalues of A restricted to the complement of the all-ones
// vector, by Lanczos with full reorthogonalisation.
std::pair<double, double> lanczos_extremes(const Graph& g, double scale) {
  const std::size_t n = g.num_vertices();
  const std::size_t kmax = std::min<std::size_t>(n - 1, 800);
  const double tol = 1e-10 * std::max(1.0, scale);
  Rng rng(0x5eed5eedull);
  std::vector<std::vector<double>> basis;
  std::vector<double> alpha, beta;
  std::vector<double> v(n), w(n);
  for (double& t : v) t = rng.uniform() - 0.5;
  remove_mean(v);
  double norm = std::sqrt(kernels::dot(v, v));
  for (double& t : v) t /= norm;
  basis.push_back(v);

  for (std::size_t j = 0; j < kmax; ++j) {
    matvec(g, basis[j], w);
    remove_mean(w);
    const double a = kernels::dot(w, basis[j]);
    alpha.push_back(a);
    kernels::axpy(-a, basis[j], w);
    if (j > 0) kernels::axpy(-beta[j - 1], basis[j - 1], w);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) kernels::axpy(-kernels::dot(w, b), b, w);
    }
    const double bnext = std::sqrt(kernels::dot(w, w));

    const bool last = j + 1 == kmax || bnext < 1e-12;
    if (last || (j + 1) % 10 == 0) {
      const auto k = static_cast<Eigen::Index>(alpha.size());
      Eigen::VectorXd diag(k), sub(std::max<Eigen::Index>(k - 1, 0));
      for (Eigen::Index i = 0; i < k; ++i) diag[i] = alpha[static_cast<std::size_t>(i)];
      for (Eigen::Index i = 0; i + 1 < k; ++i) sub[i] = beta[static_cast<std::size_t>(i)];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const auto& vals = tri.eigenvalues();
      const auto& vecs = tri.eigenvectors();
      const double res_lo = std::abs(bnext * vecs(k - 1, 0));
      const double res_hi = std::abs(bnext * vecs(k - 1, k - 1));
      if (bnext < 1e-12 || (res_lo < tol && res_hi < tol)) return {vals[k - 1], vals[0]};
      if (j + 1 == kmax) {
        if (kmax == n - 1) return {vals[k - 1], vals[0]};  // full Krylov space
        throw std::runtime_error("Lanczos did not converge after " + std::to_string(kmax) + " steps");
      }
    }
    beta.push_back(bnext);
    for (double& t : w) t /= bnext;
    basis.push_back(w);
  }
  throw std::runtime_error("Lanczos did not converge");
}

}  // namespace

SpectrumSummary spectrum(const Graph& g, std::size_t dense_limit) {
  SpectrumSummary s;
  s.n = g.num_vertices();
  s.d = regular_degree(g);
  s.bipartite = !bipartition(g).empty();
  if (s.n <= dense_limit || s.n < 3) {
    s.dense = true;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(s.n), static_cast<Eigen::Index>(s.n));
    for (VertexId v = 0; v < s.n; ++v) {
      for (VertexId w : g.neighbors(v)) a(v, w) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
    const auto& vals = solver.eigenvalues();
    for (Eigen::Index i = vals.size(); i-- > 0;) s.eigenvalues.push_back(vals[i]);
    s.rho1 = s.eigenvalues.front();
    s.rho2 = s.n > 1 ? s.eigenvalues[1] : s.rho1;
    s.rho_n = s.eigenvalues.back();
  } else {
    // The all-ones vector is the top eigenvector of a regular graph.
    const auto [hi, lo] = lanczos_extremes(g, static_cast<double>(s.d));
    s.rho1 = static_cast<double>(s.d);
    s.rho2 = hi;
    s.rho_n = std::min(lo, s.rho1);
    s.eigenvalues = {s.rho1, s.rho2, s.rho_n};
  }
  s.rho = s.bipartite ? s.rho2 : std::max(s.rho2, -s.rho_n);
  return s;
}

MixingResult mixing_check(const Graph& g, const SpectrumSummary& s, std::span<const VertexId> u,
                          std::span<const VertexId> w, MixingMode mode) {
  const std::size_t n = g.num_vertices();
  if (n != s.n) throw ParameterError("spectrum summary belongs to a different graph");
  std::vector<std::uint8_t> in_u(n, 0), in_w(n, 0);
  for (VertexId v : u) {
    if (v >= n) throw ParameterError("U references a vertex outside the graph");
    in_u[v] = 1;
  }
  for (VertexId v : w) {
    if (v >= n) throw ParameterError("W references a vertex outside the graph");
    in_w[v] = 1;
  }
  double rho = std::max(s.rho2, -s.rho_n);
  double factor = 1.0;
  if (mode == MixingMode::kBipartite) {
    const auto side = bipartition(g);
    if (side.empty()) throw ParameterError("bipartite mixing on a non-bipartite graph");
    int su = -1, sw = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (in_u[v]) {
        if (su >= 0 && su != side[v]) throw ParameterError("U is not inside one side of the bipartition");
        su = side[v];
      }
      if (in_w[v]) {
        if (sw >= 0 && sw != side[v]) throw ParameterError("W is not inside one side of the bipartition");
        sw = side[v];
      }
    }
    if (su >= 0 && su == sw) throw ParameterError("U and W lie on the same side of the bipartition");
    rho = s.rho2;
    factor = 2.0;
  }
  std::size_t nu = 0, nw = 0;
  MixingResult r;
  for (VertexId v = 0; v < n; ++v) {
    nu += in_u[v];
    nw += in_w[v];
    if (!in_u[v]) continue;
    for (VertexId x : g.neighbors(v)) r.e_uw += in_w[x];
  }
  const double size = static_cast<double>(nu) * static_cast<double>(nw);
  r.lhs = std::abs(static_cast<double>(r.e_uw) - factor * static_cast<double>(s.d) * size / static_cast<double>(n));
  r.bound = rho * std::sqrt(size);
  r.ok = r.lhs <= r.bound + 1e-9;
  return r;
}

}  // namespace splitforge
