#ifndef TTP2_INSTANCE_HPP
#define TTP2_INSTANCE_HPP

#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ttp2/errors.hpp"

namespace ttp2 {

using Dist = std::int64_t;

// Symmetric nonnegative integer distance matrix with zero diagonal.
// Team indices are 0-based internally; all text I/O is 1-based.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, Dist fill = 0) : n_(n), d_(std::size_t(n) * n, fill) {
    for (int i = 0; i < n; ++i) at(i, i) = 0;
  }

  int n() const { return n_; }
  Dist& at(int i, int j) { return d_[std::size_t(i) * n_ + j]; }
  Dist at(int i, int j) const { return d_[std::size_t(i) * n_ + j]; }

  // D_i: weight sum of all edges incident on team i.
  Dist row_sum(int i) const {
    Dist s = 0;
    for (int j = 0; j < n_; ++j) s += at(i, j);
    return s;
  }

  // D_G: total edge weight, each unordered pair counted once.
  Dist total_edge_weight() const {
    Dist s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) s += at(i, j);
    return s;
  }

  bool is_metric() const {
    for (int h = 0; h < n_; ++h)
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          if (at(i, j) > at(i, h) + at(h, j)) return false;
    return true;
  }

  // Set when a parsed instance violates the triangle inequality; the solver
  // still runs but the approximation guarantee is void.
  bool metric_warning = false;

 private:
  int n_ = 0;
  std::vector<Dist> d_;
};

namespace detail {

inline std::vector<Dist> tokenize_integers(std::istream& in) {
  std::vector<Dist> toks;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw parse_error("not a number: '" + tok + "'");
    }
    if (pos != tok.size())
      throw parse_error("non-integer distance: '" + tok + "'");
    toks.push_back(v);
  }
  return toks;
}

inline void check_symmetric_nonnegative(const DistanceMatrix& dm) {
  for (int i = 0; i < dm.n(); ++i) {
    if (dm.at(i, i) != 0)
      throw validation_error("nonzero diagonal at team " + std::to_string(i + 1));
    for (int j = 0; j < dm.n(); ++j) {
      if (dm.at(i, j) < 0)
        throw validation_error("negative distance between teams " +
                               std::to_string(i + 1) + " and " + std::to_string(j + 1));
      if (dm.at(i, j) != dm.at(j, i))
        throw validation_error("asymmetric distance between teams " +
                               std::to_string(i + 1) + " and " + std::to_string(j + 1));
    }
  }
}

}  // namespace detail

// Accepts both community formats: k*k whitespace-separated numbers (bare
// matrix) or a leading team count followed by the k*k entries.
inline DistanceMatrix parse_instance(std::istream& in) {
  std::vector<Dist> toks = detail::tokenize_integers(in);
  std::size_t cnt = toks.size();
  int k = -1;
  std::size_t off = 0;
  auto isq = [](std::size_t c, int& root) {
    root = (int)std::llround(std::sqrt((double)c));
    for (int r = root - 2; r <= root + 2; ++r)
      if (r >= 0 && (std::size_t)r * r == c) {
        root = r;
        return true;
      }
    return false;
  };
  int root = 0;
  if (isq(cnt, root)) {
    k = root;
  } else if (cnt >= 1 && isq(cnt - 1, root) && toks[0] == root) {
    k = root;
    off = 1;
  } else {
    throw parse_error("token count " + std::to_string(cnt) +
                      " matches neither a bare k*k matrix nor a sized-header matrix");
  }
  if (k == 0 || k % 2 != 0)
    throw unsupported_size_error("team count must be a positive even number, got " +
                                 std::to_string(k));
  DistanceMatrix dm(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) dm.at(i, j) = toks[off + std::size_t(i) * k + j];
  detail::check_symmetric_nonnegative(dm);
  dm.metric_warning = !dm.is_metric();
  return dm;
}

inline DistanceMatrix parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

// Sized-header form, one matrix row per line.
inline void serialize_instance(const DistanceMatrix& dm, std::ostream& out) {
  out << dm.n() << '\n';
  for (int i = 0; i < dm.n(); ++i) {
    for (int j = 0; j < dm.n(); ++j) out << (j ? " " : "") << dm.at(i, j);
    out << '\n';
  }
}

inline std::string serialize_instance(const DistanceMatrix& dm) {
  std::ostringstream os;
  serialize_instance(dm, os);
  return os.str();
}

// Tight worst-case family: canonical pairs (1,2),(3,4),... at distance 0,
// every other pair at distance 1. Its minimum perfect matching has weight 0.
inline DistanceMatrix gen_worst_case(int n) {
  if (n < 4 || n % 4 != 0)
    throw unsupported_size_error("worst-case family requires n = 0 (mod 4), n >= 4; got " +
                                 std::to_string(n));
  DistanceMatrix dm(n, 1);
  for (int i = 0; i < n; i += 2) {
    dm.at(i, i + 1) = 0;
    dm.at(i + 1, i) = 0;
  }
  return dm;
}

// Deterministic random metric instance: integer grid points, rounded
// Euclidean distances, then a shortest-path closure so the triangle
// inequality holds exactly.
inline DistanceMatrix gen_random_metric(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw unsupported_size_error("random instances require even n >= 4, got " +
                                 std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<long long> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = (long long)(rng() % 1001);
    y[i] = (long long)(rng() % 1001);
  }
  DistanceMatrix dm(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dx = double(x[i] - x[j]), dy = double(y[i] - y[j]);
      Dist v = (Dist)std::llround(std::sqrt(dx * dx + dy * dy));
      dm.at(i, j) = dm.at(j, i) = v;
    }
  // Floyd-Warshall closure repairs the rounding artifacts.
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (dm.at(i, h) + dm.at(h, j) < dm.at(i, j))
          dm.at(i, j) = dm.at(i, h) + dm.at(h, j);
  return dm;
}

}  // namespace ttp2

#endif  // TTP2_INSTANCE_HPP
