#include "rss/nne.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rss/rng.hpp"

namespace rss {

double NetTensor::max_abs_entry() const {
  double m = 0.0;
  for (const double v : entries) m = std::max(m, std::abs(v));
  return m;
}

GeneBank sample_genes(long n, int layers, int width, std::uint64_t seed) {
  if (n < 1 || layers < 1 || width < 1) {
    throw std::invalid_argument("sample_genes: n, layers and width must be >= 1");
  }
  GeneBank bank;
  bank.n = n;
  bank.layers = layers;
  bank.width = width;
  bank.seed = seed;
  bank.genes.resize(static_cast<std::size_t>(n) * bank.gene_size());
  GaussianSampler g(seed);
  for (auto& v : bank.genes) v = g.next();
  return bank;
}

NetTensor genotype_tensor(const GeneBank& bank, const Genotype& x) {
  if (x.bits.size() != static_cast<std::size_t>(bank.n)) {
    throw std::invalid_argument("genotype_tensor: genotype length mismatch");
  }
  NetTensor t;
  t.layers = bank.layers;
  t.width = bank.width;
  t.entries.assign(bank.gene_size(), 0.0);
  for (long i = 0; i < bank.n; ++i) {
    if (!x.bits[static_cast<std::size_t>(i)]) continue;
    const auto gene = bank.gene(i);
    for (std::size_t k = 0; k < gene.size(); ++k) t.entries[k] += gene[k];
  }
  return t;
}

SampleMatrix bank_as_matrix(const GeneBank& bank) {
  SampleMatrix m;
  m.n = bank.n;
  m.d = static_cast<int>(bank.gene_size());
  m.seed = bank.seed;
  m.tag.kind = DistKind::standard_normal;
  m.values = bank.genes;
  return m;
}

GenotypeResult find_genotype(const GeneBank& bank, const NetTensor& target, double epsilon,
                             Engine engine) {
  if (target.layers != bank.layers || target.width != bank.width) {
    throw std::invalid_argument("find_genotype: target shape mismatch");
  }
  if (!(epsilon > 0.0)) throw std::invalid_argument("find_genotype: epsilon must be positive");
  const SampleMatrix m = bank_as_matrix(bank);
  SearchResult raw;
  switch (engine) {
    case Engine::exhaustive:
      raw = enumerate_exhaustive(m, target.entries, 2.0 * epsilon);
      break;
    case Engine::meet_in_middle:
      raw = meet_in_middle(m, target.entries, 2.0 * epsilon);
      break;
    case Engine::frontier:
      throw std::invalid_argument("find_genotype: frontier engine not applicable");
  }
  GenotypeResult out;
  out.found = raw.found;
  out.genotype.bits.assign(static_cast<std::size_t>(bank.n), 0);
  for (const auto i : raw.subset) out.genotype.bits[static_cast<std::size_t>(i)] = 1;
  out.max_entry_error = raw.error;
  out.raw = std::move(raw);
  return out;
}

long long required_genes(int layers, int width, double epsilon, double C_const) {
  if (layers < 1 || width < 1) {
    throw std::invalid_argument("required_genes: layers and width must be >= 1");
  }
  const int dim = layers * width * width;
  return required_n_main(dim, epsilon, C_const).n;
}

std::vector<double> forward(const NetTensor& net, std::span<const double> y) {
  if (y.size() != static_cast<std::size_t>(net.width)) {
    throw std::invalid_argument("forward: input dimension mismatch");
  }
  const int w = net.width;
  std::vector<double> cur(y.begin(), y.end());
  std::vector<double> next(static_cast<std::size_t>(w), 0.0);
  for (int m = 0; m < net.layers; ++m) {
    if (m > 0) {
      for (auto& v : cur) v = std::max(0.0, v);
    }
    for (int k = 0; k < w; ++k) {
      double acc = 0.0;
      for (int j = 0; j < w; ++j) acc += net.at(m, j, k) * cur[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(k)] = acc;
    }
    cur.swap(next);
  }
  return cur;
}

double forward_error_bound(const NetTensor& approx, std::span<const double> y,
                           double entry_error) {
  const int w = approx.width;
  std::vector<double> cur(y.begin(), y.end());
  std::vector<double> next(static_cast<std::size_t>(w), 0.0);
  double bound = 0.0;
  for (int m = 0; m < approx.layers; ++m) {
    if (m > 0) {
      for (auto& v : cur) v = std::max(0.0, v);
    }
    double l1 = 0.0;
    for (const double v : cur) l1 += std::abs(v);
    // operator inf-norm of the target layer, bounded from the known layer
    // plus the entrywise deviation
    double op = 0.0;
    for (int k = 0; k < w; ++k) {
      double col = 0.0;
      for (int j = 0; j < w; ++j) col += std::abs(approx.at(m, j, k));
      op = std::max(op, col);
    }
    op += w * entry_error;
    bound = op * bound + entry_error * l1;
    for (int k = 0; k < w; ++k) {
      double acc = 0.0;
      for (int j = 0; j < w; ++j) acc += approx.at(m, j, k) * cur[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(k)] = acc;
    }
    cur.swap(next);
  }
  return bound;
}

}  // namespace rss
