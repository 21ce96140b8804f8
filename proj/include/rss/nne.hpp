// Gene-bank network approximation: sample random gene tensors, form genotype
// tensors as sums of active genes, and reduce entrywise tensor approximation
// to a (layers * width * width)-dimensional subset-sum search. Includes the
// ReLU forward pass for comparing the approximating network with its target.

#ifndef RSS_NNE_HPP
#define RSS_NNE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "rss/bounds.hpp"
#include "rss/search.hpp"

namespace rss {

// n random gene tensors, each layers x width x width with i.i.d. standard
// normal entries. Entries are flattened row-major: index (i, j, k) maps to
// (i*width + j)*width + k, the same order the subset-sum reduction uses.
struct GeneBank {
  long n = 0;
  int layers = 0;
  int width = 0;
  std::uint64_t seed = 0;
  std::vector<double> genes;  // n * layers * width * width

  std::size_t gene_size() const {
    return static_cast<std::size_t>(layers) * width * width;
  }
  std::span<const double> gene(long i) const {
    return {genes.data() + static_cast<std::size_t>(i) * gene_size(), gene_size()};
  }
};

struct Genotype {
  std::vector<std::uint8_t> bits;  // length-n activation vector over {0,1}
};

struct NetTensor {
  int layers = 1;
  int width = 1;
  std::vector<double> entries;  // layers * width * width, row-major

  double at(int i, int j, int k) const {
    return entries[(static_cast<std::size_t>(i) * width + j) * width + k];
  }
  double& at(int i, int j, int k) {
    return entries[(static_cast<std::size_t>(i) * width + j) * width + k];
  }
  double max_abs_entry() const;
};

GeneBank sample_genes(long n, int layers, int width, std::uint64_t seed);

// Entrywise sum of the active genes.
NetTensor genotype_tensor(const GeneBank& bank, const Genotype& x);

struct GenotypeResult {
  bool found = false;
  Genotype genotype;
  double max_entry_error = 0.0;
  SearchResult raw;  // the underlying flattened search result
};

// Flattens the bank and target into a subset-sum instance of dimension
// layers*width*width and searches with tolerance 2*epsilon. The genotype and
// error equal the flattened engine's subset and max-norm error exactly.
GenotypeResult find_genotype(const GeneBank& bank, const NetTensor& target, double epsilon,
                             Engine engine);

// View of a gene bank as a subset-sum sample matrix (rows = flattened genes).
SampleMatrix bank_as_matrix(const GeneBank& bank);

// Gene count sufficient for entrywise approximation of every bounded-weight
// net: the cubic-in-dimension sample bound at dimension layers*width*width.
long long required_genes(int layers, int width, double epsilon, double C_const = kDefaultC);

// f(y) = W_L · relu(W_{L-1} · ... · relu(W_1 · y)): ReLU between layers only,
// the outermost layer linear. Layer m's matrix is the tensor slice at first
// index m, applied as out_k = sum_j W[m][j][k] * in_j.
std::vector<double> forward(const NetTensor& net, std::span<const double> y);

// Max-norm output deviation bound from the achieved entry error, propagated
// through the layers of the approximating net.
double forward_error_bound(const NetTensor& approx, std::span<const double> y, double entry_error);

}  // namespace rss

#endif  // RSS_NNE_HPP
