#include "rss/matrix_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace rss {

namespace {

constexpr std::uint32_t kMagic = 0x4D535352;  // "RSSM"
constexpr std::uint32_t kVersion = 1;

static_assert(std::endian::native == std::endian::little,
              "matrix binary io assumes a little-endian host");

template <class T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw std::runtime_error("matrix binary: truncated input");
  return v;
}

}  // namespace

std::string dist_kind_name(DistKind k) {
  switch (k) {
    case DistKind::standard_normal: return "standard_normal";
    case DistKind::affine_normal: return "affine_normal";
    case DistKind::containment: return "containment";
    case DistKind::quantized: return "quantized";
  }
  return "unknown";
}

void write_matrix_binary(const SampleMatrix& m, std::ostream& out) {
  put<std::uint32_t>(out, kMagic);
  put<std::uint32_t>(out, kVersion);
  put<std::uint64_t>(out, static_cast<std::uint64_t>(m.n));
  put<std::uint64_t>(out, static_cast<std::uint64_t>(m.d));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(m.tag.kind));
  put<std::uint32_t>(out, 0);
  put<std::uint64_t>(out, m.seed);
  out.write(reinterpret_cast<const char*>(m.values.data()),
            static_cast<std::streamsize>(m.values.size() * sizeof(double)));
  if (!out) throw std::runtime_error("matrix binary: write failed");
}

void write_matrix_binary_file(const SampleMatrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_matrix_binary(m, out);
}

SampleMatrix read_matrix_binary(std::istream& in) {
  if (get<std::uint32_t>(in) != kMagic) throw std::runtime_error("matrix binary: bad magic");
  if (get<std::uint32_t>(in) != kVersion) throw std::runtime_error("matrix binary: bad version");
  SampleMatrix m;
  m.n = static_cast<long>(get<std::uint64_t>(in));
  m.d = static_cast<int>(get<std::uint64_t>(in));
  m.tag.kind = static_cast<DistKind>(get<std::uint32_t>(in));
  get<std::uint32_t>(in);
  m.seed = get<std::uint64_t>(in);
  if (m.n < 0 || m.d < 1) throw std::runtime_error("matrix binary: bad shape");
  m.values.resize(static_cast<std::size_t>(m.n) * m.d);
  in.read(reinterpret_cast<char*>(m.values.data()),
          static_cast<std::streamsize>(m.values.size() * sizeof(double)));
  if (!in) throw std::runtime_error("matrix binary: truncated body");
  return m;
}

SampleMatrix read_matrix_binary_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_matrix_binary(in);
}

void write_matrix_csv(const SampleMatrix& m, std::ostream& out) {
  out << "# rss-matrix n=" << m.n << " d=" << m.d << " tag=" << dist_kind_name(m.tag.kind)
      << " seed=" << m.seed << "\n";
  char buf[64];
  for (long i = 0; i < m.n; ++i) {
    const double* row = m.row(i);
    for (int j = 0; j < m.d; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[j]);
      out << buf << (j + 1 == m.d ? '\n' : ',');
    }
  }
  if (!out) throw std::runtime_error("matrix csv: write failed");
}

SampleMatrix read_matrix_csv(std::istream& in) {
  SampleMatrix m;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!saw_header && line.rfind("# rss-matrix", 0) == 0) {
        saw_header = true;
        std::istringstream hs(line);
        std::string tok;
        while (hs >> tok) {
          if (tok.rfind("seed=", 0) == 0) m.seed = std::stoull(tok.substr(5));
          if (tok.rfind("tag=", 0) == 0) {
            for (DistKind k : {DistKind::standard_normal, DistKind::affine_normal,
                               DistKind::containment, DistKind::quantized}) {
              if (dist_kind_name(k) == tok.substr(4)) m.tag.kind = k;
            }
          }
        }
      }
      continue;
    }
    std::istringstream ls(line);
    std::string cell;
    int cols = 0;
    while (std::getline(ls, cell, ',')) {
      m.values.push_back(std::stod(cell));
      ++cols;
    }
    if (m.d == 0) {
      m.d = cols;
    } else if (cols != m.d) {
      throw std::runtime_error("matrix csv: ragged row");
    }
    ++m.n;
  }
  if (m.n == 0 || m.d == 0) throw std::runtime_error("matrix csv: no data rows");
  return m;
}

SampleMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::uint32_t head = 0;
  in.read(reinterpret_cast<char*>(&head), sizeof(head));
  in.clear();
  in.seekg(0);
  if (in.gcount() == sizeof(head) && head == kMagic) return read_matrix_binary(in);
  return read_matrix_csv(in);
}

}  // namespace rss
