// Flat binary and CSV serialization for sample matrices.
//
// Binary layout (little endian):
//   magic  u32  'RSSM'
//   version u32  1
//   n      u64
//   d      u64
//   tag    u32  DistKind discriminant
//   pad    u32  0
//   seed   u64
//   body   n*d doubles, row major
//
// The CSV form is for inspection: a single '# rss-matrix ...' header comment
// followed by one row per line. Plain headerless CSV is also accepted on
// read (n and d inferred from the shape).

#ifndef RSS_MATRIX_IO_HPP
#define RSS_MATRIX_IO_HPP

#include <iosfwd>
#include <string>

#include "rss/core.hpp"

namespace rss {

void write_matrix_binary(const SampleMatrix& m, std::ostream& out);
void write_matrix_binary_file(const SampleMatrix& m, const std::string& path);
SampleMatrix read_matrix_binary(std::istream& in);
SampleMatrix read_matrix_binary_file(const std::string& path);

void write_matrix_csv(const SampleMatrix& m, std::ostream& out);
SampleMatrix read_matrix_csv(std::istream& in);
SampleMatrix read_matrix_file(const std::string& path);  // sniffs binary vs CSV

std::string dist_kind_name(DistKind k);

}  // namespace rss

#endif  // RSS_MATRIX_IO_HPP
