#ifndef NDSORT_IO_HPP
#define NDSORT_IO_HPP

#include "ndsort/core.hpp"

#include <filesystem>
#include <istream>
#include <ostream>

namespace ndsort {

/// Population text format: one solution per line, objectives separated by
/// commas. Lines starting with '#' are comments; a `# n=<N> m=<M>` comment
/// declares dimensions that are cross-checked against the data. Blank lines
/// are ignored. Solution ids are 0-based data-line indices.
ObjectiveMatrix parse_population(std::istream& in);
ObjectiveMatrix parse_population(const std::filesystem::path& path);

void write_population(std::ostream& out, const ObjectiveMatrix& matrix);
void write_population(const std::filesystem::path& path, const ObjectiveMatrix& matrix);

/// CSV with header `id,rank`, ids ascending.
void write_ranking(std::ostream& out, const RankAssignment& ranks);
void write_ranking(const std::filesystem::path& path, const RankAssignment& ranks);

RankAssignment parse_ranking(std::istream& in);
RankAssignment parse_ranking(const std::filesystem::path& path);

} // namespace ndsort

#endif
