// Plain-text input formats.  All files are whitespace-separated decimal
// numbers, strict column counts, '#' starts a comment line.
//
//   Riemann data: exactly two lines "rho v1 v2 p" (lower then upper state).
//   Partition:    one cell per line "volume rho0 theta0".
//   Profile:      first line "delta T", then one breakpoint per line
//                 "time value".

#ifndef ERATE_IO_HPP
#define ERATE_IO_HPP

#include <string>

#include "erate/profile.hpp"
#include "erate/riemann.hpp"

namespace erate {

RiemannData parse_riemann_file(const std::string& path);
RiemannData parse_riemann_text(const std::string& text, const std::string& origin);

PartitionSpec parse_partition_file(const std::string& path);
PartitionSpec parse_partition_text(const std::string& text, const std::string& origin);

EntropyProfile parse_profile_file(const std::string& path);
EntropyProfile parse_profile_text(const std::string& text, const std::string& origin);

// The data the bundled paper preset file reproduces.
RiemannData paper_riemann_data();

} // namespace erate

#endif
