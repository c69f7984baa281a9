#pragma once

#include <string>
#include <string_view>

#include "disclosure/instance.hpp"
#include "disclosure/partition.hpp"

namespace disclosure {

/// Instance document:
///   {"goods": m, "buyers": [[{"prob": "1/4", "values": ["1", ...]}, ...], ...]}
/// Rationals may be "p/q" strings, decimal strings or integers. Throws
/// ValidationError on malformed documents or invalid instances.
DiscreteInstance parse_instance(std::string_view text);

/// Canonical form (two-space indentation, keys in schema order, rationals in
/// lowest terms, trailing newline); parse_instance(serialize_instance(x))
/// reproduces x and canonical documents round-trip byte for byte.
std::string serialize_instance(const DiscreteInstance& inst);

/// Partition document: one entry per buyer, each a list of blocks of
/// one-based type indices, e.g. [[[1],[2,3]],[[1,2,3]]]. Blocks are
/// canonicalized; each buyer's entry must partition that buyer's types.
PartitionProfile parse_profile(std::string_view text, const DiscreteInstance& inst);
std::string serialize_profile(const PartitionProfile& profile);

/// Compact one-line form used in reports, e.g. "{1}{2,3} | {1,2,3}".
std::string profile_label(const PartitionProfile& profile);
std::string partition_label(const SetPartition& p);

}  // namespace disclosure
