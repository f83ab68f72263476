#pragma once

#include <stdexcept>
#include <string>

namespace immlab {

enum class Errc {
  malformed_partition,
  empty_partition,
  size_out_of_range,
  index_out_of_range,
  cap_exceeded,
  size_mismatch,
  dimension_mismatch,
  empty_block_list,
  zero_gap,
  invalid_permutation,
  invalid_composition,
  degenerate_sample,
  schema_error,
  unknown_identity,
  internal,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::malformed_partition: return "MalformedPartition";
    case Errc::empty_partition: return "EmptyPartition";
    case Errc::size_out_of_range: return "SizeOutOfRange";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::empty_block_list: return "EmptyBlockList";
    case Errc::zero_gap: return "ZeroGap";
    case Errc::invalid_permutation: return "InvalidPermutation";
    case Errc::invalid_composition: return "InvalidComposition";
    case Errc::degenerate_sample: return "DegenerateSample";
    case Errc::schema_error: return "SchemaError";
    case Errc::unknown_identity: return "UnknownIdentity";
    case Errc::internal: return "InternalError";
  }
  return "Error";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-checkable code; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace immlab
