#pragma once

#include <optional>
#include <string>

#include "rtl/config.hpp"
#include "rtl/ramsey.hpp"
#include "rtl/witness.hpp"

namespace rtl {

/// Self-contained re-checkable record for an exact table value: a verified
/// lower witness at claimed_r - 1 and the edge-counting test at claimed_r,
/// with every formula the upper half trusts listed.
struct Certificate {
  enum class Status { Complete, Partial };
  TreeSpec a, b;
  long long claimed_r = 0;
  RamseyResult table;
  std::optional<VerifiedWitness> lower;
  UpperCert upper;
  Status status = Status::Partial;
  std::string failing;  // "", "upper", "lower", "upper+lower"
};

/// The pair is not an Exact table entry, so no certificate can be built.
class NotCertifiable : public std::runtime_error {
 public:
  explicit NotCertifiable(const std::string& what) : std::runtime_error(what) {}
};

Certificate certify(const TreeSpec& a, const TreeSpec& b, const RunConfig& cfg = {});

}  // namespace rtl
