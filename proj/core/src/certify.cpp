#include "rtl/certify.hpp"

namespace rtl {

Certificate certify(const TreeSpec& a, const TreeSpec& b, const RunConfig& cfg) {
  Certificate cert;
  cert.a = a;
  cert.b = b;
  cert.table = ramsey_eval(a, b);
  if (cert.table.outcome == RamseyResult::Outcome::NotCovered)
    throw NotCertifiable("pair " + a.to_string() + " / " + b.to_string() +
                         " is not covered by the table");
  if (cert.table.outcome == RamseyResult::Outcome::Range)
    throw NotCertifiable("pair " + a.to_string() + " / " + b.to_string() +
                         " only has a range entry; a certificate needs an exact claim");
  cert.claimed_r = cert.table.value;
  cert.upper = upper_cert_21(a, b, cert.claimed_r);
  cert.lower = lower_witness(a, b, static_cast<int>(cert.claimed_r) - 1, cfg);

  bool upper_ok = cert.upper.constructible && cert.upper.holds;
  bool lower_ok = cert.lower.has_value();
  if (upper_ok && lower_ok) {
    cert.status = Certificate::Status::Complete;
  } else {
    cert.status = Certificate::Status::Partial;
    if (!upper_ok && !lower_ok)
      cert.failing = "upper+lower";
    else
      cert.failing = upper_ok ? "lower" : "upper";
  }
  return cert;
}

}  // namespace rtl
