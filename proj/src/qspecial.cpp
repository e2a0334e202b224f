#include "qlid/qspecial.hpp"

namespace qlid {

std::string to_string(ZeroKind kind) {
  switch (kind) {
    case ZeroKind::Sq_eta: return "Sq_eta";
    case ZeroKind::Cq_eta: return "Cq_eta";
    case ZeroKind::Sinq: return "Sinq";
  }
  return "unknown";
}

ZeroKind parse_zero_kind(const std::string& text) {
  if (text == "Sq_eta" || text == "S") return ZeroKind::Sq_eta;
  if (text == "Cq_eta" || text == "C") return ZeroKind::Cq_eta;
  if (text == "Sinq" || text == "sin") return ZeroKind::Sinq;
  throw UsageError("unknown zero kind '" + text + "' (expected Sq_eta, Cq_eta or Sinq)");
}

}  // namespace qlid
