#include "fatcode/report.hpp"

#include "fatcode/errors.hpp"

namespace fatcode {

std::int64_t BoundReport::value(const std::string& key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return v;
  }
  throw Error(ErrorKind::IndexOutOfRange, "report has no value named " + key);
}

const char* statement_id_name(StatementId id) {
  switch (id) {
    case StatementId::CrudeBounds: return "CrudeBounds";
    case StatementId::HomBound: return "HomBound";
    case StatementId::BoundsCor: return "BoundsCor";
    case StatementId::MainTheoremI: return "MainTheoremI";
    case StatementId::MainTheoremII: return "MainTheoremII";
    case StatementId::FatPointSocle: return "FatPointSocle";
    case StatementId::RecursionLemma: return "RecursionLemma";
    case StatementId::CIBound: return "CIBound";
    case StatementId::SocleValueCI: return "SocleValueCI";
    case StatementId::CI22Equality: return "CI22Equality";
    case StatementId::BezoutCI: return "BezoutCI";
    case StatementId::N2Theorem: return "N2Theorem";
    case StatementId::ConjectureCI: return "ConjectureCI";
    case StatementId::OpenQuestion: return "OpenQuestion";
  }
  return "Unknown";
}

}  // namespace fatcode
