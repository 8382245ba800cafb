#include "zsr/report.hpp"

namespace zsr {

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["theorem"] = theorem;
  j["scanned"] = scanned;
  j["failures"] = failures;
  j["rows"] = rows;
  return j;
}

}  // namespace zsr
