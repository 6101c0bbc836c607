#include "susynu/spectrum.hpp"

namespace susynu {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::NuQuantization: return "nu-quantization";
    case Provenance::Oracle: return "oracle";
  }
  return "unknown";
}

}  // namespace susynu
