// JSON serialization for models, certificates, verdicts and reports, as
// emitted and consumed by the command-line tool.  Every object carries
// "schema": 1; parsers reject unknown fields and unknown schema values.
#pragma once

#include <string>

#include "wqoim/antichains.hpp"
#include "wqoim/containment.hpp"
#include "wqoim/decompose.hpp"
#include "wqoim/dichotomy.hpp"

namespace wqoim {

std::string model_to_json(const ContainmentModel& m);
ContainmentModel model_from_json(const std::string& text);

std::string k4hat_cert_to_json(const K4HatCertificate& cert);
K4HatCertificate k4hat_cert_from_json(const std::string& text);

std::string gem_cert_to_json(const GemCertificate& cert);
GemCertificate gem_cert_from_json(const std::string& text);

std::string verdict_to_json(const WqoVerdict& v, const FilterReport& filter);

std::string incomparability_report_to_json(const IncomparabilityReport& r);

}  // namespace wqoim
