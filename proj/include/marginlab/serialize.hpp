#ifndef MARGINLAB_SERIALIZE_HPP
#define MARGINLAB_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "marginlab/boosting.hpp"
#include "marginlab/bounds.hpp"
#include "marginlab/hypothesis.hpp"
#include "marginlab/voting.hpp"

namespace marginlab {

nlohmann::json hypothesis_to_json(const BaseHypothesis& h);
BaseHypothesis hypothesis_from_json(const nlohmann::json& j);

nlohmann::json classifier_to_json(const VotingClassifier& f);
VotingClassifier classifier_from_json(const nlohmann::json& j);

// Trace with per-round (e_raw, e, alpha, z, clamped) records and the final
// normalized classifier.
std::string trace_to_json(const BoostingTrace& trace);
BoostingTrace trace_from_json(const std::string& text);

nlohmann::json complexity_to_json(const ComplexityEstimate& est);
std::string bound_report_to_json(const BoundReport& report, const std::string& complexity_source);

// (delta, bound(delta)) rows for plotting.
std::string bound_curve_to_csv(const BoundReport& report);

}  // namespace marginlab

#endif
