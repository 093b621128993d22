#include "marginlab/serialize.hpp"

#include <cstdio>

#include "marginlab/errors.hpp"

namespace marginlab {

nlohmann::json hypothesis_to_json(const BaseHypothesis& h) {
    nlohmann::json j;
    if (const Stump* s = h.as_stump()) {
        j["kind"] = "stump";
        j["feature"] = s->feature;
        j["threshold"] = s->threshold;
        j["orientation"] = s->orientation;
    } else if (const IntervalHypothesis* iv = h.as_interval()) {
        j["kind"] = "interval";
        j["feature"] = iv->feature;
        j["lo"] = iv->lo;
        j["hi"] = iv->hi;
        j["orientation"] = iv->orientation;
    } else {
        j["kind"] = "tabulated";
        j["values"] = h.as_tabulated()->values;
    }
    return j;
}

BaseHypothesis hypothesis_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "stump")
        return BaseHypothesis(Stump{j.at("feature").get<std::size_t>(),
                                    j.at("threshold").get<double>(),
                                    j.at("orientation").get<int>()});
    if (kind == "interval")
        return BaseHypothesis(IntervalHypothesis{j.at("feature").get<std::size_t>(),
                                                 j.at("lo").get<double>(), j.at("hi").get<double>(),
                                                 j.at("orientation").get<int>()});
    if (kind == "tabulated")
        return BaseHypothesis(Tabulated{j.at("values").get<std::vector<double>>()});
    throw SchemaError("unknown hypothesis kind: " + kind);
}

nlohmann::json classifier_to_json(const VotingClassifier& f) {
    nlohmann::json j;
    j["hypotheses"] = nlohmann::json::array();
    for (const auto& h : f.hypotheses()) j["hypotheses"].push_back(hypothesis_to_json(h));
    j["weights"] = f.weights();
    return j;
}

VotingClassifier classifier_from_json(const nlohmann::json& j) {
    std::vector<BaseHypothesis> hyps;
    for (const auto& jh : j.at("hypotheses")) hyps.push_back(hypothesis_from_json(jh));
    return VotingClassifier(std::move(hyps), j.at("weights").get<std::vector<double>>());
}

std::string trace_to_json(const BoostingTrace& trace) {
    nlohmann::json j;
    j["n"] = trace.n;
    j["stop_reason"] = trace.stop_reason;
    j["rounds"] = nlohmann::json::array();
    for (const auto& r : trace.rounds) {
        nlohmann::json jr;
        jr["hypothesis"] = hypothesis_to_json(r.hypothesis);
        jr["e_raw"] = r.error_raw;
        jr["e"] = r.error;
        jr["alpha"] = r.alpha;
        jr["z"] = r.z;
        jr["clamped"] = r.clamped;
        j["rounds"].push_back(jr);
    }
    j["final_classifier"] = classifier_to_json(trace.prefix_classifier());
    return j.dump(2);
}

BoostingTrace trace_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad trace JSON: ") + e.what());
    }
    try {
        BoostingTrace trace;
        trace.n = j.at("n").get<int>();
        trace.stop_reason = j.value("stop_reason", "");
        for (const auto& jr : j.at("rounds")) {
            BoostRound round{hypothesis_from_json(jr.at("hypothesis")),
                             jr.at("e_raw").get<double>(),
                             jr.at("e").get<double>(),
                             jr.at("alpha").get<double>(),
                             jr.at("z").get<double>(),
                             jr.at("clamped").get<bool>()};
            trace.rounds.push_back(std::move(round));
        }
        if (trace.rounds.empty()) throw SchemaError("trace holds no rounds");
        return trace;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad trace JSON: ") + e.what());
    }
}

nlohmann::json complexity_to_json(const ComplexityEstimate& est) {
    nlohmann::json j;
    j["value"] = est.value;
    j["std_error"] = est.std_error;
    j["draws"] = est.draws;
    j["kind"] = to_string(est.kind);
    j["seed"] = est.seed;
    return j;
}

std::string bound_report_to_json(const BoundReport& report, const std::string& complexity_source) {
    nlohmann::json j;
    j["variant"] = report.variant;
    j["bound_value"] = report.bound_value;
    j["terms"] = report.terms;
    j["delta"] = report.delta;
    j["t"] = report.t;
    j["n"] = report.n;
    j["confidence"] = report.confidence;
    j["complexity"] = complexity_to_json(report.complexity);
    j["complexity_source"] = complexity_source;
    return j.dump(2);
}

std::string bound_curve_to_csv(const BoundReport& report) {
    std::string out = "delta,bound\n";
    char buf[80];
    for (const auto& [delta, value] : report.curve) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", delta, value);
        out += buf;
    }
    return out;
}

}  // namespace marginlab
