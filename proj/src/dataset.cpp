#include "marginlab/dataset.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "marginlab/errors.hpp"

namespace marginlab {

Dataset::Dataset(std::vector<LabeledSample> samples, LabelKind kind)
    : samples_(std::move(samples)), kind_(kind) {
    if (samples_.empty()) throw SchemaError("dataset must contain at least one sample");
    dim_ = samples_[0].features.size();
    if (dim_ == 0) throw SchemaError("feature vector must be non-empty");
    int max_label = 0;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto& s = samples_[i];
        if (s.features.size() != dim_)
            throw SchemaError("inconsistent feature dimension at sample " + std::to_string(i));
        if (kind_ == LabelKind::binary) {
            if (s.label != -1 && s.label != 1)
                throw SchemaError("binary label must be -1 or +1, got " +
                                  std::to_string(s.label) + " at sample " + std::to_string(i));
        } else {
            if (s.label < 0)
                throw SchemaError("multiclass label must be >= 0, got " +
                                  std::to_string(s.label) + " at sample " + std::to_string(i));
            max_label = std::max(max_label, s.label);
        }
    }
    num_classes_ = kind_ == LabelKind::binary ? 2 : max_label + 1;
    sorted_by_feature_.resize(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        auto& idx = sorted_by_feature_[j];
        idx.resize(samples_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return samples_[a].features[j] < samples_[b].features[j];
        });
    }
}

const std::vector<std::size_t>& Dataset::sorted_indices(std::size_t feature) const {
    return sorted_by_feature_.at(feature);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& field, std::size_t row, std::size_t col) {
    const char* begin = field.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    while (end && *end == ' ') ++end;
    if (end == begin || (end && *end != '\0'))
        throw ParseError("row " + std::to_string(row) + ": cannot parse field " +
                         std::to_string(col) + " ('" + field + "') as a number");
    return v;
}

int parse_label(const std::string& field, LabelKind kind, std::size_t row) {
    double v = parse_double(field, row, 0);
    int label = static_cast<int>(v);
    if (static_cast<double>(label) != v)
        throw SchemaError("row " + std::to_string(row) + ": label '" + field +
                          "' is not an integer");
    if (kind == LabelKind::binary && label != -1 && label != 1)
        throw SchemaError("row " + std::to_string(row) + ": binary label must be -1 or +1, got " +
                          field);
    if (kind == LabelKind::multiclass && label < 0)
        throw SchemaError("row " + std::to_string(row) + ": multiclass label must be >= 0, got " +
                          field);
    return label;
}

}  // namespace

Dataset parse_csv(const std::string& text, LabelKind kind, bool header) {
    std::istringstream in(text);
    std::string line;
    std::vector<LabeledSample> samples;
    std::size_t row = 0;
    bool skip = header;
    while (std::getline(in, line)) {
        ++row;
        if (skip) {
            skip = false;
            continue;
        }
        if (line.empty() || line == "\r") continue;
        auto fields = split_fields(line);
        if (fields.size() < 2)
            throw SchemaError("row " + std::to_string(row) + ": need a label and at least one feature");
        LabeledSample s;
        s.label = parse_label(fields[0], kind, row);
        s.features.reserve(fields.size() - 1);
        for (std::size_t c = 1; c < fields.size(); ++c)
            s.features.push_back(parse_double(fields[c], row, c));
        samples.push_back(std::move(s));
    }
    if (samples.empty()) throw SchemaError("no data rows found");
    return Dataset(std::move(samples), kind);
}

Dataset load_csv(const std::string& path, LabelKind kind, bool header) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), kind, header);
}

}  // namespace marginlab
