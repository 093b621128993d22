#ifndef MARGINLAB_DATASET_HPP
#define MARGINLAB_DATASET_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace marginlab {

enum class LabelKind { binary, multiclass };

// One labeled instance.  Binary labels are -1/+1; multiclass labels are
// 0..M-1.  Immutable after construction.
struct LabeledSample {
    std::vector<double> features;
    int label = 0;
};

// Immutable sample container.  All samples share feature dimension and
// label kind; n >= 1.
class Dataset {
public:
    Dataset(std::vector<LabeledSample> samples, LabelKind kind);

    const std::vector<LabeledSample>& samples() const { return samples_; }
    const LabeledSample& sample(std::size_t i) const { return samples_[i]; }
    std::size_t size() const { return samples_.size(); }
    std::size_t dimension() const { return dim_; }
    LabelKind label_kind() const { return kind_; }
    // Number of classes (2 for binary; max label + 1 for multiclass).
    int num_classes() const { return num_classes_; }

    double feature(std::size_t i, std::size_t j) const { return samples_[i].features[j]; }
    int label(std::size_t i) const { return samples_[i].label; }

    // Sample indices ordered by ascending value of feature j (computed once,
    // shared by the stump/interval sweeps).
    const std::vector<std::size_t>& sorted_indices(std::size_t feature) const;

private:
    std::vector<LabeledSample> samples_;
    LabelKind kind_;
    std::size_t dim_ = 0;
    int num_classes_ = 2;
    std::vector<std::vector<std::size_t>> sorted_by_feature_;
};

// Parses a CSV file: first column label, remaining columns features.
// `header` skips one leading row.  Throws ParseError (malformed field, with
// row number) or SchemaError (bad label for the kind, inconsistent width).
Dataset load_csv(const std::string& path, LabelKind kind, bool header = false);

// Same parser over an in-memory string (used by tests and the loader).
Dataset parse_csv(const std::string& text, LabelKind kind, bool header = false);

}  // namespace marginlab

#endif
