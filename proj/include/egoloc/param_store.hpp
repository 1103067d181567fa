#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "egoloc/matrix.hpp"

namespace egoloc {

// One named parameter tensor with its gradient accumulator and Adam moments.
// All four matrices stay shape-identical.
struct ParamEntry {
    Matrix value;
    Matrix grad;
    Matrix m;  // first moment
    Matrix v;  // second moment, element-wise non-negative
};

// Named parameter tensors plus optimizer state. Single writer: the training
// loop owns it exclusively; inference reads a snapshot.
class ParamStore {
public:
    Matrix& add(const std::string& name, Matrix init);

    bool has(const std::string& name) const { return entries_.count(name) != 0; }
    Matrix& value(const std::string& name) { return entry(name).value; }
    const Matrix& value(const std::string& name) const { return entry(name).value; }
    Matrix& grad(const std::string& name) { return entry(name).grad; }
    const Matrix& grad(const std::string& name) const { return entry(name).grad; }

    ParamEntry& entry(const std::string& name);
    const ParamEntry& entry(const std::string& name) const;

    // Ordered by name, so every walk over the store is deterministic.
    std::map<std::string, ParamEntry>& entries() { return entries_; }
    const std::map<std::string, ParamEntry>& entries() const { return entries_; }

    void zero_grads();
    int64_t step() const { return step_; }
    void set_step(int64_t s) { step_ = s; }

    bool operator==(const ParamStore& other) const;

private:
    std::map<std::string, ParamEntry> entries_;
    int64_t step_ = 0;

    friend void adam_step(ParamStore&, const struct AdamConfig&);
};

struct AdamConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    void validate() const;
};

// One optimizer update over every parameter, from the accumulated gradients.
// Clears gradients and bumps the step counter. A NaN gradient raises
// NumericError naming the offending parameter.
void adam_step(ParamStore& store, const AdamConfig& cfg);

}  // namespace egoloc
