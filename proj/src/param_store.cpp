#include "egoloc/param_store.hpp"

#include <cmath>

#include "egoloc/errors.hpp"

namespace egoloc {

Matrix& ParamStore::add(const std::string& name, Matrix init) {
    if (entries_.count(name)) {
        throw ContractError("ParamStore: duplicate parameter '" + name + "'");
    }
    ParamEntry e;
    e.grad = Matrix(init.rows(), init.cols());
    e.m = Matrix(init.rows(), init.cols());
    e.v = Matrix(init.rows(), init.cols());
    e.value = std::move(init);
    return entries_.emplace(name, std::move(e)).first->second.value;
}

ParamEntry& ParamStore::entry(const std::string& name) {
    auto it = entries_.find(name);
    if (it == entries_.end()) {
        throw ContractError("ParamStore: unknown parameter '" + name + "'");
    }
    return it->second;
}

const ParamEntry& ParamStore::entry(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) {
        throw ContractError("ParamStore: unknown parameter '" + name + "'");
    }
    return it->second;
}

void ParamStore::zero_grads() {
    for (auto& [name, e] : entries_) e.grad.fill(0.0);
}

bool ParamStore::operator==(const ParamStore& other) const {
    if (step_ != other.step_ || entries_.size() != other.entries_.size()) return false;
    auto it = entries_.begin();
    auto jt = other.entries_.begin();
    for (; it != entries_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        const ParamEntry& a = it->second;
        const ParamEntry& b = jt->second;
        if (!(a.value == b.value && a.grad == b.grad && a.m == b.m && a.v == b.v))
            return false;
    }
    return true;
}

void AdamConfig::validate() const {
    if (!(learning_rate > 0.0)) throw ConfigError("adam: learning_rate must be > 0");
    if (!(beta1 > 0.0 && beta1 < 1.0)) throw ConfigError("adam: beta1 must be in (0, 1)");
    if (!(beta2 > 0.0 && beta2 < 1.0)) throw ConfigError("adam: beta2 must be in (0, 1)");
    if (!(epsilon > 0.0)) throw ConfigError("adam: epsilon must be > 0");
}

void adam_step(ParamStore& store, const AdamConfig& cfg) {
    cfg.validate();
    for (auto& [name, e] : store.entries_) {
        if (!e.grad.all_finite()) {
            throw NumericError("adam_step: non-finite gradient in parameter '" + name + "'");
        }
    }
    store.step_ += 1;
    const double t = static_cast<double>(store.step_);
    const double bc1 = 1.0 - std::pow(cfg.beta1, t);
    const double bc2 = 1.0 - std::pow(cfg.beta2, t);
    for (auto& [name, e] : store.entries_) {
        double* theta = e.value.data();
        double* g = e.grad.data();
        double* m = e.m.data();
        double* v = e.v.data();
        const int n = e.value.size();
        for (int i = 0; i < n; ++i) {
            m[i] = cfg.beta1 * m[i] + (1.0 - cfg.beta1) * g[i];
            v[i] = cfg.beta2 * v[i] + (1.0 - cfg.beta2) * g[i] * g[i];
            const double m_hat = m[i] / bc1;
            const double v_hat = v[i] / bc2;
            theta[i] -= cfg.learning_rate * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
            g[i] = 0.0;
        }
    }
}

}  // namespace egoloc
