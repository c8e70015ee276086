#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace crowdem {

// Generic m x k x k container indexed by (worker, true class, observed label).
// Classes and labels are 1-based in the public API, matching the data format.
struct Tensor3 {
    int workers = 0;
    int classes = 0;
    std::vector<double> v;

    Tensor3() = default;
    Tensor3(int m, int k, double fill = 0.0)
        : workers(m), classes(k), v(static_cast<std::size_t>(m) * k * k, fill) {}

    double& at(int worker, int truth, int label) {
        return v[(static_cast<std::size_t>(worker) * classes + (truth - 1)) * classes + (label - 1)];
    }
    double at(int worker, int truth, int label) const {
        return v[(static_cast<std::size_t>(worker) * classes + (truth - 1)) * classes + (label - 1)];
    }
    std::size_t size() const { return v.size(); }

    double inf_norm() const {
        double r = 0.0;
        for (double x : v) r = std::max(r, std::fabs(x));
        return r;
    }
    double frobenius_norm() const {
        double r = 0.0;
        for (double x : v) r += x * x;
        return std::sqrt(r);
    }
};

// Per-worker row-stochastic confusion probabilities. Entry (i, l, g) is the
// probability that worker i labels a class-l item as g. All entries are kept
// strictly inside (0, 1).
struct ConfusionTensor {
    Tensor3 t;

    ConfusionTensor() = default;
    ConfusionTensor(int m, int k) : t(m, k, k > 0 ? 1.0 / k : 0.0) {}

    int workers() const { return t.workers; }
    int classes() const { return t.classes; }
    double& at(int worker, int truth, int label) { return t.at(worker, truth, label); }
    double at(int worker, int truth, int label) const { return t.at(worker, truth, label); }

    // Throws std::invalid_argument unless every entry is in (0,1) and every
    // (worker, class) row sums to 1 within 1e-12.
    void validate() const;
};

// Running averages of posterior-weighted label indicators; the online
// algorithm's state. Valid states live in the open box (0,1)^{m*k*k}.
struct StatTensor {
    Tensor3 t;

    StatTensor() = default;
    StatTensor(int m, int k, double fill = 0.5) : t(m, k, fill) {}

    int workers() const { return t.workers; }
    int classes() const { return t.classes; }
    double& at(int worker, int truth, int label) { return t.at(worker, truth, label); }
    double at(int worker, int truth, int label) const { return t.at(worker, truth, label); }

    void validate() const;
};

// Per-item class responsibilities, rows summing to 1.
struct PosteriorMatrix {
    int items = 0;
    int classes = 0;
    std::vector<double> v;

    PosteriorMatrix() = default;
    PosteriorMatrix(int n, int k, double fill = 0.0)
        : items(n), classes(k), v(static_cast<std::size_t>(n) * k, fill) {}

    double& at(int item, int cls) { return v[static_cast<std::size_t>(item) * classes + (cls - 1)]; }
    double at(int item, int cls) const { return v[static_cast<std::size_t>(item) * classes + (cls - 1)]; }
    std::span<const double> row(int item) const {
        return {v.data() + static_cast<std::size_t>(item) * classes, static_cast<std::size_t>(classes)};
    }

    void validate() const;
};

}  // namespace crowdem
