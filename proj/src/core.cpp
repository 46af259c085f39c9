#include "contfit/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "contfit/rng.hpp"

namespace contfit {

namespace {

double rect1d(double t) {
    double a = std::abs(t);
    if (a < 0.5) return 1.0;
    if (a > 0.5) return 0.0;
    return 0.5;
}

} // namespace

double rect2d(double x, double y) {
    return rect1d(x - 1.5) * rect1d(y - 1.5);
}

void SampleSet::validate() const {
    if (coords.empty()) throw std::invalid_argument("SampleSet: empty");
    if (coords.size() != values.size())
        throw std::invalid_argument("SampleSet: coords/values length mismatch");
    if (has_split()) {
        if (train_idx.empty() || val_idx.empty())
            throw std::invalid_argument("SampleSet: split present but one side is empty");
        std::vector<char> seen(size(), 0);
        for (auto part : {&train_idx, &val_idx}) {
            for (std::size_t i : *part) {
                if (i >= size()) throw std::invalid_argument("SampleSet: split index out of range");
                if (seen[i]) throw std::invalid_argument("SampleSet: split sets overlap");
                seen[i] = 1;
            }
        }
        if (train_idx.size() + val_idx.size() != size())
            throw std::invalid_argument("SampleSet: split does not cover all samples");
    }
}

SampleSet SampleSet::subset(const std::vector<std::size_t>& idx) const {
    SampleSet out;
    out.coords.reserve(idx.size());
    out.values.reserve(idx.size());
    for (std::size_t i : idx) {
        out.coords.push_back(coords.at(i));
        out.values.push_back(values.at(i));
    }
    return out;
}

SampleSet SampleSet::train_subset() const {
    if (!has_split()) throw std::invalid_argument("SampleSet: no split present");
    return subset(train_idx);
}

SampleSet SampleSet::val_subset() const {
    if (!has_split()) throw std::invalid_argument("SampleSet: no split present");
    return subset(val_idx);
}

void EvalGrid::validate() const {
    if (!(x_min < x_max) || !(y_min < y_max))
        throw std::invalid_argument("EvalGrid: extent must satisfy min < max");
    if (n_x < 2 || n_y < 2)
        throw std::invalid_argument("EvalGrid: resolutions must be >= 2");
    if (!truth.empty() && truth.size() != count())
        throw std::invalid_argument("EvalGrid: truth size does not match resolution");
}

std::vector<Vec2> EvalGrid::coords() const {
    validate();
    std::vector<Vec2> out;
    out.reserve(count());
    for (int iy = 0; iy < n_y; ++iy)
        for (int ix = 0; ix < n_x; ++ix)
            out.push_back(point(iy, ix));
    return out;
}

void EvalGrid::fill_truth(const ScalarField& target) {
    validate();
    truth.resize(count());
    std::size_t k = 0;
    for (int iy = 0; iy < n_y; ++iy)
        for (int ix = 0; ix < n_x; ++ix, ++k) {
            Vec2 p = point(iy, ix);
            truth[k] = target(p[0], p[1]);
        }
}

int EvalGrid::nearest_row(double y) const {
    int iy = static_cast<int>(std::lround((y - y_min) / dy()));
    return std::clamp(iy, 0, n_y - 1);
}

SampleSet gen_samples(std::size_t n, std::uint64_t seed, const ScalarField& target) {
    if (n == 0) throw std::invalid_argument("gen_samples: n must be >= 1");
    SplitMix64 rng(seed);
    SampleSet s;
    s.coords.reserve(n);
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = rng.uniform(kDomainLo, kDomainHi);
        double y = rng.uniform(kDomainLo, kDomainHi);
        s.coords.push_back({x, y});
        s.values.push_back(target(x, y));
    }
    return s;
}

SampleSet split_samples(const SampleSet& s, double train_fraction, std::uint64_t seed) {
    s.validate();
    const std::size_t n = s.size();
    const auto n_train = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
    if (n_train == 0 || n_train >= n)
        throw std::invalid_argument("split_samples: fraction leaves an empty partition");

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    SplitMix64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        std::size_t j = rng.next_below(i + 1);
        std::swap(perm[i], perm[j]);
    }

    SampleSet out = s;
    out.train_idx.assign(perm.begin(), perm.begin() + n_train);
    out.val_idx.assign(perm.begin() + n_train, perm.end());
    std::sort(out.train_idx.begin(), out.train_idx.end());
    std::sort(out.val_idx.begin(), out.val_idx.end());
    return out;
}

double nrmse(const std::vector<double>& predicted, const std::vector<double>& truth) {
    if (predicted.size() != truth.size())
        throw std::invalid_argument("nrmse: length mismatch");
    if (truth.empty()) throw std::invalid_argument("nrmse: empty input");
    double err2 = 0.0, ref2 = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        double d = predicted[i] - truth[i];
        err2 += d * d;
        ref2 += truth[i] * truth[i];
    }
    if (ref2 == 0.0) throw std::invalid_argument("nrmse: truth has zero norm");
    return std::sqrt(err2) / std::sqrt(ref2);
}

} // namespace contfit
