#include "corospec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace corospec {

Spectrum Spectrum::from_values(std::vector<double> values, double group_tol) {
    std::sort(values.begin(), values.end());
    Spectrum s;
    s.values_ = std::move(values);
    size_t i = 0;
    while (i < s.values_.size()) {
        size_t j = i + 1;
        double sum = s.values_[i];
        // Chain by gap: successive eigenvalues within group_tol share a group.
        while (j < s.values_.size() && s.values_[j] - s.values_[j - 1] <= group_tol) {
            sum += s.values_[j];
            ++j;
        }
        s.groups_.push_back({sum / double(j - i), int(j - i)});
        i = j;
    }
    return s;
}

double Spectrum::spectral_radius() const {
    if (values_.empty()) return 0.0;
    return std::max(std::fabs(values_.front()), std::fabs(values_.back()));
}

SpectraComparison spectra_equal(const Spectrum& s1, const Spectrum& s2, double tol) {
    if (s1.size() != s2.size())
        return {false, std::numeric_limits<double>::infinity()};
    double dev = 0.0;
    for (int i = 0; i < s1.size(); ++i)
        dev = std::max(dev, std::fabs(s1.eigenvalues()[i] - s2.eigenvalues()[i]));
    return {dev <= tol, dev};
}

} // namespace corospec
