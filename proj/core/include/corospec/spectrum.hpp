#pragma once

#include <vector>

namespace corospec {

struct EigenGroup {
    double value;     // representative (mean of the grouped eigenvalues)
    int multiplicity; // >= 1
};

// Multiset of real eigenvalues, ascending, with tolerance-grouped
// multiplicities.
class Spectrum {
public:
    static constexpr double kGroupTol = 1e-6;

    static Spectrum from_values(std::vector<double> values, double group_tol = kGroupTol);

    const std::vector<double>& eigenvalues() const { return values_; } // ascending
    const std::vector<EigenGroup>& groups() const { return groups_; }
    int size() const { return static_cast<int>(values_.size()); }

    double min() const { return values_.front(); }
    double max() const { return values_.back(); }
    double spectral_radius() const;

private:
    std::vector<double> values_;
    std::vector<EigenGroup> groups_;
};

struct SpectraComparison {
    bool equal = false;
    double max_deviation = 0.0; // +inf when sizes differ
};

// Sorted elementwise comparison at the given tolerance.
SpectraComparison spectra_equal(const Spectrum& s1, const Spectrum& s2, double tol);

} // namespace corospec
