#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ssband {

struct UnknownFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Quadrature-mirror filter pair of a compactly supported orthonormal
// family.  phi and psi are supported on [1-K, K]; the lowpass rows are
// stored in the usual [0, 2N-1] indexing and shifted by K-1 wherever
// spatial coordinates matter.
struct FilterBank {
    std::string family_name;
    int vanishing_moments = 0;  // N
    int support = 0;            // K
    std::vector<double> lowpass;
    std::vector<double> highpass;  // g_k = (-1)^k h_{L-1-k}

    int length() const { return static_cast<int>(lowpass.size()); }
};

// family in {"daubechies", "symlet", "haar-test"}; daubechies/symlet
// support N = 2..20, haar-test only N = 1.  haar-test is a degenerate
// fixture: it fails the smoothness assumptions and is rejected by the
// band construction gate.
FilterBank load_filter(const std::string& family, int vanishing_moments);

}  // namespace ssband
