#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssband {

struct InvalidRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InsufficientLevels : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A function represented by wavelet coefficients on levels j0..J.  Level j0
// holds the scaling coefficients alpha_k; by the usual convention the
// level-j0 row doubles as beta_{j0,k} where the estimators need it.
class CoefficientField {
  public:
    CoefficientField() = default;
    CoefficientField(int j0, int max_level)
        : j0_(j0), levels_(max_level - j0 + 1) {
        if (max_level < j0) throw InvalidRange("J < j0");
        for (int j = j0; j <= max_level; ++j)
            levels_[static_cast<std::size_t>(j - j0)].assign(
                std::size_t{1} << j, 0.0);
    }

    int j0() const { return j0_; }
    int max_level() const { return j0_ + static_cast<int>(levels_.size()) - 1; }

    const std::vector<double>& level(int j) const {
        check_level(j);
        return levels_[static_cast<std::size_t>(j - j0_)];
    }
    std::vector<double>& level(int j) {
        check_level(j);
        return levels_[static_cast<std::size_t>(j - j0_)];
    }
    const std::vector<double>& alpha() const { return level(j0_); }
    std::vector<double>& alpha() { return level(j0_); }

    double& coeff(int j, std::int64_t k) {
        return level(j)[static_cast<std::size_t>(k)];
    }
    double coeff(int j, std::int64_t k) const {
        return level(j)[static_cast<std::size_t>(k)];
    }

    bool is_zero() const;

  private:
    void check_level(int j) const {
        if (j < j0_ || j > max_level())
            throw InvalidRange("level " + std::to_string(j) +
                               " outside stored range");
    }
    int j0_ = 0;
    std::vector<std::vector<double>> levels_;
};

struct SmoothnessClass {
    double s = 1.0;
    double hoelder_bound = 1.0;  // M
    double epsilon = 0.5;
    int rho = 2;
    double s_max = 5.5;

    void validate() const;
};

// max(sup_k |alpha_k|, sup_{j>j0,k} 2^{j(s+1/2)} |beta_{j,k}|)
double holder_norm(const CoefficientField& f, double s);

// Same norm restricted to levels i..j; level j0 contributes sup|alpha_k|.
double truncated_norm(const CoefficientField& f, double s, int i, int j);

// ||f_{j, rho j}||_{C^s} >= eps * M for every window inside storage
// (only the first window when s == s_max).
bool is_self_similar(const CoefficientField& f, const SmoothnessClass& cls,
                     int j0);

// Variant with a per-level window width (rho_of_j >= 1), used to validate
// the weakly self-similar adversarial constructions.
bool is_self_similar_windowed(const CoefficientField& f, double s, double m,
                              double epsilon,
                              const std::function<int(int)>& rho_of_j, int j0);

// Coefficient projection that forces any field into the self-similar set:
// coefficients smaller than eps * M * 2^{-j(s+1/2)} are pushed out to that
// magnitude, keeping sign.
CoefficientField self_similar_projection(const CoefficientField& f,
                                         const SmoothnessClass& cls);

std::string field_to_json(const CoefficientField& f);
CoefficientField field_from_json(const std::string& text);

}  // namespace ssband
