#include "ssband/field.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace ssband {

bool CoefficientField::is_zero() const {
    for (const auto& lvl : levels_)
        for (double v : lvl)
            if (v != 0.0) return false;
    return true;
}

void SmoothnessClass::validate() const {
    if (!(s > 0.0 && s <= s_max))
        throw std::invalid_argument("need 0 < s <= s_max");
    if (!(hoelder_bound > 0.0)) throw std::invalid_argument("need M > 0");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("need epsilon in (0,1)");
    if (rho < 1) throw std::invalid_argument("need rho >= 1");
}

namespace {

double level_sup(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

double holder_norm(const CoefficientField& f, double s) {
    return truncated_norm(f, s, f.j0(), f.max_level());
}

double truncated_norm(const CoefficientField& f, double s, int i, int j) {
    if (i < f.j0() || j > f.max_level() || i > j)
        throw InvalidRange("truncated norm range outside stored levels");
    double norm = 0.0;
    if (i == f.j0()) {
        norm = level_sup(f.alpha());
        ++i;
    }
    for (int l = i; l <= j; ++l)
        norm = std::max(norm,
                        std::exp2(l * (s + 0.5)) * level_sup(f.level(l)));
    return norm;
}

bool is_self_similar(const CoefficientField& f, const SmoothnessClass& cls,
                     int j0) {
    cls.validate();
    if (f.max_level() < cls.rho * j0)
        throw InsufficientLevels("storage ends before the first window");
    const double bar = cls.epsilon * cls.hoelder_bound;
    const int top = f.max_level() / cls.rho;
    for (int j = j0; j <= top; ++j) {
        if (truncated_norm(f, cls.s, j, cls.rho * j) < bar) return false;
        if (cls.s == cls.s_max) break;  // only the first window is required
    }
    return true;
}

bool is_self_similar_windowed(const CoefficientField& f, double s, double m,
                              double epsilon,
                              const std::function<int(int)>& rho_of_j,
                              int j0) {
    const double bar = epsilon * m;
    for (int j = j0;; ++j) {
        const int rho = std::max(1, rho_of_j(j));
        if (static_cast<std::int64_t>(rho) * j > f.max_level()) {
            if (j == j0)
                throw InsufficientLevels("no window fits inside storage");
            break;
        }
        if (truncated_norm(f, s, j, rho * j) < bar) return false;
    }
    return true;
}

CoefficientField self_similar_projection(const CoefficientField& f,
                                         const SmoothnessClass& cls) {
    cls.validate();
    CoefficientField out = f;
    for (int j = f.j0(); j <= f.max_level(); ++j) {
        const double x =
            cls.epsilon * cls.hoelder_bound * std::exp2(-j * (cls.s + 0.5));
        for (double& b : out.level(j)) {
            if (b >= 0.0 && b <= x)
                b = x;
            else if (b >= -x && b < 0.0)
                b = -x;
        }
    }
    return out;
}

std::string field_to_json(const CoefficientField& f) {
    nlohmann::json j;
    j["j0"] = f.j0();
    j["J"] = f.max_level();
    j["alpha"] = f.alpha();
    nlohmann::json beta = nlohmann::json::object();
    for (int l = f.j0() + 1; l <= f.max_level(); ++l)
        beta[std::to_string(l)] = f.level(l);
    j["beta"] = beta;
    return j.dump();
}

CoefficientField field_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    CoefficientField f(j.at("j0").get<int>(), j.at("J").get<int>());
    f.alpha() = j.at("alpha").get<std::vector<double>>();
    if (f.alpha().size() != std::size_t{1} << static_cast<unsigned>(f.j0()))
        throw InvalidRange("alpha length mismatch");
    for (int l = f.j0() + 1; l <= f.max_level(); ++l) {
        auto row = j.at("beta").at(std::to_string(l)).get<std::vector<double>>();
        if (row.size() != std::size_t{1} << static_cast<unsigned>(l))
            throw InvalidRange("beta length mismatch at level " +
                               std::to_string(l));
        f.level(l) = std::move(row);
    }
    return f;
}

}  // namespace ssband
