#include "ssband/filters.hpp"

#include "ssband/filter_tables.hpp"

namespace ssband {

namespace {

FilterBank make_bank(const std::string& family, int order, const double* coeff,
                     int len) {
    FilterBank bank;
    bank.family_name = family;
    bank.vanishing_moments = order;
    // support [0, 2N-1] re-centred as [1-K, K] with K = N
    bank.support = order;
    bank.lowpass.assign(coeff, coeff + len);
    bank.highpass.resize(len);
    for (int k = 0; k < len; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        bank.highpass[k] = sign * bank.lowpass[len - 1 - k];
    }
    return bank;
}

template <std::size_t M>
FilterBank from_table(const std::string& family,
                      const tables::FilterRow (&rows)[M], int order) {
    for (const auto& row : rows) {
        if (row.order == order)
            return make_bank(family, order, row.coeff, row.len);
    }
    throw UnsupportedOrder(family + " order " + std::to_string(order) +
                           " is outside the supported range 2..20");
}

}  // namespace

FilterBank load_filter(const std::string& family, int vanishing_moments) {
    if (family == "haar-test") {
        if (vanishing_moments != 1)
            throw UnsupportedOrder("haar-test supports only N = 1");
        return make_bank(family, 1, tables::kHaar, 2);
    }
    if (family == "daubechies")
        return from_table(family, tables::kDaubechies, vanishing_moments);
    if (family == "symlet")
        return from_table(family, tables::kSymlets, vanishing_moments);
    throw UnknownFamily("unknown wavelet family: " + family);
}

}  // namespace ssband
