#pragma once

#include "relosc/coeffs.hpp"

#include <string>
#include <utility>
#include <vector>

namespace relosc {

/// Mode-independent parse of a coefficient file. Values are held as exact
/// rationals regardless of the declared mode ("p/q" strings, decimals and
/// bare JSON numbers are all exact); materialization converts as needed.
struct RawCoefficientData {
    int n = 0;
    std::vector<Rational> a; // 0..N
    std::vector<Rational> b; // 1..N
    Mode declared_mode = Mode::exact;
};

RawCoefficientData parse_coefficients_json(const std::string& text);
RawCoefficientData load_coefficients_file(const std::string& path);

/// Pair files hold {"j0": {...}, "j1": {...}} with equal N.
std::pair<RawCoefficientData, RawCoefficientData> parse_pair_json(const std::string& text);
std::pair<RawCoefficientData, RawCoefficientData> load_pair_file(const std::string& path);

std::string coefficients_to_json(const RawCoefficientData& raw);
std::string pair_to_json(const RawCoefficientData& j0, const RawCoefficientData& j1);

template <ScalarType S>
CoeffPtr<S> materialize(const RawCoefficientData& raw, int zero_band_exp = -40) {
    std::vector<S> a, b;
    a.reserve(raw.a.size());
    b.reserve(raw.b.size());
    for (const auto& v : raw.a) a.push_back(scalar_from_rational<S>(v));
    for (const auto& v : raw.b) b.push_back(scalar_from_rational<S>(v));
    return make_coefficients<S>(raw.n, std::move(a), std::move(b), zero_band_exp);
}

inline RawCoefficientData to_raw(const Coefficients<Rational>& c) {
    return RawCoefficientData{c.n_right, c.a_seq, c.b_seq, Mode::exact};
}
inline RawCoefficientData to_raw(const Coefficients<ScaledFloat>& c) {
    RawCoefficientData raw;
    raw.n = c.n_right;
    raw.declared_mode = Mode::floating;
    for (const auto& v : c.a_seq) raw.a.push_back(to_rational(v));
    for (const auto& v : c.b_seq) raw.b.push_back(to_rational(v));
    return raw;
}

} // namespace relosc
