#pragma once

namespace conekit {

struct EvalResult {
    double value = 0.0;
    double abs_error = 0.0;
};

inline EvalResult operator+(EvalResult a, EvalResult b) {
    return {a.value + b.value, a.abs_error + b.abs_error};
}

inline EvalResult operator*(double s, EvalResult a) {
    return {s * a.value, (s < 0 ? -s : s) * a.abs_error};
}

} // namespace conekit
