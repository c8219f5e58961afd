//! Overflow-safe powers of odds ratios.

/// Exponents above this are always evaluated in log space.
const DIRECT_POWER_MAX_EXPONENT: u64 = 64;
/// `|ln ratio| * n` above this would leave the normal `f64` range.
const LOG_MAGNITUDE_LIMIT: f64 = 700.0;

/// `ratio^n` for a positive finite `ratio`.
pub(crate) fn ratio_pow(ratio: f64, n: u64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let ln_ratio = ratio.ln();
    let n_f = n as f64;
    if n > DIRECT_POWER_MAX_EXPONENT || ln_ratio.abs() * n_f > LOG_MAGNITUDE_LIMIT {
        (ln_ratio * n_f).exp()
    } else {
        ratio.powi(n as i32)
    }
}

/// `(1 - r^i) / (1 - r^n)` with `r = exp(ln_ratio)`, for `0 < i < n` and `r != 1`.
///
/// Both branches stay finite for any exponent: for `r < 1` the quotient is
/// `expm1(i ln r) / expm1(n ln r)`; for `r > 1` the common factor `r^n` is pulled
/// out first, leaving `r^(i-n) * expm1(-i ln r) / expm1(-n ln r)`.
pub(crate) fn geometric_ratio(ln_ratio: f64, i: u64, n: u64) -> f64 {
    debug_assert!(0 < i && i < n);
    let (i, n) = (i as f64, n as f64);
    if ln_ratio < 0.0 {
        (i * ln_ratio).exp_m1() / (n * ln_ratio).exp_m1()
    } else {
        ((i - n) * ln_ratio).exp() * (-i * ln_ratio).exp_m1() / (-n * ln_ratio).exp_m1()
    }
}
