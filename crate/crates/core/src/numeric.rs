//! Small floating-point helpers shared by the methods.

/// Compensated (Neumaier) summation.
///
/// Sums like `n * (1/n)` come out exact for the matrix orders used here,
/// which the consistency checks rely on.
pub fn sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut total = 0.0_f64;
    let mut compensation = 0.0_f64;
    for x in values {
        let t = total + x;
        if total.abs() >= x.abs() {
            compensation += (total - t) + x;
        } else {
            compensation += (x - t) + total;
        }
        total = t;
    }
    total + compensation
}

/// Rounds half away from zero to `decimals` places. For display only.
pub fn round_to(value: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (value * scale).round() / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_is_exact_for_unit_fractions() {
        for n in 2..=40usize {
            let part = 1.0 / n as f64;
            let naive: f64 = std::iter::repeat_n(part, n).sum();
            let compensated = sum(std::iter::repeat_n(part, n));
            assert_eq!(compensated, 1.0, "n = {n} (naive gave {naive})");
        }
    }

    #[test]
    fn rounding() {
        assert_eq!(round_to(0.2496, 3), 0.25);
        assert_eq!(round_to(1.9428, 2), 1.94);
        assert_eq!(round_to(2.0 / 3.0, 2), 0.67);
        assert_eq!(round_to(-0.125, 1), -0.1);
    }
}
