//! Composite Simpson rule on uniform grids.

/// Composite Simpson sum over `values` sampled uniformly with spacing `h`.
///
/// `values.len() - 1` must be even and positive.
pub fn simpson(values: &[f64], h: f64) -> f64 {
    let n = values.len() - 1;
    debug_assert!(
        n >= 2 && n.is_multiple_of(2),
        "simpson needs an even panel count"
    );
    let mut odd = 0.0;
    let mut even = 0.0;
    for (i, v) in values.iter().enumerate().take(n).skip(1) {
        if i % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    h / 3.0 * (values[0] + values[n] + 4.0 * odd + 2.0 * even)
}

/// Simpson integral of `f` over `[a, b]` with `n` (even) panels.
pub fn simpson_fn(a: f64, b: f64, n: usize, f: impl Fn(f64) -> f64) -> f64 {
    let h = (b - a) / n as f64;
    let vals: Vec<f64> = (0..=n)
        .map(|i| f(if i == n { b } else { a + i as f64 * h }))
        .collect();
    simpson(&vals, h)
}
