//! Small 1-D search primitives shared by the oracles and POM completions.

/// Golden-section maximization of f on [a, b]. Returns (argmax, max).
/// The bracket is assumed to contain a single local maximum.
pub(crate) fn golden_max(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..iters {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Largest t in [0, cap] with feasible(t), for monotone feasibility with
/// feasible(0). Doubles out to bracket the boundary, then bisects.
pub(crate) fn max_feasible(feasible: &dyn Fn(f64) -> bool, cap: f64, iters: usize) -> f64 {
    if !feasible(0.0) {
        return 0.0;
    }
    let mut hi = 1e-3_f64.min(cap);
    while hi < cap && feasible(hi) {
        hi = (hi * 2.0).min(cap);
    }
    if feasible(hi) {
        return hi;
    }
    let mut lo = if hi <= 1e-3 { 0.0 } else { hi / 2.0 };
    for _ in 0..iters {
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_peak() {
        let f = |x: f64| -(x - 0.3).powi(2);
        let (x, _) = golden_max(&f, 0.0, 1.0, 80);
        assert!((x - 0.3).abs() < 1e-10);
    }

    #[test]
    fn max_feasible_finds_boundary() {
        let feasible = |t: f64| t <= 0.437;
        let t = max_feasible(&feasible, 10.0, 80);
        assert!((t - 0.437).abs() < 1e-10);
    }

    #[test]
    fn max_feasible_handles_tiny_and_capped_regions() {
        let tiny = |t: f64| t <= 1e-5;
        assert!((max_feasible(&tiny, 10.0, 80) - 1e-5).abs() < 1e-12);
        let all = |_: f64| true;
        assert_eq!(max_feasible(&all, 2.5, 80), 2.5);
        let none = |t: f64| t <= 0.0;
        assert_eq!(max_feasible(&none, 2.5, 80), 0.0);
    }
}
