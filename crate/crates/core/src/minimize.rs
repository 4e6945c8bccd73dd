//! Scalar minimization on `[0, 1]`: coarse grid bracketing, golden-section
//! refinement, and an optional derivative polish.

/// Points in the coarse bracketing grid.
pub const COARSE_POINTS: usize = 1001;

/// Points in the fallback grid used when the coarse grid is not unimodal.
pub const FINE_POINTS: usize = 1_000_001;

/// Final bracket width of the golden-section stage.
pub const GOLDEN_WIDTH: f64 = 1e-10;

/// A sampled function whose spread stays below this is treated as constant.
pub const FLAT_TOL: f64 = 1e-14;

/// Local minima within this distance of the grid minimum count as competitors.
const MULTIMODAL_BAND: f64 = 1e-9;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
}

/// Golden-section search on `[lo, hi]` down to bracket width `width`.
///
/// Returns the best point evaluated, which is always interior.
pub fn golden_section<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, width: f64) -> Minimum {
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a) > width {
        if fc < fd {
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
    if fc < fd {
        Minimum { x: c, value: fc }
    } else {
        Minimum { x: d, value: fd }
    }
}

fn grid(lo: f64, hi: f64, points: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (points - 1) as f64;
    (0..points).map(move |i| if i + 1 == points { hi } else { lo + step * i as f64 })
}

/// Brute-force scan over `points` equally spaced abscissae including both ends.
pub fn grid_scan<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, points: usize) -> Minimum {
    assert!(points >= 2);
    grid(lo, hi, points)
        .map(|x| Minimum { x, value: f(x) })
        .fold(Minimum { x: lo, value: f64::INFINITY }, |best, m| if m.value < best.value { m } else { best })
}

/// Outcome of [`minimize_unit_interval`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitMinimum {
    pub x: f64,
    pub value: f64,
    /// The sampled function was constant to [`FLAT_TOL`]; `x` is the 0.5 tie-break.
    pub flat: bool,
    /// The coarse grid showed competing local minima and the fine grid was used.
    pub used_fallback: bool,
}

/// Global minimum of `f` on `[0, 1]`.
///
/// `derivative`, when supplied, must be non-decreasing (convex `f`); its sign
/// change inside the refined bracket is bisected to sharpen `x` beyond what
/// function comparisons alone resolve near a flat minimum.
pub fn minimize_unit_interval<F>(f: F, derivative: Option<&dyn Fn(f64) -> f64>) -> UnitMinimum
where
    F: Fn(f64) -> f64,
{
    let xs: Vec<f64> = grid(0.0, 1.0, COARSE_POINTS).collect();
    let vs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();

    let (mut best_i, mut lo_v, mut hi_v) = (0, f64::INFINITY, f64::NEG_INFINITY);
    for (i, &v) in vs.iter().enumerate() {
        if v < lo_v {
            lo_v = v;
            best_i = i;
        }
        hi_v = hi_v.max(v);
    }
    if hi_v - lo_v <= FLAT_TOL {
        return UnitMinimum {
            x: 0.5,
            value: lo_v,
            flat: true,
            used_fallback: false,
        };
    }

    let used_fallback = count_local_minima(&vs, lo_v + MULTIMODAL_BAND) > 1;
    let (center, step, grid_best) = if used_fallback {
        let m = grid_scan(&f, 0.0, 1.0, FINE_POINTS);
        (m.x, 1.0 / (FINE_POINTS - 1) as f64, m)
    } else {
        (xs[best_i], 1.0 / (COARSE_POINTS - 1) as f64, Minimum { x: xs[best_i], value: vs[best_i] })
    };
    let lo = (center - step).max(0.0);
    let hi = (center + step).min(1.0);

    let mut best = golden_section(&f, lo, hi, GOLDEN_WIDTH);
    if grid_best.value <= best.value {
        best = grid_best;
    }

    if let Some(df) = derivative {
        if let Some(root) = bisect_increasing(df, lo, hi) {
            let value = f(root);
            let slack = 4.0 * f64::EPSILON * value.abs().max(f64::MIN_POSITIVE);
            if value <= best.value + slack {
                best = Minimum { x: root, value: value.min(best.value) };
            }
        }
    }

    UnitMinimum {
        x: best.x,
        value: best.value,
        flat: false,
        used_fallback,
    }
}

fn count_local_minima(vs: &[f64], ceiling: f64) -> usize {
    let n = vs.len();
    (0..n)
        .filter(|&i| {
            let left = i == 0 || vs[i] < vs[i - 1];
            let right = i + 1 == n || vs[i] < vs[i + 1];
            left && right && vs[i] <= ceiling
        })
        .count()
}

/// Root of a non-decreasing `g` on `[lo, hi]`, if it changes sign there.
fn bisect_increasing(g: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Option<f64> {
    let (glo, ghi) = (g(lo), g(hi));
    if !(glo < 0.0 && ghi > 0.0) {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_vertex() {
        let m = golden_section(|x| (x - 0.3).powi(2), 0.0, 1.0, 1e-10);
        assert!((m.x - 0.3).abs() < 1e-7);
    }

    #[test]
    fn unit_minimum_at_boundaries() {
        let left = minimize_unit_interval(|x| x + 1.0, None);
        assert_eq!(left.x, 0.0);
        assert_eq!(left.value, 1.0);
        let right = minimize_unit_interval(|x| 2.0 - x, None);
        assert_eq!(right.x, 1.0);
    }

    #[test]
    fn constant_function_ties_to_half() {
        let m = minimize_unit_interval(|_| 0.7, None);
        assert!(m.flat);
        assert_eq!(m.x, 0.5);
        assert_eq!(m.value, 0.7);
    }

    #[test]
    fn derivative_polish_sharpens_flat_minimum() {
        let c = 0.123_456_789_012;
        let f = |x: f64| 1.0 + 1e-6 * (x - c).powi(2);
        let df = |x: f64| 2e-6 * (x - c);
        let m = minimize_unit_interval(f, Some(&df));
        assert!((m.x - c).abs() < 1e-9, "{}", m.x);
    }

    #[test]
    fn two_wells_trigger_fallback() {
        // minima near 0.2 and 0.8 with nearly equal depth
        let f = |x: f64| ((x - 0.2) * (x - 0.8)).powi(2) + 1e-12 * x;
        let m = minimize_unit_interval(f, None);
        assert!(m.used_fallback);
        assert!((m.x - 0.2).abs() < 1e-4);
    }

    #[test]
    fn grid_scan_includes_endpoints() {
        assert_eq!(grid_scan(|x| -x, 0.0, 1.0, 11).x, 1.0);
    }
}
