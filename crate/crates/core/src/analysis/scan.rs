//! One-dimensional scans for the set where the concurrence is positive.

use crate::error::Result;

/// Tuning of grid scans and bisection refinement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    /// Grid points for temperature scans (log-spaced).
    pub points: usize,
    /// Lower end of temperature scans.
    pub t_min: f64,
    /// A point counts as entangled when `C > threshold`.
    pub threshold: f64,
    /// Bisection stops once the bracket is narrower than this.
    pub tolerance: f64,
    /// Zero sets narrower than this around a gap sign change are reported
    /// as a single touching point.
    pub merge_width: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            points: 400,
            t_min: 1e-3,
            threshold: 1e-9,
            tolerance: 1e-10,
            merge_width: 1e-6,
        }
    }
}

/// Closed interval of the scanned variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        (self.lo..=self.hi).contains(&x)
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Probe {
    pub concurrence: f64,
    /// Leading-λ difference between the two blocks, when defined.
    pub gap: Option<f64>,
}

pub(crate) fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let n = n.max(2);
    let (a, b) = (lo.ln(), hi.ln());
    let mut g: Vec<f64> = (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect();
    g[0] = lo;
    g[n - 1] = hi;
    g
}

/// Shrinks `[lo, hi]`, where `pred(lo) != pred(hi)`, down to `tol` and
/// returns the midpoint.
fn bisect(mut lo: f64, mut hi: f64, tol: f64, pred: &dyn Fn(f64) -> Result<bool>) -> Result<f64> {
    let at_lo = pred(lo)?;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid)? == at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Maximal intervals where `C > threshold` on the ascending `grid`.
///
/// Boundaries between grid points are refined by bisection. Between two
/// entangled grid points a sign change of the gap marks a zero of `C`; the
/// interval is split there, or around the zero set if it is wider than
/// `merge_width`.
pub(crate) fn scan_intervals(
    grid: &[f64],
    probe: &dyn Fn(f64) -> Result<Probe>,
    opts: &ScanOptions,
) -> Result<Vec<Interval>> {
    let entangled = |x: f64| -> Result<bool> { Ok(probe(x)?.concurrence > opts.threshold) };
    let gap_positive = |x: f64| -> Result<bool> { Ok(probe(x)?.gap.unwrap_or(0.0) > 0.0) };
    let tol = opts.tolerance;

    let mut out = Vec::new();
    let Some(&first) = grid.first() else {
        return Ok(out);
    };
    let mut prev = probe(first)?;
    let mut start = (prev.concurrence > opts.threshold).then_some(first);
    for w in grid.windows(2) {
        let (a, b) = (w[0], w[1]);
        let next = probe(b)?;
        let (pa, pb) = (prev.concurrence > opts.threshold, next.concurrence > opts.threshold);
        match (pa, pb) {
            (true, false) => {
                let x = bisect(a, b, tol, &entangled)?;
                out.push(Interval { lo: start.take().unwrap_or(a), hi: x });
            }
            (false, true) => start = Some(bisect(a, b, tol, &entangled)?),
            (true, true) => {
                if let (Some(ga), Some(gb)) = (prev.gap, next.gap) {
                    if ga * gb < 0.0 {
                        let r = bisect(a, b, tol, &gap_positive)?;
                        let (left, right) = if entangled(r)? {
                            (r, r)
                        } else {
                            (bisect(a, r, tol, &entangled)?, bisect(r, b, tol, &entangled)?)
                        };
                        let (left, right) = if right - left <= opts.merge_width { (r, r) } else { (left, right) };
                        out.push(Interval { lo: start.take().unwrap_or(a), hi: left });
                        start = Some(right);
                    }
                }
            }
            (false, false) => {}
        }
        prev = next;
    }
    if let Some(lo) = start {
        out.push(Interval { lo, hi: grid[grid.len() - 1] });
    }
    Ok(out)
}

/// Interval endpoints strictly inside `(lo, hi)`, deduplicated and sorted.
pub(crate) fn crossings(intervals: &[Interval], lo: f64, hi: f64) -> Vec<f64> {
    let mut xs: Vec<f64> = Vec::new();
    for iv in intervals {
        for x in [iv.lo, iv.hi] {
            if x > lo && x < hi && xs.last() != Some(&x) {
                xs.push(x);
            }
        }
    }
    xs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> ScanOptions {
        ScanOptions::default()
    }

    #[test]
    fn grid_endpoints_exact() {
        let g = log_grid(1e-3, 8.0, 400);
        assert_eq!(g.len(), 400);
        assert_eq!((g[0], g[399]), (1e-3, 8.0));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn finds_bumps() {
        // positive on (1, 2) and (3, 4)
        let f = |x: f64| -> Result<Probe> {
            let c = if (1.0..2.0).contains(&x) || (3.0..4.0).contains(&x) { 0.5 } else { 0.0 };
            Ok(Probe { concurrence: c, gap: None })
        };
        let grid: Vec<f64> = (0..=50).map(|i| i as f64 * 0.1).collect();
        let iv = scan_intervals(&grid, &f, &opts()).unwrap();
        assert_eq!(iv.len(), 2);
        assert!((iv[0].lo - 1.0).abs() < 1e-9 && (iv[0].hi - 2.0).abs() < 1e-9);
        assert!((iv[1].lo - 3.0).abs() < 1e-9 && (iv[1].hi - 4.0).abs() < 1e-9);
        let xs = crossings(&iv, grid[0], grid[50]);
        assert_eq!(xs.len(), 4);
    }

    #[test]
    fn touching_zero_splits_interval() {
        // |x − 1.234| with the gap changing sign at the same point
        let f = |x: f64| -> Result<Probe> {
            Ok(Probe { concurrence: (x - 1.234).abs(), gap: Some(x - 1.234) })
        };
        let grid: Vec<f64> = (0..=20).map(|i| i as f64 * 0.2).collect();
        let iv = scan_intervals(&grid, &f, &opts()).unwrap();
        assert_eq!(iv.len(), 2);
        assert_eq!(iv[0].hi, iv[1].lo);
        assert!((iv[0].hi - 1.234).abs() < 1e-9);
        assert_eq!(crossings(&iv, 0.0, 4.0).len(), 1);
    }

    #[test]
    fn wide_zero_window_inside_one_cell() {
        // zero on [1.2, 1.3], gap changes sign at 1.25, grid spacing 0.5
        let f = |x: f64| -> Result<Probe> {
            let c = if (1.2..=1.3).contains(&x) { 0.0 } else { 1.0 };
            Ok(Probe { concurrence: c, gap: Some(x - 1.25) })
        };
        let grid = [0.0, 0.5, 1.0, 1.5, 2.0];
        let iv = scan_intervals(&grid, &f, &opts()).unwrap();
        assert_eq!(iv.len(), 2);
        assert!((iv[0].hi - 1.2).abs() < 1e-9 && (iv[1].lo - 1.3).abs() < 1e-9);
    }

    #[test]
    fn all_zero_is_empty() {
        let f = |_: f64| -> Result<Probe> { Ok(Probe { concurrence: 0.0, gap: Some(-1.0) }) };
        assert!(scan_intervals(&[0.0, 1.0, 2.0], &f, &opts()).unwrap().is_empty());
    }
}
