/// Scans `[lo, hi]` on a uniform grid of `grid` subintervals and bisects each
/// sign change down to an interval of width `tol`.
///
/// Grid nodes where `f` is exactly zero are reported as roots even without a
/// sign change, so a double root is found only if it falls on a node.
/// Nodes where `f` is not finite are skipped. Roots are ascending and
/// separated by more than `tol`.
pub fn find_roots_bracketed<F>(mut f: F, lo: f64, hi: f64, grid: usize, tol: f64) -> Vec<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut roots: Vec<f64> = Vec::new();
    if !(lo < hi) || grid == 0 {
        return roots;
    }
    let node = |i: usize| lo + (hi - lo) * (i as f64) / (grid as f64);
    let push = |r: f64, roots: &mut Vec<f64>| {
        if roots.last().is_none_or(|&last| r - last > tol) {
            roots.push(r);
        }
    };

    let mut prev: Option<(f64, f64)> = None;
    for i in 0..=grid {
        let x = node(i);
        let fx = f(x);
        if !fx.is_finite() {
            prev = None;
            continue;
        }
        if fx == 0.0 {
            push(x, &mut roots);
        } else if let Some((xp, fp)) = prev {
            if fp != 0.0 && fp.signum() != fx.signum() {
                let (mut a, mut b, mut fa) = (xp, x, fp);
                while b - a > tol {
                    let m = 0.5 * (a + b);
                    if m <= a || m >= b {
                        break;
                    }
                    let fm = f(m);
                    if fm == 0.0 {
                        a = m;
                        b = m;
                        break;
                    }
                    if fm.signum() == fa.signum() {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                    }
                }
                push(0.5 * (a + b), &mut roots);
            }
        }
        prev = Some((x, fx));
    }
    roots
}
