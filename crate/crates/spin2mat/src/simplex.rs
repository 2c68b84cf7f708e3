//! Derivative-free Nelder–Mead descent in four variables.

/// Minimize `f` from `start` with per-axis initial steps. Stops when the best
/// value drops below `target`, the simplex degenerates, or `max_iter` is hit.
/// Returns the best point and value seen.
pub(crate) fn nelder_mead<F>(
    f: F,
    start: [f64; 4],
    steps: [f64; 4],
    target: f64,
    max_iter: usize,
) -> ([f64; 4], f64)
where
    F: Fn(&[f64; 4]) -> f64,
{
    const REFLECT: f64 = 1.0;
    const EXPAND: f64 = 2.0;
    const CONTRACT: f64 = 0.5;
    const SHRINK: f64 = 0.5;

    let mut pts = [start; 5];
    for (axis, step) in steps.iter().enumerate() {
        pts[axis + 1][axis] += step;
    }
    let mut vals = [0.0_f64; 5];
    for (v, p) in vals.iter_mut().zip(pts.iter()) {
        *v = f(p);
    }

    for _ in 0..max_iter {
        // Order the simplex: best first.
        let mut order = [0usize, 1, 2, 3, 4];
        order.sort_unstable_by(|&a, &b| vals[a].total_cmp(&vals[b]));
        let sorted_pts = order.map(|k| pts[k]);
        let sorted_vals = order.map(|k| vals[k]);
        pts = sorted_pts;
        vals = sorted_vals;

        if vals[0] < target {
            break;
        }
        if vals[4] - vals[0] < 1e-30 {
            break;
        }

        let mut centroid = [0.0_f64; 4];
        for p in pts.iter().take(4) {
            for (c, x) in centroid.iter_mut().zip(p.iter()) {
                *c += x;
            }
        }
        for c in centroid.iter_mut() {
            *c *= 0.25;
        }

        let blend = |t: f64| {
            let mut out = [0.0_f64; 4];
            for (k, o) in out.iter_mut().enumerate() {
                *o = centroid[k] + t * (centroid[k] - pts[4][k]);
            }
            out
        };

        let reflected = blend(REFLECT);
        let fr = f(&reflected);
        if fr < vals[0] {
            let expanded = blend(EXPAND);
            let fe = f(&expanded);
            if fe < fr {
                pts[4] = expanded;
                vals[4] = fe;
            } else {
                pts[4] = reflected;
                vals[4] = fr;
            }
        } else if fr < vals[3] {
            pts[4] = reflected;
            vals[4] = fr;
        } else {
            let contracted = blend(-CONTRACT);
            let fc = f(&contracted);
            if fc < vals[4] {
                pts[4] = contracted;
                vals[4] = fc;
            } else {
                for k in 1..5 {
                    for axis in 0..4 {
                        pts[k][axis] = pts[0][axis] + SHRINK * (pts[k][axis] - pts[0][axis]);
                    }
                    vals[k] = f(&pts[k]);
                }
            }
        }
    }

    let mut best = 0;
    for k in 1..5 {
        if vals[k] < vals[best] {
            best = k;
        }
    }
    (pts[best], vals[best])
}
