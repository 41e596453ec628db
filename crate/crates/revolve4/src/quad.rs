//! Adaptive Simpson quadrature.

const MAX_DEPTH: u32 = 48;

/// Integrate `f` over `[a, b]` to the requested absolute tolerance.
///
/// Classic adaptive Simpson with Richardson correction; exact on cubics.
pub fn adaptive_simpson<F: Fn(f64) -> f64 + ?Sized>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    refine(
        f,
        a,
        b,
        fa,
        fm,
        fb,
        whole,
        tol.abs().max(f64::MIN_POSITIVE),
        MAX_DEPTH,
    )
}

#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Antiderivative samples: `out[i]` integrates `f` from `nodes[0]` to
/// `nodes[i]`. The tolerance is split across subintervals by length.
pub fn cumulative<F: Fn(f64) -> f64 + ?Sized>(f: &F, nodes: &[f64], tol: f64) -> Vec<f64> {
    assert!(nodes.len() >= 2, "need at least two nodes");
    let total = nodes[nodes.len() - 1] - nodes[0];
    let mut out = Vec::with_capacity(nodes.len());
    let mut acc = 0.0;
    out.push(0.0);
    for w in nodes.windows(2) {
        let share = if total > 0.0 {
            (w[1] - w[0]) / total
        } else {
            1.0
        };
        acc += adaptive_simpson(f, w[0], w[1], tol * share);
        out.push(acc);
    }
    out
}
