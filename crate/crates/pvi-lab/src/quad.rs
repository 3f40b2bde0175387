//! One-dimensional quadrature helpers.
//!
//! The slab profiles that enter norms and energy integrals are smooth except
//! possibly at a few known breakpoints (the σ-weight joins, the cut-off
//! transition). Adaptive Simpson on the smooth pieces reaches the tolerances
//! the diagnostics need without a grid.

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_rec(f, a, b, fa, fm, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(
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
        simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Adaptive Simpson over a piecewise-smooth function: `breaks` lists interior
/// breakpoints that subdivide `[a, b]`.
pub fn adaptive_simpson_pieces<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    breaks: &[f64],
    tol: f64,
) -> f64 {
    let mut pts: Vec<f64> = std::iter::once(a)
        .chain(breaks.iter().copied().filter(|&p| p > a && p < b))
        .chain(std::iter::once(b))
        .collect();
    pts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    let n = pts.len() - 1;
    pts.windows(2)
        .map(|w| adaptive_simpson(f, w[0], w[1], tol / n as f64))
        .sum()
}

/// Composite trapezoid rule on uniformly spaced samples with spacing `h`.
pub fn trapezoid(values: &[f64], h: f64) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let inner: f64 = values[1..values.len() - 1].iter().sum();
    h * (0.5 * (values[0] + values[values.len() - 1]) + inner)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_exponential() {
        let exact = 0.5 * (1.0 - (-50.0f64).exp());
        let got = adaptive_simpson(&|x: f64| (-2.0 * x).exp(), 0.0, 25.0, 1e-12);
        assert!((got - exact).abs() < 1e-11, "got {got}, want {exact}");
    }

    #[test]
    fn simpson_piecewise() {
        // |x - 1| integrated over [0, 3] = 0.5 + 2.0
        let f = |x: f64| (x - 1.0).abs();
        let got = adaptive_simpson_pieces(&f, 0.0, 3.0, &[1.0], 1e-12);
        assert!((got - 2.5).abs() < 1e-11);
    }

    #[test]
    fn trapezoid_linear_exact() {
        let h = 0.1;
        let vals: Vec<f64> = (0..11).map(|i| 3.0 * (i as f64) * h + 1.0).collect();
        assert!((trapezoid(&vals, h) - 2.5).abs() < 1e-14);
    }
}
