//! Slab grid over [0, L] × [0, 2π)² and finite-difference stencils in x₁.

use serde::{Deserialize, Serialize};

/// Discretization of the half-space slab: n₁ cells in x₁ over [0, L]
/// (n₁ + 1 nodes), n₂ × n₃ tangential samples.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct SlabGrid {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub length: f64,
}

impl SlabGrid {
    pub fn new(n1: usize, n2: usize, n3: usize, length: f64) -> Self {
        Self { n1, n2, n3, length }
    }

    pub fn h1(&self) -> f64 {
        self.length / self.n1 as f64
    }

    pub fn x1(&self, j: usize) -> f64 {
        j as f64 * self.h1()
    }

    pub fn nodes1(&self) -> usize {
        self.n1 + 1
    }

    pub fn refined(&self, factor: usize) -> Self {
        Self {
            n1: self.n1 * factor,
            n2: self.n2 * factor,
            n3: self.n3 * factor,
            length: self.length,
        }
    }
}

/// Second-order ∂₁ of a nodal profile: centered interior, one-sided closures.
pub fn d1_profile<T>(values: &[T], h: f64) -> Vec<T>
where
    T: Copy
        + std::ops::Sub<Output = T>
        + std::ops::Add<Output = T>
        + std::ops::Mul<f64, Output = T>,
{
    let n = values.len();
    assert!(n >= 3, "need at least 3 nodes for second-order stencils");
    let mut out = Vec::with_capacity(n);
    let inv2h = 1.0 / (2.0 * h);
    out.push((values[1] * 4.0 - values[2] - values[0] * 3.0) * inv2h);
    for j in 1..n - 1 {
        out.push((values[j + 1] - values[j - 1]) * inv2h);
    }
    out.push((values[n - 2] * (-4.0) + values[n - 3] + values[n - 1] * 3.0) * inv2h);
    out
}

/// Second-order one-sided first derivative at the first node.
pub fn d1_one_sided<T>(values: &[T], h: f64) -> T
where
    T: Copy
        + std::ops::Sub<Output = T>
        + std::ops::Add<Output = T>
        + std::ops::Mul<f64, Output = T>,
{
    assert!(values.len() >= 3);
    (values[1] * 4.0 - values[2] - values[0] * 3.0) * (1.0 / (2.0 * h))
}
