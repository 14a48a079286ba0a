//! Composite Gauss–Legendre quadrature on `[−1, 1]`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::legendre::legendre_p_and_derivative;
use crate::{Error, Result};

const NEWTON_MAX_STEPS: usize = 100;

/// `k`-point Gauss–Legendre rule on `[−1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Rule applied once over `[a, b]`.
    pub fn integrate_interval<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> Result<f64> {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let t = mid + half * x;
            let v = f(t);
            if !v.is_finite() {
                return Err(Error::NonFinite { abscissa: t });
            }
            sum += w * v;
        }
        Ok(half * sum)
    }
}

/// Nodes are the roots of `P_k`, found by Newton iteration from the
/// Chebyshev-angle estimate `cos(π(i − 1/4)/(k + 1/2))`. Weights are
/// `2 / ((1 − x²) P_k'(x)²)`.
pub fn gauss_rule(k: usize) -> Result<QuadratureRule> {
    if k == 0 {
        return Err(Error::InvalidRule(k));
    }
    let mut nodes = alloc::vec![0.0; k];
    let mut weights = alloc::vec![0.0; k];
    let kf = k as f64;
    for i in 0..k.div_ceil(2) {
        let mut x = libm::cos(PI * (i as f64 + 0.75) / (kf + 0.5));
        let mut converged = false;
        for _ in 0..NEWTON_MAX_STEPS {
            let (p, dp) = legendre_p_and_derivative(k, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-15 {
                let (p, dp) = legendre_p_and_derivative(k, x);
                x -= p / dp;
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NewtonDiverged { order: k, root: i });
        }
        if 2 * i + 1 == k {
            x = 0.0;
        }
        let (_, dp) = legendre_p_and_derivative(k, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // ascending order: the largest root goes last
        nodes[k - 1 - i] = x;
        nodes[i] = -x;
        weights[k - 1 - i] = w;
        weights[i] = w;
    }
    Ok(QuadratureRule { nodes, weights })
}

/// Breakpoints `−1 = x_0 < … < x_J = 1` of a composite rule.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelizedDomain {
    breakpoints: Vec<f64>,
}

impl PanelizedDomain {
    pub fn new(breakpoints: Vec<f64>) -> Result<Self> {
        let ok = breakpoints.len() >= 2
            && breakpoints.first() == Some(&-1.0)
            && breakpoints.last() == Some(&1.0)
            && breakpoints.windows(2).all(|w| w[0] < w[1]);
        if !ok {
            return Err(Error::InvalidPanels);
        }
        Ok(Self { breakpoints })
    }

    /// The single panel `[−1, 1]`.
    pub fn whole() -> Self {
        Self { breakpoints: alloc::vec![-1.0, 1.0] }
    }

    /// Panels split at `μ = 0` and graded geometrically toward `±1`:
    /// each half gets breakpoints `1 − 2^{−j}` for `j = 1..=levels`.
    pub fn graded(levels: usize) -> Self {
        let mut right = alloc::vec![0.0];
        let mut width = 1.0;
        for _ in 0..levels {
            width *= 0.5;
            right.push(1.0 - width);
        }
        right.push(1.0);
        let mut breakpoints: Vec<f64> = right.iter().skip(1).rev().map(|x| -x).collect();
        breakpoints.extend(right);
        Self { breakpoints }
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn panel_count(&self) -> usize {
        self.breakpoints.len() - 1
    }

    pub fn has_breakpoint(&self, x: f64) -> bool {
        self.breakpoints.contains(&x)
    }

    pub fn panels(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.breakpoints.windows(2).map(|w| (w[0], w[1]))
    }

    /// Every mapped node with its weight, panels in ascending order.
    pub fn points<'a>(&'a self, rule: &'a QuadratureRule) -> impl Iterator<Item = (f64, f64)> + 'a {
        self.panels().flat_map(move |(a, b)| {
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            rule.nodes.iter().zip(&rule.weights).map(move |(&x, &w)| (mid + half * x, half * w))
        })
    }
}

/// Composite integral of `f` over `[−1, 1]`, summed panel by panel in order.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, domain: &PanelizedDomain, rule: &QuadratureRule) -> Result<f64> {
    domain
        .panels()
        .try_fold(0.0, |acc, (a, b)| Ok(acc + rule.integrate_interval(a, b, &mut f)?))
}
