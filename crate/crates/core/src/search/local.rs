//! Box-constrained local descent: projected gradient steps with Armijo
//! backtracking, then a damped Newton polish on the free coordinates.

use nalgebra::{DMatrix, DVector};

use crate::poly::float::Compiled;
use crate::reduce::Relation;

pub(crate) trait Smooth {
    fn dim(&self) -> usize;
    fn value(&self, x: &[f64]) -> f64;
    fn gradient(&self, x: &[f64], g: &mut [f64]);
    /// Exact Hessian, or a positive semidefinite model of it.
    fn hessian(&self, x: &[f64]) -> DMatrix<f64>;
}

impl Smooth for Compiled {
    fn dim(&self) -> usize {
        self.value.nvars()
    }

    fn value(&self, x: &[f64]) -> f64 {
        self.value.eval(x)
    }

    fn gradient(&self, x: &[f64], g: &mut [f64]) {
        Compiled::gradient(self, x, g)
    }

    fn hessian(&self, x: &[f64]) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |i, j| self.hess[i][j].eval(x))
    }
}

/// Sum of squared violations of a constraint system.
///
/// Strict relations (`> 0`, `!= 0`) are pushed towards `margin` rather
/// than towards zero so accepted points clear the tolerance.
pub(crate) struct Penalty {
    pub constraints: Vec<(Compiled, Relation)>,
    pub margin: f64,
    pub dim: usize,
}

impl Penalty {
    /// Signed residual `r` and its scale `s` with penalty `r²` and
    /// `∂(r²) = 2 r s ∇g`, or `None` when the constraint is inactive.
    fn residual(&self, rel: Relation, v: f64) -> Option<(f64, f64)> {
        match rel {
            Relation::Eq => Some((v, 1.0)),
            Relation::Ge if v < 0.0 => Some((-v, -1.0)),
            Relation::Gt if v < self.margin => Some((self.margin - v, -1.0)),
            Relation::Ne if v.abs() < self.margin => {
                let s = if v >= 0.0 { 1.0 } else { -1.0 };
                Some((self.margin - v.abs(), -s))
            }
            _ => None,
        }
    }

    pub fn satisfied(&self, x: &[f64], tol: f64) -> bool {
        self.constraints.iter().all(|(c, rel)| rel.holds(c.value.eval(x), tol))
    }
}

impl Smooth for Penalty {
    fn dim(&self) -> usize {
        self.dim
    }

    fn value(&self, x: &[f64]) -> f64 {
        self.constraints
            .iter()
            .filter_map(|(c, rel)| self.residual(*rel, c.value.eval(x)))
            .map(|(r, _)| r * r)
            .sum()
    }

    fn gradient(&self, x: &[f64], g: &mut [f64]) {
        g.iter_mut().for_each(|v| *v = 0.0);
        let mut cg = vec![0.0; self.dim];
        for (c, rel) in &self.constraints {
            if let Some((r, s)) = self.residual(*rel, c.value.eval(x)) {
                c.gradient(x, &mut cg);
                for (gi, ci) in g.iter_mut().zip(&cg) {
                    *gi += 2.0 * r * s * ci;
                }
            }
        }
    }

    /// Gauss-Newton model `2 Σ ∇g ∇gᵀ` over the active constraints.
    fn hessian(&self, x: &[f64]) -> DMatrix<f64> {
        let n = self.dim;
        let mut h = DMatrix::zeros(n, n);
        let mut cg = vec![0.0; n];
        for (c, rel) in &self.constraints {
            if self.residual(*rel, c.value.eval(x)).is_some() {
                c.gradient(x, &mut cg);
                let v = DVector::from_column_slice(&cg);
                h += 2.0 * &v * v.transpose();
            }
        }
        h
    }
}

fn finite_or_inf(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        f64::INFINITY
    }
}

/// Descends from `x0` inside `[lo, hi]^n`; returns the final point and value.
pub(crate) fn descend<F: Smooth>(f: &F, x0: &[f64], lo: f64, hi: f64, max_iters: usize) -> (Vec<f64>, f64) {
    let n = f.dim();
    let mut x: Vec<f64> = x0.iter().map(|v| v.clamp(lo, hi)).collect();
    let mut fx = finite_or_inf(f.value(&x));
    if n == 0 {
        return (x, fx);
    }
    let mut g = vec![0.0; n];
    let mut trial = vec![0.0; n];
    let mut step = 1.0;
    for _ in 0..max_iters {
        f.gradient(&x, &mut g);
        let mut accepted = None;
        while step > 1e-16 {
            for i in 0..n {
                trial[i] = (x[i] - step * g[i]).clamp(lo, hi);
            }
            let decrease: f64 = (0..n).map(|i| g[i] * (x[i] - trial[i])).sum();
            if decrease <= 0.0 {
                break;
            }
            let ft = finite_or_inf(f.value(&trial));
            if ft <= fx - 1e-4 * decrease {
                accepted = Some(ft);
                break;
            }
            step *= 0.5;
        }
        let Some(ft) = accepted else { break };
        let improvement = fx - ft;
        x.copy_from_slice(&trial);
        fx = ft;
        step = (step * 2.0).min(1e4);
        if improvement <= 1e-15 * (1.0 + fx.abs()) {
            break;
        }
    }
    newton_polish(f, &mut x, &mut fx, lo, hi, 40);
    (x, fx)
}

fn newton_polish<F: Smooth>(f: &F, x: &mut [f64], fx: &mut f64, lo: f64, hi: f64, iters: usize) {
    let n = f.dim();
    let mut g = vec![0.0; n];
    for _ in 0..iters {
        f.gradient(x, &mut g);
        let free: Vec<usize> = (0..n)
            .filter(|&i| !((x[i] <= lo && g[i] > 0.0) || (x[i] >= hi && g[i] < 0.0)))
            .collect();
        if free.is_empty() || free.iter().all(|&i| g[i] == 0.0) {
            return;
        }
        let h = f.hessian(x);
        let hf = DMatrix::from_fn(free.len(), free.len(), |a, b| h[(free[a], free[b])]);
        let gf = DVector::from_iterator(free.len(), free.iter().map(|&i| -g[i]));
        let scale = 1.0 + hf.diagonal().iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let mut mu = 0.0;
        let mut accepted = false;
        let mut trial = x.to_vec();
        for _ in 0..12 {
            let damped = &hf + DMatrix::identity(free.len(), free.len()) * mu;
            if let Some(chol) = damped.cholesky() {
                let delta = chol.solve(&gf);
                for (a, &i) in free.iter().enumerate() {
                    trial[i] = (x[i] + delta[a]).clamp(lo, hi);
                }
                let ft = finite_or_inf(f.value(&trial));
                if ft < *fx {
                    accepted = true;
                    let moved = (0..n).map(|i| (trial[i] - x[i]).abs()).fold(0.0, f64::max);
                    x.copy_from_slice(&trial);
                    let gain = *fx - ft;
                    *fx = ft;
                    if moved <= 1e-15 * (1.0 + x.iter().fold(0.0f64, |m, v| m.max(v.abs())))
                        || gain <= 1e-17 * (1.0 + fx.abs())
                    {
                        return;
                    }
                    break;
                }
            }
            mu = if mu == 0.0 { 1e-10 * scale } else { mu * 10.0 };
        }
        if !accepted {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{power_sum, rat, Poly};

    #[test]
    fn quadratic_converges_to_centre() {
        // (x1 - 1/2)^2 + (x2 + 1)^2 + 3
        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        let a = &x1 - &Poly::constant(2, crate::poly::ratio(1, 2));
        let b = &x2 + &Poly::one(2);
        let f = &(&a.pow(2) + &b.pow(2)) + &Poly::constant(2, rat(3));
        let c = Compiled::new(&f);
        let (x, v) = descend(&c, &[1.7, 1.9], -2.0, 2.0, 200);
        assert!((x[0] - 0.5).abs() < 1e-10 && (x[1] + 1.0).abs() < 1e-10);
        assert!((v - 3.0).abs() < 1e-14);
    }

    #[test]
    fn box_boundary_minimum() {
        let c = Compiled::new(&power_sum(2, 1));
        let (x, v) = descend(&c, &[0.3, -0.2], -1.0, 1.0, 200);
        assert_eq!(x, vec![-1.0, -1.0]);
        assert_eq!(v, -2.0);
    }

    #[test]
    fn penalty_finds_circle_point() {
        // x1^2 + x2^2 - 2 = 0 and x1 + x2 = 0
        let f1 = &power_sum(2, 2) - &Poly::constant(2, rat(2));
        let f2 = power_sum(2, 1);
        let p = Penalty {
            constraints: vec![(Compiled::new(&f1), Relation::Eq), (Compiled::new(&f2), Relation::Eq)],
            margin: 1e-6,
            dim: 2,
        };
        let (x, v) = descend(&p, &[1.5, -0.3], -2.0, 2.0, 200);
        assert!(v < 1e-20, "penalty {v}");
        assert!(p.satisfied(&x, 1e-9));
    }
}
