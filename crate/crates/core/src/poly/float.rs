use super::{rational_to_f64, Poly};

/// A polynomial compiled for repeated `f64` evaluation.
///
/// Each term keeps only its nonzero `(variable, exponent)` factors. The
/// gradient is compiled alongside so descent loops never touch rationals.
#[derive(Clone, Debug)]
pub struct FloatPoly {
    nvars: usize,
    terms: Vec<(f64, Vec<(usize, i32)>)>,
}

impl FloatPoly {
    pub fn new(p: &Poly) -> Self {
        let terms = p
            .terms()
            .map(|(e, c)| {
                let factors = e
                    .as_slice()
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| (v, k as i32))
                    .collect();
                (rational_to_f64(c), factors)
            })
            .collect();
        FloatPoly {
            nvars: p.nvars(),
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.nvars);
        let mut acc = 0.0;
        for (c, factors) in &self.terms {
            let mut t = *c;
            for &(v, k) in factors {
                t *= x[v].powi(k);
            }
            acc += t;
        }
        acc
    }
}

/// A polynomial together with its compiled gradient and Hessian.
#[derive(Clone, Debug)]
pub(crate) struct Compiled {
    pub value: FloatPoly,
    pub grad: Vec<FloatPoly>,
    pub hess: Vec<Vec<FloatPoly>>,
}

impl Compiled {
    pub fn new(p: &Poly) -> Self {
        let grad_polys = p.gradient();
        let hess = grad_polys
            .iter()
            .map(|g| g.gradient().iter().map(FloatPoly::new).collect())
            .collect();
        Compiled {
            value: FloatPoly::new(p),
            grad: grad_polys.iter().map(FloatPoly::new).collect(),
            hess,
        }
    }

    pub fn gradient(&self, x: &[f64], out: &mut [f64]) {
        for (o, g) in out.iter_mut().zip(&self.grad) {
            *o = g.eval(x);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{power_sum, ratio};

    #[test]
    fn matches_direct_evaluation() {
        let p = &power_sum(3, 3).scale(&ratio(1, 3)) - &power_sum(3, 1);
        let fp = FloatPoly::new(&p);
        let x = [0.5, -1.25, 2.0];
        assert!((fp.eval(&x) - p.eval_f64(&x).unwrap()).abs() < 1e-12);
        let c = Compiled::new(&p);
        let mut g = [0.0; 3];
        c.gradient(&x, &mut g);
        for (gi, xi) in g.iter().zip(x) {
            assert!((gi - (xi * xi - 1.0)).abs() < 1e-12);
        }
        assert!((c.hess[1][1].eval(&x) - 2.0 * x[1]).abs() < 1e-12);
        assert_eq!(c.hess[0][1].eval(&x), 0.0);
    }
}
