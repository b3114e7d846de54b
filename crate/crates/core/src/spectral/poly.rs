use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// Real polynomial, coefficients in ascending degree order.
#[derive(Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Polynomial(Vec<f64>);

impl Polynomial {
    /// Trailing zero coefficients are dropped; the zero polynomial is
    /// rejected.
    pub fn new(mut coefficients: Vec<f64>) -> Result<Self> {
        while coefficients.last() == Some(&0.0) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            return Err(Error::InvalidParams("zero polynomial".into()));
        }
        Ok(Polynomial(coefficients))
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[f64]) -> Self {
        roots.iter().fold(Polynomial(vec![1.0]), |p, &r| &p * &Polynomial(vec![-r, 1.0]))
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn leading(&self) -> f64 {
        *self.0.last().expect("non-empty")
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Option<Polynomial> {
        let d: Vec<f64> = self.0.iter().enumerate().skip(1).map(|(i, &c)| i as f64 * c).collect();
        Polynomial::new(d).ok()
    }

    pub fn scale(&self, k: f64) -> Polynomial {
        Polynomial(self.0.iter().map(|c| c * k).collect())
    }

    /// Cauchy bound: every real root lies in `[-b, b]`.
    fn root_bound(&self) -> f64 {
        let lead = self.leading().abs();
        1.0 + self.0[..self.degree()].iter().fold(0.0f64, |m, c| m.max(c.abs() / lead))
    }
}

fn combine(a: &Polynomial, b: &Polynomial, sign: f64) -> Polynomial {
    let n = a.0.len().max(b.0.len());
    let v = (0..n).map(|i| a.0.get(i).copied().unwrap_or(0.0) + sign * b.0.get(i).copied().unwrap_or(0.0)).collect();
    Polynomial::new(v).unwrap_or(Polynomial(vec![0.0]))
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        combine(self, rhs, 1.0)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        combine(self, rhs, -1.0)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut v = vec![0.0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Polynomial::new(v).unwrap_or(Polynomial(vec![0.0]))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if *c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn bisect(p: &Polynomial, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = p.eval(lo);
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = p.eval(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn newton_polish(p: &Polynomial, x: f64) -> f64 {
    let Some(d) = p.derivative() else { return x };
    let mut best = x;
    let mut best_f = p.eval(x).abs();
    let mut cur = x;
    for _ in 0..4 {
        let dv = d.eval(cur);
        if dv == 0.0 {
            break;
        }
        let next = cur - p.eval(cur) / dv;
        let fv = p.eval(next).abs();
        if !next.is_finite() || fv >= best_f {
            break;
        }
        best = next;
        best_f = fv;
        cur = next;
    }
    best
}

/// All real roots, ascending; multiple roots appear once.
fn real_roots(p: &Polynomial) -> Vec<f64> {
    if p.degree() == 0 {
        return Vec::new();
    }
    if p.degree() == 1 {
        return vec![-p.0[0] / p.0[1]];
    }
    let bound = p.root_bound();
    let d = p.derivative().expect("degree >= 1");
    let mut points = vec![-bound];
    points.extend(real_roots(&d).into_iter().filter(|c| c.abs() < bound));
    points.push(bound);
    let scale = p.0.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut roots = Vec::new();
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (p.eval(a), p.eval(b));
        if fa == 0.0 {
            roots.push(a);
        } else if (fa < 0.0) != (fb < 0.0) && fb != 0.0 {
            roots.push(newton_polish(p, bisect(p, a, b)));
        }
    }
    // a critical point that touches zero is a root of even multiplicity
    for &c in &points[1..points.len() - 1] {
        if p.eval(c).abs() <= 1e-12 * scale.max(1.0) && !roots.iter().any(|r| (r - c).abs() < 1e-9) {
            roots.push(c);
        }
    }
    let last = *points.last().expect("bound");
    if p.eval(last) == 0.0 {
        roots.push(last);
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-12 * b.abs().max(1.0));
    roots
}

/// Largest real root, by bracketing between critical points followed by
/// bisection and a Newton polish.
pub fn largest_real_root(p: &Polynomial) -> Result<f64> {
    real_roots(p).pop().ok_or(Error::NoRealRoot)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_and_cubic() {
        assert_eq!(largest_real_root(&Polynomial::new(vec![-5.0, 1.0]).unwrap()).unwrap(), 5.0);
        let p = Polynomial::from_roots(&[1.0, 2.0, 3.0]);
        assert_eq!(p.coefficients(), &[-6.0, 11.0, -6.0, 1.0]);
        assert!((largest_real_root(&p).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn quadratic_formula() {
        let p = Polynomial::new(vec![9.75, -11.0, 1.0]).unwrap();
        let want = (11.0 + (121.0f64 - 39.0).sqrt()) / 2.0;
        assert!((largest_real_root(&p).unwrap() - want).abs() < 1e-12);
        let none = Polynomial::new(vec![1.0, 0.0, 1.0]).unwrap();
        assert!(matches!(largest_real_root(&none), Err(Error::NoRealRoot)));
    }

    #[test]
    fn repeated_roots() {
        let p = Polynomial::from_roots(&[2.0, 2.0]);
        assert!((largest_real_root(&p).unwrap() - 2.0).abs() < 1e-9);
        let p = Polynomial::from_roots(&[-1.0, 4.0, 4.0]);
        assert!((largest_real_root(&p).unwrap() - 4.0).abs() < 1e-7);
        let p = Polynomial::from_roots(&[0.5, 0.5, 0.5]);
        assert!((largest_real_root(&p).unwrap() - 0.5).abs() < 1e-5);
    }

    #[test]
    fn arithmetic() {
        let a = Polynomial::from_roots(&[1.0]);
        let b = Polynomial::from_roots(&[2.0]);
        assert_eq!((&a * &b).coefficients(), &[2.0, -3.0, 1.0]);
        assert_eq!((&a - &b).coefficients(), &[1.0]);
        assert_eq!((&a + &b).coefficients(), &[-3.0, 2.0]);
        assert!(Polynomial::new(vec![0.0, 0.0]).is_err());
        assert_eq!(a.eval(1.0), 0.0);
        assert_eq!(b.scale(2.0).coefficients(), &[-4.0, 2.0]);
    }

    #[test]
    fn negative_leading_coefficient() {
        let p = Polynomial::from_roots(&[-3.0, 7.0]).scale(-2.0);
        assert!((largest_real_root(&p).unwrap() - 7.0).abs() < 1e-12);
    }
}
