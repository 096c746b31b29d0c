//! Univariate interpolation over the rationals.

use num_traits::Zero;

use super::{Rat, SparsePoly};
use crate::error::{Error, Result};

/// The unique polynomial of degree at most `d` through the first `d + 1`
/// samples (Newton divided differences). Every further sample must lie on
/// it, otherwise the degree bound was too small.
pub fn interpolate_univariate(samples: &[(Rat, Rat)], d: usize, var: &str) -> Result<SparsePoly> {
    if samples.len() < d + 1 {
        return Err(Error::InvalidArgument(format!(
            "{} samples cannot determine a polynomial of degree {d}",
            samples.len()
        )));
    }
    for (i, (qi, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(qj, _)| qj == qi) {
            return Err(Error::InvalidArgument(format!(
                "repeated sample point {qi}"
            )));
        }
    }
    let (fit, check) = samples.split_at(d + 1);
    let xs: Vec<Rat> = fit.iter().map(|(q, _)| q.clone()).collect();
    let mut coef: Vec<Rat> = fit.iter().map(|(_, v)| v.clone()).collect();
    for level in 1..=d {
        for i in (level..=d).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form.
    let vars = [var];
    let q = SparsePoly::var(&vars, var);
    let mut p = SparsePoly::zero(&vars);
    for i in (0..=d).rev() {
        let shift = &q - &SparsePoly::constant(&vars, xs[i].clone());
        p = &(&p * &shift) + &SparsePoly::constant(&vars, coef[i].clone());
    }
    for (qv, v) in check {
        if p.evaluate(std::slice::from_ref(qv))? != *v {
            return Err(Error::InconsistentSamples(d));
        }
    }
    Ok(p)
}

/// Newton-form evaluation at a single point without building the
/// polynomial; used by hot paths that only need `P(x0)`.
pub fn interpolate_at(samples: &[(Rat, Rat)], x0: &Rat) -> Rat {
    let n = samples.len();
    let xs: Vec<&Rat> = samples.iter().map(|(q, _)| q).collect();
    let mut coef: Vec<Rat> = samples.iter().map(|(_, v)| v.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut acc = Rat::zero();
    for i in (0..n).rev() {
        acc = acc * (x0 - xs[i]) + &coef[i];
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn samples(f: impl Fn(i64) -> i64, qs: &[i64]) -> Vec<(Rat, Rat)> {
        qs.iter().map(|&q| (int(q), int(f(q)))).collect()
    }

    #[test]
    fn square() {
        let p = interpolate_univariate(&samples(|q| q * q, &[0, 1, 2]), 2, "q").unwrap();
        assert_eq!(p.to_string(), "q^2");
    }

    #[test]
    fn constant() {
        let p = interpolate_univariate(&samples(|_| 7, &[3, 5, 9, 11]), 1, "q").unwrap();
        assert_eq!(p.to_string(), "7");
    }

    #[test]
    fn cubic_with_low_bound_fails() {
        let s = samples(|q| q * q * q, &[0, 1, 2, 3, 4]);
        assert_eq!(
            interpolate_univariate(&s, 2, "q"),
            Err(Error::InconsistentSamples(2))
        );
        assert_eq!(interpolate_at(&s[..4], &int(5)), int(125));
    }
}
