//! The binomial-basis change `Ψ`: a product of binomial coefficients
//! `C(t_1, i_1) ... C(t_k, i_k)` goes to the monomial `x_1^{i_1} ... x_k^{i_k}`.

use num_traits::One;

use super::{Int, Mono, Rat, SparsePoly};

/// Stirling numbers of the second kind `S(k, i)` for `i, k ≤ d`.
fn stirling2(d: usize) -> Vec<Vec<Int>> {
    let mut s = vec![vec![Int::from(0); d + 1]; d + 1];
    s[0][0] = Int::one();
    for k in 1..=d {
        for i in 1..=k {
            s[k][i] = Int::from(i) * &s[k - 1][i] + &s[k - 1][i - 1];
        }
    }
    s
}

/// Signed Stirling numbers of the first kind: `(t)_i = Σ_k s(i, k) t^k`.
fn stirling1(d: usize) -> Vec<Vec<Int>> {
    let mut s = vec![vec![Int::from(0); d + 1]; d + 1];
    s[0][0] = Int::one();
    for i in 1..=d {
        for k in 1..=i {
            s[i][k] = &s[i - 1][k - 1] - Int::from(i - 1) * &s[i - 1][k];
        }
    }
    s
}

fn factorial(k: usize) -> Int {
    (1..=k).fold(Int::one(), |a, i| a * Int::from(i))
}

/// Per-variable images: `images[k][i]` is the coefficient of `x^i` in the
/// image of `t^k`, or of `t^i` in the preimage of `x^k`.
fn apply(p: &SparsePoly, out_vars: &[&str], image: impl Fn(usize) -> Vec<Rat>) -> SparsePoly {
    assert_eq!(out_vars.len(), p.nvars(), "Ψ keeps the number of variables");
    let mut out = SparsePoly::zero(out_vars);
    for (e, c) in p.terms() {
        // Expand the product of per-variable images.
        let mut acc: Vec<(Vec<u32>, Rat)> = vec![(vec![], c.clone())];
        for &k in &e.0 {
            let img = image(k as usize);
            let mut next = Vec::new();
            for (partial, pc) in &acc {
                for (i, ic) in img.iter().enumerate() {
                    if *ic != Rat::from_integer(0.into()) {
                        let mut v = partial.clone();
                        v.push(i as u32);
                        next.push((v, pc * ic));
                    }
                }
            }
            acc = next;
        }
        for (v, cc) in acc {
            out.add_term(Mono(v), cc);
        }
    }
    out
}

/// `Ψ(P)`: write `P` in the basis of products of binomial coefficients
/// and send each basis element to a monomial. Uses
/// `t^k = Σ_i S(k, i) i! C(t, i)`.
pub fn psi_transform(p: &SparsePoly, out_vars: &[&str]) -> SparsePoly {
    let d = p.terms().flat_map(|(e, _)| e.0.clone()).max().unwrap_or(0) as usize;
    let s2 = stirling2(d);
    apply(p, out_vars, |k| {
        (0..=k)
            .map(|i| Rat::from_integer(&s2[k][i] * factorial(i)))
            .collect()
    })
}

/// `Ψ^{-1}`: `x^i ↦ C(t, i) = (t)_i / i!`.
pub fn psi_inverse(p: &SparsePoly, out_vars: &[&str]) -> SparsePoly {
    let d = p.terms().flat_map(|(e, _)| e.0.clone()).max().unwrap_or(0) as usize;
    let s1 = stirling1(d);
    apply(p, out_vars, |i| {
        (0..=i)
            .map(|k| Rat::new(s1[i][k].clone(), factorial(i)))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn small_cases() {
        let t = SparsePoly::var(&["t"], "t");
        assert_eq!(psi_transform(&t, &["x"]).to_string(), "x");
        let t2 = &t * &t;
        assert_eq!(psi_transform(&t2, &["x"]).to_string(), "2*x^2 + x");
        let one = SparsePoly::one(&["t"]);
        assert_eq!(psi_transform(&one, &["x"]).to_string(), "1");
        let back = psi_inverse(&psi_transform(&t2, &["x"]), &["t"]);
        assert_eq!(back, t2);
    }

    #[test]
    fn two_variables() {
        let vars = ["t", "u"];
        let p = &SparsePoly::var(&vars, "t") * &SparsePoly::var(&vars, "u").scale(&int(3));
        assert_eq!(psi_transform(&p, &["x", "y"]).to_string(), "3*x*y");
    }
}
