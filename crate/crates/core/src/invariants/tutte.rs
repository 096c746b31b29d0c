//! Three independent computations of the Tutte polynomial, and the
//! convolution algebra of matroid functions they are compared in.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{binom, Int, Rat, SparsePoly};
use crate::matroid::subset::{self, Mask};
use crate::matroid::Matroid;

pub const TUTTE_VARS: [&str; 2] = ["x", "y"];

/// Deletion-contraction on the lowest element, memoized on the matroid.
pub fn tutte_delcontr(m: &Matroid) -> SparsePoly {
    let mut memo = HashMap::new();
    delcontr(m, &mut memo)
}

fn delcontr(m: &Matroid, memo: &mut HashMap<Matroid, SparsePoly>) -> SparsePoly {
    if let Some(p) = memo.get(m) {
        return p.clone();
    }
    let x = SparsePoly::var(&TUTTE_VARS, "x");
    let y = SparsePoly::var(&TUTTE_VARS, "y");
    let out = if m.n1() == 1 {
        if m.rank() == 1 {
            x
        } else {
            y
        }
    } else {
        let e = subset::singleton(0);
        let del = || m.delete(e).expect("ground set has another element");
        let con = || m.contract(e).expect("ground set has another element");
        if m.coloops() & e != 0 {
            &x * &delcontr(&con(), memo)
        } else if m.loops() & e != 0 {
            &y * &delcontr(&del(), memo)
        } else {
            &delcontr(&del(), memo) + &delcontr(&con(), memo)
        }
    };
    memo.insert(m.clone(), out.clone());
    out
}

/// `Σ_{i,j} c_{ij} (x - 1)^i (y - 1)^j`, expanded.
fn shifted(counts: &HashMap<(usize, usize), Int>) -> SparsePoly {
    let mut out = SparsePoly::zero(&TUTTE_VARS);
    for (&(i, j), c) in counts {
        for a in 0..=i {
            for b in 0..=j {
                let sign = if (i - a + j - b) % 2 == 0 { 1 } else { -1 };
                let coef = c * binom(i as i64, a as i64) * binom(j as i64, b as i64) * sign;
                out.add_term(
                    crate::algebra::Mono(vec![a as u32, b as u32]),
                    Rat::from_integer(coef),
                );
            }
        }
    }
    out
}

/// `Σ_{A ⊆ E} (x - 1)^{r - rk A} (y - 1)^{|A| - rk A}`.
pub fn tutte_coranknullity(m: &Matroid) -> SparsePoly {
    let r = m.rank();
    let mut counts: HashMap<(usize, usize), Int> = HashMap::new();
    for a in subset::subsets(m.ground()) {
        let rk = m.rk(a);
        *counts
            .entry((r - rk, subset::card(a) - rk))
            .or_insert_with(Int::zero) += 1;
    }
    shifted(&counts)
}

/// A matroid on a possibly empty ground set; `None` is the empty matroid.
pub type MaybeMatroid = Option<Matroid>;

/// `M|upper/lower`, with the empty matroid when `upper = lower`.
pub fn minor_or_empty(m: &Matroid, upper: Mask, lower: Mask) -> MaybeMatroid {
    if upper == lower {
        None
    } else {
        Some(m.minor(upper, lower).expect("nonempty minor"))
    }
}

/// `(f ∗ g)(M) = Σ_{A ⊆ E} f(M|A) g(M/A)`.
pub fn convolve(
    m: &Matroid,
    f: &dyn Fn(&MaybeMatroid) -> SparsePoly,
    g: &dyn Fn(&MaybeMatroid) -> SparsePoly,
) -> SparsePoly {
    let full = m.ground();
    let mut acc: Option<SparsePoly> = None;
    for a in subset::subsets(full) {
        let term = &f(&minor_or_empty(m, a, 0)) * &g(&minor_or_empty(m, full, a));
        acc = Some(match acc {
            Some(s) => &s + &term,
            None => term,
        });
    }
    acc.expect("at least the empty subset")
}

/// The convolution unit: 1 on the empty matroid, 0 elsewhere.
pub fn nu<'a>(vars: &'a [&'a str]) -> impl Fn(&MaybeMatroid) -> SparsePoly + 'a {
    move |m| match m {
        None => SparsePoly::one(vars),
        Some(_) => SparsePoly::zero(vars),
    }
}

/// `N_{(a,b)}(M) = a^{rk M} b^{crk M}`, with value 1 on the empty matroid.
pub fn n_ab(a: SparsePoly, b: SparsePoly) -> impl Fn(&MaybeMatroid) -> SparsePoly {
    move |m| match m {
        None => SparsePoly::constant_like(&a, Rat::one()),
        Some(m) => &a.pow(m.rank() as u32) * &b.pow(m.corank() as u32),
    }
}

/// `T_M(x, y)` as `(N_{(1,b)} ∗ N_{(c,1)})(M)` with `b = y - 1`, `c = x - 1`.
pub fn tutte_convolution(m: &Matroid) -> SparsePoly {
    let one = SparsePoly::one(&TUTTE_VARS);
    let b = &SparsePoly::var(&TUTTE_VARS, "y") - &one;
    let c = &SparsePoly::var(&TUTTE_VARS, "x") - &one;
    convolve(m, &n_ab(one.clone(), b), &n_ab(c, one.clone()))
}

/// `(β(M), β(M^⊥))`: the coefficients of `x` and of `y` in `T_M`.
pub fn beta_pair(m: &Matroid) -> (Int, Int) {
    let t = tutte_delcontr(m);
    (
        t.coefficient_of(&[1, 0]).to_integer(),
        t.coefficient_of(&[0, 1]).to_integer(),
    )
}

/// `T_M(a, b)` at integers.
pub fn tutte_at(t: &SparsePoly, a: i64, b: i64) -> Rat {
    t.evaluate(&[Rat::from_integer(a.into()), Rat::from_integer(b.into())])
        .expect("two variables")
}
