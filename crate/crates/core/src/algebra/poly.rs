use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat_to_string, Rat};
use crate::error::{Error, Result};

/// An exponent vector. Ordered graded-lexicographically: total degree
/// first, then lexicographic in the variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with rational coefficients in named variables. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Mono, Rat>,
}

impl SparsePoly {
    pub fn zero(vars: &[&str]) -> Self {
        Self::zero_owned(vars.iter().map(|s| s.to_string()).collect())
    }

    pub fn zero_owned(vars: Vec<String>) -> Self {
        SparsePoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Mono::one(vars.len()), c);
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rat::one())
    }

    /// The variable `name`, which must appear in `vars`.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let i = vars
            .iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("{name} is not among {vars:?}"));
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(Mono(e), Rat::one());
        p
    }

    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length");
            p.add_term(Mono(e), c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter().rev()
    }

    /// Adds `c · x^e` in place.
    pub fn add_term(&mut self, e: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient_of(&self, e: &[u32]) -> Rat {
        self.terms
            .get(&Mono(e.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    fn check_vars(&self, other: &SparsePoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(
                self.vars.clone(),
                other.vars.clone(),
            ))
        }
    }

    pub fn try_add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_vars(other)?;
        let mut out = Self::zero_owned(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> SparsePoly {
        let mut out = Self::zero_owned(self.vars.clone());
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> SparsePoly {
        let mut out = Self::constant_like(self, Rat::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// A constant over the same variables as `like`.
    pub fn constant_like(like: &SparsePoly, c: Rat) -> SparsePoly {
        let mut p = Self::zero_owned(like.vars.clone());
        p.add_term(Mono::one(like.nvars()), c);
        p
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars() {
            return Err(Error::InvalidArgument(format!(
                "evaluation point has {} coordinates for {} variables",
                point.len(),
                self.nvars()
            )));
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replaces every variable by a polynomial; all images must share one
    /// variable list, which becomes the variable list of the result.
    pub fn substitute(&self, images: &[SparsePoly]) -> Result<SparsePoly> {
        if images.len() != self.nvars() {
            return Err(Error::InvalidArgument(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars()
            )));
        }
        let target = images.first().map(|p| p.vars.clone()).unwrap_or_default();
        for im in images {
            if im.vars != target {
                return Err(Error::VariableMismatch(target, im.vars.clone()));
            }
        }
        let mut powers: Vec<Vec<SparsePoly>> = images
            .iter()
            .map(|p| vec![SparsePoly::constant_like(p, Rat::one())])
            .collect();
        let mut out = Self::zero_owned(target.clone());
        if images.is_empty() {
            return Ok(SparsePoly {
                vars: target,
                terms: self.terms.clone(),
            });
        }
        for (e, c) in &self.terms {
            let mut t = SparsePoly::constant_like(&images[0], c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t = &t * &powers[i][k as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate_total_degree(&self, d: u32) -> SparsePoly {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() <= d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only the terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> SparsePoly {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The coefficient of `var^k`, as a polynomial in the same variables
    /// (with `var` absent).
    pub fn coefficient_in(&self, var: usize, k: u32) -> SparsePoly {
        let mut out = Self::zero_owned(self.vars.clone());
        for (e, c) in &self.terms {
            if e.0[var] == k {
                let mut e2 = e.clone();
                e2.0[var] = 0;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable that occurs with a nonzero exponent.
    pub fn with_vars(&self, vars: &[&str]) -> Result<SparsePoly> {
        let mut map = Vec::with_capacity(self.nvars());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|e| e.0[i] > 0) {
                        return Err(Error::VariableMismatch(
                            self.vars.clone(),
                            vars.iter().map(|s| s.to_string()).collect(),
                        ));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; vars.len()];
            for (i, &k) in e.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e2[j] += k;
                }
            }
            out.add_term(Mono(e2), c.clone());
        }
        Ok(out)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &SparsePoly) -> Result<Option<SparsePoly>> {
        self.check_vars(d)?;
        let Some((lead_e, lead_c)) = d.terms.iter().next_back() else {
            return Err(Error::InvalidArgument("division by zero polynomial".into()));
        };
        let mut rem = self.clone();
        let mut q = Self::zero_owned(self.vars.clone());
        while let Some((e, c)) = rem.terms.iter().next_back() {
            if !lead_e.divides(e) {
                return Ok(None);
            }
            let mut t = Self::zero_owned(self.vars.clone());
            t.add_term(e.div(lead_e), c / lead_c);
            rem = &rem - &(&t * d);
            q = &q + &t;
        }
        Ok(Some(q))
    }

    /// `true` when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            for (v, &p) in self.vars.iter().zip(&e.0) {
                match p {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{p}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", rat_to_string(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", rat_to_string(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {:?}", self.vars)
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_add(rhs)
            .expect("polynomial variable lists must match")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_sub(rhs)
            .expect("polynomial variable lists must match")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_mul(rhs)
            .expect("polynomial variable lists must match")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Rat::one())
    }
}
