//! Lattice generalized permutohedra, stored by their submodular support
//! function on all subsets.

use crate::error::{Error, Result};
use crate::matroid::subset::{self, full, Mask};
use crate::matroid::{Matroid, Perm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

/// `P = {x : Σ x_i = rk(E), Σ_{i∈S} x_i ≤ rk(S)}` for a submodular `rk`
/// with `rk(∅) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenPerm {
    n1: usize,
    rk: Vec<i64>,
}

impl GenPerm {
    /// Validates `rk(∅) = 0` and submodularity.
    pub fn from_table(n1: usize, rk: Vec<i64>) -> Result<Self> {
        if n1 == 0 || n1 > subset::MAX_GROUND {
            return Err(Error::InvalidArgument(format!("bad ground set size {n1}")));
        }
        if rk.len() != 1 << n1 {
            return Err(Error::InvalidArgument(format!(
                "rank table has {} entries, expected {}",
                rk.len(),
                1usize << n1
            )));
        }
        if rk[0] != 0 {
            return Err(Error::InvalidArgument("rk(∅) must be 0".into()));
        }
        let p = GenPerm { n1, rk };
        p.check_submodular()?;
        Ok(p)
    }

    fn from_fn(n1: usize, f: impl Fn(Mask) -> i64) -> Self {
        GenPerm {
            n1,
            rk: (0..=full(n1)).map(f).collect(),
        }
    }

    pub fn check_submodular(&self) -> Result<()> {
        let g = full(self.n1);
        for s in 0..=g {
            for t in (s + 1)..=g {
                if self.rk(s) + self.rk(t) < self.rk(s | t) + self.rk(s & t) {
                    return Err(Error::SubmodularityViolation {
                        s: subset::elems(s),
                        t: subset::elems(t),
                    });
                }
            }
        }
        Ok(())
    }

    /// The base polytope `P(M)`.
    pub fn base_polytope(m: &Matroid) -> Self {
        Self::from_fn(m.n1(), |s| m.rk(s) as i64)
    }

    /// `Δ_S = conv{e_i : i ∈ S}`, with support function `[T ∩ S ≠ ∅]`.
    pub fn simplex(n1: usize, s: Mask) -> Result<Self> {
        if s == 0 || !subset::is_subset(s, full(n1)) {
            return Err(Error::InvalidArgument(format!(
                "simplex needs a nonempty subset of the ground set, got {:?}",
                subset::elems(s)
            )));
        }
        Ok(Self::from_fn(n1, |t| (t & s != 0) as i64))
    }

    /// The full simplex `Δ = Δ_E`.
    pub fn delta(n1: usize) -> Self {
        Self::from_fn(n1, |t| (t != 0) as i64)
    }

    /// `∇ = -Δ`.
    pub fn nabla(n1: usize) -> Self {
        Self::delta(n1).negate()
    }

    /// The point `{0}`.
    pub fn zero(n1: usize) -> Self {
        Self::from_fn(n1, |_| 0)
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn rk(&self, s: Mask) -> i64 {
        self.rk[s as usize]
    }

    pub fn table(&self) -> &[i64] {
        &self.rk
    }

    /// `rk_{-P}(S) = rk_P(E ∖ S) - rk_P(E)`.
    pub fn negate(&self) -> Self {
        let g = full(self.n1);
        Self::from_fn(self.n1, |s| self.rk(g & !s) - self.rk(g))
    }

    /// Support functions add under Minkowski sum.
    pub fn minkowski_sum(&self, other: &GenPerm) -> Result<Self> {
        if self.n1 != other.n1 {
            return Err(Error::InvalidArgument(format!(
                "Minkowski sum of polytopes in dimensions {} and {}",
                self.n1, other.n1
            )));
        }
        Ok(Self::from_fn(self.n1, |s| self.rk(s) + other.rk(s)))
    }

    pub fn dilate(&self, c: i64) -> Result<Self> {
        if c < 0 {
            return Err(Error::InvalidArgument(format!("negative dilation {c}")));
        }
        Ok(Self::from_fn(self.n1, |s| c * self.rk(s)))
    }

    /// Greedy vertex: for `Max`, `m_{σ(i)} = rk(σ(0..=i)) - rk(σ(0..i))`;
    /// `Min` runs the same greedy along the reversed permutation.
    pub fn vertex(&self, sigma: &Perm, sense: Sense) -> Vec<i64> {
        let order: Vec<usize> = match sense {
            Sense::Max => sigma.iter().collect(),
            Sense::Min => sigma.reversed().iter().collect(),
        };
        let mut v = vec![0; self.n1];
        let mut prefix: Mask = 0;
        for j in order {
            let next = prefix | 1 << j;
            v[j] = self.rk(next) - self.rk(prefix);
            prefix = next;
        }
        v
    }

    /// `x ∈ P`: the hyperplane equation and all facet inequalities.
    pub fn contains(&self, x: &[i64]) -> bool {
        let g = full(self.n1);
        let sum = |s: Mask| subset::iter(s).map(|i| x[i]).sum::<i64>();
        sum(g) == self.rk(g) && (1..g).all(|s| sum(s) <= self.rk(s))
    }

    /// Every lattice point, in lexicographic order.
    ///
    /// Coordinates are fixed one at a time. For the prefix `A = {0..=i}` the
    /// projection of `P` is cut out by `rk(E) - rk(E∖S) ≤ x(S) ≤ rk(S)` for
    /// `S ⊆ A`, which bounds `x_i` given the earlier coordinates; every
    /// completed point is rechecked against all facets.
    pub fn lattice_points(&self, max_ground: usize) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        self.walk_lattice(max_ground, &mut |x| out.push(x.to_vec()))?;
        Ok(out)
    }

    pub fn count_lattice_points(&self, max_ground: usize) -> Result<u64> {
        let mut count = 0u64;
        self.walk_lattice(max_ground, &mut |_| count += 1)?;
        Ok(count)
    }

    fn walk_lattice(&self, max_ground: usize, visit: &mut dyn FnMut(&[i64])) -> Result<()> {
        if self.n1 > max_ground {
            return Err(Error::GuardrailExceeded {
                size: self.n1,
                limit: max_ground,
            });
        }
        let mut x = vec![0i64; self.n1];
        self.walk_from(0, &mut x, visit);
        Ok(())
    }

    fn walk_from(&self, i: usize, x: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        let n1 = self.n1;
        let g = full(n1);
        if i + 1 == n1 {
            x[i] = self.rk(g) - x[..i].iter().sum::<i64>();
            if self.contains(x) {
                visit(x);
            }
            return;
        }
        let earlier = full(i);
        let (mut lo, mut hi) = (i64::MIN, i64::MAX);
        for rest in subset::subsets(earlier) {
            let s = rest | 1 << i;
            let xr: i64 = subset::iter(rest).map(|j| x[j]).sum();
            hi = hi.min(self.rk(s) - xr);
            lo = lo.max(self.rk(g) - self.rk(g & !s) - xr);
        }
        for v in lo..=hi {
            x[i] = v;
            self.walk_from(i + 1, x, visit);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypersimplex_points() {
        let p = GenPerm::base_polytope(&Matroid::uniform(2, 4).unwrap());
        let pts = p.lattice_points(9).unwrap();
        assert_eq!(pts.len(), 6);
        assert!(pts.iter().all(|x| x.iter().all(|&c| c == 0 || c == 1)));
        assert_eq!(p.vertex(&Perm::identity(4), Sense::Max), vec![1, 1, 0, 0]);
    }

    #[test]
    fn simplex_vertices() {
        let d = GenPerm::delta(3);
        let sigma = Perm::new(vec![1, 2, 0]).unwrap();
        assert_eq!(d.vertex(&sigma, Sense::Min), vec![1, 0, 0]);
        assert_eq!(d.vertex(&sigma, Sense::Max), vec![0, 1, 0]);
        assert_eq!(
            GenPerm::simplex(2, 0b11)
                .unwrap()
                .count_lattice_points(9)
                .unwrap(),
            2
        );
        assert_eq!(d.dilate(3).unwrap().count_lattice_points(9).unwrap(), 10);
    }

    #[test]
    fn nabla_table() {
        let n = GenPerm::nabla(3);
        for s in 0..8u32 {
            assert_eq!(n.rk(s), -((s == 7) as i64));
        }
    }

    #[test]
    fn rejects_non_submodular() {
        // rk({0}) + rk({1}) < rk({0,1}).
        assert!(matches!(
            GenPerm::from_table(2, vec![0, 0, 0, 1]),
            Err(Error::SubmodularityViolation { .. })
        ));
    }

    #[test]
    fn guardrail() {
        assert!(matches!(
            GenPerm::delta(10).count_lattice_points(9),
            Err(Error::GuardrailExceeded { size: 10, limit: 9 })
        ));
    }
}
