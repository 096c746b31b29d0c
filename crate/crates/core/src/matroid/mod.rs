//! Matroids on `E = {0, ..., n}` given by their bases, plus flags of matroids.

mod chain;
mod flag;
mod perm;
pub mod subset;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use chain::{all_chains, Chain};
pub use flag::FlagMatroid;
pub use perm::{factorial, Perm};
pub use subset::Mask;

use crate::error::{Error, Result};
use subset::{card, contains, full, is_subset};

/// A matroid stored by its sorted basis list and a precomputed rank table
/// over all `2^{n+1}` subsets. Cloning is cheap.
#[derive(Clone)]
pub struct Matroid(Arc<Inner>);

struct Inner {
    n1: usize,
    rank: usize,
    bases: Vec<Mask>,
    rk: Vec<u8>,
}

impl Matroid {
    /// Builds and validates a matroid: bases must be nonempty, equicardinal
    /// and satisfy the exchange axiom.
    pub fn from_bases(n1: usize, bases: impl IntoIterator<Item = Mask>) -> Result<Self> {
        let m = Self::from_bases_unchecked(n1, bases)?;
        m.check_exchange()?;
        Ok(m)
    }

    /// Like [`Matroid::from_bases`] but skips the exchange-axiom scan. Only
    /// use this for families already known to be matroids.
    pub fn from_bases_unchecked(n1: usize, bases: impl IntoIterator<Item = Mask>) -> Result<Self> {
        if n1 == 0 {
            return Err(Error::EmptyGroundSetResult);
        }
        if n1 > subset::MAX_GROUND {
            return Err(Error::InvalidArgument(format!(
                "ground set of size {n1} exceeds the representable maximum {}",
                subset::MAX_GROUND
            )));
        }
        let mut bases: Vec<Mask> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let first = *bases.first().ok_or(Error::EmptyBases)?;
        for &b in &bases {
            if !is_subset(b, full(n1)) {
                return Err(Error::SubsetOutOfRange {
                    subset: subset::elems(b),
                    n: n1,
                });
            }
            if card(b) != card(first) {
                return Err(Error::UnequalCardinality(
                    subset::elems(first),
                    subset::elems(b),
                ));
            }
        }
        let rk = rank_table(n1, &bases);
        Ok(Matroid(Arc::new(Inner {
            n1,
            rank: card(first),
            bases,
            rk,
        })))
    }

    pub fn from_basis_lists(n1: usize, bases: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            if b.iter().any(|&i| i >= n1) {
                return Err(Error::SubsetOutOfRange {
                    subset: b.clone(),
                    n: n1,
                });
            }
            masks.push(subset::from_elems(b));
        }
        Self::from_bases(n1, masks)
    }

    /// `U_{r,n1}`: every `r`-subset is a basis.
    pub fn uniform(r: usize, n1: usize) -> Result<Self> {
        if r > n1 {
            return Err(Error::RankOutOfRange { r, n: n1 });
        }
        let bases = (0..=full(n1)).filter(|&s| card(s) == r);
        Self::from_bases_unchecked(n1, bases)
    }

    /// The cycle matroid of a multigraph; element `i` is `edges[i]` and the
    /// bases are the spanning forests.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= vertices || b >= vertices) {
            return Err(Error::InvalidArgument(format!(
                "edge ({a}, {b}) leaves the vertex set 0..{vertices}"
            )));
        }
        let n1 = edges.len();
        if n1 > subset::MAX_GROUND {
            return Err(Error::InvalidArgument(format!("{n1} edges is too many")));
        }
        let forest_size = |s: Mask| -> Option<usize> {
            let mut uf: Vec<usize> = (0..vertices).collect();
            fn find(uf: &mut [usize], mut x: usize) -> usize {
                while uf[x] != x {
                    uf[x] = uf[uf[x]];
                    x = uf[x];
                }
                x
            }
            for e in subset::iter(s) {
                let (a, b) = edges[e];
                let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
                if ra == rb {
                    return None;
                }
                uf[ra] = rb;
            }
            Some(card(s))
        };
        let r = forest_size_max(n1, &forest_size);
        let bases = (0..=full(n1)).filter(|&s| card(s) == r && forest_size(s).is_some());
        Self::from_bases_unchecked(n1, bases)
    }

    /// `|E| = n + 1`.
    pub fn n1(&self) -> usize {
        self.0.n1
    }

    pub fn ground(&self) -> Mask {
        full(self.0.n1)
    }

    /// `r = rk(E)`.
    pub fn rank(&self) -> usize {
        self.0.rank
    }

    /// `|E| - r`.
    pub fn corank(&self) -> usize {
        self.0.n1 - self.0.rank
    }

    pub fn bases(&self) -> &[Mask] {
        &self.0.bases
    }

    pub fn is_basis(&self, s: Mask) -> bool {
        self.0.bases.binary_search(&s).is_ok()
    }

    pub fn rk(&self, s: Mask) -> usize {
        self.0.rk[(s & self.ground()) as usize] as usize
    }

    pub fn is_independent(&self, s: Mask) -> bool {
        self.rk(s) == card(s)
    }

    fn check_exchange(&self) -> Result<()> {
        for &b1 in self.bases() {
            for &b2 in self.bases() {
                for i in subset::iter(b1 & !b2) {
                    let ok = subset::iter(b2 & !b1).any(|j| self.is_basis(b1 & !(1 << i) | 1 << j));
                    if !ok {
                        return Err(Error::ExchangeAxiomViolation {
                            b1: subset::elems(b1),
                            b2: subset::elems(b2),
                            elem: i,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Verifies submodularity of the rank table on every pair of subsets.
    pub fn check_submodular(&self) -> Result<()> {
        let g = self.ground();
        for s in 0..=g {
            for t in 0..=g {
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

    /// `B_σ(M)`: scan `σ(0), σ(1), ...` and keep an element iff the rank
    /// goes up.
    pub fn lex_first_basis(&self, sigma: &Perm) -> Mask {
        let mut b = 0;
        let mut r = 0;
        for j in sigma.iter() {
            if r == self.0.rank {
                break;
            }
            if self.rk(b | 1 << j) > r {
                b |= 1 << j;
                r += 1;
            }
        }
        b
    }

    /// Reference for [`Matroid::lex_first_basis`]: the lexicographic minimum
    /// over the basis list under `σ(0) ≺ σ(1) ≺ ...`.
    pub fn lex_first_basis_brute(&self, sigma: &Perm) -> Mask {
        let pos = sigma.inverse();
        let key = |b: Mask| {
            let mut v: Vec<usize> = subset::iter(b).map(|i| pos[i]).collect();
            v.sort_unstable();
            v
        };
        *self
            .bases()
            .iter()
            .min_by_key(|&&b| key(b))
            .expect("bases are nonempty")
    }

    /// `M^⊥`: bases are complements of bases.
    pub fn dual(&self) -> Matroid {
        let g = self.ground();
        Self::from_bases_unchecked(self.n1(), self.bases().iter().map(|&b| g & !b))
            .expect("dual of a matroid is a matroid")
    }

    /// `M|T/S` for `S ⊆ T`, relabeled onto `{0, ..., |T∖S| - 1}` in the
    /// increasing order of `T∖S`.
    pub fn minor(&self, upper: Mask, lower: Mask) -> Result<Matroid> {
        self.check_mask(upper)?;
        if !is_subset(lower, upper) {
            return Err(Error::InvalidArgument(format!(
                "{:?} is not contained in {:?}",
                subset::elems(lower),
                subset::elems(upper)
            )));
        }
        let gap = upper & !lower;
        if gap == 0 {
            return Err(Error::EmptyGroundSetResult);
        }
        let (ru, rl) = (self.rk(upper), self.rk(lower));
        let bases = self
            .bases()
            .iter()
            .filter(|&&b| card(b & upper) == ru && card(b & lower) == rl)
            .map(|&b| subset::compress(b & gap, gap));
        Self::from_bases_unchecked(card(gap), bases)
    }

    /// `M|S`, relabeled.
    pub fn restrict(&self, s: Mask) -> Result<Matroid> {
        self.minor(s, 0)
    }

    /// `M ∖ S`, relabeled.
    pub fn delete(&self, s: Mask) -> Result<Matroid> {
        self.check_mask(s)?;
        self.minor(self.ground() & !s, 0)
    }

    /// `M / S`, relabeled.
    pub fn contract(&self, s: Mask) -> Result<Matroid> {
        self.check_mask(s)?;
        self.minor(self.ground(), s)
    }

    /// `M ⊕ N` on `{0, ..., |E_M| + |E_N| - 1}`, with `N` shifted up.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let shift = self.n1();
        let mut bases = Vec::with_capacity(self.bases().len() * other.bases().len());
        for &a in self.bases() {
            for &b in other.bases() {
                bases.push(a | b << shift);
            }
        }
        Self::from_bases_unchecked(self.n1() + other.n1(), bases)
    }

    fn check_mask(&self, s: Mask) -> Result<()> {
        if is_subset(s, self.ground()) {
            Ok(())
        } else {
            Err(Error::SubsetOutOfRange {
                subset: subset::elems(s),
                n: self.n1(),
            })
        }
    }

    pub fn loops(&self) -> Mask {
        let any = self.bases().iter().fold(0, |a, &b| a | b);
        self.ground() & !any
    }

    pub fn coloops(&self) -> Mask {
        self.bases().iter().fold(self.ground(), |a, &b| a & b)
    }

    /// Finest partition of `E` into separators (`rk S + rk(E∖S) = rk E`),
    /// sorted by minimum element.
    pub fn connected_components(&self) -> Vec<Mask> {
        let g = self.ground();
        let r = self.rank();
        let is_sep = |s: Mask| self.rk(s) + self.rk(g & !s) == r;
        let mut remaining = g;
        let mut comps = Vec::new();
        while remaining != 0 {
            let low = remaining & remaining.wrapping_neg();
            // The component of `low` is the smallest separator containing it.
            let comp = subset::subsets(remaining)
                .filter(|&s| s & low != 0 && is_sep(s))
                .min_by_key(|&s| card(s))
                .expect("the remainder is itself a separator");
            comps.push(comp);
            remaining &= !comp;
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Dimension of the base polytope, from the affine span of basis
    /// indicator vectors. Equals `|E|` minus the number of components.
    pub fn base_polytope_dim(&self) -> usize {
        let b0 = self.bases()[0];
        let rows: Vec<Vec<i64>> = self.bases()[1..]
            .iter()
            .map(|&b| {
                (0..self.n1())
                    .map(|i| contains(b, i) as i64 - contains(b0, i) as i64)
                    .collect()
            })
            .collect();
        crate::algebra::linalg::rank_i64(&rows)
    }

    /// `cl(S) = S ∪ {e : rk(S + e) = rk S}`.
    pub fn closure(&self, s: Mask) -> Mask {
        let r = self.rk(s);
        (0..self.n1()).fold(s, |c, e| {
            if self.rk(s | 1 << e) == r {
                c | 1 << e
            } else {
                c
            }
        })
    }

    pub fn is_flat(&self, s: Mask) -> bool {
        self.closure(s) == s
    }

    /// All flats, ordered by size and then by mask.
    pub fn flats(&self) -> Vec<Mask> {
        let mut fl: Vec<Mask> = (0..=self.ground()).filter(|&s| self.is_flat(s)).collect();
        fl.sort_by_key(|&s| (card(s), s));
        fl
    }

    /// Flats that are neither empty nor `E`.
    pub fn proper_flats(&self) -> Vec<Mask> {
        let g = self.ground();
        self.flats()
            .into_iter()
            .filter(|&s| s != 0 && s != g)
            .collect()
    }

    /// Chains of `k` nonempty proper flats `F_1 ⊊ ... ⊊ F_k`.
    pub fn flat_chains(&self, k: usize) -> Vec<Chain> {
        let flats = self.proper_flats();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(flats: &[Mask], k: usize, cur: &mut Vec<Mask>, out: &mut Vec<Chain>, n1: usize) {
            if cur.len() == k {
                out.push(Chain::new_unchecked(cur.clone(), n1));
                return;
            }
            let last = cur.last().copied();
            for &f in flats {
                if last.is_none_or(|l| l != f && is_subset(l, f)) {
                    cur.push(f);
                    rec(flats, k, cur, out, n1);
                    cur.pop();
                }
            }
        }
        rec(&flats, k, &mut cur, &mut out, self.n1());
        out.sort();
        out
    }

    /// Is every flat of `self` a flat of `other`? (`self` is then a quotient
    /// of `other`.) Returns the first flat that fails.
    pub fn quotient_witness(&self, other: &Matroid) -> Option<Mask> {
        self.flats().into_iter().find(|&f| !other.is_flat(f))
    }

    /// The Higgs lift flag `(M_0, ..., M_{n+1})`: `M_i` has as bases the
    /// `i`-subsets that contain or are contained in a basis of `M`.
    pub fn higgs_lift(&self) -> FlagMatroid {
        let r = self.rank();
        let mats = (0..=self.n1())
            .map(|i| {
                let bases = (0..=self.ground()).filter(|&s| {
                    card(s) == i
                        && if i <= r {
                            self.is_independent(s)
                        } else {
                            self.rk(s) == r
                        }
                });
                Self::from_bases_unchecked(self.n1(), bases).expect("Higgs lifts are matroids")
            })
            .collect();
        FlagMatroid::new_unchecked(mats)
    }

    /// Basis lists as sorted element vectors, in increasing mask order.
    pub fn basis_lists(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.bases().iter().map(|&b| subset::elems(b)).collect();
        v.sort();
        v
    }
}

fn forest_size_max(n1: usize, forest: &dyn Fn(Mask) -> Option<usize>) -> usize {
    // Greedy: spanning forests are the bases, so the greedy forest has maximal size.
    let mut s = 0;
    for e in 0..n1 {
        if forest(s | 1 << e).is_some() {
            s |= 1 << e;
        }
    }
    card(s)
}

/// `rk(S) = max |B ∩ S|` for all `S`, via the independence table: `S` is
/// independent iff it lies in some basis, and `rk(S) = |S|` or
/// `max_e rk(S - e)` otherwise.
fn rank_table(n1: usize, bases: &[Mask]) -> Vec<u8> {
    let size = 1usize << n1;
    let mut indep = vec![false; size];
    for &b in bases {
        indep[b as usize] = true;
    }
    for s in (0..size).rev() {
        if !indep[s] {
            indep[s] = (0..n1).any(|e| s >> e & 1 == 0 && indep[s | 1 << e]);
        }
    }
    let mut rk = vec![0u8; size];
    for s in 1..size {
        rk[s] = if indep[s] {
            card(s as Mask) as u8
        } else {
            subset::iter(s as Mask)
                .map(|e| rk[s & !(1 << e)])
                .max()
                .unwrap_or(0)
        };
    }
    rk
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.0.n1 == other.0.n1 && self.0.bases == other.0.bases
    }
}

impl Eq for Matroid {}

impl Hash for Matroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.n1.hash(state);
        self.0.bases.hash(state);
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid(|E|={}, r={}, {} bases)",
            self.n1(),
            self.rank(),
            self.bases().len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use subset::from_elems as m;

    fn example_sum() -> Matroid {
        Matroid::from_basis_lists(3, &[vec![0, 2], vec![1, 2]]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Matroid::from_bases(3, []), Err(Error::EmptyBases));
        assert!(matches!(
            Matroid::from_basis_lists(2, &[vec![0], vec![0, 1]]),
            Err(Error::UnequalCardinality(..))
        ));
        assert!(matches!(
            Matroid::from_basis_lists(4, &[vec![0, 1], vec![2, 3]]),
            Err(Error::ExchangeAxiomViolation { .. })
        ));
        assert!(matches!(
            Matroid::uniform(5, 4),
            Err(Error::RankOutOfRange { r: 5, n: 4 })
        ));
    }

    #[test]
    fn loop_example() {
        let l = Matroid::from_basis_lists(3, &[vec![0], vec![1]]).unwrap();
        assert_eq!(l.rank(), 1);
        assert_eq!(l.loops(), m(&[2]));
        assert_eq!(l.rk(m(&[2])), 0);
    }

    #[test]
    fn ranks_and_minors() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.bases().len(), 6);
        assert_eq!(u24.rk(m(&[0])), 1);
        assert_eq!(u24.rk(m(&[0, 1, 2])), 2);
        assert_eq!(
            u24.contract(m(&[0])).unwrap(),
            Matroid::uniform(1, 3).unwrap()
        );
        assert_eq!(
            Matroid::uniform(1, 3).unwrap().dual(),
            Matroid::uniform(2, 3).unwrap()
        );
        let s = Matroid::uniform(1, 2)
            .unwrap()
            .direct_sum(&Matroid::uniform(1, 1).unwrap())
            .unwrap();
        assert_eq!(s.basis_lists(), vec![vec![0, 2], vec![1, 2]]);
        assert_eq!(
            Matroid::uniform(1, 1).unwrap().contract(1),
            Err(Error::EmptyGroundSetResult)
        );
    }

    #[test]
    fn lex_first_example() {
        let sigma = Perm::new(vec![2, 0, 1]).unwrap();
        assert_eq!(example_sum().lex_first_basis(&sigma), m(&[0, 2]));
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.lex_first_basis(&Perm::identity(4)), m(&[0, 1]));
    }

    #[test]
    fn components_and_flats() {
        assert_eq!(
            example_sum().connected_components(),
            vec![m(&[0, 1]), m(&[2])]
        );
        assert_eq!(
            Matroid::uniform(2, 4).unwrap().connected_components(),
            vec![0b1111]
        );
        assert_eq!(Matroid::uniform(0, 1).unwrap().loops(), 1);
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.proper_flats(), vec![1, 2, 4]);
        assert_eq!(u23.flat_chains(1).len(), 3);
        assert!(!Matroid::uniform(2, 4).unwrap().is_flat(m(&[0, 1])));
        assert_eq!(Matroid::uniform(3, 4).unwrap().flat_chains(2).len(), 12);
    }

    #[test]
    fn graphic_k4() {
        let k4 = Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.rank(), 3);
        assert_eq!(k4.bases().len(), 16);
    }

    #[test]
    fn higgs_of_uniform_is_uniform() {
        let h = Matroid::uniform(2, 4).unwrap().higgs_lift();
        for (i, mi) in h.constituents().iter().enumerate() {
            assert_eq!(*mi, Matroid::uniform(i, 4).unwrap());
        }
    }
}
