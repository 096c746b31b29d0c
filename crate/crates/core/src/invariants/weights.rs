//! Minkowski weights on the permutohedral fan: Bergman and CSM classes of
//! matroids, computed from flats and from restricted Chern classes.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::tutte::beta_pair;
use crate::algebra::linalg::in_span;
use crate::algebra::{Int, Rat, SparsePoly};
use crate::engine::{Engine, GradedProblem};
use crate::error::{Error, Result};
use crate::matroid::subset::{self, Mask};
use crate::matroid::{all_chains, Chain, Matroid};
use crate::taut::{ChernFactor, KClass};

/// An integer weight on the chains of length `dim`; only nonzero entries
/// are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinkowskiWeight {
    pub n1: usize,
    pub dim: usize,
    pub weights: BTreeMap<Chain, Int>,
}

impl MinkowskiWeight {
    pub fn new(n1: usize, dim: usize) -> Self {
        MinkowskiWeight {
            n1,
            dim,
            weights: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, c: Chain, w: Int) {
        if w.is_zero() {
            self.weights.remove(&c);
        } else {
            self.weights.insert(c, w);
        }
    }

    pub fn get(&self, c: &Chain) -> Int {
        self.weights.get(c).cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    /// `self + a·other - ...`: entrywise integer combination.
    pub fn combine(parts: &[(i64, &MinkowskiWeight)]) -> Result<MinkowskiWeight> {
        let (n1, dim) = (parts[0].1.n1, parts[0].1.dim);
        if parts.iter().any(|(_, w)| w.n1 != n1 || w.dim != dim) {
            return Err(Error::InvalidArgument("weights of different shapes".into()));
        }
        let mut out = MinkowskiWeight::new(n1, dim);
        for (a, w) in parts {
            for (c, x) in &w.weights {
                let v = out.get(c) + x * Int::from(*a);
                out.set(c.clone(), v);
            }
        }
        Ok(out)
    }
}

/// `∫_{X_N} c(S_N, z) c(Q_N, w)` for the minors met along chains, cached.
pub struct MinorIntegrals<'a> {
    engine: &'a Engine,
    memo: HashMap<Matroid, SparsePoly>,
}

pub const ZW: [&str; 2] = ["z", "w"];

impl<'a> MinorIntegrals<'a> {
    pub fn new(engine: &'a Engine) -> Self {
        MinorIntegrals {
            engine,
            memo: HashMap::new(),
        }
    }

    pub fn of(&mut self, n: &Matroid) -> Result<SparsePoly> {
        if let Some(p) = self.memo.get(n) {
            return Ok(p.clone());
        }
        let p = GradedProblem::new(
            n.n1(),
            &ZW,
            vec![
                ChernFactor::chern(KClass::s(n), "z"),
                ChernFactor::chern(KClass::q(n), "w"),
            ],
        )?;
        let v = self.engine.integrate_graded(&p)?;
        self.memo.insert(n.clone(), v.clone());
        Ok(v)
    }

    /// `∫_{X_E} c(S_M, z) c(Q_M, w) [Z_𝒮]` as the product over the gaps.
    pub fn on_chain(&mut self, m: &Matroid, c: &Chain) -> Result<SparsePoly> {
        let mut acc = SparsePoly::one(&ZW);
        for (lo, hi) in c.gaps() {
            acc = &acc * &self.of(&m.minor(hi, lo)?)?;
        }
        Ok(acc)
    }
}

fn loopless(m: &Matroid) -> bool {
    m.loops() == 0
}

fn check_rank(m: &Matroid) -> Result<()> {
    if m.rank() == 0 {
        return Err(Error::InvalidArgument(
            "rank-zero matroids carry no weight of dimension r - 1".into(),
        ));
    }
    Ok(())
}

/// Weight 1 on every maximal chain of nonempty proper flats of a loopless
/// matroid, 0 otherwise.
pub fn bergman_combinatorial(m: &Matroid) -> Result<MinkowskiWeight> {
    check_rank(m)?;
    let mut out = MinkowskiWeight::new(m.n1(), m.rank() - 1);
    if loopless(m) {
        for c in m.flat_chains(m.rank() - 1) {
            out.set(c, Int::one());
        }
    }
    Ok(out)
}

/// `(-1)^{r-1-k} Π β(M|S_{i+1}/S_i)` on chains of flats of a loopless matroid.
pub fn csm_combinatorial(m: &Matroid, k: usize) -> Result<MinkowskiWeight> {
    check_rank(m)?;
    if k >= m.rank() {
        return Err(Error::InvalidArgument(format!(
            "k = {k} not below the rank {}",
            m.rank()
        )));
    }
    let mut out = MinkowskiWeight::new(m.n1(), k);
    if !loopless(m) {
        return Ok(out);
    }
    let sign = crate::algebra::sign(m.rank() - 1 - k);
    let mut betas: HashMap<Matroid, Int> = HashMap::new();
    for c in m.flat_chains(k) {
        let mut w = Int::from(sign);
        for (lo, hi) in c.gaps() {
            let minor = m.minor(hi, lo)?;
            let b = betas
                .entry(minor.clone())
                .or_insert_with(|| beta_pair(&minor).0);
            w *= &*b;
        }
        out.set(c, w);
    }
    Ok(out)
}

/// The Poincaré dual of `c_{r-1-k}(S_M) c_{|E|-r}(Q_M)` evaluated on every
/// chain of length `k`.
pub fn csm_geometric(
    ints: &mut MinorIntegrals<'_>,
    m: &Matroid,
    k: usize,
) -> Result<MinkowskiWeight> {
    check_rank(m)?;
    if k >= m.rank() {
        return Err(Error::InvalidArgument(format!(
            "k = {k} not below the rank {}",
            m.rank()
        )));
    }
    let mono = [(m.rank() - 1 - k) as u32, m.corank() as u32];
    let mut out = MinkowskiWeight::new(m.n1(), k);
    for c in all_chains(m.n1(), k) {
        let w = ints.on_chain(m, &c)?.coefficient_of(&mono);
        if !w.is_integer() {
            return Err(Error::NonIntegral(crate::algebra::rat_to_string(&w)));
        }
        out.set(c, w.to_integer());
    }
    Ok(out)
}

fn compare(a: MinkowskiWeight, b: &MinkowskiWeight, what: &str) -> Result<MinkowskiWeight> {
    if &a != b {
        let chain = a
            .weights
            .keys()
            .chain(b.weights.keys())
            .find(|c| a.get(c) != b.get(c))
            .map(|c| format!("{:?}", c.to_lists()))
            .unwrap_or_default();
        return Err(Error::RouteMismatch(format!("{what} at chain {chain}")));
    }
    Ok(a)
}

/// The Bergman class, with the flat-chain and Chern-class routes compared.
pub fn bergman_weight(engine: &Engine, m: &Matroid) -> Result<MinkowskiWeight> {
    let comb = bergman_combinatorial(m)?;
    let geo = csm_geometric(&mut MinorIntegrals::new(engine), m, m.rank() - 1)?;
    compare(comb, &geo, "Bergman weight")
}

/// The `k`-dimensional CSM class, with both routes compared.
pub fn csm_weight(engine: &Engine, m: &Matroid, k: usize) -> Result<MinkowskiWeight> {
    csm_weight_with(&mut MinorIntegrals::new(engine), m, k)
}

pub fn csm_weight_with(
    ints: &mut MinorIntegrals<'_>,
    m: &Matroid,
    k: usize,
) -> Result<MinkowskiWeight> {
    let comb = csm_combinatorial(m, k)?;
    let geo = csm_geometric(ints, m, k)?;
    compare(comb, &geo, &format!("CSM weight k = {k}"))
}

fn indicator(n1: usize, s: Mask) -> Vec<Rat> {
    (0..n1)
        .map(|i| {
            if subset::contains(s, i) {
                Rat::one()
            } else {
                Rat::zero()
            }
        })
        .collect()
}

/// The balancing condition: for every chain `τ'` of length `d - 1`, the sum
/// of `Δ(τ) ē_{τ∖τ'}` over the chains `τ` refining it lies in the span of
/// the `ē_S`, `S ∈ τ'`, modulo the all-ones vector. Returns a failing `τ'`.
pub fn mw_balance_check(w: &MinkowskiWeight) -> Option<Chain> {
    if w.dim == 0 {
        return None;
    }
    let n1 = w.n1;
    let mut sums: BTreeMap<Chain, Vec<Rat>> = BTreeMap::new();
    for (c, x) in &w.weights {
        let sets = c.sets();
        for i in 0..sets.len() {
            let mut rest = sets.to_vec();
            let s = rest.remove(i);
            let face = Chain::new(rest, n1).expect("subchain of a chain");
            let acc = sums.entry(face).or_insert_with(|| vec![Rat::zero(); n1]);
            for (a, e) in acc.iter_mut().zip(indicator(n1, s)) {
                *a += e * Rat::from_integer(x.clone());
            }
        }
    }
    for (face, v) in sums {
        let mut gens: Vec<Vec<Rat>> = face.sets().iter().map(|&s| indicator(n1, s)).collect();
        gens.push(vec![Rat::one(); n1]);
        if !in_span(&gens, &v) {
            return Some(face);
        }
    }
    None
}

/// `∫ c_j(Q_M) [Z_𝒮] ∈ {0, 1}`, equal to 1 exactly when `crk_M - j` gap
/// minors are loops and the others are rank-one uniform. Returns a chain
/// where either the value or the pattern disagrees.
pub fn mw_chern_dichotomy_check(
    ints: &mut MinorIntegrals<'_>,
    m: &Matroid,
    j: usize,
) -> Result<Option<Chain>> {
    let n1 = m.n1();
    if j > n1 - 1 {
        return Err(Error::InvalidArgument(format!(
            "degree {j} above dim {}",
            n1 - 1
        )));
    }
    let k = n1 - 1 - j;
    for c in all_chains(n1, k) {
        let v = ints.on_chain(m, &c)?.coefficient_of(&[0, j as u32]);
        let mut loops = 0usize;
        let mut ok = true;
        for (lo, hi) in c.gaps() {
            let minor = m.minor(hi, lo)?;
            if minor.n1() == 1 && minor.rank() == 0 {
                loops += 1;
            } else if minor.rank() != 1 || minor.loops() != 0 {
                ok = false;
            }
        }
        let expect = ok && m.corank().checked_sub(j) == Some(loops);
        let want = if expect { Rat::one() } else { Rat::zero() };
        if v != want {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine() -> Engine {
        Engine::new(7, 1)
    }

    #[test]
    fn bergman_of_u23_and_u34() {
        let e = engine();
        let w = bergman_weight(&e, &Matroid::uniform(2, 3).unwrap()).unwrap();
        assert_eq!(w.weights.len(), 3);
        assert!(w
            .weights
            .keys()
            .all(|c| c.len() == 1 && subset::card(c.sets()[0]) == 1));
        assert_eq!(mw_balance_check(&w), None);
        let w = bergman_weight(&e, &Matroid::uniform(3, 4).unwrap()).unwrap();
        assert_eq!(w.weights.len(), 12);
    }

    #[test]
    fn loops_give_zero() {
        let e = engine();
        let m = Matroid::from_basis_lists(3, &[vec![0], vec![1]]).unwrap();
        assert!(bergman_weight(&e, &m).unwrap().is_zero());
        assert!(csm_weight(&e, &m, 0).unwrap().is_zero());
    }

    #[test]
    fn csm_zero_of_u23() {
        let e = engine();
        let w = csm_weight(&e, &Matroid::uniform(2, 3).unwrap(), 0).unwrap();
        assert_eq!(w.weights.len(), 1);
        assert_eq!(w.get(&Chain::empty(3)), Int::from(-1));
    }

    #[test]
    fn perturbed_weight_fails_balancing() {
        let e = engine();
        let mut w = bergman_weight(&e, &Matroid::uniform(2, 3).unwrap()).unwrap();
        let c = w.weights.keys().next().unwrap().clone();
        w.set(c, Int::from(2));
        assert!(mw_balance_check(&w).is_some());
    }

    #[test]
    fn rank_zero_is_rejected() {
        assert!(matches!(
            bergman_combinatorial(&Matroid::uniform(0, 2).unwrap()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn chern_dichotomy() {
        let e = engine();
        let mut ints = MinorIntegrals::new(&e);
        let m = Matroid::uniform(2, 4).unwrap();
        for j in 0..=3 {
            assert_eq!(
                mw_chern_dichotomy_check(&mut ints, &m, j).unwrap(),
                None,
                "j = {j}"
            );
        }
    }
}
