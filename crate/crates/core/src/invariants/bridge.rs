//! Euler characteristics of tautological K-classes and the invariants they
//! encode: Tutte polynomials, lattice-point counts and the g-polynomial.
//! Each χ is computed by K-theoretic localization and, on small ground
//! sets, again through the Chow ring after the `T_i ↦ 1 + t_i` substitution.

use num_traits::{One, Zero};

use super::transform::{cf_specialization, t_transform};
use super::tutte::{tutte_delcontr, TUTTE_VARS};
use crate::algebra::interp::interpolate_univariate;
use crate::algebra::psi::psi_transform;
use crate::algebra::{binom, Int, Mono, Rat, SparsePoly};
use crate::engine::{Engine, GradedProblem, Stats};
use crate::error::{Error, Result};
use crate::genperm::GenPerm;
use crate::matroid::Matroid;
use crate::taut::{ChernFactor, KClass};

/// Largest ground set on which every χ is also computed through the Chow ring.
pub const ZETA_CHECK_LIMIT: usize = 5;

fn rat(i: i64) -> Rat {
    Rat::from_integer(i.into())
}

/// `χ` of each class, cross-checked against the Chow-ring route when the
/// ground set is small.
pub fn euler_chars(engine: &Engine, classes: &[KClass]) -> Result<Vec<Int>> {
    let chis = engine.euler_chars_ab(classes)?;
    if classes.first().is_some_and(|c| c.n1() <= ZETA_CHECK_LIMIT) {
        for (c, chi) in classes.iter().zip(&chis) {
            let z = engine.chi_zeta(c)?;
            if z != *chi {
                return Err(Error::ChiRouteMismatch(format!(
                    "localization gives {chi}, the zeta route gives {z}"
                )));
            }
            Stats::bump(&engine.counters().chi_route_agreements, 1);
        }
    }
    Ok(chis)
}

fn shifted_sum(table: &[(usize, usize, Int)], a: i64, b: i64, vars: &[&str]) -> SparsePoly {
    // Σ χ_ij (u + a)^i (v + b)^j
    let mut out = SparsePoly::zero(vars);
    for (i, j, chi) in table {
        for p in 0..=*i {
            for q in 0..=*j {
                let c = chi
                    * binom(*i as i64, p as i64)
                    * binom(*j as i64, q as i64)
                    * Int::from(a).pow((*i - p) as u32)
                    * Int::from(b).pow((*j - q) as u32);
                out.add_term(Mono(vec![p as u32, q as u32]), Rat::from_integer(c));
            }
        }
    }
    out
}

pub const FS_VARS: [&str; 2] = ["u", "v"];

/// `Σ_{i,j} χ([det S_M^∨][∧^i S_M][∧^j Q_M^∨]) (u-1)^i (v-1)^j`, which must
/// equal `T_M(u, v)`.
pub fn fs_tutte(engine: &Engine, m: &Matroid) -> Result<SparsePoly> {
    let s = KClass::s(m);
    let det = s.dual().det();
    let qd = KClass::q(m).dual();
    let mut idx = Vec::new();
    let mut classes = Vec::new();
    for i in 0..=m.rank() {
        for j in 0..=m.corank() {
            classes.push(KClass::product(&[&det, &s.wedge(i), &qd.wedge(j)])?);
            idx.push((i, j));
        }
    }
    let chis = euler_chars(engine, &classes)?;
    let table: Vec<_> = idx
        .into_iter()
        .zip(chis)
        .map(|((i, j), c)| (i, j, c))
        .collect();
    let out = shifted_sum(&table, -1, -1, &FS_VARS);
    let expected = tutte_delcontr(m).with_vars(&TUTTE_VARS)?;
    let as_uv = SparsePoly::from_terms(
        &FS_VARS,
        expected.terms().map(|(e, c)| (e.0.clone(), c.clone())),
    );
    if out != as_uv {
        return Err(Error::RouteMismatch(format!(
            "K-theoretic Tutte {out} differs from {as_uv}"
        )));
    }
    Ok(out)
}

/// The polytope `-P(M) + tΔ + u∇` whose line bundle twists `det S_M^∨`.
fn cf_polytope(m: &Matroid, t: i64, u: i64) -> Result<GenPerm> {
    let n1 = m.n1();
    GenPerm::base_polytope(m)
        .negate()
        .minkowski_sum(&GenPerm::delta(n1).dilate(t)?)?
        .minkowski_sum(&GenPerm::nabla(n1).dilate(u)?)
}

/// Result of the lattice-point check of the Tutte polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfReport {
    /// `Q_M(t, u)` on the grid, row-major in `t`.
    pub grid: Vec<Vec<Int>>,
    /// `Q_M` interpolated, in `t, u`.
    pub q: SparsePoly,
    /// `Ψ(Q_M)` in `x, y`.
    pub psi: SparsePoly,
}

/// Samples `Q_M(t, u) = χ(O(D_{-P(M)+tΔ+u∇}))` on `0..=t_range × 0..=u_range`
/// and compares each value with the lattice-point count of
/// `P(M) + t∇ + uΔ`. Then interpolates `Q_M` (degree at most `n` in each
/// variable) and checks `Ψ(Q_M)(x, y) = t_M(x+1, y, 1, 0)`.
pub fn cf_check(engine: &Engine, m: &Matroid, t_range: usize, u_range: usize) -> Result<CfReport> {
    let n1 = m.n1();
    let n = n1 - 1;
    let mut classes = Vec::new();
    for t in 0..=t_range {
        for u in 0..=u_range {
            classes.push(KClass::line(&cf_polytope(m, t as i64, u as i64)?));
        }
    }
    let chis = euler_chars(engine, &classes)?;
    let mut grid = vec![Vec::with_capacity(u_range + 1); t_range + 1];
    let base = GenPerm::base_polytope(m);
    for t in 0..=t_range {
        for u in 0..=u_range {
            let chi = &chis[t * (u_range + 1) + u];
            let p = base
                .minkowski_sum(&GenPerm::nabla(n1).dilate(t as i64)?)?
                .minkowski_sum(&GenPerm::delta(n1).dilate(u as i64)?)?;
            let count = Int::from(p.count_lattice_points(engine.max_ground())?);
            if count != *chi {
                return Err(Error::CountMismatch {
                    at: format!("(t, u) = ({t}, {u})"),
                    count: count.to_string(),
                    chi: chi.to_string(),
                });
            }
            grid[t].push(count);
        }
    }
    if t_range < n || u_range < n {
        return Err(Error::InvalidArgument(format!(
            "interpolating Q_M needs ranges of at least {n}"
        )));
    }
    let q = interpolate_grid(&grid, n)?;
    let psi = psi_transform(&q, &TUTTE_VARS);
    let want = cf_specialization(&t_transform(m)?)?;
    if psi != want {
        return Err(Error::IdentityFailure(format!(
            "Ψ(Q_M) = {psi}, expected {want}"
        )));
    }
    Ok(CfReport { grid, q, psi })
}

/// Interpolates `Q(t, u)` of degree at most `d` in each variable from its
/// values on `0..=T × 0..=U`; extra samples are verified.
fn interpolate_grid(grid: &[Vec<Int>], d: usize) -> Result<SparsePoly> {
    let vars = ["t", "u"];
    // Interpolate in u for each t, then each u-coefficient in t.
    let rows: Vec<SparsePoly> = grid
        .iter()
        .map(|row| {
            let samples: Vec<(Rat, Rat)> = row
                .iter()
                .enumerate()
                .map(|(u, v)| (rat(u as i64), Rat::from_integer(v.clone())))
                .collect();
            interpolate_univariate(&samples, d, "u")
        })
        .collect::<Result<_>>()?;
    let mut out = SparsePoly::zero(&vars);
    for k in 0..=d as u32 {
        let samples: Vec<(Rat, Rat)> = rows
            .iter()
            .enumerate()
            .map(|(t, p)| (rat(t as i64), p.coefficient_of(&[k])))
            .collect();
        let ck = interpolate_univariate(&samples, d, "t")?;
        for (e, c) in ck.terms() {
            out.add_term(Mono(vec![e.0[0], k]), c.clone());
        }
    }
    Ok(out)
}

/// `χ(O(D_{cP}))`, compared with the number of lattice points of `cP`.
pub fn ehrhart(engine: &Engine, p: &GenPerm, c: i64) -> Result<Int> {
    let d = p.dilate(c)?;
    let chi = euler_chars(engine, &[KClass::line(&d)])?.remove(0);
    let count = Int::from(d.count_lattice_points(engine.max_ground())?);
    if chi != count {
        return Err(Error::CountMismatch {
            at: format!("dilation {c}"),
            count: count.to_string(),
            chi: chi.to_string(),
        });
    }
    Ok(chi)
}

pub const G_VARS: [&str; 1] = ["s"];

fn check_g_input(m: &Matroid) -> Result<()> {
    if m.loops() != 0 || m.coloops() != 0 {
        return Err(Error::LoopOrColoopPresent);
    }
    Ok(())
}

fn comp_sign(m: &Matroid) -> i64 {
    if m.connected_components().len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// K route: `g(s) = (-1)^{comp} H(-s)` with
/// `H(s) = Σ_{i,j} χ([∧^i S_M][∧^j Q_M^∨]) (s - 1)^i (-1)^j`.
pub fn g_polynomial_k(engine: &Engine, m: &Matroid) -> Result<SparsePoly> {
    check_g_input(m)?;
    let s = KClass::s(m);
    let qd = KClass::q(m).dual();
    let mut idx = Vec::new();
    let mut classes = Vec::new();
    for i in 0..=m.rank() {
        for j in 0..=m.corank() {
            classes.push(KClass::product(&[&s.wedge(i), &qd.wedge(j)])?);
            idx.push((i, j));
        }
    }
    let chis = euler_chars(engine, &classes)?;
    let mut coeffs = vec![Int::zero(); m.rank() + 1];
    for ((i, j), chi) in idx.into_iter().zip(chis) {
        let c = if j % 2 == 0 { chi } else { -chi };
        // (s - 1)^i, evaluated at -s: (-1)^i (s + 1)^i.
        let sign_i = crate::algebra::sign(i);
        for (p, slot) in coeffs.iter_mut().enumerate().take(i + 1) {
            *slot += &c * binom(i as i64, p as i64) * sign_i;
        }
    }
    let g = comp_sign(m);
    Ok(SparsePoly::from_terms(
        &G_VARS,
        coeffs
            .into_iter()
            .enumerate()
            .map(|(p, c)| (vec![p as u32], Rat::from_integer(c * g))),
    ))
}

/// Chow route: `(-1)^{comp} Σ_i deg_α(c(Q_M^∨) c_{r-i}(S_M^∨) c_{|E|-r}(Q_M)) (-s)^i`.
pub fn g_polynomial_chow(engine: &Engine, m: &Matroid) -> Result<SparsePoly> {
    check_g_input(m)?;
    let vars = ["a", "c", "z", "w"];
    let p = GradedProblem::new(
        m.n1(),
        &vars,
        vec![
            ChernFactor::alpha("a"),
            ChernFactor::chern(KClass::q(m).dual(), "c"),
            ChernFactor::chern(KClass::s(m).dual(), "z"),
            ChernFactor::fixed_power(KClass::q(m), m.corank(), "w"),
        ],
    )?;
    let top = engine.integrate_graded(&p)?;
    let r = m.rank();
    let mut coeffs = vec![Int::zero(); r + 1];
    for (e, c) in top.terms() {
        let (z, w) = (e.0[2] as usize, e.0[3] as usize);
        if w == m.corank() && z <= r {
            let i = r - z;
            coeffs[i] += c.to_integer() * crate::algebra::sign(i);
        }
    }
    let g = comp_sign(m);
    Ok(SparsePoly::from_terms(
        &G_VARS,
        coeffs
            .into_iter()
            .enumerate()
            .map(|(p, c)| (vec![p as u32], Rat::from_integer(c * g))),
    ))
}

/// The g-polynomial, with both routes compared.
pub fn g_polynomial(engine: &Engine, m: &Matroid) -> Result<SparsePoly> {
    let k = g_polynomial_k(engine, m)?;
    let c = g_polynomial_chow(engine, m)?;
    if k != c {
        return Err(Error::RouteMismatch(format!(
            "g-polynomial: K route {k}, Chow route {c}"
        )));
    }
    Ok(c)
}

/// `χ(O_{X_E})`, which is 1.
pub fn chi_structure_sheaf(engine: &Engine, n1: usize) -> Result<Int> {
    let one = KClass::one(n1);
    let chi = engine.euler_char_ab(&one)?;
    if n1 <= ZETA_CHECK_LIMIT {
        let z = engine.chi_zeta(&one)?;
        if z != chi {
            return Err(Error::ChiRouteMismatch(format!(
                "χ(O) is {chi} by localization, {z} by the zeta route"
            )));
        }
    }
    Ok(chi)
}

/// The exterior-power identity for classes with simple Chern roots,
/// `Σ_i ζ(∧^i E) u^i = (u+1)^{rk} c(E, u/(u+1))` for `E = S_M^∨`, checked at
/// every fixed point for rational `t` and several `u`.
pub fn simple_chern_check(engine: &Engine, m: &Matroid) -> Result<Option<crate::matroid::Perm>> {
    use crate::taut::{chern_from_roots, roots, FixedPoint};
    let e = KClass::s(m).dual();
    let rk = m.rank();
    let n1 = m.n1();
    for (k, sigma) in crate::matroid::Perm::all(n1).enumerate() {
        let t: Vec<Rat> = engine
            .generic_point("simple-chern", k as u64, n1)
            .into_iter()
            .map(|x| Rat::new(x.into(), 7.into()))
            .collect();
        for u in [rat(2), Rat::new(1.into(), 3.into()), rat(-5)] {
            let mut lhs = Rat::zero();
            let mut up = Rat::one();
            for i in 0..=rk {
                lhs += e.wedge(i).at(&sigma)?.zeta_eval(&t) * &up;
                up *= &u;
            }
            let bases = e.bases_at(&sigma);
            let fp = FixedPoint {
                sigma: &sigma,
                bases: &bases,
            };
            let r = roots(e.desc(), n1, e.matroids(), &fp, &t)
                .map_err(crate::taut::EvalFail::into_error)?;
            let c = chern_from_roots(&r, rk).map_err(crate::taut::EvalFail::into_error)?;
            let x = &u / (&u + Rat::one());
            let mut cval = Rat::zero();
            let mut xp = Rat::one();
            for ci in &c {
                cval += ci * &xp;
                xp *= &x;
            }
            let mut rhs = cval;
            for _ in 0..rk {
                rhs *= &u + Rat::one();
            }
            if lhs != rhs {
                return Ok(Some(sigma));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine() -> Engine {
        Engine::new(11, 1)
    }

    #[test]
    fn fs_small() {
        let e = engine();
        let p = fs_tutte(&e, &Matroid::uniform(1, 2).unwrap()).unwrap();
        assert_eq!(p.to_string(), "u + v");
        fs_tutte(&e, &Matroid::uniform(2, 4).unwrap()).unwrap();
    }

    #[test]
    fn structure_sheaf() {
        let e = engine();
        for n1 in 1..=4 {
            assert_eq!(chi_structure_sheaf(&e, n1).unwrap(), Int::one());
        }
    }

    #[test]
    fn hypersimplex_count() {
        let e = engine();
        let p = GenPerm::base_polytope(&Matroid::uniform(2, 4).unwrap());
        assert_eq!(ehrhart(&e, &p, 1).unwrap(), Int::from(6));
        assert_eq!(ehrhart(&e, &GenPerm::delta(2), 3).unwrap(), Int::from(4));
    }

    #[test]
    fn cf_u24() {
        let e = engine();
        let rep = cf_check(&e, &Matroid::uniform(2, 4).unwrap(), 3, 3).unwrap();
        assert_eq!(rep.grid[0][0], Int::from(6));
    }

    #[test]
    fn g_rejects_loops() {
        let e = engine();
        let m = Matroid::from_basis_lists(3, &[vec![0], vec![1]]).unwrap();
        assert!(matches!(
            g_polynomial(&e, &m),
            Err(Error::LoopOrColoopPresent)
        ));
    }

    #[test]
    fn simple_chern_identity() {
        assert_eq!(
            simple_chern_check(&engine(), &Matroid::uniform(2, 4).unwrap()).unwrap(),
            None
        );
    }
}
