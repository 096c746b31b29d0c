//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use super::Rat;

/// Rank of a list of rows.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][col].clone();
        for i in (r + 1)..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &pivot;
            let (lo, hi) = m.split_at_mut(i);
            let (src, dst) = (&lo[r], &mut hi[0]);
            for (d, s) in dst[col..ncols].iter_mut().zip(&src[col..ncols]) {
                *d -= &f * s;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let rows: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| Rat::from_integer(v.into())).collect())
        .collect();
    rank(&rows)
}

/// Whether `v` lies in the rational span of `gens`.
pub fn in_span(gens: &[Vec<Rat>], v: &[Rat]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    let mut with = gens.to_vec();
    with.push(v.to_vec());
    rank(gens) == rank(&with)
}
