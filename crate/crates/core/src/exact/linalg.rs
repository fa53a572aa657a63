//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use super::Q;

/// Row-reduced echelon form of a dense matrix given as rows. Returns the
/// reduced rows (zero rows dropped) and the pivot column of each.
pub fn row_reduce(rows: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..ncols {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    row_reduce(rows).1.len()
}

/// Basis of `{v : A v = 0}` for `A` given by `rows` with `ncols` columns.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (reduced, pivots) = row_reduce(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::from_integer(1.into());
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Whether `v` lies in the span of `vectors`.
pub fn in_span(vectors: &[Vec<Q>], v: &[Q]) -> bool {
    let base = rank(vectors);
    let mut extended = vectors.to_vec();
    extended.push(v.to_vec());
    rank(&extended) == base
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect()
    }

    #[test]
    fn rank_of_cyclic_laplacian() {
        // I - P for the 4-cycle permutation P is singular of rank 3
        let a = m(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1], &[-1, 0, 0, 1]]);
        assert_eq!(rank(&a), 3);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = nullspace(&a, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let dot: Q = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn span_membership() {
        let vs = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert!(in_span(&vs, &m(&[&[2, 3, 5]])[0]));
        assert!(!in_span(&vs, &m(&[&[0, 0, 1]])[0]));
    }
}
