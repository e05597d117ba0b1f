//! Smith normal form of small integer relation matrices.
//!
//! Only the diagonal is needed here: the cokernel `Z^k / rowspace(M)` of a
//! relation matrix `M` with `k` columns is `⊕ Z/d_i` over the diagonal.

/// Diagonal of the Smith normal form of `rows` (each of length `ncols`),
/// as nonnegative integers `d_1 | d_2 | ...` of length `min(nrows, ncols)`.
#[allow(clippy::needless_range_loop)] // row operations read one row while writing another
pub fn smith_diagonal(rows: &[Vec<i64>], ncols: usize) -> Vec<i64> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    for row in &m {
        assert_eq!(row.len(), ncols, "ragged relation matrix");
    }
    let nrows = m.len();
    let rank_bound = nrows.min(ncols);
    let mut diag = Vec::with_capacity(rank_bound);

    for t in 0..rank_bound {
        let Some((pi, pj)) = min_nonzero(&m, t, t) else {
            diag.extend(std::iter::repeat_n(0, rank_bound - t));
            break;
        };
        swap_into(&mut m, t, pi, pj);

        loop {
            let pivot = m[t][t];
            let mut clean = true;
            for i in t + 1..nrows {
                let q = m[i][t] / pivot;
                if q != 0 {
                    for j in t..ncols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..ncols {
                let q = m[t][j] / pivot;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                // a smaller remainder now sits in row t or column t
                let (pi, pj) = min_in_cross(&m, t);
                swap_into(&mut m, t, pi, pj);
                continue;
            }
            let offender = (t + 1..nrows)
                .find(|&i| (t + 1..ncols).any(|j| m[i][j] % pivot != 0));
            match offender {
                Some(i) => {
                    for j in t..ncols {
                        m[t][j] += m[i][j];
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

/// Invariant factors (> 1) of the finite group `Z^ncols / rowspace(rows)`.
///
/// Returns `None` when the quotient is infinite.
pub fn cokernel_invariants(rows: &[Vec<i64>], ncols: usize) -> Option<Vec<u64>> {
    let diag = smith_diagonal(rows, ncols);
    if diag.len() < ncols || diag.contains(&0) {
        return None;
    }
    Some(diag.into_iter().filter(|&d| d > 1).map(|d| d as u64).collect())
}

fn min_nonzero(m: &[Vec<i64>], r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(r0) {
        for (j, &v) in row.iter().enumerate().skip(c0) {
            if v != 0 && best.is_none_or(|(bi, bj)| v.abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_in_cross(m: &[Vec<i64>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_abs = m[t][t].abs();
    for (i, row) in m.iter().enumerate().skip(t) {
        let v = row[t].abs();
        if v != 0 && (best_abs == 0 || v < best_abs) {
            best = (i, t);
            best_abs = v;
        }
    }
    for (j, &v) in m[t].iter().enumerate().skip(t) {
        if v != 0 && (best_abs == 0 || v.abs() < best_abs) {
            best = (t, j);
            best_abs = v.abs();
        }
    }
    best
}

fn swap_into(m: &mut [Vec<i64>], t: usize, i: usize, j: usize) {
    m.swap(t, i);
    if j != t {
        for row in m.iter_mut() {
            row.swap(t, j);
        }
    }
}
