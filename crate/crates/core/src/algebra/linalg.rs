use super::ring::{Domain, El};

/// Sylvester matrix of two coefficient vectors given from the constant term
/// upwards. The top entry of either vector may be zero (formal degree).
/// Rows carry coefficients from the leading one down, so the determinant is
/// the usual resultant `lc(f)^deg g * prod g(roots of f)`.
pub(crate) fn sylvester_matrix<R: Domain>(ring: &R, f: &[El<R>], g: &[El<R>]) -> Vec<Vec<El<R>>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![ring.zero(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![ring.zero(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Fraction-free (Bareiss) determinant over an integral domain.
pub(crate) fn determinant<R: Domain>(ring: &R, mut m: Vec<Vec<El<R>>>) -> El<R> {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ring.sub(&ring.mul(&m[i][j], &m[k][k]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring
                    .div_exact(&t, &prev)
                    .expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        ring.neg(&det)
    } else {
        det
    }
}
