//! Checked `i128` kernels for the small-entry matrices that dominate the
//! enumeration loops (boundary matrices have entries in {0, ±1}, and their
//! minors stay small). Every routine returns `None` on overflow so callers can
//! retry with the big-integer implementation.

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Column span built incrementally, supporting stack-like backtracking.
///
/// Each stored vector is primitive and has a pivot coordinate at which every
/// later vector vanishes, so reduction never disturbs earlier pivots.
#[derive(Clone, Debug)]
pub struct IncrementalBasis {
    dim: usize,
    pivots: Vec<usize>,
    vectors: Vec<Vec<i128>>,
}

impl IncrementalBasis {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            pivots: Vec::new(),
            vectors: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduce `v` against the basis in place. Afterwards `v` is zero exactly
    /// when it lay in the span.
    pub fn reduce(&self, v: &mut [i128]) -> Option<()> {
        debug_assert_eq!(v.len(), self.dim);
        for (&p, b) in self.pivots.iter().zip(&self.vectors) {
            let c = v[p];
            if c == 0 {
                continue;
            }
            let bp = b[p];
            let g = gcd(bp, c);
            let (mb, mc) = (bp / g, c / g);
            for (x, &y) in v.iter_mut().zip(b) {
                *x = x.checked_mul(mb)?.checked_sub(y.checked_mul(mc)?)?;
            }
            let content = v.iter().fold(0, |acc, &x| gcd(acc, x));
            if content > 1 {
                v.iter_mut().for_each(|x| *x /= content);
            }
        }
        Some(())
    }

    pub fn contains(&self, v: &[i128]) -> Option<bool> {
        let mut w = v.to_vec();
        self.reduce(&mut w)?;
        Some(w.iter().all(|&x| x == 0))
    }

    /// Insert `v` if it is independent of the current span. Returns whether it
    /// was inserted.
    pub fn try_insert(&mut self, v: &[i128]) -> Option<bool> {
        let mut w = v.to_vec();
        self.reduce(&mut w)?;
        match w.iter().position(|&x| x != 0) {
            None => Some(false),
            Some(p) => {
                self.pivots.push(p);
                self.vectors.push(w);
                Some(true)
            }
        }
    }

    /// Drop the most recently inserted vector.
    pub fn pop(&mut self) {
        self.pivots.pop();
        self.vectors.pop();
    }

    pub fn truncate(&mut self, len: usize) {
        self.pivots.truncate(len);
        self.vectors.truncate(len);
    }
}

/// Column `j` of a row-major `rows x cols` matrix, widened.
pub fn column(rows: usize, cols: usize, data: &[i64], j: usize) -> Vec<i128> {
    (0..rows).map(|i| data[i * cols + j] as i128).collect()
}

pub fn rank(rows: usize, cols: usize, data: &[i64]) -> Option<usize> {
    let mut basis = IncrementalBasis::new(rows);
    for j in 0..cols {
        basis.try_insert(&column(rows, cols, data, j))?;
    }
    Some(basis.len())
}

/// Bareiss fraction-free determinant.
pub fn det(n: usize, data: &[i64]) -> Option<i128> {
    let mut a: Vec<i128> = data.iter().map(|&x| x as i128).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i * n + k] != 0) else {
            return Some(0);
        };
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let aik = a[i * n + k];
            for j in k + 1..n {
                let v = a[i * n + j]
                    .checked_mul(pivot)?
                    .checked_sub(aik.checked_mul(a[k * n + j])?)?;
                a[i * n + j] = v / prev;
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    if n == 0 {
        return Some(1);
    }
    sign.checked_mul(a[n * n - 1])
}

/// Nonzero invariant factors (Smith diagonal) without transforms.
pub fn invariant_factors(rows: usize, cols: usize, data: &[i64]) -> Option<Vec<i128>> {
    let mut a: Vec<i128> = data.iter().map(|&x| x as i128).collect();
    let idx = |i: usize, j: usize| i * cols + j;
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero pivot in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = a[idx(i, j)];
                if v != 0 && best.is_none_or(|(bi, bj)| v.abs() < a[idx(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut a, cols, t, pi);
        swap_cols(&mut a, cols, rows, t, pj);
        loop {
            let p = a[idx(t, t)];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[idx(i, t)] / p;
                if q != 0 {
                    for j in t..cols {
                        a[idx(i, j)] = a[idx(i, j)].checked_sub(q.checked_mul(a[idx(t, j)])?)?;
                    }
                }
                if a[idx(i, t)] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a[idx(t, j)] / p;
                if q != 0 {
                    for i in t..rows {
                        a[idx(i, j)] = a[idx(i, j)].checked_sub(q.checked_mul(a[idx(i, t)])?)?;
                    }
                }
                if a[idx(t, j)] != 0 {
                    clean = false;
                }
            }
            if !clean {
                let mut best = (t, t);
                for i in t + 1..rows {
                    let v = a[idx(i, t)];
                    if v != 0 && v.abs() < a[idx(best.0, best.1)].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    let v = a[idx(t, j)];
                    if v != 0 && v.abs() < a[idx(best.0, best.1)].abs() {
                        best = (t, j);
                    }
                }
                swap_rows(&mut a, cols, t, best.0);
                swap_cols(&mut a, cols, rows, t, best.1);
                continue;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| a[idx(i, j)] % p != 0);
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        a[idx(t, j)] = a[idx(t, j)].checked_add(a[idx(i, j)])?;
                    }
                }
                None => break,
            }
        }
        out.push(a[idx(t, t)].abs());
        t += 1;
    }
    Some(out)
}

fn swap_rows(a: &mut [i128], cols: usize, r1: usize, r2: usize) {
    if r1 != r2 {
        for j in 0..cols {
            a.swap(r1 * cols + j, r2 * cols + j);
        }
    }
}

fn swap_cols(a: &mut [i128], cols: usize, rows: usize, c1: usize, c2: usize) {
    if c1 != c2 {
        for i in 0..rows {
            a.swap(i * cols + c1, i * cols + c2);
        }
    }
}
