//! Dense linear algebra over `F_p`. Vectors are `Vec<u64>` with entries in
//! `0..p`.

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fp(pub u64);

impl Fp {
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.0 as i64) as u64
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.0 != 0);
        let (mut base, mut exp, mut acc) = (a % self.0, self.0 - 2, 1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&self, rows: &mut [Vec<u64>]) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..ncols {
                        let v = self.mul(f, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        pivots
    }

    /// Echelon basis of the span of `vecs`.
    pub fn span_basis(&self, vecs: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let mut rows = vecs.to_vec();
        let rank = self.rref(&mut rows).len();
        rows.truncate(rank);
        rows
    }

    pub fn rank(&self, vecs: &[Vec<u64>]) -> usize {
        self.span_basis(vecs).len()
    }

    /// All `c` with `sum c_i cols[i] = 0`, as a basis of the null space.
    pub fn nullspace(&self, cols: &[Vec<u64>], dim: usize) -> Vec<Vec<u64>> {
        let n = cols.len();
        let mut rows: Vec<Vec<u64>> = (0..dim)
            .map(|i| cols.iter().map(|c| c[i]).collect())
            .collect();
        let pivots = if dim == 0 { Vec::new() } else { self.rref(&mut rows) };
        (0..n)
            .filter(|j| !pivots.contains(j))
            .map(|free| {
                let mut v = vec![0; n];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.reduce(-(rows[r][free] as i64));
                }
                v
            })
            .collect()
    }

    /// Coordinates of `target` in the independent family `basis`.
    pub fn solve(&self, basis: &[Vec<u64>], target: &[u64]) -> Option<Vec<u64>> {
        let mut cols = basis.to_vec();
        cols.push(target.to_vec());
        let k = basis.len();
        self.nullspace(&cols, target.len())
            .into_iter()
            .find(|v| v[k] != 0)
            .map(|v| {
                let s = self.reduce(-(self.inv(v[k]) as i64));
                v[..k].iter().map(|&x| self.mul(x, s)).collect()
            })
    }

    pub fn in_span(&self, basis: &[Vec<u64>], target: &[u64]) -> bool {
        target.iter().all(|&x| x == 0) || self.solve(basis, target).is_some()
    }

    /// Elements of `sup` (taken in order) completing `sub` to a basis of
    /// `span(sub) + span(sup)`.
    pub fn complement(&self, sub: &[Vec<u64>], sup: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let mut acc = sub.to_vec();
        let mut out = Vec::new();
        for v in sup {
            let mut trial = acc.clone();
            trial.push(v.clone());
            if self.rank(&trial) > acc.len() {
                acc = self.span_basis(&trial);
                out.push(v.clone());
            }
        }
        out
    }

    pub fn combine(&self, coeffs: &[u64], vecs: &[Vec<u64>], dim: usize) -> Vec<u64> {
        let mut out = vec![0; dim];
        for (c, v) in coeffs.iter().zip(vecs) {
            for (o, x) in out.iter_mut().zip(v) {
                *o = (*o + self.mul(*c, *x)) % self.0;
            }
        }
        out
    }

    /// `a * b` for `a: m x k`, `b: k x n`, row-major.
    pub fn mat_mul(&self, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..n)
                    .map(|j| {
                        row.iter()
                            .zip(b)
                            .fold(0, |s, (x, brow)| (s + self.mul(*x, brow[j])) % self.0)
                    })
                    .collect()
            })
            .collect()
    }
}
