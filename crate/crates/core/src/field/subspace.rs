use super::{Field, Fq, Matrix};

/// Incrementally maintained echelon basis of a subspace of `F^n`.
///
/// Each stored row has a distinct pivot (its first nonzero coordinate),
/// normalized to 1 and eliminated from every other row.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    field: Field,
    n: usize,
    rows: Vec<Vec<Fq>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: &Field, n: usize) -> Self {
        EchelonBasis {
            field: field.clone(),
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    pub fn vectors(&self) -> &[Vec<Fq>] {
        &self.rows
    }

    /// Residue of `v` after eliminating the current pivots.
    pub fn reduce(&self, v: &[Fq]) -> Vec<Fq> {
        let f = &self.field;
        let mut r = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = r[pc];
            if c.is_zero() {
                continue;
            }
            for (x, &b) in r.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, b));
            }
        }
        r
    }

    pub fn contains(&self, v: &[Fq]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns false when it was already contained.
    pub fn insert(&mut self, v: &[Fq]) -> bool {
        assert_eq!(v.len(), self.n);
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(r[pc]).expect("pivot is nonzero");
        r.iter_mut().for_each(|x| *x = f.mul(inv, *x));
        for row in &mut self.rows {
            let c = row[pc];
            if c.is_zero() {
                continue;
            }
            for (x, &b) in row.iter_mut().zip(&r) {
                *x = f.sub(*x, f.mul(c, b));
            }
        }
        let pos = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, r);
        true
    }

    /// Basis vectors as the columns of an `n x dim` matrix.
    pub fn to_column_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.field, self.n, &self.rows)
    }
}

/// Closure of the span of `seeds` under the given operators.
pub fn spin(field: &Field, seeds: &[Vec<Fq>], ops: &[&Matrix]) -> EchelonBasis {
    let n = ops.first().map_or_else(|| seeds.first().map_or(0, Vec::len), |m| m.cols());
    let mut basis = EchelonBasis::new(field, n);
    let mut queue: Vec<Vec<Fq>> = Vec::new();
    for s in seeds {
        if basis.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if basis.is_full() {
            break;
        }
        for op in ops {
            let w = op.mul_vec(&v);
            if basis.insert(&w) {
                queue.push(w);
            }
        }
    }
    basis
}
