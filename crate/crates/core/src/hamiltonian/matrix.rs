use std::fmt;

use crate::algebra::linalg::det_poly;
use crate::algebra::{MultiPoly, RationalFunction, Symbol};

use super::HamiltonianError;

/// Dense square matrix of rational functions.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<RationalFunction>,
}

impl Matrix {
    pub fn zero(n: usize) -> Matrix {
        Matrix {
            n,
            entries: vec![RationalFunction::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.set(i, i, RationalFunction::one());
        }
        m
    }

    pub fn diagonal(d: Vec<RationalFunction>) -> Matrix {
        let mut m = Matrix::zero(d.len());
        for (i, v) in d.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Result<Matrix, HamiltonianError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(HamiltonianError::NotSquare);
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Assembles a 2x2 block matrix from four equal-size blocks.
    pub fn blocks(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        let k = a.n;
        let mut m = Matrix::zero(2 * k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, a.get(i, j).clone());
                m.set(i, j + k, b.get(i, j).clone());
                m.set(i + k, j, c.get(i, j).clone());
                m.set(i + k, j + k, d.get(i, j).clone());
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }

    pub fn map<F: FnMut(&RationalFunction) -> RationalFunction>(&self, f: F) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<E, F: FnMut(&RationalFunction) -> Result<RationalFunction, E>>(&self, f: F) -> Result<Matrix, E> {
        Ok(Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.zip(o, |a, b| a - b)
    }

    pub fn scale(&self, c: &RationalFunction) -> Matrix {
        self.map(|e| e * c)
    }

    fn zip<F: Fn(&RationalFunction, &RationalFunction) -> RationalFunction>(&self, o: &Matrix, f: F) -> Matrix {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        Matrix {
            n: self.n,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        let n = self.n;
        let mut m = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = RationalFunction::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), o.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut acc = Matrix::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// [A, B] = AB - BA.
    pub fn commutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> RationalFunction {
        (0..self.n).fold(RationalFunction::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn derivative(&self, s: Symbol) -> Matrix {
        self.map(|e| e.derivative(s))
    }

    /// Conjugation U^{-1} M U by a diagonal matrix with nonzero entries.
    pub fn conjugate_diagonal(&self, d: &[RationalFunction]) -> Result<Matrix, HamiltonianError> {
        let mut m = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                let v = (&(self.get(i, j) * &d[j]) / &d[i]).map_err(|_| HamiltonianError::SingularGauge)?;
                m.set(i, j, v);
            }
        }
        Ok(m)
    }
}

/// Characteristic polynomial det(y I - A) by fraction-free elimination.
pub fn char_poly(a: &Matrix, y: Symbol) -> RationalFunction {
    let n = a.size();
    let mut den = MultiPoly::one();
    for e in a.entries() {
        if !e.den().is_constant() {
            let g = crate::algebra::gcd(&den, e.den());
            den = (&den * e.den()).div_exact(&g).expect("gcd divides");
        }
    }
    let yv = MultiPoly::var(y);
    let rows: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = a.get(i, j);
                    let cleared = (e.num() * &den).div_exact(e.den()).expect("common denominator");
                    let diag = if i == j { &yv * &den } else { MultiPoly::zero() };
                    &diag - &cleared
                })
                .collect()
        })
        .collect();
    let d = det_poly(rows);
    RationalFunction::new(d, den.pow(n as u32)).expect("nonzero denominator")
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
