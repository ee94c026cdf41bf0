//! Sylvester matrices, resultants, discriminants and Bezout cofactors.

use num_traits::{One, Zero};

use super::{Rat, UniPoly};
use crate::{Error, Result};

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        RatMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Determinant by exact Gaussian elimination.
    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rat::zero();
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            let inv = p.recip();
            for r in col + 1..n {
                let f = &a[r * n + col] * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let t = &f * &a[col * n + j];
                    a[r * n + j] -= t;
                }
            }
        }
        det
    }

    /// Solve `self * x = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(rhs.len(), self.rows);
        let n = self.rows;
        let w = n + 1;
        let mut a: Vec<Rat> = Vec::with_capacity(n * w);
        for i in 0..n {
            a.extend_from_slice(&self.entries[i * n..(i + 1) * n]);
            a.push(rhs[i].clone());
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r * w + col].is_zero())?;
            if piv != col {
                for j in 0..w {
                    a.swap(piv * w + j, col * w + j);
                }
            }
            let inv = a[col * w + col].recip();
            for j in col..w {
                a[col * w + j] *= &inv;
            }
            for r in 0..n {
                if r == col || a[r * w + col].is_zero() {
                    continue;
                }
                let f = a[r * w + col].clone();
                for j in col..w {
                    let t = &f * &a[col * w + j];
                    a[r * w + j] -= t;
                }
            }
        }
        Some((0..n).map(|i| a[i * w + n].clone()).collect())
    }
}

/// The `(deg p + deg q)`-square Sylvester matrix: `deg q` shifted rows of
/// `p`'s coefficients (highest first) followed by `deg p` shifted rows of `q`.
pub fn sylvester_matrix(p: &UniPoly, q: &UniPoly) -> Result<RatMatrix> {
    let m = p.degree().ok_or(Error::ZeroPolynomial("sylvester_matrix"))?;
    let n = q.degree().ok_or(Error::ZeroPolynomial("sylvester_matrix"))?;
    let size = m + n;
    let mut s = RatMatrix::zeros(size, size);
    for i in 0..n {
        for k in 0..=m {
            s.set(i, i + k, p.coeff(m - k));
        }
    }
    for i in 0..m {
        for k in 0..=n {
            s.set(n + i, i + k, q.coeff(n - k));
        }
    }
    Ok(s)
}

/// Determinant of the Sylvester matrix.
///
/// Two constants give an empty matrix, whose determinant is 1.
pub fn sylvester_resultant(p: &UniPoly, q: &UniPoly) -> Result<Rat> {
    let s = sylvester_matrix(p, q)?;
    if s.rows() == 0 {
        return Ok(Rat::one());
    }
    Ok(s.determinant())
}

/// `(-1)^(n(n-1)/2) * Res(p, p') / lc(p)`.
pub fn discriminant(p: &UniPoly) -> Result<Rat> {
    let n = p.degree().ok_or(Error::ZeroPolynomial("discriminant"))?;
    if n == 0 {
        return Err(Error::UnsupportedDegree { op: "discriminant", degree: 0, min: 1, max: usize::MAX });
    }
    let res = sylvester_resultant(p, &p.derivative())?;
    let sign = if (n * (n - 1) / 2) % 2 == 0 { Rat::one() } else { -Rat::one() };
    Ok(sign * res / p.leading_coeff().unwrap())
}

/// Cofactors `(u, v)` with `u p + v q = Res(p, q)`, `deg u < deg q`,
/// `deg v < deg p`.
///
/// Solves the transposed Sylvester system with right-hand side
/// `(Res, 0, ..., 0)`; the solution is unique when the resultant is nonzero.
pub fn bezout_cofactors(p: &UniPoly, q: &UniPoly) -> Result<(UniPoly, UniPoly)> {
    let m = p.degree().ok_or(Error::ZeroPolynomial("bezout_cofactors"))?;
    let n = q.degree().ok_or(Error::ZeroPolynomial("bezout_cofactors"))?;
    let res = sylvester_resultant(p, q)?;
    if res.is_zero() {
        return Err(Error::NoBezoutCertificate);
    }
    let size = m + n;
    if size == 0 {
        // Both constant: Res = 1 = (1/p) p.
        return Ok((UniPoly::constant(p.coeff(0).recip()), UniPoly::zero()));
    }
    // Column j < n holds X^j * p, column n + j holds X^j * q; row k is the X^k coefficient.
    let mut a = RatMatrix::zeros(size, size);
    for j in 0..n {
        for (k, c) in p.coeffs().iter().enumerate() {
            a.set(j + k, j, c.clone());
        }
    }
    for j in 0..m {
        for (k, c) in q.coeffs().iter().enumerate() {
            a.set(j + k, n + j, c.clone());
        }
    }
    let mut rhs = vec![Rat::zero(); size];
    rhs[0] = res;
    let x = a
        .solve(&rhs)
        .ok_or_else(|| Error::internal("singular Sylvester system despite nonzero resultant"))?;
    let u = UniPoly::new(x[..n].to_vec());
    let v = UniPoly::new(x[n..].to_vec());
    Ok((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int, rat_pow};

    /// `lc^deg q * prod q(r)` over the roots of a split polynomial.
    fn resultant_from_roots(lc_p: &Rat, roots_p: &[Rat], q: &UniPoly) -> Rat {
        let n = q.degree().unwrap_or(0) as u32;
        roots_p.iter().fold(rat_pow(lc_p, n), |acc, r| acc * q.eval(r))
    }

    #[test]
    fn linear_resultant() {
        // Res(X - a, X - b) = a - b with the standard row order.
        let a = rat(3, 2);
        let b = rat_int(-5);
        let r = sylvester_resultant(&UniPoly::linear_root(&a), &UniPoly::linear_root(&b)).unwrap();
        assert_eq!(r, &a - &b);
    }

    #[test]
    fn resultant_matches_root_product() {
        // p = 2(X-1)(X+3)(X-1/2)
        let roots = [rat_int(1), rat_int(-3), rat(1, 2)];
        let p = roots
            .iter()
            .fold(UniPoly::constant(rat_int(2)), |acc, r| &acc * &UniPoly::linear_root(r));
        let q = UniPoly::from_ints(&[7, -1, 0, 4]);
        let expect = resultant_from_roots(&rat_int(2), &roots, &q);
        assert_eq!(sylvester_resultant(&p, &q).unwrap(), expect);
    }

    #[test]
    fn bezout_small() {
        let p = UniPoly::x();
        let q = UniPoly::from_ints(&[-1, 1]);
        let (u, v) = bezout_cofactors(&p, &q).unwrap();
        assert_eq!(u, UniPoly::from_ints(&[-1]));
        assert_eq!(v, UniPoly::from_ints(&[1]));
        let common = UniPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(bezout_cofactors(&common, &q), Err(Error::NoBezoutCertificate));
    }

    #[test]
    fn quadratic_discriminant() {
        let p = UniPoly::from_ints(&[5, 7, 1]);
        assert_eq!(discriminant(&p).unwrap(), rat_int(49 - 20));
        assert!(discriminant(&UniPoly::from_ints(&[3])).is_err());
    }

    #[test]
    fn determinant_and_solve() {
        let m = RatMatrix::from_rows(vec![
            vec![rat_int(2), rat_int(1), rat_int(0)],
            vec![rat_int(1), rat_int(3), rat_int(1)],
            vec![rat_int(0), rat_int(1), rat_int(4)],
        ]);
        assert_eq!(m.determinant(), rat_int(18));
        let x = m.solve(&[rat_int(1), rat_int(2), rat_int(3)]).unwrap();
        let back = m.mul(&RatMatrix::from_rows(x.iter().map(|v| vec![v.clone()]).collect()));
        assert_eq!(back.transpose().get(0, 2), &rat_int(3));
    }
}
