//! Fraction-free determinants.

use super::poly::MultiPoly;

/// Determinant by Bareiss elimination; every division is exact.
pub fn det_poly(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return MultiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symbol::Symbol;

    #[test]
    fn small_determinants() {
        let a = MultiPoly::var(Symbol::new("a"));
        let b = MultiPoly::var(Symbol::new("b"));
        let m = vec![vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]];
        assert_eq!(det_poly(m), &a.pow(2) - &b.pow(2));
        let z = MultiPoly::zero();
        let o = MultiPoly::one();
        let perm = vec![
            vec![z.clone(), o.clone(), z.clone()],
            vec![o.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), a.clone()],
        ];
        assert_eq!(det_poly(perm), -a);
    }
}
