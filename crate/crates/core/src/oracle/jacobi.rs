use crate::error::{Error, Result};

pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, stopping
/// once the off-diagonal Frobenius norm drops below `tol`. Unsorted.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Result<Vec<f64>> {
    let n = a.len();
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) < tol {
            return Ok((0..n).map(|i| a[i][i]).collect());
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, p, q, c, s);
            }
        }
    }
    if off_diagonal_norm(&a) < tol {
        return Ok((0..n).map(|i| a[i][i]).collect());
    }
    Err(Error::NoConvergence(JACOBI_MAX_SWEEPS))
}

/// `A <- J^T A J` for the rotation in the (p, q) plane.
fn rotate(a: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let n = a.len();
    for k in 0..n {
        let (akp, akq) = (a[k][p], a[k][q]);
        a[k][p] = c * akp - s * akq;
        a[k][q] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[p][k], a[q][k]);
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
    a[p][q] = 0.0;
    a[q][p] = 0.0;
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut sum = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                sum += x * x;
            }
        }
    }
    sum.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let mut ev = symmetric_eigenvalues(vec![vec![2.0, 1.0], vec![1.0, 2.0]], 1e-14).unwrap();
        ev.sort_by(f64::total_cmp);
        assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_input_is_immediate() {
        let ev = symmetric_eigenvalues(vec![vec![5.0, 0.0], vec![0.0, -1.0]], 1e-14).unwrap();
        assert_eq!(ev, vec![5.0, -1.0]);
    }

    #[test]
    fn preserves_trace_and_frobenius() {
        let a: Vec<Vec<f64>> = (0..7)
            .map(|i| {
                (0..7)
                    .map(|j| ((i * 3 + j * 3 + i * j) % 7) as f64 - 3.0)
                    .collect()
            })
            .collect();
        let trace: f64 = (0..7).map(|i| a[i][i]).sum();
        let frob: f64 = a.iter().flatten().map(|x| x * x).sum();
        let ev = symmetric_eigenvalues(a, 1e-12).unwrap();
        assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-9);
        assert!((ev.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-9);
    }
}
