use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::FieldMatrix;
use super::vector::{Vector, MAX_LEN};

/// Exhaustive search over the solution space is used up to this many candidates.
const EXHAUSTIVE_LIMIT: u128 = 1 << 16;
const RANDOM_TRIES: usize = 4096;

/// Find an invertible `g` with `a_i * g = g * b_i` for every pair, i.e.
/// `g^-1 a_i g = b_i`.
///
/// The intertwining equations are linear in the entries of `g`; their
/// solution space is computed exactly and then searched for an invertible
/// element. When the `a_i` act absolutely irreducibly the space is at most
/// one-dimensional and the search only ranges over scalars.
pub fn solve_conjugating_matrix(a: &[FieldMatrix], b: &[FieldMatrix]) -> Option<FieldMatrix> {
    assert_eq!(a.len(), b.len(), "lists must pair up");
    let first = a.first()?;
    let field = first.field();
    let n = first.nrows();
    assert!(n * n <= MAX_LEN, "intertwiner search supports n <= 8");
    for m in a.iter().chain(b) {
        assert!(m.is_square() && m.nrows() == n && m.field() == field);
    }

    // Unknown x_{k,c} sits at position k*n + c. Equation (r, c):
    // sum_k a[r][k] x[k][c] - sum_k x[r][k] b[k][c] = 0.
    let vars = n * n;
    let mut system = FieldMatrix::zeros(field, 0, vars);
    for (ai, bi) in a.iter().zip(b) {
        for r in 0..n {
            for c in 0..n {
                let mut eq = Vector::zero(field, vars);
                for k in 0..n {
                    let x = ai.get(r, k);
                    if x != 0 {
                        let idx = k * n + c;
                        eq.set(idx, field.add(eq.get(idx), x));
                    }
                    let y = bi.get(k, c);
                    if y != 0 {
                        let idx = r * n + k;
                        eq.set(idx, field.sub(eq.get(idx), y));
                    }
                }
                if !eq.is_zero() {
                    system.push_row(eq);
                }
            }
        }
    }
    let solutions = system.right_kernel();
    let basis = solutions.basis();
    let dim = basis.nrows();
    if dim == 0 {
        return None;
    }

    let q = field.order() as u128;
    let candidate = |coeffs: &[u8]| {
        let mut v = Vector::zero(field, vars);
        for (row, &c) in basis.rows().iter().zip(coeffs) {
            v = v.add_scaled(row, c);
        }
        FieldMatrix::unflatten(&v, n, n)
    };

    if dim == 1 {
        return field
            .units()
            .map(|c| candidate(&[c]))
            .find(FieldMatrix::is_invertible);
    }

    let total = q.checked_pow(dim as u32).unwrap_or(u128::MAX);
    if total <= EXHAUSTIVE_LIMIT {
        for mut idx in 1..total {
            let mut coeffs = vec![0u8; dim];
            for c in coeffs.iter_mut() {
                *c = (idx % q) as u8;
                idx /= q;
            }
            let g = candidate(&coeffs);
            if g.is_invertible() {
                return Some(g);
            }
        }
        return None;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x1f2e3d4c);
    (0..RANDOM_TRIES)
        .map(|_| {
            let coeffs: Vec<u8> = (0..dim).map(|_| rng.gen_range(0..field.order())).collect();
            candidate(&coeffs)
        })
        .find(FieldMatrix::is_invertible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    #[test]
    fn identity_lists_admit_a_solution() {
        let a = vec![FieldMatrix::from_values(Field::GF3, &[[1, 1], [0, 1]])];
        let g = solve_conjugating_matrix(&a, &a).unwrap();
        assert!(g.is_invertible());
        assert_eq!(a[0].mul(&g), g.mul(&a[0]));
    }

    #[test]
    fn unipotent_and_identity_are_not_conjugate() {
        let a = vec![FieldMatrix::from_values(Field::GF3, &[[1, 1], [0, 1]])];
        let b = vec![FieldMatrix::identity(Field::GF3, 2)];
        assert!(solve_conjugating_matrix(&a, &b).is_none());
    }

    /// Brute-force oracle over all of GL(2,3): the intertwinable 2x2 pairs
    /// are exactly the simultaneously conjugate ones.
    #[test]
    fn agrees_with_brute_force_on_gl2_3() {
        let all: Vec<FieldMatrix> = Vector::all(Field::GF3, 4)
            .map(|v| FieldMatrix::unflatten(&v, 2, 2))
            .collect();
        let gl: Vec<FieldMatrix> = all.iter().filter(|m| m.is_invertible()).cloned().collect();
        assert_eq!(gl.len(), 48);
        let x = FieldMatrix::from_values(Field::GF3, &[[1, 1], [0, 1]]);
        let y = FieldMatrix::from_values(Field::GF3, &[[0, 1], [2, 0]]);
        for b0 in &gl {
            for b1 in [&x, &y] {
                let bs = vec![b0.clone(), b1.clone()];
                let as_ = vec![x.clone(), b1.clone()];
                let brute = gl.iter().any(|g| as_[0].mul(g) == g.mul(&bs[0]) && as_[1].mul(g) == g.mul(&bs[1]));
                let found = solve_conjugating_matrix(&as_, &bs);
                assert_eq!(brute, found.is_some());
                if let Some(g) = found {
                    assert!(g.is_invertible());
                    assert_eq!(as_[0].mul(&g), g.mul(&bs[0]));
                    assert_eq!(as_[1].mul(&g), g.mul(&bs[1]));
                }
            }
        }
    }
}
