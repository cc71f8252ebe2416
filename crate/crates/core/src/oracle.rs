//! Brute-force degree-zero oracles that bypass the Koszul machinery.
//!
//! `H^0(A, M)` is the centralizer `{m : x_i m = m x_i}`, and `HH^0(B)` is the
//! center of `B`. Both are solved here per `A`-degree directly from the
//! multiplication of `A` or `A#H`.

use std::collections::HashMap;

use num_traits::One;

use crate::linalg::{kernel_basis, Matrix, Scalar};
use crate::qalgebra::{Monomial, SkewPolyAlgebra, SmashElement, SmashKey, SmashProduct};

/// `dim {a ∈ A_d : x_i a = a x_i for all i}`.
pub fn centralizer_dim(a: &SkewPolyAlgebra, d: usize) -> usize {
    let n = a.n();
    let unknowns = a.monomials_of_degree(d);
    let targets = a.monomials_of_degree(d + 1);
    let index: HashMap<&Monomial, usize> = targets.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let rows = n * targets.len();
    let mut mat = Matrix::zeros(rows, unknowns.len());
    for (col, m) in unknowns.iter().enumerate() {
        for i in 0..n {
            let g = Monomial::generator(n, i);
            let (c1, left) = a.mul_monomials(&g, m);
            let (c2, right) = a.mul_monomials(m, &g);
            mat.add_to(i * targets.len() + index[&left], col, &c1);
            mat.add_to(i * targets.len() + index[&right], col, &-c2);
        }
    }
    kernel_basis(&mat).dim()
}

fn commutator_rows(
    smash: &SmashProduct,
    unknowns: &[SmashKey],
    elements: &[SmashKey],
) -> Matrix {
    let mut blocks: Vec<HashMap<SmashKey, usize>> = Vec::new();
    let mut columns: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); unknowns.len()];
    for (e, g) in elements.iter().enumerate() {
        blocks.push(HashMap::new());
        for (col, k) in unknowns.iter().enumerate() {
            let mut out = SmashElement::zero();
            smash.mul_basis_into(g, k, &Scalar::one(), &mut out);
            smash.mul_basis_into(k, g, &-Scalar::one(), &mut out);
            for (key, c) in out.terms() {
                let next = blocks[e].len();
                let row = *blocks[e].entry(key.clone()).or_insert(next);
                columns[col].push((e, row, c.clone()));
            }
        }
    }
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.len();
            Some(o)
        })
        .collect();
    let total = blocks.iter().map(HashMap::len).sum();
    let mut mat = Matrix::zeros(total, unknowns.len());
    for (col, entries) in columns.into_iter().enumerate() {
        for (e, row, c) in entries {
            mat.add_to(offsets[e] + row, col, &c);
        }
    }
    mat
}

fn smash_unknowns(smash: &SmashProduct, d: usize) -> Vec<SmashKey> {
    let hdim = smash.hopf().dim();
    smash
        .algebra()
        .monomials_of_degree(d)
        .into_iter()
        .flat_map(|m| (0..hdim).map(move |h| (m.clone(), h)))
        .collect()
}

/// `dim {b ∈ A_d ⊗ H : x_i b = b x_i for all i}`, i.e. `H^0(A, A#H)` in degree `d`.
pub fn smash_centralizer_dim(smash: &SmashProduct, d: usize) -> usize {
    let n = smash.algebra().n();
    let one_h = smash.one().terms().keys().next().expect("unit").1;
    let gens: Vec<SmashKey> = (0..n).map(|i| (Monomial::generator(n, i), one_h)).collect();
    kernel_basis(&commutator_rows(smash, &smash_unknowns(smash, d), &gens)).dim()
}

/// `dim Z(A#H) ∩ (A_d ⊗ H)`, i.e. `HH^0(A#H)` in degree `d`.
pub fn smash_center_dim(smash: &SmashProduct, d: usize) -> usize {
    let n = smash.algebra().n();
    let one_h = smash.one().terms().keys().next().expect("unit").1;
    let mut gens: Vec<SmashKey> = (0..n).map(|i| (Monomial::generator(n, i), one_h)).collect();
    gens.extend((0..smash.hopf().dim()).map(|h| (Monomial::one(n), h)));
    kernel_basis(&commutator_rows(smash, &smash_unknowns(smash, d), &gens)).dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kp::{expected_full_dim, expected_invariant_dim, kp_plane_action};
    use crate::linalg::int;

    #[test]
    fn quantum_plane_center() {
        let a = SkewPolyAlgebra::quantum_minus_one_plane();
        // spanned by u^{2i}v^{2j}
        let dims: Vec<usize> = (0..7).map(|d| centralizer_dim(&a, d)).collect();
        assert_eq!(dims, vec![1, 0, 2, 0, 3, 0, 4]);
        let comm = SkewPolyAlgebra::plane(int(1));
        assert_eq!(centralizer_dim(&comm, 3), 4);
    }

    #[test]
    fn smash_oracles_match_enumerations() {
        let s = SmashProduct::new(kp_plane_action(&int(2)));
        for d in 0..5 {
            assert_eq!(smash_centralizer_dim(&s, d), expected_full_dim(0, d as i64));
            assert_eq!(smash_center_dim(&s, d), expected_invariant_dim(0, d as i64));
        }
    }
}
