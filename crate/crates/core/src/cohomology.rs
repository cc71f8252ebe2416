//! Cohomology of weight strands, the `◄Λ` projection onto `H`-invariants,
//! class comparison and cup-product structure constants.
//!
//! Representatives are canonical: each cocycle is reduced modulo the
//! echelonized coboundary space (zeros at its pivots) and the reduced vectors
//! are echelonized again.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::cochain::{Cochain, CochainError, DgAlgebra, WeightStrand};
use crate::linalg::{express_in_span, image_basis, is_zero_vec, kernel_basis, Matrix, Scalar, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("product class is outside the span of the target basis (m = {m}, w = {w})")]
    TargetBasisIncomplete { m: usize, w: i64 },
    #[error(transparent)]
    Cochain(#[from] CochainError),
}

/// A basis of `H^m` at weight `w` (or of its invariant part).
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub m: usize,
    pub w: i64,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    representatives: Subspace,
}

impl CohomologyBasis {
    pub fn dim(&self) -> usize {
        self.representatives.dim()
    }

    /// Canonical representatives in strand coordinates.
    pub fn representatives(&self) -> &[Vec<Scalar>] {
        self.representatives.basis()
    }

    pub fn representative_cochains(&self, strand: &WeightStrand) -> Vec<Cochain> {
        self.representatives()
            .iter()
            .map(|v| strand.cochain(self.m, v))
            .collect()
    }

    /// The canonical remainder of `v` modulo coboundaries.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.coboundaries.reduce(v)
    }

    /// Coordinates of the class of the cocycle `v` in this basis.
    pub fn class_coords(&self, v: &[Scalar]) -> Result<Vec<Scalar>, CohomologyError> {
        express_in_span(&self.reduce(v), &self.representatives)
            .map_err(|_| CohomologyError::TargetBasisIncomplete { m: self.m, w: self.w })
    }

    pub fn contains_class(&self, v: &[Scalar]) -> bool {
        self.representatives.contains(&self.reduce(v))
    }
}

/// `ker ∂^m_w / im ∂^{m-1}_w` with canonical representatives.
pub fn cohomology_at(strand: &WeightStrand, m: usize) -> CohomologyBasis {
    let cocycles = kernel_basis(&strand.outgoing(m));
    let coboundaries = image_basis(&strand.incoming(m));
    let ambient = strand.spaces[m].dim();
    let reps = Subspace::span(ambient, cocycles.basis().iter().map(|z| coboundaries.reduce(z)).collect());
    debug_assert_eq!(reps.dim(), cocycles.dim() - coboundaries.dim());
    CohomologyBasis {
        m,
        w: strand.w,
        cocycles,
        coboundaries,
        representatives: reps,
    }
}

/// The image of `◄Λ` on cohomology, given the projector matrix `p` on `C^m_w`.
pub fn invariants(basis: &CohomologyBasis, p: &Matrix) -> CohomologyBasis {
    let ambient = basis.coboundaries.ambient_dim();
    let reps = Subspace::span(
        ambient,
        basis
            .representatives()
            .iter()
            .map(|r| basis.reduce(&p.mul_vec(r)))
            .collect(),
    );
    CohomologyBasis {
        representatives: reps,
        ..basis.clone()
    }
}

/// Same image computed from `P_Λ(Z)` first, used to cross-check `invariants`.
pub fn invariants_from_cocycles(basis: &CohomologyBasis, p: &Matrix) -> CohomologyBasis {
    let ambient = basis.coboundaries.ambient_dim();
    let reps = Subspace::span(
        ambient,
        basis
            .cocycles
            .basis()
            .iter()
            .map(|z| basis.reduce(&p.mul_vec(z)))
            .collect(),
    );
    CohomologyBasis {
        representatives: reps,
        ..basis.clone()
    }
}

fn check_cocycle(dg: &DgAlgebra, strand: &WeightStrand, c: &Cochain) -> Result<Vec<Scalar>, CohomologyError> {
    let v = strand.coords(c)?;
    if !is_zero_vec(&strand.outgoing(c.m).mul_vec(&v)) {
        return Err(CohomologyError::NotACocycle(dg.format_cochain(c)));
    }
    Ok(v)
}

/// True iff `x − y` is a coboundary.
pub fn class_equal(
    dg: &DgAlgebra,
    strand: &WeightStrand,
    x: &Cochain,
    y: &Cochain,
    basis: &CohomologyBasis,
) -> Result<bool, CohomologyError> {
    let vx = check_cocycle(dg, strand, x)?;
    let vy = check_cocycle(dg, strand, y)?;
    let diff: Vec<Scalar> = vx.iter().zip(&vy).map(|(a, b)| a - b).collect();
    Ok(basis.coboundaries.contains(&diff))
}

/// Everything computed for one weight strand.
#[derive(Clone, Debug)]
pub struct StrandCohomology {
    pub strand: WeightStrand,
    pub projectors: Vec<Matrix>,
    pub full: Vec<CohomologyBasis>,
    pub invariant: Vec<CohomologyBasis>,
}

impl StrandCohomology {
    pub fn w(&self) -> i64 {
        self.strand.w
    }

    pub fn full_dims(&self) -> Vec<usize> {
        self.full.iter().map(CohomologyBasis::dim).collect()
    }

    pub fn invariant_dims(&self) -> Vec<usize> {
        self.invariant.iter().map(CohomologyBasis::dim).collect()
    }

    /// `Σ (−1)^m dim C^m`, which must equal the cohomological Euler characteristic.
    pub fn euler_chain(&self) -> i64 {
        alternating(&self.strand.dims())
    }

    pub fn euler_cohomology(&self) -> i64 {
        alternating(&self.full_dims())
    }
}

fn alternating(v: &[usize]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(m, &d)| if m % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

pub fn strand_cohomology(dg: &DgAlgebra, w: i64) -> StrandCohomology {
    let strand = dg.weight_strand(w);
    let mut projectors = Vec::new();
    let mut full = Vec::new();
    let mut invariant = Vec::new();
    for m in 0..=strand.top() {
        let p = dg.integral_matrix(&strand, m);
        let basis = cohomology_at(&strand, m);
        invariant.push(invariants(&basis, &p));
        full.push(basis);
        projectors.push(p);
    }
    StrandCohomology {
        strand,
        projectors,
        full,
        invariant,
    }
}

/// Cup products of all representative pairs, in target-basis coordinates:
/// `out[a][b]` is the class of `rep_a ⌣ rep_b`.
pub fn cup_structure(
    dg: &DgAlgebra,
    (sa, ba): (&WeightStrand, &CohomologyBasis),
    (sb, bb): (&WeightStrand, &CohomologyBasis),
    (st, bt): (&WeightStrand, &CohomologyBasis),
) -> Result<Vec<Vec<Vec<Scalar>>>, CohomologyError> {
    let xs = ba.representative_cochains(sa);
    let ys = bb.representative_cochains(sb);
    let mut out = Vec::with_capacity(xs.len());
    for x in &xs {
        let mut row = Vec::with_capacity(ys.len());
        for y in &ys {
            let p = dg.product(x, y).map_err(CochainError::from)?;
            let v = check_cocycle(dg, st, &p)?;
            row.push(bt.class_coords(&v)?);
        }
        out.push(row);
    }
    Ok(out)
}

/// Cup products keyed by basis labels: `(a, b) ↦ Σ c_k t_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CupTable {
    pub entries: BTreeMap<(String, String), Vec<(String, Scalar)>>,
}

impl CupTable {
    pub fn insert(&mut self, a: &str, b: &str, coords: &[Scalar], target_labels: &[String]) {
        let combo = coords
            .iter()
            .zip(target_labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| (l.clone(), c.clone()))
            .collect();
        self.entries.insert((a.to_string(), b.to_string()), combo);
    }

    pub fn get(&self, a: &str, b: &str) -> Option<&[(String, Scalar)]> {
        self.entries.get(&(a.to_string(), b.to_string())).map(Vec::as_slice)
    }
}
