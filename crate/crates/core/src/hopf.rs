//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! A [`HopfData`] stores multiplication, unit, comultiplication, counit and
//! antipode against a fixed labelled basis. Nothing is symbolic: every axiom
//! check and every Sweedler expansion is a finite exact computation.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{format_scalar, int, kernel_basis, rat, Matrix, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("no nonzero integral exists (malformed structure constants)")]
    NoIntegral,
    #[error("every integral has counit zero: the Hopf algebra is not semisimple")]
    NotSemisimple,
    #[error("left integral is not a right integral")]
    NotUnimodular,
    #[error("malformed Hopf data: {0}")]
    Malformed(String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
}

/// Sparse coefficient list `[(basis index, coefficient)]`.
pub type Terms = Vec<(usize, Scalar)>;

fn sparse(v: &[Scalar]) -> Terms {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// An element of `H`, as a dense coefficient vector over the basis.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct HopfElement(pub Vec<Scalar>);

impl HopfElement {
    pub fn zero(dim: usize) -> Self {
        HopfElement(vec![Scalar::zero(); dim])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn terms(&self) -> Terms {
        sparse(&self.0)
    }

    pub fn add(&self, other: &HopfElement) -> HopfElement {
        HopfElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &HopfElement) -> HopfElement {
        HopfElement(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Scalar) -> HopfElement {
        HopfElement(self.0.iter().map(|a| a * s).collect())
    }
}

/// Structure constants of a finite-dimensional Hopf algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct HopfData {
    dim: usize,
    labels: Vec<String>,
    /// `mult[i * dim + j]` = `b_i b_j`.
    mult: Vec<Terms>,
    unit: Vec<Scalar>,
    /// `comult[k]` = `Δ(b_k)` as `[((i, j), c)]`.
    comult: Vec<Vec<((usize, usize), Scalar)>>,
    counit: Vec<Scalar>,
    /// `antipode[k]` = `S(b_k)`.
    antipode: Vec<Terms>,
}

impl fmt::Debug for HopfData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfData")
            .field("dim", &self.dim)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

/// Dense structure constants, the exchange format for user-defined algebras.
///
/// `mult[i][j]` and `antipode[k]` are coefficient vectors of length `dim`,
/// `comult[k][i][j]` is the coefficient of `b_i ⊗ b_j` in `Δ(b_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseHopf {
    pub labels: Vec<String>,
    pub mult: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
    pub comult: Vec<Vec<Vec<Scalar>>>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Vec<Scalar>>,
}

impl HopfData {
    /// Builds Hopf data from dense tables, checking only shapes.
    pub fn from_dense(d: DenseHopf) -> Result<Self, HopfError> {
        let dim = d.labels.len();
        let bad = |what: &str| HopfError::Malformed(format!("{what} has the wrong shape"));
        if dim == 0 {
            return Err(HopfError::Malformed("empty basis".into()));
        }
        if d.mult.len() != dim || d.mult.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(bad("mult"));
        }
        if d.comult.len() != dim || d.comult.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(bad("comult"));
        }
        if d.unit.len() != dim {
            return Err(bad("unit"));
        }
        if d.counit.len() != dim {
            return Err(bad("counit"));
        }
        if d.antipode.len() != dim || d.antipode.iter().any(|v| v.len() != dim) {
            return Err(bad("antipode"));
        }
        let mut mult = Vec::with_capacity(dim * dim);
        for row in &d.mult {
            for v in row {
                mult.push(sparse(v));
            }
        }
        let comult = d
            .comult
            .iter()
            .map(|t| {
                let mut out = Vec::new();
                for (i, row) in t.iter().enumerate() {
                    for (j, c) in row.iter().enumerate() {
                        if !c.is_zero() {
                            out.push(((i, j), c.clone()));
                        }
                    }
                }
                out
            })
            .collect();
        Ok(HopfData {
            dim,
            labels: d.labels,
            mult,
            unit: d.unit,
            comult,
            counit: d.counit,
            antipode: d.antipode.iter().map(|v| sparse(v)).collect(),
        })
    }

    pub fn to_dense(&self) -> DenseHopf {
        let n = self.dim;
        let dense = |t: &Terms| {
            let mut v = vec![Scalar::zero(); n];
            for (i, c) in t {
                v[*i] = c.clone();
            }
            v
        };
        DenseHopf {
            labels: self.labels.clone(),
            mult: (0..n).map(|i| (0..n).map(|j| dense(&self.mult[i * n + j])).collect()).collect(),
            unit: self.unit.clone(),
            comult: (0..n)
                .map(|k| {
                    let mut t = vec![vec![Scalar::zero(); n]; n];
                    for ((i, j), c) in &self.comult[k] {
                        t[*i][*j] = c.clone();
                    }
                    t
                })
                .collect(),
            counit: self.counit.clone(),
            antipode: self.antipode.iter().map(dense).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize, HopfError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| HopfError::UnknownLabel(label.to_string()))
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i * self.dim + j]
    }

    pub fn comult_basis(&self, k: usize) -> &[((usize, usize), Scalar)] {
        &self.comult[k]
    }

    pub fn antipode_basis(&self, k: usize) -> &[(usize, Scalar)] {
        &self.antipode[k]
    }

    pub fn counit_basis(&self, k: usize) -> &Scalar {
        &self.counit[k]
    }

    pub fn one(&self) -> HopfElement {
        HopfElement(self.unit.clone())
    }

    pub fn basis_element(&self, i: usize) -> HopfElement {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        HopfElement(v)
    }

    /// Linear combination of labelled basis elements.
    pub fn element(&self, terms: &[(Scalar, &str)]) -> Result<HopfElement, HopfError> {
        let mut v = vec![Scalar::zero(); self.dim];
        for (c, l) in terms {
            v[self.label_index(l)?] += c;
        }
        Ok(HopfElement(v))
    }

    pub fn mul(&self, a: &HopfElement, b: &HopfElement) -> HopfElement {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                let xy = &x * &y;
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] += &xy * c;
                }
            }
        }
        HopfElement(out)
    }

    pub fn counit(&self, a: &HopfElement) -> Scalar {
        crate::linalg::dot(&a.0, &self.counit)
    }

    pub fn antipode(&self, a: &HopfElement) -> HopfElement {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, x) in a.terms() {
            for (k, c) in &self.antipode[i] {
                out[*k] += &x * c;
            }
        }
        HopfElement(out)
    }

    /// `Δ(a)` as a dense `dim × dim` tensor (row-major).
    pub fn comult(&self, a: &HopfElement) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim * self.dim];
        for (k, x) in a.terms() {
            for ((i, j), c) in &self.comult[k] {
                out[i * self.dim + j] += &x * c;
            }
        }
        out
    }

    /// Product in `H ⊗ H` of two dense tensors.
    pub fn tensor_mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n * n];
        let sa = sparse(a);
        let sb = sparse(b);
        for (ia, x) in &sa {
            let (a1, a2) = (ia / n, ia % n);
            for (ib, y) in &sb {
                let (b1, b2) = (ib / n, ib % n);
                let xy = x * y;
                for (k1, c1) in self.mul_basis(a1, b1) {
                    let xyc = &xy * c1;
                    for (k2, c2) in self.mul_basis(a2, b2) {
                        out[k1 * n + k2] += &xyc * c2;
                    }
                }
            }
        }
        out
    }

    /// `a^k` for `k ≥ 0`.
    pub fn power(&self, a: &HopfElement, k: u32) -> HopfElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of left multiplication by `b_i` (column `k` = `b_i b_k`).
    pub fn left_mul_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for k in 0..self.dim {
            for (r, c) in self.mul_basis(i, k) {
                m.set(*r, k, c.clone());
            }
        }
        m
    }

    pub fn format_element(&self, a: &HopfElement) -> String {
        format_terms(&a.terms(), &self.labels)
    }
}

pub(crate) fn format_terms(terms: &[(usize, Scalar)], labels: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (n, (i, c)) in terms.iter().enumerate() {
        let neg = c < &Scalar::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if n == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            s.push_str(&format_scalar(&abs));
            s.push('*');
        }
        s.push_str(&labels[*i]);
    }
    s
}

/// The five axiom families checked by [`check_hopf_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomFamily {
    AssociativityUnit,
    CoassociativityCounit,
    ComultMultiplicative,
    CounitMultiplicative,
    Antipode,
}

impl fmt::Display for AxiomFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AxiomFamily::AssociativityUnit => "associativity and unit",
            AxiomFamily::CoassociativityCounit => "coassociativity and counit",
            AxiomFamily::ComultMultiplicative => "comultiplication is an algebra map",
            AxiomFamily::CounitMultiplicative => "counit is an algebra map",
            AxiomFamily::Antipode => "antipode",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub family: AxiomFamily,
    pub passed: bool,
    /// First failing instance, in basis labels.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, family: AxiomFamily) -> &AxiomCheck {
        self.checks.iter().find(|c| c.family == family).expect("all families are checked")
    }
}

/// Evaluates every Hopf axiom on basis elements with exact arithmetic.
pub fn check_hopf_axioms(h: &HopfData) -> AxiomReport {
    let n = h.dim;
    let l = |i: usize| h.labels[i].as_str();
    let one = h.one();

    let mut assoc = None;
    'outer: for i in 0..n {
        let bi = h.basis_element(i);
        if h.mul(&one, &bi) != bi || h.mul(&bi, &one) != bi {
            assoc = Some(format!("unit fails on {}", l(i)));
            break;
        }
        for j in 0..n {
            let bij = h.mul(&bi, &h.basis_element(j));
            for k in 0..n {
                let bk = h.basis_element(k);
                let left = h.mul(&bij, &bk);
                let right = h.mul(&bi, &h.mul(&h.basis_element(j), &bk));
                if left != right {
                    assoc = Some(format!("({}{}){} != {}({}{})", l(i), l(j), l(k), l(i), l(j), l(k)));
                    break 'outer;
                }
            }
        }
    }

    let mut coassoc = None;
    for k in 0..n {
        let d = h.comult(&h.basis_element(k));
        // (Δ⊗I)Δ and (I⊗Δ)Δ as dense n^3 tensors.
        let mut left = vec![Scalar::zero(); n * n * n];
        let mut right = vec![Scalar::zero(); n * n * n];
        let mut counit_left = vec![Scalar::zero(); n];
        let mut counit_right = vec![Scalar::zero(); n];
        for (idx, c) in sparse(&d) {
            let (a, b) = (idx / n, idx % n);
            for ((p, r), c2) in h.comult_basis(a) {
                left[(p * n + r) * n + b] += &c * c2;
            }
            for ((p, r), c2) in h.comult_basis(b) {
                right[(a * n + p) * n + r] += &c * c2;
            }
            counit_left[b] += &c * &h.counit[a];
            counit_right[a] += &c * &h.counit[b];
        }
        if left != right {
            coassoc = Some(format!("(Δ⊗I)Δ({0}) != (I⊗Δ)Δ({0})", l(k)));
            break;
        }
        let bk = h.basis_element(k).0;
        if counit_left != bk || counit_right != bk {
            coassoc = Some(format!("counit law fails on {}", l(k)));
            break;
        }
    }

    let mut comult_mult = None;
    let mut one_one = vec![Scalar::zero(); n * n];
    for (i, x) in one.terms() {
        for (j, y) in one.terms() {
            one_one[i * n + j] = &x * &y;
        }
    }
    if h.comult(&one) != one_one {
        comult_mult = Some("Δ(1) != 1⊗1".to_string());
    }
    let mut counit_mult = None;
    if !h.counit(&one).is_one() {
        counit_mult = Some("ε(1) != 1".to_string());
    }
    for i in 0..n {
        for j in 0..n {
            let bi = h.basis_element(i);
            let bj = h.basis_element(j);
            let prod = h.mul(&bi, &bj);
            if comult_mult.is_none() && h.comult(&prod) != h.tensor_mul(&h.comult(&bi), &h.comult(&bj)) {
                comult_mult = Some(format!("Δ({0}{1}) != Δ({0})Δ({1})", l(i), l(j)));
            }
            if counit_mult.is_none() && h.counit(&prod) != &h.counit[i] * &h.counit[j] {
                counit_mult = Some(format!("ε({0}{1}) != ε({0})ε({1})", l(i), l(j)));
            }
        }
    }

    let mut antipode = None;
    for k in 0..n {
        let expected = one.scale(&h.counit[k]);
        let mut left = HopfElement::zero(n);
        let mut right = HopfElement::zero(n);
        for ((a, b), c) in h.comult_basis(k) {
            let sa = h.antipode(&h.basis_element(*a));
            let sb = h.antipode(&h.basis_element(*b));
            left = left.add(&h.mul(&sa, &h.basis_element(*b)).scale(c));
            right = right.add(&h.mul(&h.basis_element(*a), &sb).scale(c));
        }
        if left != expected || right != expected {
            antipode = Some(format!("S({0}₁){0}₂ or {0}₁S({0}₂) != ε({0})1", l(k)));
            break;
        }
    }

    let mk = |family, witness: Option<String>| AxiomCheck {
        family,
        passed: witness.is_none(),
        witness,
    };
    AxiomReport {
        checks: vec![
            mk(AxiomFamily::AssociativityUnit, assoc),
            mk(AxiomFamily::CoassociativityCounit, coassoc),
            mk(AxiomFamily::ComultMultiplicative, comult_mult),
            mk(AxiomFamily::CounitMultiplicative, counit_mult),
            mk(AxiomFamily::Antipode, antipode),
        ],
    }
}

// Kac–Paljutkin basis: x^a y^b z^c with a, b, c ∈ {0, 1}.
const KP_LABELS: [&str; 8] = ["1", "x", "y", "z", "xy", "xz", "yz", "xyz"];
const KP_EXPONENTS: [(u8, u8, u8); 8] = [
    (0, 0, 0),
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 1, 0),
    (1, 0, 1),
    (0, 1, 1),
    (1, 1, 1),
];

fn kp_index(a: u8, b: u8, c: u8) -> usize {
    KP_EXPONENTS
        .iter()
        .position(|&e| e == (a % 2, b % 2, c % 2))
        .expect("exponents are reduced mod 2")
}

fn kp_mul(i: usize, j: usize) -> Vec<Scalar> {
    let (a, b, c) = KP_EXPONENTS[i];
    let (mut a2, mut b2, c2) = KP_EXPONENTS[j];
    // z x = y z and z y = x z
    if c == 1 {
        std::mem::swap(&mut a2, &mut b2);
    }
    let (ga, gb) = ((a + a2) % 2, (b + b2) % 2);
    let mut out = vec![Scalar::zero(); 8];
    if c + c2 < 2 {
        out[kp_index(ga, gb, c + c2)] = Scalar::one();
    } else {
        // z^2 = (1 + x + y - xy)/2
        let half = rat(1, 2);
        for (da, db, s) in [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, -1)] {
            out[kp_index(ga + da, gb + db, 0)] += &half * int(s);
        }
    }
    out
}

/// The 8-dimensional Kac–Paljutkin Hopf algebra on the basis
/// `1, x, y, z, xy, xz, yz, xyz`.
pub fn kac_paljutkin() -> HopfData {
    let n = 8;
    let labels: Vec<String> = KP_LABELS.iter().map(|s| s.to_string()).collect();
    let mult: Vec<Vec<Vec<Scalar>>> = (0..n).map(|i| (0..n).map(|j| kp_mul(i, j)).collect()).collect();
    let mut unit = vec![Scalar::zero(); n];
    unit[0] = Scalar::one();

    // Multiplication alone, to build Δ and S on all basis words.
    let partial = HopfData::from_dense(DenseHopf {
        labels: labels.clone(),
        mult: mult.clone(),
        unit: unit.clone(),
        comult: vec![vec![vec![Scalar::zero(); n]; n]; n],
        counit: vec![Scalar::one(); n],
        antipode: vec![vec![Scalar::zero(); n]; n],
    })
    .expect("shapes are fixed");

    let tensor = |terms: &[(usize, usize, Scalar)]| {
        let mut t = vec![Scalar::zero(); n * n];
        for (i, j, c) in terms {
            t[i * n + j] += c;
        }
        t
    };
    let (ix, iy, iz) = (kp_index(1, 0, 0), kp_index(0, 1, 0), kp_index(0, 0, 1));
    let (ixz, iyz) = (kp_index(1, 0, 1), kp_index(0, 1, 1));
    let half = rat(1, 2);
    let delta_x = tensor(&[(ix, ix, int(1))]);
    let delta_y = tensor(&[(iy, iy, int(1))]);
    let delta_z = tensor(&[
        (iz, iz, half.clone()),
        (iz, ixz, half.clone()),
        (iyz, iz, half.clone()),
        (iyz, ixz, -half.clone()),
    ]);
    let delta_one = tensor(&[(0, 0, int(1))]);

    let mut comult = Vec::with_capacity(n);
    let mut antipode = Vec::with_capacity(n);
    for &(a, b, c) in KP_EXPONENTS.iter() {
        let mut d = delta_one.clone();
        let mut s = partial.one();
        if a == 1 {
            d = partial.tensor_mul(&d, &delta_x);
        }
        if b == 1 {
            d = partial.tensor_mul(&d, &delta_y);
        }
        if c == 1 {
            d = partial.tensor_mul(&d, &delta_z);
        }
        // S(x^a y^b z^c) = S(z)^c S(y)^b S(x)^a with S fixing x, y, z.
        for (e, g) in [(c, iz), (b, iy), (a, ix)] {
            if e == 1 {
                s = partial.mul(&s, &partial.basis_element(g));
            }
        }
        comult.push((0..n).map(|i| d[i * n..(i + 1) * n].to_vec()).collect());
        antipode.push(s.0);
    }

    HopfData::from_dense(DenseHopf {
        labels,
        mult,
        unit,
        comult,
        counit: vec![Scalar::one(); n],
        antipode,
    })
    .expect("shapes are fixed")
}

/// Group algebra `kG` from a multiplication table `table[g][h] = gh`.
pub fn group_algebra(table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<HopfData, HopfError> {
    let n = table.len();
    if n == 0 {
        return Err(HopfError::NotAGroup("empty table".into()));
    }
    if table.iter().any(|r| r.len() != n || r.iter().any(|&g| g >= n)) {
        return Err(HopfError::NotAGroup("table is not closed".into()));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(HopfError::NotAGroup(format!("not associative at ({a},{b},{c})")));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| HopfError::NotAGroup("no identity".into()))?;
    let mut inv = vec![0; n];
    for g in 0..n {
        inv[g] = (0..n)
            .find(|&h| table[g][h] == e && table[h][g] == e)
            .ok_or_else(|| HopfError::NotAGroup(format!("element {g} has no inverse")))?;
    }
    let labels = match labels {
        Some(l) if l.len() == n => l,
        Some(_) => return Err(HopfError::Malformed("label count does not match table".into())),
        None => (0..n).map(|g| if g == e { "1".to_string() } else { format!("g{g}") }).collect(),
    };
    let unitvec = |i: usize| {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        v
    };
    HopfData::from_dense(DenseHopf {
        labels,
        mult: (0..n).map(|a| (0..n).map(|b| unitvec(table[a][b])).collect()).collect(),
        unit: unitvec(e),
        comult: (0..n)
            .map(|g| {
                let mut t = vec![vec![Scalar::zero(); n]; n];
                t[g][g] = Scalar::one();
                t
            })
            .collect(),
        counit: vec![Scalar::one(); n],
        antipode: (0..n).map(|g| unitvec(inv[g])).collect(),
    })
}

/// Cyclic group table `Z_n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// The trivial Hopf algebra `k` (group algebra of the trivial group).
pub fn trivial_hopf() -> HopfData {
    group_algebra(&[vec![0]], None).expect("trivial group")
}

/// Iterated comultiplication `Δ^{(n-1)}(h)` as a sparse map on `n`-tuples of
/// basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweedlerTensor {
    legs: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl SweedlerTensor {
    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Scalar> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize], &Scalar)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn insert(&mut self, key: Vec<usize>, c: Scalar) {
        let e = self.terms.entry(key).or_insert_with(Scalar::zero);
        *e += c;
    }

    fn prune(mut self) -> Self {
        self.terms.retain(|_, v| !v.is_zero());
        self
    }

    /// Applies the counit to leg `leg`, giving a tensor with one fewer leg.
    pub fn apply_counit(&self, hopf: &HopfData, leg: usize) -> SweedlerTensor {
        assert!(leg < self.legs && self.legs >= 2);
        let mut out = SweedlerTensor {
            legs: self.legs - 1,
            terms: BTreeMap::new(),
        };
        for (k, c) in &self.terms {
            let e = hopf.counit_basis(k[leg]);
            if e.is_zero() {
                continue;
            }
            let mut key = k.clone();
            key.remove(leg);
            out.insert(key, c * e);
        }
        out.prune()
    }

    /// Applies `Δ` to leg `leg`, giving a tensor with one more leg.
    pub fn split_leg(&self, hopf: &HopfData, leg: usize) -> SweedlerTensor {
        let mut out = SweedlerTensor {
            legs: self.legs + 1,
            terms: BTreeMap::new(),
        };
        for (k, c) in &self.terms {
            for ((a, b), c2) in hopf.comult_basis(k[leg]) {
                let mut key = Vec::with_capacity(k.len() + 1);
                key.extend_from_slice(&k[..leg]);
                key.push(*a);
                key.push(*b);
                key.extend_from_slice(&k[leg + 1..]);
                out.insert(key, c * c2);
            }
        }
        out.prune()
    }
}

/// `h_(1) ⊗ … ⊗ h_(legs)`, splitting the last leg repeatedly.
pub fn sweedler(hopf: &HopfData, h: &HopfElement, legs: usize) -> SweedlerTensor {
    assert!(legs >= 1, "a Sweedler tensor has at least one leg");
    let mut t = SweedlerTensor {
        legs: 1,
        terms: h.terms().into_iter().map(|(i, c)| (vec![i], c)).collect(),
    };
    while t.legs < legs {
        t = t.split_leg(hopf, t.legs - 1);
    }
    t
}

/// Two-sided integral `Λ` normalised to `ε(Λ) = 1`.
pub fn integral(hopf: &HopfData) -> Result<HopfElement, HopfError> {
    let n = hopf.dim;
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        let m = hopf.left_mul_matrix(i);
        let eps = hopf.counit_basis(i);
        for r in 0..n {
            let mut row = m.row(r).to_vec();
            row[r] -= eps;
            rows.push(row);
        }
    }
    let kernel = kernel_basis(&Matrix::from_rows(rows, n));
    if kernel.dim() == 0 {
        return Err(HopfError::NoIntegral);
    }
    let lambda = kernel
        .basis()
        .iter()
        .map(|v| HopfElement(v.clone()))
        .find(|v| !hopf.counit(v).is_zero())
        .ok_or(HopfError::NotSemisimple)?;
    let lambda = lambda.scale(&hopf.counit(&lambda).recip());
    for i in 0..n {
        let right = hopf.mul(&lambda, &hopf.basis_element(i));
        if right != lambda.scale(hopf.counit_basis(i)) {
            return Err(HopfError::NotUnimodular);
        }
    }
    Ok(lambda)
}
