//! The Kac–Paljutkin algebra acting on the quantum (−1)-plane.
//!
//! This module builds the explicit invariant basis families `ε`, `η`, `ω`,
//! `ω'`, `ω''`. It checks that they form a basis of `HH^•(A#H)` weight by
//! weight, and it compares computed cup products with the expected
//! multiplication tables.
//!
//! Cochain families, with `P(i,j) = q^{2i}u^{2i}v^{2j}`, `R(i,j) = q^{2i}u^{2i+1}v^{2j+1}`
//! and `K_1..K_4 = (1+xy)/2, (1−xy)/2, (x+y)/2, (x−y)/2`:
//!
//! | family | cochain | range |
//! |---|---|---|
//! | `ε_k`, k ≤ 3 | `1⊗(P(i,j)+P(j,i))K_k` | `i ≤ j` |
//! | `ε_4` | `1⊗(P(i,j)−P(j,i))K_4` | `i < j` |
//! | `η_k`, k ≤ 3 | `(u*⊗q^{2i}u^{2i+1}v^{2j} + v*⊗q^{2j}u^{2j}v^{2i+1})K_k` | all |
//! | `η_4` | same with `−` and `K_4` | all |
//! | `ω_k`, k ≤ 3 | `u*v*⊗(R(i,j)−R(j,i))K_k` | `i < j` |
//! | `ω_4` | `u*v*⊗(R(i,j)+R(j,i))K_4` | `i ≤ j` |
//! | `ω'_k` | `u*v*⊗K_k` | |
//! | `ω''_1`, `ω''_3` | `u*v*⊗(z+xyz)/2`, `u*v*⊗(xz+yz)/2` | |

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::cochain::{Cochain, CochainError, DgAlgebra};
use crate::cohomology::{class_equal, CohomologyError, StrandCohomology};
use crate::hopf::{kac_paljutkin, HopfElement};
use crate::linalg::{format_scalar, int, pow, rat, sign, Matrix, Scalar};
use crate::qalgebra::{AlgebraElement, HActionOnA, Monomial, SkewPolyAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KpError {
    #[error("explicit cochains are not a basis at m = {m}, w = {w}: {reason}")]
    BasisMismatch { m: usize, w: i64, reason: String },
    #[error("weight {0} was not computed")]
    MissingWeight(i64),
    #[error("the scenario is not the Kac–Paljutkin action on the quantum (−1)-plane")]
    WrongScenario,
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Cochain(#[from] CochainError),
}

/// `z▷u = q⁻¹v`, `z▷v = qu`, with `x`, `y` acting trivially.
pub fn kp_plane_action(q: &Scalar) -> HActionOnA {
    assert!(!q.is_zero(), "q must be nonzero");
    let hopf = Arc::new(kac_paljutkin());
    let mut z = Matrix::zeros(2, 2);
    z.set(1, 0, q.recip());
    z.set(0, 1, q.clone());
    // xz, yz, xyz act like z since x, y act trivially
    let mats = hopf
        .labels()
        .iter()
        .map(|l| if l.contains('z') { z.clone() } else { Matrix::identity(2) })
        .collect();
    HActionOnA::new(hopf, SkewPolyAlgebra::quantum_minus_one_plane(), mats).expect("valid action")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Eps(u8),
    Eta(u8),
    Omega(u8),
    OmegaP(u8),
    OmegaPP(u8),
}

impl Family {
    pub const EPS: [Family; 4] = [Family::Eps(1), Family::Eps(2), Family::Eps(3), Family::Eps(4)];
    pub const ETA: [Family; 4] = [Family::Eta(1), Family::Eta(2), Family::Eta(3), Family::Eta(4)];
    pub const OMEGA: [Family; 4] = [Family::Omega(1), Family::Omega(2), Family::Omega(3), Family::Omega(4)];
    pub const EXCEPTIONAL: [Family; 5] = [
        Family::OmegaP(1),
        Family::OmegaP(2),
        Family::OmegaP(3),
        Family::OmegaPP(1),
        Family::OmegaPP(3),
    ];

    pub fn degree(self) -> usize {
        match self {
            Family::Eps(_) => 0,
            Family::Eta(_) => 1,
            _ => 2,
        }
    }

    pub fn indexed(self) -> bool {
        matches!(self, Family::Eps(_) | Family::Eta(_) | Family::Omega(_))
    }

    /// Index pairs at which the family is a listed basis element.
    pub fn valid(self, i: usize, j: usize) -> bool {
        match self {
            Family::Eps(4) | Family::Omega(1..=3) => i < j,
            Family::Eps(_) | Family::Omega(_) => i <= j,
            Family::Eta(_) => true,
            _ => i == 0 && j == 0,
        }
    }

    /// `f^{j,i} = −f^{i,j}` under the index-extension convention.
    pub fn antisymmetric(self) -> bool {
        matches!(self, Family::Eps(4) | Family::Omega(1..=3))
    }

    pub fn weight(self, i: usize, j: usize) -> i64 {
        if self.indexed() {
            2 * (i + j) as i64
        } else {
            -2
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Eps(k) => write!(f, "eps{k}"),
            Family::Eta(k) => write!(f, "eta{k}"),
            Family::Omega(k) => write!(f, "omega{k}"),
            Family::OmegaP(k) => write!(f, "omega'{k}"),
            Family::OmegaPP(k) => write!(f, "omega''{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisLabel {
    pub family: Family,
    pub i: usize,
    pub j: usize,
}

impl BasisLabel {
    pub fn new(family: Family, i: usize, j: usize) -> Self {
        BasisLabel { family, i, j }
    }

    pub fn exceptional(family: Family) -> Self {
        BasisLabel { family, i: 0, j: 0 }
    }

    pub fn weight(&self) -> i64 {
        self.family.weight(self.i, self.j)
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.indexed() {
            write!(f, "{}^{{{},{}}}", self.family, self.i, self.j)
        } else {
            write!(f, "{}", self.family)
        }
    }
}

/// All listed labels of degree `m` at weight `w`, in a fixed order.
pub fn labels_at(m: usize, w: i64) -> Vec<BasisLabel> {
    let mut out = Vec::new();
    if m == 2 && w == -2 {
        out.extend(Family::EXCEPTIONAL.iter().map(|&f| BasisLabel::exceptional(f)));
    }
    if w >= 0 && w % 2 == 0 {
        let k = (w / 2) as usize;
        let fams = match m {
            0 => Family::EPS,
            1 => Family::ETA,
            2 => Family::OMEGA,
            _ => return out,
        };
        for f in fams {
            for i in 0..=k {
                if f.valid(i, k - i) {
                    out.push(BasisLabel::new(f, i, k - i));
                }
            }
        }
    }
    out
}

/// `dim H^m(A, A#H)` at weight `w`, enumerated from the spanning families
/// `(1⊗u^{2i}v^{2j})H_0`, `(u*⊗u^{2i+1}v^{2j})H_0`, `(v*⊗u^{2i}v^{2j+1})H_0`,
/// `(u*⊗v^{2j} − v*⊗qv^{2j})H_1`, `(u*v*⊗1)H`, `(u*v*⊗u^{2i+1}v^{2j+1})H_0`,
/// `(u*v*⊗v^{2j+1})H_1`.
pub fn expected_full_dim(m: usize, w: i64) -> usize {
    const HALF: usize = 4;
    let d = w + m as i64;
    if d < 0 {
        return 0;
    }
    let d = d as usize;
    let mut count = 0;
    for i in 0..=d {
        for j in 0..=d {
            match m {
                0 => count += HALF * (2 * i + 2 * j == d) as usize,
                1 => {
                    count += HALF * (2 * i + 1 + 2 * j == d) as usize;
                    count += HALF * (2 * i + 2 * j + 1 == d) as usize;
                }
                2 => count += HALF * (2 * i + 1 + 2 * j + 1 == d) as usize,
                _ => {}
            }
        }
    }
    for j in 0..=d {
        match m {
            1 => count += HALF * (2 * j == d) as usize,
            2 => count += HALF * (2 * j + 1 == d) as usize,
            _ => {}
        }
    }
    if m == 2 && d == 0 {
        count += 2 * HALF;
    }
    count
}

/// `dim HH^m(A#H)` at weight `w`, by counting the listed families.
pub fn expected_invariant_dim(m: usize, w: i64) -> usize {
    labels_at(m, w).len()
}

/// Builds the explicit cochains for one value of `q`.
pub struct ExplicitBasis<'a> {
    dg: &'a DgAlgebra,
    q: Scalar,
    /// Coordinate of `u*v*` on the basis of `A^!_2`.
    uv: Scalar,
}

impl<'a> ExplicitBasis<'a> {
    pub fn new(dg: &'a DgAlgebra, q: &Scalar) -> Result<Self, KpError> {
        let labels: Vec<&str> = dg.hopf().labels().iter().map(String::as_str).collect();
        if labels != ["1", "x", "y", "z", "xy", "xz", "yz", "xyz"] || dg.algebra().n() != 2 {
            return Err(KpError::WrongScenario);
        }
        let mut t = vec![Scalar::zero(); 4];
        t[1] = Scalar::one();
        let uv = dg.dual().from_tensor(2, &t).map_err(CochainError::from)?;
        if uv.coords.len() != 1 {
            return Err(KpError::WrongScenario);
        }
        Ok(ExplicitBasis {
            dg,
            q: q.clone(),
            uv: uv.coords[0].clone(),
        })
    }

    pub fn dg(&self) -> &DgAlgebra {
        self.dg
    }

    fn h(&self, terms: &[(Scalar, &str)]) -> HopfElement {
        self.dg.hopf().element(terms).expect("known labels")
    }

    fn k(&self, which: u8) -> HopfElement {
        let half = rat(1, 2);
        let neg = -half.clone();
        match which {
            1 => self.h(&[(half.clone(), "1"), (half, "xy")]),
            2 => self.h(&[(half, "1"), (neg, "xy")]),
            3 => self.h(&[(half.clone(), "x"), (half, "y")]),
            4 => self.h(&[(half, "x"), (neg, "y")]),
            _ => unreachable!("K index out of range"),
        }
    }

    fn mono(&self, a: usize, b: usize, coeff: Scalar) -> AlgebraElement {
        AlgebraElement::monomial(Monomial::from_exponents(&[a as u32, b as u32]), coeff)
    }

    fn q2(&self, i: usize) -> Scalar {
        pow(&self.q, 2 * i as i64)
    }

    /// `ξ_dual ⊗ a # h` with a dual coefficient.
    fn term(&self, m: usize, dual: usize, dual_coeff: &Scalar, a: &AlgebraElement, h: &HopfElement) -> Cochain {
        Cochain::from_smash(m, dual, &self.dg.smash().pure(a, h)).scale(dual_coeff)
    }

    /// The cochain named by `label`, evaluated by its formula at any index pair.
    pub fn element(&self, label: BasisLabel) -> Cochain {
        let (i, j) = (label.i, label.j);
        let one = Scalar::one();
        let minus = -Scalar::one();
        match label.family {
            Family::Eps(k) => {
                let s = if k == 4 { &minus } else { &one };
                let a = self
                    .mono(2 * i, 2 * j, self.q2(i))
                    .add(&self.mono(2 * j, 2 * i, self.q2(j) * s));
                self.term(0, 0, &one, &a, &self.k(k))
            }
            Family::Eta(k) => {
                let s = if k == 4 { &minus } else { &one };
                let kk = self.k(k);
                let first = self.term(1, 0, &one, &self.mono(2 * i + 1, 2 * j, self.q2(i)), &kk);
                let second = self.term(1, 1, s, &self.mono(2 * j, 2 * i + 1, self.q2(j)), &kk);
                first.add(&second)
            }
            Family::Omega(k) => {
                let s = if k == 4 { &one } else { &minus };
                let a = self
                    .mono(2 * i + 1, 2 * j + 1, self.q2(i))
                    .add(&self.mono(2 * j + 1, 2 * i + 1, self.q2(j) * s));
                self.term(2, 0, &self.uv, &a, &self.k(k))
            }
            Family::OmegaP(k) => self.term(2, 0, &self.uv, &self.mono(0, 0, one.clone()), &self.k(k)),
            Family::OmegaPP(k) => {
                let half = rat(1, 2);
                let h = if k == 1 {
                    self.h(&[(half.clone(), "z"), (half, "xyz")])
                } else {
                    self.h(&[(half.clone(), "xz"), (half, "yz")])
                };
                self.term(2, 0, &self.uv, &self.mono(0, 0, one.clone()), &h)
            }
        }
    }
}

/// Change of basis from canonical invariant classes to explicit labels at one `(m, w)`.
#[derive(Clone, Debug)]
pub struct ExplicitCoordinates {
    pub m: usize,
    pub w: i64,
    pub labels: Vec<BasisLabel>,
    /// Maps canonical invariant coordinates to explicit coordinates.
    to_explicit: Matrix,
}

impl ExplicitCoordinates {
    /// Verifies the listed cochains at `(m, w)` and builds the coordinate map.
    pub fn new(eb: &ExplicitBasis, sc: &StrandCohomology, m: usize) -> Result<Self, KpError> {
        let w = sc.w();
        let labels = labels_at(m, w);
        let mismatch = |reason: String| KpError::BasisMismatch { m, w, reason };
        let inv = &sc.invariant[m];
        if labels.len() != inv.dim() {
            return Err(mismatch(format!("{} listed elements, invariant dimension {}", labels.len(), inv.dim())));
        }
        let full = &sc.full[m];
        let mut columns = Vec::with_capacity(labels.len());
        for l in &labels {
            let v = sc.strand.coords(&eb.element(*l))?;
            if !crate::linalg::is_zero_vec(&sc.strand.outgoing(m).mul_vec(&v)) {
                return Err(mismatch(format!("{l} is not a cocycle")));
            }
            let moved: Vec<Scalar> = sc.projectors[m].mul_vec(&v).iter().zip(&v).map(|(a, b)| a - b).collect();
            if !full.coboundaries.contains(&moved) {
                return Err(mismatch(format!("{l} is not invariant")));
            }
            columns.push(inv.class_coords(&v).map_err(|_| mismatch(format!("{l} is outside the invariant span")))?);
        }
        let change = Matrix::from_columns(&columns, labels.len());
        let to_explicit = change
            .inverse()
            .ok_or_else(|| mismatch("listed elements are linearly dependent in cohomology".into()))?;
        Ok(ExplicitCoordinates {
            m,
            w,
            labels,
            to_explicit,
        })
    }

    /// Explicit coordinates of the class of a cocycle in strand coordinates.
    pub fn coords(&self, sc: &StrandCohomology, v: &[Scalar]) -> Result<BTreeMap<BasisLabel, Scalar>, KpError> {
        let canonical = sc.invariant[self.m].class_coords(v)?;
        let explicit = self.to_explicit.mul_vec(&canonical);
        Ok(self
            .labels
            .iter()
            .zip(explicit)
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| (*l, c))
            .collect())
    }
}

/// Which index pair a table term refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexPattern {
    /// `(i+s, j+t)`
    Direct,
    /// `(i+t, j+s)`
    Crossed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedTerm {
    pub coeff: i64,
    pub family: Family,
    /// `None` for the non-indexed families.
    pub pattern: Option<IndexPattern>,
}

/// One table cell: a sum of terms, multiplied by `δ_{s+t,0}` if `delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedEntry {
    pub terms: Vec<ExpectedTerm>,
    pub delta: bool,
}

impl ExpectedEntry {
    fn zero() -> Self {
        ExpectedEntry {
            terms: Vec::new(),
            delta: false,
        }
    }

    fn pair(f: Family, second: i64) -> Self {
        ExpectedEntry {
            terms: vec![
                ExpectedTerm {
                    coeff: 1,
                    family: f,
                    pattern: Some(IndexPattern::Direct),
                },
                ExpectedTerm {
                    coeff: second,
                    family: f,
                    pattern: Some(IndexPattern::Crossed),
                },
            ],
            delta: false,
        }
    }

    fn crossed(coeff: i64, f: Family) -> Self {
        ExpectedEntry {
            terms: vec![ExpectedTerm {
                coeff,
                family: f,
                pattern: Some(IndexPattern::Crossed),
            }],
            delta: false,
        }
    }

    fn delta(coeff: i64, f: Family) -> Self {
        ExpectedEntry {
            terms: vec![ExpectedTerm {
                coeff,
                family: f,
                pattern: None,
            }],
            delta: true,
        }
    }

    /// The entry at `(i, j, s, t)`, rewritten on listed labels using the
    /// index-extension conventions.
    pub fn evaluate(&self, i: usize, j: usize, s: usize, t: usize) -> BTreeMap<BasisLabel, Scalar> {
        let mut out: BTreeMap<BasisLabel, Scalar> = BTreeMap::new();
        if self.delta && s + t != 0 {
            return out;
        }
        for term in &self.terms {
            let (label, c) = match term.pattern {
                None => (BasisLabel::exceptional(term.family), int(term.coeff)),
                Some(p) => {
                    let (a, b) = match p {
                        IndexPattern::Direct => (i + s, j + t),
                        IndexPattern::Crossed => (i + t, j + s),
                    };
                    if term.family.valid(a, b) {
                        (BasisLabel::new(term.family, a, b), int(term.coeff))
                    } else if term.family.valid(b, a) {
                        let sgn = if term.family.antisymmetric() { -1 } else { 1 };
                        (BasisLabel::new(term.family, b, a), int(term.coeff * sgn))
                    } else {
                        continue;
                    }
                }
            };
            *out.entry(label).or_insert_with(Scalar::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// A multiplication table `row ⌣ column`.
#[derive(Clone, Debug)]
pub struct CupTableSpec {
    pub name: &'static str,
    pub rows: Vec<Family>,
    pub cols: Vec<Family>,
    pub entries: Vec<Vec<ExpectedEntry>>,
}

/// Rows of the form `f_k ⌣ ε_l` follow one pattern for `f ∈ {ε, η, ω}`.
fn block_by_eps(f: [Family; 4], last_sign: i64) -> Vec<Vec<ExpectedEntry>> {
    let z = ExpectedEntry::zero;
    let p = |k: usize| ExpectedEntry::pair(f[k - 1], 1);
    let signed = |k: usize| ExpectedEntry::pair(f[k - 1], last_sign);
    vec![
        vec![p(1), z(), p(3), z()],
        vec![z(), p(2), z(), signed(4)],
        vec![p(3), z(), p(1), z()],
        vec![z(), p(4), z(), signed(2)],
    ]
}

/// The four expected multiplication tables of `HH^•(A#H)`.
pub fn expected_tables() -> Vec<CupTableSpec> {
    let z = ExpectedEntry::zero;
    let d = ExpectedEntry::delta;
    let mut omega_rows = block_by_eps(Family::OMEGA, -1);
    let (p1, p2, p3) = (Family::OmegaP(1), Family::OmegaP(2), Family::OmegaP(3));
    let (pp1, pp3) = (Family::OmegaPP(1), Family::OmegaPP(3));
    omega_rows.push(vec![d(2, p1), z(), d(2, p3), z()]);
    omega_rows.push(vec![z(), d(2, p2), z(), z()]);
    omega_rows.push(vec![d(2, p3), z(), d(2, p1), z()]);
    omega_rows.push(vec![d(2, pp1), z(), d(2, pp3), z()]);
    omega_rows.push(vec![d(2, pp3), z(), d(2, pp1), z()]);
    let mut omega_row_fams = Family::OMEGA.to_vec();
    omega_row_fams.extend(Family::EXCEPTIONAL);

    let om = Family::OMEGA;
    let c = ExpectedEntry::crossed;
    vec![
        CupTableSpec {
            name: "HH0 x HH0",
            rows: Family::EPS.to_vec(),
            cols: Family::EPS.to_vec(),
            entries: block_by_eps(Family::EPS, 1),
        },
        CupTableSpec {
            name: "HH1 x HH0",
            rows: Family::ETA.to_vec(),
            cols: Family::EPS.to_vec(),
            entries: block_by_eps(Family::ETA, 1),
        },
        CupTableSpec {
            name: "HH2 x HH0",
            rows: omega_row_fams,
            cols: Family::EPS.to_vec(),
            entries: omega_rows,
        },
        CupTableSpec {
            name: "HH1 x HH1",
            rows: Family::ETA.to_vec(),
            cols: Family::ETA.to_vec(),
            entries: vec![
                vec![c(1, om[0]), z(), c(1, om[2]), z()],
                vec![z(), c(1, om[1]), z(), c(-1, om[3])],
                vec![c(1, om[2]), z(), c(1, om[0]), z()],
                vec![z(), c(1, om[3]), z(), c(-1, om[1])],
            ],
        },
    ]
}

/// Listed labels of a family with both indices at most `index_max`.
pub fn family_labels(f: Family, index_max: usize) -> Vec<BasisLabel> {
    if !f.indexed() {
        return vec![BasisLabel::exceptional(f)];
    }
    let mut out = Vec::new();
    for i in 0..=index_max {
        for j in 0..=index_max {
            if f.valid(i, j) {
                out.push(BasisLabel::new(f, i, j));
            }
        }
    }
    out
}

/// Largest weight touched by the tables with indices up to `index_max`.
pub fn tables_weight_max(index_max: usize) -> i64 {
    8 * index_max as i64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryReport {
    pub row: BasisLabel,
    pub col: BasisLabel,
    pub expected: BTreeMap<BasisLabel, Scalar>,
    pub computed: BTreeMap<BasisLabel, Scalar>,
}

impl EntryReport {
    pub fn matches(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Clone, Debug)]
pub struct TableReport {
    pub name: &'static str,
    pub entries: Vec<EntryReport>,
}

impl TableReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &EntryReport> {
        self.entries.iter().filter(|e| !e.matches())
    }
}

pub fn format_combination(c: &BTreeMap<BasisLabel, Scalar>) -> String {
    if c.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (k, (l, x)) in c.iter().enumerate() {
        let neg = crate::linalg::is_negative(x);
        let abs = if neg { -x.clone() } else { x.clone() };
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if !abs.is_one() {
            s.push_str(&format_scalar(&abs));
            s.push('*');
        }
        s.push_str(&l.to_string());
    }
    s
}

/// Everything needed to read off explicit coordinates across weights.
pub struct ExplicitContext<'a> {
    pub basis: ExplicitBasis<'a>,
    strands: &'a BTreeMap<i64, StrandCohomology>,
    coords: HashMap<(usize, i64), ExplicitCoordinates>,
}

impl<'a> ExplicitContext<'a> {
    /// Verifies the explicit basis at every computed `(m, w)`.
    pub fn new(dg: &'a DgAlgebra, q: &Scalar, strands: &'a BTreeMap<i64, StrandCohomology>) -> Result<Self, KpError> {
        let basis = ExplicitBasis::new(dg, q)?;
        let mut coords = HashMap::new();
        for (w, sc) in strands {
            for m in 0..sc.full.len() {
                coords.insert((m, *w), ExplicitCoordinates::new(&basis, sc, m)?);
            }
        }
        Ok(ExplicitContext { basis, strands, coords })
    }

    fn strand(&self, w: i64) -> Result<&StrandCohomology, KpError> {
        self.strands.get(&w).ok_or(KpError::MissingWeight(w))
    }

    /// Explicit coordinates of the class of `c`, a cocycle at weight `w`.
    pub fn class_of(&self, c: &Cochain, w: i64) -> Result<BTreeMap<BasisLabel, Scalar>, KpError> {
        let sc = self.strand(w)?;
        let v = sc.strand.coords(c)?;
        if !crate::linalg::is_zero_vec(&sc.strand.outgoing(c.m).mul_vec(&v)) {
            return Err(CohomologyError::NotACocycle(self.basis.dg.format_cochain(c)).into());
        }
        self.coords.get(&(c.m, w)).ok_or(KpError::MissingWeight(w))?.coords(sc, &v)
    }

    pub fn cup(&self, a: BasisLabel, b: BasisLabel) -> Result<BTreeMap<BasisLabel, Scalar>, KpError> {
        let x = self.basis.element(a);
        let y = self.basis.element(b);
        let p = self.basis.dg.product(&x, &y)?;
        let w = a.weight() + b.weight();
        if p.is_zero() {
            return Ok(BTreeMap::new());
        }
        self.class_of(&p, w)
    }

    /// Compares every table cell for listed indices up to `index_max`.
    pub fn check_tables(&self, index_max: usize) -> Result<Vec<TableReport>, KpError> {
        let mut out = Vec::new();
        for spec in expected_tables() {
            let mut entries = Vec::new();
            for (r, rf) in spec.rows.iter().enumerate() {
                for row in family_labels(*rf, index_max) {
                    for (c, cf) in spec.cols.iter().enumerate() {
                        for col in family_labels(*cf, index_max) {
                            let expected = spec.entries[r][c].evaluate(row.i, row.j, col.i, col.j);
                            let computed = self.cup(row, col)?;
                            entries.push(EntryReport {
                                row,
                                col,
                                expected,
                                computed,
                            });
                        }
                    }
                }
            }
            out.push(TableReport { name: spec.name, entries });
        }
        Ok(out)
    }
}

/// One instance of a class identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub i: usize,
    pub j: usize,
    pub h: String,
    pub holds: bool,
}

pub const H1_LABELS: [&str; 4] = ["z", "xz", "yz", "xyz"];

/// Largest weight used by [`class_identities`].
pub fn identities_weight_max(index_max: usize) -> i64 {
    (4 * index_max as i64 - 1).max(2 * index_max as i64 - 2)
}

/// The two identities in `H^•(A, A#H)_1`:
/// `(u*⊗u^{2i}v^{2j} − v*⊗qu^{2i}v^{2j})h₁ = (u*⊗q^{−2i}v^{2i+2j} − v*⊗q^{−2i+1}v^{2i+2j})h₁`
/// and `u*v*⊗u^i v^j h₁ = (−1)^i q^{−i} u*v*⊗v^{i+j}h₁`.
pub fn class_identities(
    eb: &ExplicitBasis,
    strands: &BTreeMap<i64, StrandCohomology>,
    index_max: usize,
) -> Result<Vec<IdentityCheck>, KpError> {
    let dg = eb.dg;
    let q = &eb.q;
    let one = Scalar::one();
    let mut out = Vec::new();
    for i in 0..=index_max {
        for j in 0..=index_max {
            for h1 in H1_LABELS {
                let h = eb.h(&[(one.clone(), h1)]);
                // first identity, m = 1
                let lhs = eb
                    .term(1, 0, &one, &eb.mono(2 * i, 2 * j, one.clone()), &h)
                    .add(&eb.term(1, 1, &-q.clone(), &eb.mono(2 * i, 2 * j, one.clone()), &h));
                let rhs = eb
                    .term(1, 0, &pow(q, -2 * i as i64), &eb.mono(0, 2 * i + 2 * j, one.clone()), &h)
                    .add(&eb.term(1, 1, &-pow(q, 1 - 2 * i as i64), &eb.mono(0, 2 * i + 2 * j, one.clone()), &h));
                let w = 2 * (i + j) as i64 - 1;
                let sc = strands.get(&w).ok_or(KpError::MissingWeight(w))?;
                out.push(IdentityCheck {
                    name: "degree-1 H1 identity",
                    i,
                    j,
                    h: h1.to_string(),
                    holds: class_equal(dg, &sc.strand, &lhs, &rhs, &sc.full[1])?,
                });
                // second identity, m = 2
                let lhs = eb.term(2, 0, &eb.uv, &eb.mono(i, j, one.clone()), &h);
                let c = sign(i as u64) * pow(q, -(i as i64));
                let rhs = eb.term(2, 0, &(&eb.uv * c), &eb.mono(0, i + j, one.clone()), &h);
                let w = (i + j) as i64 - 2;
                let sc = strands.get(&w).ok_or(KpError::MissingWeight(w))?;
                out.push(IdentityCheck {
                    name: "degree-2 H1 identity",
                    i,
                    j,
                    h: h1.to_string(),
                    holds: class_equal(dg, &sc.strand, &lhs, &rhs, &sc.full[2])?,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::strand_cohomology;
    use std::sync::OnceLock;

    struct Fixture {
        dg: DgAlgebra,
        strands: BTreeMap<i64, StrandCohomology>,
    }

    fn fixture() -> &'static Fixture {
        static F: OnceLock<Fixture> = OnceLock::new();
        F.get_or_init(|| {
            let dg = DgAlgebra::new(kp_plane_action(&int(2)), None).unwrap();
            let strands = (-2..=4).map(|w| (w, strand_cohomology(&dg, w))).collect();
            Fixture { dg, strands }
        })
    }

    #[test]
    fn enumerations_match_small_cases() {
        assert_eq!(expected_full_dim(0, 4), 12);
        assert_eq!(expected_full_dim(0, 3), 0);
        assert_eq!(expected_full_dim(1, 0), 8);
        assert_eq!(expected_full_dim(1, -1), 4);
        assert_eq!(expected_full_dim(2, -2), 8);
        assert_eq!(expected_full_dim(2, 1), 4);
        assert_eq!(expected_invariant_dim(2, -2), 5);
        assert_eq!(expected_invariant_dim(2, 0), 1);
        assert_eq!(expected_invariant_dim(0, 0), 3);
        assert_eq!(expected_invariant_dim(0, 4), 7);
    }

    #[test]
    fn explicit_elements_form_bases() {
        let f = fixture();
        let ctx = ExplicitContext::new(&f.dg, &int(2), &f.strands).unwrap();
        let unit = ctx.class_of(&f.dg.one(), 0).unwrap();
        let half = rat(1, 2);
        let want: BTreeMap<_, _> = [
            (BasisLabel::new(Family::Eps(1), 0, 0), half.clone()),
            (BasisLabel::new(Family::Eps(2), 0, 0), half),
        ]
        .into_iter()
        .collect();
        assert_eq!(unit, want);
    }

    #[test]
    fn formulas_follow_extension_conventions() {
        let f = fixture();
        let eb = ExplicitBasis::new(&f.dg, &int(2)).unwrap();
        for fam in Family::EPS.iter().chain(&Family::ETA).chain(&Family::OMEGA) {
            let a = eb.element(BasisLabel::new(*fam, 0, 1));
            let b = eb.element(BasisLabel::new(*fam, 1, 0));
            if fam.antisymmetric() {
                assert_eq!(a, b.scale(&int(-1)), "{fam}");
            } else if !matches!(fam, Family::Eta(_)) {
                assert_eq!(a, b, "{fam}");
            }
        }
    }

    #[test]
    fn sample_table_entries() {
        let f = fixture();
        let ctx = ExplicitContext::new(&f.dg, &int(2), &f.strands).unwrap();
        // ε₁^{0,0} ⌣ ε₁^{1,1} = 2ε₁^{1,1}
        let got = ctx
            .cup(BasisLabel::new(Family::Eps(1), 0, 0), BasisLabel::new(Family::Eps(1), 1, 1))
            .unwrap();
        assert_eq!(got, [(BasisLabel::new(Family::Eps(1), 1, 1), int(2))].into_iter().collect());
        // η₁^{0,0} ⌣ η₁^{0,1} = ω₁^{1,0} = −ω₁^{0,1}
        let got = ctx
            .cup(BasisLabel::new(Family::Eta(1), 0, 0), BasisLabel::new(Family::Eta(1), 0, 1))
            .unwrap();
        assert_eq!(got, [(BasisLabel::new(Family::Omega(1), 0, 1), int(-1))].into_iter().collect());
    }

    #[test]
    fn evaluate_uses_conventions() {
        let e = ExpectedEntry::pair(Family::Eps(4), 1);
        // ε₄^{0,1} + ε₄^{1,0} = 0
        assert!(e.evaluate(0, 0, 0, 1).is_empty());
        let e = ExpectedEntry::crossed(1, Family::Omega(1));
        assert_eq!(
            e.evaluate(0, 0, 0, 1),
            [(BasisLabel::new(Family::Omega(1), 0, 1), int(-1))].into_iter().collect()
        );
    }
}
