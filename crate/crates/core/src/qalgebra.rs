//! Quantum affine spaces `k⟨x_1..x_n⟩/(x_j x_i − q_ij x_i x_j)`, Hopf module
//! algebra actions on them, and the smash product `A#H`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use parking_lot::RwLock;
use smallvec::SmallVec;
use thiserror::Error;

use crate::hopf::{format_terms, HopfData, HopfElement};
use crate::linalg::{format_scalar, Matrix, Scalar, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("q[{0}][{1}] must be nonzero")]
    ZeroQ(usize, usize),
    #[error("q table must be {0}x{0}")]
    BadQTable(usize),
    #[error("need at least one generator")]
    NoGenerators,
    #[error("action matrix for {label} must be {n}x{n}")]
    BadActionShape { label: String, n: usize },
    #[error("expected {expected} action matrices, got {got}")]
    ActionCount { expected: usize, got: usize },
}

/// Exponent vector of a PBW monomial `x_1^{a_1} … x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(e: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn add(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// An element of a skew-polynomial algebra in PBW normal form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        if s.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }
}

/// Quantum affine space on `n` generators with relations
/// `x_j x_i = q_ij x_i x_j` for `i < j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewPolyAlgebra {
    labels: Vec<String>,
    q: Vec<Vec<Scalar>>,
}

impl SkewPolyAlgebra {
    /// Only entries `q[i][j]` with `i < j` are read; they must be nonzero.
    pub fn new(labels: Vec<String>, q: Vec<Vec<Scalar>>) -> Result<Self, AlgebraError> {
        let n = labels.len();
        if n == 0 {
            return Err(AlgebraError::NoGenerators);
        }
        if q.len() != n || q.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::BadQTable(n));
        }
        for i in 0..n {
            for j in i + 1..n {
                if q[i][j].is_zero() {
                    return Err(AlgebraError::ZeroQ(i, j));
                }
            }
        }
        Ok(SkewPolyAlgebra { labels, q })
    }

    /// All `q_ij` equal to `q`.
    pub fn uniform(labels: Vec<String>, q: Scalar) -> Result<Self, AlgebraError> {
        let n = labels.len();
        Self::new(labels, vec![vec![q; n]; n])
    }

    /// `k⟨u, v⟩/(vu − q uv)`; `q = −1` is the quantum (−1)-plane.
    pub fn plane(q: Scalar) -> Self {
        Self::uniform(vec!["u".into(), "v".into()], q).expect("nonzero q")
    }

    pub fn quantum_minus_one_plane() -> Self {
        Self::plane(-Scalar::one())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn q(&self, i: usize, j: usize) -> &Scalar {
        &self.q[i][j]
    }

    pub fn q_table(&self) -> &[Vec<Scalar>] {
        &self.q
    }

    /// Coefficient `c` with `x^a · x^b = c · x^{a+b}`.
    pub fn monomial_coeff(&self, a: &Monomial, b: &Monomial) -> Scalar {
        let n = self.n();
        let mut c = Scalar::one();
        for i in 0..n {
            let bi = b.0[i];
            if bi == 0 {
                continue;
            }
            for j in i + 1..n {
                let aj = a.0[j];
                if aj != 0 {
                    for _ in 0..(aj * bi) {
                        c *= &self.q[i][j];
                    }
                }
            }
        }
        c
    }

    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> (Scalar, Monomial) {
        (self.monomial_coeff(a, b), a.add(b))
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (a, c) in &x.terms {
            for (b, d) in &y.terms {
                let (k, m) = self.mul_monomials(a, b);
                out.add_term(m, k * c * d);
            }
        }
        out
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::monomial(Monomial::one(self.n()), Scalar::one())
    }

    pub fn generator(&self, i: usize) -> AlgebraElement {
        AlgebraElement::monomial(Monomial::generator(self.n(), i), Scalar::one())
    }

    /// PBW monomials of degree `d`, in increasing lexicographic order.
    pub fn monomials_of_degree(&self, d: usize) -> Vec<Monomial> {
        fn rec(n: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if pos == n - 1 {
                cur.push(left);
                out.push(Monomial::from_exponents(cur));
                cur.pop();
                return;
            }
            for e in 0..=left {
                cur.push(e);
                rec(n, pos + 1, left - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self.n(), 0, d as u32, &mut Vec::new(), &mut out);
        out
    }

    pub fn dim_degree(&self, d: usize) -> usize {
        self.monomials_of_degree(d).len()
    }

    /// `R = span{x_j ⊗ x_i − q_ij x_i ⊗ x_j : i < j}` inside `V ⊗ V`, where
    /// `x_a ⊗ x_b` has coordinate `a·n + b`.
    pub fn relation_space(&self) -> Subspace {
        let n = self.n();
        let mut vs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![Scalar::zero(); n * n];
                v[j * n + i] = Scalar::one();
                v[i * n + j] = -self.q[i][j].clone();
                vs.push(v);
            }
        }
        Subspace::span(n * n, vs)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&self.labels[i]),
                _ => s.push_str(&format!("{}^{}", self.labels[i], e)),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    pub fn format_element(&self, x: &AlgebraElement) -> String {
        let labels: Vec<String> = x.terms.keys().map(|m| self.format_monomial(m)).collect();
        let terms: Vec<(usize, Scalar)> = x.terms.values().cloned().enumerate().collect();
        format_terms(&terms, &labels)
    }
}

/// A homogeneous action of `H` on `A`, given on the generators.
///
/// `gen_action[h]` is the `n × n` matrix of `b_h ▷ −` on `V`: column `k` holds
/// the coordinates of `b_h ▷ x_k`.
pub struct HActionOnA {
    hopf: Arc<HopfData>,
    algebra: SkewPolyAlgebra,
    gen_action: Vec<Matrix>,
    memo: RwLock<HashMap<(usize, Monomial), Vec<(Monomial, Scalar)>>>,
}

impl fmt::Debug for HActionOnA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HActionOnA")
            .field("hopf", &self.hopf)
            .field("algebra", &self.algebra)
            .field("gen_action", &self.gen_action)
            .finish()
    }
}

impl Clone for HActionOnA {
    fn clone(&self) -> Self {
        HActionOnA {
            hopf: self.hopf.clone(),
            algebra: self.algebra.clone(),
            gen_action: self.gen_action.clone(),
            memo: RwLock::new(HashMap::new()),
        }
    }
}

impl HActionOnA {
    pub fn new(hopf: Arc<HopfData>, algebra: SkewPolyAlgebra, gen_action: Vec<Matrix>) -> Result<Self, AlgebraError> {
        let n = algebra.n();
        if gen_action.len() != hopf.dim() {
            return Err(AlgebraError::ActionCount {
                expected: hopf.dim(),
                got: gen_action.len(),
            });
        }
        for (h, m) in gen_action.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(AlgebraError::BadActionShape {
                    label: hopf.labels()[h].clone(),
                    n,
                });
            }
        }
        Ok(HActionOnA {
            hopf,
            algebra,
            gen_action,
            memo: RwLock::new(HashMap::new()),
        })
    }

    /// Every basis element acts on `V` by its counit.
    pub fn trivial(hopf: Arc<HopfData>, algebra: SkewPolyAlgebra) -> Self {
        let n = algebra.n();
        let mats = (0..hopf.dim())
            .map(|h| Matrix::identity(n).scale(hopf.counit_basis(h)))
            .collect();
        Self::new(hopf, algebra, mats).expect("shapes match")
    }

    pub fn hopf(&self) -> &Arc<HopfData> {
        &self.hopf
    }

    pub fn algebra(&self) -> &SkewPolyAlgebra {
        &self.algebra
    }

    pub fn gen_matrix(&self, h: usize) -> &Matrix {
        &self.gen_action[h]
    }

    /// Matrix of an arbitrary element of `H` on `V`.
    pub fn element_matrix(&self, h: &HopfElement) -> Matrix {
        let n = self.algebra.n();
        let mut m = Matrix::zeros(n, n);
        for (i, c) in h.terms() {
            m = m.add(&self.gen_action[i].scale(&c));
        }
        m
    }

    /// `b_h ▷ x^m`, memoised; splits the leftmost generator off the monomial.
    pub fn act_basis(&self, h: usize, m: &Monomial) -> Vec<(Monomial, Scalar)> {
        if let Some(v) = self.memo.read().get(&(h, m.clone())) {
            return v.clone();
        }
        let n = self.algebra.n();
        let result: Vec<(Monomial, Scalar)> = match m.0.iter().position(|&e| e > 0) {
            None => {
                let e = self.hopf.counit_basis(h);
                if e.is_zero() {
                    Vec::new()
                } else {
                    vec![(m.clone(), e.clone())]
                }
            }
            Some(i) => {
                let mut rest = m.clone();
                rest.0[i] -= 1;
                let mut acc = AlgebraElement::zero();
                for ((h1, h2), c) in self.hopf.comult_basis(h) {
                    let mat = &self.gen_action[*h1];
                    let tail = self.act_basis(*h2, &rest);
                    if tail.is_empty() {
                        continue;
                    }
                    for l in 0..n {
                        let a = mat.get(l, i);
                        if a.is_zero() {
                            continue;
                        }
                        let head = Monomial::generator(n, l);
                        let ca = c * a;
                        for (t, ct) in &tail {
                            let (k, prod) = self.algebra.mul_monomials(&head, t);
                            acc.add_term(prod, &ca * ct * k);
                        }
                    }
                }
                acc.terms.into_iter().collect()
            }
        };
        self.memo.write().insert((h, m.clone()), result.clone());
        result
    }

    pub fn act(&self, h: &HopfElement, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (hi, c) in h.terms() {
            for (m, d) in &x.terms {
                for (t, e) in self.act_basis(hi, m) {
                    out.add_term(t, &c * d * e);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, witness: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed: witness.is_none(),
            witness,
        }
    }
}

/// Module-algebra axioms of an action, each with a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebraReport {
    pub checks: Vec<Check>,
}

impl ModuleAlgebraReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn check_module_algebra(action: &HActionOnA) -> ModuleAlgebraReport {
    let hopf = &action.hopf;
    let alg = &action.algebra;
    let n = alg.n();
    let d = hopf.dim();
    let l = |i: usize| hopf.labels()[i].as_str();

    let mut rep = None;
    'outer: for a in 0..d {
        for b in 0..d {
            let prod = hopf.mul(&hopf.basis_element(a), &hopf.basis_element(b));
            let lhs = action.element_matrix(&prod);
            let rhs = action.gen_action[a].mul(&action.gen_action[b]);
            if lhs != rhs {
                rep = Some(format!("({0}{1})▷ != {0}▷({1}▷) on V", l(a), l(b)));
                break 'outer;
            }
        }
    }
    let unit = if action.element_matrix(&hopf.one()) == Matrix::identity(n) {
        None
    } else {
        Some("1▷ is not the identity on V".to_string())
    };

    let r = alg.relation_space();
    let mut rel = None;
    for h in 0..d {
        let mut diag = Matrix::zeros(n * n, n * n);
        for ((h1, h2), c) in hopf.comult_basis(h) {
            diag = diag.add(&action.gen_action[*h1].kron(&action.gen_action[*h2]).scale(c));
        }
        if let Some(v) = r.basis().iter().find(|v| !r.contains(&diag.mul_vec(v))) {
            let coords: Vec<String> = v.iter().map(format_scalar).collect();
            rel = Some(format!("{}▷ maps relation [{}] outside R", l(h), coords.join(", ")));
            break;
        }
    }

    let mut counit = None;
    for h in 0..d {
        let got = action.act(&hopf.basis_element(h), &alg.one());
        let want = alg.one().scale(hopf.counit_basis(h));
        if got != want {
            counit = Some(format!("{}▷1 != ε({})1", l(h), l(h)));
            break;
        }
    }

    ModuleAlgebraReport {
        checks: vec![
            Check::new("representation on V", rep),
            Check::new("unit acts as identity", unit),
            Check::new("relations preserved", rel),
            Check::new("h▷1 = ε(h)1", counit),
        ],
    }
}

/// Basis key of `A#H`: PBW monomial and `H`-basis index.
pub type SmashKey = (Monomial, usize);

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SmashElement {
    terms: BTreeMap<SmashKey, Scalar>,
}

impl SmashElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(m: Monomial, h: usize) -> Self {
        let mut s = Self::zero();
        s.add_term((m, h), Scalar::one());
        s
    }

    pub fn terms(&self) -> &BTreeMap<SmashKey, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: SmashKey, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add(&self, other: &SmashElement) -> SmashElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> SmashElement {
        if s.is_zero() {
            return Self::zero();
        }
        SmashElement {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }
}

/// The smash product `A#H` with `(a#h)(a'#h') = a(h_(1)▷a') # h_(2)h'`.
#[derive(Debug)]
pub struct SmashProduct {
    action: HActionOnA,
    /// `(1#b_h)(x^m#1)` as `[(monomial, H index, coeff)]`.
    commute: RwLock<HashMap<(usize, Monomial), Vec<(Monomial, usize, Scalar)>>>,
}

impl SmashProduct {
    pub fn new(action: HActionOnA) -> Self {
        SmashProduct {
            action,
            commute: RwLock::new(HashMap::new()),
        }
    }

    pub fn action(&self) -> &HActionOnA {
        &self.action
    }

    pub fn algebra(&self) -> &SkewPolyAlgebra {
        &self.action.algebra
    }

    pub fn hopf(&self) -> &HopfData {
        &self.action.hopf
    }

    pub fn one(&self) -> SmashElement {
        let mut s = SmashElement::zero();
        for (h, c) in self.hopf().one().terms() {
            s.add_term((Monomial::one(self.algebra().n()), h), c);
        }
        s
    }

    pub fn from_algebra(&self, a: &AlgebraElement) -> SmashElement {
        let mut s = SmashElement::zero();
        for (h, c) in self.hopf().one().terms() {
            for (m, d) in a.terms() {
                s.add_term((m.clone(), h), &c * d);
            }
        }
        s
    }

    pub fn from_hopf(&self, h: &HopfElement) -> SmashElement {
        let mut s = SmashElement::zero();
        for (i, c) in h.terms() {
            s.add_term((Monomial::one(self.algebra().n()), i), c);
        }
        s
    }

    /// `a # h` for arbitrary `a ∈ A`, `h ∈ H`.
    pub fn pure(&self, a: &AlgebraElement, h: &HopfElement) -> SmashElement {
        let mut s = SmashElement::zero();
        for (m, c) in a.terms() {
            for (i, d) in h.terms() {
                s.add_term((m.clone(), i), c * &d);
            }
        }
        s
    }

    /// `(1#b_h)(x^m#1) = Σ (h_(1)▷x^m) # h_(2)`.
    pub fn commute(&self, h: usize, m: &Monomial) -> Vec<(Monomial, usize, Scalar)> {
        if let Some(v) = self.commute.read().get(&(h, m.clone())) {
            return v.clone();
        }
        let mut acc = SmashElement::zero();
        for ((h1, h2), c) in self.hopf().comult_basis(h) {
            for (t, e) in self.action.act_basis(*h1, m) {
                acc.add_term((t, *h2), c * e);
            }
        }
        let v: Vec<_> = acc.terms.into_iter().map(|((m, h), c)| (m, h, c)).collect();
        self.commute.write().insert((h, m.clone()), v.clone());
        v
    }

    /// Product of two basis elements, accumulated into `out` with weight `coeff`.
    pub fn mul_basis_into(&self, a: &SmashKey, b: &SmashKey, coeff: &Scalar, out: &mut SmashElement) {
        let alg = self.algebra();
        let hopf = self.hopf();
        for (m, k, c) in self.commute(a.1, &b.0) {
            let (sign, prod) = alg.mul_monomials(&a.0, &m);
            let cc = coeff * c * sign;
            for (r, d) in hopf.mul_basis(k, b.1) {
                out.add_term((prod.clone(), *r), &cc * d);
            }
        }
    }

    pub fn multiply(&self, s: &SmashElement, t: &SmashElement) -> SmashElement {
        let mut out = SmashElement::zero();
        for (a, c) in &s.terms {
            for (b, d) in &t.terms {
                self.mul_basis_into(a, b, &(c * d), &mut out);
            }
        }
        out
    }

    pub fn format_key(&self, k: &SmashKey) -> String {
        let a = self.algebra().format_monomial(&k.0);
        let h = &self.hopf().labels()[k.1];
        match (a.as_str(), h.as_str()) {
            ("1", _) => h.clone(),
            (_, "1") => a,
            _ => format!("{a}{h}"),
        }
    }

    pub fn format_element(&self, s: &SmashElement) -> String {
        let labels: Vec<String> = s.terms.keys().map(|k| self.format_key(k)).collect();
        let terms: Vec<(usize, Scalar)> = s.terms.values().cloned().enumerate().collect();
        format_terms(&terms, &labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{cyclic_table, group_algebra, kac_paljutkin};
    use crate::linalg::{int, pow};

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn kp_action(q: &Scalar) -> HActionOnA {
        let h = Arc::new(kac_paljutkin());
        let alg = SkewPolyAlgebra::quantum_minus_one_plane();
        // z▷u = q^{-1} v, z▷v = q u; x and y act trivially
        let mut z = Matrix::zeros(2, 2);
        z.set(1, 0, q.recip());
        z.set(0, 1, q.clone());
        let mats = h
            .labels()
            .iter()
            .map(|l| if l.contains('z') { z.clone() } else { Matrix::identity(2) })
            .collect();
        HActionOnA::new(h, alg, mats).unwrap()
    }

    #[test]
    fn quantum_plane_products() {
        let a = SkewPolyAlgebra::quantum_minus_one_plane();
        let u = a.generator(0);
        let v = a.generator(1);
        assert_eq!(a.multiply(&v, &u), AlgebraElement::monomial(mono(&[1, 1]), int(-1)));
        let uv = a.multiply(&u, &v);
        assert_eq!(a.multiply(&uv, &uv), AlgebraElement::monomial(mono(&[2, 2]), int(-1)));
        assert_eq!(a.multiply(&a.one(), &u), u);
    }

    #[test]
    fn relation_spaces() {
        let r = SkewPolyAlgebra::quantum_minus_one_plane().relation_space();
        assert_eq!(r.dim(), 1);
        // v⊗u + u⊗v
        assert!(r.contains(&[int(0), int(1), int(1), int(0)]));
        let c = SkewPolyAlgebra::plane(int(1)).relation_space();
        assert!(c.contains(&[int(0), int(-1), int(1), int(0)]));
        let three = SkewPolyAlgebra::uniform(vec!["a".into(), "b".into(), "c".into()], int(-1)).unwrap();
        assert_eq!(three.relation_space().dim(), 3);
        let one = SkewPolyAlgebra::uniform(vec!["a".into()], int(1)).unwrap();
        assert_eq!(one.relation_space().dim(), 0);
    }

    #[test]
    fn zero_q_rejected() {
        let r = SkewPolyAlgebra::uniform(vec!["a".into(), "b".into()], int(0));
        assert_eq!(r, Err(AlgebraError::ZeroQ(0, 1)));
    }

    #[test]
    fn kac_paljutkin_action_closed_forms() {
        let q = int(2);
        let act = kp_action(&q);
        let h = act.hopf().clone();
        let z = h.basis_element(3);
        let x = h.basis_element(1);
        let alg = act.algebra().clone();
        assert_eq!(
            act.act(&z, &alg.generator(0)),
            AlgebraElement::monomial(mono(&[0, 1]), q.recip())
        );
        for s in 0..4u32 {
            for t in 0..4u32 {
                let m = AlgebraElement::monomial(mono(&[s, t]), int(1));
                let expected = pow(&q, t as i64 - s as i64) * crate::linalg::sign((s * t) as u64);
                assert_eq!(act.act(&z, &m), AlgebraElement::monomial(mono(&[t, s]), expected));
                assert_eq!(act.act(&x, &m), m);
            }
        }
        assert!(check_module_algebra(&act).all_passed());
    }

    #[test]
    fn broken_actions_fail_module_algebra_check() {
        let h = Arc::new(kac_paljutkin());
        let alg = SkewPolyAlgebra::quantum_minus_one_plane();
        let mut z = Matrix::zeros(2, 2);
        z.set(1, 0, int(1));
        z.set(0, 1, int(2));
        let mats = h
            .labels()
            .iter()
            .map(|l| if l.contains('z') { z.clone() } else { Matrix::identity(2) })
            .collect();
        let act = HActionOnA::new(h, alg, mats).unwrap();
        let r = check_module_algebra(&act);
        assert!(!r.all_passed());
        assert!(r.checks.iter().any(|c| !c.passed && c.witness.is_some()));
    }

    #[test]
    fn swap_action_on_commutative_plane() {
        let h = Arc::new(group_algebra(&cyclic_table(2), None).unwrap());
        let alg = SkewPolyAlgebra::plane(int(1));
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let act = HActionOnA::new(h, alg, vec![Matrix::identity(2), swap]).unwrap();
        assert!(check_module_algebra(&act).all_passed());
    }

    #[test]
    fn smash_commutation_rules() {
        let q = int(2);
        let sp = SmashProduct::new(kp_action(&q));
        let z = 3;
        let n1 = |m: &[u32], h: usize| SmashElement::basis(mono(m), h);
        let lhs = sp.multiply(&n1(&[0, 0], z), &n1(&[1, 0], 0));
        assert_eq!(lhs, n1(&[0, 1], z).scale(&q.recip()));
        for s in 0..3u32 {
            for t in 0..3u32 {
                let got = sp.multiply(&n1(&[0, 0], z), &n1(&[s, t], 0));
                let c = pow(&q, t as i64 - s as i64) * crate::linalg::sign((s * t) as u64);
                assert_eq!(got, n1(&[t, s], z).scale(&c));
                for h0 in [1usize, 2, 4] {
                    let l = sp.multiply(&n1(&[0, 0], h0), &n1(&[s, t], 0));
                    let r = sp.multiply(&n1(&[s, t], 0), &n1(&[0, 0], h0));
                    assert_eq!(l, r);
                }
            }
        }
        let b = n1(&[2, 1], 5);
        assert_eq!(sp.multiply(&sp.one(), &b), b);
        assert_eq!(sp.multiply(&b, &sp.one()), b);
    }
}
