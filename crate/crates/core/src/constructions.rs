//! Concrete associative ternary algebras and the machinery to turn any of
//! them into structure constants: rectangular matrices under `A B^T C`,
//! square matrices under the plain product, cubic matrices under the
//! `beta`/`gamma` contractions, row vectors, and tensor-defined brackets.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::free::AssocKind;
use crate::scalar::EisScalar;
use crate::tensor::{CheckReport, StructureTensor};
use crate::EisMatrix;

/// Three-index array with entries `X[i][j][k]`, all indices of one order.
#[derive(Clone, PartialEq, Eq)]
pub struct CubicMatrix {
    n: usize,
    data: Vec<EisScalar>,
}

impl CubicMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "cubic matrix order must be positive");
        CubicMatrix {
            n,
            data: vec![EisScalar::zero(); n * n * n],
        }
    }

    pub fn from_entries(n: usize, entries: &[(usize, usize, usize, EisScalar)]) -> Result<Self> {
        let mut x = CubicMatrix::zero(n);
        for (i, j, k, v) in entries {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({i},{j},{k}) outside order {n}"
                )));
            }
            x.set(*i, *j, *k, v.clone());
        }
        Ok(x)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.n && j < self.n && k < self.n);
        (i * self.n + j) * self.n + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &EisScalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: EisScalar) {
        let at = self.idx(i, j, k);
        self.data[at] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &CubicMatrix) -> Result<CubicMatrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(format!(
                "cubic orders {} and {}",
                self.n, rhs.n
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &EisScalar) -> CubicMatrix {
        CubicMatrix {
            n: self.n,
            data: self.data.iter().map(|c| c * k).collect(),
        }
    }

    /// The slice with the third index pinned: `slice(p)[r][s] = X[r][s][p]`.
    pub fn third_slice(&self, p: usize) -> EisMatrix {
        EisMatrix::from_fn(self.n, self.n, |r, s| self.get(r, s, p).clone())
    }

    /// Row-major flattening, third index fastest.
    pub fn flatten(&self) -> Vec<EisScalar> {
        self.data.clone()
    }
}

impl std::fmt::Debug for CubicMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CubicMatrix(order {}", self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        write!(f, ", [{}][{}][{}] = {v}", i + 1, j + 1, k + 1)?;
                    }
                }
            }
        }
        write!(f, ")")
    }
}

/// `A B^T C` on matrices of one rectangular shape.
pub fn rect_triple(a: &EisMatrix, b: &EisMatrix, c: &EisMatrix) -> Result<EisMatrix> {
    let shape = (a.rows(), a.cols());
    if (b.rows(), b.cols()) != shape || (c.rows(), c.cols()) != shape {
        return Err(Error::DimensionMismatch(format!(
            "triple product needs three {}x{} matrices",
            shape.0, shape.1
        )));
    }
    Ok(a.matmul(&b.transpose()).matmul(c))
}

/// Plain `A B C` on square matrices of one order.
pub fn binary_derived_triple(a: &EisMatrix, b: &EisMatrix, c: &EisMatrix) -> Result<EisMatrix> {
    let shape = (a.rows(), a.cols());
    if a.rows() != a.cols() || (b.rows(), b.cols()) != shape || (c.rows(), c.cols()) != shape {
        return Err(Error::DimensionMismatch(
            "triple product needs three square matrices of one order".into(),
        ));
    }
    Ok(a.matmul(b).matmul(c))
}

/// Contraction on the third index: `(X . A)[i][j][l] = X[i][j][k] A[k][l]`.
pub fn cubic_right_action(x: &CubicMatrix, a: &EisMatrix) -> Result<CubicMatrix> {
    let n = x.order();
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "right action needs a {n}x{n} matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let mut out = CubicMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = x.get(i, j, k);
                if c.is_zero() {
                    continue;
                }
                for l in 0..n {
                    let f = &a[(k, l)];
                    if f.is_zero() {
                        continue;
                    }
                    let at = out.idx(i, j, l);
                    out.data[at] += &(c * f);
                }
            }
        }
    }
    Ok(out)
}

/// `beta(X, Y)[p][k] = X[r][s][p] Y[s][r][k]` (transposed pairing).
pub fn beta_form(x: &CubicMatrix, y: &CubicMatrix) -> Result<EisMatrix> {
    pair_form(x, y, true)
}

/// `gamma(X, Y)[p][k] = X[r][s][p] Y[r][s][k]` (straight pairing).
pub fn gamma_form(x: &CubicMatrix, y: &CubicMatrix) -> Result<EisMatrix> {
    pair_form(x, y, false)
}

fn pair_form(x: &CubicMatrix, y: &CubicMatrix, transposed: bool) -> Result<EisMatrix> {
    let n = x.order();
    if y.order() != n {
        return Err(Error::DimensionMismatch(format!(
            "cubic orders {} and {}",
            n,
            y.order()
        )));
    }
    let mut out = EisMatrix::zeros(n, n);
    for p in 0..n {
        for k in 0..n {
            let mut acc = EisScalar::zero();
            for r in 0..n {
                for s in 0..n {
                    let left = x.get(r, s, p);
                    if left.is_zero() {
                        continue;
                    }
                    let right = if transposed { y.get(s, r, k) } else { y.get(r, s, k) };
                    acc += &(left * right);
                }
            }
            out[(p, k)] = acc;
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubicForm {
    Beta,
    Gamma,
}

/// `X . Y . Z = X . form(Y, Z)`.
pub fn cubic_triple(
    x: &CubicMatrix,
    y: &CubicMatrix,
    z: &CubicMatrix,
    form: CubicForm,
) -> Result<CubicMatrix> {
    let f = match form {
        CubicForm::Beta => beta_form(y, z)?,
        CubicForm::Gamma => gamma_form(y, z)?,
    };
    cubic_right_action(x, &f)
}

/// The three trace vectors: pairing the first two, outer two, and last two
/// indices respectively.
pub fn traces(x: &CubicMatrix) -> [Vec<EisScalar>; 3] {
    let n = x.order();
    let mut t = [
        vec![EisScalar::zero(); n],
        vec![EisScalar::zero(); n],
        vec![EisScalar::zero(); n],
    ];
    for j in 0..n {
        for i in 0..n {
            t[0][j] += x.get(i, i, j);
            t[1][j] += x.get(i, j, i);
            t[2][j] += x.get(j, i, i);
        }
    }
    t
}

/// The linear map sending a flattened order-n cubic matrix to its three
/// concatenated trace vectors; its null space is the traceless subspace.
pub fn trace_constraint_matrix(n: usize) -> EisMatrix {
    let mut m = EisMatrix::zeros(3 * n, n * n * n);
    let flat = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    for j in 0..n {
        for i in 0..n {
            m[(j, flat(i, i, j))] += &EisScalar::one();
            m[(n + j, flat(i, j, i))] += &EisScalar::one();
            m[(2 * n + j, flat(j, i, i))] += &EisScalar::one();
        }
    }
    m
}

/// The two standard generators of the traceless order-2 cubic matrices:
/// the first has `X[1][1][1] = 1` and `-1` on the three positions with an
/// even number of twos per slot pair, the second is its mirror under
/// swapping the two index values.
pub fn traceless_basis_order2() -> (CubicMatrix, CubicMatrix) {
    let one = EisScalar::one();
    let m1 = -EisScalar::one();
    let e1 = CubicMatrix::from_entries(
        2,
        &[
            (0, 0, 0, one.clone()),
            (1, 1, 0, m1.clone()),
            (1, 0, 1, m1.clone()),
            (0, 1, 1, m1.clone()),
        ],
    )
    .expect("entries in range");
    let e2 = CubicMatrix::from_entries(
        2,
        &[
            (1, 1, 1, one),
            (0, 0, 1, m1.clone()),
            (0, 1, 0, m1.clone()),
            (1, 0, 0, m1),
        ],
    )
    .expect("entries in range");
    (e1, e2)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VectorBracket {
    /// the three-term cyclic delta formula
    Cyclic,
    /// the full six-term commutator of the row product; equals minus the
    /// cyclic tensor
    Full,
}

/// Structure constants of the vector algebra on n coordinates:
/// `C^m_{ijk} = d_{ki} d^m_j + w d_{ij} d^m_k + w^2 d_{jk} d^m_i`,
/// negated for the `Full` variant.
pub fn vector_structure_constants(n: usize, variant: VectorBracket) -> Result<StructureTensor> {
    if n == 0 {
        return Err(Error::Invalid {
            what: "vector algebra size",
            detail: "needs at least one coordinate".into(),
        });
    }
    let w = EisScalar::omega();
    let wb = EisScalar::omega_bar();
    let mut c = StructureTensor::zero(n);
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut v = EisScalar::zero();
                    if k == i && m == j {
                        v += &EisScalar::one();
                    }
                    if i == j && m == k {
                        v += &w;
                    }
                    if j == k && m == i {
                        v += &wb;
                    }
                    if let VectorBracket::Full = variant {
                        v = -v;
                    }
                    if !v.is_zero() {
                        c.set(m, i, j, k, v);
                    }
                }
            }
        }
    }
    Ok(c)
}

/// An element of whichever carrier a ternary product acts on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Carrier {
    Rect(EisMatrix),
    Cubic(CubicMatrix),
    Vector(Vec<EisScalar>),
}

impl Carrier {
    pub fn flatten(&self) -> Vec<EisScalar> {
        match self {
            Carrier::Rect(m) => m.entries().to_vec(),
            Carrier::Cubic(x) => x.flatten(),
            Carrier::Vector(v) => v.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Carrier::Rect(m) => m.is_zero(),
            Carrier::Cubic(x) => x.is_zero(),
            Carrier::Vector(v) => v.iter().all(|c| c.is_zero()),
        }
    }

    pub fn scale(&self, k: &EisScalar) -> Carrier {
        match self {
            Carrier::Rect(m) => Carrier::Rect(m.scale(k)),
            Carrier::Cubic(x) => Carrier::Cubic(x.scale(k)),
            Carrier::Vector(v) => Carrier::Vector(v.iter().map(|c| c * k).collect()),
        }
    }

    pub fn add(&self, rhs: &Carrier) -> Result<Carrier> {
        match (self, rhs) {
            (Carrier::Rect(a), Carrier::Rect(b)) => {
                if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
                    return Err(Error::DimensionMismatch("rectangular shapes differ".into()));
                }
                Ok(Carrier::Rect(a.add(b)))
            }
            (Carrier::Cubic(a), Carrier::Cubic(b)) => Ok(Carrier::Cubic(a.add(b)?)),
            (Carrier::Vector(a), Carrier::Vector(b)) => {
                if a.len() != b.len() {
                    return Err(Error::DimensionMismatch("vector lengths differ".into()));
                }
                Ok(Carrier::Vector(
                    a.iter().zip(b).map(|(x, y)| x + y).collect(),
                ))
            }
            _ => Err(Error::DimensionMismatch(
                "mixed carrier kinds in one expression".into(),
            )),
        }
    }

    pub fn sub(&self, rhs: &Carrier) -> Result<Carrier> {
        self.add(&rhs.scale(&-EisScalar::one()))
    }
}

/// A named trilinear rule together with the data it needs.
#[derive(Clone, Debug)]
pub enum TernaryProduct {
    /// `A B^T C` on rectangular matrices
    RectTranspose,
    /// plain `A B C` on square matrices
    BinaryDerived,
    /// cubic matrices under `X . beta(Y, Z)`
    CubicBeta,
    /// cubic matrices under `X . gamma(Y, Z)`
    CubicGamma,
    /// coordinate vectors under a stored bracket tensor
    Tensor(StructureTensor),
}

impl TernaryProduct {
    pub fn triple(&self, x: &Carrier, y: &Carrier, z: &Carrier) -> Result<Carrier> {
        match (self, x, y, z) {
            (TernaryProduct::RectTranspose, Carrier::Rect(a), Carrier::Rect(b), Carrier::Rect(c)) => {
                Ok(Carrier::Rect(rect_triple(a, b, c)?))
            }
            (TernaryProduct::BinaryDerived, Carrier::Rect(a), Carrier::Rect(b), Carrier::Rect(c)) => {
                Ok(Carrier::Rect(binary_derived_triple(a, b, c)?))
            }
            (TernaryProduct::CubicBeta, Carrier::Cubic(a), Carrier::Cubic(b), Carrier::Cubic(c)) => {
                Ok(Carrier::Cubic(cubic_triple(a, b, c, CubicForm::Beta)?))
            }
            (TernaryProduct::CubicGamma, Carrier::Cubic(a), Carrier::Cubic(b), Carrier::Cubic(c)) => {
                Ok(Carrier::Cubic(cubic_triple(a, b, c, CubicForm::Gamma)?))
            }
            (TernaryProduct::Tensor(t), Carrier::Vector(a), Carrier::Vector(b), Carrier::Vector(c)) => {
                Ok(Carrier::Vector(t.bracket(a, b, c)?))
            }
            _ => Err(Error::DimensionMismatch(
                "carrier kind does not match the product".into(),
            )),
        }
    }
}

/// The six-term commutator evaluated inside a carrier:
/// `xyz + w yzx + w^2 zxy + zyx + w^2 yxz + w xzy`.
pub fn omega_commutator_eval(
    prod: &TernaryProduct,
    x: &Carrier,
    y: &Carrier,
    z: &Carrier,
) -> Result<Carrier> {
    let w = EisScalar::omega();
    let wb = EisScalar::omega_bar();
    let mut acc = prod.triple(x, y, z)?;
    acc = acc.add(&prod.triple(y, z, x)?.scale(&w))?;
    acc = acc.add(&prod.triple(z, x, y)?.scale(&wb))?;
    acc = acc.add(&prod.triple(z, y, x)?)?;
    acc = acc.add(&prod.triple(y, x, z)?.scale(&wb))?;
    acc = acc.add(&prod.triple(x, z, y)?.scale(&w))?;
    Ok(acc)
}

/// The commutator of the beta product written directly as one entrywise
/// sum, first summand `X[i][j][l] Y[n][m][l] Z[m][n][k]`; must agree with
/// `omega_commutator_eval` term for term.
pub fn entrywise_beta_commutator(
    x: &CubicMatrix,
    y: &CubicMatrix,
    z: &CubicMatrix,
) -> Result<CubicMatrix> {
    let order = x.order();
    if y.order() != order || z.order() != order {
        return Err(Error::DimensionMismatch(format!(
            "cubic orders {}, {}, {}",
            x.order(),
            y.order(),
            z.order()
        )));
    }
    let w = EisScalar::omega();
    let wb = EisScalar::omega_bar();
    let one = EisScalar::one();
    let orders: [(&CubicMatrix, &CubicMatrix, &CubicMatrix, EisScalar); 6] = [
        (x, y, z, one.clone()),
        (y, z, x, w.clone()),
        (z, x, y, wb.clone()),
        (z, y, x, one),
        (y, x, z, wb),
        (x, z, y, w),
    ];
    let mut out = CubicMatrix::zero(order);
    for i in 0..order {
        for j in 0..order {
            for k in 0..order {
                let mut acc = EisScalar::zero();
                for (p, q, r, coeff) in &orders {
                    let mut term = EisScalar::zero();
                    for l in 0..order {
                        let pf = p.get(i, j, l);
                        if pf.is_zero() {
                            continue;
                        }
                        for nn in 0..order {
                            for mm in 0..order {
                                let qf = q.get(nn, mm, l);
                                if qf.is_zero() {
                                    continue;
                                }
                                term += &(&(pf * qf) * r.get(mm, nn, k));
                            }
                        }
                    }
                    acc += &(&term * coeff);
                }
                out.set(i, j, k, acc);
            }
        }
    }
    Ok(out)
}

/// Evaluates the commutator on every basis triple and solves for exact
/// coordinates in that basis. Fails when the basis is dependent or when a
/// bracket leaves the span (the offending triple is named, one-based).
pub fn extract_structure_constants(
    prod: &TernaryProduct,
    basis: &[Carrier],
) -> Result<StructureTensor> {
    let n = basis.len();
    if n == 0 {
        return Err(Error::Invalid {
            what: "basis",
            detail: "needs at least one element".into(),
        });
    }
    let cols: Vec<Vec<EisScalar>> = basis.iter().map(Carrier::flatten).collect();
    let len = cols[0].len();
    if cols.iter().any(|c| c.len() != len) {
        return Err(Error::DimensionMismatch(
            "basis elements of different shapes".into(),
        ));
    }
    let mat = EisMatrix::from_fn(len, n, |r, c| cols[c][r].clone());
    let solver = mat.solver();
    if solver.rank() != n {
        return Err(Error::DependentBasis);
    }
    let mut out = StructureTensor::zero(n);
    for i in 0..n {
        for k in 0..n {
            for l in 0..n {
                let w = omega_commutator_eval(prod, &basis[i], &basis[k], &basis[l])?;
                let coords = solver
                    .solve_vec(&w.flatten())?
                    .ok_or(Error::NotClosed(i + 1, k + 1, l + 1))?;
                for (m, v) in coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        out.set(m, i, k, l, v);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Shape of the random elements fed to the probes.
#[derive(Clone, Copy, Debug)]
pub enum CarrierShape {
    Rect { rows: usize, cols: usize },
    Cubic { order: usize },
    Vector { len: usize },
}

fn small_int<R: Rng>(rng: &mut R) -> EisScalar {
    EisScalar::from_int(rng.gen_range(-3..=3))
}

/// A pseudorandom carrier element with entries in [-3, 3].
pub fn random_element<R: Rng>(shape: CarrierShape, rng: &mut R) -> Carrier {
    match shape {
        CarrierShape::Rect { rows, cols } => {
            Carrier::Rect(EisMatrix::from_fn(rows, cols, |_, _| small_int(rng)))
        }
        CarrierShape::Cubic { order } => {
            let mut x = CubicMatrix::zero(order);
            for flat in 0..order * order * order {
                x.data[flat] = small_int(rng);
            }
            Carrier::Cubic(x)
        }
        CarrierShape::Vector { len } => {
            Carrier::Vector((0..len).map(|_| small_int(rng)).collect())
        }
    }
}

/// Tests the two chained equalities of the chosen associativity kind on
/// seeded pseudorandom inputs; comparisons are exact.
pub fn associativity_probe(
    prod: &TernaryProduct,
    shape: CarrierShape,
    kind: AssocKind,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    if trials == 0 {
        return Err(Error::Invalid {
            what: "trials",
            detail: "need at least one trial".into(),
        });
    }
    let name = match kind {
        AssocKind::First => "first-kind associativity",
        AssocKind::Second => "second-kind associativity",
        AssocKind::Free => {
            return Err(Error::Invalid {
                what: "associativity kind",
                detail: "probe needs the first or second kind".into(),
            })
        }
    };
    let mut report = CheckReport::new(name);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let a = random_element(shape, &mut rng);
        let b = random_element(shape, &mut rng);
        let c = random_element(shape, &mut rng);
        let g = random_element(shape, &mut rng);
        let h = random_element(shape, &mut rng);
        let left = prod.triple(&prod.triple(&a, &b, &c)?, &g, &h)?;
        let middle = match kind {
            AssocKind::First => prod.triple(&a, &prod.triple(&b, &c, &g)?, &h)?,
            AssocKind::Second => prod.triple(&a, &prod.triple(&g, &c, &b)?, &h)?,
            AssocKind::Free => unreachable!(),
        };
        let right = prod.triple(&a, &b, &prod.triple(&c, &g, &h)?)?;
        report.checked += 2;
        if left != middle {
            report.record(
                vec![trial + 1],
                "outer-left and middle placements disagree".into(),
            );
        }
        if left != right {
            report.record(
                vec![trial + 1],
                "outer-left and outer-right placements disagree".into(),
            );
        }
    }
    Ok(report)
}
