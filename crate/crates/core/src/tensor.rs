//! Structure constants of a ternary algebra as a dense (1,3)-tensor
//! `C^m_{ikl}`, together with the two defining checks: the `w`-cyclic
//! symmetry of the lower indices and the order-20 averaged quadratic
//! identity (the ternary analogue of the Jacobi identity).
//!
//! Indices are zero-based in code; reports and JSON use one-based tuples.

use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::free::FAMILY_SEEDS;
use crate::group::{ga15_rows, Perm5};
use crate::scalar::EisScalar;
use crate::upoly::{Roots, UPoly};
use crate::EisMatrix;

/// Violations kept per report; the total count is always exact.
pub const MAX_VIOLATIONS: usize = 64;

#[derive(Clone, Debug)]
pub struct Violation {
    /// one-based index tuple
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub checked: usize,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new(name: &'static str) -> Self {
        CheckReport {
            name,
            checked: 0,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    pub fn record(&mut self, indices: Vec<usize>, detail: String) {
        self.violation_count += 1;
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(Violation { indices, detail });
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn truncated(&self) -> bool {
        self.violation_count > self.violations.len()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    data: Vec<EisScalar>,
}

impl StructureTensor {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "tensor dimension must be positive");
        StructureTensor {
            dim,
            data: vec![EisScalar::zero(); dim.pow(4)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, m: usize, i: usize, k: usize, l: usize) -> usize {
        debug_assert!(m < self.dim && i < self.dim && k < self.dim && l < self.dim);
        ((m * self.dim + i) * self.dim + k) * self.dim + l
    }

    pub fn get(&self, m: usize, i: usize, k: usize, l: usize) -> &EisScalar {
        &self.data[self.idx(m, i, k, l)]
    }

    pub fn set(&mut self, m: usize, i: usize, k: usize, l: usize, v: EisScalar) {
        let at = self.idx(m, i, k, l);
        self.data[at] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Nonzero entries as ((m,i,k,l), value), zero-based.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize, usize), &EisScalar)> {
        let n = self.dim;
        self.data.iter().enumerate().filter_map(move |(flat, v)| {
            if v.is_zero() {
                return None;
            }
            let l = flat % n;
            let k = (flat / n) % n;
            let i = (flat / (n * n)) % n;
            let m = flat / (n * n * n);
            Some(((m, i, k, l), v))
        })
    }

    /// Builds the dimension-2 tensor from its four independent constants
    /// `(C^1_{121}, C^2_{121}, C^1_{212}, C^2_{212})`; every other entry is
    /// forced by the cyclic symmetry, diagonal entries vanish.
    pub fn from_independent_2d(
        p: EisScalar,
        q: EisScalar,
        r: EisScalar,
        s: EisScalar,
    ) -> StructureTensor {
        let w = EisScalar::omega();
        let wb = EisScalar::omega_bar();
        let mut c = StructureTensor::zero(2);
        for (m, v121) in [(0usize, p), (1, q)] {
            // rotations of (1,2,1): (2,1,1) carries w^2, (1,1,2) carries w
            c.set(m, 1, 0, 0, &wb * &v121);
            c.set(m, 0, 0, 1, &w * &v121);
            c.set(m, 0, 1, 0, v121);
        }
        for (m, v212) in [(0usize, r), (1, s)] {
            c.set(m, 0, 1, 1, &wb * &v212);
            c.set(m, 1, 1, 0, &w * &v212);
            c.set(m, 1, 0, 1, v212);
        }
        c
    }

    /// Reads back the four independent dimension-2 constants.
    pub fn independent_2d(&self) -> Result<[EisScalar; 4]> {
        if self.dim != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                got: self.dim,
            });
        }
        Ok([
            self.get(0, 0, 1, 0).clone(),
            self.get(1, 0, 1, 0).clone(),
            self.get(0, 1, 0, 1).clone(),
            self.get(1, 1, 0, 1).clone(),
        ])
    }

    /// Verifies `C^m_{ikl} = w C^m_{kli} = w^2 C^m_{lik}` on every tuple;
    /// diagonal tuples are forced to zero by the relation and violations
    /// there are reported as such.
    pub fn check_omega_symmetry(&self) -> CheckReport {
        let mut report = CheckReport::new("omega-symmetry");
        let n = self.dim;
        let w = EisScalar::omega();
        let wb = EisScalar::omega_bar();
        for m in 0..n {
            for i in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        report.checked += 1;
                        let c = self.get(m, i, k, l);
                        let rot1 = &w * self.get(m, k, l, i);
                        let rot2 = &wb * self.get(m, l, i, k);
                        if *c != rot1 || *c != rot2 {
                            report.record(
                                vec![m + 1, i + 1, k + 1, l + 1],
                                format!(
                                    "entry {c} breaks the cyclic relation (rotations give {rot1} and {rot2})"
                                ),
                            );
                        }
                    }
                }
            }
        }
        report
    }

    /// The averaged quadratic identity, summed over the full order-20 group.
    pub fn check_ga15_identity(&self) -> CheckReport {
        self.ga15_identity_with(&ga15_rows(), "group-averaged identity")
    }

    /// Same identity assembled from the four seed families and their cyclic
    /// relabelings instead of the row enumeration; must agree with
    /// `check_ga15_identity` on every input.
    pub fn check_ga15_identity_by_families(&self) -> CheckReport {
        self.ga15_identity_with(&family_perms(), "family-averaged identity")
    }

    fn ga15_identity_with(&self, perms: &[Perm5], name: &'static str) -> CheckReport {
        let mut report = CheckReport::new(name);
        let n = self.dim;
        // images as zero-based positions into the 5-tuple
        let tables: Vec<[usize; 5]> = perms
            .iter()
            .map(|p| {
                let mut t = [0usize; 5];
                for (slot, entry) in t.iter_mut().enumerate() {
                    *entry = p.apply(slot as u8 + 1) as usize - 1;
                }
                t
            })
            .collect();

        // d[p][a][b][c][d][e] = sum_m C^m_{abc} C^p_{mde}, so each group
        // term is a single table lookup instead of an m-contraction
        let mut dtab = vec![EisScalar::zero(); n.pow(6)];
        let at = |p: usize, a: usize, b: usize, c: usize, d: usize, e: usize| {
            ((((p * n + a) * n + b) * n + c) * n + d) * n + e
        };
        for ((m, a, b, c), first) in self.nonzero() {
            for p in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        let second = self.get(p, m, d, e);
                        if second.is_zero() {
                            continue;
                        }
                        dtab[at(p, a, b, c, d, e)] += &(first * second);
                    }
                }
            }
        }

        let mut x = [0usize; 5];
        for flat in 0..n.pow(5) {
            let mut rest = flat;
            for slot in (0..5).rev() {
                x[slot] = rest % n;
                rest /= n;
            }
            for p in 0..n {
                report.checked += 1;
                let mut acc = EisScalar::zero();
                for t in &tables {
                    acc += &dtab[at(p, x[t[0]], x[t[1]], x[t[2]], x[t[3]], x[t[4]])];
                }
                if !acc.is_zero() {
                    report.record(
                        vec![x[0] + 1, x[1] + 1, x[2] + 1, x[3] + 1, x[4] + 1, p + 1],
                        format!("residual {acc}"),
                    );
                }
            }
        }
        report
    }

    /// Trilinear evaluation `w^m = C^m_{ikl} x^i y^k z^l`.
    pub fn bracket(
        &self,
        x: &[EisScalar],
        y: &[EisScalar],
        z: &[EisScalar],
    ) -> Result<Vec<EisScalar>> {
        let n = self.dim;
        if x.len() != n || y.len() != n || z.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "bracket needs three vectors of length {n}, got {}, {}, {}",
                x.len(),
                y.len(),
                z.len()
            )));
        }
        let mut out = vec![EisScalar::zero(); n];
        for ((m, i, k, l), c) in self.nonzero() {
            if x[i].is_zero() || y[k].is_zero() || z[l].is_zero() {
                continue;
            }
            out[m] += &(&(&(c * &x[i]) * &y[k]) * &z[l]);
        }
        Ok(out)
    }

    /// Rewrites the tensor in a new basis. The convention: column `j` of the
    /// inverse of `a` holds the coordinates of the new basis vector `e'_j`
    /// in the old basis, so `a` itself expresses old vectors in new terms.
    pub fn change_basis(&self, a: &EisMatrix) -> Result<StructureTensor> {
        let n = self.dim;
        if a.rows() != n || a.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "basis change needs a {n}x{n} matrix, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        let b = a.inverse()?;
        let mut out = StructureTensor::zero(n);
        for ((m, p, q, r), c) in self.nonzero() {
            for mp in 0..n {
                let f0 = &a[(mp, m)] * c;
                if f0.is_zero() {
                    continue;
                }
                for i in 0..n {
                    let f1 = &f0 * &b[(p, i)];
                    if f1.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        let f2 = &f1 * &b[(q, k)];
                        if f2.is_zero() {
                            continue;
                        }
                        for l in 0..n {
                            let f3 = &f2 * &b[(r, l)];
                            if f3.is_zero() {
                                continue;
                            }
                            let at = out.idx(mp, i, k, l);
                            out.data[at] += &f3;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Draws an `w`-symmetric tensor with independent entries `a + b w`,
    /// `a, b` uniform in [-3, 3]: one free value per cyclic index class,
    /// rotations filled in with the forced factors.
    pub fn random_omega_symmetric<R: Rng>(dim: usize, rng: &mut R) -> StructureTensor {
        let w = EisScalar::omega();
        let wb = EisScalar::omega_bar();
        let mut c = StructureTensor::zero(dim);
        for m in 0..dim {
            for i in 0..dim {
                for k in 0..dim {
                    for l in 0..dim {
                        if i == k && k == l {
                            continue;
                        }
                        // one representative per rotation class
                        if (i, k, l) > (k, l, i) || (i, k, l) > (l, i, k) {
                            continue;
                        }
                        let v = EisScalar::from_ints(
                            rng.gen_range(-3..=3),
                            rng.gen_range(-3..=3),
                        );
                        c.set(m, k, l, i, &wb * &v);
                        c.set(m, l, i, k, &w * &v);
                        c.set(m, i, k, l, v);
                    }
                }
            }
        }
        c
    }

    /// True iff every bracket with first argument in the subspace lands back
    /// in it. The cyclic symmetry makes the other argument positions scalar
    /// multiples of this one, so one position decides membership.
    pub fn is_ideal(&self, sub: &Subspace) -> Result<bool> {
        let n = self.dim;
        if sub.ambient() != n {
            return Err(Error::DimensionMismatch(format!(
                "subspace lives in dimension {}, tensor in {n}",
                sub.ambient()
            )));
        }
        if sub.dim() == 0 {
            return Ok(true);
        }
        let solver = sub.span_matrix().solver();
        let basis: Vec<Vec<EisScalar>> = (0..n)
            .map(|j| {
                let mut e = vec![EisScalar::zero(); n];
                e[j] = EisScalar::from_int(1);
                e
            })
            .collect();
        for a in sub.basis() {
            for x in &basis {
                for y in &basis {
                    let w = self.bracket(a, x, y)?;
                    if !solver.contains(&w)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Finds the one-dimensional ideals of a dimension-2 tensor whose
    /// direction lies in the field. Candidate directions split into the
    /// pencil (1, t) and the single extra direction (0, 1); each ideal
    /// condition is the vanishing of a small determinant, polynomial in t.
    pub fn find_one_dim_ideals_2d(&self) -> Result<IdealSearch2d> {
        if self.dim != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                got: self.dim,
            });
        }
        if !self.check_omega_symmetry().passed() {
            return Err(Error::NotOmegaSymmetric);
        }
        if self.is_zero() {
            return Ok(IdealSearch2d::AllDirections);
        }

        // v = (1, t): bracket(v, e_x, e_y)^m = C^m_{1xy} + t C^m_{2xy};
        // collinearity with v is the vanishing of
        //   B0 t^2 + (A0 - B1) t - A1,  Am = C^m_{1xy}, Bm = C^m_{2xy}
        let mut g = UPoly::zero();
        for x in 0..2 {
            for y in 0..2 {
                let a0 = self.get(0, 0, x, y).clone();
                let a1 = self.get(1, 0, x, y).clone();
                let b0 = self.get(0, 1, x, y).clone();
                let b1 = self.get(1, 1, x, y).clone();
                let det = UPoly::from_coeffs(&[-a1, &a0 - &b1, b0]);
                g = g.gcd(&det)?;
            }
        }
        if g.is_zero() {
            // a nonzero symmetric tensor cannot make every direction ideal
            return Err(Error::Invalid {
                what: "ideal search",
                detail: "determinant conditions vanished identically for a nonzero tensor".into(),
            });
        }

        let mut found = Vec::new();
        let mut unresolved = None;
        match g.roots()? {
            Roots::All => unreachable!("gcd is nonzero"),
            Roots::Known(ts) => {
                for t in ts {
                    let sub = Subspace::new(2, vec![vec![EisScalar::from_int(1), t]])?;
                    if self.is_ideal(&sub)? {
                        found.push(sub);
                    } else {
                        return Err(Error::Invalid {
                            what: "ideal search",
                            detail: "determinant root failed the direct ideal check".into(),
                        });
                    }
                }
            }
            Roots::OutsideField(f) => unresolved = Some(f),
        }

        let e2 = Subspace::new(
            2,
            vec![vec![EisScalar::zero(), EisScalar::from_int(1)]],
        )?;
        if self.is_ideal(&e2)? {
            found.push(e2);
        }

        Ok(match unresolved {
            None => IdealSearch2d::Resolved(found),
            Some(f) => IdealSearch2d::Partial {
                found,
                unresolved: f,
            },
        })
    }

    /// Three-valued simplicity verdict for dimension 2.
    pub fn is_simple_2d(&self) -> Result<Simplicity> {
        if self.is_zero() {
            return Ok(Simplicity::NotSimple);
        }
        Ok(match self.find_one_dim_ideals_2d()? {
            IdealSearch2d::AllDirections => Simplicity::NotSimple,
            IdealSearch2d::Resolved(list) => {
                if list.is_empty() {
                    Simplicity::Simple
                } else {
                    Simplicity::NotSimple
                }
            }
            IdealSearch2d::Partial { found, .. } => {
                if found.is_empty() {
                    Simplicity::Undecided
                } else {
                    Simplicity::NotSimple
                }
            }
        })
    }
}

impl std::fmt::Debug for StructureTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StructureTensor(dim {}", self.dim)?;
        for ((m, i, k, l), v) in self.nonzero() {
            write!(f, ", C^{}_{}{}{} = {v}", m + 1, i + 1, k + 1, l + 1)?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug)]
pub enum IdealSearch2d {
    /// the zero tensor: every subspace is an ideal
    AllDirections,
    /// the complete list of one-dimensional ideals with field directions
    Resolved(Vec<Subspace>),
    /// some directions could not be decided inside the field
    Partial { found: Vec<Subspace>, unresolved: UPoly },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Simplicity {
    Simple,
    NotSimple,
    /// the ideal search left a factor unresolved over the field
    Undecided,
}

/// The twenty permutations regenerated from the four seed tuples and the
/// five cyclic relabelings of each.
pub fn family_perms() -> Vec<Perm5> {
    let sigma = Perm5::sigma();
    let mut out = Vec::with_capacity(20);
    for seed in FAMILY_SEEDS {
        let rho = Perm5::from_images(seed).expect("seed tuples are permutations");
        for k in 0..5 {
            out.push(sigma.pow(k).compose(&rho));
        }
    }
    out
}

/// The explicit four-by-four matrix of the dimension-2 transformation law,
/// acting on the column `(p, q, r, s)`; entries are quadratic monomials in
/// the coefficients of `a` divided by the squared determinant.
pub fn closed_form_matrix_2d(a: &EisMatrix) -> Result<EisMatrix> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "closed form needs a 2x2 matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let det = a.det()?;
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let d2inv = (&det * &det).inv()?;
    let (a11, a12, a21, a22) = (&a[(0, 0)], &a[(0, 1)], &a[(1, 0)], &a[(1, 1)]);
    let rows = vec![
        vec![a11 * a22, a12 * a22, a11 * a21, a12 * a21],
        vec![a21 * a22, a22 * a22, a21 * a21, a21 * a22],
        vec![a11 * a12, a12 * a12, a11 * a11, a11 * a12],
        vec![a12 * a21, a12 * a22, a11 * a21, a11 * a22],
    ];
    Ok(EisMatrix::from_rows(rows)?.scale(&d2inv))
}

/// Applies the closed-form law to the four independent constants.
pub fn transform_2d_closed_form(
    v: &[EisScalar; 4],
    a: &EisMatrix,
) -> Result<[EisScalar; 4]> {
    let m = closed_form_matrix_2d(a)?;
    let out = m.matvec(v);
    Ok([
        out[0].clone(),
        out[1].clone(),
        out[2].clone(),
        out[3].clone(),
    ])
}

/// A subspace given by an explicit independent basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<EisScalar>>,
}

impl Subspace {
    pub fn new(ambient: usize, basis: Vec<Vec<EisScalar>>) -> Result<Self> {
        for v in &basis {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "basis vector of length {} in ambient dimension {ambient}",
                    v.len()
                )));
            }
        }
        let sub = Subspace { ambient, basis };
        if sub.dim() > 0 && sub.span_matrix().rank() != sub.dim() {
            return Err(Error::DependentBasis);
        }
        Ok(sub)
    }

    pub fn full(n: usize) -> Self {
        let basis = (0..n)
            .map(|j| {
                let mut e = vec![EisScalar::zero(); n];
                e[j] = EisScalar::from_int(1);
                e
            })
            .collect();
        Subspace { ambient: n, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<EisScalar>] {
        &self.basis
    }

    /// Basis vectors as columns.
    pub fn span_matrix(&self) -> EisMatrix {
        EisMatrix::from_fn(self.ambient, self.basis.len(), |r, c| {
            self.basis[c][r].clone()
        })
    }

    pub fn contains(&self, v: &[EisScalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        if self.dim() == 0 {
            return Ok(v.iter().all(|c| c.is_zero()));
        }
        self.span_matrix().solver().contains(v)
    }
}
