//! The four isomorphism classes of two-dimensional ternary algebras with an
//! omega-symmetric bracket, decided from basis-change invariants.
//!
//! Verdicts depend only on invariants and therefore hold over every extension
//! of the scalar field. Explicit change-of-basis witnesses are best-effort:
//! the constructive families need square roots that may not exist in the
//! field, in which case the verdict stands and the witness is reported
//! missing.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{sqrt_in_field, EisScalar};
use crate::tensor::{transform_2d_closed_form, IdealSearch2d, StructureTensor, Subspace};
use crate::EisMatrix;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ClassLabel {
    I,
    II,
    III,
    IV,
}

impl ClassLabel {
    pub fn all() -> [ClassLabel; 4] {
        [ClassLabel::I, ClassLabel::II, ClassLabel::III, ClassLabel::IV]
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            ClassLabel::I => "I",
            ClassLabel::II => "II",
            ClassLabel::III => "III",
            ClassLabel::IV => "IV",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassInvariants {
    pub is_zero: bool,
    /// whether the component vector satisfies p = s
    pub in_w: bool,
    /// whether p^2 - qr vanishes
    pub disc_zero: bool,
}

#[derive(Clone, PartialEq, Debug)]
pub struct ClassReport {
    pub label: ClassLabel,
    pub invariants: ClassInvariants,
    pub witness: Option<EisMatrix>,
}

/// The reference tensor of each class.
pub fn canonical(label: ClassLabel) -> StructureTensor {
    let z = EisScalar::zero;
    let o = EisScalar::one;
    match label {
        ClassLabel::I => StructureTensor::zero(2),
        ClassLabel::II => StructureTensor::from_independent_2d(z(), o(), o(), z()),
        ClassLabel::III => StructureTensor::from_independent_2d(z(), o(), z(), z()),
        ClassLabel::IV => StructureTensor::from_independent_2d(o(), z(), z(), -o()),
    }
}

/// Decides the class of a two-dimensional tensor from its independent
/// components (p, q, r, s): zero gives I, leaving p = s gives IV, and inside
/// the p = s hyperplane the vanishing of p^2 - qr separates III from II.
pub fn classify(c: &StructureTensor) -> Result<ClassReport> {
    let [p, q, r, s] = c.independent_2d()?;
    if !c.check_omega_symmetry().passed() {
        return Err(Error::NotOmegaSymmetric);
    }
    let is_zero = c.is_zero();
    let in_w = p == s;
    let disc = &(&p * &p) - &(&q * &r);
    let disc_zero = disc.is_zero();
    let label = if is_zero {
        ClassLabel::I
    } else if !in_w {
        ClassLabel::IV
    } else if disc_zero {
        ClassLabel::III
    } else {
        ClassLabel::II
    };
    Ok(ClassReport {
        label,
        invariants: ClassInvariants {
            is_zero,
            in_w,
            disc_zero,
        },
        witness: None,
    })
}

pub const REASON_NOT_ISOMORPHIC: &str = "not isomorphic";
pub const REASON_NO_FIELD_WITNESS: &str = "isomorphic over ℂ; no ℚ(ω)-witness found";

#[derive(Clone, PartialEq, Debug)]
pub enum IsoOutcome {
    /// a matrix A with transform(src, A) = dst, exactly
    Found(EisMatrix),
    NoWitness { reason: String },
}

fn m2(a: EisScalar, b: EisScalar, c: EisScalar, d: EisScalar) -> EisMatrix {
    EisMatrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("2x2 shape")
}

fn diag2(a: EisScalar, b: EisScalar) -> EisMatrix {
    m2(a, EisScalar::zero(), EisScalar::zero(), b)
}

fn swap2() -> EisMatrix {
    let z = EisScalar::zero;
    let o = EisScalar::one;
    m2(z(), o(), o(), z())
}

/// Components after the basis swap: (p, q, r, s) becomes (s, r, q, p).
fn swapped(v: &[EisScalar; 4]) -> [EisScalar; 4] {
    [v[3].clone(), v[2].clone(), v[1].clone(), v[0].clone()]
}

fn confirm(src: &[EisScalar; 4], dst: &[EisScalar; 4], a: EisMatrix) -> Result<IsoOutcome> {
    let got = transform_2d_closed_form(src, &a)?;
    if &got == dst {
        Ok(IsoOutcome::Found(a))
    } else {
        Err(Error::Invalid {
            what: "isomorphism witness",
            detail: "candidate failed the exactness check".into(),
        })
    }
}

fn no_witness() -> IsoOutcome {
    IsoOutcome::NoWitness {
        reason: REASON_NO_FIELD_WITNESS.into(),
    }
}

/// Writes m as x^2 + y^2 with both summands in the field, searching y over a
/// small fixed grid and closing with an exact square root. Best-effort.
fn represent_sum_of_squares(m: &EisScalar) -> Option<(EisScalar, EisScalar)> {
    if let Some(x) = sqrt_in_field(m) {
        return Some((x, EisScalar::zero()));
    }
    for den in 1i64..=4 {
        for u in 0i64..=4 {
            for v in -4i64..=4 {
                if u == 0 && v <= 0 {
                    continue;
                }
                let y = &EisScalar::from_ints(u, v) * &EisScalar::from_rational(crate::rat(1, den));
                let rest = m - &(&y * &y);
                if let Some(x) = sqrt_in_field(&rest) {
                    return Some((x, y));
                }
            }
        }
    }
    None
}

/// For a class III vector (a, b, c, a), a matrix T and a scalar b* with
/// transform((0, b*, 0, 0), T) = v. T is rational in the components.
fn iii_normalizer(v: &[EisScalar; 4]) -> (EisMatrix, EisScalar) {
    let a = &v[0];
    let b = &v[1];
    let c = &v[2];
    if !b.is_zero() {
        let t = m2(
            EisScalar::one(),
            a / b,
            EisScalar::zero(),
            EisScalar::one(),
        );
        (t, b.clone())
    } else {
        // a^2 = bc forces a = 0 here, so the vector is (0, 0, c, 0)
        (swap2(), c.clone())
    }
}

fn iii_witness(src: &[EisScalar; 4], dst: &[EisScalar; 4]) -> Result<IsoOutcome> {
    let (t_src, b_src) = iii_normalizer(src);
    let (t_dst, b_dst) = iii_normalizer(dst);
    let ratio = &b_src / &b_dst;
    match sqrt_in_field(&ratio) {
        Some(d) => {
            let w = t_dst
                .matmul(&diag2(d, EisScalar::one()))
                .matmul(&t_src.inverse()?);
            confirm(src, dst, w)
        }
        None => Ok(no_witness()),
    }
}

/// For a class II vector v = (a, b, c, a), a matrix A with
/// transform(canonical(II), A) = v, when the needed square roots exist.
/// Requires bc - a^2 to be a square s^2 and c/s^2 (or b/s^2) to split as a
/// sum of two squares.
fn ii_canonical_leg(v: &[EisScalar; 4]) -> Option<EisMatrix> {
    let a = &v[0];
    let b = &v[1];
    let c = &v[2];
    let gap = &(b * c) - &(a * a);
    let s = sqrt_in_field(&gap)?;
    let s2 = &s * &s;
    let one = EisScalar::one;
    let zero = EisScalar::zero;
    if !c.is_zero() {
        let (x, y) = represent_sum_of_squares(&(c / &s2))?;
        let t = &s / c;
        let lower = m2(one(), zero(), a / c, one());
        let rot = m2(x.clone(), y.clone(), -&(&t * &y), &t * &x);
        Some(lower.matmul(&rot))
    } else if !b.is_zero() {
        let (x, y) = represent_sum_of_squares(&(b / &s2))?;
        let t = &s / b;
        let upper = m2(one(), a / b, zero(), one());
        let rot = m2(-&(&t * &y), &t * &x, x.clone(), y.clone());
        Some(upper.matmul(&rot))
    } else {
        // b = c = 0 makes the gap -a^2, never a square for a != 0
        None
    }
}

fn ii_witness(src: &[EisScalar; 4], dst: &[EisScalar; 4]) -> Result<IsoOutcome> {
    if let (Some(a_src), Some(a_dst)) = (ii_canonical_leg(src), ii_canonical_leg(dst)) {
        let w = a_dst.matmul(&a_src.inverse()?);
        return confirm(src, dst, w);
    }
    match diag_swap_search(src, dst)? {
        Some(w) => confirm(src, dst, w),
        None => Ok(no_witness()),
    }
}

fn iv_witness(src: &[EisScalar; 4], dst: &[EisScalar; 4]) -> Result<IsoOutcome> {
    match diag_swap_search(src, dst)? {
        Some(w) => confirm(src, dst, w),
        None => Ok(no_witness()),
    }
}

/// Searches for a witness of the form D or D * swap with D diagonal. Under
/// diag(d1, d2) the components move as
/// (p, q, r, s) -> (p/(d1 d2), q/d1^2, r/d2^2, s/(d1 d2)).
fn diag_swap_search(
    src: &[EisScalar; 4],
    dst: &[EisScalar; 4],
) -> Result<Option<EisMatrix>> {
    for pre_swap in [false, true] {
        let v = if pre_swap { swapped(src) } else { src.clone() };
        let pattern_ok = v
            .iter()
            .zip(dst.iter())
            .all(|(x, y)| x.is_zero() == y.is_zero());
        if !pattern_ok {
            continue;
        }
        let mut d1s = match ratio_roots(&v[1], &dst[1]) {
            Some(list) => list,
            None => continue,
        };
        let mut d2s = match ratio_roots(&v[2], &dst[2]) {
            Some(list) => list,
            None => continue,
        };
        // a factor left free by its q or r equation gets pinned through the
        // product equation for p (or s), falling back to 1
        let pin = |other: &EisScalar| {
            if !v[0].is_zero() {
                &(&v[0] / &dst[0]) / other
            } else if !v[3].is_zero() {
                &(&v[3] / &dst[3]) / other
            } else {
                EisScalar::one()
            }
        };
        match (d1s.is_empty(), d2s.is_empty()) {
            (true, true) => {
                d1s.push(pin(&EisScalar::one()));
                d2s.push(EisScalar::one());
            }
            (true, false) => d1s = d2s.iter().map(&pin).collect(),
            (false, true) => d2s = d1s.iter().map(&pin).collect(),
            (false, false) => {}
        }
        for d1 in &d1s {
            for d2 in &d2s {
                if d1.is_zero() || d2.is_zero() {
                    continue;
                }
                let d = diag2(d1.clone(), d2.clone());
                let w = if pre_swap { d.matmul(&swap2()) } else { d };
                let got = transform_2d_closed_form(src, &w)?;
                if &got == dst {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// Both square roots of from/to when the ratio is constrained and solvable;
/// empty when unconstrained (both zero); None when hopeless.
fn ratio_roots(from: &EisScalar, to: &EisScalar) -> Option<Vec<EisScalar>> {
    match (from.is_zero(), to.is_zero()) {
        (true, true) => Some(vec![]),
        (false, false) => {
            let d = sqrt_in_field(&(from / to))?;
            let neg = -&d;
            Some(vec![d, neg])
        }
        _ => None,
    }
}

/// An exact change of basis from src to dst, a reasoned refusal, or an error
/// on invalid input. Same-class pairs without a witness are still isomorphic
/// once the scalars are extended far enough for the missing square roots.
pub fn iso_witness(src: &StructureTensor, dst: &StructureTensor) -> Result<IsoOutcome> {
    let rs = classify(src)?;
    let rd = classify(dst)?;
    if rs.label != rd.label {
        return Ok(IsoOutcome::NoWitness {
            reason: REASON_NOT_ISOMORPHIC.into(),
        });
    }
    let vs = src.independent_2d()?;
    let vd = dst.independent_2d()?;
    match rs.label {
        ClassLabel::I => confirm(&vs, &vd, EisMatrix::identity(2)),
        ClassLabel::II => ii_witness(&vs, &vd),
        ClassLabel::III => iii_witness(&vs, &vd),
        ClassLabel::IV => iv_witness(&vs, &vd),
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum SimplicityFact {
    /// every bracket vanishes
    Abelian,
    /// no one-dimensional ideals
    Simple,
    HasIdeal(Subspace),
}

/// Runs the ideal search on one tensor and condenses the outcome.
pub fn simplicity_fact(c: &StructureTensor) -> Result<SimplicityFact> {
    match c.find_one_dim_ideals_2d()? {
        IdealSearch2d::AllDirections => Ok(SimplicityFact::Abelian),
        IdealSearch2d::Resolved(list) => {
            if let Some(first) = list.into_iter().next() {
                Ok(SimplicityFact::HasIdeal(first))
            } else {
                Ok(SimplicityFact::Simple)
            }
        }
        IdealSearch2d::Partial { .. } => Err(Error::Invalid {
            what: "ideal search",
            detail: "directions left unresolved over the field".into(),
        }),
    }
}

/// Simplicity of each canonical representative, computed from the ideal
/// search rather than written down.
pub fn simplicity_table() -> Result<Vec<(ClassLabel, SimplicityFact)>> {
    ClassLabel::all()
        .into_iter()
        .map(|label| Ok((label, simplicity_fact(&canonical(label))?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s(n: i64) -> EisScalar {
        EisScalar::from_int(n)
    }

    fn tensor(p: i64, q: i64, r: i64, t: i64) -> StructureTensor {
        StructureTensor::from_independent_2d(s(p), s(q), s(r), s(t))
    }

    fn small<R: Rng>(rng: &mut R) -> EisScalar {
        EisScalar::from_int(rng.gen_range(-3..=3))
    }

    fn random_regular<R: Rng>(rng: &mut R) -> EisMatrix {
        loop {
            let a = EisMatrix::from_fn(2, 2, |_, _| small(rng));
            if !a.det().unwrap().is_zero() {
                return a;
            }
        }
    }

    #[test]
    fn canonical_bracket_relations() {
        let e1 = vec![s(1), s(0)];
        let e2 = vec![s(0), s(1)];
        let two = canonical(ClassLabel::II);
        assert_eq!(two.bracket(&e1, &e2, &e1).unwrap(), e2);
        assert_eq!(two.bracket(&e2, &e1, &e2).unwrap(), e1);
        let four = canonical(ClassLabel::IV);
        assert_eq!(four.bracket(&e1, &e2, &e1).unwrap(), e1);
        assert_eq!(four.bracket(&e2, &e1, &e2).unwrap(), vec![s(0), s(-1)]);
        assert!(canonical(ClassLabel::I).is_zero());
        for label in ClassLabel::all() {
            let c = canonical(label);
            assert!(c.check_omega_symmetry().passed());
            assert!(c.check_ga15_identity().passed());
        }
    }

    #[test]
    fn classify_reference_points() {
        for label in ClassLabel::all() {
            assert_eq!(classify(&canonical(label)).unwrap().label, label);
        }
        assert_eq!(classify(&tensor(0, 0, 5, 0)).unwrap().label, ClassLabel::III);
        assert_eq!(
            classify(&tensor(0, -8, -8, 0)).unwrap().label,
            ClassLabel::II
        );
        assert_eq!(classify(&tensor(2, 0, 0, 1)).unwrap().label, ClassLabel::IV);
        let report = classify(&canonical(ClassLabel::II)).unwrap();
        assert!(!report.invariants.is_zero);
        assert!(report.invariants.in_w);
        assert!(!report.invariants.disc_zero);
        assert!(report.witness.is_none());
    }

    #[test]
    fn classify_rejects_broken_symmetry() {
        let mut c = StructureTensor::zero(2);
        c.set(0, 0, 1, 0, s(1));
        assert!(matches!(classify(&c), Err(Error::NotOmegaSymmetric)));
    }

    #[test]
    fn labels_survive_random_basis_changes() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for label in ClassLabel::all() {
            let c = canonical(label);
            for _ in 0..25 {
                let a = random_regular(&mut rng);
                let moved = c.change_basis(&a).unwrap();
                assert_eq!(classify(&moved).unwrap().label, label, "class {label}");
            }
        }
    }

    #[test]
    fn hyperplane_and_discriminant_are_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        for _ in 0..40 {
            let a = random_regular(&mut rng);
            // p = s with zero discriminant stays that way
            let aa = small(&mut rng);
            let b = loop {
                let b = small(&mut rng);
                if !b.is_zero() {
                    break b;
                }
            };
            let c = &(&aa * &aa) / &b;
            let v = [aa.clone(), b.clone(), c, aa.clone()];
            let moved = transform_2d_closed_form(&v, &a).unwrap();
            assert_eq!(moved[0], moved[3]);
            let disc = &(&moved[0] * &moved[0]) - &(&moved[1] * &moved[2]);
            assert!(disc.is_zero());
            // p != s never reaches the hyperplane
            let off = [s(2), small(&mut rng), small(&mut rng), s(1)];
            let moved = transform_2d_closed_form(&off, &a).unwrap();
            assert_ne!(moved[0], moved[3]);
        }
    }

    #[test]
    fn hyperplane_part_moves_by_congruence() {
        // for p = s the matrix [[r, p], [p, q]] transforms as A M A^T / det^2
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..40 {
            let a = random_regular(&mut rng);
            let p = small(&mut rng);
            let q = small(&mut rng);
            let r = small(&mut rng);
            let v = [p.clone(), q.clone(), r.clone(), p.clone()];
            let moved = transform_2d_closed_form(&v, &a).unwrap();
            let m = m2(r, p.clone(), p, q);
            let congruent = a.matmul(&m).matmul(&a.transpose());
            let det = a.det().unwrap();
            let scale = (&EisScalar::one() / &det).powi(2).unwrap();
            let expected = congruent.scale(&scale);
            let got = m2(
                moved[2].clone(),
                moved[0].clone(),
                moved[0].clone(),
                moved[1].clone(),
            );
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn identity_witness_on_equal_tensors() {
        let c = canonical(ClassLabel::II);
        match iso_witness(&c, &c).unwrap() {
            IsoOutcome::Found(a) => assert_eq!(a, EisMatrix::identity(2)),
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn triangular_family_example() {
        // (0,1,0,0) reaches (6,4,9,6) by the upper-triangular family member
        // [[1/2, 3/2], [0, 1]]
        let src = canonical(ClassLabel::III);
        let dst = StructureTensor::from_independent_2d(s(6), s(4), s(9), s(6));
        let expected = m2(
            EisScalar::from_rational(crate::rat(1, 2)),
            EisScalar::from_rational(crate::rat(3, 2)),
            s(0),
            s(1),
        );
        match iso_witness(&src, &dst).unwrap() {
            IsoOutcome::Found(a) => {
                assert_eq!(a, expected);
                let moved = transform_2d_closed_form(&src.independent_2d().unwrap(), &a).unwrap();
                assert_eq!(moved.to_vec(), dst.independent_2d().unwrap().to_vec());
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn scaled_pair_needs_field_root() {
        // q-ratio 2 is not a square in the field, so no witness exists
        let src = canonical(ClassLabel::III);
        let dst = tensor(0, 2, 0, 0);
        match iso_witness(&src, &dst).unwrap() {
            IsoOutcome::NoWitness { reason } => {
                assert_eq!(reason, REASON_NO_FIELD_WITNESS);
            }
            other => panic!("expected no witness, got {other:?}"),
        }
        // ratio 4 between the same strata works fine
        match iso_witness(&tensor(0, 2, 0, 0), &tensor(0, 8, 0, 0)).unwrap() {
            IsoOutcome::Found(_) => {}
            other => panic!("expected a witness, got {other:?}"),
        }
        // crossing into the (0,0,c,0) stratum is rational
        match iso_witness(&tensor(0, 5, 0, 0), &tensor(0, 0, 5, 0)).unwrap() {
            IsoOutcome::Found(_) => {}
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn square_gap_pair_has_a_witness() {
        // bc - a^2 = 64 is a square and -1/8 splits as a sum of two squares,
        // so (0,-8,-8,0) is reachable from (0,1,1,0) inside the field
        let a = tensor(0, -8, -8, 0);
        let b = canonical(ClassLabel::II);
        for (src, dst) in [(&a, &b), (&b, &a)] {
            match iso_witness(src, dst).unwrap() {
                IsoOutcome::Found(w) => {
                    let det = w.det().unwrap();
                    let d2 = &det * &det;
                    assert!(d2 == EisScalar::from_rational(crate::rat(1, 64))
                        || d2 == s(64), "det^2 was {d2:?}");
                }
                other => panic!("expected a witness, got {other:?}"),
            }
        }
    }

    #[test]
    fn class_mismatch_is_refused() {
        let src = canonical(ClassLabel::II);
        let dst = canonical(ClassLabel::III);
        match iso_witness(&src, &dst).unwrap() {
            IsoOutcome::NoWitness { reason } => assert_eq!(reason, REASON_NOT_ISOMORPHIC),
            other => panic!("expected a refusal, got {other:?}"),
        }
    }

    #[test]
    fn antidiagonal_stratum_of_class_two() {
        // (a,0,0,a) vectors: rational witnesses among themselves, none toward
        // the canonical representative
        match iso_witness(&tensor(3, 0, 0, 3), &tensor(5, 0, 0, 5)).unwrap() {
            IsoOutcome::Found(_) => {}
            other => panic!("expected a witness, got {other:?}"),
        }
        match iso_witness(&tensor(3, 0, 0, 3), &canonical(ClassLabel::II)).unwrap() {
            IsoOutcome::NoWitness { reason } => {
                assert_eq!(reason, REASON_NO_FIELD_WITNESS);
            }
            other => panic!("expected no witness, got {other:?}"),
        }
    }

    #[test]
    fn eigenline_members_of_class_four() {
        match iso_witness(&tensor(2, 0, 0, -2), &canonical(ClassLabel::IV)).unwrap() {
            IsoOutcome::Found(_) => {}
            other => panic!("expected a witness, got {other:?}"),
        }
        // a mixed member cannot reach the pure eigenline over any field
        match iso_witness(&tensor(2, 1, 0, 1), &canonical(ClassLabel::IV)).unwrap() {
            IsoOutcome::NoWitness { reason } => {
                assert_eq!(reason, REASON_NO_FIELD_WITNESS);
            }
            other => panic!("expected no witness, got {other:?}"),
        }
    }

    #[test]
    fn diagonal_search_handles_same_square_class() {
        // (0,1,2,0) and (0,1,8,0) differ by diag(1, 1/2); their canonical
        // legs both fail since bc - a^2 = 2 is not a square
        match iso_witness(&tensor(0, 1, 2, 0), &tensor(0, 1, 8, 0)).unwrap() {
            IsoOutcome::Found(_) => {}
            other => panic!("expected a witness, got {other:?}"),
        }
        match iso_witness(&tensor(0, 1, 2, 0), &tensor(0, 2, 1, 0)).unwrap() {
            IsoOutcome::Found(_) => {}
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn sum_of_squares_splitter() {
        for m in [s(1), s(2), s(-2), EisScalar::from_rational(crate::rat(-1, 8))] {
            let (x, y) = represent_sum_of_squares(&m).unwrap();
            assert_eq!(&(&x * &x) + &(&y * &y), m);
        }
    }

    #[test]
    fn table_of_simplicity_verdicts() {
        let table = simplicity_table().unwrap();
        assert_eq!(table.len(), 4);
        for (label, fact) in &table {
            match label {
                ClassLabel::I => assert_eq!(*fact, SimplicityFact::Abelian),
                ClassLabel::II | ClassLabel::IV => assert_eq!(*fact, SimplicityFact::Simple),
                ClassLabel::III => match fact {
                    SimplicityFact::HasIdeal(span) => {
                        assert!(span.contains(&[s(0), s(1)]).unwrap());
                        assert!(!span.contains(&[s(1), s(0)]).unwrap());
                    }
                    other => panic!("class III should carry an ideal, got {other:?}"),
                },
            }
        }
    }

    #[test]
    fn constructions_land_in_class_two() {
        use crate::constructions::{
            extract_structure_constants, traceless_basis_order2, vector_structure_constants,
            Carrier, TernaryProduct, VectorBracket,
        };
        let (e1, e2) = traceless_basis_order2();
        let basis = vec![Carrier::Cubic(e1), Carrier::Cubic(e2)];
        let from_cubic =
            extract_structure_constants(&TernaryProduct::CubicBeta, &basis).unwrap();
        let full = vector_structure_constants(2, VectorBracket::Full).unwrap();
        let cyclic = vector_structure_constants(2, VectorBracket::Cyclic).unwrap();
        for c in [&from_cubic, &full, &cyclic] {
            assert_eq!(classify(c).unwrap().label, ClassLabel::II);
        }
        match iso_witness(&from_cubic, &canonical(ClassLabel::II)).unwrap() {
            IsoOutcome::Found(_) => {}
            other => panic!("expected a witness, got {other:?}"),
        }
    }
}
