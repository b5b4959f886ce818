//! End-to-end gate: one test per headline requirement, each printing a
//! single PASS/FAIL line (visible with `--nocapture`). Exact arithmetic
//! throughout; every comparison is equality, no tolerances.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ternlie_core::classify::{
    canonical, classify, iso_witness, simplicity_table, ClassLabel, IsoOutcome, SimplicityFact,
};
use ternlie_core::constructions::{
    associativity_probe, beta_form, cubic_right_action, extract_structure_constants,
    omega_commutator_eval, random_element, traces, traceless_basis_order2,
    trace_constraint_matrix, vector_structure_constants, Carrier, CarrierShape, CubicMatrix,
    TernaryProduct, VectorBracket,
};
use ternlie_core::free::{
    default_associator_coeffs, omega_associator, omega_commutator, omega_polynomial,
    reflect_poly, AssocKind, FreePoly, NestPos, Term,
};
use ternlie_core::group::{
    affine_to_perm, ga15_elements, generate, is_normal, AffineMap5, Perm5,
};
use ternlie_core::tensor::{transform_2d_closed_form, StructureTensor};
use ternlie_core::{EisMatrix, EisScalar};

struct Gate {
    name: &'static str,
    failures: Vec<String>,
    start: Instant,
}

impl Gate {
    fn new(name: &'static str) -> Self {
        Gate {
            name,
            failures: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, what: &str) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn finish(mut self, budget: Option<Duration>) {
        let elapsed = self.start.elapsed();
        if let Some(limit) = budget {
            if elapsed > limit {
                self.failures
                    .push(format!("ran {elapsed:?}, budget {limit:?}"));
            }
        }
        let verdict = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!("acceptance {}: {verdict} ({elapsed:.2?})", self.name);
        assert!(
            self.failures.is_empty(),
            "{} failed: {}",
            self.name,
            self.failures.join("; ")
        );
    }
}

fn s(n: i64) -> EisScalar {
    EisScalar::from_int(n)
}

#[test]
fn a01_group_averaged_expansion_collapses() {
    let mut gate = Gate::new("01 group-averaged quintic expansion");
    let first = omega_polynomial(AssocKind::First);
    gate.check(first.poly.is_zero(), "first-kind sum not zero");
    gate.check(first.raw_terms == 720, "first-kind raw term count");
    let second = omega_polynomial(AssocKind::Second);
    gate.check(second.poly.is_zero(), "second-kind sum not zero");
    gate.check(second.raw_terms == 720, "second-kind raw term count");
    let free = omega_polynomial(AssocKind::Free);
    gate.check(!free.poly.is_zero(), "free sum unexpectedly zero");
    gate.check(free.raw_terms == 720, "free raw term count");
    gate.check(free.double_commutators == 20, "double commutator count");
    gate.finish(Some(Duration::from_secs(5)));
}

#[test]
fn a02_affine_group_structure() {
    let mut gate = Gate::new("02 order-20 affine group");
    let s5 = Perm5::sigma();
    let t4 = Perm5::tau();
    let group = generate(&[s5.clone(), t4.clone()]);
    gate.check(group.len() == 20, "generated order");
    gate.check(group == ga15_elements(), "generated set mismatch");
    gate.check(s5.pow(5).is_identity(), "sigma order");
    gate.check(t4.pow(4).is_identity(), "tau order");
    let conj = t4.inverse().compose(&s5).compose(&t4);
    gate.check(conj == s5.pow(2), "conjugation relation");
    let mut factored = BTreeSet::new();
    for k in 0..5 {
        for j in 0..4 {
            factored.insert(s5.pow(k).compose(&t4.pow(j)));
        }
    }
    gate.check(factored.len() == 20, "sigma^k tau^j collision");
    gate.check(factored == group, "factorization does not cover");
    let n = generate(&[s5.clone()]);
    let h = generate(&[t4.clone()]);
    gate.check(n.len() == 5 && is_normal(&n, &group), "cyclic part not normal");
    gate.check(h.len() == 4 && !is_normal(&h, &group), "point stabilizer normal");
    let affine = AffineMap5::all();
    gate.check(affine.len() == 20, "affine map count");
    let mut images = BTreeSet::new();
    for x in &affine {
        images.insert(affine_to_perm(x));
        for y in &affine {
            let lhs = affine_to_perm(&x.compose(y));
            let rhs = affine_to_perm(x).compose(&affine_to_perm(y));
            if lhs != rhs {
                gate.check(false, "affine embedding not a homomorphism");
            }
        }
    }
    gate.check(images == group, "affine embedding not onto");
    gate.finish(Some(Duration::from_secs(1)));
}

#[test]
fn a03_commutator_calculus() {
    let mut gate = Gate::new("03 commutator calculus");
    let a = FreePoly::gen(1);
    let b = FreePoly::gen(2);
    let c = FreePoly::gen(3);
    let abc = omega_commutator(&a, &b, &c).unwrap();
    let bca = omega_commutator(&b, &c, &a).unwrap();
    gate.check(
        abc == bca.scale(&EisScalar::omega()),
        "cyclic rotation coefficient",
    );
    let cba = omega_commutator(&c, &b, &a).unwrap();
    gate.check(cba == reflect_poly(&abc), "reversal is conjugation");
    let aaa = omega_commutator(&a, &a, &a).unwrap();
    gate.check(aaa.is_zero(), "equal-argument commutator");
    let aba = omega_commutator(&a, &b, &a).unwrap();
    let mut expected = FreePoly::zero();
    expected.add_term(Term::Word3([1, 2, 1]), s(2));
    expected.add_term(Term::Word3([2, 1, 1]), s(-1));
    expected.add_term(Term::Word3([1, 1, 2]), s(-1));
    gate.check(aba == expected, "two-letter commutator shape");
    let assoc = omega_associator([1, 2, 3, 4, 5], AssocKind::First, &default_associator_coeffs())
        .unwrap();
    let sym = assoc.add(&reflect_poly(&assoc));
    gate.check(
        sym.iter().all(|(_, coeff)| coeff.is_rational()),
        "associator plus reflection not rational",
    );
    let left = Term::Nested {
        pos: NestPos::Left,
        inner: [1, 2, 3],
        outer: [4, 5],
    };
    let middle = Term::Nested {
        pos: NestPos::Middle,
        inner: [2, 3, 4],
        outer: [1, 5],
    };
    let right = Term::Nested {
        pos: NestPos::Right,
        inner: [3, 4, 5],
        outer: [1, 2],
    };
    gate.check(sym.coeff(&left) == s(2), "left placement weight");
    gate.check(sym.coeff(&middle) == s(-1), "middle placement weight");
    gate.check(sym.coeff(&right) == s(-1), "right placement weight");
    // identity matrix as a biunit for the plain square product
    let prod = TernaryProduct::BinaryDerived;
    let e = Carrier::Rect(EisMatrix::identity(2));
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    let x = random_element(CarrierShape::Rect { rows: 2, cols: 2 }, &mut rng);
    gate.check(prod.triple(&x, &e, &e).unwrap() == x, "right biunit law");
    gate.check(prod.triple(&e, &e, &x).unwrap() == x, "left biunit law");
    gate.check(prod.triple(&e, &x, &e).unwrap() == x, "sandwich biunit law");
    gate.check(
        omega_commutator_eval(&prod, &e, &x, &e).unwrap().is_zero(),
        "biunit sandwich commutator",
    );
    gate.finish(None);
}

#[test]
fn a04_random_two_dim_tensors_satisfy_identity() {
    let mut gate = Gate::new("04 random 2-dim tensors pass the group identity");
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for trial in 0..200 {
        let c = StructureTensor::random_omega_symmetric(2, &mut rng);
        if !c.check_omega_symmetry().passed() {
            gate.check(false, &format!("trial {trial}: symmetry"));
        }
        if !c.check_ga15_identity().passed() {
            gate.check(false, &format!("trial {trial}: identity"));
        }
    }
    gate.finish(Some(Duration::from_secs(10)));
}

#[test]
fn a05_matrix_constructions() {
    let mut gate = Gate::new("05 matrix and cubic constructions");
    let rect = associativity_probe(
        &TernaryProduct::RectTranspose,
        CarrierShape::Rect { rows: 3, cols: 2 },
        AssocKind::Second,
        50,
        505,
    )
    .unwrap();
    gate.check(rect.passed(), "3x2 transpose product second kind");
    for order in [2usize, 3] {
        for (prod, tag) in [
            (TernaryProduct::CubicBeta, "beta"),
            (TernaryProduct::CubicGamma, "gamma"),
        ] {
            let report = associativity_probe(
                &prod,
                CarrierShape::Cubic { order },
                AssocKind::Second,
                50,
                505,
            )
            .unwrap();
            gate.check(report.passed(), &format!("cubic {tag} order {order}"));
        }
    }
    // the exchange law and the slice-trace reading of the beta form
    let mut rng = ChaCha8Rng::seed_from_u64(515);
    for trial in 0..50 {
        let order = if trial % 2 == 0 { 2 } else { 3 };
        let shape = CarrierShape::Cubic { order };
        let pick = |rng: &mut ChaCha8Rng| match random_element(shape, rng) {
            Carrier::Cubic(x) => x,
            _ => unreachable!(),
        };
        let u = pick(&mut rng);
        let z = pick(&mut rng);
        let y = pick(&mut rng);
        let v = pick(&mut rng);
        let lhs = beta_form(&cubic_right_action(&u, &beta_form(&z, &y).unwrap()).unwrap(), &v)
            .unwrap();
        let rhs = beta_form(&y, &cubic_right_action(&z, &beta_form(&u, &v).unwrap()).unwrap())
            .unwrap();
        if lhs != rhs {
            gate.check(false, &format!("exchange law, trial {trial}"));
        }
        let x = pick(&mut rng);
        let w = pick(&mut rng);
        let form = beta_form(&x, &w).unwrap();
        for p in 0..order {
            for k in 0..order {
                let prod = x.third_slice(p).matmul(&w.third_slice(k));
                let mut tr = EisScalar::zero();
                for d in 0..order {
                    tr += &prod[(d, d)];
                }
                if form[(p, k)] != tr {
                    gate.check(false, &format!("slice trace, trial {trial}"));
                }
            }
        }
    }
    // the transpose product is not first-kind associative
    let bad = associativity_probe(
        &TernaryProduct::RectTranspose,
        CarrierShape::Rect { rows: 2, cols: 2 },
        AssocKind::First,
        50,
        505,
    )
    .unwrap();
    gate.check(!bad.passed(), "first kind unexpectedly held");
    // pinned counterexample: a = b = h = I, c = g = E12
    let id = EisMatrix::identity(2);
    let e12 = EisMatrix::unit(2, 2, 0, 1);
    let rt = |a: &EisMatrix, b: &EisMatrix, c: &EisMatrix| {
        a.matmul(&b.transpose()).matmul(c)
    };
    let left = rt(&rt(&id, &id, &e12), &e12, &id);
    let first_middle = rt(&id, &rt(&id, &e12, &e12), &id);
    let second_middle = rt(&id, &rt(&e12, &e12, &id), &id);
    gate.check(left != first_middle, "stored witness collapsed");
    gate.check(left == second_middle, "witness violates second kind too");
    gate.finish(None);
}

#[test]
fn a06_vector_algebra() {
    let mut gate = Gate::new("06 coordinate vector algebra");
    let cyclic = vector_structure_constants(2, VectorBracket::Cyclic).unwrap();
    let e1 = vec![s(1), s(0)];
    let e2 = vec![s(0), s(1)];
    gate.check(
        cyclic.bracket(&e1, &e2, &e1).unwrap() == e2,
        "first defining relation",
    );
    gate.check(
        cyclic.bracket(&e2, &e1, &e2).unwrap() == e1,
        "second defining relation",
    );
    for n in [2usize, 3] {
        let basis: Vec<Carrier> = (0..n)
            .map(|j| {
                let mut row = EisMatrix::zeros(1, n);
                row[(0, j)] = s(1);
                Carrier::Rect(row)
            })
            .collect();
        let extracted =
            extract_structure_constants(&TernaryProduct::RectTranspose, &basis).unwrap();
        let full = vector_structure_constants(n, VectorBracket::Full).unwrap();
        let cyc = vector_structure_constants(n, VectorBracket::Cyclic).unwrap();
        gate.check(extracted == full, &format!("row extraction at n = {n}"));
        let mut negated = true;
        for m in 0..n {
            for i in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        if *full.get(m, i, k, l) != -cyc.get(m, i, k, l) {
                            negated = false;
                        }
                    }
                }
            }
        }
        gate.check(negated, &format!("full vs cyclic sign at n = {n}"));
    }
    gate.finish(None);
}

#[test]
fn a07_traceless_cubic_pair() {
    let mut gate = Gate::new("07 traceless order-2 cubic pair");
    let constraints = trace_constraint_matrix(2);
    gate.check(
        constraints.cols() - constraints.rank() == 2,
        "traceless dimension",
    );
    let (x1, x2) = traceless_basis_order2();
    for (label, x) in [("first", &x1), ("second", &x2)] {
        let t = traces(x);
        gate.check(
            t.iter().all(|v| v.iter().all(|c| c.is_zero())),
            &format!("{label} generator not traceless"),
        );
    }
    let prod = TernaryProduct::CubicBeta;
    let c1 = Carrier::Cubic(x1.clone());
    let c2 = Carrier::Cubic(x2.clone());
    gate.check(
        omega_commutator_eval(&prod, &c1, &c2, &c1).unwrap()
            == Carrier::Cubic(x2.scale(&s(-8))),
        "bracket of the pair",
    );
    gate.check(
        omega_commutator_eval(&prod, &c2, &c1, &c2).unwrap()
            == Carrier::Cubic(x1.scale(&s(-8))),
        "bracket of the swapped pair",
    );
    let extracted = extract_structure_constants(&prod, &[c1, c2]).unwrap();
    let comps = extracted.independent_2d().unwrap();
    gate.check(
        comps == [s(0), s(-8), s(-8), s(0)],
        "extracted component vector",
    );
    gate.check(
        classify(&extracted).unwrap().label == ClassLabel::II,
        "extracted class",
    );
    let rows = vector_structure_constants(2, VectorBracket::Full).unwrap();
    gate.check(
        classify(&rows).unwrap().label == ClassLabel::II,
        "row algebra class",
    );
    gate.check(
        matches!(
            iso_witness(&extracted, &rows).unwrap(),
            IsoOutcome::Found(_)
        ),
        "no explicit equivalence to the row algebra",
    );
    gate.finish(None);
}

#[test]
fn a08_classification() {
    let mut gate = Gate::new("08 classification of 2-dim algebras");
    for label in ClassLabel::all() {
        let c = canonical(label);
        gate.check(
            c.check_omega_symmetry().passed(),
            &format!("{label} symmetry"),
        );
        gate.check(
            c.check_ga15_identity().passed(),
            &format!("{label} identity"),
        );
        gate.check(
            classify(&c).unwrap().label == label,
            &format!("{label} self-classification"),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    for label in ClassLabel::all() {
        let c = canonical(label);
        for trial in 0..100 {
            let a = loop {
                let a = EisMatrix::from_fn(2, 2, |_, _| s(rng.gen_range(-3..=3)));
                if !a.det().unwrap().is_zero() {
                    break a;
                }
            };
            let moved = c.change_basis(&a).unwrap();
            if classify(&moved).unwrap().label != label {
                gate.check(false, &format!("{label} drifted at trial {trial}"));
            }
        }
    }
    let table = simplicity_table().unwrap();
    for (label, fact) in &table {
        let ok = match label {
            ClassLabel::I => *fact == SimplicityFact::Abelian,
            ClassLabel::II | ClassLabel::IV => *fact == SimplicityFact::Simple,
            ClassLabel::III => matches!(
                fact,
                SimplicityFact::HasIdeal(span)
                    if span.contains(&[s(0), s(1)]).unwrap()
            ),
        };
        gate.check(ok, &format!("{label} simplicity verdict"));
    }
    gate.finish(Some(Duration::from_secs(30)));
}

#[test]
fn a09_transformation_law() {
    let mut gate = Gate::new("09 basis-change transformation law");
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    let regular = |rng: &mut ChaCha8Rng| loop {
        let a = EisMatrix::from_fn(2, 2, |_, _| s(rng.gen_range(-3..=3)));
        if !a.det().unwrap().is_zero() {
            return a;
        }
    };
    for trial in 0..100 {
        let a = regular(&mut rng);
        let c = StructureTensor::random_omega_symmetric(2, &mut rng);
        let v = c.independent_2d().unwrap();
        let fast = transform_2d_closed_form(&v, &a).unwrap();
        let slow = c.change_basis(&a).unwrap().independent_2d().unwrap();
        if fast != slow {
            gate.check(false, &format!("closed form drifted at trial {trial}"));
        }
        // the reflection axis maps onto itself
        let axis = [s(1), s(0), s(0), s(-1)];
        let moved = transform_2d_closed_form(&axis, &a).unwrap();
        let scalar_multiple = moved[1].is_zero()
            && moved[2].is_zero()
            && moved[3] == -&moved[0]
            && !moved[0].is_zero();
        if !scalar_multiple {
            gate.check(false, &format!("axis left its line at trial {trial}"));
        }
        // hyperplane membership and discriminant vanishing carry over
        let p = s(rng.gen_range(-3..=3));
        let q = s(rng.gen_range(-3..=3));
        let r = s(rng.gen_range(-3..=3));
        let hyper = [p.clone(), q.clone(), r.clone(), p.clone()];
        let moved = transform_2d_closed_form(&hyper, &a).unwrap();
        if moved[0] != moved[3] {
            gate.check(false, &format!("hyperplane escaped at trial {trial}"));
        }
        let disc_src = &(&p * &p) - &(&q * &r);
        let disc_dst = &(&moved[0] * &moved[0]) - &(&moved[1] * &moved[2]);
        if disc_src.is_zero() != disc_dst.is_zero() {
            gate.check(false, &format!("discriminant flag flipped at trial {trial}"));
        }
    }
    gate.finish(None);
}

#[test]
fn a10_eight_dim_scale_check() {
    let mut gate = Gate::new("10 full 8-dim cubic algebra");
    let mut basis = Vec::new();
    for i in 0..2usize {
        for j in 0..2 {
            for k in 0..2 {
                let mut x = CubicMatrix::zero(2);
                x.set(i, j, k, s(1));
                basis.push(Carrier::Cubic(x));
            }
        }
    }
    let c = extract_structure_constants(&TernaryProduct::CubicBeta, &basis).unwrap();
    gate.check(c.dim() == 8, "extracted dimension");
    gate.check(c.check_omega_symmetry().passed(), "cyclic symmetry at n = 8");
    gate.check(c.check_ga15_identity().passed(), "group identity at n = 8");
    gate.finish(Some(Duration::from_secs(600)));
}
