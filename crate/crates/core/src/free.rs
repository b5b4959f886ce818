//! The free ternary algebra on abstract generators.
//!
//! Terms are products of generators with exactly three factors per node;
//! in scope are single generators, flat triples, and quintic products with
//! one nested triple. Two flattening rules are supported:
//!
//! * first kind: `(a b c) g h = a (b c g) h = a b (c g h)`, every nesting
//!   flattens in place;
//! * second kind: `(a b c) g h = a (g c b) h = a b (c g h)`, a middle
//!   nesting flattens with its inner triple reversed.
//!
//! On top of the terms sit the six-term `w`-commutator, the `w`-associators,
//! and the 720-term expansion obtained by averaging the double commutator
//! `[[a1,a2,a3],a4,a5]` over the order-20 affine group of F_5. The central
//! symbolic fact, verified exactly here, is that the averaged expansion
//! collapses to zero under either flattening rule.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{ga15_rows, Perm5};
use crate::scalar::EisScalar;

/// Generator index. Rendered as a letter: 0 is `a`, 1 is `b`, and so on.
pub type GenId = u8;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum NestPos {
    Left,
    Middle,
    Right,
}

/// A product shape in the free ternary algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    /// single generator
    Gen(GenId),
    /// flat triple `a b c`
    Word3([GenId; 3]),
    /// flat quintic word, the normal form of a once-nested product
    Word5([GenId; 5]),
    /// quintic product with one nested triple; `outer` lists the two
    /// unnested factors in reading order
    Nested {
        pos: NestPos,
        inner: [GenId; 3],
        outer: [GenId; 2],
    },
}

impl Term {
    pub fn leaf_count(&self) -> usize {
        match self {
            Term::Gen(_) => 1,
            Term::Word3(_) => 3,
            Term::Word5(_) | Term::Nested { .. } => 5,
        }
    }
}

fn gen_name(g: GenId) -> String {
    if g < 26 {
        ((b'a' + g) as char).to_string()
    } else {
        format!("g{g}")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Gen(g) => write!(f, "{}", gen_name(*g)),
            Term::Word3(w) => {
                for g in w {
                    write!(f, "{}", gen_name(*g))?;
                }
                Ok(())
            }
            Term::Word5(w) => {
                for g in w {
                    write!(f, "{}", gen_name(*g))?;
                }
                Ok(())
            }
            Term::Nested { pos, inner, outer } => {
                let inner: String = inner.iter().map(|g| gen_name(*g)).collect();
                let o0 = gen_name(outer[0]);
                let o1 = gen_name(outer[1]);
                match pos {
                    NestPos::Left => write!(f, "({inner}){o0}{o1}"),
                    NestPos::Middle => write!(f, "{o0}({inner}){o1}"),
                    NestPos::Right => write!(f, "{o0}{o1}({inner})"),
                }
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Which flattening rule (if any) a computation runs under.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AssocKind {
    First,
    Second,
    /// keep terms verbatim; no rewriting
    Free,
}

/// Formal linear combination of terms over Q(w). Zero coefficients are
/// never stored, so equality of maps is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreePoly {
    terms: BTreeMap<Term, EisScalar>,
}

impl FreePoly {
    pub fn zero() -> Self {
        FreePoly::default()
    }

    pub fn gen(g: GenId) -> Self {
        FreePoly::from_term(Term::Gen(g), EisScalar::one())
    }

    pub fn from_term(term: Term, coeff: EisScalar) -> Self {
        let mut p = FreePoly::zero();
        p.add_term(term, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, term: &Term) -> EisScalar {
        self.terms.get(term).cloned().unwrap_or_else(EisScalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Term, &EisScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, term: Term, coeff: EisScalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(term).or_insert_with(EisScalar::zero);
        *entry += &coeff;
        if entry.is_zero() {
            self.terms.remove(&term);
        }
    }

    pub fn add(&self, rhs: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (t, c) in rhs.iter() {
            out.add_term(*t, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &FreePoly) -> FreePoly {
        self.add(&rhs.scale(&-EisScalar::one()))
    }

    pub fn scale(&self, k: &EisScalar) -> FreePoly {
        let mut out = FreePoly::zero();
        for (t, c) in self.iter() {
            out.add_term(*t, c * k);
        }
        out
    }

    /// Rewrites every nested term to its flat quintic word according to
    /// `kind`; `Free` leaves the polynomial untouched. Like terms merge.
    pub fn normalize(&self, kind: AssocKind) -> FreePoly {
        if kind == AssocKind::Free {
            return self.clone();
        }
        let mut out = FreePoly::zero();
        for (t, c) in self.iter() {
            out.add_term(normalize_term(t, kind), c.clone());
        }
        out
    }
}

fn normalize_term(t: &Term, kind: AssocKind) -> Term {
    let Term::Nested { pos, inner, outer } = t else {
        return *t;
    };
    let [x, y, z] = *inner;
    let [g, h] = *outer;
    match (pos, kind) {
        (NestPos::Left, _) => Term::Word5([x, y, z, g, h]),
        (NestPos::Right, _) => Term::Word5([g, h, x, y, z]),
        (NestPos::Middle, AssocKind::First) => Term::Word5([g, x, y, z, h]),
        // second kind reads a middle nesting with its triple reversed
        (NestPos::Middle, AssocKind::Second) => Term::Word5([g, z, y, x, h]),
        (_, AssocKind::Free) => unreachable!("Free returns early"),
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.iter().enumerate() {
            let (neg, body) = render_coeff(c);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if body.is_empty() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{body}*{t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Splits a coefficient into a leading sign and the printable magnitude;
/// an empty magnitude means "coefficient 1".
fn render_coeff(c: &EisScalar) -> (bool, String) {
    use num_traits::Signed;
    if c.is_rational() {
        let a = c.a();
        let neg = a.is_negative();
        let mag = if neg { -a.clone() } else { a.clone() };
        if mag.is_one() {
            (neg, String::new())
        } else {
            (neg, mag.to_string())
        }
    } else {
        (false, format!("({c})"))
    }
}

/// Trilinear product of three polynomials. Errors when the factors would
/// produce a term deeper than one nesting or longer than five generators.
pub fn triple_product(x: &FreePoly, y: &FreePoly, z: &FreePoly) -> Result<FreePoly> {
    let mut out = FreePoly::zero();
    for (tx, cx) in x.iter() {
        for (ty, cy) in y.iter() {
            for (tz, cz) in z.iter() {
                let term = combine(tx, ty, tz)?;
                out.add_term(term, &(cx * cy) * cz);
            }
        }
    }
    Ok(out)
}

fn combine(x: &Term, y: &Term, z: &Term) -> Result<Term> {
    use Term::*;
    match (x, y, z) {
        (Gen(a), Gen(b), Gen(c)) => Ok(Word3([*a, *b, *c])),
        (Word3(w), Gen(b), Gen(c)) => Ok(Nested {
            pos: NestPos::Left,
            inner: *w,
            outer: [*b, *c],
        }),
        (Gen(a), Word3(w), Gen(c)) => Ok(Nested {
            pos: NestPos::Middle,
            inner: *w,
            outer: [*a, *c],
        }),
        (Gen(a), Gen(b), Word3(w)) => Ok(Nested {
            pos: NestPos::Right,
            inner: *w,
            outer: [*a, *b],
        }),
        _ => Err(Error::UnsupportedDepth),
    }
}

/// The six-term `w`-commutator
/// `[x,y,z] = xyz + w yzx + w^2 zxy + zyx + w^2 yxz + w xzy`,
/// trilinear in each slot.
pub fn omega_commutator(x: &FreePoly, y: &FreePoly, z: &FreePoly) -> Result<FreePoly> {
    commutator_with(x, y, z, &EisScalar::omega(), &EisScalar::omega_bar())
}

/// The commutator with `w` and `w^2` interchanged.
pub fn omega_commutator_reflected(
    x: &FreePoly,
    y: &FreePoly,
    z: &FreePoly,
) -> Result<FreePoly> {
    commutator_with(x, y, z, &EisScalar::omega_bar(), &EisScalar::omega())
}

fn commutator_with(
    x: &FreePoly,
    y: &FreePoly,
    z: &FreePoly,
    w: &EisScalar,
    wb: &EisScalar,
) -> Result<FreePoly> {
    let mut out = triple_product(x, y, z)?;
    out = out.add(&triple_product(y, z, x)?.scale(w));
    out = out.add(&triple_product(z, x, y)?.scale(wb));
    out = out.add(&triple_product(z, y, x)?);
    out = out.add(&triple_product(y, x, z)?.scale(wb));
    out = out.add(&triple_product(x, z, y)?.scale(w));
    Ok(out)
}

/// Conjugates every coefficient (`w <-> w^2`); terms are unchanged.
pub fn reflect_poly(p: &FreePoly) -> FreePoly {
    let mut out = FreePoly::zero();
    for (t, c) in p.iter() {
        out.add_term(*t, c.reflect());
    }
    out
}

/// `abc + bca + cab - cba - bac - acb` on plain generators.
pub fn alternating_sum(a: GenId, b: GenId, c: GenId) -> FreePoly {
    let one = EisScalar::one();
    let mut out = FreePoly::zero();
    for (word, sign) in [
        ([a, b, c], one.clone()),
        ([b, c, a], one.clone()),
        ([c, a, b], one.clone()),
        ([c, b, a], -one.clone()),
        ([b, a, c], -one.clone()),
        ([a, c, b], -one),
    ] {
        out.add_term(Term::Word3(word), sign);
    }
    out
}

/// The default associator coefficient ordering `(1, w^2, w)` on the
/// (left, middle, right) placements.
pub fn default_associator_coeffs() -> [EisScalar; 3] {
    [
        EisScalar::one(),
        EisScalar::omega_bar(),
        EisScalar::omega(),
    ]
}

/// The `w`-associator on five generators: the three quintic placements
/// `(abc)gh`, `a(...)h`, `ab(cgh)` weighted by `coeffs`, which must be some
/// ordering of `1, w, w^2`. The middle triple is `(bcg)` for the first kind
/// and `(gcb)` for the second.
pub fn omega_associator(
    gens: [GenId; 5],
    kind: AssocKind,
    coeffs: &[EisScalar; 3],
) -> Result<FreePoly> {
    let one = EisScalar::one();
    let w = EisScalar::omega();
    let wb = EisScalar::omega_bar();
    for target in [&one, &w, &wb] {
        if coeffs.iter().filter(|c| *c == target).count() != 1 {
            return Err(Error::InvalidAssociatorCoefficients);
        }
    }
    let [a, b, c, g, h] = gens;
    let middle = match kind {
        AssocKind::First => [b, c, g],
        AssocKind::Second => [g, c, b],
        AssocKind::Free => {
            return Err(Error::Invalid {
                what: "associator kind",
                detail: "associators come in first or second kind only".into(),
            })
        }
    };
    let mut out = FreePoly::zero();
    out.add_term(
        Term::Nested {
            pos: NestPos::Left,
            inner: [a, b, c],
            outer: [g, h],
        },
        coeffs[0].clone(),
    );
    out.add_term(
        Term::Nested {
            pos: NestPos::Middle,
            inner: middle,
            outer: [a, h],
        },
        coeffs[1].clone(),
    );
    out.add_term(
        Term::Nested {
            pos: NestPos::Right,
            inner: [c, g, h],
            outer: [a, b],
        },
        coeffs[2].clone(),
    );
    Ok(out)
}

/// Result of averaging the double commutator over a set of permutations.
pub struct OmegaExpansion {
    pub poly: FreePoly,
    /// signed quintic terms produced before any merging
    pub raw_terms: usize,
    pub double_commutators: usize,
}

/// Averages `[[a_{p(1)},a_{p(2)},a_{p(3)}],a_{p(4)},a_{p(5)}]` over the full
/// order-20 affine group and normalizes with `kind`.
pub fn omega_polynomial(kind: AssocKind) -> OmegaExpansion {
    omega_polynomial_over(&ga15_rows(), kind)
}

/// Same expansion over an arbitrary permutation list; useful for showing the
/// cancellation genuinely depends on the group structure.
pub fn omega_polynomial_over(perms: &[Perm5], kind: AssocKind) -> OmegaExpansion {
    let mut sum = FreePoly::zero();
    let mut raw = 0usize;
    for rho in perms {
        let g: Vec<FreePoly> = (1..=5)
            .map(|i| FreePoly::gen(rho.apply(i) - 1))
            .collect();
        let inner = omega_commutator(&g[0], &g[1], &g[2]).expect("depth 3");
        raw += 6 * inner.term_count();
        let outer = omega_commutator(&inner, &g[3], &g[4]).expect("depth 5");
        sum = sum.add(&outer);
    }
    OmegaExpansion {
        poly: sum.normalize(kind),
        raw_terms: raw,
        double_commutators: perms.len(),
    }
}

/// The four seed index tuples of the row structure: the double commutators
/// headed by `a1` whose cyclic rotations tile the whole expansion.
pub const FAMILY_SEEDS: [[u8; 5]; 4] = [
    [1, 2, 3, 4, 5],
    [1, 4, 2, 5, 3],
    [1, 5, 4, 3, 2],
    [1, 3, 5, 2, 4],
];

/// Rebuilds the unnormalized expansion as the cyclic label shift applied to
/// the four seed families; must agree term-for-term with
/// `omega_polynomial(Free)`.
pub fn omega_polynomial_by_families() -> OmegaExpansion {
    let mut sum = FreePoly::zero();
    let mut raw = 0usize;
    let mut count = 0usize;
    for seed in FAMILY_SEEDS {
        for k in 0..5u8 {
            let g: Vec<FreePoly> = seed
                .iter()
                .map(|&v| FreePoly::gen((v - 1 + k) % 5))
                .collect();
            let inner = omega_commutator(&g[0], &g[1], &g[2]).expect("depth 3");
            raw += 6 * inner.term_count();
            let outer = omega_commutator(&inner, &g[3], &g[4]).expect("depth 5");
            sum = sum.add(&outer);
            count += 1;
        }
    }
    OmegaExpansion {
        poly: sum,
        raw_terms: raw,
        double_commutators: count,
    }
}

/// Symbolic check of the rotation behaviour of the commutator:
/// `[a,b,c] = w [b,c,a] = w^2 [c,a,b]`, and the reflected commutator with
/// `w` and `w^2` interchanged.
pub fn cyclic_symmetry_check() -> bool {
    let a = FreePoly::gen(0);
    let b = FreePoly::gen(1);
    let c = FreePoly::gen(2);
    let w = EisScalar::omega();
    let wb = EisScalar::omega_bar();

    let abc = omega_commutator(&a, &b, &c).unwrap();
    let bca = omega_commutator(&b, &c, &a).unwrap();
    let cab = omega_commutator(&c, &a, &b).unwrap();
    let plain = abc.sub(&bca.scale(&w)).is_zero() && abc.sub(&cab.scale(&wb)).is_zero();

    let rabc = omega_commutator_reflected(&a, &b, &c).unwrap();
    let rbca = omega_commutator_reflected(&b, &c, &a).unwrap();
    let rcab = omega_commutator_reflected(&c, &a, &b).unwrap();
    let refl = rabc.sub(&rbca.scale(&wb)).is_zero() && rabc.sub(&rcab.scale(&w)).is_zero();

    plain && refl
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn w() -> EisScalar {
        EisScalar::omega()
    }

    fn wb() -> EisScalar {
        EisScalar::omega_bar()
    }

    fn one() -> EisScalar {
        EisScalar::one()
    }

    fn gen(g: GenId) -> FreePoly {
        FreePoly::gen(g)
    }

    fn nested(pos: NestPos, inner: [GenId; 3], outer: [GenId; 2]) -> FreePoly {
        FreePoly::from_term(Term::Nested { pos, inner, outer }, one())
    }

    #[test]
    fn first_kind_flattens_in_place() {
        // (abc)de and a(bcd)e and ab(cde) all become abcde
        for pos in [NestPos::Left, NestPos::Middle, NestPos::Right] {
            let p = match pos {
                NestPos::Left => nested(pos, [0, 1, 2], [3, 4]),
                NestPos::Middle => nested(pos, [1, 2, 3], [0, 4]),
                NestPos::Right => nested(pos, [2, 3, 4], [0, 1]),
            };
            let n = p.normalize(AssocKind::First);
            assert_eq!(n.coeff(&Term::Word5([0, 1, 2, 3, 4])), one());
            assert_eq!(n.term_count(), 1);
        }
    }

    #[test]
    fn second_kind_reverses_middle_nesting() {
        // a(bcd)e reads as the flat word adcbe
        let p = nested(NestPos::Middle, [1, 2, 3], [0, 4]);
        let n = p.normalize(AssocKind::Second);
        assert_eq!(n.coeff(&Term::Word5([0, 3, 2, 1, 4])), one());
        assert_eq!(n.term_count(), 1);
        // left and right nestings still flatten in place
        let l = nested(NestPos::Left, [0, 1, 2], [3, 4]).normalize(AssocKind::Second);
        assert_eq!(l.coeff(&Term::Word5([0, 1, 2, 3, 4])), one());
        let r = nested(NestPos::Right, [2, 3, 4], [0, 1]).normalize(AssocKind::Second);
        assert_eq!(r.coeff(&Term::Word5([0, 1, 2, 3, 4])), one());
    }

    #[test]
    fn depth_overflow_is_an_error() {
        let w3 = triple_product(&gen(0), &gen(1), &gen(2)).unwrap();
        assert!(matches!(
            triple_product(&w3, &w3, &gen(0)),
            Err(Error::UnsupportedDepth)
        ));
        let n5 = triple_product(&w3, &gen(3), &gen(4)).unwrap();
        assert!(matches!(
            triple_product(&n5, &gen(0), &gen(1)),
            Err(Error::UnsupportedDepth)
        ));
    }

    #[test]
    fn commutator_coefficient_pattern() {
        let p = omega_commutator(&gen(0), &gen(1), &gen(2)).unwrap();
        assert_eq!(p.term_count(), 6);
        assert_eq!(p.coeff(&Term::Word3([0, 1, 2])), one());
        assert_eq!(p.coeff(&Term::Word3([1, 2, 0])), w());
        assert_eq!(p.coeff(&Term::Word3([2, 0, 1])), wb());
        assert_eq!(p.coeff(&Term::Word3([2, 1, 0])), one());
        assert_eq!(p.coeff(&Term::Word3([1, 0, 2])), wb());
        assert_eq!(p.coeff(&Term::Word3([0, 2, 1])), w());
    }

    #[test]
    fn commutator_of_equal_arguments_vanishes() {
        let a = gen(0);
        assert!(omega_commutator(&a, &a, &a).unwrap().is_zero());
    }

    #[test]
    fn two_equal_slots_give_three_terms() {
        // [a,b,a] = 2 aba - baa - aab
        let p = omega_commutator(&gen(0), &gen(1), &gen(0)).unwrap();
        let mut expect = FreePoly::zero();
        expect.add_term(Term::Word3([0, 1, 0]), EisScalar::from_int(2));
        expect.add_term(Term::Word3([1, 0, 0]), EisScalar::from_int(-1));
        expect.add_term(Term::Word3([0, 0, 1]), EisScalar::from_int(-1));
        assert_eq!(p, expect);
    }

    #[test]
    fn reflection_identities() {
        let fwd = omega_commutator(&gen(0), &gen(1), &gen(2)).unwrap();
        let refl = omega_commutator_reflected(&gen(0), &gen(1), &gen(2)).unwrap();
        assert_eq!(reflect_poly(&fwd), refl);
        // reversing the arguments is the same as reflecting
        let rev = omega_commutator(&gen(2), &gen(1), &gen(0)).unwrap();
        assert_eq!(rev, reflect_poly(&fwd));
        // rational polynomials are fixed points
        let alt = alternating_sum(0, 1, 2);
        assert_eq!(reflect_poly(&alt), alt);
    }

    #[test]
    fn alternating_sum_pattern() {
        let p = alternating_sum(0, 1, 2);
        assert_eq!(p.coeff(&Term::Word3([0, 1, 2])), one());
        assert_eq!(p.coeff(&Term::Word3([1, 2, 0])), one());
        assert_eq!(p.coeff(&Term::Word3([2, 0, 1])), one());
        assert_eq!(p.coeff(&Term::Word3([2, 1, 0])), -one());
        assert_eq!(p.coeff(&Term::Word3([1, 0, 2])), -one());
        assert_eq!(p.coeff(&Term::Word3([0, 2, 1])), -one());
        assert!(alternating_sum(0, 0, 0).is_zero());
    }

    #[test]
    fn commutator_as_two_underlined_alternations() {
        // [a,b,a] = (aba - baa) + (aba - aab)
        let p = omega_commutator(&gen(0), &gen(1), &gen(0)).unwrap();
        let mut link = FreePoly::zero();
        link.add_term(Term::Word3([0, 1, 0]), EisScalar::from_int(2));
        link.add_term(Term::Word3([1, 0, 0]), -one());
        link.add_term(Term::Word3([0, 0, 1]), -one());
        assert!(p.sub(&link).is_zero());
    }

    #[test]
    fn associators_vanish_under_their_own_kind() {
        let orderings = [
            [one(), w(), wb()],
            [one(), wb(), w()],
            [w(), one(), wb()],
            [w(), wb(), one()],
            [wb(), one(), w()],
            [wb(), w(), one()],
        ];
        for kind in [AssocKind::First, AssocKind::Second] {
            for coeffs in &orderings {
                let a = omega_associator([0, 1, 2, 3, 4], kind, coeffs).unwrap();
                assert!(
                    a.normalize(kind).is_zero(),
                    "associator {coeffs:?} should vanish under {kind:?}"
                );
            }
        }
    }

    #[test]
    fn associator_rejects_bad_coefficients() {
        let bad = [one(), one(), w()];
        assert!(matches!(
            omega_associator([0, 1, 2, 3, 4], AssocKind::First, &bad),
            Err(Error::InvalidAssociatorCoefficients)
        ));
    }

    #[test]
    fn associator_plus_reflection_is_rational() {
        let coeffs = default_associator_coeffs();
        let a = omega_associator([0, 1, 2, 3, 4], AssocKind::First, &coeffs).unwrap();
        let total = a.add(&reflect_poly(&a));
        // coefficients (2, -1, -1) on the three placements
        let left = Term::Nested {
            pos: NestPos::Left,
            inner: [0, 1, 2],
            outer: [3, 4],
        };
        let middle = Term::Nested {
            pos: NestPos::Middle,
            inner: [1, 2, 3],
            outer: [0, 4],
        };
        let right = Term::Nested {
            pos: NestPos::Right,
            inner: [2, 3, 4],
            outer: [0, 1],
        };
        assert_eq!(total.coeff(&left), EisScalar::from_int(2));
        assert_eq!(total.coeff(&middle), EisScalar::from_int(-1));
        assert_eq!(total.coeff(&right), EisScalar::from_int(-1));
        for (_, c) in total.iter() {
            assert!(c.is_rational());
        }
    }

    #[test]
    fn cyclic_symmetry_holds() {
        assert!(cyclic_symmetry_check());
    }

    #[test]
    fn averaged_expansion_vanishes_under_both_kinds() {
        for kind in [AssocKind::First, AssocKind::Second] {
            let e = omega_polynomial(kind);
            assert_eq!(e.raw_terms, 720);
            assert_eq!(e.double_commutators, 20);
            assert!(e.poly.is_zero(), "expansion must vanish under {kind:?}");
        }
    }

    #[test]
    fn free_expansion_is_nonzero() {
        let e = omega_polynomial(AssocKind::Free);
        assert_eq!(e.raw_terms, 720);
        assert!(!e.poly.is_zero());
        assert!(e.poly.iter().next().is_some());
    }

    #[test]
    fn family_form_matches_group_average() {
        let by_rows = omega_polynomial(AssocKind::Free);
        let by_families = omega_polynomial_by_families();
        assert_eq!(by_families.double_commutators, 20);
        assert_eq!(by_families.raw_terms, 720);
        assert_eq!(by_families.poly, by_rows.poly);
        for seed in FAMILY_SEEDS {
            assert_eq!(seed[0], 1);
        }
    }

    #[test]
    fn cancellation_needs_the_group() {
        // swap one element for a transposition outside the group
        let mut perms = ga15_rows();
        perms[5] = Perm5::from_images([2, 1, 3, 4, 5]).unwrap();
        let e = omega_polynomial_over(&perms, AssocKind::Second);
        assert!(!e.poly.is_zero());
    }

    #[test]
    fn normalize_is_idempotent_and_linear() {
        let coeffs = [one(), w(), wb()];
        let a = omega_associator([0, 1, 2, 3, 4], AssocKind::First, &coeffs).unwrap();
        let b = omega_associator([4, 3, 2, 1, 0], AssocKind::Second, &coeffs).unwrap();
        for kind in [AssocKind::First, AssocKind::Second, AssocKind::Free] {
            let na = a.normalize(kind);
            assert_eq!(na.normalize(kind), na);
            let sum_then = a.add(&b).normalize(kind);
            let then_sum = a.normalize(kind).add(&b.normalize(kind));
            assert_eq!(sum_then, then_sum);
        }
    }

    #[test]
    fn rendering_is_compact() {
        let p = omega_commutator(&gen(0), &gen(1), &gen(0)).unwrap();
        assert_eq!(p.to_string(), "-aab + 2*aba - baa");
        assert_eq!(FreePoly::zero().to_string(), "0");
        let q = FreePoly::from_term(Term::Word3([0, 1, 2]), w());
        assert_eq!(q.to_string(), "(w)*abc");
    }
}
