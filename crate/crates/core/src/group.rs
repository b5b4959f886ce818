//! The affine group of the line over F_5: all twenty maps `x -> a*x + b`
//! with `a` invertible mod 5, realised concretely as permutations of the
//! points {1, 2, 3, 4, 5}.
//!
//! Generators used throughout: the 5-cycle `s = (1 2 3 4 5)` and the
//! 4-cycle `t = (2 4 5 3)`, satisfying `s^5 = e` and `t^4 = e`. Composition
//! here is "right acts first": `compose(p, q)` applies `q` and then `p`.
//! Under that convention conjugation by `t` cubes the shift,
//! `t s t^-1 = s^3`, and equivalently `t^-1 s t = s^2`; sources that write
//! the defining relation as `t s t^-1 = s^2` are composing left-to-right.
//! Every element factors uniquely as `s^k t^j`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Permutation of the five points `1..=5`, stored as the image list:
/// `images[i]` is where point `i + 1` goes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm5 {
    images: [u8; 5],
}

impl Perm5 {
    pub fn identity() -> Self {
        Perm5 {
            images: [1, 2, 3, 4, 5],
        }
    }

    /// Builds a permutation from its image list; errors unless the list is a
    /// rearrangement of `1..=5`.
    pub fn from_images(images: [u8; 5]) -> Result<Self> {
        let mut seen = [false; 5];
        for &v in &images {
            if !(1..=5).contains(&v) || seen[v as usize - 1] {
                return Err(Error::Invalid {
                    what: "permutation",
                    detail: format!("image list {images:?} is not a bijection of 1..=5"),
                });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Perm5 { images })
    }

    /// The 5-cycle `(1 2 3 4 5)`.
    pub fn sigma() -> Self {
        Perm5 {
            images: [2, 3, 4, 5, 1],
        }
    }

    /// The 4-cycle `(2 4 5 3)`.
    pub fn tau() -> Self {
        Perm5 {
            images: [1, 4, 2, 5, 3],
        }
    }

    pub fn apply(&self, point: u8) -> u8 {
        debug_assert!((1..=5).contains(&point));
        self.images[point as usize - 1]
    }

    pub fn images(&self) -> [u8; 5] {
        self.images
    }

    /// `self` after `rhs`: `(self * rhs)(x) = self(rhs(x))`.
    pub fn compose(&self, rhs: &Perm5) -> Perm5 {
        let mut images = [0u8; 5];
        for p in 1..=5u8 {
            images[p as usize - 1] = self.apply(rhs.apply(p));
        }
        Perm5 { images }
    }

    pub fn inverse(&self) -> Perm5 {
        let mut images = [0u8; 5];
        for p in 1..=5u8 {
            images[self.apply(p) as usize - 1] = p;
        }
        Perm5 { images }
    }

    pub fn pow(&self, e: u32) -> Perm5 {
        let mut out = Perm5::identity();
        for _ in 0..e {
            out = out.compose(self);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm5::identity()
    }

    /// Cycle notation, e.g. `(1 2 3 4 5)` or `(2 4 5 3)`; identity is `()`.
    pub fn cycle_notation(&self) -> String {
        let mut out = String::new();
        let mut seen = [false; 5];
        for start in 1..=5u8 {
            if seen[start as usize - 1] || self.apply(start) == start {
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            loop {
                if !first {
                    out.push(' ');
                }
                out.push_str(&p.to_string());
                seen[p as usize - 1] = true;
                first = false;
                p = self.apply(p);
                if p == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Perm5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

impl fmt::Debug for Perm5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

/// Closure of a generating set under composition (breadth-first).
pub fn generate(generators: &[Perm5]) -> BTreeSet<Perm5> {
    let mut set: BTreeSet<Perm5> = BTreeSet::new();
    set.insert(Perm5::identity());
    let mut frontier: Vec<Perm5> = vec![Perm5::identity()];
    while let Some(g) = frontier.pop() {
        for h in generators {
            let next = g.compose(h);
            if set.insert(next) {
                frontier.push(next);
            }
        }
    }
    set
}

/// The full group in the fixed row order `s^k t^j`: row `j` (0..=3) lists
/// `t^j, s t^j, s^2 t^j, s^3 t^j, s^4 t^j`.
pub fn ga15_rows() -> Vec<Perm5> {
    let s = Perm5::sigma();
    let t = Perm5::tau();
    let mut out = Vec::with_capacity(20);
    for j in 0..4 {
        let tj = t.pow(j);
        for k in 0..5 {
            out.push(s.pow(k).compose(&tj));
        }
    }
    out
}

/// The group as an element set.
pub fn ga15_elements() -> BTreeSet<Perm5> {
    generate(&[Perm5::sigma(), Perm5::tau()])
}

/// Is `sub` (assumed a subgroup of `group`) normal in `group`?
pub fn is_normal(sub: &BTreeSet<Perm5>, group: &BTreeSet<Perm5>) -> bool {
    group.iter().all(|g| {
        let gi = g.inverse();
        sub.iter()
            .all(|h| sub.contains(&g.compose(h).compose(&gi)))
    })
}

/// Affine map `x -> a*x + b` on residues mod 5, with `a` in 1..=4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineMap5 {
    a: u8,
    b: u8,
}

impl AffineMap5 {
    pub fn new(a: u8, b: u8) -> Result<Self> {
        if !(1..=4).contains(&a) || b > 4 {
            return Err(Error::Invalid {
                what: "affine map",
                detail: format!("need a in 1..=4 and b in 0..=4, got ({a}, {b})"),
            });
        }
        Ok(AffineMap5 { a, b })
    }

    pub fn identity() -> Self {
        AffineMap5 { a: 1, b: 0 }
    }

    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn b(&self) -> u8 {
        self.b
    }

    pub fn apply(&self, x: u8) -> u8 {
        (self.a * (x % 5) + self.b) % 5
    }

    /// `self` after `rhs`: `(a1, b1) * (a2, b2) = (a1 a2, b1 + a1 b2)`.
    pub fn compose(&self, rhs: &AffineMap5) -> AffineMap5 {
        AffineMap5 {
            a: (self.a * rhs.a) % 5,
            b: (self.b + self.a * rhs.b) % 5,
        }
    }

    pub fn inverse(&self) -> AffineMap5 {
        // x -> a*x + b undoes to x -> ainv*x - ainv*b, with a * ainv = 1 mod 5
        let ainv = [0u8, 1, 3, 2, 4][self.a as usize];
        AffineMap5 {
            a: ainv,
            b: (ainv * (5 - self.b)) % 5,
        }
    }

    /// All twenty maps, `a` ascending then `b` ascending.
    pub fn all() -> Vec<AffineMap5> {
        let mut out = Vec::with_capacity(20);
        for a in 1..=4 {
            for b in 0..=4 {
                out.push(AffineMap5 { a, b });
            }
        }
        out
    }
}

impl fmt::Display for AffineMap5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> {}x+{}", self.a, self.b)
    }
}

impl fmt::Debug for AffineMap5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Transfers an affine map to the permutation picture, identifying point `i`
/// with the residue `i mod 5` (so point 5 carries residue 0).
pub fn affine_to_perm(m: &AffineMap5) -> Perm5 {
    let mut images = [0u8; 5];
    for p in 1..=5u8 {
        let r = m.apply(p % 5);
        images[p as usize - 1] = if r == 0 { 5 } else { r };
    }
    Perm5 { images }
}
