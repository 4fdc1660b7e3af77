//! Grading groups: the groups the backends embed into, and the maximal group
//! images computed from them.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::table::GroupTable;
use crate::word::FreeGroupWord;

/// Exact rationals used for `Q x| Q^x` coordinates and operator coefficients.
pub type Rational = Ratio<i128>;

/// An element of a grading group in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    /// Reduced word in a free group.
    Free(FreeGroupWord),
    /// Vector in `Z^n`.
    Lattice(Vec<i64>),
    /// Element of `Z` (also used for the subgroups `dZ`).
    Integer(i64),
    /// `(q1, q2)` in `Q x| Q^x`, acting by `x -> q1 + q2 x`.
    Affine(Rational, Rational),
    /// Index into a finite group table.
    Table(usize),
}

impl GroupElement {
    fn rank(&self) -> u8 {
        match self {
            GroupElement::Free(_) => 0,
            GroupElement::Lattice(_) => 1,
            GroupElement::Integer(_) => 2,
            GroupElement::Affine(..) => 3,
            GroupElement::Table(_) => 4,
        }
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        use GroupElement::*;
        match (self, other) {
            (Free(a), Free(b)) => a.cmp(b),
            (Lattice(a), Lattice(b)) => {
                let na: i64 = a.iter().map(|x| x.abs()).sum();
                let nb: i64 = b.iter().map(|x| x.abs()).sum();
                na.cmp(&nb).then_with(|| a.cmp(b))
            }
            (Integer(a), Integer(b)) => a.abs().cmp(&b.abs()).then_with(|| a.cmp(b)),
            (Affine(a1, a2), Affine(b1, b2)) => (a2, a1).cmp(&(b2, b1)),
            (Table(a), Table(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Free(w) => write!(f, "{w}"),
            GroupElement::Lattice(v) if v.len() == 1 => write!(f, "{}", v[0]),
            GroupElement::Lattice(v) => {
                write!(f, "(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            GroupElement::Integer(n) => write!(f, "{n}"),
            GroupElement::Affine(a, b) => write!(f, "({a},{b})"),
            GroupElement::Table(i) => write!(f, "{i}"),
        }
    }
}

/// A concrete group together with its arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDescriptor {
    FreeGroup(usize),
    /// `Z^n`.
    Integers(usize),
    /// The subgroup `dZ` of `Z`.
    IntegerLattice(u64),
    /// `Q x| Q^x` with product `(q1, q2)(r1, r2) = (q1 + q2 r1, q2 r2)`.
    RationalAffine,
    FiniteGroup(Arc<GroupTable>),
}

impl GroupDescriptor {
    pub fn identity(&self) -> GroupElement {
        match self {
            GroupDescriptor::FreeGroup(_) => GroupElement::Free(FreeGroupWord::identity()),
            GroupDescriptor::Integers(n) => GroupElement::Lattice(vec![0; *n]),
            GroupDescriptor::IntegerLattice(_) => GroupElement::Integer(0),
            GroupDescriptor::RationalAffine => {
                GroupElement::Affine(Rational::zero(), Rational::one())
            }
            GroupDescriptor::FiniteGroup(t) => GroupElement::Table(t.identity()),
        }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        match (self, g) {
            (GroupDescriptor::FreeGroup(k), GroupElement::Free(w)) => {
                w.signed_letters().iter().all(|l| l.unsigned_abs() as usize <= *k)
            }
            (GroupDescriptor::Integers(n), GroupElement::Lattice(v)) => v.len() == *n,
            (GroupDescriptor::IntegerLattice(d), GroupElement::Integer(x)) => {
                x.rem_euclid(*d as i64) == 0
            }
            (GroupDescriptor::RationalAffine, GroupElement::Affine(_, b)) => !b.is_zero(),
            (GroupDescriptor::FiniteGroup(t), GroupElement::Table(i)) => *i < t.order(),
            _ => false,
        }
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::BackendMismatch(format!("{g} is not an element of {self}")))
        }
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    pub(crate) fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        use GroupElement::*;
        match (self, a, b) {
            (_, Free(x), Free(y)) => Free(x.multiply(y)),
            (_, Lattice(x), Lattice(y)) => Lattice(x.iter().zip(y).map(|(p, q)| p + q).collect()),
            (_, Integer(x), Integer(y)) => Integer(x + y),
            (_, Affine(a1, a2), Affine(b1, b2)) => Affine(a1 + a2 * b1, a2 * b2),
            (GroupDescriptor::FiniteGroup(t), Table(x), Table(y)) => Table(t.multiply(*x, *y)),
            _ => panic!("group elements {a} and {b} do not belong to {self}"),
        }
    }

    pub(crate) fn inv(&self, a: &GroupElement) -> GroupElement {
        use GroupElement::*;
        match (self, a) {
            (_, Free(x)) => Free(x.inverse()),
            (_, Lattice(x)) => Lattice(x.iter().map(|p| -p).collect()),
            (_, Integer(x)) => Integer(-x),
            (_, Affine(a1, a2)) => Affine(-a1 / a2, a2.recip()),
            (GroupDescriptor::FiniteGroup(t), Table(x)) => Table(t.inverse(*x)),
            _ => panic!("group element {a} does not belong to {self}"),
        }
    }

    /// `a^k` for any integer `k`.
    pub fn power(&self, a: &GroupElement, k: i64) -> GroupElement {
        let base = if k < 0 { self.inv(a) } else { a.clone() };
        let mut acc = self.identity();
        let mut sq = base;
        let mut m = k.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            m >>= 1;
        }
        acc
    }

    pub fn is_identity(&self, a: &GroupElement) -> bool {
        *a == self.identity()
    }

    pub fn is_commutative(&self) -> bool {
        match self {
            GroupDescriptor::FreeGroup(k) => *k <= 1,
            GroupDescriptor::Integers(_) | GroupDescriptor::IntegerLattice(_) => true,
            GroupDescriptor::RationalAffine => false,
            GroupDescriptor::FiniteGroup(t) => (0..t.order())
                .all(|a| (0..t.order()).all(|b| t.multiply(a, b) == t.multiply(b, a))),
        }
    }

    pub fn parse_element(&self, s: &str) -> Option<GroupElement> {
        let s = s.trim();
        match self {
            GroupDescriptor::FreeGroup(k) => FreeGroupWord::parse(s, *k).map(GroupElement::Free),
            GroupDescriptor::Integers(n) => {
                let v = parse_int_tuple(s)?;
                (v.len() == *n).then_some(GroupElement::Lattice(v))
            }
            GroupDescriptor::IntegerLattice(d) => {
                let x: i64 = s.parse().ok()?;
                (x.rem_euclid(*d as i64) == 0).then_some(GroupElement::Integer(x))
            }
            GroupDescriptor::RationalAffine => {
                let inner = s.strip_prefix('(')?.strip_suffix(')')?;
                let (a, b) = inner.split_once(',')?;
                let a = parse_rational(a)?;
                let b = parse_rational(b)?;
                (!b.is_zero()).then_some(GroupElement::Affine(a, b))
            }
            GroupDescriptor::FiniteGroup(t) => {
                let i: usize = s.parse().ok()?;
                (i < t.order()).then_some(GroupElement::Table(i))
            }
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::FreeGroup(k) => write!(f, "F{k}"),
            GroupDescriptor::Integers(1) => write!(f, "Z"),
            GroupDescriptor::Integers(n) => write!(f, "Z^{n}"),
            GroupDescriptor::IntegerLattice(1) => write!(f, "Z"),
            GroupDescriptor::IntegerLattice(d) => write!(f, "{d}Z"),
            GroupDescriptor::RationalAffine => write!(f, "Q x| Q^x"),
            GroupDescriptor::FiniteGroup(t) => write!(f, "finite group of order {}", t.order()),
        }
    }
}

pub(crate) fn parse_int_tuple(s: &str) -> Option<Vec<i64>> {
    let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    inner.split(',').map(|p| p.trim().parse().ok()).collect()
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: i128 = d.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Rational::new(n.trim().parse().ok()?, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// True when `q` is an integer.
pub(crate) fn rational_as_integer(q: &Rational) -> Option<i64> {
    q.is_integer().then(|| i64::try_from(q.to_integer()).ok()).flatten()
}
