//! Constructible right ideals: exact descriptions, translation, preimage,
//! intersection, closure, and the Clifford / independence decision procedures.
//!
//! Every operation reduces to one backend primitive, [`Semigroup::group_translate`],
//! which computes `gX ∩ S` for a grading-group element `g`. Translation by `s`
//! is `emb(s)·X ∩ S = sX` and preimage is `emb(s)^-1·X ∩ S = s^-1(X)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{GroupElement, Rational};
use crate::numerical::NumericalSemigroup;
use crate::semigroup::{fmt_vector, Backend, Semigroup, SemigroupElement};
use crate::word::{FreeGroupWord, Word};

/// A constructible right ideal in canonical form: equal values denote equal sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RightIdeal {
    /// `S` itself.
    Full,
    /// `wS` for a nonempty word `w`.
    Prefix(Word),
    /// `p + Z+^n` for a nonzero corner `p`.
    Corner(Vec<u64>),
    /// `below ∪ (S ∩ [threshold, ∞))` with `threshold ∈ S` least possible.
    Cofinite { threshold: u64, below: Vec<u64> },
    /// `(residue + modulus Z) x modulus Z^x` with `0 <= residue < modulus`, `modulus >= 2`
    /// unless the residue is nonzero.
    Affine { residue: i64, modulus: i64 },
    Empty,
}

impl RightIdeal {
    fn rank(&self) -> u8 {
        match self {
            RightIdeal::Full => 0,
            RightIdeal::Prefix(_) => 1,
            RightIdeal::Corner(_) => 2,
            RightIdeal::Cofinite { .. } => 3,
            RightIdeal::Affine { .. } => 4,
            RightIdeal::Empty => 5,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, RightIdeal::Empty)
    }

    pub fn is_full(&self) -> bool {
        matches!(self, RightIdeal::Full)
    }
}

impl Ord for RightIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        use RightIdeal::*;
        match (self, other) {
            (Prefix(a), Prefix(b)) => a.cmp(b),
            (Corner(a), Corner(b)) => {
                let sa: u64 = a.iter().sum();
                let sb: u64 = b.iter().sum();
                sa.cmp(&sb).then_with(|| b.cmp(a))
            }
            (Cofinite { threshold: t1, below: b1 }, Cofinite { threshold: t2, below: b2 }) => {
                t1.cmp(t2).then_with(|| b1.cmp(b2))
            }
            (Affine { residue: r1, modulus: m1 }, Affine { residue: r2, modulus: m2 }) => {
                m1.cmp(m2).then_with(|| r1.cmp(r2))
            }
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for RightIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders as `S`, `empty`, `abS`, `(1,1)+S`, `{2,4..}` or `(1,2)S`.
impl fmt::Display for RightIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RightIdeal::Full => write!(f, "S"),
            RightIdeal::Empty => write!(f, "empty"),
            RightIdeal::Prefix(w) => write!(f, "{w}S"),
            RightIdeal::Corner(p) => {
                fmt_vector(f, p)?;
                write!(f, "+S")
            }
            RightIdeal::Cofinite { threshold, below } => {
                write!(f, "{{")?;
                for b in below {
                    write!(f, "{b},")?;
                }
                write!(f, "{threshold}..}}")
            }
            RightIdeal::Affine { residue, modulus } => write!(f, "({residue},{modulus})S"),
        }
    }
}

/// Outcome of testing Clifford's condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliffordVerdict {
    Holds(CliffordReason),
    Fails { s: SemigroupElement, t: SemigroupElement, intersection: RightIdeal },
    /// All pairs up to the window were principal; no claim beyond it.
    Inconclusive { window: u64 },
}

/// Which exact argument decided a positive Clifford verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliffordReason {
    /// `uS ∩ vS` is the longer word's ideal or empty.
    PrefixOrder,
    /// `(p + S) ∩ (q + S) = max(p, q) + S`.
    CoordinatewiseMax,
    /// `Z` is a GCD domain, so lcm's exist.
    GcdDomain,
    /// Every principal ideal of a group is the whole group.
    Group,
    /// The numerical semigroup is generated by one element, hence `≅ Z+`.
    SingleGenerator,
}

impl CliffordVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CliffordVerdict::Holds(_))
    }
}

impl fmt::Display for CliffordVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordVerdict::Holds(r) => write!(f, "holds ({r:?})"),
            CliffordVerdict::Fails { s, t, intersection } => {
                write!(f, "fails: {s}S ∩ {t}S = {intersection} is not principal")
            }
            CliffordVerdict::Inconclusive { window } => write!(f, "inconclusive at window {window}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndependenceVerdict {
    Independent,
    /// `parts` are strictly smaller members whose union is `target`.
    Fails { parts: Vec<RightIdeal>, target: RightIdeal },
}

impl IndependenceVerdict {
    pub fn is_independent(&self) -> bool {
        matches!(self, IndependenceVerdict::Independent)
    }
}

impl fmt::Display for IndependenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndependenceVerdict::Independent => write!(f, "independent"),
            IndependenceVerdict::Fails { parts, target } => {
                write!(f, "fails: {} = {target}", parts.iter().join(" ∪ "))
            }
        }
    }
}

/// A duplicate-free, sorted family of ideals closed under intersection and
/// containing `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFamily {
    members: Vec<RightIdeal>,
}

impl IdealFamily {
    /// Closes `ideals ∪ {S}` under intersection.
    pub fn closed(sg: &Semigroup, ideals: impl IntoIterator<Item = RightIdeal>) -> Self {
        let mut set: BTreeSet<RightIdeal> = ideals.into_iter().collect();
        set.insert(RightIdeal::Full);
        IdealFamily { members: close_under_meet(sg, set).into_iter().collect() }
    }

    pub fn members(&self) -> &[RightIdeal] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &RightIdeal) -> bool {
        self.members.binary_search(x).is_ok()
    }

    pub fn index_of(&self, x: &RightIdeal) -> Option<usize> {
        self.members.binary_search(x).ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, RightIdeal> {
        self.members.iter()
    }

    /// One ideal per line in canonical order.
    pub fn render(&self) -> String {
        self.members.iter().map(|x| format!("{x}\n")).collect()
    }
}

fn close_under_meet(sg: &Semigroup, mut set: BTreeSet<RightIdeal>) -> BTreeSet<RightIdeal> {
    loop {
        let items: Vec<&RightIdeal> = set.iter().collect();
        let mut fresh = Vec::new();
        for (i, x) in items.iter().enumerate() {
            for y in &items[i + 1..] {
                let m = sg.meet(x, y);
                if !set.contains(&m) {
                    fresh.push(m);
                }
            }
        }
        if fresh.is_empty() {
            return set;
        }
        set.extend(fresh);
    }
}

/// Positive least common multiple; `aZ^x ∩ bZ^x = lcm(a, b) Z^x`.
pub fn lcm_integer(a: i64, b: i64) -> Result<i64> {
    if a == 0 || b == 0 {
        return Err(Error::Domain("lcm of zero".into()));
    }
    Ok(a.lcm(&b).abs())
}

impl Semigroup {
    fn numerical_data(&self) -> &NumericalSemigroup {
        match self.backend() {
            Backend::Numerical(ns) => ns,
            _ => unreachable!("numerical ideal on {}", self.name()),
        }
    }

    pub(crate) fn check_ideal(&self, x: &RightIdeal) -> Result<()> {
        let ok = match (self.backend(), x) {
            (_, RightIdeal::Full | RightIdeal::Empty) => true,
            (Backend::FreeMonoid(k), RightIdeal::Prefix(w)) => {
                !w.is_empty() && w.letters().iter().all(|&l| (l as usize) < *k)
            }
            (Backend::PositiveCone(n), RightIdeal::Corner(p)) => p.len() == *n,
            (Backend::Numerical(ns), RightIdeal::Cofinite { below, .. }) => {
                below.iter().all(|&b| ns.contains(b))
            }
            (Backend::AxPlusB, RightIdeal::Affine { residue, modulus }) => {
                *modulus >= 1 && (0..*modulus).contains(residue)
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BackendMismatch(format!("{x} is not an ideal of {}", self.name())))
        }
    }

    /// `sS`.
    pub fn principal(&self, s: &SemigroupElement) -> Result<RightIdeal> {
        self.check(s)?;
        Ok(self.shift(&self.emb(s), &RightIdeal::Full))
    }

    /// `sX`.
    pub fn translate(&self, s: &SemigroupElement, x: &RightIdeal) -> Result<RightIdeal> {
        self.check(s)?;
        self.check_ideal(x)?;
        Ok(self.shift(&self.emb(s), x))
    }

    /// `s^-1(X) = {t : st ∈ X}`.
    pub fn preimage(&self, s: &SemigroupElement, x: &RightIdeal) -> Result<RightIdeal> {
        self.check(s)?;
        self.check_ideal(x)?;
        let g = self.grading_group().inv(&self.emb(s));
        Ok(self.shift(&g, x))
    }

    /// `gX ∩ S` for `g` in the grading group.
    pub fn group_translate(&self, g: &GroupElement, x: &RightIdeal) -> Result<RightIdeal> {
        if !self.grading_group().contains(g) {
            return Err(Error::BackendMismatch(format!("{g} is not in the grading group")));
        }
        self.check_ideal(x)?;
        Ok(self.shift(g, x))
    }

    pub(crate) fn shift(&self, g: &GroupElement, x: &RightIdeal) -> RightIdeal {
        if x.is_empty() {
            return RightIdeal::Empty;
        }
        match (self.backend(), g) {
            (Backend::FreeMonoid(_), GroupElement::Free(h)) => {
                let w = match x {
                    RightIdeal::Prefix(w) => FreeGroupWord::from_word(w),
                    _ => FreeGroupWord::identity(),
                };
                // hS ∩ S is PS when h = P N^-1 with P, N positive, else empty
                match h.multiply(&w).split_positive_negative() {
                    Some((p, _)) => prefix_ideal(p),
                    None => RightIdeal::Empty,
                }
            }
            (Backend::PositiveCone(n), GroupElement::Lattice(v)) => {
                let p = corner_of(x, *n);
                corner_ideal(p.iter().zip(v).map(|(&pi, &gi)| (pi as i64 + gi).max(0) as u64).collect())
            }
            (Backend::Numerical(ns), GroupElement::Integer(h)) => shift_cofinite(ns, *h, x),
            (Backend::AxPlusB, GroupElement::Affine(q1, q2)) => shift_affine(q1, q2, x),
            (Backend::FiniteTable(_), GroupElement::Table(_)) => x.clone(),
            _ => panic!("{g} is not in the grading group of {}", self.name()),
        }
    }

    /// `X ∩ Y`.
    pub fn intersect(&self, x: &RightIdeal, y: &RightIdeal) -> Result<RightIdeal> {
        self.check_ideal(x)?;
        self.check_ideal(y)?;
        Ok(self.meet(x, y))
    }

    pub(crate) fn meet(&self, x: &RightIdeal, y: &RightIdeal) -> RightIdeal {
        use RightIdeal::*;
        match (x, y) {
            (Empty, _) | (_, Empty) => Empty,
            (Full, z) | (z, Full) => z.clone(),
            (Prefix(u), Prefix(v)) => {
                if u.is_prefix_of(v) {
                    y.clone()
                } else if v.is_prefix_of(u) {
                    x.clone()
                } else {
                    Empty
                }
            }
            (Corner(p), Corner(q)) => corner_ideal(p.iter().zip(q).map(|(a, b)| *a.max(b)).collect()),
            (Cofinite { threshold: t1, .. }, Cofinite { threshold: t2, .. }) => {
                let ns = self.numerical_data();
                let t = *t1.max(t2);
                let below = (0..t)
                    .filter(|&v| ns.contains(v) && cofinite_member(x, v) && cofinite_member(y, v))
                    .collect();
                normalize_cofinite(ns, t, below)
            }
            (Affine { residue: r1, modulus: m1 }, Affine { residue: r2, modulus: m2 }) => {
                match crt(*r1 as i128, *m1 as i128, *r2 as i128, *m2 as i128) {
                    Some((r, m)) => affine_ideal(r as i64, m as i64),
                    None => Empty,
                }
            }
            _ => panic!("{x} and {y} are ideals of different backends"),
        }
    }

    /// Exact membership `x ∈ X`.
    pub fn membership(&self, x: &SemigroupElement, ideal: &RightIdeal) -> Result<bool> {
        self.check(x)?;
        self.check_ideal(ideal)?;
        Ok(self.member(x, ideal))
    }

    pub(crate) fn member(&self, x: &SemigroupElement, ideal: &RightIdeal) -> bool {
        match (ideal, x) {
            (RightIdeal::Full, _) => true,
            (RightIdeal::Empty, _) => false,
            (RightIdeal::Prefix(w), SemigroupElement::Word(v)) => w.is_prefix_of(v),
            (RightIdeal::Corner(p), SemigroupElement::Vector(v)) => {
                p.iter().zip(v).all(|(a, b)| a <= b)
            }
            (RightIdeal::Cofinite { .. }, SemigroupElement::Natural(n)) => cofinite_member(ideal, *n),
            (RightIdeal::Affine { residue, modulus }, SemigroupElement::Affine(b, a)) => {
                b.rem_euclid(*modulus) == *residue && a % modulus == 0
            }
            _ => panic!("{x} and {ideal} belong to different backends"),
        }
    }

    /// `X ⊆ Y`.
    pub fn is_subset(&self, x: &RightIdeal, y: &RightIdeal) -> bool {
        self.meet(x, y) == *x
    }

    /// An `r` with `X = rS`, if `X` is principal.
    pub fn principal_generator(&self, x: &RightIdeal) -> Option<SemigroupElement> {
        match x {
            RightIdeal::Empty => None,
            RightIdeal::Full => Some(self.identity()),
            RightIdeal::Prefix(w) => Some(SemigroupElement::Word(w.clone())),
            RightIdeal::Corner(p) => Some(SemigroupElement::Vector(p.clone())),
            RightIdeal::Affine { residue, modulus } => {
                Some(SemigroupElement::Affine(*residue, *modulus))
            }
            RightIdeal::Cofinite { .. } => {
                let m = self.least_member(x)?;
                (self.shift(&self.emb(&m), &RightIdeal::Full) == *x).then_some(m)
            }
        }
    }

    /// The smallest member of a numerical ideal, or the generator of a
    /// principal one; `None` only for `Empty`.
    pub fn least_member(&self, x: &RightIdeal) -> Option<SemigroupElement> {
        match x {
            RightIdeal::Cofinite { threshold, below } => {
                let ns = self.numerical_data();
                let m = below
                    .first()
                    .copied()
                    .unwrap_or_else(|| (*threshold..).find(|&v| ns.contains(v)).unwrap());
                Some(SemigroupElement::Natural(m))
            }
            _ => self.principal_generator(x),
        }
    }

    /// Whether `target ⊆ ⋃ parts`.
    ///
    /// For a principal target `rS` this is `r ∈ ⋃ parts`; numerical targets
    /// are decided by finite set arithmetic below the largest threshold.
    pub fn union_covers(&self, parts: &[RightIdeal], target: &RightIdeal) -> bool {
        if target.is_empty() {
            return true;
        }
        if let Backend::Numerical(ns) = self.backend() {
            let threshold = |x: &RightIdeal| match x {
                RightIdeal::Cofinite { threshold, .. } => *threshold,
                _ => 0,
            };
            let live: Vec<&RightIdeal> = parts.iter().filter(|p| !p.is_empty()).collect();
            if live.is_empty() {
                return false;
            }
            let bound = live.iter().map(|p| threshold(p)).chain([threshold(target)]).max().unwrap();
            return (0..bound)
                .filter(|&v| ns.contains(v) && cofinite_member(target, v))
                .all(|v| live.iter().any(|p| cofinite_member(p, v)));
        }
        let r = self.principal_generator(target).expect("non-numerical ideals are principal");
        parts.iter().any(|p| self.member(&r, p))
    }

    /// Whether `⋃ parts = target` exactly.
    pub fn union_equals(&self, parts: &[RightIdeal], target: &RightIdeal) -> Result<bool> {
        for p in parts {
            self.check_ideal(p)?;
        }
        self.check_ideal(target)?;
        Ok(parts.iter().all(|p| self.is_subset(p, target)) && self.union_covers(parts, target))
    }

    /// Ideals reachable from `S` by at most `depth` steps `X -> t^-1(sX)` with
    /// `s, t` in the declared generators or `1`, closed under intersection.
    pub fn constructible_closure(&self, depth: usize) -> IdealFamily {
        self.constructible_closure_with(depth, self.generators())
    }

    pub fn constructible_closure_with(
        &self,
        depth: usize,
        generators: &[SemigroupElement],
    ) -> IdealFamily {
        let mut steps: Vec<GroupElement> = Vec::new();
        let mut inverse_steps: Vec<GroupElement> = Vec::new();
        let group = self.grading_group();
        for s in std::iter::once(self.identity()).chain(generators.iter().cloned()) {
            let g = self.emb(&s);
            if !steps.contains(&g) {
                inverse_steps.push(group.inv(&g));
                steps.push(g);
            }
        }
        let mut current: BTreeSet<RightIdeal> = BTreeSet::from([RightIdeal::Full]);
        for _ in 0..depth {
            let mut next = current.clone();
            for x in &current {
                for s in &steps {
                    let sx = self.shift(s, x);
                    for t_inv in &inverse_steps {
                        next.insert(self.shift(t_inv, &sx));
                    }
                }
            }
            current = close_under_meet(self, next);
        }
        IdealFamily { members: current.into_iter().collect() }
    }

    /// Searches for a pair `s, t` whose principal ideals meet in a nonempty,
    /// non-principal ideal. Numerical pairs are searched among members `<= window`.
    pub fn clifford_check(&self, window: u64) -> CliffordVerdict {
        match self.backend() {
            Backend::FreeMonoid(_) => CliffordVerdict::Holds(CliffordReason::PrefixOrder),
            Backend::PositiveCone(_) => CliffordVerdict::Holds(CliffordReason::CoordinatewiseMax),
            Backend::AxPlusB => CliffordVerdict::Holds(CliffordReason::GcdDomain),
            Backend::FiniteTable(_) => CliffordVerdict::Holds(CliffordReason::Group),
            Backend::Numerical(ns) => {
                if ns.minimal_generators().len() == 1 {
                    return CliffordVerdict::Holds(CliffordReason::SingleGenerator);
                }
                let members: Vec<u64> = ns.members_up_to(window).into_iter().skip(1).collect();
                for (i, &s) in members.iter().enumerate() {
                    for &t in &members[i + 1..] {
                        let s = SemigroupElement::Natural(s);
                        let t = SemigroupElement::Natural(t);
                        let x = self.meet(
                            &self.shift(&self.emb(&s), &RightIdeal::Full),
                            &self.shift(&self.emb(&t), &RightIdeal::Full),
                        );
                        if !x.is_empty() && self.principal_generator(&x).is_none() {
                            return CliffordVerdict::Fails { s, t, intersection: x };
                        }
                    }
                }
                CliffordVerdict::Inconclusive { window }
            }
        }
    }

    /// Decides whether some member of `family` is a union of strictly smaller
    /// members. A failing member is reported with a smallest covering set,
    /// preferring principal parts.
    pub fn independence_check(&self, family: &IdealFamily) -> IndependenceVerdict {
        for target in family.iter().filter(|y| !y.is_empty()) {
            let proper: Vec<RightIdeal> = family
                .iter()
                .filter(|x| !x.is_empty() && *x != target && self.is_subset(x, target))
                .cloned()
                .collect();
            if proper.is_empty() || !self.union_covers(&proper, target) {
                continue;
            }
            let parts = self.smallest_cover(proper, target);
            return IndependenceVerdict::Fails { parts, target: target.clone() };
        }
        IndependenceVerdict::Independent
    }

    pub(crate) fn smallest_cover(&self, mut candidates: Vec<RightIdeal>, target: &RightIdeal) -> Vec<RightIdeal> {
        candidates.sort_by_key(|x| self.principal_generator(x).is_none());
        for k in 2..=candidates.len().min(4) {
            if let Some(c) = candidates
                .iter()
                .combinations(k)
                .find(|c| self.union_covers(&c.iter().map(|x| (*x).clone()).collect::<Vec<_>>(), target))
            {
                return c.into_iter().cloned().collect();
            }
        }
        // maximal members always cover when the full candidate list does
        let maximal: Vec<RightIdeal> = candidates
            .iter()
            .filter(|x| !candidates.iter().any(|y| y != *x && self.is_subset(x, y)))
            .cloned()
            .collect();
        maximal
    }
}

fn prefix_ideal(w: Word) -> RightIdeal {
    if w.is_empty() {
        RightIdeal::Full
    } else {
        RightIdeal::Prefix(w)
    }
}

fn corner_ideal(p: Vec<u64>) -> RightIdeal {
    if p.iter().all(|&x| x == 0) {
        RightIdeal::Full
    } else {
        RightIdeal::Corner(p)
    }
}

fn corner_of(x: &RightIdeal, n: usize) -> Vec<u64> {
    match x {
        RightIdeal::Corner(p) => p.clone(),
        _ => vec![0; n],
    }
}

fn affine_ideal(residue: i64, modulus: i64) -> RightIdeal {
    debug_assert!(modulus >= 1);
    let residue = residue.rem_euclid(modulus);
    if modulus == 1 {
        RightIdeal::Full
    } else {
        RightIdeal::Affine { residue, modulus }
    }
}

fn cofinite_member(x: &RightIdeal, v: u64) -> bool {
    match x {
        RightIdeal::Full => true,
        RightIdeal::Empty => false,
        RightIdeal::Cofinite { threshold, below } => v >= *threshold || below.binary_search(&v).is_ok(),
        _ => unreachable!(),
    }
}

/// Lowers the threshold while the element just below it is either absent
/// from `S` or already listed, then raises it to the next element of `S`.
fn normalize_cofinite(ns: &NumericalSemigroup, mut threshold: u64, mut below: Vec<u64>) -> RightIdeal {
    below.sort_unstable();
    below.dedup();
    while threshold > 0 {
        let v = threshold - 1;
        if !ns.contains(v) {
            threshold -= 1;
        } else if below.last() == Some(&v) {
            below.pop();
            threshold -= 1;
        } else {
            break;
        }
    }
    if threshold == 0 {
        return RightIdeal::Full;
    }
    while !ns.contains(threshold) {
        threshold += 1;
    }
    RightIdeal::Cofinite { threshold, below }
}

/// `{v ∈ S : v - h ∈ X}`.
fn shift_cofinite(ns: &NumericalSemigroup, h: i64, x: &RightIdeal) -> RightIdeal {
    let d = ns.gcd() as i64;
    if h.rem_euclid(d) != 0 {
        return RightIdeal::Empty;
    }
    let threshold = match x {
        RightIdeal::Cofinite { threshold, .. } => *threshold as i64,
        _ => 0,
    };
    let c = ns.conductor() as i64;
    // above `tail` both v and v - h are past the conductor and the threshold
    let tail = (threshold + h).max(c + h).max(c).max(0);
    let below = (0..tail)
        .filter(|&v| {
            let u = v - h;
            ns.contains(v as u64) && u >= 0 && ns.contains(u as u64) && cofinite_member(x, u as u64)
        })
        .map(|v| v as u64)
        .collect();
    normalize_cofinite(ns, tail as u64, below)
}

/// `(q1, q2)·X ∩ (Z x Z^x)` for `X = (b + aZ) x aZ^x`.
///
/// The image is the product `(c + rZ) x rZ^x` with `c = q1 + q2 b`,
/// `r = q2 a = n/d`. Its integer points are `(c' + |n|Z) x |n|Z^x` when the
/// progression `c + (n/d)Z` meets `Z`, and empty otherwise.
fn shift_affine(q1: &Rational, q2: &Rational, x: &RightIdeal) -> RightIdeal {
    let (b, a) = match x {
        RightIdeal::Affine { residue, modulus } => (*residue as i128, *modulus as i128),
        _ => (0, 1),
    };
    let c = q1 + q2 * Rational::from_integer(b);
    let r = q2 * Rational::from_integer(a);
    let (n, d) = (*r.numer(), *r.denom());
    let (u, v) = (*c.numer(), *c.denom());
    if d % v != 0 {
        return RightIdeal::Empty;
    }
    let w = d / v * u;
    // need n k ≡ -w (mod d); gcd(n, d) = 1
    let k = if d == 1 {
        0
    } else {
        let inv = n.extended_gcd(&d).x.rem_euclid(d);
        ((-w).rem_euclid(d) * inv).rem_euclid(d)
    };
    let value = (w + n * k) / d;
    let modulus = n.abs();
    let out = affine_ideal(value.rem_euclid(modulus) as i64, modulus as i64);
    // the generator of the result must pull back into X
    if let RightIdeal::Affine { residue, modulus } = &out {
        let back_b = (Rational::from_integer(*residue as i128) - q1) / q2;
        let back_a = Rational::from_integer(*modulus as i128) / q2;
        assert!(
            back_b.is_integer()
                && back_a.is_integer()
                && (back_b.to_integer() - b).rem_euclid(a) == 0
                && back_a.to_integer() % a == 0,
            "affine translate of {x} by ({q1},{q2}) produced {out}, which does not pull back"
        );
    }
    out
}

/// Solves `x ≡ r1 (mod m1)`, `x ≡ r2 (mod m2)`; returns `(x mod l, l)`.
fn crt(r1: i128, m1: i128, r2: i128, m2: i128) -> Option<(i128, i128)> {
    let g = m1.extended_gcd(&m2);
    if (r2 - r1) % g.gcd != 0 {
        return None;
    }
    let l = m1 / g.gcd * m2;
    let step = ((r2 - r1) / g.gcd * g.x).rem_euclid(m2 / g.gcd);
    Some(((r1 + m1 * step).rem_euclid(l), l))
}
