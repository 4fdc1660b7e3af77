//! Backend semigroups: canonical elements, exact multiplication, left
//! division, the embedding into a grading group, and window enumeration.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{parse_int_tuple, rational_as_integer, GroupDescriptor, GroupElement, Rational};
use crate::numerical::NumericalSemigroup;
use crate::table::GroupTable;
use crate::word::{FreeGroupWord, Word};

/// Which semigroup to build, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupKind {
    FreeMonoid { alphabet: usize },
    PositiveCone { dimension: usize },
    Numerical { generators: Vec<u64> },
    /// `Z x| Z^x` with `(b, a)(d, c) = (b + a d, a c)`.
    AxPlusB,
    FiniteTable { rows: Vec<Vec<usize>>, identity: Option<usize> },
}

/// A validated backend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    FreeMonoid(usize),
    PositiveCone(usize),
    Numerical(NumericalSemigroup),
    AxPlusB,
    FiniteTable(Arc<GroupTable>),
}

/// Canonical element of a backend semigroup. Equal values are equal elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SemigroupElement {
    Word(Word),
    Vector(Vec<u64>),
    Natural(u64),
    /// `(b, a)` with `a != 0`.
    Affine(i64, i64),
    Table(usize),
}

impl SemigroupElement {
    fn rank(&self) -> u8 {
        match self {
            SemigroupElement::Word(_) => 0,
            SemigroupElement::Vector(_) => 1,
            SemigroupElement::Natural(_) => 2,
            SemigroupElement::Affine(..) => 3,
            SemigroupElement::Table(_) => 4,
        }
    }
}

fn affine_key(b: i64, a: i64) -> (u64, u64, bool, u64, bool) {
    let h = b.unsigned_abs().max(a.unsigned_abs());
    (h, a.unsigned_abs(), a < 0, b.unsigned_abs(), b < 0)
}

/// Graded order: length-lex for words, degree then reverse-lex for vectors,
/// height `max(|b|, |a|)` first for affine pairs.
impl Ord for SemigroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        use SemigroupElement::*;
        match (self, other) {
            (Word(a), Word(b)) => a.cmp(b),
            (Vector(a), Vector(b)) => {
                let sa: u64 = a.iter().sum();
                let sb: u64 = b.iter().sum();
                sa.cmp(&sb).then_with(|| b.cmp(a))
            }
            (Natural(a), Natural(b)) => a.cmp(b),
            (Affine(b1, a1), Affine(b2, a2)) => affine_key(*b1, *a1).cmp(&affine_key(*b2, *a2)),
            (Table(a), Table(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for SemigroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SemigroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupElement::Word(w) => write!(f, "{w}"),
            SemigroupElement::Vector(v) => fmt_vector(f, v),
            SemigroupElement::Natural(n) => write!(f, "{n}"),
            SemigroupElement::Affine(b, a) => write!(f, "({b},{a})"),
            SemigroupElement::Table(i) => write!(f, "{i}"),
        }
    }
}

pub(crate) fn fmt_vector(f: &mut fmt::Formatter<'_>, v: &[u64]) -> fmt::Result {
    if v.len() == 1 {
        return write!(f, "{}", v[0]);
    }
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// A left cancellative, group-embeddable monoid together with a declared
/// generator set (used for ideal closure and hull enumeration).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    backend: Backend,
    generators: Vec<SemigroupElement>,
}

impl Semigroup {
    pub fn new(kind: SemigroupKind) -> Result<Self> {
        let backend = match kind {
            SemigroupKind::FreeMonoid { alphabet } => {
                if alphabet == 0 || alphabet > 26 {
                    return Err(Error::InvalidDescriptor(format!(
                        "alphabet size must be in 1..=26, got {alphabet}"
                    )));
                }
                Backend::FreeMonoid(alphabet)
            }
            SemigroupKind::PositiveCone { dimension } => {
                if dimension == 0 {
                    return Err(Error::InvalidDescriptor("cone dimension must be >= 1".into()));
                }
                Backend::PositiveCone(dimension)
            }
            SemigroupKind::Numerical { generators } => {
                Backend::Numerical(NumericalSemigroup::new(&generators)?)
            }
            SemigroupKind::AxPlusB => Backend::AxPlusB,
            SemigroupKind::FiniteTable { rows, identity } => {
                Backend::FiniteTable(Arc::new(GroupTable::new(rows, identity)?))
            }
        };
        let generators = default_generators(&backend);
        Ok(Semigroup { backend, generators })
    }

    pub fn free_monoid(alphabet: usize) -> Self {
        Self::new(SemigroupKind::FreeMonoid { alphabet }).expect("valid alphabet")
    }

    pub fn positive_cone(dimension: usize) -> Self {
        Self::new(SemigroupKind::PositiveCone { dimension }).expect("valid dimension")
    }

    /// `(Z+, +)`, realized as the one-dimensional cone.
    pub fn naturals() -> Self {
        Self::positive_cone(1)
    }

    pub fn numerical(generators: &[u64]) -> Result<Self> {
        Self::new(SemigroupKind::Numerical { generators: generators.to_vec() })
    }

    pub fn ax_plus_b() -> Self {
        Self::new(SemigroupKind::AxPlusB).expect("no parameters")
    }

    pub fn finite_table(rows: Vec<Vec<usize>>, identity: Option<usize>) -> Result<Self> {
        Self::new(SemigroupKind::FiniteTable { rows, identity })
    }

    /// Replaces the declared generator set.
    pub fn with_generators(mut self, generators: Vec<SemigroupElement>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidDescriptor("generator set is empty".into()));
        }
        for g in &generators {
            self.check(g)?;
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn generators(&self) -> &[SemigroupElement] {
        &self.generators
    }

    /// Generators of the monoid itself (letters, unit vectors, minimal
    /// numerical generators, all table elements); homomorphisms are given on these.
    pub fn defining_generators(&self) -> Option<Vec<SemigroupElement>> {
        match &self.backend {
            Backend::AxPlusB => None,
            Backend::FiniteTable(t) => Some((0..t.order()).map(SemigroupElement::Table).collect()),
            Backend::Numerical(ns) => Some(
                ns.minimal_generators().iter().map(|&g| SemigroupElement::Natural(g)).collect(),
            ),
            b => Some(default_generators(b)),
        }
    }

    pub fn name(&self) -> String {
        match &self.backend {
            Backend::FreeMonoid(k) => format!("FreeMonoid({k})"),
            Backend::PositiveCone(1) => "Z+".to_string(),
            Backend::PositiveCone(n) => format!("PositiveCone({n})"),
            Backend::Numerical(ns) => {
                let g: Vec<String> = ns.generators().iter().map(|g| g.to_string()).collect();
                format!("<{}>", g.join(","))
            }
            Backend::AxPlusB => "AxPlusBOverZ".to_string(),
            Backend::FiniteTable(t) => format!("FiniteTable({})", t.order()),
        }
    }

    pub fn identity(&self) -> SemigroupElement {
        match &self.backend {
            Backend::FreeMonoid(_) => SemigroupElement::Word(Word::empty()),
            Backend::PositiveCone(n) => SemigroupElement::Vector(vec![0; *n]),
            Backend::Numerical(_) => SemigroupElement::Natural(0),
            Backend::AxPlusB => SemigroupElement::Affine(0, 1),
            Backend::FiniteTable(t) => SemigroupElement::Table(t.identity()),
        }
    }

    pub fn contains(&self, x: &SemigroupElement) -> bool {
        match (&self.backend, x) {
            (Backend::FreeMonoid(k), SemigroupElement::Word(w)) => {
                w.letters().iter().all(|&l| (l as usize) < *k)
            }
            (Backend::PositiveCone(n), SemigroupElement::Vector(v)) => v.len() == *n,
            (Backend::Numerical(ns), SemigroupElement::Natural(m)) => ns.contains(*m),
            (Backend::AxPlusB, SemigroupElement::Affine(_, a)) => *a != 0,
            (Backend::FiniteTable(t), SemigroupElement::Table(i)) => *i < t.order(),
            _ => false,
        }
    }

    pub(crate) fn check(&self, x: &SemigroupElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::BackendMismatch(format!("{x} is not an element of {}", self.name())))
        }
    }

    pub fn multiply(&self, a: &SemigroupElement, b: &SemigroupElement) -> Result<SemigroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub(crate) fn mul(&self, a: &SemigroupElement, b: &SemigroupElement) -> SemigroupElement {
        use SemigroupElement::*;
        match (&self.backend, a, b) {
            (_, Word(x), Word(y)) => Word(x.concat(y)),
            (_, Vector(x), Vector(y)) => Vector(x.iter().zip(y).map(|(p, q)| p + q).collect()),
            (_, Natural(x), Natural(y)) => Natural(x + y),
            (_, Affine(b1, a1), Affine(b2, a2)) => Affine(b1 + a1 * b2, a1 * a2),
            (Backend::FiniteTable(t), Table(x), Table(y)) => Table(t.multiply(*x, *y)),
            _ => panic!("{a} and {b} do not belong to {}", self.name()),
        }
    }

    /// The unique `r` with `s r = t`, if `t` lies in `sS`.
    pub fn left_divide(
        &self,
        s: &SemigroupElement,
        t: &SemigroupElement,
    ) -> Result<Option<SemigroupElement>> {
        self.check(s)?;
        self.check(t)?;
        Ok(self.ldiv(s, t))
    }

    pub(crate) fn ldiv(&self, s: &SemigroupElement, t: &SemigroupElement) -> Option<SemigroupElement> {
        use SemigroupElement::*;
        match (&self.backend, s, t) {
            (_, Word(x), Word(y)) => y.strip_prefix(x).map(Word),
            (_, Vector(x), Vector(y)) => x
                .iter()
                .zip(y)
                .map(|(p, q)| q.checked_sub(*p))
                .collect::<Option<Vec<u64>>>()
                .map(Vector),
            (Backend::Numerical(ns), Natural(x), Natural(y)) => {
                y.checked_sub(*x).filter(|r| ns.contains(*r)).map(Natural)
            }
            (_, Affine(b, a), Affine(tb, ta)) => {
                // (b, a)(d, c) = (b + a d, a c)
                if ta % a != 0 || (tb - b) % a != 0 {
                    None
                } else {
                    Some(Affine((tb - b) / a, ta / a))
                }
            }
            (Backend::FiniteTable(tab), Table(x), Table(y)) => {
                Some(Table(tab.multiply(tab.inverse(*x), *y)))
            }
            _ => panic!("{s} and {t} do not belong to {}", self.name()),
        }
    }

    /// `s ⪯ t`, i.e. `s ∈ tS`.
    pub fn preceq(&self, s: &SemigroupElement, t: &SemigroupElement) -> Result<bool> {
        Ok(self.left_divide(t, s)?.is_some())
    }

    /// Whether the only invertible element is the identity, which for left
    /// cancellative monoids is the same as `⪯` being antisymmetric.
    pub fn is_algebraically_ordered(&self) -> bool {
        match &self.backend {
            Backend::FreeMonoid(_) | Backend::PositiveCone(_) | Backend::Numerical(_) => true,
            Backend::AxPlusB => false,
            Backend::FiniteTable(t) => t.order() == 1,
        }
    }

    /// The group the backend grades into: a free group, `Z^n`, `Z`,
    /// `Q x| Q^x`, or the table group itself.
    pub fn grading_group(&self) -> GroupDescriptor {
        match &self.backend {
            Backend::FreeMonoid(k) => GroupDescriptor::FreeGroup(*k),
            Backend::PositiveCone(n) => GroupDescriptor::Integers(*n),
            Backend::Numerical(_) => GroupDescriptor::IntegerLattice(1),
            Backend::AxPlusB => GroupDescriptor::RationalAffine,
            Backend::FiniteTable(t) => GroupDescriptor::FiniteGroup(t.clone()),
        }
    }

    pub fn embed(&self, s: &SemigroupElement) -> Result<GroupElement> {
        self.check(s)?;
        Ok(self.emb(s))
    }

    pub(crate) fn emb(&self, s: &SemigroupElement) -> GroupElement {
        match s {
            SemigroupElement::Word(w) => GroupElement::Free(FreeGroupWord::from_word(w)),
            SemigroupElement::Vector(v) => {
                GroupElement::Lattice(v.iter().map(|&x| x as i64).collect())
            }
            SemigroupElement::Natural(n) => GroupElement::Integer(*n as i64),
            SemigroupElement::Affine(b, a) => GroupElement::Affine(
                Rational::from_integer(*b as i128),
                Rational::from_integer(*a as i128),
            ),
            SemigroupElement::Table(i) => GroupElement::Table(*i),
        }
    }

    /// Reads a grading-group element back into the semigroup, if it lies there.
    pub fn to_semigroup(&self, g: &GroupElement) -> Option<SemigroupElement> {
        match (&self.backend, g) {
            (Backend::FreeMonoid(_), GroupElement::Free(w)) => {
                w.as_positive().map(SemigroupElement::Word)
            }
            (Backend::PositiveCone(n), GroupElement::Lattice(v)) if v.len() == *n => v
                .iter()
                .map(|&x| u64::try_from(x).ok())
                .collect::<Option<Vec<u64>>>()
                .map(SemigroupElement::Vector),
            (Backend::Numerical(ns), GroupElement::Integer(x)) => {
                ns.contains_signed(*x).then_some(SemigroupElement::Natural(*x as u64))
            }
            (Backend::AxPlusB, GroupElement::Affine(q1, q2)) => {
                let b = rational_as_integer(q1)?;
                let a = rational_as_integer(q2)?;
                (a != 0).then_some(SemigroupElement::Affine(b, a))
            }
            (Backend::FiniteTable(t), GroupElement::Table(i)) if *i < t.order() => {
                Some(SemigroupElement::Table(*i))
            }
            _ => None,
        }
    }

    /// Deterministic, duplicate-free, prefix-monotone enumeration: words of
    /// length `<= bound`, vectors of coordinate sum `<= bound`, numerical
    /// members `<= bound`, pairs with `|b| <= bound` and `1 <= |a| <= bound`,
    /// or the whole table.
    pub fn enumerate_window(&self, bound: u64) -> Vec<SemigroupElement> {
        let mut out: Vec<SemigroupElement> = match &self.backend {
            Backend::FreeMonoid(k) => Word::all_up_to(*k, bound as usize)
                .into_iter()
                .map(SemigroupElement::Word)
                .collect(),
            Backend::PositiveCone(n) => {
                let mut acc = Vec::new();
                compositions(*n, bound, &mut Vec::new(), &mut acc);
                acc.into_iter().map(SemigroupElement::Vector).collect()
            }
            Backend::Numerical(ns) => {
                ns.members_up_to(bound).into_iter().map(SemigroupElement::Natural).collect()
            }
            Backend::AxPlusB => {
                let m = bound as i64;
                let mut acc = Vec::new();
                for b in -m..=m {
                    for a in (-m..=m).filter(|&a| a != 0) {
                        acc.push(SemigroupElement::Affine(b, a));
                    }
                }
                acc
            }
            Backend::FiniteTable(t) => (0..t.order()).map(SemigroupElement::Table).collect(),
        };
        out.sort();
        out
    }

    /// The first `size` elements of the enumeration order (fewer only for
    /// finite backends).
    pub fn window_of_size(&self, size: usize) -> Window {
        let mut bound = 0;
        loop {
            let els = self.enumerate_window(bound);
            let finite = matches!(self.backend, Backend::FiniteTable(_));
            if els.len() >= size || finite {
                return Window::new(els.into_iter().take(size).collect());
            }
            bound += 1;
        }
    }

    pub fn parse_element(&self, s: &str) -> Option<SemigroupElement> {
        let s = s.trim();
        let x = match &self.backend {
            Backend::FreeMonoid(k) => SemigroupElement::Word(Word::parse(s, *k)?),
            Backend::PositiveCone(_) => {
                let v = parse_int_tuple(s)?;
                SemigroupElement::Vector(
                    v.into_iter().map(|x| u64::try_from(x).ok()).collect::<Option<Vec<_>>>()?,
                )
            }
            Backend::Numerical(_) => SemigroupElement::Natural(s.parse().ok()?),
            Backend::AxPlusB => {
                let v = parse_int_tuple(s)?;
                if v.len() != 2 {
                    return None;
                }
                SemigroupElement::Affine(v[0], v[1])
            }
            Backend::FiniteTable(_) => SemigroupElement::Table(s.parse().ok()?),
        };
        self.contains(&x).then_some(x)
    }
}

fn default_generators(backend: &Backend) -> Vec<SemigroupElement> {
    match backend {
        Backend::FreeMonoid(k) => {
            (0..*k).map(|l| SemigroupElement::Word(Word::letter(l as u8))).collect()
        }
        Backend::PositiveCone(n) => (0..*n)
            .map(|i| {
                let mut v = vec![0; *n];
                v[i] = 1;
                SemigroupElement::Vector(v)
            })
            .collect(),
        Backend::Numerical(ns) => {
            ns.generators().iter().map(|&g| SemigroupElement::Natural(g)).collect()
        }
        Backend::AxPlusB => vec![
            SemigroupElement::Affine(1, 1),
            SemigroupElement::Affine(0, 2),
            SemigroupElement::Affine(0, 3),
        ],
        Backend::FiniteTable(t) => (0..t.order())
            .filter(|&i| i != t.identity())
            .map(SemigroupElement::Table)
            .collect(),
    }
}

fn compositions(n: usize, budget: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for x in 0..=budget {
        prefix.push(x);
        compositions(n, budget - x, prefix, out);
        prefix.pop();
    }
}

/// An ordered, duplicate-free finite set of semigroup elements with an index map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    elements: Vec<SemigroupElement>,
    index: HashMap<SemigroupElement, usize>,
}

impl Window {
    pub fn new(elements: Vec<SemigroupElement>) -> Self {
        let mut index = HashMap::with_capacity(elements.len());
        for (i, x) in elements.iter().enumerate() {
            let prev = index.insert(x.clone(), i);
            assert!(prev.is_none(), "window element {x} repeats");
        }
        Window { elements, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SemigroupElement] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &SemigroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &SemigroupElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &SemigroupElement) -> bool {
        self.index.contains_key(x)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SemigroupElement> {
        self.elements.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> SemigroupElement {
        SemigroupElement::Vector(vec![n])
    }

    fn word(s: &str) -> SemigroupElement {
        SemigroupElement::Word(Word::parse(s, 26).unwrap())
    }

    #[test]
    fn multiply_examples() {
        let z = Semigroup::naturals();
        assert_eq!(z.multiply(&nat(2), &nat(3)).unwrap(), nat(5));
        let axb = Semigroup::ax_plus_b();
        let p = axb
            .multiply(&SemigroupElement::Affine(1, 2), &SemigroupElement::Affine(3, 4))
            .unwrap();
        assert_eq!(p, SemigroupElement::Affine(7, 8));
        let f = Semigroup::free_monoid(2);
        assert_eq!(f.multiply(&word("ab"), &word("ba")).unwrap(), word("abba"));
    }

    #[test]
    fn backend_mismatch_is_an_error() {
        let z = Semigroup::naturals();
        let err = z.multiply(&nat(1), &word("a")).unwrap_err();
        assert!(matches!(err, Error::BackendMismatch(_)));
        let f = Semigroup::free_monoid(2);
        assert!(f.multiply(&word("c"), &word("a")).is_err());
    }

    #[test]
    fn left_divide_examples() {
        let z = Semigroup::naturals();
        assert_eq!(z.left_divide(&nat(2), &nat(5)).unwrap(), Some(nat(3)));
        let f = Semigroup::free_monoid(2);
        assert_eq!(f.left_divide(&word("ab"), &word("ba")).unwrap(), None);
        let ns = Semigroup::numerical(&[2, 3]).unwrap();
        let n = SemigroupElement::Natural;
        assert_eq!(ns.left_divide(&n(2), &n(3)).unwrap(), None);
        assert_eq!(ns.left_divide(&n(2), &n(5)).unwrap(), Some(n(3)));
    }

    #[test]
    fn preceq_examples() {
        let z = Semigroup::naturals();
        assert!(z.preceq(&nat(5), &nat(4)).unwrap());
        assert!(!z.preceq(&nat(4), &nat(5)).unwrap());
        let c = Semigroup::positive_cone(2);
        let e1 = SemigroupElement::Vector(vec![1, 0]);
        let e2 = SemigroupElement::Vector(vec![0, 1]);
        assert!(!c.preceq(&e1, &e2).unwrap());
        assert!(!c.preceq(&e2, &e1).unwrap());
        for sg in [z, c, Semigroup::ax_plus_b(), Semigroup::free_monoid(3)] {
            for s in sg.enumerate_window(2) {
                assert!(sg.preceq(&s, &sg.identity()).unwrap());
            }
        }
    }

    #[test]
    fn embed_examples() {
        let z = Semigroup::naturals();
        assert_eq!(z.embed(&nat(3)).unwrap(), GroupElement::Lattice(vec![3]));
        let axb = Semigroup::ax_plus_b();
        assert_eq!(axb.embed(&SemigroupElement::Affine(1, 2)).unwrap().to_string(), "(1,2)");
        let f = Semigroup::free_monoid(2);
        assert_eq!(f.embed(&word("ab")).unwrap().to_string(), "ab");
    }

    #[test]
    fn window_examples() {
        let z = Semigroup::naturals();
        assert_eq!(z.enumerate_window(4), (0..=4).map(nat).collect::<Vec<_>>());
        let f = Semigroup::free_monoid(2);
        let got: Vec<String> = f.enumerate_window(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(got, ["1", "a", "b", "aa", "ab", "ba", "bb"]);
        let ns = Semigroup::numerical(&[2, 3]).unwrap();
        let got: Vec<String> = ns.enumerate_window(6).iter().map(|w| w.to_string()).collect();
        assert_eq!(got, ["0", "2", "3", "4", "5", "6"]);
    }

    #[test]
    fn windows_are_prefix_monotone() {
        let table = GroupTable::cyclic(4).rows().to_vec();
        for sg in [
            Semigroup::free_monoid(2),
            Semigroup::positive_cone(3),
            Semigroup::numerical(&[3, 5]).unwrap(),
            Semigroup::ax_plus_b(),
            Semigroup::finite_table(table, None).unwrap(),
        ] {
            for b in 0..4 {
                let small = sg.enumerate_window(b);
                let big = sg.enumerate_window(b + 1);
                assert_eq!(&big[..small.len()], &small[..], "{}", sg.name());
                let mut dedup = big.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), big.len());
            }
        }
    }

    #[test]
    fn window_of_size_truncates() {
        let sg = Semigroup::ax_plus_b();
        let w = sg.window_of_size(50);
        assert_eq!(w.len(), 50);
        assert_eq!(w.get(0), &SemigroupElement::Affine(0, 1));
        let g = Semigroup::finite_table(GroupTable::cyclic(3).rows().to_vec(), None).unwrap();
        assert_eq!(g.window_of_size(50).len(), 3);
    }

    #[test]
    fn parse_and_render() {
        let c = Semigroup::positive_cone(2);
        let x = c.parse_element("(1,2)").unwrap();
        assert_eq!(x.to_string(), "(1,2)");
        assert!(c.parse_element("(1,-2)").is_none());
        let ns = Semigroup::numerical(&[2, 3]).unwrap();
        assert!(ns.parse_element("1").is_none());
        let axb = Semigroup::ax_plus_b();
        assert!(axb.parse_element("(3,0)").is_none());
        assert_eq!(axb.parse_element("(3,-2)"), Some(SemigroupElement::Affine(3, -2)));
    }
}
