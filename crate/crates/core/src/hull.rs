//! The left inverse hull `I_l(S)`: partial bijections `x -> g·x` on a
//! constructible right ideal, generated by the left translations and their
//! inverses.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{GroupDescriptor, GroupElement, Rational};
use crate::ideal::{CliffordVerdict, RightIdeal};
use crate::semigroup::{Backend, Semigroup, SemigroupElement, Window};

/// `Zero`, or the partial bijection `x -> grade·x` on a nonempty `domain`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HullElement {
    Map { grade: GroupElement, domain: RightIdeal },
    Zero,
}

impl HullElement {
    pub fn is_zero(&self) -> bool {
        matches!(self, HullElement::Zero)
    }

    pub fn domain(&self) -> &RightIdeal {
        match self {
            HullElement::Map { domain, .. } => domain,
            HullElement::Zero => &RightIdeal::Empty,
        }
    }
}

/// Renders as `grade | domain`, or `0`.
impl fmt::Display for HullElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HullElement::Zero => write!(f, "0"),
            HullElement::Map { grade, domain } => write!(f, "{grade} | {domain}"),
        }
    }
}

/// The formal word `λ_{t1}* λ_{s1} ⋯ λ_{tn}* λ_{sn}`, stored as pairs `(t_i, s_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HullWord {
    pairs: Vec<(SemigroupElement, SemigroupElement)>,
}

impl HullWord {
    pub fn new(pairs: Vec<(SemigroupElement, SemigroupElement)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Domain("a hull word needs at least one pair".into()));
        }
        Ok(HullWord { pairs })
    }

    pub fn pairs(&self) -> &[(SemigroupElement, SemigroupElement)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `w` followed by `v`.
    pub fn concat(&self, v: &HullWord) -> HullWord {
        HullWord { pairs: self.pairs.iter().chain(&v.pairs).cloned().collect() }
    }

    /// The formal inverse `λ_{sn}* λ_{tn} ⋯ λ_{s1}* λ_{t1}`.
    pub fn star(&self) -> HullWord {
        HullWord { pairs: self.pairs.iter().rev().map(|(t, s)| (s.clone(), t.clone())).collect() }
    }
}

impl fmt::Display for HullWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.pairs.iter().map(|(t, s)| format!("{t}*,{s}")).join(",");
        write!(f, "({body})")
    }
}

/// The value of a partial map at one window point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapEntry {
    Undefined,
    /// An image (or intermediate image) left the window.
    Boundary,
    To(usize),
}

/// A partial map on window indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMap {
    entries: Vec<MapEntry>,
}

impl PartialMap {
    fn new(entries: Vec<MapEntry>) -> Self {
        let mut seen = BTreeSet::new();
        for e in &entries {
            if let MapEntry::To(j) = e {
                assert!(seen.insert(*j), "partial map is not injective at image {j}");
            }
        }
        PartialMap { entries }
    }

    pub fn entries(&self) -> &[MapEntry] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> MapEntry {
        self.entries[i]
    }

    /// `(i, j)` for every defined entry.
    pub fn defined(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().enumerate().filter_map(|(i, e)| match e {
            MapEntry::To(j) => Some((i, *j)),
            _ => None,
        })
    }

    /// Number of points where neither side is `Boundary`.
    pub fn comparable(&self, other: &PartialMap) -> usize {
        self.entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| **a != MapEntry::Boundary && **b != MapEntry::Boundary)
            .count()
    }

    /// First index where both sides are known and disagree.
    pub fn first_mismatch(&self, other: &PartialMap) -> Option<usize> {
        assert_eq!(self.entries.len(), other.entries.len(), "maps over different windows");
        self.entries.iter().zip(&other.entries).position(|(a, b)| {
            *a != MapEntry::Boundary && *b != MapEntry::Boundary && a != b
        })
    }

    pub fn agrees_with(&self, other: &PartialMap) -> bool {
        self.first_mismatch(other).is_none()
    }
}

/// Verdict of the sampled `E*`-unitarity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EStarReport {
    pub zero_present: bool,
    pub pairs_checked: usize,
    /// Pairs with `f e = e`, each of which forced `f` idempotent.
    pub premise_hits: usize,
}

impl fmt::Display for EStarReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strongly E*-unitary by grading")?;
        if !self.zero_present {
            write!(f, "; E-unitary (no Zero present)")?;
        }
        write!(f, "; {} pairs sampled, {} with fe = e, 0 counterexamples", self.pairs_checked, self.premise_hits)
    }
}

/// The hull of a fixed semigroup.
pub struct InverseHull<'a> {
    sg: &'a Semigroup,
    group: GroupDescriptor,
}

impl<'a> InverseHull<'a> {
    pub fn new(sg: &'a Semigroup) -> Self {
        InverseHull { sg, group: sg.grading_group() }
    }

    pub fn semigroup(&self) -> &'a Semigroup {
        self.sg
    }

    pub fn grading_group(&self) -> &GroupDescriptor {
        &self.group
    }

    pub fn identity(&self) -> HullElement {
        HullElement::Map { grade: self.group.identity(), domain: RightIdeal::Full }
    }

    fn check(&self, f: &HullElement) -> Result<()> {
        if let HullElement::Map { grade, domain } = f {
            if !self.group.contains(grade) {
                return Err(Error::BackendMismatch(format!("{grade} is not in {}", self.group)));
            }
            self.sg.check_ideal(domain)?;
            if domain.is_empty() {
                return Err(Error::Domain("hull element with empty domain".into()));
            }
        }
        Ok(())
    }

    /// `λ_s = (s, S)`.
    pub fn lambda(&self, s: &SemigroupElement) -> Result<HullElement> {
        Ok(HullElement::Map { grade: self.sg.embed(s)?, domain: RightIdeal::Full })
    }

    pub(crate) fn lam(&self, s: &SemigroupElement) -> HullElement {
        HullElement::Map { grade: self.sg.emb(s), domain: RightIdeal::Full }
    }

    /// `f ∘ h`: apply `h`, then `f`.
    pub fn compose(&self, f: &HullElement, h: &HullElement) -> Result<HullElement> {
        self.check(f)?;
        self.check(h)?;
        Ok(self.comp(f, h))
    }

    pub(crate) fn comp(&self, f: &HullElement, h: &HullElement) -> HullElement {
        match (f, h) {
            (
                HullElement::Map { grade: gf, domain: xf },
                HullElement::Map { grade: gh, domain: xh },
            ) => {
                let pulled = self.sg.shift(&self.group.inv(gh), xf);
                let domain = self.sg.meet(xh, &pulled);
                if domain.is_empty() {
                    HullElement::Zero
                } else {
                    HullElement::Map { grade: self.group.mul(gf, gh), domain }
                }
            }
            _ => HullElement::Zero,
        }
    }

    /// `(g, X)* = (g^-1, gX)`.
    pub fn star(&self, f: &HullElement) -> HullElement {
        match f {
            HullElement::Zero => HullElement::Zero,
            HullElement::Map { grade, domain } => HullElement::Map {
                grade: self.group.inv(grade),
                domain: self.sg.shift(grade, domain),
            },
        }
    }

    pub fn evaluate_word(&self, w: &HullWord) -> Result<HullElement> {
        for (t, s) in &w.pairs {
            self.sg.check(t)?;
            self.sg.check(s)?;
        }
        Ok(self.eval(w))
    }

    pub(crate) fn eval(&self, w: &HullWord) -> HullElement {
        w.pairs.iter().fold(self.identity(), |acc, (t, s)| {
            let pair = self.comp(&self.star(&self.lam(t)), &self.lam(s));
            self.comp(&acc, &pair)
        })
    }

    pub fn is_idempotent(&self, f: &HullElement) -> bool {
        match f {
            HullElement::Zero => true,
            HullElement::Map { grade, .. } => self.group.is_identity(grade),
        }
    }

    /// The grade `φ(f)`.
    pub fn grading(&self, f: &HullElement) -> Result<GroupElement> {
        match f {
            HullElement::Zero => Err(Error::Domain("the zero element has no grade".into())),
            HullElement::Map { grade, .. } => Ok(grade.clone()),
        }
    }

    /// `f(x)`, or `None` off the domain.
    pub fn apply(&self, f: &HullElement, x: &SemigroupElement) -> Option<SemigroupElement> {
        match f {
            HullElement::Map { grade, domain } if self.sg.member(x, domain) => {
                let y = self.group.mul(grade, &self.sg.emb(x));
                Some(self.sg.to_semigroup(&y).unwrap_or_else(|| {
                    panic!("{f} maps {x} outside the semigroup")
                }))
            }
            _ => None,
        }
    }

    /// Pointwise action of `f` on the window.
    pub fn materialize(&self, f: &HullElement, window: &Window) -> PartialMap {
        PartialMap::new(
            window
                .iter()
                .map(|x| match self.apply(f, x) {
                    None => MapEntry::Undefined,
                    Some(y) => window.index_of(&y).map_or(MapEntry::Boundary, MapEntry::To),
                })
                .collect(),
        )
    }

    /// Pointwise action of the word, using only multiplication and left
    /// division in `S`; every intermediate image must stay in the window.
    pub fn materialize_word(&self, w: &HullWord, window: &Window) -> PartialMap {
        let entries = window
            .iter()
            .map(|x| {
                let mut y = x.clone();
                for (t, s) in w.pairs.iter().rev() {
                    y = self.sg.mul(s, &y);
                    if !window.contains(&y) {
                        return MapEntry::Boundary;
                    }
                    match self.sg.ldiv(t, &y) {
                        Some(z) => y = z,
                        None => return MapEntry::Undefined,
                    }
                    if !window.contains(&y) {
                        return MapEntry::Boundary;
                    }
                }
                MapEntry::To(window.index_of(&y).unwrap())
            })
            .collect();
        PartialMap::new(entries)
    }

    /// A word with `1..=max_pairs` pairs drawn uniformly from `pool`.
    pub fn random_word<R: Rng>(&self, rng: &mut R, pool: &[SemigroupElement], max_pairs: usize) -> HullWord {
        let n = rng.gen_range(1..=max_pairs.max(1));
        let mut pick = || pool[rng.gen_range(0..pool.len())].clone();
        HullWord { pairs: (0..n).map(|_| (pick(), pick())).collect() }
    }

    /// The declared generators together with `1`, in enumeration order.
    pub fn letter_pool(&self) -> Vec<SemigroupElement> {
        let mut pool: Vec<SemigroupElement> =
            std::iter::once(self.sg.identity()).chain(self.sg.generators().iter().cloned()).collect();
        pool.sort();
        pool.dedup();
        pool
    }

    /// Samples pairs `(f, e)` with `e` a nonzero idempotent and checks that
    /// `fe = e` forces `f` idempotent, both in the algebra and pointwise.
    pub fn estar_unitary_report<R: Rng>(
        &self,
        sample: usize,
        rng: &mut R,
        window: &Window,
    ) -> Result<EStarReport> {
        let pool = self.letter_pool();
        let mut hits = 0;
        let mut checked = 0;
        while checked < sample {
            let wf = self.random_word(rng, &pool, 3);
            let wg = self.random_word(rng, &pool, 3);
            let g = self.eval(&wg);
            if g.is_zero() {
                continue;
            }
            let we = wg.concat(&wg.star());
            let e = self.eval(&we);
            let f = self.eval(&wf);
            checked += 1;
            if !self.is_idempotent(&e) || e.is_zero() {
                return Err(Error::Invariant(format!("{we} evaluates to {e}, not a nonzero idempotent")));
            }
            let fe = self.comp(&f, &e);
            let oracle = self.materialize_word(&wf.concat(&we), window);
            if let Some(i) = self.materialize(&fe, window).first_mismatch(&oracle) {
                return Err(Error::Invariant(format!(
                    "{wf} · {we} disagrees with its pointwise action at {}",
                    window.get(i)
                )));
            }
            if fe == e {
                hits += 1;
                if !self.is_idempotent(&f) {
                    return Err(Error::Invariant(format!(
                        "fe = e with e = {e} but f = {f} is not idempotent"
                    )));
                }
                let moved = self.materialize_word(&wf, window).defined().find(|(i, j)| i != j);
                if let Some((i, j)) = moved {
                    return Err(Error::Invariant(format!(
                        "{wf} is idempotent but moves {} to {}",
                        window.get(i),
                        window.get(j)
                    )));
                }
            }
        }
        Ok(EStarReport { zero_present: !self.sg.is_left_reversible().is_yes(), pairs_checked: checked, premise_hits: hits })
    }

    /// `(p, q)` with `f = λ_p λ_q*`, for backends satisfying Clifford's condition.
    pub fn clifford_normal_form(&self, f: &HullElement, window: &Window) -> Result<(SemigroupElement, SemigroupElement)> {
        self.check(f)?;
        let HullElement::Map { domain, .. } = f else {
            return Err(Error::Domain("the zero element has no normal form".into()));
        };
        let verdict = self.sg.clifford_check(clifford_window(self.sg));
        if !verdict.holds() {
            return Err(Error::Unsupported {
                backend: self.sg.name(),
                reason: format!("Clifford's condition {verdict}"),
            });
        }
        // dom f = qS and f(q) = p
        let q = self
            .sg
            .principal_generator(domain)
            .ok_or_else(|| Error::Invariant(format!("{domain} is not principal")))?;
        let p = self.apply(f, &q).expect("generator lies in its ideal");
        let rebuilt = self.comp(&self.lam(&p), &self.star(&self.lam(&q)));
        if rebuilt != *f {
            return Err(Error::Invariant(format!("λ_{p} λ_{q}* = {rebuilt}, expected {f}")));
        }
        let word = HullWord { pairs: vec![(self.sg.identity(), p.clone()), (q.clone(), self.sg.identity())] };
        if let Some(i) = self.materialize(f, window).first_mismatch(&self.materialize_word(&word, window)) {
            return Err(Error::Invariant(format!(
                "λ_{p} λ_{q}* and {f} differ at {}",
                window.get(i)
            )));
        }
        Ok((p, q))
    }

    /// All values of words with at most `length` pairs over the letter pool,
    /// in canonical order.
    pub fn enumerate_hull(&self, length: usize) -> Vec<HullElement> {
        self.enumerate_hull_words(length).into_iter().map(|(f, _)| f).collect()
    }

    /// [`InverseHull::enumerate_hull`] with a shortest word for each element.
    pub fn enumerate_hull_words(&self, length: usize) -> Vec<(HullElement, HullWord)> {
        let pool = self.letter_pool();
        let mut pairs: BTreeMap<HullElement, (SemigroupElement, SemigroupElement)> = BTreeMap::new();
        for (t, s) in pool.iter().cartesian_product(&pool) {
            let p = self.comp(&self.star(&self.lam(t)), &self.lam(s));
            pairs.entry(p).or_insert_with(|| (t.clone(), s.clone()));
        }
        let one = self.sg.identity();
        let mut all: BTreeMap<HullElement, HullWord> =
            BTreeMap::from([(self.identity(), HullWord { pairs: vec![(one.clone(), one)] })]);
        let mut frontier: Vec<HullElement> = vec![self.identity()];
        for _ in 0..length {
            let mut next: BTreeMap<HullElement, HullWord> = BTreeMap::new();
            for f in &frontier {
                for (p, letter) in &pairs {
                    let fp = self.comp(f, p);
                    if !all.contains_key(&fp) && !next.contains_key(&fp) {
                        let mut w = all[f].clone();
                        if *f == self.identity() {
                            w.pairs.clear();
                        }
                        w.pairs.push(letter.clone());
                        next.insert(fp, w);
                    }
                }
            }
            frontier = next.keys().cloned().collect();
            all.extend(next);
        }
        all.into_iter().collect()
    }

    /// Groups a formal sum by grade; coefficients are left untouched.
    pub fn fell_grade_decompose(
        &self,
        terms: &[(Rational, HullElement)],
    ) -> Result<BTreeMap<GroupElement, Vec<(Rational, HullElement)>>> {
        let mut out: BTreeMap<GroupElement, Vec<(Rational, HullElement)>> = BTreeMap::new();
        for (c, f) in terms {
            self.check(f)?;
            out.entry(self.grading(f)?).or_default().push((*c, f.clone()));
        }
        Ok(out)
    }

    /// Checks `f λ_s = λ_{f(s)}` in the algebra and on the window.
    pub fn check_lift_relation(&self, f: &HullElement, s: &SemigroupElement, window: &Window) -> Result<bool> {
        self.check(f)?;
        self.sg.check(s)?;
        let fs = self
            .apply(f, s)
            .ok_or_else(|| Error::Precondition(format!("{s} is not in the domain of {f}")))?;
        let lhs = self.comp(f, &self.lam(s));
        let rhs = self.lam(&fs);
        let pointwise = window.iter().all(|x| {
            let left = self.apply(f, &self.sg.mul(s, x));
            left == Some(self.sg.mul(&fs, x))
        });
        Ok(lhs == rhs && pointwise && self.materialize(&lhs, window) == self.materialize(&rhs, window))
    }
}

/// Window used when a numerical Clifford verdict is needed internally.
pub(crate) fn clifford_window(sg: &Semigroup) -> u64 {
    match sg.backend() {
        Backend::Numerical(ns) => 2 * ns.conductor() + 2 * ns.minimal_generators().last().copied().unwrap_or(0),
        _ => 0,
    }
}

impl CliffordVerdict {
    /// Short machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            CliffordVerdict::Holds(_) => "holds",
            CliffordVerdict::Fails { .. } => "fails",
            CliffordVerdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn nat(n: u64) -> SemigroupElement {
        SemigroupElement::Vector(vec![n])
    }

    #[test]
    fn compose_examples() {
        let z = Semigroup::naturals();
        let h = InverseHull::new(&z);
        let one = h.lambda(&nat(1)).unwrap();
        assert_eq!(h.compose(&h.star(&one), &one).unwrap(), h.identity());
        let f = h.compose(&h.lambda(&nat(2)).unwrap(), &h.star(&one)).unwrap();
        assert_eq!(
            f,
            HullElement::Map { grade: GroupElement::Lattice(vec![1]), domain: RightIdeal::Corner(vec![1]) }
        );
        assert_eq!(
            h.star(&h.lambda(&nat(2)).unwrap()),
            HullElement::Map { grade: GroupElement::Lattice(vec![-2]), domain: RightIdeal::Corner(vec![2]) }
        );

        let fm = Semigroup::free_monoid(2);
        let h = InverseHull::new(&fm);
        let a = h.lambda(&SemigroupElement::Word(Word::letter(0))).unwrap();
        let b = h.lambda(&SemigroupElement::Word(Word::letter(1))).unwrap();
        assert_eq!(h.compose(&h.star(&a), &b).unwrap(), HullElement::Zero);
    }

    #[test]
    fn word_examples() {
        let z = Semigroup::naturals();
        let h = InverseHull::new(&z);
        let w = HullWord::new(vec![(nat(1), nat(2))]).unwrap();
        let f = h.evaluate_word(&w).unwrap();
        assert_eq!(f, HullElement::Map { grade: GroupElement::Lattice(vec![1]), domain: RightIdeal::Full });

        let ns = Semigroup::numerical(&[2, 3]).unwrap();
        let h = InverseHull::new(&ns);
        let w = HullWord::new(vec![(SemigroupElement::Natural(2), SemigroupElement::Natural(3))]).unwrap();
        let f = h.evaluate_word(&w).unwrap();
        assert_eq!(h.grading(&f).unwrap(), GroupElement::Integer(1));
        let window = Window::new(ns.enumerate_window(30));
        assert!(h.materialize(&f, &window).agrees_with(&h.materialize_word(&w, &window)));
        let small = Window::new(ns.enumerate_window(12));
        let m = h.materialize_word(&w, &small);
        let at = |x: u64| m.get(small.index_of(&SemigroupElement::Natural(x)).unwrap());
        let idx = |x: u64| MapEntry::To(small.index_of(&SemigroupElement::Natural(x)).unwrap());
        assert_eq!(at(2), idx(3));
        assert_eq!(at(4), idx(5));
        assert_eq!(at(5), idx(6));
        assert_eq!(at(0), MapEntry::Undefined);
    }

    #[test]
    fn enumerate_examples() {
        let z = Semigroup::naturals();
        let h = InverseHull::new(&z);
        let els = h.enumerate_hull(1);
        assert_eq!(els.len(), 3);
        let window = Window::new(z.enumerate_window(10));
        for (f, w) in h.enumerate_hull_words(3) {
            assert_eq!(h.evaluate_word(&w).unwrap(), f);
            assert!(w.len() <= 3);
            assert!(h.materialize(&f, &window).agrees_with(&h.materialize_word(&w, &window)));
        }
        assert!(els.contains(&h.identity()));
        assert!(els.contains(&h.star(&h.lambda(&nat(1)).unwrap())));

        let fm = Semigroup::free_monoid(2);
        assert!(InverseHull::new(&fm).enumerate_hull(1).contains(&HullElement::Zero));

        let ns = Semigroup::numerical(&[2, 3]).unwrap();
        let h = InverseHull::new(&ns);
        assert!(h.enumerate_hull(2).iter().any(|f| {
            h.grading(f).ok() == Some(GroupElement::Integer(1)) && ns.principal_generator(f.domain()).is_none()
        }));
    }

    #[test]
    fn normal_form_examples() {
        let c = Semigroup::positive_cone(2);
        let h = InverseHull::new(&c);
        let window = Window::new(c.enumerate_window(6));
        let e1 = SemigroupElement::Vector(vec![1, 0]);
        let e2 = SemigroupElement::Vector(vec![0, 1]);
        let f = h.comp(&h.star(&h.lam(&e1)), &h.lam(&e2));
        assert_eq!(h.clifford_normal_form(&f, &window).unwrap(), (e2.clone(), e1));
        assert_eq!(h.clifford_normal_form(&h.identity(), &window).unwrap(), (c.identity(), c.identity()));
        assert_eq!(h.clifford_normal_form(&h.lam(&e2), &window).unwrap(), (e2, c.identity()));

        let ns = Semigroup::numerical(&[2, 3]).unwrap();
        let h = InverseHull::new(&ns);
        let window = Window::new(ns.enumerate_window(10));
        assert!(matches!(
            h.clifford_normal_form(&h.identity(), &window),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn grade_decomposition() {
        let z = Semigroup::naturals();
        let h = InverseHull::new(&z);
        let one = Rational::from_integer(1);
        let terms = vec![
            (one, h.lam(&nat(1))),
            (one, h.comp(&h.lam(&nat(2)), &h.star(&h.lam(&nat(1))))),
        ];
        let parts = h.fell_grade_decompose(&terms).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&GroupElement::Lattice(vec![1])].len(), 2);
        assert!(h.fell_grade_decompose(&[(one, HullElement::Zero)]).is_err());
    }

    #[test]
    fn lift_relation() {
        let z = Semigroup::naturals();
        let h = InverseHull::new(&z);
        let window = Window::new(z.enumerate_window(10));
        let f = h.star(&h.lam(&nat(1)));
        assert!(h.check_lift_relation(&f, &nat(3), &window).unwrap());
        assert!(matches!(h.check_lift_relation(&f, &nat(0), &window), Err(Error::Precondition(_))));
    }
}
